//! Independent oracles: Hom spaces from the full intertwining system and by
//! exhaustive enumeration, compared against the presentation-based solver.

use stw_core::catalog::{catalog_by_name, string_module, StringWord};
use stw_core::exactla::Mat;
use stw_core::module::{hom_space, Module};
use stw_core::stable::{cosyzygy, syzygy};
use stw_core::twist::TwistContext;

/// `dim {f : ρ_M(b) f = f ρ_N(b) for every basis element b}`, with `f`
/// flattened row-major as the unknown row vector.
fn naive_hom_dim(m: &Module, n: &Module) -> usize {
    let (dm, dn) = (m.dim(), n.dim());
    let f = m.algebra().field();
    let d = m.algebra().dim();
    let mut eqs = Mat::zeros(f, dm * dn, d * dm * dn);
    for i in 0..d {
        let (rm, rn) = (m.action(i), n.action(i));
        for a in 0..dm {
            for c in 0..dn {
                let col = (i * dm + a) * dn + c;
                for b in 0..dm {
                    let v = rm.get(a, b);
                    if v != 0 {
                        let old = eqs.get(b * dn + c, col);
                        eqs.set(b * dn + c, col, f.add(old, v));
                    }
                }
                for b in 0..dn {
                    let v = rn.get(b, c);
                    if v != 0 {
                        let old = eqs.get(a * dn + b, col);
                        eqs.set(a * dn + b, col, f.sub(old, v));
                    }
                }
            }
        }
    }
    eqs.kernel_basis().len()
}

/// Count intertwiners over GF(2) by running through every matrix.
fn brute_force_hom_count(m: &Module, n: &Module) -> usize {
    let (dm, dn) = (m.dim(), n.dim());
    let f = m.algebra().field();
    assert_eq!(f.p(), 2);
    let cells = dm * dn;
    assert!(cells <= 20);
    let gens: Vec<usize> = m.algebra().generators().to_vec();
    (0u32..1 << cells)
        .filter(|bits| {
            let mat = Mat::from_fn(f, dm, dn, |r, c| (bits >> (r * dn + c)) & 1);
            gens.iter().all(|&g| m.action(g).mul(&mat) == mat.mul(n.action(g)))
        })
        .count()
}

fn zoo(name: &str) -> Vec<Module> {
    let c = catalog_by_name(name).unwrap();
    let a = &c.algebra;
    let x = c.element("x").unwrap();
    let ctx = TwistContext::new(a.clone(), &x, None, 0).unwrap();
    let k = Module::simple(a.clone());
    let reg = Module::regular(a.clone());
    let rad = reg.submodule(&reg.radical());
    vec![k.clone(), ctx.t().clone(), syzygy(&k), cosyzygy(&k), rad, ctx.spherical_twist(&k).unwrap()]
}

#[test]
fn presentation_solver_matches_full_system() {
    for name in ["dihedral:q=2:p=2", "dihedral:q=2:p=3", "semidihedral:q=2:p=3:delta=1", "klein:p=5"] {
        let mods = zoo(name);
        for (i, m) in mods.iter().enumerate() {
            for (j, n) in mods.iter().enumerate() {
                let fast = hom_space(m, n).unwrap();
                assert_eq!(fast.dim(), naive_hom_dim(m, n), "{name}: pair ({i}, {j})");
                assert!(fast.homs().iter().all(|h| h.intertwines()));
            }
        }
    }
}

#[test]
fn hom_counts_match_enumeration() {
    let c = catalog_by_name("dihedral:q=2:p=2").unwrap();
    let a = &c.algebra;
    let ctx = TwistContext::new(a.clone(), &c.element("x").unwrap(), None, 0).unwrap();
    let k = Module::simple(a.clone());
    let xy: StringWord = "xY".parse().unwrap();
    let s = string_module(a, &xy).unwrap();
    let mods = [k, ctx.t().clone(), s];
    for m in &mods {
        for n in &mods {
            if m.dim() * n.dim() > 16 {
                continue;
            }
            let dim = hom_space(m, n).unwrap().dim();
            assert_eq!(1usize << dim, brute_force_hom_count(m, n), "dims {} -> {}", m.dim(), n.dim());
        }
    }
}

#[test]
fn hom_from_regular_is_the_target_on_the_catalog() {
    for name in ["dihedral:q=3:p=2", "semidihedral:q=2:p=2:delta=0", "klein:p=3", "extraspecial:p=3"] {
        let c = catalog_by_name(name).unwrap();
        let reg = Module::regular(c.algebra.clone());
        let k = Module::simple(c.algebra.clone());
        for m in [k.clone(), syzygy(&k), cosyzygy(&k)] {
            assert_eq!(hom_space(&reg, &m).unwrap().dim(), m.dim(), "{name}");
        }
    }
}
