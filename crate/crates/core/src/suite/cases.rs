use std::sync::Arc;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::sample::{random_module, relatively_projective_module};
use super::{Case, Level, Outcome};
use crate::algebra::{find_symmetric_form, Algebra};
use crate::catalog::{catalog_by_name, string_module, CatalogAlgebra, StringWord};
use crate::error::Result;
use crate::module::{IsoOptions, Module};
use crate::stable::{grothendieck_class, is_stably_isomorphic, omega_power, stable_hom, syzygy};
use crate::twist::TwistContext;

fn case(id: String, criterion: u8, run: impl Fn(u64, &mut Outcome) -> Result<()> + Send + Sync + 'static) -> Case {
    tolerant_case(id, criterion, false, run)
}

fn tolerant_case(
    id: String,
    criterion: u8,
    tolerant: bool,
    run: impl Fn(u64, &mut Outcome) -> Result<()> + Send + Sync + 'static,
) -> Case {
    Case {
        id,
        criterion,
        tolerant,
        run: Box::new(move |seed| {
            let mut out = Outcome::new();
            if let Err(e) = run(seed, &mut out) {
                out.error(e);
            }
            out
        }),
    }
}

fn context(name: &str, x: &str, y: Option<&str>, seed: u64) -> Result<(CatalogAlgebra, TwistContext)> {
    let c = catalog_by_name(name)?;
    let xv = c.element(x)?;
    let yv = y.map(|n| c.element(n)).transpose()?;
    let ctx = TwistContext::new(c.algebra.clone(), &xv, yv.as_deref(), seed)?;
    Ok((c, ctx))
}

fn iso(seed: u64) -> IsoOptions {
    IsoOptions::with_seed(seed)
}

fn simple(a: &Arc<Algebra>) -> Module {
    Module::simple(a.clone())
}

fn catalog_names(level: Level) -> Vec<String> {
    let mut names = Vec::new();
    for q in [2, 3] {
        for p in [2, 3, 5] {
            names.push(format!("dihedral:q={q}:p={p}"));
        }
    }
    for q in [2, 3] {
        for p in [2, 3] {
            for delta in [0, 1] {
                names.push(format!("semidihedral:q={q}:p={p}:delta={delta}"));
            }
        }
    }
    for p in [2, 3, 5] {
        names.push(format!("klein:p={p}"));
    }
    names.push("extraspecial:p=3".into());
    if level == Level::Full {
        names.push("dihedral:q=4:p=2".into());
        names.push("semidihedral:q=4:p=2:delta=1".into());
        names.push("extraspecial:p=5".into());
    }
    names
}

/// Criterion 1: every catalog algebra validates and carries a symmetric form.
fn catalog_cases(level: Level, cases: &mut Vec<Case>) {
    for name in catalog_names(level) {
        cases.push(case(format!("catalog:{name}"), 1, move |seed, out| {
            let c = catalog_by_name(&name)?;
            let a = &c.algebra;
            let expected = if name.starts_with("klein") {
                4
            } else if name.starts_with("extraspecial") {
                let p: usize = name.rsplit('=').next().unwrap().parse().unwrap();
                p * p * p
            } else {
                let q: usize = name.split(":q=").nth(1).unwrap().split(':').next().unwrap().parse().unwrap();
                4 * q
            };
            out.expect_eq("dim", a.dim(), expected);
            out.detail("loewy_length", a.loewy_length());
            let form = find_symmetric_form(a, seed)?;
            out.check(form.is_symmetric(a), || "symmetric form is not symmetric".into());
            out.check(form.gram(a).is_invertible(), || "symmetric form is degenerate".into());
            out.expect_eq("opposite_involution", *a.opposite().opposite() == **a, true);
            Ok(())
        }));
    }
}

fn restriction_targets(level: Level) -> Vec<(String, String, usize, usize)> {
    let mut out = Vec::new();
    for q in [2usize, 3] {
        for p in [2, 3] {
            out.push((format!("dihedral:q={q}:p={p}"), "x".to_string(), 2, q - 1));
            out.push((format!("semidihedral:q={q}:p={p}:delta=1"), "x".to_string(), 2, q - 1));
        }
    }
    for p in [2, 3, 5] {
        out.push((format!("klein:p={p}"), "x".to_string(), 2, 0));
    }
    let xs: &[&str] = if level == Level::Full { &["x1", "x2", "x3", "x4"] } else { &["x1", "x3", "x4"] };
    for x in xs {
        out.push(("extraspecial:p=3".into(), x.to_string(), 3, 2));
    }
    out
}

/// Criterion 2: `T` restricted to `R` is `k^(n+1) + R^l`.
fn restriction_cases(level: Level, cases: &mut Vec<Case>) {
    for (name, x, k_count, free_count) in restriction_targets(level) {
        cases.push(case(format!("restriction:{name}:{x}"), 2, move |seed, out| {
            let (_, ctx) = context(&name, &x, None, seed)?;
            let r = ctx.restriction_report(ctx.t())?;
            out.detail("t_dim", r.dim);
            out.detail("blocks", &r.jordan.block_sizes);
            out.detail("decomposition", r.to_string());
            out.expect_eq("k_count", r.k_count, k_count);
            out.expect_eq("free_count", r.free_count, free_count);
            out.expect_eq("intermediate_sizes", r.intermediate_sizes.clone(), Vec::new());
            if name.starts_with("extraspecial") {
                out.detail("expected_form", "k^p + R^(p-1), forced by dim T = p^2");
            }
            Ok(())
        }));
    }
}

/// Criterion 3: `Ω T ≅ T` when `m = 2`, `Ω^2 T ≅ T` for the extraspecial group.
fn periodicity_cases(level: Level, cases: &mut Vec<Case>) {
    for (name, x, _, _) in restriction_targets(level) {
        cases.push(case(format!("periodicity:{name}:{x}"), 3, move |seed, out| {
            let (_, ctx) = context(&name, &x, None, seed)?;
            let t = ctx.t();
            let m = ctx.subalgebra().m;
            let period = if m == 2 { 1 } else { 2 };
            out.detail("m", m);
            out.detail("period", period);
            let shifted = omega_power(t, period);
            out.detail("shifted_dim", shifted.dim());
            out.expect_iso("omega_period_t_vs_t", &is_stably_isomorphic(&shifted, t, &iso(seed))?, true);
            Ok(())
        }));
    }
}

/// Criterion 4: the spherical twist of `k` over dihedral algebras.
fn dihedral_cases(level: Level, cases: &mut Vec<Case>) {
    let qs: &[usize] = if level == Level::Full { &[2, 3, 4] } else { &[2, 3] };
    for &q in qs {
        let name = format!("dihedral:q={q}:p=2");
        cases.push(case(format!("spherical:{name}"), 4, move |seed, out| {
            let (c, ctx) = context(&name, "x", None, seed)?;
            let a = &c.algebra;
            let k = simple(a);
            let tk = ctx.spherical_twist(&k)?;
            let tk2 = ctx.spherical_twist(&tk)?;
            let d = a.dim();
            let m = ctx.subalgebra().m;
            out.expect_eq("tau_k_dim", tk.dim(), 2 * q + 1);
            out.expect_eq("tau_k_class", grothendieck_class(&tk).value, ((m - 1) * d / m + 1) % d);
            let word = StringWord::twisted_simple(q);
            let s = string_module(a, &word)?;
            out.detail("string_word", word.to_string());
            out.expect_iso("tau_k_vs_string", &is_stably_isomorphic(&tk, &s, &iso(seed))?, true);
            out.expect_eq("tau_k_stable_end", stable_hom(&tk, &tk)?.stable_dim(), 1);
            out.expect_eq("tau2_k_stable_end", stable_hom(&tk2, &tk2)?.stable_dim(), 1);
            let o2 = omega_power(&k, -2);
            out.detail("tau2_k_dim", tk2.dim());
            out.detail("omega_minus2_k_dim", o2.dim());
            out.expect_iso("tau2_k_vs_omega_minus2_k", &is_stably_isomorphic(&tk2, &o2, &iso(seed))?, false);
            Ok(())
        }));
    }
}

/// Criterion 5: `τ^2(k) ≅ Ω^-4(k)` over semidihedral algebras.
fn semidihedral_cases(level: Level, cases: &mut Vec<Case>) {
    let qs: &[usize] = if level == Level::Full { &[2, 3, 4] } else { &[2, 3] };
    for &q in qs {
        let name = format!("semidihedral:q={q}:p=2:delta=1");
        cases.push(case(format!("spherical:{name}"), 5, move |seed, out| {
            let (c, ctx) = context(&name, "x", None, seed)?;
            let k = simple(&c.algebra);
            let tk2 = ctx.spherical_twist_power(&k, 2)?;
            let o4 = omega_power(&k, -4);
            out.detail("tau2_k_dim", tk2.dim());
            out.detail("omega_minus4_k_dim", o4.dim());
            out.expect_iso("tau2_k_vs_omega_minus4_k", &is_stably_isomorphic(&tk2, &o4, &iso(seed))?, true);
            Ok(())
        }));
    }
}

/// Criterion 6: `ρ(k) ≅ τ^2(k) ≅ Ω^-2(k)` over `k[x,y]/(x^2,y^2)`.
fn klein_cases(_level: Level, cases: &mut Vec<Case>) {
    for p in [2, 3, 5] {
        let name = format!("klein:p={p}");
        cases.push(case(format!("pn:{name}"), 6, move |seed, out| {
            let (c, ctx) = context(&name, "x", Some("y"), seed)?;
            let k = simple(&c.algebra);
            let rk = ctx.pn_twist(&k)?;
            let tk2 = ctx.spherical_twist_power(&k, 2)?;
            let o2 = omega_power(&k, -2);
            out.detail("rho_k_dim", rk.dim());
            out.detail("tau2_k_dim", tk2.dim());
            out.expect_iso("rho_k_vs_tau2_k", &is_stably_isomorphic(&rk, &tk2, &iso(seed))?, true);
            out.expect_iso("rho_k_vs_omega_minus2_k", &is_stably_isomorphic(&rk, &o2, &iso(seed))?, true);
            out.expect_iso("tau2_k_vs_omega_minus2_k", &is_stably_isomorphic(&tk2, &o2, &iso(seed))?, true);
            Ok(())
        }));
    }
}

const EXTRA: &str = "extraspecial:p=3";

/// Criterion 7: the `P^2` twist over the extraspecial group algebra of order 27.
fn extraspecial_cases(level: Level, cases: &mut Vec<Case>) {
    let xs: &[&str] = if level == Level::Full { &["x1", "x2", "x3", "x4"] } else { &["x1", "x3", "x4"] };
    for &x in xs {
        cases.push(case(format!("pn:{EXTRA}:endo:{x}"), 7, move |seed, out| {
            let (_, ctx) = context(EXTRA, x, Some("y"), seed)?;
            let r = ctx.hypothesis_report();
            out.expect_eq("endo_n", r.endo_n, Some(2));
            out.expect_eq("psi_is_left_mult_by_y", r.psi_is_left_mult_by_y, true);
            out.expect_eq("omega_t_to_t_stable_dim", r.omega_t_to_t_stable_dim, 3);
            out.expect_eq("pn_ready", r.pn_ready, true);
            Ok(())
        }));
    }
    cases.push(case(format!("pn:{EXTRA}:rho_k_endotrivial"), 7, |seed, out| {
        let (c, ctx) = context(EXTRA, "x3", Some("y"), seed)?;
        let rk = ctx.pn_twist(&simple(&c.algebra))?;
        out.detail("rho_k_dim", rk.dim());
        out.expect_eq("rho_k_stable_end", stable_hom(&rk, &rk)?.stable_dim(), 1);
        Ok(())
    }));
    for j in -4..=4 {
        cases.push(tolerant_case(format!("pn:{EXTRA}:rho_k_vs_omega:{j}"), 7, level == Level::Full, move |seed, out| {
            let (c, ctx) = context(EXTRA, "x3", Some("y"), seed)?;
            let k = simple(&c.algebra);
            let rk = ctx.pn_twist(&k)?;
            let oj = omega_power(&k, j);
            out.detail("rho_k_dim", rk.dim());
            out.detail("omega_k_dim", oj.dim());
            out.expect_iso("rho_k_vs_omega_j_k", &is_stably_isomorphic(&rk, &oj, &iso(seed))?, false);
            Ok(())
        }));
    }
    cases.push(case(format!("pn:{EXTRA}:rho_t"), 7, |seed, out| {
        let (_, ctx) = context(EXTRA, "x3", Some("y"), seed)?;
        let t = ctx.t();
        let rt = ctx.pn_twist(t)?;
        out.detail("rho_t_dim", rt.dim());
        out.expect_iso("rho_t_vs_omega_minus2_t", &is_stably_isomorphic(&rt, &omega_power(t, -2), &iso(seed))?, true);
        Ok(())
    }));
    cases.push(case(format!("pn:{EXTRA}:rho_fixes_relatively_free"), 7, |seed, out| {
        let (c, ctx) = context(EXTRA, "x3", Some("y"), seed)?;
        let a = &c.algebra;
        let reg = Module::regular(a.clone());
        let (x, _) = reg.quotient(&a.left_mult_by(&c.element("x4")?).row_space());
        let r = ctx.restriction_report(&x)?;
        out.detail("x_dim", x.dim());
        out.expect_eq("x_relatively_projective", r.relatively_projective, true);
        let rx = ctx.pn_twist(&x)?;
        out.detail("rho_x_dim", rx.dim());
        out.expect_iso("rho_x_vs_x", &is_stably_isomorphic(&rx, &x, &iso(seed))?, true);
        Ok(())
    }));
    cases.push(case(format!("pn:{EXTRA}:relative_syzygies"), 7, |seed, out| {
        let (c, ctx) = context(EXTRA, "x3", Some("y"), seed)?;
        let k = simple(&c.algebra);
        let rk = ctx.pn_twist(&k)?;
        let s1 = ctx.relative_syzygy(&k, seed)?;
        let s2 = ctx.relative_syzygy(&s1.module, seed)?;
        out.detail("omega_r_k_dim", s1.module.dim());
        out.detail("omega_r2_k_dim", s2.module.dim());
        out.expect_eq("covers_minimal", s1.minimal_certified && s2.minimal_certified, true);
        out.expect_eq("covers_split_over_r", s1.split_over_r && s2.split_over_r, true);
        let via = omega_power(&s2.module, -2);
        out.expect_iso("rho_k_vs_omega_minus2_omega_r2_k", &is_stably_isomorphic(&rk, &via, &iso(seed))?, true);
        Ok(())
    }));
}

fn spherical_samples(level: Level) -> Vec<&'static str> {
    let mut v = vec!["dihedral:q=2:p=2", "semidihedral:q=2:p=2:delta=1", "klein:p=3"];
    if level == Level::Full {
        v.extend(["dihedral:q=3:p=3", "semidihedral:q=3:p=2:delta=1", "klein:p=5"]);
    }
    v
}

/// Criterion 8: property checks on seeded samples.
fn property_cases(level: Level, cases: &mut Vec<Case>) {
    let scale = if level == Level::Full { 3 } else { 1 };
    for name in catalog_names(level) {
        cases.push(case(format!("property:omega_roundtrip:{name}"), 8, move |seed, out| {
            let c = catalog_by_name(&name)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut dims = Vec::new();
            for i in 0..20 * scale {
                let m = random_module(&c.algebra, &mut rng);
                dims.push(m.dim());
                let down_up = omega_power(&syzygy(&m), -1);
                let up_down = syzygy(&omega_power(&m, -1));
                out.expect_iso(&format!("sample_{i}_cosyzygy_syzygy"), &is_stably_isomorphic(&down_up, &m, &iso(seed))?, true);
                out.expect_iso(&format!("sample_{i}_syzygy_cosyzygy"), &is_stably_isomorphic(&up_down, &m, &iso(seed))?, true);
            }
            out.detail("sample_dims", dims);
            Ok(())
        }));
    }
    for name in spherical_samples(level) {
        cases.push(case(format!("property:additivity:{name}"), 8, move |seed, out| {
            let (c, ctx) = context(name, "x", None, seed)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for i in 0..10 * scale {
                let m = random_module(&c.algebra, &mut rng);
                let n = random_module(&c.algebra, &mut rng);
                let sum = Module::direct_sum(&[&m, &n])?;
                let lhs = ctx.spherical_twist(&sum)?;
                let rhs = Module::direct_sum(&[&ctx.spherical_twist(&m)?, &ctx.spherical_twist(&n)?])?;
                out.expect_iso(&format!("pair_{i}"), &is_stably_isomorphic(&lhs, &rhs, &iso(seed))?, true);
            }
            Ok(())
        }));
        cases.push(case(format!("property:tau_fixes_relatively_projective:{name}"), 8, move |seed, out| {
            let (_, ctx) = context(name, "x", None, seed)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut dims = Vec::new();
            for i in 0..5 * scale {
                let Some(x) = relatively_projective_module(&ctx, &mut rng) else {
                    out.check(false, || "no relatively projective sample found".into());
                    break;
                };
                dims.push(x.dim());
                let tx = ctx.spherical_twist(&x)?;
                out.expect_iso(&format!("sample_{i}"), &is_stably_isomorphic(&tx, &x, &iso(seed))?, true);
            }
            out.detail("sample_dims", dims);
            Ok(())
        }));
    }
    cases.push(case("property:stable_hom_grid:dihedral:q=2:p=2".into(), 8, |seed, out| {
        let (c, ctx) = context("dihedral:q=2:p=2", "x", None, seed)?;
        let a = &c.algebra;
        let k = simple(a);
        let reg = Module::regular(a.clone());
        let rad = reg.submodule(&reg.radical());
        let (rad_mod_soc, _) = rad.quotient(&rad.socle());
        let objects = [("k", k.clone()), ("T", ctx.t().clone()), ("omega_k", syzygy(&k)), ("rad_mod_soc", rad_mod_soc.core())];
        let mut grid = Vec::new();
        for (xn, x) in &objects {
            for (yn, y) in &objects {
                let before = stable_hom(x, y)?;
                let images = before.reps().iter().map(|f| ctx.spherical_twist_map(f)).collect::<Result<Vec<_>>>()?;
                let after = stable_hom(&ctx.spherical_twist(x)?, &ctx.spherical_twist(y)?)?;
                let rank = after.stable_rank(&images.iter().map(|f| f.mat.clone()).collect::<Vec<_>>());
                grid.push(format!("{xn}->{yn}: {} {} {rank}", before.stable_dim(), after.stable_dim()));
                out.check(before.stable_dim() == after.stable_dim(), || {
                    format!("{xn}->{yn}: stable dim {} becomes {}", before.stable_dim(), after.stable_dim())
                });
                out.check(rank == before.stable_dim(), || {
                    format!("{xn}->{yn}: twist map has rank {rank} on a {}-dimensional space", before.stable_dim())
                });
            }
        }
        out.detail("grid", grid);
        Ok(())
    }));
    let mut evidence = vec!["dihedral:q=2:p=2", "dihedral:q=3:p=2", "semidihedral:q=2:p=2:delta=1", "semidihedral:q=3:p=2:delta=1"];
    evidence.extend(["klein:p=2", "klein:p=3", "klein:p=5"]);
    for name in evidence {
        cases.push(case(format!("property:equivalence_evidence:{name}"), 8, move |seed, out| {
            let (_, ctx) = context(name, "x", None, seed)?;
            let ev = ctx.equivalence_evidence(seed)?;
            out.detail("evidence", &ev);
            out.expect_eq("twisted_simple_stable_end_dim", ev.twisted_simple_stable_end_dim, 1);
            out.expect_eq("ext1_image_rank", ev.ext1_image_rank, ev.ext1_dim);
            Ok(())
        }));
    }
}

pub(super) fn all(level: Level) -> Vec<Case> {
    let mut cases = Vec::new();
    catalog_cases(level, &mut cases);
    restriction_cases(level, &mut cases);
    periodicity_cases(level, &mut cases);
    dihedral_cases(level, &mut cases);
    semidihedral_cases(level, &mut cases);
    klein_cases(level, &mut cases);
    extraspecial_cases(level, &mut cases);
    property_cases(level, &mut cases);
    cases
}
