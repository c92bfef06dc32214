//! Worked examples for each layer, from linear algebra up to the twist functors.

use std::sync::Arc;

use stw_core::algebra::{analyze_subalgebra, find_symmetric_form, validate_algebra, AlgebraJson};
use stw_core::catalog::{catalog_by_name, extraspecial_group_algebra, string_module, StringWord};
use stw_core::exactla::{jordan_chains, FieldSpec, Mat};
use stw_core::module::{hom_space, is_isomorphic, strip_projectives, IsoOptions, Module};
use stw_core::stable::{
    cosyzygy, ext1, grothendieck_class, is_stably_isomorphic, minimize_epi, stable_endo_structure, stable_hom, syzygy,
    transport_map, Shift,
};
use stw_core::twist::TwistContext;
use stw_core::{Algebra, Error, ModuleHom, Side};

fn gf(p: u32) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn cat(name: &str) -> (Arc<Algebra>, stw_core::CatalogAlgebra) {
    let c = catalog_by_name(name).unwrap();
    (c.algebra.clone(), c)
}

fn d2() -> (Arc<Algebra>, stw_core::CatalogAlgebra) {
    cat("dihedral:q=2:p=2")
}

fn ctx(name: &str, x: &str, y: Option<&str>) -> TwistContext {
    let c = catalog_by_name(name).unwrap();
    let xv = c.element(x).unwrap();
    let yv = y.map(|n| c.element(n).unwrap());
    TwistContext::new(c.algebra.clone(), &xv, yv.as_deref(), 0).unwrap()
}

fn yes(m: &Module, n: &Module) -> bool {
    is_stably_isomorphic(m, n, &IsoOptions::default()).unwrap().is_yes()
}

mod linear_algebra {
    use super::*;

    #[test]
    fn gf3_kernel_matches_enumeration() {
        let f = gf(3);
        let m = Mat::from_rows(f, &[[1, 2], [2, 1]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        let mut brute = 0;
        for a in 0..3 {
            for b in 0..3 {
                if m.vec_mul(&[a, b]).iter().all(|&c| c == 0) {
                    brute += 1;
                }
            }
        }
        assert_eq!(brute, 3);
    }

    #[test]
    fn jordan_type_of_x_on_t() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let x = c.x().to_vec();
        let report = jordan_chains(&c.t().act_element(&x), None).unwrap();
        assert_eq!(report.block_sizes, vec![2, 1, 1]);
    }
}

mod algebras {
    use super::*;

    #[test]
    fn dihedral_passes_with_dimension_eight() {
        let (a, _) = d2();
        assert_eq!(a.dim(), 8);
        assert_eq!(a.radical_dims()[..2], [8, 7]);
    }

    #[test]
    fn field_is_semisimple_with_warning() {
        let a = validate_algebra(gf(5), vec!["1".into()], vec![], vec![1]).unwrap();
        assert!(a.is_semisimple());
        assert!(!a.warnings().is_empty());
        let form = find_symmetric_form(&a, 0).unwrap();
        assert_eq!(form.lambda, vec![1]);
    }

    #[test]
    fn altered_constant_breaks_associativity() {
        let (a, _) = d2();
        let mut json = AlgebraJson::from_algebra(&a);
        let xyx = a.index_of("xyx").unwrap();
        // x * y := xyx, so (x*y)*x = xyx*x = 0 while x*(y*x) = xyx.
        for entry in &mut json.table {
            if entry.0 == 1 && entry.1 == 2 {
                entry.2 = vec![(xyx, 1)];
            }
        }
        assert!(json.table.iter().any(|e| e.0 == 1 && e.1 == 2));
        match json.validate() {
            Err(Error::NotAssociative(..)) => {}
            other => panic!("expected NotAssociative, got {other:?}"),
        }
    }

    #[test]
    fn symmetric_forms() {
        let (a, _) = d2();
        let form = find_symmetric_form(&a, 0).unwrap();
        assert!(form.is_symmetric(&a));
        assert!(form.gram(&a).is_invertible());
        let socle = a.index_of("xyxy").or_else(|| a.index_of("yxyx")).unwrap();
        assert_ne!(form.lambda[socle], 0);
        let (k, _) = cat("klein:p=3");
        let form = find_symmetric_form(&k, 0).unwrap();
        assert_ne!(form.lambda[k.index_of("xy").unwrap()], 0);
        assert!(form.gram(&k).is_invertible());
    }

    #[test]
    fn opposites() {
        let (k, _) = cat("klein:p=2");
        assert!(k.opposite().same_as(&k));
        let (a, _) = d2();
        let op = a.opposite();
        let x = 1;
        let y = 2;
        assert_eq!(op.product(x, y), a.product(y, x));
        assert_eq!(op.product(y, x), a.product(x, y));
        assert!(op.opposite().same_as(&a));
    }

    #[test]
    fn subalgebra_data() {
        let (a, c) = d2();
        let s = analyze_subalgebra(&a, &c.element("x").unwrap()).unwrap();
        assert_eq!((s.m, s.r), (2, 4));
        assert_eq!(s.left_free_basis.len(), 4);
        assert_eq!(s.right_free_basis.len(), 4);
        let e = extraspecial_group_algebra(3).unwrap();
        let s = analyze_subalgebra(&e.algebra, &e.element("x3").unwrap()).unwrap();
        assert_eq!((s.m, s.r), (3, 9));
        assert_eq!(s.left_ranks, vec![27, 18, 9, 0]);
    }

    #[test]
    fn socle_element_is_not_free() {
        let (a, _) = d2();
        let soc = a.basis_element(a.dim() - 1);
        match analyze_subalgebra(&a, &soc) {
            Err(Error::FreenessFailed { side: Side::Left, actual: 1, expected: 4, .. }) => {}
            Err(Error::FreenessFailed { side: Side::Right, actual: 1, expected: 4, .. }) => {}
            other => panic!("expected FreenessFailed, got {other:?}"),
        }
    }

    #[test]
    fn right_coefficients_reproduce_products() {
        for name in ["dihedral:q=3:p=3", "semidihedral:q=2:p=3:delta=1", "klein:p=5"] {
            let (a, c) = cat(name);
            let x = c.element("x").unwrap();
            let s = analyze_subalgebra(&a, &x).unwrap();
            for (j, aj) in s.left_free_basis.iter().enumerate() {
                for i in 0..a.dim() {
                    let target = a.mul(aj, &a.basis_element(i));
                    let mut sum = a.zero();
                    for l in 0..s.r {
                        let poly = s.coeff_poly(i, j, l);
                        let mut xp = a.one();
                        let mut coeff = a.zero();
                        for &c in poly {
                            coeff = a.add(&coeff, &xp.iter().map(|&v| a.field().mul(v, c)).collect::<Vec<_>>());
                            xp = a.mul(&xp, &x);
                        }
                        sum = a.add(&sum, &a.mul(&coeff, &s.left_free_basis[l]));
                    }
                    assert_eq!(sum, target, "{name}: a_{j} * b_{i}");
                }
            }
        }
    }
}

mod modules {
    use super::*;

    #[test]
    fn simple_and_regular() {
        let (a, _) = d2();
        let k = Module::simple(a.clone());
        assert_eq!(k.dim(), 1);
        assert!(k.actions().iter().skip(1).all(Mat::is_zero));
        assert_eq!(Module::regular(a.clone()).dim(), 8);
        let e = extraspecial_group_algebra(3).unwrap();
        let k = Module::simple(e.algebra.clone());
        for g in ["g", "h", "z"] {
            let group_element = e.algebra.add(&e.algebra.one(), &e.element(g).unwrap());
            assert!(k.act_element(&group_element).is_identity());
        }
        for x in ["x1", "x4", "y"] {
            assert!(k.act_element(&e.element(x).unwrap()).is_zero());
        }
        let (kl, _) = cat("klein:p=2");
        assert_eq!(Module::regular(kl).dim(), 4);
    }

    #[test]
    fn hom_dimensions() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let t = c.t();
        let a = c.algebra();
        assert_eq!(hom_space(&Module::regular(a.clone()), t).unwrap().dim(), 4);
        let k = Module::simple(a.clone());
        assert_eq!(hom_space(&k, &k).unwrap().dim(), 1);
        assert_eq!(hom_space(t, t).unwrap().dim(), 3);
    }

    #[test]
    fn socles() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let a = c.algebra();
        let reg = Module::regular(a.clone());
        let soc = reg.socle();
        assert_eq!(soc.dim(), 1);
        assert!(soc.contains(&a.basis_element(a.dim() - 1)));
        assert_eq!(Module::simple(a.clone()).socle().dim(), 1);
        assert_eq!(c.t().socle().dim(), 1);
        assert!(c.t().is_uniserial());
    }

    #[test]
    fn presentations() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let a = c.algebra();
        let k = Module::simple(a.clone());
        assert_eq!(k.presentation().rank(), 1);
        assert_eq!(k.presentation().kernel.dim(), 7);
        assert_eq!(c.t().presentation().rank(), 1);
        assert_eq!(c.t().presentation().kernel.dim(), 4);
        assert_eq!(Module::regular(a.clone()).presentation().kernel.dim(), 0);
    }

    #[test]
    fn duals() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let a = c.algebra();
        let dk = Module::simple(a.clone()).dual();
        assert!(dk.algebra().same_as(&a.opposite()));
        assert_eq!(dk.dim(), 1);
        let da = Module::regular(a.clone()).dual();
        let reg_op = Module::regular(da.algebra().clone());
        assert!(is_isomorphic(&da, &reg_op, &IsoOptions::default()).unwrap().is_yes());
        let t = c.t();
        assert_eq!(t.dual().dual().actions(), t.actions());
    }

    #[test]
    fn stripping() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let a = c.algebra();
        let free2 = Module::free(a.clone(), 2);
        let s = strip_projectives(&free2);
        assert_eq!((s.core.dim(), s.free_rank), (0, 2));
        let k = Module::simple(a.clone());
        let sum = Module::direct_sum(&[&k, &Module::regular(a.clone())]).unwrap();
        let s = strip_projectives(&sum);
        assert_eq!((s.core.dim(), s.free_rank), (1, 1));
        let s = strip_projectives(c.t());
        assert_eq!((s.core.dim(), s.free_rank), (4, 0));
    }

    #[test]
    fn isomorphism_examples() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let a = c.algebra();
        let t = c.t();
        assert!(is_isomorphic(t, t, &IsoOptions::default()).unwrap().is_yes());
        let f = a.field();
        let p = Mat::from_fn(f, 4, 4, |i, j| u32::from(j == (i + 1) % 4 || (i == 0 && j == 3)));
        assert!(p.is_invertible());
        let moved = t.change_basis(&p).unwrap();
        assert!(is_isomorphic(t, &moved, &IsoOptions::default()).unwrap().is_yes());
        let k = Module::simple(a.clone());
        assert!(is_isomorphic(&k, &syzygy(&k), &IsoOptions::default()).unwrap().is_no());
    }
}

mod stable {
    use super::*;

    #[test]
    fn syzygies() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let a = c.algebra();
        let k = Module::simple(a.clone());
        assert_eq!(syzygy(&k).dim(), 7);
        let ot = syzygy(c.t());
        assert_eq!(ot.dim(), 4);
        assert!(yes(&ot, c.t()));
        assert_eq!(syzygy(&Module::regular(a.clone())).dim(), 0);
        assert!(yes(&cosyzygy(&syzygy(&k)), &k));
        let (kl, _) = cat("klein:p=3");
        assert_eq!(cosyzygy(&Module::simple(kl.clone())).dim(), 3);
        assert_eq!(cosyzygy(&Module::regular(kl)).dim(), 0);
    }

    #[test]
    fn transport_of_identity_zero_and_psi() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let k = Module::simple(c.algebra().clone());
        let ok = syzygy(&k);
        let id = transport_map(&ModuleHom::identity(&k), Shift::Omega).unwrap();
        let end = stable_hom(&ok, &ok).unwrap();
        assert_eq!(end.stable_rank(std::slice::from_ref(&id.mat)), 1);
        assert_eq!(end.stable_rank(&[id.sub(&ModuleHom::identity(&ok)).mat]), 0);
        let zero = transport_map(&ModuleHom::zero(&k, &k), Shift::Omega).unwrap();
        assert!(end.is_projective_map(&zero.mat));

        let psi = stable_endo_structure(c.t(), None, 0).unwrap().psi;
        let back = transport_map(&transport_map(&psi, Shift::Omega).unwrap(), Shift::OmegaInverse).unwrap();
        let round = cosyzygy(&syzygy(c.t()));
        let end_t = stable_hom(&round, &round).unwrap();
        assert_eq!(end_t.stable_dim(), 2);
        assert_eq!(end_t.stable_rank(std::slice::from_ref(&back.mat)), 1);
    }

    #[test]
    fn stable_hom_examples() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let a = c.algebra();
        let reg = Module::regular(a.clone());
        let k = Module::simple(a.clone());
        for m in [&k, c.t(), &reg] {
            assert_eq!(stable_hom(&reg, m).unwrap().stable_dim(), 0);
        }
        assert_eq!(stable_hom(c.t(), c.t()).unwrap().stable_dim(), 2);
        let endk = stable_hom(&k, &k).unwrap();
        assert_eq!((endk.stable_dim(), endk.proj_dim()), (1, 0));
    }

    #[test]
    fn endo_structures() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        assert_eq!(stable_endo_structure(c.t(), None, 0).unwrap().n, 1);
        let e = ctx("extraspecial:p=3", "x3", Some("y"));
        let s = stable_endo_structure(e.t(), e.psi().map(|p| &p.mat), 0).unwrap();
        assert_eq!(s.n, 2);
        assert!(s.from_hint);
        for name in ["dihedral:q=2:p=3", "klein:p=5", "semidihedral:q=2:p=2:delta=1"] {
            let (a, _) = cat(name);
            assert_eq!(stable_endo_structure(&Module::simple(a), None, 0).unwrap().n, 0);
        }
    }

    #[test]
    fn ext_groups() {
        for name in ["klein:p=2", "dihedral:q=2:p=2"] {
            let (a, _) = cat(name);
            let k = Module::simple(a.clone());
            assert_eq!(ext1(&k, &k).unwrap(), 2);
            assert_eq!(ext1(&Module::regular(a), &k).unwrap(), 0);
        }
    }

    #[test]
    fn minimizing_covers() {
        let (a, _) = d2();
        let k = Module::simple(a.clone());
        let free2 = Module::free(a.clone(), 2);
        let mut mat = Mat::zeros(a.field(), 16, 1);
        mat.set(0, 0, 1);
        mat.set(8, 0, 1);
        let e = ModuleHom::new(free2, k.clone(), mat).unwrap();
        let m = minimize_epi(&e, 0).unwrap();
        assert_eq!(m.epi.source.dim(), 8);
        assert_eq!(m.splits, 1);
        assert!(m.certified);
        assert!(m.epi.is_surjective());

        let (cover, epi) = stw_core::module::projective_cover(&k);
        let m = minimize_epi(&epi, 0).unwrap();
        assert_eq!(m.epi.source.dim(), cover.dim());
        assert_eq!(m.splits, 0);
    }

    #[test]
    fn grothendieck_classes() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let a = c.algebra();
        assert_eq!(grothendieck_class(&Module::regular(a.clone())).value, 0);
        let k = Module::simple(a.clone());
        assert_eq!(grothendieck_class(&c.spherical_twist(&k).unwrap()).value, 5);
        assert_eq!(grothendieck_class(&syzygy(&k)).value, 7);
        assert_eq!(grothendieck_class(&syzygy(&k)), grothendieck_class(&k).neg());
    }

    #[test]
    fn stable_isomorphism_examples() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let a = c.algebra();
        let t = c.t();
        let padded = Module::direct_sum(&[t, &Module::regular(a.clone())]).unwrap();
        assert!(yes(t, &padded));
    }
}

mod twists {
    use super::*;

    #[test]
    fn induction() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let a = c.algebra();
        let k = Module::simple(a.clone());
        let ind = c.induce(&k).unwrap();
        assert_eq!(ind.module.dim(), 4);
        assert!(ind.mu.is_surjective());
        let reg = Module::regular(a.clone());
        let ind = c.induce(&reg).unwrap();
        assert_eq!(ind.module.dim(), 32);
        assert!(ind.mu.is_surjective());
        let e = ctx("extraspecial:p=3", "x3", Some("y"));
        assert_eq!(e.t().dim(), 9);
    }

    #[test]
    fn restrictions() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let r = c.restriction_report(c.t()).unwrap();
        assert_eq!(r.jordan.block_sizes, vec![2, 1, 1]);
        assert_eq!(r.to_string(), "k^2 + R^1");
        let reg = Module::regular(c.algebra().clone());
        let r = c.restriction_report(&reg).unwrap();
        assert!(r.relatively_projective);
        assert!(r.jordan.block_sizes.iter().all(|&b| b == 2));
        let e = ctx("extraspecial:p=3", "x1", Some("y"));
        let r = e.restriction_report(e.t()).unwrap();
        assert_eq!(r.jordan.block_sizes, vec![3, 3, 1, 1, 1]);
    }

    #[test]
    fn relative_syzygies() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let k = Module::simple(c.algebra().clone());
        assert_eq!(c.relative_syzygy(&k, 0).unwrap().module.dim(), 3);
        let reg = Module::regular(c.algebra().clone());
        assert_eq!(c.relative_syzygy(&reg, 0).unwrap().module.dim(), 0);
        let kl = ctx("klein:p=2", "x", Some("y"));
        let s = kl.relative_syzygy(&Module::simple(kl.algebra().clone()), 0).unwrap();
        assert_eq!(s.module.dim(), 1);
    }

    #[test]
    fn spherical_examples() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let a = c.algebra();
        let k = Module::simple(a.clone());
        let tk = c.spherical_twist(&k).unwrap();
        assert_eq!(tk.dim(), 5);
        let s = string_module(a, &StringWord::twisted_simple(2)).unwrap();
        assert_eq!(s.dim(), 5);
        assert!(yes(&tk, &s));
        assert_eq!(c.spherical_twist(&Module::regular(a.clone())).unwrap().dim(), 0);
        assert!(yes(&c.spherical_twist(c.t()).unwrap(), &cosyzygy(c.t())));
    }

    #[test]
    fn spherical_maps() {
        let c = ctx("dihedral:q=2:p=2", "x", None);
        let k = Module::simple(c.algebra().clone());
        let tk = c.spherical_twist(&k).unwrap();
        let end = stable_hom(&tk, &tk).unwrap();
        let id = c.spherical_twist_map(&ModuleHom::identity(&k)).unwrap();
        assert_eq!(end.stable_rank(std::slice::from_ref(&id.mat)), 1);
        assert_eq!(end.stable_rank(&[id.sub(&ModuleHom::identity(&tk)).mat]), 0);
        let zero = c.spherical_twist_map(&ModuleHom::zero(&k, &k)).unwrap();
        assert!(end.is_projective_map(&zero.mat));

        let ot = syzygy(c.t());
        let before = stable_hom(&ot, c.t()).unwrap();
        assert_eq!(before.stable_dim(), 2);
        let images: Vec<Mat> = before.reps().iter().map(|f| c.spherical_twist_map(f).unwrap().mat).collect();
        let after = stable_hom(&c.spherical_twist(&ot).unwrap(), &c.spherical_twist(c.t()).unwrap()).unwrap();
        assert_eq!(after.stable_rank(&images), 2);
    }

    #[test]
    fn pn_examples() {
        let e = ctx("extraspecial:p=3", "x3", Some("y"));
        assert_eq!(e.pn_twist(&Module::regular(e.algebra().clone())).unwrap().dim(), 0);
        let kl = ctx("klein:p=2", "x", Some("y"));
        let k = Module::simple(kl.algebra().clone());
        let rk = kl.pn_twist(&k).unwrap();
        assert_eq!(rk.dim(), 5);
        assert!(yes(&rk, &stw_core::stable::omega_power(&k, -2)));
    }

    #[test]
    fn hypothesis_reports() {
        let c = ctx("dihedral:q=2:p=2", "x", Some("y"));
        let r = c.hypothesis_report();
        assert!(r.spherical_ready);
        assert!(!r.pn_ready);
        assert_eq!(r.y_commutes_with_x, Some(false));
        match c.pn_twist(&Module::simple(c.algebra().clone())) {
            Err(Error::HypothesisFailed(stw_core::HypothesisFailure::CommutationFailed)) => {}
            other => panic!("expected CommutationFailed, got {other:?}"),
        }
        let e = ctx("extraspecial:p=3", "x3", Some("y"));
        assert!(e.hypothesis_report().pn_ready);
        assert_eq!(e.hypothesis_report().endo_n, Some(2));
        let kl = ctx("klein:p=3", "x", Some("y"));
        let r = kl.hypothesis_report();
        assert!(r.spherical_ready && r.pn_ready);
        assert_eq!(r.endo_n, Some(1));
        assert_eq!(r.t_stable_end_dim, 2);
    }

    #[test]
    fn evidence() {
        for name in ["dihedral:q=2:p=2", "klein:p=2", "semidihedral:q=2:p=2:delta=1"] {
            let ev = ctx(name, "x", None).equivalence_evidence(0).unwrap();
            assert_eq!(ev.twisted_simple_stable_end_dim, 1, "{name}");
            assert_eq!((ev.ext1_dim, ev.ext1_image_rank), (2, 2), "{name}");
            assert!(ev.passed);
        }
    }
}

mod catalog {
    use super::*;

    #[test]
    fn dihedral_family() {
        let (a, _) = d2();
        assert!(a.index_of("xyxy").is_some() || a.index_of("yxyx").is_some());
        let (a3, _) = cat("dihedral:q=3:p=3");
        assert_eq!(a3.dim(), 12);
        assert!(matches!(catalog_by_name("dihedral:q=1:p=2"), Err(Error::BadParameter(_))));
    }

    #[test]
    fn semidihedral_family() {
        let (a, c) = cat("semidihedral:q=2:p=2:delta=1");
        assert_eq!(a.dim(), 8);
        let y = c.element("y").unwrap();
        assert!(Algebra::is_zero(&a.pow(&y, 4)));
        let (b, _) = cat("semidihedral:q=2:p=3:delta=0");
        assert_eq!(b.dim(), 8);
        assert_eq!(cat("semidihedral:q=4:p=2:delta=1").0.dim(), 16);
    }

    #[test]
    fn klein_family() {
        for p in [2, 3, 5] {
            let (a, _) = cat(&format!("klein:p={p}"));
            assert_eq!(a.dim(), 4);
            assert!(a.is_commutative());
        }
    }

    #[test]
    fn extraspecial_family() {
        let c = extraspecial_group_algebra(3).unwrap();
        assert_eq!(c.algebra.dim(), 27);
        let y = c.element("y").unwrap();
        for i in 1..=4 {
            assert!(c.algebra.commutes(&y, &c.element(&format!("x{i}")).unwrap()));
        }
        assert!(matches!(extraspecial_group_algebra(2), Err(Error::BadParameter(_))));
    }

    #[test]
    fn string_words() {
        let (a, _) = d2();
        let w: StringWord = "xYXY".parse().unwrap();
        assert_eq!(string_module(&a, &w).unwrap().dim(), 5);
        let empty = string_module(&a, &StringWord::new(vec![])).unwrap();
        assert_eq!(empty.dim(), 1);
        let bad: StringWord = "xx".parse().unwrap();
        assert!(matches!(string_module(&a, &bad), Err(Error::InvalidWord(_))));
    }
}
