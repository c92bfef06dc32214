//! Induction along `R = k[x] ⊂ A`, relative syzygies, the spherical twist `τ_R`
//! and the `P^n` twist `ρ_{R,y}`, realized on modules.

mod report;

use std::sync::Arc;

pub use report::{EquivalenceEvidence, HypothesisReport, RestrictionReport};

use crate::algebra::{analyze_subalgebra, Algebra, SubalgebraData};
use crate::error::{Error, HypothesisFailure, Result};
use crate::exactla::{jordan_chains, Mat, Subspace};
use crate::module::{Module, ModuleHom};
use crate::stable::{cone, cosyzygy, minimize_epi, transport_map, Shift};

/// The data of a twist: `R = k[x]`, the optional `y`, the induced module `T`
/// with `ψ = L_y` on it, and the certified hypothesis report.
#[derive(Clone, Debug)]
pub struct TwistContext {
    algebra: Arc<Algebra>,
    sub: SubalgebraData,
    y: Option<Vec<u32>>,
    t: Module,
    psi: Option<ModuleHom>,
    report: HypothesisReport,
}

/// An induced module `M ⊗_R A` with its multiplication map onto `M`.
#[derive(Clone, Debug)]
pub struct Induced {
    pub module: Module,
    pub mu: ModuleHom,
}

/// Relative syzygy with the certificates from its construction.
#[derive(Clone, Debug)]
pub struct RelativeSyzygy {
    pub module: Module,
    /// Dimension of the minimized relative cover.
    pub cover_dim: usize,
    pub minimal_certified: bool,
    /// Jordan types of `x` on kernel and target add up to that on the cover.
    pub split_over_r: bool,
}

impl TwistContext {
    pub fn new(algebra: Arc<Algebra>, x: &[u32], y: Option<&[u32]>, seed: u64) -> Result<TwistContext> {
        let sub = analyze_subalgebra(&algebra, x)?;
        if let Some(y) = y {
            if y.len() != algebra.dim() {
                return Err(Error::BadParameter("y has the wrong number of coordinates".into()));
            }
        }
        let k = Module::simple(algebra.clone());
        let t = induce_with(&algebra, &sub, &k).module;
        let psi = y.map(|y| {
            let h = h_map_with(&algebra, &sub, y, &k);
            let t_mod = t.clone();
            ModuleHom::new_unchecked(t_mod.clone(), t_mod, h.mat.scale(algebra.field().neg(1)))
        });
        let y = y.map(|v| v.to_vec());
        let report = report::build(&algebra, &sub, y.as_deref(), &t, psi.as_ref(), seed)?;
        Ok(TwistContext { algebra, sub, y, t, psi, report })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }
    pub fn subalgebra(&self) -> &SubalgebraData {
        &self.sub
    }
    pub fn x(&self) -> &[u32] {
        &self.sub.x
    }
    pub fn y(&self) -> Option<&[u32]> {
        self.y.as_deref()
    }
    /// `T = k ⊗_R A`.
    pub fn t(&self) -> &Module {
        &self.t
    }
    /// `ψ`: left multiplication by `y` on `T`.
    pub fn psi(&self) -> Option<&ModuleHom> {
        self.psi.as_ref()
    }
    pub fn hypothesis_report(&self) -> &HypothesisReport {
        &self.report
    }

    pub fn induce(&self, m: &Module) -> Result<Induced> {
        m.check_same_algebra(&Module::simple(self.algebra.clone()))?;
        Ok(induce_with(&self.algebra, &self.sub, m))
    }

    pub fn restriction_report(&self, m: &Module) -> Result<RestrictionReport> {
        report::restriction(&self.sub, m)
    }

    fn require_spherical(&self) -> Result<()> {
        if self.report.spherical_ready {
            Ok(())
        } else {
            Err(HypothesisFailure::NotSpherical { blocks: self.report.restriction.jordan.block_sizes.clone() }.into())
        }
    }

    fn require_pn(&self) -> Result<&[u32]> {
        let y = self.y.as_deref().ok_or(HypothesisFailure::MissingY)?;
        if let Some(fail) = &self.report.pn_failure {
            return Err(fail.clone().into());
        }
        Ok(y)
    }

    /// Kernel of the minimized relative cover of `m`.
    pub fn relative_syzygy(&self, m: &Module, seed: u64) -> Result<RelativeSyzygy> {
        let ind = self.induce(m)?;
        let min = minimize_epi(&ind.mu, seed)?;
        let kernel = min.epi.kernel();
        let module = min.epi.source.submodule(&kernel);
        let jt = |n: &Module| -> Result<Vec<usize>> {
            Ok(jordan_chains(&n.act_element(&self.sub.x), Some(self.sub.m))?.block_sizes)
        };
        let mut combined = jt(&module)?;
        combined.extend(jt(m)?);
        combined.sort_unstable_by(|a, b| b.cmp(a));
        let split_over_r = combined == jt(&min.epi.source)?;
        Ok(RelativeSyzygy {
            cover_dim: min.epi.source.dim(),
            module,
            minimal_certified: min.certified,
            split_over_r,
        })
    }

    fn mu_kernel(&self, m: &Module) -> Result<(Induced, Subspace, Module)> {
        let ind = self.induce(m)?;
        let kernel = ind.mu.kernel();
        let k = ind.module.submodule(&kernel);
        Ok((ind, kernel, k))
    }

    /// `τ_R(M)`: the cosyzygy of the kernel of `μ: M ⊗_R A -> M`, projective-free.
    pub fn spherical_twist(&self, m: &Module) -> Result<Module> {
        self.require_spherical()?;
        let (_, _, k) = self.mu_kernel(m)?;
        Ok(cosyzygy(&k))
    }

    /// `τ_R` iterated `times` times.
    pub fn spherical_twist_power(&self, m: &Module, times: usize) -> Result<Module> {
        let mut out = m.clone();
        for _ in 0..times {
            out = self.spherical_twist(&out)?;
        }
        Ok(out)
    }

    /// `τ_R(f)`: `f ⊗ 1` restricted to the kernels of `μ`, then `Ω^-1`.
    pub fn spherical_twist_map(&self, f: &ModuleHom) -> Result<ModuleHom> {
        self.require_spherical()?;
        let (ind_s, ker_s, k_s) = self.mu_kernel(&f.source)?;
        let (_, ker_t, k_t) = self.mu_kernel(&f.target)?;
        let fld = self.algebra.field();
        let blocks: Vec<&Mat> = vec![&f.mat; self.sub.r];
        let lifted = Mat::block_diag(fld, &blocks);
        debug_assert_eq!(lifted.rows(), ind_s.module.dim());
        let restricted = ker_s.to_mat().mul(&lifted);
        debug_assert!((0..restricted.rows()).all(|r| ker_t.contains(restricted.row(r))));
        let on_kernels = ModuleHom::new_unchecked(k_s, k_t, restricted.select_cols(ker_t.pivots()));
        transport_map(&on_kernels, Shift::OmegaInverse)
    }

    /// `H_M: M ⊗_R A -> M ⊗_R A`, `v ⊗ a ↦ v y ⊗ a - v ⊗ y a`.
    pub fn h_map(&self, m: &Module) -> Result<ModuleHom> {
        let y = self.y.as_deref().ok_or(HypothesisFailure::MissingY)?;
        Ok(h_map_with(&self.algebra, &self.sub, y, m))
    }

    /// `ρ_{R,y}(M)` by two cones: `C = cone(H_M)`, then the cone of `C -> M`.
    pub fn pn_twist(&self, m: &Module) -> Result<Module> {
        self.require_pn()?;
        let ind = self.induce(m)?;
        let h = self.h_map(m)?;
        let c1 = cone(&h)?;
        let comp = &c1.basis_coords;
        let nx = ind.module.dim();
        let fld = self.algebra.field();
        let mut c_mat = Mat::zeros(fld, c1.module.dim(), m.dim());
        for (row, &coord) in comp.iter().enumerate() {
            if coord < nx {
                c_mat.row_mut(row).copy_from_slice(ind.mu.mat.row(coord));
            }
        }
        debug_assert_eq!(c1.from_target.mat.mul(&c_mat), ind.mu.mat);
        debug_assert!(c1.from_envelope.mat.mul(&c_mat).is_zero());
        let stripped = c1.module.stripped();
        let c_core = ModuleHom::new_unchecked(stripped.core.clone(), m.clone(), stripped.inclusion.mul(&c_mat));
        let c2 = cone(&c_core)?;
        Ok(c2.module.core())
    }

    pub fn equivalence_evidence(&self, seed: u64) -> Result<EquivalenceEvidence> {
        self.require_spherical()?;
        report::evidence(self, seed)
    }
}

fn induce_with(algebra: &Arc<Algebra>, sub: &SubalgebraData, m: &Module) -> Induced {
    let fld = algebra.field();
    let n = m.dim();
    let r = sub.r;
    let x_powers = x_powers(m, sub);
    let poly = |coeffs: &[u32]| {
        let mut out = Mat::zeros(fld, n, n);
        for (t, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                out.add_scaled(&x_powers[t], c);
            }
        }
        out
    };
    let action: Vec<Mat> = (0..algebra.dim())
        .map(|i| {
            let mut big = Mat::zeros(fld, r * n, r * n);
            for j in 0..r {
                for l in 0..r {
                    let c = sub.coeff_poly(i, j, l);
                    if c.iter().any(|&v| v != 0) {
                        big.set_block(j * n, l * n, &poly(c));
                    }
                }
            }
            big
        })
        .collect();
    let module = Module::from_action_unchecked(algebra.clone(), r * n, action);
    let mut mu = Mat::zeros(fld, r * n, n);
    for (j, a) in sub.left_free_basis.iter().enumerate() {
        mu.set_block(j * n, 0, &m.act_element(a));
    }
    let mu = ModuleHom::new_unchecked(module.clone(), m.clone(), mu);
    debug_assert!(mu.intertwines());
    Induced { module, mu }
}

fn x_powers(m: &Module, sub: &SubalgebraData) -> Vec<Mat> {
    let fld = m.algebra().field();
    let x = m.act_element(&sub.x);
    let mut out = vec![Mat::identity(fld, m.dim())];
    for _ in 1..sub.m {
        let next = out.last().unwrap().mul(&x);
        out.push(next);
    }
    out
}

fn h_map_with(algebra: &Arc<Algebra>, sub: &SubalgebraData, y: &[u32], m: &Module) -> ModuleHom {
    let fld = algebra.field();
    let ind = induce_with(algebra, sub, m);
    let n = m.dim();
    let r = sub.r;
    let powers = x_powers(m, sub);
    let ym = m.act_element(y);
    let mut h = Mat::zeros(fld, r * n, r * n);
    for (j, a) in sub.left_free_basis.iter().enumerate() {
        let mut diag = h.block(j * n, j * n, n, n);
        diag.add_scaled(&ym, 1);
        h.set_block(j * n, j * n, &diag);
        let coords = sub.expand_left(&algebra.mul(y, a));
        for l in 0..r {
            let mut block = h.block(j * n, l * n, n, n);
            for t in 0..sub.m {
                let c = coords[l * sub.m + t];
                if c != 0 {
                    block.add_scaled(&powers[t], fld.neg(c));
                }
            }
            h.set_block(j * n, l * n, &block);
        }
    }
    let out = ModuleHom::new_unchecked(ind.module.clone(), ind.module, h);
    debug_assert!(!algebra.commutes(y, &sub.x) || out.intertwines());
    out
}
