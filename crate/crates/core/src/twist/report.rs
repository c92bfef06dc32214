use std::fmt;

use serde::Serialize;

use super::TwistContext;
use crate::algebra::{Algebra, SubalgebraData};
use crate::error::{HypothesisFailure, Result};
use crate::exactla::{jordan_chains, JordanReport};
use crate::module::{Module, ModuleHom};
use crate::stable::{stable_endo_structure, stable_hom, syzygy};

/// Decomposition of a module restricted to `R = k[x]`, read off the Jordan type of `x`.
#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub dim: usize,
    pub jordan: JordanReport,
    /// Summands `k` (blocks of size 1).
    pub k_count: usize,
    /// Summands `R` (blocks of size `m`).
    pub free_count: usize,
    pub intermediate_sizes: Vec<usize>,
    pub relatively_projective: bool,
}

impl fmt::Display for RestrictionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.k_count > 0 {
            parts.push(format!("k^{}", self.k_count));
        }
        for s in &self.intermediate_sizes {
            parts.push(format!("R/x^{s}"));
        }
        if self.free_count > 0 {
            parts.push(format!("R^{}", self.free_count));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

pub(super) fn restriction(sub: &SubalgebraData, m: &Module) -> Result<RestrictionReport> {
    let jordan = jordan_chains(&m.act_element(&sub.x), Some(sub.m))?;
    let k_count = jordan.count_of(1);
    let free_count = jordan.count_of(sub.m);
    let intermediate_sizes: Vec<usize> =
        jordan.block_sizes.iter().copied().filter(|&s| s > 1 && s < sub.m).collect();
    let relatively_projective = jordan.block_sizes.iter().all(|&s| s == sub.m);
    Ok(RestrictionReport { dim: m.dim(), jordan, k_count, free_count, intermediate_sizes, relatively_projective })
}

/// The standing hypotheses of the twist functors, evaluated.
#[derive(Clone, Debug, Serialize)]
pub struct HypothesisReport {
    pub m: usize,
    pub r: usize,
    pub t_dim: usize,
    pub restriction: RestrictionReport,
    pub t_stable_end_dim: usize,
    /// `n` with `End-bar(T) = k[ψ]/(ψ^(n+1))`, when certified.
    pub endo_n: Option<usize>,
    /// The certifying generator is the class of `L_y`.
    pub psi_is_left_mult_by_y: bool,
    pub omega_t_to_t_stable_dim: usize,
    pub y_commutes_with_x: Option<bool>,
    pub y_preserves_xa: Option<bool>,
    pub spherical_ready: bool,
    pub pn_ready: bool,
    pub pn_failure_reason: Option<String>,
    #[serde(skip)]
    pub pn_failure: Option<HypothesisFailure>,
}

pub(super) fn build(
    algebra: &Algebra,
    sub: &SubalgebraData,
    y: Option<&[u32]>,
    t: &Module,
    psi: Option<&ModuleHom>,
    seed: u64,
) -> Result<HypothesisReport> {
    let restriction = restriction(sub, t)?;
    let end = stable_hom(t, t)?;
    let omega_t_to_t_stable_dim = stable_hom(&syzygy(t), t)?.stable_dim();
    let endo = stable_endo_structure(t, psi.map(|p| &p.mat), seed).ok();
    let clean = restriction.intermediate_sizes.is_empty();
    let spherical_ready = clean && restriction.k_count == 2;

    let y_commutes_with_x = y.map(|y| algebra.commutes(y, &sub.x));
    let y_preserves_xa = y.map(|y| {
        let xa = algebra.left_mult_by(&sub.x).row_space();
        let yx = algebra.mul(y, &sub.x);
        let lyx = algebra.left_mult_by(&yx);
        (0..algebra.dim()).all(|b| xa.contains(lyx.row(b)))
    });
    let pn_failure = match y {
        None => Some(HypothesisFailure::MissingY),
        Some(_) if y_commutes_with_x == Some(false) => Some(HypothesisFailure::CommutationFailed),
        Some(_) if y_preserves_xa == Some(false) => Some(HypothesisFailure::NotWellDefined),
        Some(_) => match &endo {
            None => Some(HypothesisFailure::EndoRingMismatch(format!(
                "the {}-dimensional stable endomorphism ring of T is not truncated polynomial",
                end.stable_dim()
            ))),
            Some(e) if !e.from_hint => Some(HypothesisFailure::EndoRingMismatch(
                "the class of left multiplication by y does not generate it".into(),
            )),
            Some(e) if !clean || e.n + 1 != restriction.k_count => Some(HypothesisFailure::EndoRingMismatch(format!(
                "n = {} but the restriction of T is {restriction}",
                e.n
            ))),
            Some(_) => None,
        },
    };
    Ok(HypothesisReport {
        m: sub.m,
        r: sub.r,
        t_dim: t.dim(),
        t_stable_end_dim: end.stable_dim(),
        endo_n: endo.as_ref().map(|e| e.n),
        psi_is_left_mult_by_y: endo.as_ref().is_some_and(|e| e.from_hint),
        omega_t_to_t_stable_dim,
        y_commutes_with_x,
        y_preserves_xa,
        spherical_ready,
        pn_ready: pn_failure.is_none(),
        pn_failure_reason: pn_failure.as_ref().map(|f| f.to_string()),
        pn_failure,
        restriction,
    })
}

/// Consequences of `τ_R` being an equivalence, checked on the simple module.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceEvidence {
    pub twisted_simple_dim: usize,
    pub twisted_simple_stable_end_dim: usize,
    pub ext1_dim: usize,
    pub ext1_image_rank: usize,
    pub endo_trivial: bool,
    pub ext1_injective: bool,
    pub passed: bool,
}

pub(super) fn evidence(ctx: &TwistContext, _seed: u64) -> Result<EquivalenceEvidence> {
    let k = Module::simple(ctx.algebra().clone());
    let tk = ctx.spherical_twist(&k)?;
    let end = stable_hom(&tk, &tk)?.stable_dim();
    let omega_k = syzygy(&k);
    let ext = stable_hom(&omega_k, &k)?;
    let images: Vec<ModuleHom> = ext.reps().iter().map(|f| ctx.spherical_twist_map(f)).collect::<Result<_>>()?;
    let rank = match images.first() {
        None => 0,
        Some(first) => {
            let space = stable_hom(&first.source, &first.target)?;
            space.stable_rank(&images.iter().map(|f| f.mat.clone()).collect::<Vec<_>>())
        }
    };
    let endo_trivial = end == 1;
    let ext1_injective = rank == ext.stable_dim();
    Ok(EquivalenceEvidence {
        twisted_simple_dim: tk.dim(),
        twisted_simple_stable_end_dim: end,
        ext1_dim: ext.stable_dim(),
        ext1_image_rank: rank,
        endo_trivial,
        ext1_injective,
        passed: endo_trivial && ext1_injective,
    })
}
