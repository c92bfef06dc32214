use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{hom_space, HomSpace, Module};
use crate::error::Result;
use crate::exactla::{jordan_type_from_ranks, Mat};

/// Outcome of an isomorphism test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// An invertible intertwiner `m -> n`.
    Isomorphic(Mat),
    /// Maps `m -> n -> m` whose composites are stably invertible.
    StablyInverse(Mat, Mat),
    NotIsomorphic(String),
    Unknown,
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_) | IsoVerdict::StablyInverse(..))
    }
    pub fn is_no(&self) -> bool {
        matches!(self, IsoVerdict::NotIsomorphic(_))
    }
    pub fn label(&self) -> &'static str {
        match self {
            IsoVerdict::Isomorphic(_) | IsoVerdict::StablyInverse(..) => "isomorphic",
            IsoVerdict::NotIsomorphic(_) => "not isomorphic",
            IsoVerdict::Unknown => "unknown",
        }
    }
    pub fn reason(&self) -> Option<&str> {
        match self {
            IsoVerdict::NotIsomorphic(r) => Some(r),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct IsoOptions {
    pub seed: u64,
    pub random_trials: usize,
    pub exhaustive_limit: u64,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions { seed: 0, random_trials: 2000, exhaustive_limit: 4096 }
    }
}

impl IsoOptions {
    pub fn with_seed(seed: u64) -> Self {
        IsoOptions { seed, ..Default::default() }
    }
}

fn invariant_mismatch(m: &Module, n: &Module) -> Option<String> {
    if m.dim() != n.dim() {
        return Some(format!("dimensions differ: {} vs {}", m.dim(), n.dim()));
    }
    let (tm, tn) = (m.top_dim(), n.top_dim());
    if tm != tn {
        return Some(format!("top dimensions differ: {tm} vs {tn}"));
    }
    let (sm, sn) = (m.socle().dim(), n.socle().dim());
    if sm != sn {
        return Some(format!("socle dimensions differ: {sm} vs {sn}"));
    }
    let alg = m.algebra();
    for &g in alg.generators() {
        let jm = jordan_type_from_ranks(m.action(g)).ok();
        let jn = jordan_type_from_ranks(n.action(g)).ok();
        if jm != jn {
            return Some(format!(
                "Jordan types of {} differ: {:?} vs {:?}",
                alg.basis_names()[g],
                jm.unwrap_or_default(),
                jn.unwrap_or_default()
            ));
        }
    }
    for i in 1..alg.dim() {
        let (rm, rn) = (m.action(i).rank(), n.action(i).rank());
        if rm != rn {
            return Some(format!("rank of the action of {} differs: {rm} vs {rn}", alg.basis_names()[i]));
        }
    }
    let (lm, ln) = (m.radical_series_dims(), n.radical_series_dims());
    if lm != ln {
        return Some(format!("radical series differ: {lm:?} vs {ln:?}"));
    }
    None
}

fn search(hom: &HomSpace, opts: &IsoOptions) -> Option<IsoVerdict> {
    for b in &hom.basis {
        if b.is_invertible() {
            return Some(IsoVerdict::Isomorphic(b.clone()));
        }
    }
    let p = hom.source.algebra().field().p() as u64;
    let h = hom.dim() as u32;
    let total = p.checked_pow(h);
    if let Some(total) = total.filter(|&t| t <= opts.exhaustive_limit) {
        let mut coeffs = vec![0u32; hom.dim()];
        for _ in 1..total {
            for c in coeffs.iter_mut() {
                *c += 1;
                if (*c as u64) < p {
                    break;
                }
                *c = 0;
            }
            let cand = hom.combination(&coeffs);
            if cand.is_invertible() {
                return Some(IsoVerdict::Isomorphic(cand));
            }
        }
        return Some(IsoVerdict::NotIsomorphic(format!(
            "no invertible map among all {total} elements of Hom"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random_trials {
        let coeffs: Vec<u32> = (0..hom.dim()).map(|_| rng.gen_range(0..p as u32)).collect();
        let cand = hom.combination(&coeffs);
        if cand.is_invertible() {
            return Some(IsoVerdict::Isomorphic(cand));
        }
    }
    None
}

/// Decide whether `m ≅ n`: cheap invariants, Hom dimensions, then a bounded search
/// in `Hom(m, n)` that is exhaustive over small fields.
pub fn is_isomorphic(m: &Module, n: &Module, opts: &IsoOptions) -> Result<IsoVerdict> {
    m.check_same_algebra(n)?;
    if m == n {
        return Ok(IsoVerdict::Isomorphic(Mat::identity(m.algebra().field(), m.dim())));
    }
    if let Some(reason) = invariant_mismatch(m, n) {
        return Ok(IsoVerdict::NotIsomorphic(reason));
    }
    if m.dim() == 0 {
        return Ok(IsoVerdict::Isomorphic(Mat::identity(m.algebra().field(), 0)));
    }
    let hmn = hom_space(m, n)?;
    let hmm = hom_space(m, m)?;
    let hnn = hom_space(n, n)?;
    if hmm.dim() != hnn.dim() {
        return Ok(IsoVerdict::NotIsomorphic(format!(
            "endomorphism rings differ in dimension: {} vs {}",
            hmm.dim(),
            hnn.dim()
        )));
    }
    if hmn.dim() != hmm.dim() {
        return Ok(IsoVerdict::NotIsomorphic(format!(
            "dim Hom(M,N) = {} but dim End(M) = {}",
            hmn.dim(),
            hmm.dim()
        )));
    }
    let hnm = hom_space(n, m)?;
    if hnm.dim() != hmm.dim() {
        return Ok(IsoVerdict::NotIsomorphic(format!(
            "dim Hom(N,M) = {} but dim End(M) = {}",
            hnm.dim(),
            hmm.dim()
        )));
    }
    Ok(search(&hmn, opts).unwrap_or(IsoVerdict::Unknown))
}
