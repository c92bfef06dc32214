use rand::Rng;

use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, Mat, Subspace};
use crate::module::{hom_space, HomSpace, ModuleHom};

/// A surjection restricted to a direct summand of its source on which it is minimal.
#[derive(Clone, Debug)]
pub struct MinimizedEpi {
    pub epi: ModuleHom,
    /// `dim source' x dim source`: the kept summand inside the original source.
    pub inclusion: Mat,
    /// Number of Fitting splits performed.
    pub splits: usize,
    /// Every `φ` with `φ·epi = 0` is nilpotent (certified by a vanishing product chain).
    pub certified: bool,
}

/// The endomorphisms `φ` of the source with `φ · epi = 0`.
fn annihilator(e: &ModuleHom) -> Result<Vec<Mat>> {
    let end = hom_space(&e.source, &e.source)?;
    if end.dim() == 0 {
        return Ok(Vec::new());
    }
    let f = e.source.algebra().field();
    let rows: Vec<Vec<u32>> = end.basis.iter().map(|b| b.mul(&e.mat).flatten().to_vec()).collect();
    let stacked = Mat::from_residue_rows(f, e.source.dim() * e.target.dim(), &rows);
    Ok(kernel_basis(&stacked).iter().map(|c| end.combination(c)).collect())
}

/// Whether every product of `len` elements of the span of `gens` vanishes for some `len`.
fn nil_certificate(gens: &[Mat], dim: usize, f: crate::exactla::FieldSpec) -> bool {
    let mut w = Subspace::full(f, dim);
    loop {
        if w.dim() == 0 {
            return true;
        }
        let mut next = Subspace::new(f, dim);
        for v in w.basis() {
            for g in gens {
                next.insert(&g.vec_mul(v));
            }
        }
        if next.dim() == w.dim() {
            return false;
        }
        w = next;
    }
}

fn find_non_nilpotent(gens: &[Mat], seed: u64) -> Option<Mat> {
    if let Some(g) = gens.iter().find(|g| !g.is_nilpotent()) {
        return Some(g.clone());
    }
    let f = gens.first()?.field();
    let p = f.p() as u64;
    let combine = |coeffs: &[u32]| {
        let mut out = Mat::zeros(f, gens[0].rows(), gens[0].cols());
        for (g, &c) in gens.iter().zip(coeffs) {
            out.add_scaled(g, c);
        }
        out
    };
    if let Some(total) = p.checked_pow(gens.len() as u32).filter(|&t| t <= 4096) {
        let mut coeffs = vec![0u32; gens.len()];
        for _ in 1..total {
            for c in coeffs.iter_mut() {
                *c += 1;
                if (*c as u64) < p {
                    break;
                }
                *c = 0;
            }
            let cand = combine(&coeffs);
            if !cand.is_nilpotent() {
                return Some(cand);
            }
        }
        return None;
    }
    let mut rng = HomSpace::rng(seed);
    for _ in 0..500 {
        let coeffs: Vec<u32> = (0..gens.len()).map(|_| rng.gen_range(0..f.p())).collect();
        let cand = combine(&coeffs);
        if !cand.is_nilpotent() {
            return Some(cand);
        }
    }
    None
}

/// Split off Fitting summands of the source on which `e` vanishes until every
/// endomorphism killed by `e` is nilpotent.
pub fn minimize_epi(e: &ModuleHom, seed: u64) -> Result<MinimizedEpi> {
    if !e.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let f = e.source.algebra().field();
    let mut epi = e.clone();
    let mut inclusion = Mat::identity(f, e.source.dim());
    let mut splits = 0;
    loop {
        let ann = annihilator(&epi)?;
        if nil_certificate(&ann, epi.source.dim(), f) {
            return Ok(MinimizedEpi { epi, inclusion, splits, certified: true });
        }
        let Some(phi) = find_non_nilpotent(&ann, seed.wrapping_add(splits as u64)) else {
            return Ok(MinimizedEpi { epi, inclusion, splits, certified: false });
        };
        let power = phi.pow(epi.source.dim() as u64);
        let keep = Subspace::from_vecs(f, epi.source.dim(), &kernel_basis(&power));
        let source = epi.source.submodule(&keep);
        let incl = keep.to_mat();
        epi = ModuleHom::new_unchecked(source, epi.target.clone(), incl.mul(&epi.mat));
        inclusion = incl.mul(&inclusion);
        splits += 1;
    }
}
