use rand::Rng;
use serde::Serialize;

use super::syzygy::syzygy;
use crate::error::{Error, Result};
use crate::exactla::{LeftSolver, Mat, Subspace};
use crate::module::{hom_space, HomSpace, Module, ModuleHom};

/// `Hom(M, N)` modulo the maps factoring through a projective module.
#[derive(Clone, Debug)]
pub struct StableHomSpace {
    pub hom: HomSpace,
    /// Maps through projectives, in coordinates of `hom.basis`.
    pub proj: Subspace,
    /// Indices into `hom.basis` whose classes form a basis of the quotient.
    pub rep_indices: Vec<usize>,
    solver: Option<LeftSolver>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StableDims {
    pub total_dim: usize,
    pub proj_dim: usize,
    pub stable_dim: usize,
}

impl StableHomSpace {
    pub fn source(&self) -> &Module {
        &self.hom.source
    }
    pub fn target(&self) -> &Module {
        &self.hom.target
    }
    pub fn total_dim(&self) -> usize {
        self.hom.dim()
    }
    pub fn proj_dim(&self) -> usize {
        self.proj.dim()
    }
    pub fn stable_dim(&self) -> usize {
        self.total_dim() - self.proj_dim()
    }
    pub fn dims(&self) -> StableDims {
        StableDims { total_dim: self.total_dim(), proj_dim: self.proj_dim(), stable_dim: self.stable_dim() }
    }

    pub fn reps(&self) -> Vec<ModuleHom> {
        self.rep_indices.iter().map(|&i| self.hom.hom(i)).collect()
    }

    /// Coordinates of a homomorphism in the Hom basis.
    pub fn coords(&self, f: &Mat) -> Option<Vec<u32>> {
        match &self.solver {
            None => f.is_zero().then(Vec::new),
            Some(s) => s.solve(f.flatten()),
        }
    }

    /// Whether `f` factors through a projective module.
    pub fn is_projective_map(&self, f: &Mat) -> bool {
        self.coords(f).map(|c| self.proj.contains(&c)).expect("map must be a homomorphism")
    }

    /// Dimension of the span of the stable classes of `maps`.
    pub fn stable_rank(&self, maps: &[Mat]) -> usize {
        let mut s = self.proj.clone();
        maps.iter()
            .filter(|f| s.insert(&self.coords(f).expect("map must be a homomorphism")))
            .count()
    }
}

fn flat_solver(hom: &HomSpace) -> Option<LeftSolver> {
    if hom.basis.is_empty() {
        return None;
    }
    let f = hom.source.algebra().field();
    let cols = hom.source.dim() * hom.target.dim();
    let rows: Vec<Vec<u32>> = hom.basis.iter().map(|b| b.flatten().to_vec()).collect();
    Some(LeftSolver::new(&Mat::from_residue_rows(f, cols, &rows)))
}

/// Stable Hom: the maps through projectives are those through the cover of `n`,
/// spanned by `h · E_j` with `h ∈ Hom(m, A)` and `E_j` the `j`-th block of the cover.
pub fn stable_hom(m: &Module, n: &Module) -> Result<StableHomSpace> {
    m.check_same_algebra(n)?;
    let hom = hom_space(m, n)?;
    let fld = m.algebra().field();
    let solver = flat_solver(&hom);
    let mut proj = Subspace::new(fld, hom.dim());
    if let Some(solver) = &solver {
        let d = m.algebra().dim();
        let to_a = hom_space(m, &Module::regular(m.algebra().clone()))?;
        let pres = n.presentation();
        'outer: for j in 0..pres.rank() {
            let block = pres.epi.block(j * d, 0, d, n.dim());
            for h in &to_a.basis {
                let composite = h.mul(&block);
                let c = solver.solve(composite.flatten()).expect("composite is a homomorphism");
                proj.insert(&c);
                if proj.dim() == hom.dim() {
                    break 'outer;
                }
            }
        }
    }
    let mut span = proj.clone();
    let mut rep_indices = Vec::new();
    for i in 0..hom.dim() {
        let mut e = vec![0u32; hom.dim()];
        e[i] = 1;
        if span.insert(&e) {
            rep_indices.push(i);
        }
    }
    Ok(StableHomSpace { hom, proj, rep_indices, solver })
}

/// `Ext^1(M, N)` as the stable Hom from `Ω M` to `N`.
pub fn ext1(m: &Module, n: &Module) -> Result<usize> {
    Ok(stable_hom(&syzygy(m), n)?.stable_dim())
}

/// A certified isomorphism `End-bar(M) ≅ k[ψ]/(ψ^(n+1))`.
#[derive(Clone, Debug)]
pub struct StableEndoStructure {
    pub module: Module,
    pub n: usize,
    pub psi: ModuleHom,
    pub certified: bool,
    /// The certifying `ψ` is the supplied hint.
    pub from_hint: bool,
}

/// Check that `1, ψ, …, ψ^n` are stably independent and `ψ^(n+1)` is projective.
pub fn certifies_truncated(space: &StableHomSpace, psi: &Mat, n: usize) -> bool {
    let fld = space.source().algebra().field();
    let dim = space.source().dim();
    let mut powers = vec![Mat::identity(fld, dim)];
    for _ in 0..n {
        let next = powers.last().unwrap().mul(psi);
        powers.push(next);
    }
    let top = powers.last().unwrap().mul(psi);
    space.stable_rank(&powers) == n + 1 && space.is_projective_map(&top)
}

/// Find `ψ` with `End-bar(M) = k[ψ]/(ψ^(n+1))`, `n + 1 = dim End-bar(M)`.
/// Candidates: the hint, the stable basis, then seeded combinations (500).
pub fn stable_endo_structure(m: &Module, hint: Option<&Mat>, seed: u64) -> Result<StableEndoStructure> {
    let space = stable_hom(m, m)?;
    let hint = hint.filter(|h| space.coords(h).is_some());
    let s = space.stable_dim();
    if s == 0 {
        return Err(Error::NotTruncatedPolynomial("the stable endomorphism ring is zero".into()));
    }
    let n = s - 1;
    let fld = m.algebra().field();
    if n == 0 {
        let zero = ModuleHom::zero(m, m);
        let from_hint = hint.is_some_and(|h| space.is_projective_map(h));
        return Ok(StableEndoStructure { module: m.clone(), n, psi: zero, certified: true, from_hint });
    }
    let found = |psi: &Mat, from_hint: bool| StableEndoStructure {
        module: m.clone(),
        n,
        psi: ModuleHom::new_unchecked(m.clone(), m.clone(), psi.clone()),
        certified: true,
        from_hint,
    };
    if let Some(h) = hint {
        if certifies_truncated(&space, h, n) {
            return Ok(found(h, true));
        }
    }
    for r in space.reps() {
        if certifies_truncated(&space, &r.mat, n) {
            return Ok(found(&r.mat, false));
        }
    }
    let reps = space.reps();
    let mut rng = HomSpace::rng(seed);
    for _ in 0..500 {
        let mut cand = Mat::zeros(fld, m.dim(), m.dim());
        for r in &reps {
            cand.add_scaled(&r.mat, rng.gen_range(0..fld.p()));
        }
        if certifies_truncated(&space, &cand, n) {
            return Ok(found(&cand, false));
        }
    }
    Err(Error::NotTruncatedPolynomial(format!(
        "no element of the {s}-dimensional stable endomorphism ring generates it as k[psi]/(psi^{s})"
    )))
}
