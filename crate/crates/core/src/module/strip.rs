use super::{hom_space, Module};
use crate::exactla::{kernel_basis, Mat, Subspace};

/// A module split as `core ⊕ A^free_rank`.
#[derive(Clone, Debug)]
pub struct Stripped {
    pub core: Module,
    pub free_rank: usize,
    /// `dim core x dim m`: the core as a submodule.
    pub inclusion: Mat,
    /// `dim m x dim core`: projection along the free summands.
    pub projection: Mat,
}

impl Stripped {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0
    }
}

/// Split off free summands until the pairing `(u, f) -> top coefficient of f(u)`
/// vanishes on the remaining core, `f` ranging over `Hom(core, A)`.
pub fn strip_projectives(m: &Module) -> Stripped {
    let alg = m.algebra().clone();
    let f = alg.field();
    let d = alg.dim();
    let n = m.dim();
    let regular = Module::regular(alg.clone());

    let mut current = m.clone();
    let mut inclusion = Mat::identity(f, n);
    let mut free_rank = 0;
    let mut free_vectors: Vec<Vec<u32>> = Vec::new();

    while current.dim() > 0 {
        let homs = hom_space(&current, &regular).expect("same algebra");
        let cn = current.dim();
        let mut chosen: Vec<usize> = Vec::new();
        let mut funcs = Subspace::new(f, cn);
        let mut func_rows = Vec::new();
        for (c, h) in homs.basis.iter().enumerate() {
            let col: Vec<u32> = (0..cn).map(|s| h.get(s, 0)).collect();
            if funcs.insert(&col) {
                chosen.push(c);
                func_rows.push(col);
            }
        }
        let t = chosen.len();
        if t == 0 {
            break;
        }
        // generators u_s: pivot positions of the chosen functionals
        let gens = Subspace::from_vecs(f, cn, &func_rows).pivots().to_vec();
        let maps: Vec<&Mat> = chosen.iter().map(|&c| &homs.basis[c]).collect();
        let stacked = Mat::hstack(f, &maps);
        let core_space = Subspace::from_vecs(f, cn, &kernel_basis(&stacked));
        debug_assert_eq!(core_space.dim() + t * d, cn);
        for &s in &gens {
            for i in 0..d {
                let v = current.action(i).row(s).to_vec();
                free_vectors.push(inclusion.vec_mul(&v));
            }
        }
        let next = current.submodule(&core_space);
        inclusion = core_space.to_mat().mul(&inclusion);
        current = next;
        free_rank += t;
    }

    let c = current.dim();
    if free_rank > 0 {
        let id = Mat::identity(f, c);
        let _ = current.0.stripped.set(StripCache { core: None, free_rank: 0, inclusion: id.clone(), projection: id });
    }
    let projection = if free_rank == 0 {
        Mat::identity(f, n)
    } else {
        let mut rows: Vec<Vec<u32>> = inclusion.row_vecs();
        rows.extend(free_vectors);
        let q = Mat::from_residue_rows(f, n, &rows);
        let qinv = q.inverse().expect("core and free parts are complementary");
        qinv.select_cols(&(0..c).collect::<Vec<_>>())
    };
    Stripped { core: current, free_rank, inclusion, projection }
}

/// Cached form of [`Stripped`] that does not hold the module itself when
/// nothing was split off.
pub(crate) struct StripCache {
    core: Option<Module>,
    free_rank: usize,
    inclusion: Mat,
    projection: Mat,
}

impl From<Stripped> for StripCache {
    fn from(s: Stripped) -> Self {
        let core = (s.free_rank > 0).then_some(s.core);
        StripCache { core, free_rank: s.free_rank, inclusion: s.inclusion, projection: s.projection }
    }
}

impl StripCache {
    pub(crate) fn expand(&self, owner: &Module) -> Stripped {
        Stripped {
            core: self.core.clone().unwrap_or_else(|| owner.clone()),
            free_rank: self.free_rank,
            inclusion: self.inclusion.clone(),
            projection: self.projection.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::dihedral_algebra;

    #[test]
    fn strips_free_summands() {
        let a = dihedral_algebra(2, 2).unwrap().algebra;
        let k = Module::simple(a.clone());
        let reg = Module::regular(a.clone());
        let sum = Module::direct_sum(&[&reg, &k, &reg]).unwrap();
        let s = strip_projectives(&sum);
        assert_eq!(s.free_rank, 2);
        assert_eq!(s.core.dim(), 1);
        assert!(s.inclusion.mul(&s.projection).is_identity());
        let s2 = strip_projectives(&Module::free(a.clone(), 2));
        assert_eq!((s2.core.dim(), s2.free_rank), (0, 2));
        let s3 = strip_projectives(&k);
        assert_eq!((s3.core.dim(), s3.free_rank), (1, 0));
    }
}
