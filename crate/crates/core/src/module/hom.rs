use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Module;
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, Mat, Subspace};

/// An intertwining map `source -> target`, stored as a `dim source x dim target` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleHom {
    pub source: Module,
    pub target: Module,
    pub mat: Mat,
}

impl ModuleHom {
    /// Checked constructor: verifies the shape and intertwining on generators.
    pub fn new(source: Module, target: Module, mat: Mat) -> Result<ModuleHom> {
        source.check_same_algebra(&target)?;
        if mat.rows() != source.dim() || mat.cols() != target.dim() {
            return Err(Error::InvalidModule(format!(
                "map matrix is {}x{}, expected {}x{}",
                mat.rows(),
                mat.cols(),
                source.dim(),
                target.dim()
            )));
        }
        let h = ModuleHom { source, target, mat };
        if !h.intertwines() {
            return Err(Error::InvalidModule("matrix does not intertwine the actions".into()));
        }
        Ok(h)
    }

    pub(crate) fn new_unchecked(source: Module, target: Module, mat: Mat) -> ModuleHom {
        debug_assert_eq!(mat.rows(), source.dim());
        debug_assert_eq!(mat.cols(), target.dim());
        ModuleHom { source, target, mat }
    }

    pub fn intertwines(&self) -> bool {
        self.source.algebra().generators().iter().all(|&g| {
            self.source.action(g).mul(&self.mat) == self.mat.mul(self.target.action(g))
        })
    }

    pub fn identity(m: &Module) -> ModuleHom {
        ModuleHom::new_unchecked(m.clone(), m.clone(), Mat::identity(m.algebra().field(), m.dim()))
    }

    pub fn zero(source: &Module, target: &Module) -> ModuleHom {
        let f = source.algebra().field();
        ModuleHom::new_unchecked(source.clone(), target.clone(), Mat::zeros(f, source.dim(), target.dim()))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModuleHom) -> ModuleHom {
        ModuleHom::new_unchecked(self.source.clone(), next.target.clone(), self.mat.mul(&next.mat))
    }

    pub fn add(&self, other: &ModuleHom) -> ModuleHom {
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), self.mat.add(&other.mat))
    }

    pub fn sub(&self, other: &ModuleHom) -> ModuleHom {
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), self.mat.sub(&other.mat))
    }

    pub fn scale(&self, c: u32) -> ModuleHom {
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), self.mat.scale(c))
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.mat.rank() == self.target.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.mat.rank() == self.source.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::from_vecs(self.source.algebra().field(), self.source.dim(), &kernel_basis(&self.mat))
    }

    pub fn image(&self) -> Subspace {
        self.mat.row_space()
    }
}

/// A basis of `Hom_A(source, target)`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Module,
    pub target: Module,
    pub basis: Vec<Mat>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn combination(&self, coeffs: &[u32]) -> Mat {
        let f = self.source.algebra().field();
        let mut out = Mat::zeros(f, self.source.dim(), self.target.dim());
        for (b, &c) in self.basis.iter().zip(coeffs) {
            if c != 0 {
                out.add_scaled(b, c);
            }
        }
        out
    }

    pub fn hom(&self, i: usize) -> ModuleHom {
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), self.basis[i].clone())
    }

    pub fn homs(&self) -> Vec<ModuleHom> {
        (0..self.dim()).map(|i| self.hom(i)).collect()
    }

    pub fn random_element(&self, rng: &mut ChaCha8Rng) -> Mat {
        let p = self.source.algebra().field().p();
        let coeffs: Vec<u32> = (0..self.dim()).map(|_| rng.gen_range(0..p)).collect();
        self.combination(&coeffs)
    }

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// Coordinates of a linear combination of the basis, if it is one.
    pub fn coords(&self, m: &Mat) -> Option<Vec<u32>> {
        if self.basis.is_empty() {
            return m.is_zero().then(Vec::new);
        }
        let f = self.source.algebra().field();
        let rows: Vec<Vec<u32>> = self.basis.iter().map(|b| b.flatten().to_vec()).collect();
        let stacked = Mat::from_residue_rows(f, m.rows() * m.cols(), &rows);
        crate::exactla::LeftSolver::new(&stacked).solve(m.flatten())
    }
}

/// `Hom_A(m, n)` via a projective presentation of `m`: a map is determined by the
/// images `n_j` of the top generators subject to the relations of the kernel.
pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    m.check_same_algebra(n)?;
    let alg = m.algebra();
    let f = alg.field();
    let d = alg.dim();
    let nn = n.dim();
    if m.dim() == 0 || nn == 0 {
        return Ok(HomSpace { source: m.clone(), target: n.clone(), basis: Vec::new() });
    }
    let pres = m.presentation();
    let g = pres.rank();
    let unknowns = g * nn;

    let solutions: Vec<Vec<u32>> = if pres.kernel_gens.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut e = vec![0u32; unknowns];
                e[i] = 1;
                e
            })
            .collect()
    } else {
        let s = pres.kernel_gens.len();
        let mut system = Mat::zeros(f, unknowns, s * nn);
        for (k, w) in pres.kernel_gens.iter().enumerate() {
            for j in 0..g {
                let mut block = Mat::zeros(f, nn, nn);
                for i in 0..d {
                    let c = w[j * d + i];
                    if c != 0 {
                        block.add_scaled(n.action(i), c);
                    }
                }
                system.set_block(j * nn, k * nn, &block);
            }
        }
        kernel_basis(&system)
    };

    let basis = solutions
        .iter()
        .map(|sol| {
            let mut nmap = Mat::zeros(f, g * d, nn);
            for j in 0..g {
                let nj = &sol[j * nn..(j + 1) * nn];
                for i in 0..d {
                    let img = n.action(i).vec_mul(nj);
                    nmap.row_mut(j * d + i).copy_from_slice(&img);
                }
            }
            pres.section.mul(&nmap)
        })
        .collect();
    Ok(HomSpace { source: m.clone(), target: n.clone(), basis })
}
