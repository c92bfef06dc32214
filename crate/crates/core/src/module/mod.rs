//! Right modules, presentations, homomorphism spaces and projective summands.

mod hom;
mod iso;
mod json;
mod strip;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use hom::{hom_space, HomSpace, ModuleHom};
pub use iso::{is_isomorphic, IsoOptions, IsoVerdict};
pub use json::{AlgebraRef, ModuleJson};
pub use strip::{strip_projectives, Stripped};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{jordan_type_from_ranks, kernel_basis, LeftSolver, Mat, Subspace};

/// A finite-dimensional right module: `v * b_i = v * action[i]`.
///
/// Cheap to clone; the projective presentation is computed once and cached.
#[derive(Clone)]
pub struct Module(Arc<ModuleInner>);

struct ModuleInner {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Mat>,
    presentation: OnceLock<Presentation>,
    stripped: OnceLock<strip::StripCache>,
}

/// A minimal projective presentation `K -> A^g -> M -> 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    /// Top generators `u_j` (standard basis vectors of `M` complementing `M rad`).
    pub gens: Vec<Vec<u32>>,
    /// `epi` row `j*d + i` is `u_j * b_i`.
    pub epi: Mat,
    /// Row `s` is a preimage in `A^g` of the basis vector `e_s` of `M`.
    pub section: Mat,
    /// Kernel of `epi` inside `A^g`.
    pub kernel: Subspace,
    /// Elements of the kernel generating it as a module.
    pub kernel_gens: Vec<Vec<u32>>,
}

impl Presentation {
    pub fn rank(&self) -> usize {
        self.gens.len()
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim {} over algebra of dim {})", self.dim(), self.algebra().dim())
    }
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        self.algebra().same_as(other.algebra()) && self.dim() == other.dim() && self.0.action == other.0.action
    }
}
impl Eq for Module {}

impl Module {
    /// A module from one action matrix per basis element, validated on all pairs.
    pub fn new(algebra: Arc<Algebra>, action: Vec<Mat>) -> Result<Module> {
        let d = algebra.dim();
        if action.len() != d {
            return Err(Error::InvalidModule(format!("{} action matrices for an algebra of dimension {d}", action.len())));
        }
        let n = action[0].rows();
        let f = algebra.field();
        for (i, a) in action.iter().enumerate() {
            if a.rows() != n || a.cols() != n || a.field() != f {
                return Err(Error::InvalidModule(format!("action matrix {i} has the wrong shape or field")));
            }
        }
        if !action[0].is_identity() {
            return Err(Error::InvalidModule("the unit does not act as the identity".into()));
        }
        for i in 1..d {
            for j in 1..d {
                let lhs = action[i].mul(&action[j]);
                let mut rhs = Mat::zeros(f, n, n);
                for (k, &c) in algebra.product(i, j).iter().enumerate() {
                    rhs.add_scaled(&action[k], c);
                }
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action of {}*{} is not the product of the actions",
                        algebra.basis_names()[i],
                        algebra.basis_names()[j]
                    )));
                }
            }
        }
        Ok(Module::from_action_unchecked(algebra, n, action))
    }

    /// A module from the action of the algebra generators alone; the other
    /// matrices are synthesized from generator words and everything is validated.
    pub fn from_generator_action(algebra: Arc<Algebra>, gen_action: Vec<Mat>) -> Result<Module> {
        let gens = algebra.generators().to_vec();
        if gen_action.len() != gens.len() {
            return Err(Error::InvalidModule(format!(
                "{} generator matrices for {} generators",
                gen_action.len(),
                gens.len()
            )));
        }
        let f = algebra.field();
        let d = algebra.dim();
        let n = gen_action.first().map_or(0, |m| m.rows());
        if gen_action.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::InvalidModule("generator matrices must be square of equal size".into()));
        }
        let mut span = Subspace::new(f, d);
        let mut words: Vec<(Vec<u32>, Mat)> = vec![(algebra.one(), Mat::identity(f, n))];
        span.insert(&algebra.one());
        let mut next = 0;
        while next < words.len() && words.len() < d {
            let (v, m) = words[next].clone();
            next += 1;
            for (g, gm) in gens.iter().zip(&gen_action) {
                let w = algebra.right_mult(*g).vec_mul(&v);
                if span.insert(&w) {
                    words.push((w, m.mul(gm)));
                }
            }
        }
        if words.len() != d {
            return Err(Error::GeneratorsIncomplete { span: words.len(), dim: d });
        }
        let vmat = Mat::from_residue_rows(f, d, &words.iter().map(|(v, _)| v.clone()).collect::<Vec<_>>());
        let inv = vmat.inverse().expect("independent words");
        let action = (0..d)
            .map(|i| {
                let mut out = Mat::zeros(f, n, n);
                for (k, (_, m)) in words.iter().enumerate() {
                    out.add_scaled(m, inv.get(i, k));
                }
                out
            })
            .collect();
        Module::new(algebra, action)
    }

    pub(crate) fn from_action_unchecked(algebra: Arc<Algebra>, dim: usize, action: Vec<Mat>) -> Module {
        debug_assert_eq!(action.len(), algebra.dim());
        debug_assert!(action.iter().all(|a| a.rows() == dim && a.cols() == dim));
        Module(Arc::new(ModuleInner { algebra, dim, action, presentation: OnceLock::new(), stripped: OnceLock::new() }))
    }

    pub fn zero(algebra: Arc<Algebra>) -> Module {
        let f = algebra.field();
        let action = vec![Mat::zeros(f, 0, 0); algebra.dim()];
        Module::from_action_unchecked(algebra, 0, action)
    }

    /// The simple module `k = A / rad A`.
    pub fn simple(algebra: Arc<Algebra>) -> Module {
        let f = algebra.field();
        let action = (0..algebra.dim()).map(|i| Mat::from_fn(f, 1, 1, |_, _| u32::from(i == 0))).collect();
        Module::from_action_unchecked(algebra, 1, action)
    }

    /// `A_A` acting on itself by right multiplication.
    pub fn regular(algebra: Arc<Algebra>) -> Module {
        let action = (0..algebra.dim()).map(|i| algebra.right_mult(i).clone()).collect();
        let d = algebra.dim();
        Module::from_action_unchecked(algebra, d, action)
    }

    /// The free module `A^g`.
    pub fn free(algebra: Arc<Algebra>, g: usize) -> Module {
        let f = algebra.field();
        let d = algebra.dim();
        let action = (0..d)
            .map(|i| {
                let r = algebra.right_mult(i);
                Mat::block_diag(f, &vec![r; g])
            })
            .collect();
        Module::from_action_unchecked(algebra, g * d, action)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.0.algebra
    }
    #[inline]
    pub fn dim(&self) -> usize {
        self.0.dim
    }
    pub fn action(&self, i: usize) -> &Mat {
        &self.0.action[i]
    }
    pub fn actions(&self) -> &[Mat] {
        &self.0.action
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn same_algebra(&self, other: &Module) -> bool {
        self.algebra().same_as(other.algebra())
    }

    pub(crate) fn check_same_algebra(&self, other: &Module) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act_element(&self, a: &[u32]) -> Mat {
        let f = self.algebra().field();
        let mut out = Mat::zeros(f, self.dim(), self.dim());
        for (m, &c) in self.0.action.iter().zip(a) {
            out.add_scaled(m, c);
        }
        out
    }

    pub fn generator_actions(&self) -> Vec<&Mat> {
        self.algebra().generators().iter().map(|&g| self.action(g)).collect()
    }

    /// `M rad A`, spanned by the images of the algebra generators.
    pub fn radical(&self) -> Subspace {
        let f = self.algebra().field();
        let mut s = Subspace::new(f, self.dim());
        for g in self.generator_actions() {
            for i in 0..g.rows() {
                s.insert(g.row(i));
                if s.dim() == self.dim() {
                    return s;
                }
            }
        }
        s
    }

    /// `{v : v rad A = 0}`.
    pub fn socle(&self) -> Subspace {
        let f = self.algebra().field();
        let n = self.dim();
        let gens = self.generator_actions();
        if gens.is_empty() {
            return Subspace::full(f, n);
        }
        let stacked = Mat::hstack(f, &gens);
        Subspace::from_vecs(f, n, &kernel_basis(&stacked))
    }

    pub fn top_dim(&self) -> usize {
        self.dim() - self.radical().dim()
    }

    /// Dimensions of `M rad^i` for `i = 0, 1, ...` until zero.
    pub fn radical_series_dims(&self) -> Vec<usize> {
        let f = self.algebra().field();
        let mut out = vec![self.dim()];
        let mut layer = Subspace::full(f, self.dim());
        while layer.dim() > 0 {
            let mut next = Subspace::new(f, self.dim());
            for v in layer.basis() {
                for g in self.generator_actions() {
                    next.insert(&g.vec_mul(v));
                }
            }
            layer = next;
            out.push(layer.dim());
        }
        out
    }

    /// Dimensions of the socle series `soc^i(M)`.
    pub fn socle_series_dims(&self) -> Vec<usize> {
        let mut out = vec![0];
        let mut current = Subspace::new(self.algebra().field(), self.dim());
        while current.dim() < self.dim() {
            let (q, _) = self.quotient(&current);
            let s = q.socle();
            let mut next = current.clone();
            let comp = current.complement_coords();
            for v in s.basis() {
                let mut w = vec![0u32; self.dim()];
                for (k, &c) in comp.iter().enumerate() {
                    w[c] = v[k];
                }
                next.insert(&w);
            }
            current = next;
            out.push(current.dim());
        }
        out
    }

    /// Uniserial iff every radical layer is one-dimensional.
    pub fn is_uniserial(&self) -> bool {
        self.radical_series_dims().windows(2).all(|w| w[0] - w[1] <= 1)
    }

    /// The submodule spanned by an invariant subspace, in its echelon basis.
    pub fn submodule(&self, sub: &Subspace) -> Module {
        let b = sub.to_mat();
        let pivots = sub.pivots().to_vec();
        let action: Vec<Mat> = self
            .actions()
            .iter()
            .map(|a| {
                let img = b.mul(a);
                debug_assert!((0..img.rows()).all(|r| sub.contains(img.row(r))), "subspace is not a submodule");
                img.select_cols(&pivots)
            })
            .collect();
        Module::from_action_unchecked(self.algebra().clone(), sub.dim(), action)
    }

    /// `M / sub` with basis the non-pivot coordinates, and the quotient map.
    pub fn quotient(&self, sub: &Subspace) -> (Module, ModuleHom) {
        let f = self.algebra().field();
        let comp = sub.complement_coords();
        let n = self.dim();
        let mut pi = Mat::zeros(f, n, comp.len());
        for r in 0..n {
            let mut e = vec![0u32; n];
            e[r] = 1;
            sub.reduce_in_place(&mut e);
            for (k, &c) in comp.iter().enumerate() {
                pi.set(r, k, e[c]);
            }
        }
        let action = self.actions().iter().map(|a| a.select_rows(&comp).mul(&pi)).collect();
        let q = Module::from_action_unchecked(self.algebra().clone(), comp.len(), action);
        let hom = ModuleHom::new_unchecked(self.clone(), q.clone(), pi);
        (q, hom)
    }

    pub fn direct_sum(parts: &[&Module]) -> Result<Module> {
        let first = parts.first().ok_or_else(|| Error::InvalidModule("empty direct sum".into()))?;
        for p in parts {
            first.check_same_algebra(p)?;
        }
        let alg = first.algebra().clone();
        let f = alg.field();
        let action = (0..alg.dim())
            .map(|i| Mat::block_diag(f, &parts.iter().map(|m| m.action(i)).collect::<Vec<_>>()))
            .collect();
        let dim = parts.iter().map(|m| m.dim()).sum();
        Ok(Module::from_action_unchecked(alg, dim, action))
    }

    /// The same module after the change of basis `v -> v * p` (`p` invertible).
    pub fn change_basis(&self, p: &Mat) -> Result<Module> {
        let inv = p.inverse().ok_or_else(|| Error::InvalidModule("basis change is singular".into()))?;
        let action = self.actions().iter().map(|a| inv.mul(a).mul(p)).collect();
        Ok(Module::from_action_unchecked(self.algebra().clone(), self.dim(), action))
    }

    /// Vector-space dual with transposed action, a module over the opposite algebra.
    pub fn dual(&self) -> Module {
        let action = self.actions().iter().map(|a| a.transpose()).collect();
        Module::from_action_unchecked(self.algebra().opposite(), self.dim(), action)
    }

    /// Jordan type of the action of an element of the radical.
    pub fn jordan_type(&self, a: &[u32]) -> Result<Vec<usize>> {
        jordan_type_from_ranks(&self.act_element(a))
    }

    /// `self` split as a projective-free core plus free summands (cached).
    pub fn stripped(&self) -> Stripped {
        self.0.stripped.get_or_init(|| strip::StripCache::from(strip_projectives(self))).expand(self)
    }

    /// The projective-free core.
    pub fn core(&self) -> Module {
        self.stripped().core
    }

    pub fn presentation(&self) -> &Presentation {
        self.0.presentation.get_or_init(|| compute_presentation(self))
    }
}

fn compute_presentation(m: &Module) -> Presentation {
    let alg = m.algebra();
    let f = alg.field();
    let d = alg.dim();
    let n = m.dim();
    let top_coords = m.radical().complement_coords();
    let g = top_coords.len();
    let gens: Vec<Vec<u32>> = top_coords
        .iter()
        .map(|&c| {
            let mut v = vec![0u32; n];
            v[c] = 1;
            v
        })
        .collect();

    let mut epi = Mat::zeros(f, g * d, n);
    for (j, &c) in top_coords.iter().enumerate() {
        for i in 0..d {
            epi.row_mut(j * d + i).copy_from_slice(m.action(i).row(c));
        }
    }
    let solver = LeftSolver::new(&epi);
    debug_assert_eq!(solver.rank(), n, "top generators must generate");
    let section = solver.solve_mat(&Mat::identity(f, n)).expect("epi is surjective");

    let kernel = Subspace::from_vecs(f, g * d, &kernel_basis(&epi));
    // kernel * rad = sum over algebra generators of kernel * gen
    let mut krad = Subspace::new(f, g * d);
    for &gen in alg.generators() {
        let r = alg.right_mult(gen);
        for w in kernel.basis() {
            let mut img = vec![0u32; g * d];
            for j in 0..g {
                let part = r.vec_mul(&w[j * d..(j + 1) * d]);
                img[j * d..(j + 1) * d].copy_from_slice(&part);
            }
            krad.insert(&img);
        }
    }
    let mut kernel_gens = Vec::new();
    for w in kernel.basis() {
        if krad.insert(w) {
            kernel_gens.push(w.clone());
        }
    }
    Presentation { gens, epi, section, kernel, kernel_gens }
}

/// The simple module `k` (free function form).
pub fn simple_module(a: &Arc<Algebra>) -> Module {
    Module::simple(a.clone())
}

pub fn regular_module(a: &Arc<Algebra>) -> Module {
    Module::regular(a.clone())
}

/// Socle of a module as a subspace.
pub fn socle(m: &Module) -> Subspace {
    m.socle()
}

/// Projective cover `A^g -> M` with `g = dim M / M rad`.
pub fn projective_cover(m: &Module) -> (Module, ModuleHom) {
    let pres = m.presentation();
    let cover = Module::free(m.algebra().clone(), pres.rank());
    let epi = ModuleHom::new_unchecked(cover.clone(), m.clone(), pres.epi.clone());
    (cover, epi)
}

/// Vector-space dual (free function form).
pub fn dual(m: &Module) -> Module {
    m.dual()
}
