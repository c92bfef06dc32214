use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{LeftSolver, Mat, Subspace};
use crate::module::{Module, ModuleHom, Stripped};

/// `Ω(M)` together with the data used to build it.
#[derive(Clone, Debug)]
pub struct Syzygy {
    /// The input split into core and free part.
    pub stripped: Stripped,
    /// Rank of the projective cover of the core.
    pub cover_rank: usize,
    pub omega: Module,
    /// `dim Ω x (cover_rank * d)`: the kernel inside the cover.
    pub inclusion: Mat,
}

/// Direction of transport along syzygies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shift {
    Omega,
    OmegaInverse,
}

pub fn syzygy_data(m: &Module) -> Syzygy {
    let stripped = m.stripped();
    let core = &stripped.core;
    let pres = core.presentation();
    let g = pres.rank();
    let omega = Module::free(core.algebra().clone(), g).submodule(&pres.kernel);
    Syzygy { cover_rank: g, omega, inclusion: pres.kernel.to_mat(), stripped }
}

/// Kernel of the projective cover of the projective-free core of `m`.
pub fn syzygy(m: &Module) -> Module {
    syzygy_data(m).omega
}

fn rebase(m: &Module, algebra: &Arc<Algebra>) -> Module {
    debug_assert!(m.algebra().same_as(algebra));
    Module::from_action_unchecked(algebra.clone(), m.dim(), m.actions().to_vec())
}

fn dual_over(m: &Module, algebra: &Arc<Algebra>) -> Module {
    rebase(&m.dual(), algebra)
}

/// `Ω^-1(M) = D Ω D(M)`, with `D` the vector-space dual.
pub fn cosyzygy(m: &Module) -> Module {
    let core = m.core();
    let omega = syzygy(&core.dual());
    dual_over(&omega, m.algebra())
}

/// `Ω^k(M)` for any integer `k`; `k = 0` gives the projective-free core.
pub fn omega_power(m: &Module, k: i32) -> Module {
    let mut out = m.core();
    for _ in 0..k.unsigned_abs() {
        out = if k > 0 { syzygy(&out) } else { cosyzygy(&out) };
    }
    out
}

/// Restrict `f` to the projective-free cores of its source and target.
pub fn core_map(f: &ModuleHom) -> ModuleHom {
    let s = f.source.stripped();
    let t = f.target.stripped();
    let mat = s.inclusion.mul(&f.mat).mul(&t.projection);
    ModuleHom::new_unchecked(s.core, t.core, mat)
}

fn omega_map(f: &ModuleHom) -> Result<ModuleHom> {
    let f = core_map(f);
    let sm = syzygy_data(&f.source);
    let sn = syzygy_data(&f.target);
    let pm = f.source.presentation();
    let pn = f.target.presentation();
    let alg = f.source.algebra();
    let fld = alg.field();
    let d = alg.dim();
    let cover_n = Module::free(alg.clone(), sn.cover_rank);

    let images = pm.epi.mul(&f.mat);
    let solver = LeftSolver::new(&pn.epi);
    let mut lift = Mat::zeros(fld, sm.cover_rank * d, sn.cover_rank * d);
    for j in 0..sm.cover_rank {
        let w = solver.solve(images.row(j * d)).ok_or(Error::LiftFailed)?;
        for i in 0..d {
            let row = cover_n.action(i).vec_mul(&w);
            lift.row_mut(j * d + i).copy_from_slice(&row);
        }
    }
    let restricted = sm.inclusion.mul(&lift);
    let mat = restricted.select_cols(pn.kernel.pivots());
    debug_assert!((0..restricted.rows()).all(|r| pn.kernel.contains(restricted.row(r))));
    Ok(ModuleHom::new_unchecked(sm.omega, sn.omega, mat))
}

/// `Ω(f)` or `Ω^-1(f)` between the (co)syzygies of the cores.
pub fn transport_map(f: &ModuleHom, shift: Shift) -> Result<ModuleHom> {
    f.source.check_same_algebra(&f.target)?;
    match shift {
        Shift::Omega => omega_map(f),
        Shift::OmegaInverse => {
            let f = core_map(f);
            let df = ModuleHom::new_unchecked(f.target.dual(), f.source.dual(), f.mat.transpose());
            let g = omega_map(&df)?;
            let alg = f.source.algebra();
            Ok(ModuleHom::new_unchecked(dual_over(&g.target, alg), dual_over(&g.source, alg), g.mat.transpose()))
        }
    }
}

/// An injective envelope `X -> I(X)`, the dual of the projective cover of `D X`.
pub fn injective_envelope(x: &Module) -> ModuleHom {
    let dx = x.dual();
    let pres = dx.presentation();
    let cover = Module::free(dx.algebra().clone(), pres.rank());
    let envelope = dual_over(&cover, x.algebra());
    ModuleHom::new_unchecked(x.clone(), envelope, pres.epi.transpose())
}

/// The cone of `f: X -> Y`, realized as the cokernel of `X -> Y ⊕ I(X)`.
#[derive(Clone, Debug)]
pub struct Cone {
    pub module: Module,
    /// `Y -> cone`.
    pub from_target: ModuleHom,
    /// `I(X) -> cone`.
    pub from_envelope: ModuleHom,
    /// Coordinates of `Y ⊕ I(X)` whose classes form the basis of the cone.
    pub basis_coords: Vec<usize>,
}

pub fn cone(f: &ModuleHom) -> Result<Cone> {
    f.source.check_same_algebra(&f.target)?;
    let alg = f.source.algebra();
    let fld = alg.field();
    let iota = injective_envelope(&f.source);
    let (ny, ni) = (f.target.dim(), iota.target.dim());
    let sum = Module::direct_sum(&[&f.target, &iota.target])?;
    let joined = Mat::hstack(fld, &[&f.mat, &iota.mat]);
    let image = Subspace::from_vecs(fld, ny + ni, &joined.row_vecs());
    let basis_coords = image.complement_coords();
    let (module, pi) = sum.quotient(&image);
    let from_target = ModuleHom::new_unchecked(f.target.clone(), module.clone(), pi.mat.block(0, 0, ny, module.dim()));
    let from_envelope =
        ModuleHom::new_unchecked(iota.target.clone(), module.clone(), pi.mat.block(ny, 0, ni, module.dim()));
    Ok(Cone { module, from_target, from_envelope, basis_coords })
}
