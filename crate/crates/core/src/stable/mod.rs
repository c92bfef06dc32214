//! The stable module category: syzygies, stable Hom, endomorphism rings,
//! minimal epimorphisms and stable isomorphism.

mod hom;
mod minimize;
mod syzygy;

use serde::Serialize;

pub use hom::{certifies_truncated, ext1, stable_endo_structure, stable_hom, StableDims, StableEndoStructure, StableHomSpace};
pub use minimize::{minimize_epi, MinimizedEpi};
pub use syzygy::{
    cone, core_map, cosyzygy, injective_envelope, omega_power, syzygy, syzygy_data, transport_map, Cone, Shift,
    Syzygy,
};

use crate::error::Result;
use crate::module::{is_isomorphic, IsoOptions, IsoVerdict, Module};

/// Class of a module in the stable Grothendieck group `Z/dZ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GrothendieckClass {
    pub value: usize,
    pub modulus: usize,
}

pub fn grothendieck_class(m: &Module) -> GrothendieckClass {
    let d = m.algebra().dim();
    GrothendieckClass { value: m.dim() % d, modulus: d }
}

impl GrothendieckClass {
    pub fn neg(self) -> Self {
        GrothendieckClass { value: (self.modulus - self.value) % self.modulus, ..self }
    }
}

/// `is_isomorphic` on projective-free cores. When the bounded search is
/// inconclusive and both cores have stable endomorphism ring `k`, decide by
/// whether some composite `M -> N -> M` is stably nonzero.
pub fn is_stably_isomorphic(m: &Module, n: &Module, opts: &IsoOptions) -> Result<IsoVerdict> {
    m.check_same_algebra(n)?;
    let (cm, cn) = (m.core(), n.core());
    let verdict = is_isomorphic(&cm, &cn, opts)?;
    if verdict != IsoVerdict::Unknown {
        return Ok(verdict);
    }
    let em = stable_hom(&cm, &cm)?;
    let en = stable_hom(&cn, &cn)?;
    if em.stable_dim() != 1 || en.stable_dim() != 1 {
        return Ok(IsoVerdict::Unknown);
    }
    let there = stable_hom(&cm, &cn)?;
    let back = stable_hom(&cn, &cm)?;
    for f in there.reps() {
        for g in back.reps() {
            let fg = f.mat.mul(&g.mat);
            if !em.is_projective_map(&fg) {
                return Ok(IsoVerdict::StablyInverse(f.mat.clone(), g.mat.clone()));
            }
        }
    }
    Ok(IsoVerdict::NotIsomorphic(
        "both stable endomorphism rings are k and every composite M -> N -> M factors through a projective".into(),
    ))
}
