use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::exactla::Subspace;
use crate::module::Module;
use crate::stable::omega_power;
use crate::twist::TwistContext;

fn random_radical_element(a: &Algebra, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let p = a.field().p();
    let mut v: Vec<u32> = (0..a.dim()).map(|_| rng.gen_range(0..p)).collect();
    v[0] = 0;
    v
}

/// `A^g / (relations)` for one or two generators and one or two random relations
/// in the radical, reduced to its projective-free core; never zero.
pub fn random_module(a: &Arc<Algebra>, rng: &mut ChaCha8Rng) -> Module {
    let d = a.dim();
    let f = a.field();
    for _ in 0..32 {
        let g = rng.gen_range(1..=2usize);
        let rels = rng.gen_range(1..=2usize);
        let free = Module::free(a.clone(), g);
        let mut sub = Subspace::new(f, g * d);
        for _ in 0..rels {
            let w: Vec<u32> = (0..g).flat_map(|_| random_radical_element(a, rng)).collect();
            for i in 0..d {
                sub.insert(&free.action(i).vec_mul(&w));
            }
        }
        let (q, _) = free.quotient(&sub);
        let core = q.core();
        if core.dim() > 0 {
            return core;
        }
    }
    Module::simple(a.clone())
}

/// A module that is free over `R` but not projective: a cyclic module `A/eA`
/// with free restriction, shifted by a random power of `Ω`.
pub fn relatively_projective_module(ctx: &TwistContext, rng: &mut ChaCha8Rng) -> Option<Module> {
    let a = ctx.algebra();
    let reg = Module::regular(a.clone());
    for _ in 0..200 {
        let e = random_radical_element(a, rng);
        let (cyclic, _) = reg.quotient(&a.left_mult_by(&e).row_space());
        let report = ctx.restriction_report(&cyclic).ok()?;
        if !report.relatively_projective {
            continue;
        }
        let core = cyclic.core();
        if core.dim() == 0 {
            continue;
        }
        let shift = rng.gen_range(-1..=1);
        return Some(omega_power(&core, shift));
    }
    None
}
