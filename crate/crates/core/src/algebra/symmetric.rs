use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, Mat};

const RANDOM_CANDIDATES: usize = 1000;

/// A symmetric, nondegenerate linear functional: `lambda(ab) = lambda(ba)`
/// and the Gram matrix `lambda(b_i b_j)` is invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricForm {
    pub lambda: Vec<u32>,
}

impl SymmetricForm {
    pub fn eval(&self, a: &Algebra, v: &[u32]) -> u32 {
        let f = a.field();
        self.lambda.iter().zip(v).fold(0, |acc, (&l, &c)| f.mul_add(acc, l, c))
    }

    pub fn gram(&self, a: &Algebra) -> Mat {
        let d = a.dim();
        Mat::from_fn(a.field(), d, d, |i, j| self.eval(a, a.product(i, j)))
    }

    pub fn is_symmetric(&self, a: &Algebra) -> bool {
        let d = a.dim();
        (0..d).all(|i| (0..d).all(|j| self.eval(a, a.product(i, j)) == self.eval(a, a.product(j, i))))
    }
}

/// Search the trace-form space `{lambda : lambda([A, A]) = 0}` for a
/// nondegenerate member: first its echelon basis, then seeded random
/// combinations. Failure is "not certified", not a proof of non-symmetry.
pub fn find_symmetric_form(a: &Algebra, seed: u64) -> Result<SymmetricForm> {
    let f = a.field();
    let d = a.dim();
    let mut cols: Vec<Vec<u32>> = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let c: Vec<u32> = a.product(i, j).iter().zip(a.product(j, i)).map(|(&x, &y)| f.sub(x, y)).collect();
            if c.iter().any(|&v| v != 0) {
                cols.push(c);
            }
        }
    }
    let basis = if cols.is_empty() {
        (0..d).map(|i| a.basis_element(i)).collect()
    } else {
        // rows = coordinates k, columns = commutators
        let m = Mat::from_residue_rows(f, d, &cols).transpose();
        kernel_basis(&m)
    };
    if basis.is_empty() {
        return Err(Error::NotSymmetric);
    }

    let certify = |lambda: Vec<u32>| {
        let form = SymmetricForm { lambda };
        form.gram(a).is_invertible().then_some(form)
    };
    for v in &basis {
        if let Some(form) = certify(v.clone()) {
            return Ok(form);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_CANDIDATES {
        let mut lambda = vec![0u32; d];
        for v in &basis {
            let c = rng.gen_range(0..f.p());
            crate::exactla::axpy(f, &mut lambda, v, c);
        }
        if let Some(form) = certify(lambda) {
            return Ok(form);
        }
    }
    Err(Error::NotSymmetric)
}
