use super::Algebra;
use crate::error::{Error, Result, Side};
use crate::exactla::{jordan_chains, Mat};

/// The subalgebra `R = k[x]`, `x^m = 0`, together with the data that makes
/// `A` a free `R`-module on both sides.
#[derive(Clone, Debug)]
pub struct SubalgebraData {
    pub x: Vec<u32>,
    /// Nilpotency index of `x`.
    pub m: usize,
    /// Free rank `d / m`.
    pub r: usize,
    /// `a_j` with `{x^t a_j}` a basis of `A` (A free as a left R-module).
    pub left_free_basis: Vec<Vec<u32>>,
    /// `a'_j` with `{a'_j x^t}` a basis of `A`.
    pub right_free_basis: Vec<Vec<u32>>,
    /// `right_coeff_table[i][j]` expands `a_j b_i` in the basis `x^t a_l`,
    /// coordinate `l*m + t`; the `m` coordinates for fixed `l` are the
    /// polynomial `r_{lj}(b_i)`.
    pub right_coeff_table: Vec<Vec<Vec<u32>>>,
    /// Rank sequences `rank(L_x^i)`, `rank(R_x^i)` for `i = 0..=m`.
    pub left_ranks: Vec<usize>,
    pub right_ranks: Vec<usize>,
    left_coords: Mat,
}

impl SubalgebraData {
    /// Coordinates of `v` in the basis `{x^t a_l}` (index `l*m + t`).
    pub fn expand_left(&self, v: &[u32]) -> Vec<u32> {
        self.left_coords.vec_mul(v)
    }

    /// Coefficients of the polynomial `r_{lj}(b_i)`.
    pub fn coeff_poly(&self, i: usize, j: usize, l: usize) -> &[u32] {
        &self.right_coeff_table[i][j][l * self.m..(l + 1) * self.m]
    }
}

/// Certify that `A` is free over `k[x]` on both sides and record free bases.
pub fn analyze_subalgebra(a: &Algebra, x: &[u32]) -> Result<SubalgebraData> {
    let d = a.dim();
    if x.len() != d {
        return Err(Error::BadParameter(format!("element has {} coordinates, algebra has dimension {d}", x.len())));
    }
    if !a.in_radical(x) {
        return Err(Error::NotInRadical);
    }
    if Algebra::is_zero(x) {
        return Err(Error::NotNilpotentElement("x is zero".into()));
    }
    let mut m = 1;
    let mut power = x.to_vec();
    while !Algebra::is_zero(&power) {
        if m > a.loewy_length() {
            return Err(Error::NotNilpotentElement("x^m never vanishes".into()));
        }
        power = a.mul(&power, x);
        m += 1;
    }

    let lx = a.left_mult_by(x);
    let rx = a.right_mult_by(x);
    let left_ranks = freeness_certificate(&lx, d, m, Side::Left)?;
    let right_ranks = freeness_certificate(&rx, d, m, Side::Right)?;

    let left = jordan_chains(&lx, Some(m))?;
    let right = jordan_chains(&rx, Some(m))?;
    debug_assert!(left.block_sizes.iter().all(|&s| s == m));
    debug_assert!(right.block_sizes.iter().all(|&s| s == m));
    let r = d / m;

    let mut rows = Vec::with_capacity(d);
    for top in &left.chain_tops {
        let mut v = top.clone();
        for _ in 0..m {
            rows.push(v.clone());
            v = lx.vec_mul(&v);
        }
    }
    let basis = Mat::from_residue_rows(a.field(), d, &rows);
    let left_coords = basis.inverse().expect("Jordan chains form a basis");

    let right_coeff_table = (0..d)
        .map(|i| {
            left.chain_tops
                .iter()
                .map(|aj| left_coords.vec_mul(&a.right_mult(i).vec_mul(aj)))
                .collect()
        })
        .collect();

    Ok(SubalgebraData {
        x: x.to_vec(),
        m,
        r,
        left_free_basis: left.chain_tops,
        right_free_basis: right.chain_tops,
        right_coeff_table,
        left_ranks,
        right_ranks,
        left_coords,
    })
}

fn freeness_certificate(n: &Mat, d: usize, m: usize, side: Side) -> Result<Vec<usize>> {
    let mut ranks = Vec::with_capacity(m + 1);
    let mut p = Mat::identity(n.field(), d);
    for i in 0..=m {
        let rank = p.rank();
        if rank * m != d * (m - i) {
            return Err(Error::FreenessFailed { side, power: i, expected: d * (m - i) / m, actual: rank });
        }
        ranks.push(rank);
        p = p.mul(n);
    }
    Ok(ranks)
}
