use serde::Serialize;

use super::echelon::Subspace;
use super::mat::{kernel_basis, Mat};
use crate::error::{Error, Result};

/// Jordan type of a nilpotent operator `v -> v * N`, with one chain top per block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanReport {
    /// Block sizes, largest first.
    pub block_sizes: Vec<usize>,
    /// `chain_tops[i]` generates the block of size `block_sizes[i]`.
    #[serde(skip)]
    pub chain_tops: Vec<Vec<u32>>,
    /// Nilpotency index (largest block; 0 for the zero-dimensional space).
    pub index: usize,
}

impl JordanReport {
    pub fn count_of(&self, size: usize) -> usize {
        self.block_sizes.iter().filter(|&&s| s == size).count()
    }
}

/// Jordan chains of a nilpotent matrix acting on row vectors.
///
/// Blocks of each size are found from the kernels `ker N^i`; a new chain top
/// of length `s` is any vector of `ker N^s` outside `ker N^(s-1)` plus the
/// level-`s` parts of the longer chains already chosen. Candidates are taken
/// in reduced echelon order, so the output is deterministic.
pub fn jordan_chains(n: &Mat, expected_index: Option<usize>) -> Result<JordanReport> {
    assert!(n.is_square(), "jordan_chains needs a square matrix");
    let f = n.field();
    let dim = n.rows();

    let mut powers = vec![Mat::identity(f, dim)];
    while !powers.last().unwrap().is_zero() {
        if powers.len() > dim {
            return Err(Error::NotNilpotent);
        }
        let next = powers.last().unwrap().mul(n);
        powers.push(next);
    }
    let index = powers.len() - 1;
    if let Some(e) = expected_index {
        if index > e {
            return Err(Error::IndexExceeded { expected: e, actual: index });
        }
    }

    let kernels: Vec<Subspace> =
        powers.iter().map(|p| Subspace::from_vecs(f, dim, &kernel_basis(p))).collect();

    let mut chains: Vec<(Vec<u32>, usize)> = Vec::new();
    for s in (1..=index).rev() {
        let mut span = kernels[s - 1].clone();
        for (top, len) in &chains {
            span.insert(&powers[len - s].vec_mul(top));
        }
        for v in kernels[s].basis() {
            if span.insert(v) {
                chains.push((v.clone(), s));
            }
        }
    }

    let (chain_tops, block_sizes): (Vec<_>, Vec<_>) = chains.into_iter().unzip();
    debug_assert_eq!(block_sizes.iter().sum::<usize>(), dim);
    Ok(JordanReport { block_sizes, chain_tops, index })
}

/// Jordan type from the rank sequence alone: blocks of size `>= i` number
/// `rank(N^(i-1)) - rank(N^i)`.
pub fn jordan_type_from_ranks(n: &Mat) -> Result<Vec<usize>> {
    let dim = n.rows();
    let mut ranks = vec![dim];
    let mut p = Mat::identity(n.field(), dim);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > dim + 1 {
            return Err(Error::NotNilpotent);
        }
        p = p.mul(n);
        ranks.push(p.rank());
    }
    // at_least[i] = #blocks of size >= i
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut sizes = Vec::new();
    for i in (1..=at_least.len()).rev() {
        let exact = at_least[i - 1] - at_least.get(i).copied().unwrap_or(0);
        sizes.extend(std::iter::repeat_n(i, exact));
    }
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;

    fn jordan_block(f: FieldSpec, sizes: &[usize]) -> Mat {
        let dim = sizes.iter().sum();
        let mut m = Mat::zeros(f, dim, dim);
        let mut off = 0;
        for &s in sizes {
            for i in 0..s.saturating_sub(1) {
                m.set(off + i, off + i + 1, 1);
            }
            off += s;
        }
        m
    }

    #[test]
    fn zero_matrix_is_all_ones() {
        let f = FieldSpec::new(3).unwrap();
        let r = jordan_chains(&Mat::zeros(f, 4, 4), None).unwrap();
        assert_eq!(r.block_sizes, vec![1, 1, 1, 1]);
        assert_eq!(r.index, 1);
    }

    #[test]
    fn single_block() {
        let f = FieldSpec::new(2).unwrap();
        let r = jordan_chains(&jordan_block(f, &[3]), Some(3)).unwrap();
        assert_eq!(r.block_sizes, vec![3]);
        assert_eq!(r.index, 3);
        assert_eq!(r.chain_tops, vec![vec![1, 0, 0]]);
    }

    #[test]
    fn not_nilpotent() {
        let f = FieldSpec::new(5).unwrap();
        assert!(matches!(jordan_chains(&Mat::identity(f, 2), None), Err(Error::NotNilpotent)));
    }

    #[test]
    fn index_exceeded() {
        let f = FieldSpec::new(5).unwrap();
        assert!(matches!(
            jordan_chains(&jordan_block(f, &[3, 1]), Some(2)),
            Err(Error::IndexExceeded { expected: 2, actual: 3 })
        ));
    }

    #[test]
    fn rank_route_agrees() {
        let f = FieldSpec::new(7).unwrap();
        let m = jordan_block(f, &[4, 2, 2, 1]);
        assert_eq!(jordan_type_from_ranks(&m).unwrap(), vec![4, 2, 2, 1]);
        assert_eq!(jordan_chains(&m, None).unwrap().block_sizes, vec![4, 2, 2, 1]);
    }
}
