use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

/// Why a twist functor's standing hypotheses do not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypothesisFailure {
    #[error("restriction of T to R is {blocks:?}, not k^2 plus free blocks")]
    NotSpherical { blocks: Vec<usize> },
    #[error("no element y was supplied")]
    MissingY,
    #[error("y does not commute with x")]
    CommutationFailed,
    #[error("left multiplication by y does not preserve xA")]
    NotWellDefined,
    #[error("stable endomorphisms of T are not k[psi]/(psi^(n+1)) with psi = L_y: {0}")]
    EndoRingMismatch(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("nilpotency index {actual} exceeds the expected bound {expected}")]
    IndexExceeded { expected: usize, actual: usize },
    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),
    #[error("multiplication is not associative: (b{0}*b{1})*b{2} != b{0}*(b{1}*b{2})")]
    NotAssociative(usize, usize, usize),
    #[error("basis element 0 is not a two-sided unit: {0}")]
    NoUnit(String),
    #[error("algebra is not local: {0}")]
    NotLocal(String),
    #[error("listed generators span only {span} of {dim} dimensions")]
    GeneratorsIncomplete { span: usize, dim: usize },
    #[error("algebra not certified symmetric: no nondegenerate trace form found")]
    NotSymmetric,
    #[error("element is not in the radical")]
    NotInRadical,
    #[error("element is not a usable nilpotent: {0}")]
    NotNilpotentElement(String),
    #[error("{side} freeness over k[x] fails at power {power}: rank {actual}, expected {expected}")]
    FreenessFailed { side: Side, power: usize, expected: usize, actual: usize },
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("map is not surjective")]
    NotSurjective,
    #[error("stable endomorphism ring is not a truncated polynomial ring: {0}")]
    NotTruncatedPolynomial(String),
    #[error("twist hypothesis failed: {0}")]
    HypothesisFailed(#[from] HypothesisFailure),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("rewriting did not reach a normal form within {steps} steps")]
    RewriteDiverged { steps: usize },
    #[error("invalid string word: {0}")]
    InvalidWord(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("lifting through a projective cover failed")]
    LiftFailed,
}
