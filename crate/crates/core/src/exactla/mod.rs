//! Exact dense linear algebra over prime fields.

mod echelon;
mod field;
mod jordan;
mod mat;

pub use echelon::{LeftSolver, Subspace};
pub use field::FieldSpec;
pub use jordan::{jordan_chains, jordan_type_from_ranks, JordanReport};
pub use mat::{axpy, kernel_basis, scale_vec, Mat};
