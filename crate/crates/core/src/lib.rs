//! Exact computations in stable module categories of local symmetric algebras
//! over prime fields: syzygies, stable Hom, and the spherical and `P^n` twist functors.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod exactla;
pub mod module;
pub mod stable;
pub mod suite;
pub mod twist;

pub use algebra::{analyze_subalgebra, find_symmetric_form, opposite, validate_algebra, Algebra, AlgebraJson};
pub use catalog::{catalog_by_name, CatalogAlgebra, StringWord};
pub use error::{Error, HypothesisFailure, Result, Side};
pub use exactla::{FieldSpec, JordanReport, Mat, Subspace};
pub use module::{hom_space, is_isomorphic, strip_projectives, HomSpace, IsoOptions, IsoVerdict, Module, ModuleHom};
pub use suite::{run_suite, Level, SuiteReport, SuiteResult, Verdict};
