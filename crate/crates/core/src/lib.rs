//! Exact decomposition matrices, Jacobson radicals and decomposition strata
//! for finite free algebras given by structure constants.

pub mod algebra;
pub mod analysis;
pub mod arith;
pub mod bn;
pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod linalg;
pub mod options;
pub mod rep;
pub mod strata;

pub use error::{Error, ErrorClass, Result};
pub use options::Options;
