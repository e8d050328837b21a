//! Finite free algebras by structure constants, their fibers, ideals and
//! quotients, and the algebra definition file format.

mod fiber;
mod format;
mod structure;
mod subspace;

pub use fiber::{specialize, FiberAlgebra};
pub use format::{load_algebra, parse_algebra, serialize_algebra};
pub use structure::{ring_det, FiniteFreeAlgebra};
pub use subspace::{EchelonBuilder, Subspace};
