//! Dense exact linear algebra over runtime fields, lattice normal forms over
//! Euclidean rings, and gcd-free bases.

mod charpoly;
mod gcdfree;
mod hermite;
mod matrix;

pub use charpoly::{char_poly, eval_at_matrix, hessenberg};
pub use gcdfree::{gcd_free_basis, GcdFreeBasis};
pub use hermite::{
    clear_denominators, complete_basis, hermite_normal_form, hermite_with_transform, integer_rows,
    saturate, Hermite,
};
pub use matrix::{Echelon, Matrix};
