//! Exact arithmetic: fields, polynomials, base rings and their primes.

pub mod factor;
pub mod field;
pub mod gcd;
pub mod modp;
pub mod parse;
pub mod poly;
pub mod prime;
pub mod ring;
pub mod upoly;

pub use field::{Field, Scalar};
pub use poly::Poly;
pub use prime::{PrimeKind, PrimeSpec, RingMap};
pub use ring::{Coefficients, Ring};
pub use upoly::UPoly;
