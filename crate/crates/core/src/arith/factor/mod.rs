//! Factorization of integers and of univariate polynomials, and root finding.

mod finite;
mod integer;
mod rational;
mod roots;

pub use finite::{factor_finite, random_scalar};
pub use integer::{factor_integer, is_prime, prime_divisors};
pub use rational::{factor_rational, is_irreducible_rational, primitive_integer};
pub use roots::function_field_roots;

use super::field::{Field, Scalar};
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Default degree budget for factorization over Q.
pub const DEFAULT_MAX_DEGREE: usize = 32;

/// Monic irreducible factors with multiplicities over Q or a finite field.
pub fn factor_upoly(f: &UPoly, k: &Field, max_degree: usize) -> Result<Vec<(UPoly, usize)>> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    match k {
        Field::Rationals => factor_rational(f, max_degree),
        Field::Prime(_) | Field::Galois(_) => Ok(factor_finite(f, k)),
        Field::Function(_) => Err(Error::UnsupportedFactorization(format!(
            "univariate factorization over {k}"
        ))),
    }
}

pub fn is_irreducible(f: &UPoly, k: &Field, max_degree: usize) -> Result<bool> {
    if f.deg() == 0 {
        return Ok(false);
    }
    let fs = factor_upoly(f, k, max_degree)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

/// Distinct roots in Q or a finite field, in canonical order.
pub fn roots_in_base(f: &UPoly, k: &Field, max_degree: usize) -> Result<Vec<Scalar>> {
    if f.deg() == 0 {
        return Ok(Vec::new());
    }
    let mut out: Vec<Scalar> = factor_upoly(f, k, max_degree)?
        .into_iter()
        .filter(|(g, _)| g.deg() == 1)
        .map(|(g, _)| k.neg(&g.coeffs()[0]))
        .collect();
    out.sort_by(|a, b| k.cmp(a, b));
    Ok(out)
}

/// Distinct roots in any supported field. Over function fields the search
/// is a divisor enumeration and may miss roots when its budget runs out.
pub fn roots(f: &UPoly, k: &Field, max_degree: usize) -> Result<Vec<Scalar>> {
    match k {
        Field::Function(_) => {
            let mut r = function_field_roots(f, k, max_degree)?;
            r.sort_by(|a, b| k.cmp(a, b));
            Ok(r)
        }
        _ => roots_in_base(f, k, max_degree),
    }
}
