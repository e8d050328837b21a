//! Hermite normal forms and saturation of row lattices over Euclidean rings
//! (`Z`, `k[x]`, and fields as a degenerate case).

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::matrix::Matrix;
use crate::arith::{Poly, Ring, Scalar};
use crate::error::{Error, Result};

/// Row Hermite form `H = U A` with `U` unimodular.
#[derive(Clone, Debug)]
pub struct Hermite {
    /// All rows of `H`; rows at index `rank` and beyond are zero.
    pub rows: Vec<Vec<Poly>>,
    pub transform: Vec<Vec<Poly>>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

fn require_euclidean(ring: &Ring) -> Result<()> {
    if ring.is_euclidean() {
        Ok(())
    } else {
        Err(Error::UnsupportedRing(format!(
            "Hermite normal form needs a Euclidean ring, got {ring}"
        )))
    }
}

fn int_value(a: &Poly, ring: &Ring) -> BigInt {
    match a.constant_value(&ring.coefficient_field()) {
        Scalar::Rat(q) => q.to_integer(),
        _ => unreachable!("integer ring element"),
    }
}

/// Euclidean size: absolute value over `Z`, degree over `k[x]`, zero over a field.
fn size_cmp(ring: &Ring, a: &Poly, b: &Poly) -> Ordering {
    if ring.has_integer_coefficients() {
        int_value(a, ring).abs().cmp(&int_value(b, ring).abs())
    } else {
        a.total_degree().cmp(&b.total_degree())
    }
}

/// Quotient for reduction: floor division over `Z` (remainders in `[0, b)`
/// for `b > 0`), polynomial division otherwise.
fn quotient(ring: &Ring, a: &Poly, b: &Poly) -> Poly {
    let k = ring.coefficient_field();
    if ring.has_integer_coefficients() {
        let q = int_value(a, ring).div_floor(&int_value(b, ring));
        ring.from_bigint(&q)
    } else if ring.nvars() == 0 {
        Poly::constant(k.div(&a.constant_value(&k), &b.constant_value(&k)), 0, &k)
    } else {
        let (q, _) = a.to_upoly(0, &k).divrem(&b.to_upoly(0, &k), &k);
        Poly::from_upoly(&q, 0, 1, &k)
    }
}

/// Unit `u` with `u * a` normalized (positive or monic).
fn normalizing_unit(ring: &Ring, a: &Poly) -> Poly {
    let k = ring.coefficient_field();
    if ring.has_integer_coefficients() {
        ring.from_i64(if int_value(a, ring).is_negative() { -1 } else { 1 })
    } else {
        Poly::constant(k.inv(a.leading_coeff().expect("nonzero")), ring.nvars(), &k)
    }
}

fn row_axpy(ring: &Ring, dst: &mut [Poly], q: &Poly, src: &[Poly]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = ring.sub(d, &ring.mul(q, s));
        }
    }
}

/// Hermite normal form with the unimodular transform.
pub fn hermite_with_transform(ring: &Ring, rows: &[Vec<Poly>], ncols: usize) -> Result<Hermite> {
    require_euclidean(ring)?;
    let m = rows.len();
    let mut a: Vec<Vec<Poly>> = rows.to_vec();
    let mut u: Vec<Vec<Poly>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
        .collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        if r == m {
            break;
        }
        loop {
            let best = (r..m)
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| size_cmp(ring, &a[i][c], &a[j][c]));
            let Some(best) = best else { break };
            a.swap(r, best);
            u.swap(r, best);
            let mut done = true;
            for i in r + 1..m {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = quotient(ring, &a[i][c], &a[r][c]);
                let (top, rest) = a.split_at_mut(i);
                row_axpy(ring, &mut rest[0], &q, &top[r]);
                let (top, rest) = u.split_at_mut(i);
                row_axpy(ring, &mut rest[0], &q, &top[r]);
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[r][c].is_zero() {
            continue;
        }
        let unit = normalizing_unit(ring, &a[r][c]);
        for x in a[r].iter_mut().chain(u[r].iter_mut()) {
            *x = ring.mul(x, &unit);
        }
        for i in 0..r {
            if a[i][c].is_zero() {
                continue;
            }
            let q = quotient(ring, &a[i][c], &a[r][c]);
            let (top, rest) = a.split_at_mut(r);
            row_axpy(ring, &mut top[i], &q, &rest[0]);
            let (top, rest) = u.split_at_mut(r);
            row_axpy(ring, &mut top[i], &q, &rest[0]);
        }
        pivots.push(c);
        r += 1;
    }
    Ok(Hermite {
        rows: a,
        transform: u,
        rank: r,
        pivots,
    })
}

/// Canonical basis (nonzero Hermite rows) of the row lattice.
pub fn hermite_normal_form(ring: &Ring, rows: &[Vec<Poly>], ncols: usize) -> Result<Vec<Vec<Poly>>> {
    let mut h = hermite_with_transform(ring, rows, ncols)?;
    h.rows.truncate(h.rank);
    Ok(h.rows)
}

/// Scale a fraction-field vector by a common denominator so it lies in `R^n`.
pub fn clear_denominators(ring: &Ring, v: &[Scalar]) -> Vec<Poly> {
    let frac = ring.fraction_field();
    let d = v
        .iter()
        .fold(ring.one(), |acc, a| ring.lcm(&acc, &ring.denominator_ideal(a)));
    let d = ring.to_fraction(&d);
    v.iter()
        .map(|a| ring.from_fraction(&frac.mul(a, &d)).expect("denominators cleared"))
        .collect()
}

fn to_fraction_matrix(ring: &Ring, rows: &[Vec<Poly>], ncols: usize) -> Matrix {
    let frac = ring.fraction_field();
    let data: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| r.iter().map(|a| ring.to_fraction(a)).collect())
        .collect();
    Matrix::from_row_vectors(&frac, ncols, &data)
}

/// Hermite basis of `(L tensor K) ∩ R^n` for the row lattice `L`.
pub fn saturate(ring: &Ring, rows: &[Vec<Poly>], ncols: usize) -> Result<Vec<Vec<Poly>>> {
    require_euclidean(ring)?;
    let kernel = to_fraction_matrix(ring, rows, ncols).kernel_basis();
    if kernel.is_empty() {
        let id: Vec<Vec<Poly>> = (0..ncols)
            .map(|i| (0..ncols).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
            .collect();
        return Ok(id);
    }
    // x lies in the saturation iff x N = 0, where the columns of N span the kernel.
    let cols: Vec<Vec<Poly>> = kernel.iter().map(|v| clear_denominators(ring, v)).collect();
    let n_rows: Vec<Vec<Poly>> = (0..ncols)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let h = hermite_with_transform(ring, &n_rows, cols.len())?;
    let left_kernel: Vec<Vec<Poly>> = h.transform[h.rank..].to_vec();
    hermite_normal_form(ring, &left_kernel, ncols)
}

/// A unimodular basis of `R^n` whose first rows span the given saturated
/// lattice basis.
pub fn complete_basis(ring: &Ring, basis: &[Vec<Poly>], ncols: usize) -> Result<Vec<Vec<Poly>>> {
    require_euclidean(ring)?;
    let r = basis.len();
    let transposed: Vec<Vec<Poly>> = (0..ncols)
        .map(|j| basis.iter().map(|row| row[j].clone()).collect())
        .collect();
    let h = hermite_with_transform(ring, &transposed, r)?;
    if h.rank != r {
        return Err(Error::DimensionMismatch("basis rows are dependent".into()));
    }
    // basis * U^T = [T | 0], so the rows of (U^T)^-1 start with a basis of the lattice.
    let ut: Vec<Vec<Poly>> = (0..ncols)
        .map(|i| (0..ncols).map(|j| h.transform[j][i].clone()).collect())
        .collect();
    let inv = to_fraction_matrix(ring, &ut, ncols).inverse()?;
    let out: Option<Vec<Vec<Poly>>> = inv
        .row_vectors()
        .iter()
        .map(|row| row.iter().map(|a| ring.from_fraction(a)).collect())
        .collect();
    let out = out.ok_or_else(|| Error::DimensionMismatch("transform is not unimodular".into()))?;
    // The span of the first r rows is the lattice only when it is saturated.
    let first = hermite_normal_form(ring, &out[..r], ncols)?;
    if first != hermite_normal_form(ring, basis, ncols)? {
        return Err(Error::DimensionMismatch("lattice is not saturated".into()));
    }
    Ok(out)
}

/// Rows of small integers as ring elements.
pub fn integer_rows(ring: &Ring, rows: &[&[i64]]) -> Vec<Vec<Poly>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| ring.from_i64(x)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturation_examples() {
        let z = Ring::integers();
        let id = integer_rows(&z, &[&[1, 0], &[0, 1]]);
        assert_eq!(saturate(&z, &integer_rows(&z, &[&[2, 0], &[0, 2]]), 2).unwrap(), id);
        assert_eq!(
            saturate(&z, &integer_rows(&z, &[&[2, 2]]), 2).unwrap(),
            integer_rows(&z, &[&[1, 1]])
        );
        let qx = Ring::parse("Q[x]").unwrap();
        let x = qx.var(0);
        let rows = vec![vec![x.clone(), qx.mul(&x, &x)]];
        assert_eq!(saturate(&qx, &rows, 2).unwrap(), vec![vec![qx.one(), x]]);
    }

    #[test]
    fn hermite_is_canonical() {
        let z = Ring::integers();
        let a = hermite_normal_form(&z, &integer_rows(&z, &[&[4, 6], &[2, 3], &[0, 5]]), 2).unwrap();
        let b = hermite_normal_form(&z, &integer_rows(&z, &[&[2, 8], &[0, -5]]), 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, integer_rows(&z, &[&[2, 3], &[0, 5]]));
    }

    #[test]
    fn completion_over_z() {
        let z = Ring::integers();
        let basis = integer_rows(&z, &[&[1, 2, 3]]);
        let p = complete_basis(&z, &basis, 3).unwrap();
        assert_eq!(hermite_normal_form(&z, &p[..1], 3).unwrap(), basis);
        assert_eq!(hermite_normal_form(&z, &p, 3).unwrap(), integer_rows(&z, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
    }

    #[test]
    fn two_variable_ring_rejected() {
        let r = Ring::parse("Q[x,y]").unwrap();
        assert!(matches!(saturate(&r, &[], 1), Err(Error::UnsupportedRing(_))));
    }
}
