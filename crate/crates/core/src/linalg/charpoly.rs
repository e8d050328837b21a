//! Characteristic polynomials through reduction to upper Hessenberg form.

use super::matrix::Matrix;
use crate::arith::UPoly;
use crate::error::{Error, Result};

/// Similar upper Hessenberg matrix (zeros below the first subdiagonal).
pub fn hessenberg(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows(), m.cols()));
    }
    let k = m.field().clone();
    let n = m.rows();
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(p) = (j + 1..n).find(|&i| !k.is_zero(h.get(i, j))) else {
            continue;
        };
        if p != j + 1 {
            h.swap_rows(p, j + 1);
            for i in 0..n {
                let a = h.get(i, p).clone();
                let b = h.get(i, j + 1).clone();
                h.set(i, p, b);
                h.set(i, j + 1, a);
            }
        }
        let inv = k.inv(h.get(j + 1, j));
        for i in j + 2..n {
            let u = k.mul(h.get(i, j), &inv);
            if k.is_zero(&u) {
                continue;
            }
            // row_i -= u * row_{j+1}, then col_{j+1} += u * col_i
            for c in 0..n {
                let v = k.sub(h.get(i, c), &k.mul(&u, h.get(j + 1, c)));
                h.set(i, c, v);
            }
            for r in 0..n {
                let v = k.add(h.get(r, j + 1), &k.mul(&u, h.get(r, i)));
                h.set(r, j + 1, v);
            }
        }
    }
    Ok(h)
}

/// Monic characteristic polynomial `det(X - m)`.
pub fn char_poly(m: &Matrix) -> Result<UPoly> {
    let h = hessenberg(m)?;
    let k = m.field();
    let n = h.rows();
    let mut p: Vec<UPoly> = vec![UPoly::one(k)];
    for mm in 1..=n {
        let mut next = UPoly::linear(h.get(mm - 1, mm - 1), k).mul(&p[mm - 1], k);
        let mut t = k.one();
        for i in (1..mm).rev() {
            t = k.mul(&t, h.get(i, i - 1));
            if k.is_zero(&t) {
                break;
            }
            let c = k.mul(h.get(i - 1, mm - 1), &t);
            if !k.is_zero(&c) {
                next = next.sub(&p[i - 1].scale(&c, k), k);
            }
        }
        p.push(next);
    }
    Ok(p.pop().expect("nonempty"))
}

/// Evaluate a polynomial at a square matrix.
pub fn eval_at_matrix(f: &UPoly, m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows(), m.cols()));
    }
    let k = m.field();
    let mut acc = Matrix::zeros(k, m.rows(), m.cols());
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(m)?.add(&Matrix::identity(k, m.rows()).scale(c))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;

    #[test]
    fn small_examples() {
        let k = Field::Rationals;
        let x2 = UPoly::from_i64s(&[0, 0, 1], &k);
        assert_eq!(char_poly(&Matrix::zeros(&k, 2, 2)).unwrap(), x2);
        let xm1 = UPoly::from_i64s(&[-1, 1], &k);
        assert_eq!(char_poly(&Matrix::identity(&k, 2)).unwrap(), xm1.mul(&xm1, &k));
        let swap = Matrix::from_i64(&k, &[&[0, 1], &[1, 0]]);
        assert_eq!(char_poly(&swap).unwrap(), UPoly::from_i64s(&[-1, 0, 1], &k));
    }

    #[test]
    fn cayley_hamilton_dense() {
        let k = Field::Prime(5);
        let m = Matrix::from_i64(&k, &[&[1, 2, 3, 4], &[0, 1, 4, 2], &[3, 3, 0, 1], &[2, 0, 1, 1]]);
        let f = char_poly(&m).unwrap();
        assert_eq!(f.deg(), 4);
        assert!(eval_at_matrix(&f, &m).unwrap().is_zero());
    }

    #[test]
    fn not_square() {
        let k = Field::Rationals;
        assert_eq!(char_poly(&Matrix::zeros(&k, 2, 3)), Err(Error::NotSquare(2, 3)));
    }
}
