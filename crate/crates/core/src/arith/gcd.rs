//! Greatest common divisors of sparse polynomials over a field.
//!
//! Univariate inputs use Euclid on the dense representation. Bivariate
//! inputs are viewed in `k[x][y]` and run through a primitive
//! pseudo-remainder sequence with univariate contents.

use super::field::Field;
use super::poly::Poly;
use super::upoly::UPoly;

/// Monic (in degree-lex order) gcd; zero only when both inputs are zero.
pub fn poly_gcd(a: &Poly, b: &Poly, k: &Field) -> Poly {
    let n = a.nvars();
    if a.is_zero() {
        return b.monic(k);
    }
    if b.is_zero() {
        return a.monic(k);
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(n, k);
    }
    if a == b {
        return a.monic(k);
    }
    match n {
        1 => {
            let g = a.to_upoly(0, k).gcd(&b.to_upoly(0, k), k);
            Poly::from_upoly(&g, 0, 1, k)
        }
        2 => bivariate_gcd(a, b, k),
        _ => unreachable!("constant polynomials handled above"),
    }
}

/// Coefficients in `y` as univariate polynomials in `x`.
type Nested = Vec<UPoly>;

fn to_nested(p: &Poly, k: &Field) -> Nested {
    p.coefficients_in(1, k)
        .into_iter()
        .map(|c| c.remove_var(1).to_upoly(0, k))
        .collect()
}

fn from_nested(v: &Nested, k: &Field) -> Poly {
    let mut acc = Poly::zero(2);
    for (e, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let terms = Poly::from_upoly(c, 0, 1, k)
            .terms()
            .iter()
            .map(|(m, s)| ([m[0], e as u32], s.clone()))
            .collect();
        acc = acc.add(&Poly::from_terms(2, terms, k), k);
    }
    acc
}

fn trim(v: &mut Nested) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn content(v: &Nested, k: &Field) -> UPoly {
    let mut g = UPoly::zero();
    for c in v {
        g = g.gcd(c, k);
        if g.is_constant() && !g.is_zero() {
            break;
        }
    }
    g
}

fn primitive(v: &Nested, k: &Field) -> (UPoly, Nested) {
    let c = content(v, k);
    let pp = v
        .iter()
        .map(|x| x.div_exact(&c, k).expect("content divides"))
        .collect();
    (c, pp)
}

/// Pseudo-remainder of `a` by `b` in `k[x][y]`.
fn prem(a: &Nested, b: &Nested, k: &Field) -> Nested {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    trim(&mut r);
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(lb, k);
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = r[shift + j].sub(&bj.mul(&lr, k), k);
        }
        trim(&mut r);
    }
    r
}

fn bivariate_gcd(a: &Poly, b: &Poly, k: &Field) -> Poly {
    let (ca, mut pa) = primitive(&to_nested(a, k), k);
    let (cb, mut pb) = primitive(&to_nested(b, k), k);
    let c = ca.gcd(&cb, k);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    while pb.len() > 1 {
        let r = prem(&pa, &pb, k);
        pa = pb;
        pb = if r.is_empty() { r } else { primitive(&r, k).1 };
    }
    // pb is empty (pa is the primitive gcd) or a nonzero constant in y
    let g = if pb.is_empty() { pa } else { vec![UPoly::one(k)] };
    let g: Nested = g.iter().map(|x| x.mul(&c, k)).collect();
    from_nested(&g, k).monic(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bivariate_common_factor() {
        let k = Field::Prime(5);
        let x = Poly::var(0, 2, &k);
        let y = Poly::var(1, 2, &k);
        let one = Poly::one(2, &k);
        let f = x.mul(&y, &k).add(&one, &k); // xy + 1
        let a = f.mul(&x.add(&y, &k), &k);
        let b = f.mul(&x.sub(&one, &k), &k).mul(&x, &k);
        assert_eq!(poly_gcd(&a, &b, &k), f);
    }

    #[test]
    fn bivariate_content_gcd() {
        let k = Field::Rationals;
        let x = Poly::var(0, 2, &k);
        let y = Poly::var(1, 2, &k);
        let a = x.mul(&y, &k);
        let b = x.mul(&x, &k).add(&x, &k);
        assert_eq!(poly_gcd(&a, &b, &k), x);
    }
}
