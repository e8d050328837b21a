//! Roots of univariate polynomials over rational function fields.
//!
//! In one variable a root `r` of `sum a_i X^i` with `a_i` in `k[t]` has the
//! form `lambda * u / v` with monic `u | a_0`, `v | a_n` and `lambda` in `k`.
//! Each divisor pair leaves a polynomial system for `lambda` over `k`. In two
//! variables only constant roots are searched.

use super::{factor_upoly, roots_in_base};
use crate::arith::field::{Field, Scalar};
use crate::arith::poly::Poly;
use crate::arith::upoly::UPoly;
use crate::error::Result;

/// Cap on the number of divisor pairs examined per polynomial.
const PAIR_BUDGET: usize = 4096;

/// Distinct roots in a function field, possibly incomplete.
pub fn function_field_roots(f: &UPoly, k: &Field, max_degree: usize) -> Result<Vec<Scalar>> {
    let base = k.base().clone();
    let nv = k.function_vars().len();
    let mut cleared = clear_denominators(f, k);
    let mut roots = Vec::new();
    if cleared.first().is_some_and(|c| c.is_zero()) {
        roots.push(k.zero());
        while cleared.first().is_some_and(|c| c.is_zero()) {
            cleared.remove(0);
        }
    }
    if cleared.len() <= 1 {
        return Ok(roots);
    }
    let n = cleared.len() - 1;
    if nv >= 2 {
        for c in constant_roots(&cleared, &base, max_degree)? {
            push_unique(&mut roots, k.embed_base(&c));
        }
        return Ok(roots);
    }
    let div0 = monic_divisors(&cleared[0], &base, max_degree)?;
    let divn = monic_divisors(&cleared[n], &base, max_degree)?;
    let mut pairs = 0;
    for u in &div0 {
        for v in &divn {
            if !crate::arith::gcd::poly_gcd(u, v, &base).is_one(&base) {
                continue;
            }
            pairs += 1;
            if pairs > PAIR_BUDGET {
                return Ok(roots);
            }
            // c_i = a_i u^i v^(n-i); lambda solves sum c_i lambda^i = 0 coefficientwise in t
            let mut upow = Poly::one(1, &base);
            let vpows: Vec<Poly> = (0..=n)
                .scan(Poly::one(1, &base), |acc, _| {
                    let cur = acc.clone();
                    *acc = acc.mul(v, &base);
                    Some(cur)
                })
                .collect();
            let mut cs = Vec::with_capacity(n + 1);
            for (i, a) in cleared.iter().enumerate() {
                cs.push(a.mul(&upow, &base).mul(&vpows[n - i], &base));
                upow = upow.mul(u, &base);
            }
            for lambda in constant_roots(&cs, &base, max_degree)? {
                if base.is_zero(&lambda) {
                    continue;
                }
                let num = u.scale(&lambda, &base);
                let r = k.fraction(num, v.clone());
                push_unique(&mut roots, r);
            }
        }
    }
    Ok(roots)
}

fn push_unique(v: &mut Vec<Scalar>, x: Scalar) {
    if !v.contains(&x) {
        v.push(x);
    }
}

/// Polynomial coefficients with a common denominator cleared.
fn clear_denominators(f: &UPoly, k: &Field) -> Vec<Poly> {
    let base = k.base();
    let nv = k.function_vars().len();
    let mut den = Poly::one(nv, base);
    for c in f.coeffs() {
        let Scalar::Frac(r) = c else { unreachable!() };
        let g = crate::arith::gcd::poly_gcd(&den, &r.den, base);
        den = den.mul(&r.den.div_exact(&g, base).unwrap(), base);
    }
    f.coeffs()
        .iter()
        .map(|c| {
            let Scalar::Frac(r) = c else { unreachable!() };
            r.num.mul(&den.div_exact(&r.den, base).unwrap(), base)
        })
        .collect()
}

/// Roots in `k` common to all `t`-coefficients of `sum_i c_i X^i`.
fn constant_roots(cs: &[Poly], base: &Field, max_degree: usize) -> Result<Vec<Scalar>> {
    let mut monos: Vec<[u32; 2]> = cs.iter().flat_map(|c| c.terms().iter().map(|t| t.0)).collect();
    monos.sort_unstable();
    monos.dedup();
    let mut g = UPoly::zero();
    for m in monos {
        let coeffs: Vec<Scalar> = cs
            .iter()
            .map(|c| {
                c.terms()
                    .iter()
                    .find(|t| t.0 == m)
                    .map(|t| t.1.clone())
                    .unwrap_or_else(|| base.zero())
            })
            .collect();
        g = g.gcd(&UPoly::from_coeffs(coeffs, base), base);
        if g.deg() == 0 && !g.is_zero() {
            return Ok(Vec::new());
        }
    }
    if g.is_zero() {
        return Ok(Vec::new());
    }
    roots_in_base(&g, base, max_degree)
}

/// All monic divisors of a nonzero univariate polynomial over `k`.
fn monic_divisors(a: &Poly, k: &Field, max_degree: usize) -> Result<Vec<Poly>> {
    let u = a.to_upoly(0, k);
    let mut divs = vec![UPoly::one(k)];
    for (f, m) in factor_upoly(&u, k, max_degree)? {
        let mut next = Vec::with_capacity(divs.len() * (m + 1));
        for d in &divs {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..m {
                cur = cur.mul(&f, k);
                next.push(cur.clone());
            }
        }
        divs = next;
        if divs.len() > PAIR_BUDGET {
            break;
        }
    }
    Ok(divs.iter().map(|d| Poly::from_upoly(d, 0, 1, k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_with_nonconstant_value() {
        let k = Field::function(Field::Rationals, vec!["d".into()]);
        let d = k.generator(0);
        // (X - d)(X - 1/d)(X + 2)
        let fs = [
            UPoly::linear(&d, &k),
            UPoly::linear(&k.inv(&d), &k),
            UPoly::linear(&k.from_i64(-2), &k),
        ];
        let f = fs.iter().fold(UPoly::one(&k), |a, b| a.mul(b, &k));
        let roots = function_field_roots(&f, &k, 32).unwrap();
        assert_eq!(roots.len(), 3);
        for r in [d.clone(), k.inv(&d), k.from_i64(-2)] {
            assert!(roots.contains(&r));
        }
    }

    #[test]
    fn two_variables_constant_roots_only() {
        let k = Field::function(Field::Prime(5), vec!["x".into(), "y".into()]);
        let x = k.generator(0);
        let f = UPoly::linear(&x, &k).mul(&UPoly::linear(&k.from_i64(3), &k), &k);
        assert_eq!(function_field_roots(&f, &k, 32).unwrap(), vec![k.from_i64(3)]);
    }
}
