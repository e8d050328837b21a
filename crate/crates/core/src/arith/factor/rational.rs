//! Zassenhaus factorization over the rationals: square-free decomposition,
//! factorization modulo a small prime, linear Hensel lifting and subset
//! recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::finite::factor_finite;
use crate::arith::field::{Field, Scalar};
use crate::arith::modp;
use crate::arith::upoly::{squarefree_decomposition, UPoly};
use crate::error::{Error, Result};

/// Integer polynomial, little-endian.
type ZPoly = Vec<BigInt>;

/// Monic irreducible factors over Q with multiplicities, sorted canonically.
pub fn factor_rational(f: &UPoly, max_degree: usize) -> Result<Vec<(UPoly, usize)>> {
    let k = Field::Rationals;
    if f.deg() > max_degree {
        return Err(Error::UnsupportedFactorization(format!(
            "degree {} exceeds the factorization budget {max_degree}",
            f.deg()
        )));
    }
    let mut out = Vec::new();
    for (g, m) in squarefree_decomposition(f, &k).expect("characteristic zero") {
        for h in factor_squarefree(&primitive_integer(&g)) {
            out.push((to_monic_rational(&h), m));
        }
    }
    out.sort_by(|a, b| a.0.cmp_with(&b.0, &k).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// Primitive integer polynomial with positive leading coefficient, proportional to `f`.
pub fn primitive_integer(f: &UPoly) -> ZPoly {
    let rats: Vec<BigRational> = f
        .coeffs()
        .iter()
        .map(|c| match c {
            Scalar::Rat(q) => q.clone(),
            _ => panic!("rational polynomial expected"),
        })
        .collect();
    let l = rats.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: ZPoly = rats.iter().map(|q| (q * &l).to_integer()).collect();
    zprimitive(&ints)
}

fn zprimitive(v: &[BigInt]) -> ZPoly {
    let c = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if c.is_zero() {
        return v.to_vec();
    }
    let s = if v.last().is_some_and(|x| x.is_negative()) { -c } else { c };
    v.iter().map(|x| x / &s).collect()
}

fn to_monic_rational(h: &[BigInt]) -> UPoly {
    let k = Field::Rationals;
    let lc = h.last().unwrap().clone();
    let coeffs = h
        .iter()
        .map(|c| Scalar::Rat(BigRational::new(c.clone(), lc.clone())))
        .collect();
    UPoly::from_coeffs(coeffs, &k)
}

fn ztrim(v: &mut ZPoly) {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(&mut out);
    out
}

fn zmod(v: &[BigInt], m: &BigInt) -> ZPoly {
    let mut out: ZPoly = v.iter().map(|x| x.mod_floor(m)).collect();
    ztrim(&mut out);
    out
}

fn zsymmetric(v: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1;
    let mut out: ZPoly = v
        .iter()
        .map(|x| {
            let r = x.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    ztrim(&mut out);
    out
}

/// Exact quotient in Z[x], or `None`.
fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let mut r = a.to_vec();
    ztrim(&mut r);
    if r.len() < b.len() {
        return r.is_empty().then(Vec::new);
    }
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let (c, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &c * y;
        }
        q[shift] = c;
        ztrim(&mut r);
    }
    r.is_empty().then_some(q)
}

fn to_fp(v: &[BigInt], p: u64) -> UPoly {
    let k = Field::Prime(p);
    UPoly::from_coeffs(v.iter().map(|c| Scalar::Mod(modp::from_bigint(c, p))).collect(), &k)
}

fn from_fp(u: &UPoly) -> ZPoly {
    u.coeffs()
        .iter()
        .map(|c| match c {
            Scalar::Mod(v) => BigInt::from(*v),
            _ => unreachable!(),
        })
        .collect()
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| modp::is_prime_u64(n))
}

/// Irreducible factors of a primitive square-free integer polynomial.
fn factor_squarefree(g: &[BigInt]) -> Vec<ZPoly> {
    let n = g.len() - 1;
    if n <= 1 {
        return vec![g.to_vec()];
    }
    let lc = g.last().unwrap().clone();
    let dg: ZPoly = g[1..]
        .iter()
        .enumerate()
        .map(|(i, c)| c * BigInt::from(i + 1))
        .collect();
    // pick the best of a few admissible primes
    let mut best: Option<(u64, Vec<UPoly>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % p).is_zero() {
            continue;
        }
        let k = Field::Prime(p);
        let gp = to_fp(g, p);
        if gp.gcd(&to_fp(&dg, p), &k).deg() > 0 {
            continue;
        }
        let fs: Vec<UPoly> = factor_finite(&gp, &k).into_iter().map(|(f, _)| f).collect();
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
        tried += 1;
        if tried == 4 || best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    let (p, modular) = best.unwrap();
    if modular.len() == 1 {
        return vec![g.to_vec()];
    }
    // Mignotte-style coefficient bound for factors of lc * g
    let norm2: BigInt = g.iter().map(|c| c * c).sum();
    let bound = (norm2.sqrt() + 1u32) * lc.abs() * (BigInt::one() << n);
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= &bound * 2u32 {
        modulus *= &pb;
    }
    let lc_inv = lc.modinv(&modulus).expect("lc is a unit mod p");
    let target = zmod(&g.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(), &modulus);
    let lifted = hensel_multi(&target, &modular, p, &modulus);
    recombine(g, lifted, &modulus)
}

/// Lift a factorization of the monic `f` modulo `p` to modulo `m = p^k`.
fn hensel_multi(f: &[BigInt], factors: &[UPoly], p: u64, m: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![f.to_vec()];
    }
    let k = Field::Prime(p);
    let (left, right) = factors.split_at(factors.len() / 2);
    let a = left.iter().fold(UPoly::one(&k), |acc, x| acc.mul(x, &k));
    let b = right.iter().fold(UPoly::one(&k), |acc, x| acc.mul(x, &k));
    let (a_lift, b_lift) = hensel_pair(f, &a, &b, p, m);
    let mut out = hensel_multi(&a_lift, left, p, m);
    out.extend(hensel_multi(&b_lift, right, p, m));
    out
}

/// Linear Hensel lifting of `f = a*b (mod p)` with monic coprime `a`, `b`.
fn hensel_pair(f: &[BigInt], a: &UPoly, b: &UPoly, p: u64, m: &BigInt) -> (ZPoly, ZPoly) {
    let k = Field::Prime(p);
    let (g, s, t) = a.xgcd(b, &k);
    debug_assert!(g.deg() == 0);
    let pb = BigInt::from(p);
    let mut big_a = from_fp(a);
    let mut big_b = from_fp(b);
    let mut pj = pb.clone();
    while &pj < m {
        let next = &pj * &pb;
        let prod = zmul(&big_a, &big_b);
        let diff: ZPoly = (0..f.len().max(prod.len()))
            .map(|i| {
                f.get(i).cloned().unwrap_or_default() - prod.get(i).cloned().unwrap_or_default()
            })
            .collect();
        let diff = zmod(&diff, &next);
        let e: ZPoly = diff.iter().map(|c| c / &pj).collect();
        let e = to_fp(&e, p);
        if !e.is_zero() {
            let (q, beta) = e.mul(&s, &k).divrem(b, &k);
            let alpha = e.mul(&t, &k).add(&q.mul(a, &k), &k);
            let lift = |x: &ZPoly, y: &UPoly| -> ZPoly {
                let y = from_fp(y);
                let n = x.len().max(y.len());
                let v: ZPoly = (0..n)
                    .map(|i| {
                        x.get(i).cloned().unwrap_or_default()
                            + &pj * y.get(i).cloned().unwrap_or_default()
                    })
                    .collect();
                zmod(&v, &next)
            };
            big_a = lift(&big_a, &alpha);
            big_b = lift(&big_b, &beta);
        }
        pj = next;
    }
    (big_a, big_b)
}

fn recombine(g: &[BigInt], mut lifted: Vec<ZPoly>, m: &BigInt) -> Vec<ZPoly> {
    let mut current = g.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = false;
        for subset in subsets(lifted.len(), size) {
            let lc = current.last().unwrap().clone();
            let prod = subset
                .iter()
                .fold(vec![lc.clone()], |acc, &i| zmod(&zmul(&acc, &lifted[i]), m));
            let cand = zprimitive(&zsymmetric(&prod, m));
            if let Some(q) = zdiv_exact(&current, &cand) {
                out.push(cand);
                current = q;
                let mut idx = subset.clone();
                idx.sort_unstable_by(|a, b| b.cmp(a));
                for i in idx {
                    lifted.remove(i);
                }
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if current.len() > 1 {
        out.push(zprimitive(&current));
    }
    out
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    rec(0, n, size, &mut cur, &mut out);
    out
}

/// Whether an integer polynomial is irreducible over Q (degree at least one).
pub fn is_irreducible_rational(f: &UPoly, max_degree: usize) -> Result<bool> {
    if f.deg() == 0 {
        return Ok(false);
    }
    let fs = factor_rational(f, max_degree)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> UPoly {
        UPoly::from_i64s(v, &Field::Rationals)
    }

    fn expand(fs: &[(UPoly, usize)]) -> UPoly {
        let k = Field::Rationals;
        fs.iter()
            .fold(UPoly::one(&k), |acc, (f, m)| acc.mul(&f.pow(*m as u32, &k), &k))
    }

    #[test]
    fn difference_of_squares() {
        let fs = factor_rational(&q(&[-1, 0, 1]), 32).unwrap();
        assert_eq!(fs, vec![(q(&[-1, 1]), 1), (q(&[1, 1]), 1)]);
    }

    #[test]
    fn cyclotomic_stays_irreducible() {
        // x^4+1 splits modulo every prime but is irreducible over Q
        let f = q(&[1, 0, 0, 0, 1]);
        assert_eq!(factor_rational(&f, 32).unwrap(), vec![(f.clone(), 1)]);
    }

    #[test]
    fn nonmonic_product_with_repeats() {
        let k = Field::Rationals;
        let a = q(&[1, 2]); // 2x+1
        let b = q(&[-3, 0, 1]); // x^2-3
        let c = q(&[5, -1, 0, 1]); // x^3-x+5
        let f = a.pow(2, &k).mul(&b, &k).mul(&c, &k).scale(&k.from_i64(-7), &k);
        let fs = factor_rational(&f, 32).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(expand(&fs), f.monic(&k));
        assert!(fs.iter().any(|(g, m)| *m == 2 && g.deg() == 1));
    }

    #[test]
    fn swinnerton_dyer_degree_four() {
        // x^4 - 10x^2 + 1, minimal polynomial of sqrt2 + sqrt3
        let f = q(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible_rational(&f, 32).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let mut c = vec![0i64; 40];
        c.push(1);
        c[0] = 1;
        assert!(matches!(
            factor_rational(&q(&c), 32),
            Err(Error::UnsupportedFactorization(_))
        ));
    }
}
