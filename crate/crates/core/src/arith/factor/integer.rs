//! Integer factorization: trial division, then Miller-Rabin and Pollard rho
//! on word-sized cofactors.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::modp;
use crate::error::{Error, Result};

const TRIAL_BOUND: u32 = 1 << 16;

/// Factorization of a nonzero integer: the sign and `(prime, multiplicity)`
/// pairs in increasing order.
pub fn factor_integer(n: &BigInt) -> Result<(Sign, Vec<(BigInt, u32)>)> {
    if n.is_zero() {
        return Err(Error::Parse("cannot factor zero".into()));
    }
    let sign = n.sign();
    let mut m = n.magnitude().clone();
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut d: u32 = 2;
    while d < TRIAL_BOUND && m.bits() > 64 {
        let mut e = 0;
        while (&m % d).is_zero() {
            m /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d as u64, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let Some(rest) = m.to_u64() else {
        return Err(Error::FactorBudgetExceeded(format!(
            "cofactor of {n} exceeds 64 bits after trial division"
        )));
    };
    if rest > 1 {
        let mut small = Vec::new();
        factor_u64(rest, &mut small);
        small.sort_unstable();
        for p in small {
            match out.iter_mut().find(|(q, _)| *q == p) {
                Some((_, e)) => *e += 1,
                None => out.push((p, 1)),
            }
        }
    }
    out.sort_unstable();
    Ok((sign, out.into_iter().map(|(p, e)| (BigInt::from(p), e)).collect()))
}

/// Distinct prime divisors of a nonzero integer.
pub fn prime_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    Ok(factor_integer(n)?.1.into_iter().map(|(p, _)| p).collect())
}

pub fn is_prime(n: &BigInt) -> bool {
    match n.to_u64() {
        Some(v) => modp::is_prime_u64(v),
        None => n > &BigInt::zero() && probable_prime_big(n),
    }
}

fn probable_prime_big(n: &BigInt) -> bool {
    let one = BigInt::one();
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn factor_u64(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            out.push(p);
            return factor_u64(n / p, out);
        }
    }
    if modp::is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

/// A nontrivial divisor of an odd composite `n`.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| modp::add(modp::mul(x, x, n), c, n);
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: i64) -> (Sign, Vec<(i64, u32)>) {
        let (s, v) = factor_integer(&BigInt::from(n)).unwrap();
        (s, v.into_iter().map(|(p, e)| (p.to_i64().unwrap(), e)).collect())
    }

    #[test]
    fn small_values() {
        assert_eq!(fac(108), (Sign::Plus, vec![(2, 2), (3, 3)]));
        assert_eq!(fac(1), (Sign::Plus, vec![]));
        assert_eq!(fac(-6), (Sign::Minus, vec![(2, 1), (3, 1)]));
    }

    #[test]
    fn semiprime_needs_rho() {
        let n = 1_000_003i64 * 999_983;
        assert_eq!(fac(n).1, vec![(999_983, 1), (1_000_003, 1)]);
    }

    #[test]
    fn big_with_small_factors() {
        let n = BigInt::from(6).pow(40) * 7;
        let (_, v) = factor_integer(&n).unwrap();
        assert_eq!(v, vec![(2.into(), 40), (3.into(), 40), (7.into(), 1)]);
    }
}
