//! Cantor-Zassenhaus factorization over finite fields.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::field::{Field, Scalar};
use crate::arith::upoly::{squarefree_decomposition, UPoly};

const SEED: u64 = 0x5eed_cafe;

/// Uniform random element of a finite field.
pub fn random_scalar(k: &Field, rng: &mut impl Rng) -> Scalar {
    match k {
        Field::Prime(p) => Scalar::Mod(rng.gen_range(0..*p)),
        Field::Galois(g) => {
            let mut v: Vec<u64> = (0..g.degree()).map(|_| rng.gen_range(0..g.p)).collect();
            crate::arith::modp::ptrim(&mut v);
            Scalar::Ext(v)
        }
        _ => panic!("random_scalar needs a finite field"),
    }
}

/// Monic irreducible factors with multiplicities, sorted canonically.
pub fn factor_finite(f: &UPoly, k: &Field) -> Vec<(UPoly, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let sqf = squarefree_decomposition(f, k).expect("finite fields are perfect");
    let mut out = Vec::new();
    for (g, m) in sqf {
        for (d, h) in distinct_degree(&g, k) {
            for irr in equal_degree(&h, d, k, &mut rng) {
                out.push((irr, m));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp_with(&b.0, k).then(a.1.cmp(&b.1)));
    out
}

/// Splits a squarefree monic polynomial into products of irreducibles of equal degree.
fn distinct_degree(f: &UPoly, k: &Field) -> Vec<(usize, UPoly)> {
    let q = k.order().unwrap();
    let x = UPoly::x(k);
    let mut rest = f.clone();
    let mut h = x.rem(&rest, k);
    let mut out = Vec::new();
    let mut d = 1;
    while rest.deg() > 0 {
        if 2 * d > rest.deg() {
            out.push((rest.deg(), rest));
            break;
        }
        h = h.pow_mod(q, &rest, k);
        let g = rest.gcd(&h.sub(&x, k), k);
        if g.deg() > 0 {
            rest = rest.div_exact(&g, k).unwrap();
            h = h.rem(&rest, k);
            out.push((d, g));
        }
        d += 1;
    }
    out
}

fn equal_degree(f: &UPoly, d: usize, k: &Field, rng: &mut ChaCha8Rng) -> Vec<UPoly> {
    let n = f.deg();
    if n == d {
        return vec![f.clone()];
    }
    let q = k.order().unwrap();
    loop {
        let a = UPoly::from_coeffs((0..n).map(|_| random_scalar(k, rng)).collect(), k);
        if a.deg() == 0 {
            continue;
        }
        let g = a.gcd(f, k);
        let g = if g.deg() > 0 {
            g
        } else {
            let b = splitting_element(&a, f, d, q, k);
            b.gcd(f, k)
        };
        if g.deg() > 0 && g.deg() < n {
            let h = f.div_exact(&g, k).unwrap();
            let mut out = equal_degree(&g, d, k, rng);
            out.extend(equal_degree(&h, d, k, rng));
            return out;
        }
    }
}

/// `a^((q^d-1)/2) - 1` for odd `q`, or the absolute trace of `a` for even `q`.
fn splitting_element(a: &UPoly, f: &UPoly, d: usize, q: u128, k: &Field) -> UPoly {
    if q % 2 == 1 {
        let mut t = a.clone();
        let mut norm = a.clone();
        for _ in 1..d {
            t = t.pow_mod(q, f, k);
            norm = norm.mul(&t, k).rem(f, k);
        }
        norm.pow_mod((q - 1) / 2, f, k).sub(&UPoly::one(k), k)
    } else {
        let bits = q.trailing_zeros() as usize * d;
        let mut t = a.clone();
        let mut acc = a.clone();
        for _ in 1..bits {
            t = t.mul(&t, k).rem(f, k);
            acc = acc.add(&t, k);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(fs: &[(UPoly, usize)], k: &Field) -> UPoly {
        fs.iter()
            .fold(UPoly::one(k), |acc, (f, m)| acc.mul(&f.pow(*m as u32, k), k))
    }

    #[test]
    fn x4_minus_1_over_f2() {
        let k = Field::Prime(2);
        let f = UPoly::from_i64s(&[-1, 0, 0, 0, 1], &k);
        assert_eq!(factor_finite(&f, &k), vec![(UPoly::from_i64s(&[1, 1], &k), 4)]);
    }

    #[test]
    fn irreducible_quadratic_over_f2() {
        let k = Field::Prime(2);
        let f = UPoly::from_i64s(&[1, 1, 1], &k);
        assert_eq!(factor_finite(&f, &k), vec![(f.clone(), 1)]);
    }

    #[test]
    fn splits_x_to_the_q_minus_x() {
        for k in [Field::Prime(7), Field::galois(2, vec![1, 1, 0, 1], "a")] {
            let q = k.order().unwrap() as usize;
            let mut c = vec![0i64; q + 1];
            c[1] = -1;
            c[q] = 1;
            let f = UPoly::from_i64s(&c, &k);
            let fs = factor_finite(&f, &k);
            assert_eq!(fs.len(), q);
            assert!(fs.iter().all(|(g, m)| g.deg() == 1 && *m == 1));
            assert_eq!(expand(&fs, &k), f);
        }
    }

    #[test]
    fn mixed_degrees_over_f3() {
        let k = Field::Prime(3);
        // (x^2+1)^2 (x+1)(x^3+2x+1)
        let a = UPoly::from_i64s(&[1, 0, 1], &k);
        let b = UPoly::from_i64s(&[1, 1], &k);
        let c = UPoly::from_i64s(&[1, 2, 0, 1], &k);
        let f = a.pow(2, &k).mul(&b, &k).mul(&c, &k);
        let fs = factor_finite(&f, &k);
        assert_eq!(fs.len(), 3);
        assert_eq!(expand(&fs, &k), f);
    }
}
