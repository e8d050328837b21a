//! Brauer–Nesbitt fingerprints: the characteristic polynomials of the basis
//! elements acting on a module, their reduction modulo primes, and the
//! denominator loci of fraction-field scalars.

use std::cmp::Ordering;

use crate::algebra::FiniteFreeAlgebra;
use crate::arith::{Field, Poly, PrimeSpec, Ring, Scalar, UPoly};
use crate::error::{Error, Result};
use crate::linalg::char_poly;
use crate::rep::{AlgebraModule, WedderburnData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    field: Field,
    polys: Vec<UPoly>,
}

impl Fingerprint {
    pub fn new(field: &Field, polys: Vec<UPoly>) -> Fingerprint {
        Fingerprint {
            field: field.clone(),
            polys,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn polys(&self) -> &[UPoly] {
        &self.polys
    }

    /// Module dimension (the common degree).
    pub fn dim(&self) -> usize {
        self.polys.first().map_or(0, UPoly::deg)
    }

    /// Fingerprint of a direct sum: entrywise product.
    pub fn product(&self, other: &Fingerprint) -> Fingerprint {
        let k = &self.field;
        let polys = self.polys.iter().zip(&other.polys).map(|(a, b)| a.mul(b, k)).collect();
        Fingerprint::new(k, polys)
    }

    /// Lexicographic order on the polynomial list.
    pub fn cmp_canonical(&self, other: &Fingerprint) -> Ordering {
        for (a, b) in self.polys.iter().zip(&other.polys) {
            let c = a.cmp_with(b, &self.field);
            if c != Ordering::Equal {
                return c;
            }
        }
        self.polys.len().cmp(&other.polys.len())
    }

    /// Coefficients of each polynomial, constant term first.
    pub fn coefficient_strings(&self) -> Vec<Vec<String>> {
        self.polys.iter().map(|f| f.coefficient_strings(&self.field)).collect()
    }

    pub fn format_polys(&self) -> Vec<String> {
        self.polys.iter().map(|f| f.format("X", &self.field)).collect()
    }

    /// Every coefficient of every polynomial.
    pub fn coefficients(&self) -> impl Iterator<Item = &Scalar> {
        self.polys.iter().flat_map(|f| f.coeffs().iter())
    }
}

pub fn fingerprint(m: &AlgebraModule) -> Fingerprint {
    let polys = m
        .action()
        .iter()
        .map(|a| char_poly(a).expect("action matrices are square"))
        .collect();
    Fingerprint::new(m.field(), polys)
}

/// Coefficientwise reduction of a generic-fiber fingerprint at a prime.
pub fn reduce_fingerprint(fp: &Fingerprint, p: &PrimeSpec) -> Result<Fingerprint> {
    let l = p.residue_field();
    let polys = fp
        .polys
        .iter()
        .map(|f| {
            let c = f
                .coeffs()
                .iter()
                .map(|a| p.reduce_fraction(a))
                .collect::<Result<Vec<_>>>()?;
            Ok(UPoly::from_coeffs(c, l))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Fingerprint::new(l, polys))
}

/// All fingerprint coefficients of the generic simples, deduplicated and
/// sorted, each checked to lie in the base ring.
pub fn attractor_generators(a: &FiniteFreeAlgebra, generic: &WedderburnData) -> Result<Vec<Scalar>> {
    let ring = a.ring();
    let k = ring.fraction_field();
    let mut out: Vec<Scalar> = Vec::new();
    for s in &generic.simples {
        for c in s.fingerprint.coefficients() {
            if !ring.fraction_in_ring(c) {
                return Err(Error::AttractorEscapesBase(k.format(c)));
            }
            if !out.contains(c) {
                out.push(c.clone());
            }
        }
    }
    out.sort_by(|x, y| k.cmp(x, y));
    Ok(out)
}

/// Generator of the product of the denominator ideals of `values`; a prime
/// lies in the generic locus exactly when it does not contain it.
pub fn gen_locus(ring: &Ring, values: &[Scalar]) -> Poly {
    let g = values
        .iter()
        .fold(ring.one(), |acc, a| ring.mul(&acc, &ring.denominator_ideal(a)));
    ring.normalize(&g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        let z = Ring::integers();
        let q = Field::Rationals;
        let fp = Fingerprint::new(&q, vec![UPoly::from_i64s(&[-1, 1], &q), UPoly::from_i64s(&[1, 1], &q)]);
        let two = PrimeSpec::parse("p=2", &z).unwrap();
        let r = reduce_fingerprint(&fp, &two).unwrap();
        let f2 = Field::Prime(2);
        assert_eq!(r.polys(), &[UPoly::from_i64s(&[1, 1], &f2), UPoly::from_i64s(&[1, 1], &f2)]);

        let half = Scalar::Rat(num_rational::BigRational::new(3.into(), 2.into()));
        let f = UPoly::from_coeffs(vec![q.neg(&half), q.one()], &q);
        let five = PrimeSpec::parse("p=5", &z).unwrap();
        let r = reduce_fingerprint(&Fingerprint::new(&q, vec![f.clone()]), &five).unwrap();
        assert_eq!(r.polys()[0], UPoly::from_i64s(&[-4, 1], &Field::Prime(5)));
        assert!(matches!(
            reduce_fingerprint(&Fingerprint::new(&q, vec![f]), &two),
            Err(Error::NotReducible(_))
        ));
    }

    #[test]
    fn loci() {
        let z = Ring::integers();
        let q = Field::Rationals;
        let r = |a: i64, b: i64| q.div(&q.from_i64(a), &q.from_i64(b));
        assert_eq!(gen_locus(&z, &[r(3, 2)]), z.from_i64(2));
        assert_eq!(gen_locus(&z, &[r(1, 2), r(1, 3)]), z.from_i64(6));
        let qx = Ring::parse("Q[x]").unwrap();
        let k = qx.fraction_field();
        let x = qx.var(0);
        let alpha = k.fraction(x.clone(), qx.sub(&x, &qx.one()));
        assert_eq!(gen_locus(&qx, &[alpha]), qx.sub(&x, &qx.one()));
    }
}
