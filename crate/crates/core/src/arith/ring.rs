//! Supported base rings: `Z`, `Z[x]`, and `k`, `k[x]`, `k[x,y]` for
//! `k = Q` or `F_p`.
//!
//! Ring elements are [`Poly`] values over the coefficient field of the
//! ring; for integer rings that is `Q` restricted to integral coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Scalar};
use super::gcd::poly_gcd;
use super::modp;
use super::parse::parse_poly;
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Integers,
    Rationals,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    coeffs: Coefficients,
    vars: Vec<String>,
}

impl Ring {
    pub fn new(coeffs: Coefficients, vars: Vec<String>) -> Result<Ring> {
        let max = if coeffs == Coefficients::Integers { 1 } else { 2 };
        if vars.len() > max {
            return Err(Error::UnsupportedRing(format!(
                "at most {max} variable(s) over these coefficients"
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            let ok = v.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::UnsupportedRing(format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::UnsupportedRing(format!("repeated variable {v:?}")));
            }
        }
        if let Coefficients::Prime(p) = coeffs {
            if !modp::is_prime_u64(p) || p >= 1 << 62 {
                return Err(Error::UnsupportedRing(format!("{p} is not a supported prime")));
            }
        }
        Ok(Ring { coeffs, vars })
    }

    pub fn integers() -> Ring {
        Ring::new(Coefficients::Integers, vec![]).unwrap()
    }

    /// Parses `Z`, `Q`, `F_p`, `Z[x]`, `Q[x]`, `Q[x,y]`, `F_p[x]`, `F_p[x,y]`.
    pub fn parse(s: &str) -> Result<Ring> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, vars) = match s.find('[') {
            Some(i) => {
                let inner = s[i + 1..]
                    .strip_suffix(']')
                    .ok_or_else(|| Error::Parse(format!("missing ']' in ring {s:?}")))?;
                let vars: Vec<String> = inner.split(',').map(str::to_string).collect();
                (&s[..i], vars)
            }
            None => (s.as_str(), vec![]),
        };
        let coeffs = match head {
            "Z" => Coefficients::Integers,
            "Q" => Coefficients::Rationals,
            _ => {
                let p = head
                    .strip_prefix("F_")
                    .or_else(|| head.strip_prefix("GF"))
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::UnsupportedRing(format!("unknown ring {s:?}")))?;
                Coefficients::Prime(p)
            }
        };
        Ring::new(coeffs, vars)
    }

    pub fn coefficients(&self) -> &Coefficients {
        &self.coeffs
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_field(&self) -> bool {
        self.vars.is_empty() && self.coeffs != Coefficients::Integers
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs == Coefficients::Integers
    }

    /// Euclidean rings: fields, `Z`, and one-variable rings over a field.
    pub fn is_euclidean(&self) -> bool {
        self.vars.is_empty() || (self.vars.len() == 1 && self.coeffs != Coefficients::Integers)
    }

    pub fn characteristic(&self) -> u64 {
        match self.coeffs {
            Coefficients::Prime(p) => p,
            _ => 0,
        }
    }

    /// Field in which element coefficients live.
    pub fn coefficient_field(&self) -> Field {
        match self.coeffs {
            Coefficients::Integers | Coefficients::Rationals => Field::Rationals,
            Coefficients::Prime(p) => Field::Prime(p),
        }
    }

    pub fn fraction_field(&self) -> Field {
        Field::function(self.coefficient_field(), self.vars.clone())
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self.nvars())
    }

    pub fn one(&self) -> Poly {
        Poly::one(self.nvars(), &self.coefficient_field())
    }

    pub fn from_i64(&self, n: i64) -> Poly {
        let k = self.coefficient_field();
        Poly::constant(k.from_i64(n), self.nvars(), &k)
    }

    pub fn from_bigint(&self, n: &BigInt) -> Poly {
        let k = self.coefficient_field();
        Poly::constant(k.from_bigint(n), self.nvars(), &k)
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(i, self.nvars(), &self.coefficient_field())
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b, &self.coefficient_field())
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a.sub(b, &self.coefficient_field())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b, &self.coefficient_field())
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        a.neg(&self.coefficient_field())
    }

    /// Whether a polynomial over the coefficient field lies in the ring.
    pub fn contains(&self, a: &Poly) -> bool {
        a.nvars() == self.nvars()
            && (!self.has_integer_coefficients()
                || a.terms().iter().all(|(_, c)| match c {
                    Scalar::Rat(q) => q.is_integer(),
                    _ => false,
                }))
    }

    pub fn is_unit(&self, a: &Poly) -> bool {
        if !a.is_constant() || a.is_zero() {
            return false;
        }
        match a.constant_value(&self.coefficient_field()) {
            Scalar::Rat(q) if self.has_integer_coefficients() => q.abs().is_one(),
            _ => true,
        }
    }

    /// Parse an element in the polynomial text syntax.
    pub fn parse_element(&self, s: &str) -> Result<Poly> {
        let p = parse_poly(s, &self.vars, &self.coefficient_field())?;
        if !self.contains(&p) {
            return Err(Error::Parse(format!("{s:?} is not an element of {self}")));
        }
        Ok(p)
    }

    pub fn format_element(&self, a: &Poly) -> String {
        a.format(&self.vars, &self.coefficient_field())
    }

    /// Image in the fraction field.
    pub fn to_fraction(&self, a: &Poly) -> Scalar {
        let k = self.coefficient_field();
        if self.vars.is_empty() {
            a.constant_value(&k)
        } else {
            self.fraction_field().fraction(a.clone(), Poly::one(self.nvars(), &k))
        }
    }

    /// Numerator and denominator over the coefficient field (denominator monic).
    fn fraction_parts(&self, alpha: &Scalar) -> (Poly, Poly) {
        let k = self.coefficient_field();
        match alpha {
            Scalar::Frac(r) => (r.num.clone(), r.den.clone()),
            other => (Poly::constant(other.clone(), 0, &k), Poly::one(0, &k)),
        }
    }

    /// Generator of the denominator ideal `{r in R : r*alpha in R}`, normalized
    /// to be positive (integers) or monic (polynomials over a field).
    pub fn denominator_ideal(&self, alpha: &Scalar) -> Poly {
        let k = self.coefficient_field();
        let (num, den) = self.fraction_parts(alpha);
        if num.is_zero() {
            return Poly::one(den.nvars(), &k);
        }
        if !self.has_integer_coefficients() {
            return den;
        }
        // integer coefficients: alpha = a/b with a, b coprime in Z[x]
        let ln = denominator_lcm(&num);
        let ld = denominator_lcm(&den);
        let a = num.scale(&Scalar::Rat(BigRational::from_integer(ln.clone() * &ld)), &k);
        let b = den.scale(&Scalar::Rat(BigRational::from_integer(ln * ld)), &k);
        let g = integer_content(&a).gcd(&integer_content(&b));
        let b = b.scale(&Scalar::Rat(BigRational::new(BigInt::one(), g)), &k);
        normalize_sign(b, &k)
    }

    /// Whether `alpha` is an element of the ring.
    pub fn fraction_in_ring(&self, alpha: &Scalar) -> bool {
        self.is_unit(&self.denominator_ideal(alpha))
    }

    /// The ring element equal to `alpha`, if any.
    pub fn from_fraction(&self, alpha: &Scalar) -> Option<Poly> {
        if !self.fraction_in_ring(alpha) {
            return None;
        }
        let (num, den) = self.fraction_parts(alpha);
        let k = self.coefficient_field();
        let num = if self.nvars() == 0 { Poly::constant(num.constant_value(&k), 0, &k) } else { num };
        let q = num.div_exact(&den, &k)?;
        self.contains(&q).then_some(q)
    }

    /// Normalized gcd in the ring (the rings here are all UFDs).
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let k = self.coefficient_field();
        if !self.has_integer_coefficients() {
            return poly_gcd(a, b, &k);
        }
        if a.is_zero() {
            return self.normalize(b);
        }
        if b.is_zero() {
            return self.normalize(a);
        }
        let c = integer_content(a).gcd(&integer_content(b));
        let g = poly_gcd(a, b, &k);
        let g = g.scale(&Scalar::Rat(BigRational::from_integer(denominator_lcm(&g))), &k);
        let g = g.scale(&Scalar::Rat(BigRational::new(c, integer_content(&g))), &k);
        normalize_sign(g, &k)
    }

    pub fn lcm(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let g = self.gcd(a, b);
        let k = self.coefficient_field();
        self.normalize(&a.div_exact(&g, &k).expect("gcd divides").mul(b, &k))
    }

    /// `a / b` when the quotient lies in the ring.
    pub fn div_exact(&self, a: &Poly, b: &Poly) -> Option<Poly> {
        if b.is_zero() {
            return None;
        }
        let q = a.div_exact(b, &self.coefficient_field())?;
        self.contains(&q).then_some(q)
    }

    /// Generator of a product ideal, normalized like [`Ring::denominator_ideal`].
    pub fn normalize(&self, a: &Poly) -> Poly {
        let k = self.coefficient_field();
        if a.is_zero() {
            return a.clone();
        }
        if self.has_integer_coefficients() {
            normalize_sign(a.clone(), &k)
        } else {
            a.monic(&k)
        }
    }
}

/// Content of an integral polynomial over Q (nonnegative).
pub fn integer_content(a: &Poly) -> BigInt {
    a.terms().iter().fold(BigInt::zero(), |acc, (_, c)| match c {
        Scalar::Rat(q) => acc.gcd(q.numer()),
        _ => unreachable!(),
    })
}

fn denominator_lcm(a: &Poly) -> BigInt {
    a.terms().iter().fold(BigInt::one(), |acc, (_, c)| match c {
        Scalar::Rat(q) => acc.lcm(q.denom()),
        _ => unreachable!(),
    })
}

fn normalize_sign(a: Poly, k: &Field) -> Poly {
    match a.leading_coeff() {
        Some(Scalar::Rat(q)) if q.is_negative() => a.neg(k),
        _ => a,
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coeffs {
            Coefficients::Integers => write!(f, "Z")?,
            Coefficients::Rationals => write!(f, "Q")?,
            Coefficients::Prime(p) => write!(f, "F_{p}")?,
        }
        if !self.vars.is_empty() {
            write!(f, "[{}]", self.vars.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(r: &Ring, num: &str, den: &str) -> Scalar {
        let k = r.fraction_field();
        let n = r.to_fraction(&r.parse_element(num).unwrap());
        let d = r.to_fraction(&r.parse_element(den).unwrap());
        k.div(&n, &d)
    }

    #[test]
    fn parse_and_display() {
        for s in ["Z", "Q", "F_7", "Z[x]", "Q[x]", "Q[x,y]", "F_2[d]", "F_3[x,y]"] {
            assert_eq!(Ring::parse(s).unwrap().to_string(), s);
        }
        assert!(Ring::parse("Z[x,y]").is_err());
        assert!(Ring::parse("F_4[x]").is_err());
        assert!(Ring::parse("Q[x,x]").is_err());
    }

    #[test]
    fn denominator_ideals() {
        let z = Ring::integers();
        assert_eq!(z.format_element(&z.denominator_ideal(&frac(&z, "3", "2"))), "2");
        assert_eq!(z.format_element(&z.denominator_ideal(&frac(&z, "5", "1"))), "1");
        let qx = Ring::parse("Q[x]").unwrap();
        let d = qx.denominator_ideal(&frac(&qx, "x+1", "x^2"));
        assert_eq!(qx.format_element(&d), "x^2");
        let zx = Ring::parse("Z[x]").unwrap();
        let d = zx.denominator_ideal(&frac(&zx, "3*x", "6*x+4"));
        assert_eq!(zx.format_element(&d), "6*x+4");
        let d = zx.denominator_ideal(&frac(&zx, "1", "2*x"));
        assert_eq!(zx.format_element(&d), "2*x");
        let d = zx.denominator_ideal(&frac(&zx, "x+1", "2"));
        assert_eq!(zx.format_element(&d), "2");
    }

    #[test]
    fn integral_elements_are_recovered() {
        let zx = Ring::parse("Z[x]").unwrap();
        let a = frac(&zx, "2*x^2+2*x", "2*x");
        assert_eq!(zx.format_element(&zx.from_fraction(&a).unwrap()), "x+1");
        assert!(zx.from_fraction(&frac(&zx, "x", "2")).is_none());
    }
}
