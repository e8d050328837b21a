//! Field descriptors and their scalars.
//!
//! A [`Field`] is a runtime descriptor; a [`Scalar`] is a bare value whose
//! meaning depends on the descriptor it is used with. All arithmetic goes
//! through the descriptor. Every scalar is kept in canonical form, so
//! structural equality is mathematical equality.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::modp;
use super::poly::Poly;

/// `F_p[t]/(modulus)` with a monic irreducible modulus of degree `e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaloisSpec {
    pub p: u64,
    /// Little-endian coefficients of the monic modulus, length `e + 1`.
    pub modulus: Vec<u64>,
    /// Name of the generator used when printing elements.
    pub var: String,
}

impl GaloisSpec {
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

/// Rational function field over a non-function base field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FunctionSpec {
    pub base: Field,
    pub vars: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
    Galois(Arc<GaloisSpec>),
    Function(Arc<FunctionSpec>),
}

/// Element of a rational function field: `num / den` with `gcd = 1` and
/// `den` monic in the degree-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    pub num: Poly,
    pub den: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
    Ext(Vec<u64>),
    Frac(Box<RatFn>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum FieldSummary {
    Rationals,
    PrimeField { p: u64 },
    FiniteField { p: u64, degree: usize, modulus: String },
    FunctionField { base: Box<FieldSummary>, vars: Vec<String> },
}

impl Field {
    pub fn galois(p: u64, modulus: Vec<u64>, var: &str) -> Field {
        debug_assert_eq!(modulus.last(), Some(&1));
        if modulus.len() == 2 {
            return Field::Prime(p);
        }
        Field::Galois(Arc::new(GaloisSpec {
            p,
            modulus,
            var: var.to_string(),
        }))
    }

    pub fn function(base: Field, vars: Vec<String>) -> Field {
        assert!(
            !matches!(base, Field::Function(_)),
            "function fields are one level deep"
        );
        if vars.is_empty() {
            return base;
        }
        Field::Function(Arc::new(FunctionSpec { base, vars }))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
            Field::Galois(g) => g.p,
            Field::Function(f) => f.base.characteristic(),
        }
    }

    /// Number of elements for finite fields.
    pub fn order(&self) -> Option<u128> {
        match self {
            Field::Prime(p) => Some(*p as u128),
            Field::Galois(g) => Some((g.p as u128).pow(g.degree() as u32)),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// The coefficient field of a function field; the field itself otherwise.
    pub fn base(&self) -> &Field {
        match self {
            Field::Function(f) => &f.base,
            other => other,
        }
    }

    pub fn function_vars(&self) -> &[String] {
        match self {
            Field::Function(f) => &f.vars,
            _ => &[],
        }
    }

    pub fn summary(&self) -> FieldSummary {
        match self {
            Field::Rationals => FieldSummary::Rationals,
            Field::Prime(p) => FieldSummary::PrimeField { p: *p },
            Field::Galois(g) => FieldSummary::FiniteField {
                p: g.p,
                degree: g.degree(),
                modulus: format_fp_poly(&g.modulus, &g.var),
            },
            Field::Function(f) => FieldSummary::FunctionField {
                base: Box::new(f.base.summary()),
                vars: f.vars.clone(),
            },
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(_) => Scalar::Mod(0),
            Field::Galois(_) => Scalar::Ext(Vec::new()),
            Field::Function(f) => Scalar::Frac(Box::new(RatFn {
                num: Poly::zero(f.vars.len()),
                den: Poly::one(f.vars.len(), &f.base),
            })),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            Field::Prime(p) => Scalar::Mod(modp::from_bigint(n, *p)),
            Field::Galois(g) => {
                let r = modp::from_bigint(n, g.p);
                Scalar::Ext(if r == 0 { Vec::new() } else { vec![r] })
            }
            Field::Function(f) => {
                let c = f.base.from_bigint(n);
                self.embed_base(&c)
            }
        }
    }

    /// Image of a rational number; panics if the denominator vanishes.
    pub fn from_rational(&self, q: &BigRational) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(q.clone()),
            _ => {
                let n = self.from_bigint(q.numer());
                let d = self.from_bigint(q.denom());
                self.div(&n, &d)
            }
        }
    }

    /// Constant function from a base-field scalar.
    pub fn embed_base(&self, c: &Scalar) -> Scalar {
        match self {
            Field::Function(f) => {
                let n = f.vars.len();
                Scalar::Frac(Box::new(RatFn {
                    num: Poly::constant(c.clone(), n, &f.base),
                    den: Poly::one(n, &f.base),
                }))
            }
            _ => c.clone(),
        }
    }

    /// The `i`-th transcendental generator of a function field.
    pub fn generator(&self, i: usize) -> Scalar {
        match self {
            Field::Function(f) => Scalar::Frac(Box::new(RatFn {
                num: Poly::var(i, f.vars.len(), &f.base),
                den: Poly::one(f.vars.len(), &f.base),
            })),
            _ => panic!("generator requested from a non-function field"),
        }
    }

    /// Build a canonical function-field element from a numerator and denominator.
    pub fn fraction(&self, num: Poly, den: Poly) -> Scalar {
        match self {
            Field::Function(f) => Scalar::Frac(Box::new(normalize_ratfn(num, den, &f.base))),
            _ => {
                let n = num.constant_value(self.base());
                let d = den.constant_value(self.base());
                self.div(&n, &d)
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod(v) => *v == 0,
            Scalar::Ext(v) => v.is_empty(),
            Scalar::Frac(r) => r.num.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(modp::add(*x, *y, *p)),
            (Field::Galois(g), Scalar::Ext(x), Scalar::Ext(y)) => Scalar::Ext(modp::padd(x, y, g.p)),
            (Field::Function(f), Scalar::Frac(x), Scalar::Frac(y)) => {
                Scalar::Frac(Box::new(ratfn_add(x, y, &f.base)))
            }
            _ => mismatch(self, a, b),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(modp::neg(*x, *p)),
            (Field::Galois(g), Scalar::Ext(x)) => {
                Scalar::Ext(x.iter().map(|&c| modp::neg(c, g.p)).collect())
            }
            (Field::Function(f), Scalar::Frac(x)) => Scalar::Frac(Box::new(RatFn {
                num: x.num.neg(&f.base),
                den: x.den.clone(),
            })),
            _ => mismatch(self, a, a),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(modp::sub(*x, *y, *p)),
            (Field::Galois(g), Scalar::Ext(x), Scalar::Ext(y)) => Scalar::Ext(modp::psub(x, y, g.p)),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(modp::mul(*x, *y, *p)),
            (Field::Galois(g), Scalar::Ext(x), Scalar::Ext(y)) => {
                Scalar::Ext(modp::prem(&modp::pmul(x, y, g.p), &g.modulus, g.p))
            }
            (Field::Function(f), Scalar::Frac(x), Scalar::Frac(y)) => {
                Scalar::Frac(Box::new(ratfn_mul(x, y, &f.base)))
            }
            _ => mismatch(self, a, b),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!self.is_zero(a), "inverse of zero");
        match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(x.recip()),
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(modp::inv(*x, *p)),
            (Field::Galois(g), Scalar::Ext(x)) => Scalar::Ext(
                modp::pinv_mod(x, &g.modulus, g.p).expect("modulus is irreducible"),
            ),
            (Field::Function(f), Scalar::Frac(x)) => {
                let lc = x.num.leading_coeff().expect("nonzero").clone();
                let lc_inv = f.base.inv(&lc);
                Scalar::Frac(Box::new(RatFn {
                    num: x.den.scale(&lc_inv, &f.base),
                    den: x.num.scale(&lc_inv, &f.base),
                }))
            }
            _ => mismatch(self, a, a),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &Scalar, mut e: u128) -> Scalar {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `p`-th root in characteristic `p`, when it exists in the field.
    pub fn pth_root(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (Field::Rationals, _) => None,
            (Field::Prime(_), Scalar::Mod(_)) => Some(a.clone()),
            (Field::Galois(g), Scalar::Ext(_)) => {
                let e = g.degree() as u32;
                Some(self.pow(a, (g.p as u128).pow(e - 1)))
            }
            (Field::Function(f), Scalar::Frac(x)) => {
                let p = f.base.characteristic();
                if p == 0 {
                    return None;
                }
                let num = x.num.pth_root(p as u32, &f.base)?;
                let den = x.den.pth_root(p as u32, &f.base)?;
                Some(Scalar::Frac(Box::new(RatFn { num, den })))
            }
            _ => mismatch(self, a, a),
        }
    }

    /// Total order on scalars used for canonical sorting.
    ///
    /// Rationals compare numerically, prime-field residues by their symmetric
    /// representative, and rational functions over Q by sign at infinity
    /// (leading coefficient of the difference). Other function fields fall
    /// back to a structural order.
    pub fn cmp(&self, a: &Scalar, b: &Scalar) -> Ordering {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => x.cmp(y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                modp::symmetric(*x, *p).cmp(&modp::symmetric(*y, *p))
            }
            (Field::Galois(g), Scalar::Ext(x), Scalar::Ext(y)) => {
                for i in (0..g.degree()).rev() {
                    let xi = modp::symmetric(*x.get(i).unwrap_or(&0), g.p);
                    let yi = modp::symmetric(*y.get(i).unwrap_or(&0), g.p);
                    match xi.cmp(&yi) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            (Field::Function(f), Scalar::Frac(x), Scalar::Frac(y)) => {
                if x == y {
                    return Ordering::Equal;
                }
                if f.base == Field::Rationals {
                    let d = self.sub(a, b);
                    let Scalar::Frac(d) = d else { unreachable!() };
                    match d.num.leading_coeff() {
                        Some(Scalar::Rat(c)) if c.is_negative() => Ordering::Less,
                        _ => Ordering::Greater,
                    }
                } else {
                    x.num
                        .cmp_with(&y.num, &f.base)
                        .then_with(|| x.den.cmp_with(&y.den, &f.base))
                }
            }
            _ => mismatch(self, a, b),
        }
    }

    /// Canonical text form (no whitespace).
    pub fn format(&self, a: &Scalar) -> String {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(q)) => format_rational(q),
            (Field::Prime(_), Scalar::Mod(v)) => v.to_string(),
            (Field::Galois(g), Scalar::Ext(v)) => format_fp_poly(v, &g.var),
            (Field::Function(f), Scalar::Frac(x)) => {
                let num = x.num.format(&f.vars, &f.base);
                if x.den.is_one(&f.base) {
                    num
                } else {
                    let den = x.den.format(&f.vars, &f.base);
                    let num = if x.num.terms().len() > 1 || num.contains('/') {
                        format!("({num})")
                    } else {
                        num
                    };
                    let den = if x.den.terms().len() > 1 || den.contains('*') {
                        format!("({den})")
                    } else {
                        den
                    };
                    format!("{num}/{den}")
                }
            }
            _ => mismatch(self, a, a),
        }
    }

    /// Whether the value is a base-field constant (always true off function fields).
    pub fn as_base_constant(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (Field::Function(f), Scalar::Frac(x)) => {
                if x.den.is_one(&f.base) && x.num.is_constant() {
                    Some(x.num.constant_value(&f.base))
                } else {
                    None
                }
            }
            _ => Some(a.clone()),
        }
    }

    /// Checks that a scalar is a valid canonical element of this field.
    pub fn owns(&self, a: &Scalar) -> bool {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(_)) => true,
            (Field::Prime(p), Scalar::Mod(v)) => v < p,
            (Field::Galois(g), Scalar::Ext(v)) => {
                v.len() < g.modulus.len() && v.iter().all(|&c| c < g.p) && v.last() != Some(&0)
            }
            (Field::Function(f), Scalar::Frac(x)) => {
                x.num.nvars() == f.vars.len() && x.den.nvars() == f.vars.len()
            }
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Galois(g) => write!(
                f,
                "F_{}^{}[{}]/({})",
                g.p,
                g.degree(),
                g.var,
                format_fp_poly(&g.modulus, &g.var)
            ),
            Field::Function(s) => write!(f, "{}({})", s.base, s.vars.join(",")),
        }
    }
}

fn mismatch(field: &Field, a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar/field mismatch: field {field}, operands {a:?}, {b:?}")
}

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn format_fp_poly(v: &[u64], var: &str) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, &c) in v.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        parts.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    parts.join("+")
}

pub(crate) fn normalize_ratfn(num: Poly, den: Poly, base: &Field) -> RatFn {
    assert!(!den.is_zero(), "zero denominator");
    let n = num.nvars();
    if num.is_zero() {
        return RatFn {
            num,
            den: Poly::one(n, base),
        };
    }
    let g = super::gcd::poly_gcd(&num, &den, base);
    let (num, den) = if g.is_one(base) {
        (num, den)
    } else {
        (
            num.div_exact(&g, base).expect("gcd divides numerator"),
            den.div_exact(&g, base).expect("gcd divides denominator"),
        )
    };
    let lc = den.leading_coeff().expect("nonzero").clone();
    if base.is_one(&lc) {
        RatFn { num, den }
    } else {
        let inv = base.inv(&lc);
        RatFn {
            num: num.scale(&inv, base),
            den: den.scale(&inv, base),
        }
    }
}

fn ratfn_add(x: &RatFn, y: &RatFn, base: &Field) -> RatFn {
    if x.num.is_zero() {
        return y.clone();
    }
    if y.num.is_zero() {
        return x.clone();
    }
    if x.den == y.den {
        return normalize_ratfn(x.num.add(&y.num, base), x.den.clone(), base);
    }
    if x.den.is_one(base) {
        return normalize_ratfn(x.num.mul(&y.den, base).add(&y.num, base), y.den.clone(), base);
    }
    if y.den.is_one(base) {
        return normalize_ratfn(y.num.mul(&x.den, base).add(&x.num, base), x.den.clone(), base);
    }
    let g = super::gcd::poly_gcd(&x.den, &y.den, base);
    let xd = x.den.div_exact(&g, base).expect("gcd divides");
    let yd = y.den.div_exact(&g, base).expect("gcd divides");
    let num = x.num.mul(&yd, base).add(&y.num.mul(&xd, base), base);
    let den = x.den.mul(&yd, base);
    normalize_ratfn(num, den, base)
}

fn ratfn_mul(x: &RatFn, y: &RatFn, base: &Field) -> RatFn {
    let n = x.num.nvars();
    if x.num.is_zero() || y.num.is_zero() {
        return RatFn {
            num: Poly::zero(n),
            den: Poly::one(n, base),
        };
    }
    if x.den.is_one(base) && y.den.is_one(base) {
        return RatFn {
            num: x.num.mul(&y.num, base),
            den: x.den.clone(),
        };
    }
    let g1 = super::gcd::poly_gcd(&x.num, &y.den, base);
    let g2 = super::gcd::poly_gcd(&y.num, &x.den, base);
    let xn = x.num.div_exact(&g1, base).expect("gcd divides");
    let yd = y.den.div_exact(&g1, base).expect("gcd divides");
    let yn = y.num.div_exact(&g2, base).expect("gcd divides");
    let xd = x.den.div_exact(&g2, base).expect("gcd divides");
    // Quotients of monic polynomials by monic gcds stay monic.
    RatFn {
        num: xn.mul(&yn, base),
        den: xd.mul(&yd, base),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rat(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn prime_field_basics() {
        let f = Field::Prime(5);
        let two = f.from_i64(2);
        assert_eq!(f.inv(&two), Scalar::Mod(3));
        assert_eq!(f.from_rational(&BigRational::new(3.into(), 2.into())), Scalar::Mod(4));
        assert_eq!(f.from_i64(-1), Scalar::Mod(4));
    }

    #[test]
    fn galois_field_f4() {
        let f = Field::galois(2, vec![1, 1, 1], "a");
        let a = Scalar::Ext(vec![0, 1]);
        let a2 = f.mul(&a, &a);
        assert_eq!(a2, Scalar::Ext(vec![1, 1]));
        assert_eq!(f.mul(&a, &f.inv(&a)), f.one());
        assert_eq!(f.pow(&a, 3), f.one());
        assert_eq!(f.format(&a2), "a+1");
    }

    #[test]
    fn function_field_normalizes() {
        let k = Field::function(Field::Rationals, vec!["d".into()]);
        let d = k.generator(0);
        let one = k.one();
        let dm1 = k.sub(&d, &one);
        let x = k.div(&k.mul(&d, &dm1), &dm1);
        assert_eq!(x, d);
        let h = k.div(&one, &k.from_i64(2));
        assert_eq!(k.format(&k.mul(&h, &d)), "1/2*d");
        let inv = k.inv(&k.add(&d, &d));
        assert_eq!(k.format(&inv), "(1/2)/d");
    }

    #[test]
    fn rational_order() {
        let f = Field::Rationals;
        assert_eq!(f.cmp(&q(-1, 2), &q(1, 3)), Ordering::Less);
        let k = Field::function(Field::Rationals, vec!["d".into()]);
        let d = k.generator(0);
        assert_eq!(k.cmp(&k.neg(&d), &k.zero()), Ordering::Less);
        assert_eq!(k.cmp(&d, &k.from_i64(1000)), Ordering::Greater);
    }

    #[test]
    fn symmetric_order_in_prime_field() {
        let f = Field::Prime(3);
        // -1 = 2 sorts before 1
        assert_eq!(f.cmp(&Scalar::Mod(2), &Scalar::Mod(1)), Ordering::Less);
    }
}
