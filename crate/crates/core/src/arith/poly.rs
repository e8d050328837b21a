//! Sparse polynomials in at most two variables.
//!
//! Terms are stored in strictly decreasing degree-lexicographic order with no
//! zero coefficients, so equal polynomials are bit-identical. Coefficients are
//! scalars of a coefficient field passed to every operation; integer
//! polynomials use the rationals with integral coefficients.

use std::cmp::Ordering;


use super::field::{Field, Scalar};
use super::upoly::UPoly;

/// Exponent vector; unused slots are zero.
pub type Mono = [u32; 2];

pub const MAX_VARS: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: Vec<(Mono, Scalar)>,
}

/// Degree-lexicographic comparison, `x` before `y`.
pub fn mono_cmp(a: &Mono, b: &Mono) -> Ordering {
    (a[0] + a[1])
        .cmp(&(b[0] + b[1]))
        .then(a[0].cmp(&b[0]))
        .then(a[1].cmp(&b[1]))
}

fn mono_divides(a: &Mono, b: &Mono) -> bool {
    a[0] <= b[0] && a[1] <= b[1]
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        assert!(nvars <= MAX_VARS);
        Poly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: Scalar, nvars: usize, k: &Field) -> Poly {
        let mut p = Poly::zero(nvars);
        if !k.is_zero(&c) {
            p.terms.push(([0, 0], c));
        }
        p
    }

    pub fn one(nvars: usize, k: &Field) -> Poly {
        Poly::constant(k.one(), nvars, k)
    }

    pub fn var(i: usize, nvars: usize, k: &Field) -> Poly {
        assert!(i < nvars);
        let mut m = [0, 0];
        m[i] = 1;
        Poly {
            nvars,
            terms: vec![(m, k.one())],
        }
    }

    pub fn monomial(m: Mono, c: Scalar, nvars: usize, k: &Field) -> Poly {
        Poly::from_terms(nvars, vec![(m, c)], k)
    }

    /// Canonicalizing constructor: sorts, merges equal monomials, drops zeros.
    pub fn from_terms(nvars: usize, mut terms: Vec<(Mono, Scalar)>, k: &Field) -> Poly {
        terms.sort_by(|a, b| mono_cmp(&b.0, &a.0));
        let mut out: Vec<(Mono, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = k.add(lc, &c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if k.is_zero(lc) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if k.is_zero(lc) {
                out.pop();
            }
        }
        out.retain(|(_, c)| !k.is_zero(c));
        Poly { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Mono, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == [0, 0])
    }

    pub fn is_one(&self, k: &Field) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0, 0] && k.is_one(&self.terms[0].1)
    }

    /// Constant term value of a constant polynomial (zero for the zero polynomial).
    pub fn constant_value(&self, k: &Field) -> Scalar {
        match self.terms.last() {
            Some((m, c)) if *m == [0, 0] => c.clone(),
            _ => k.zero(),
        }
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_mono(&self) -> Option<&Mono> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0[0] + t.0[1])
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|t| t.0[var]).max().unwrap_or(0)
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&v| self.terms.iter().any(|t| t.0[v] > 0))
            .collect()
    }

    pub fn add(&self, other: &Poly, k: &Field) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match mono_cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = k.add(ca, cb);
                    if !k.is_zero(&s) {
                        out.push((*ma, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn neg(&self, k: &Field) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, k.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Poly, k: &Field) -> Poly {
        self.add(&other.neg(k), k)
    }

    pub fn scale(&self, c: &Scalar, k: &Field) -> Poly {
        if k.is_zero(c) {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, k.mul(a, c))).collect(),
        }
    }

    fn mul_term(&self, m: &Mono, c: &Scalar, k: &Field) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(a, b)| ([a[0] + m[0], a[1] + m[1]], k.mul(b, c)))
                .filter(|(_, b)| !k.is_zero(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly, k: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.nvars);
        }
        if self.nvars <= 1 {
            // dense univariate product
            let da = self.terms[0].0[0] as usize;
            let db = other.terms[0].0[0] as usize;
            let mut acc: Vec<Option<Scalar>> = vec![None; da + db + 1];
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    let e = (ma[0] + mb[0]) as usize;
                    let prod = k.mul(ca, cb);
                    acc[e] = Some(match acc[e].take() {
                        Some(s) => k.add(&s, &prod),
                        None => prod,
                    });
                }
            }
            let terms = acc
                .into_iter()
                .enumerate()
                .rev()
                .filter_map(|(e, c)| c.filter(|c| !k.is_zero(c)).map(|c| ([e as u32, 0], c)))
                .collect();
            return Poly {
                nvars: self.nvars,
                terms,
            };
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push(([ma[0] + mb[0], ma[1] + mb[1]], k.mul(ca, cb)));
            }
        }
        Poly::from_terms(self.nvars, terms, k)
    }

    pub fn pow(&self, e: u32, k: &Field) -> Poly {
        let mut acc = Poly::one(self.nvars, k);
        for _ in 0..e {
            acc = acc.mul(self, k);
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, k: &Field) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&k.inv(c), k),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Poly, k: &Field) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if d.is_constant() {
            return Some(self.scale(&k.inv(&d.terms[0].1), k));
        }
        if self.nvars == 1 {
            let a = self.to_upoly(0, k);
            let b = d.to_upoly(0, k);
            let (q, r) = a.divrem(&b, k);
            return if r.is_zero() {
                Some(Poly::from_upoly(&q, 0, 1, k))
            } else {
                None
            };
        }
        let (lm, lc) = d.terms[0].clone();
        let lc_inv = k.inv(&lc);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !mono_divides(&lm, &m) {
                return None;
            }
            let qm = [m[0] - lm[0], m[1] - lm[1]];
            let qc = k.mul(&c, &lc_inv);
            rem = rem.sub(&d.mul_term(&qm, &qc, k), k);
            quot.push((qm, qc));
        }
        Some(Poly::from_terms(self.nvars, quot, k))
    }

    /// Univariate view in `var`; the polynomial must not involve other variables.
    pub fn to_upoly(&self, var: usize, k: &Field) -> UPoly {
        let deg = self.degree_in(var) as usize;
        let mut coeffs = vec![k.zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            debug_assert!((0..self.nvars).all(|v| v == var || m[v] == 0));
            coeffs[m[var] as usize] = c.clone();
        }
        UPoly::from_coeffs(coeffs, k)
    }

    pub fn from_upoly(u: &UPoly, var: usize, nvars: usize, k: &Field) -> Poly {
        let mut terms = Vec::new();
        for (e, c) in u.coeffs().iter().enumerate().rev() {
            if !k.is_zero(c) {
                let mut m = [0, 0];
                m[var] = e as u32;
                terms.push((m, c.clone()));
            }
        }
        if nvars == 0 {
            return Poly::from_terms(0, terms, k);
        }
        Poly { nvars, terms }
    }

    /// Coefficients as a polynomial in `var`: entry `i` multiplies `var^i`.
    pub fn coefficients_in(&self, var: usize, k: &Field) -> Vec<Poly> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Mono, Scalar)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut rest = *m;
            rest[var] = 0;
            buckets[m[var] as usize].push((rest, c.clone()));
        }
        buckets
            .into_iter()
            .map(|t| Poly::from_terms(self.nvars, t, k))
            .collect()
    }

    /// Replace `var` by the polynomial `value` (same number of variables).
    pub fn substitute(&self, var: usize, value: &Poly, k: &Field) -> Poly {
        let coeffs = self.coefficients_in(var, k);
        let mut acc = Poly::zero(self.nvars);
        for c in coeffs.iter().rev() {
            acc = acc.mul(value, k).add(c, k);
        }
        acc
    }

    /// Drop variable `var`, which must not occur; remaining variables keep their order.
    pub fn remove_var(&self, var: usize) -> Poly {
        assert!(self.terms.iter().all(|t| t.0[var] == 0));
        let nvars = self.nvars - 1;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = [0, 0];
                let mut j = 0;
                for (v, &e) in m.iter().enumerate().take(self.nvars) {
                    if v != var {
                        out[j] = e;
                        j += 1;
                    }
                }
                (out, c.clone())
            })
            .collect::<Vec<_>>();
        // order is preserved because the removed exponent is zero everywhere
        Poly { nvars, terms }
    }

    /// Re-home the polynomial in a ring with more variables: old variable
    /// `i` becomes `map[i]`.
    pub fn embed_vars(&self, nvars: usize, map: &[usize], k: &Field) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = [0, 0];
                for (i, &target) in map.iter().enumerate() {
                    out[target] += m[i];
                }
                (out, c.clone())
            })
            .collect();
        Poly::from_terms(nvars, terms, k)
    }

    /// Apply a coefficient map into another field.
    pub fn map_coeffs(&self, target: &Field, f: impl Fn(&Scalar) -> Scalar) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (*m, f(c))).collect();
        Poly::from_terms(self.nvars, terms, target)
    }

    /// `p`-th root when every exponent is a multiple of `p` and every
    /// coefficient has a `p`-th root.
    pub fn pth_root(&self, p: u32, k: &Field) -> Option<Poly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m[0] % p != 0 || m[1] % p != 0 {
                return None;
            }
            terms.push(([m[0] / p, m[1] / p], k.pth_root(c)?));
        }
        Some(Poly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Evaluate at a point of the coefficient field.
    pub fn eval(&self, point: &[Scalar], k: &Field) -> Scalar {
        let mut acc = k.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, x) in point.iter().enumerate().take(self.nvars) {
                if m[v] > 0 {
                    t = k.mul(&t, &k.pow(x, m[v] as u128));
                }
            }
            acc = k.add(&acc, &t);
        }
        acc
    }

    /// Structural order: term by term in degree-lex order, then coefficient order.
    pub fn cmp_with(&self, other: &Poly, k: &Field) -> Ordering {
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            match mono_cmp(&a.0, &b.0) {
                Ordering::Equal => {}
                o => return o,
            }
            match k.cmp(&a.1, &b.1) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }

    /// Canonical text, e.g. `3*x^2*y-1/2`.
    pub fn format(&self, vars: &[String], k: &Field) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = (0..self.nvars)
                .filter(|&v| m[v] > 0)
                .map(|v| {
                    if m[v] == 1 {
                        vars[v].clone()
                    } else {
                        format!("{}^{}", vars[v], m[v])
                    }
                })
                .collect();
            let mono = mono.join("*");
            let full = k.format(c);
            // a leading sign is pulled out only from a single-term coefficient
            let simple = |t: &str| !t.contains(['+', '-', '/']) || matches!(c, Scalar::Rat(_));
            let (negative, mut coef) = match full.strip_prefix('-') {
                Some(rest) if simple(rest) => (true, rest.to_string()),
                _ => (false, full.clone()),
            };
            let unit = coef == "1";
            if !simple(&coef) && !mono.is_empty() || (!simple(&coef) && idx > 0) {
                coef = format!("({coef})");
            }
            let body = if mono.is_empty() {
                coef
            } else if unit {
                mono
            } else {
                format!("{coef}*{mono}")
            };
            if negative {
                out.push('-');
            } else if idx > 0 {
                out.push('+');
            }
            out.push_str(&body);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> Scalar {
        Scalar::Rat(BigRational::from_integer(n.into()))
    }

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn canonical_form_merges_and_sorts() {
        let k = Field::Rationals;
        let p = Poly::from_terms(
            2,
            vec![([0, 0], q(-1)), ([1, 1], q(3)), ([0, 0], q(1)), ([2, 0], q(1))],
            &k,
        );
        assert_eq!(p.format(&names(), &k), "x^2+3*x*y");
    }

    #[test]
    fn exact_division_bivariate() {
        let k = Field::Rationals;
        let x = Poly::var(0, 2, &k);
        let y = Poly::var(1, 2, &k);
        let a = x.add(&y, &k);
        let b = x.sub(&y, &k).add(&Poly::one(2, &k), &k);
        let prod = a.mul(&b, &k);
        assert_eq!(prod.div_exact(&a, &k), Some(b.clone()));
        assert_eq!(prod.div_exact(&x, &k), None);
    }

    #[test]
    fn substitution() {
        let k = Field::Rationals;
        let x = Poly::var(0, 2, &k);
        let y = Poly::var(1, 2, &k);
        let p = x.mul(&x, &k).add(&y, &k);
        // y -> x + 1
        let r = p.substitute(1, &x.add(&Poly::one(2, &k), &k), &k);
        assert_eq!(r.format(&names(), &k), "x^2+x+1");
    }
}
