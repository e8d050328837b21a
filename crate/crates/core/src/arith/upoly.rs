//! Dense univariate polynomials over a runtime field.

use std::cmp::Ordering;

use super::field::{Field, Scalar};

/// Little-endian coefficient vector without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UPoly {
    coeffs: Vec<Scalar>,
}

impl UPoly {
    pub fn zero() -> UPoly {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one(k: &Field) -> UPoly {
        UPoly::constant(k.one(), k)
    }

    pub fn x(k: &Field) -> UPoly {
        UPoly {
            coeffs: vec![k.zero(), k.one()],
        }
    }

    pub fn constant(c: Scalar, k: &Field) -> UPoly {
        UPoly::from_coeffs(vec![c], k)
    }

    /// `X - a`
    pub fn linear(a: &Scalar, k: &Field) -> UPoly {
        UPoly {
            coeffs: vec![k.neg(a), k.one()],
        }
    }

    pub fn monomial(c: Scalar, deg: usize, k: &Field) -> UPoly {
        let mut coeffs = vec![k.zero(); deg];
        coeffs.push(c);
        UPoly::from_coeffs(coeffs, k)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>, k: &Field) -> UPoly {
        while coeffs.last().is_some_and(|c| k.is_zero(c)) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_i64s(v: &[i64], k: &Field) -> UPoly {
        UPoly::from_coeffs(v.iter().map(|&c| k.from_i64(c)).collect(), k)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, k: &Field) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| k.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self, k: &Field) -> bool {
        self.lc().is_some_and(|c| k.is_one(c))
    }

    pub fn add(&self, o: &UPoly, k: &Field) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => k.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        UPoly::from_coeffs(coeffs, k)
    }

    pub fn neg(&self, k: &Field) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| k.neg(c)).collect(),
        }
    }

    pub fn sub(&self, o: &UPoly, k: &Field) -> UPoly {
        self.add(&o.neg(k), k)
    }

    pub fn scale(&self, c: &Scalar, k: &Field) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|a| k.mul(a, c)).collect(), k)
    }

    pub fn mul(&self, o: &UPoly, k: &Field) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![k.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if k.is_zero(b) {
                    continue;
                }
                out[i + j] = k.add(&out[i + j], &k.mul(a, b));
            }
        }
        UPoly::from_coeffs(out, k)
    }

    pub fn pow(&self, e: u32, k: &Field) -> UPoly {
        let mut acc = UPoly::one(k);
        for _ in 0..e {
            acc = acc.mul(self, k);
        }
        acc
    }

    /// Shift: multiply by `X^n`.
    pub fn shift(&self, n: usize, k: &Field) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![k.zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, d: &UPoly, k: &Field) -> (UPoly, UPoly) {
        let dl = d.lc().expect("division by zero polynomial");
        if self.coeffs.len() < d.coeffs.len() {
            return (UPoly::zero(), self.clone());
        }
        let inv = k.inv(dl);
        let monic_divisor = k.is_one(dl);
        let mut r = self.coeffs.clone();
        let dn = d.coeffs.len();
        let mut q = vec![k.zero(); r.len() - dn + 1];
        for shift in (0..q.len()).rev() {
            let top = &r[shift + dn - 1];
            if k.is_zero(top) {
                continue;
            }
            let c = if monic_divisor {
                top.clone()
            } else {
                k.mul(top, &inv)
            };
            for (j, b) in d.coeffs.iter().enumerate() {
                if !k.is_zero(b) {
                    r[shift + j] = k.sub(&r[shift + j], &k.mul(&c, b));
                }
            }
            q[shift] = c;
        }
        r.truncate(dn - 1);
        (UPoly::from_coeffs(q, k), UPoly::from_coeffs(r, k))
    }

    pub fn rem(&self, d: &UPoly, k: &Field) -> UPoly {
        self.divrem(d, k).1
    }

    /// Exact quotient, `None` if `d` does not divide.
    pub fn div_exact(&self, d: &UPoly, k: &Field) -> Option<UPoly> {
        let (q, r) = self.divrem(d, k);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self, k: &Field) -> UPoly {
        match self.lc() {
            None => UPoly::zero(),
            Some(c) if k.is_one(c) => self.clone(),
            Some(c) => self.scale(&k.inv(c), k),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, o: &UPoly, k: &Field) -> UPoly {
        let (mut a, mut b) = (self.monic(k), o.monic(k));
        while !b.is_zero() {
            let r = a.rem(&b, k).monic(k);
            a = b;
            b = r;
        }
        a
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn xgcd(&self, o: &UPoly, k: &Field) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (UPoly::one(k), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1, k);
            let s = s0.sub(&q.mul(&s1, k), k);
            let t = t0.sub(&q.mul(&t1, k), k);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.lc().cloned() {
            None => (r0, s0, t0),
            Some(c) => {
                let inv = k.inv(&c);
                (r0.scale(&inv, k), s0.scale(&inv, k), t0.scale(&inv, k))
            }
        }
    }

    pub fn derivative(&self, k: &Field) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| k.mul(c, &k.from_i64(i as i64 + 1)))
            .collect();
        UPoly::from_coeffs(coeffs, k)
    }

    pub fn eval(&self, x: &Scalar, k: &Field) -> Scalar {
        let mut acc = k.zero();
        for c in self.coeffs.iter().rev() {
            acc = k.add(&k.mul(&acc, x), c);
        }
        acc
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &UPoly, k: &Field) -> UPoly {
        let mut acc = UPoly::one(k).rem(m, k);
        let mut base = self.rem(m, k);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, k).rem(m, k);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, k).rem(m, k);
            }
        }
        acc
    }

    /// `p`-th root of a polynomial in `X^p` over a perfect-enough field.
    pub fn pth_root(&self, p: usize, k: &Field) -> Option<UPoly> {
        let mut coeffs = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % p == 0 {
                coeffs.push(k.pth_root(c)?);
            } else if !k.is_zero(c) {
                return None;
            }
        }
        Some(UPoly::from_coeffs(coeffs, k))
    }

    /// Map coefficients into another field.
    pub fn map(&self, target: &Field, f: impl Fn(&Scalar) -> Scalar) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(f).collect(), target)
    }

    /// Canonical order: by degree, then coefficients from the top down.
    pub fn cmp_with(&self, o: &UPoly, k: &Field) -> Ordering {
        self.coeffs.len().cmp(&o.coeffs.len()).then_with(|| {
            for (a, b) in self.coeffs.iter().rev().zip(o.coeffs.iter().rev()) {
                match k.cmp(a, b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }

    /// Canonical text in the variable `var`.
    pub fn format(&self, var: &str, k: &Field) -> String {
        let p = super::poly::Poly::from_upoly(self, 0, 1, k);
        p.format(&[var.to_string()], k)
    }

    /// Coefficient strings from the constant term upward.
    pub fn coefficient_strings(&self, k: &Field) -> Vec<String> {
        self.coeffs.iter().map(|c| k.format(c)).collect()
    }
}

/// Square-free decomposition over a field where `p`-th roots exist when needed.
/// Returns `(factor, multiplicity)` pairs with monic, pairwise coprime,
/// squarefree factors. Returns `None` in characteristic `p` when a needed
/// `p`-th root does not exist in the field.
pub fn squarefree_decomposition(f: &UPoly, k: &Field) -> Option<Vec<(UPoly, usize)>> {
    let f = f.monic(k);
    if f.deg() == 0 {
        return Some(Vec::new());
    }
    let p = k.characteristic() as usize;
    let mut out = Vec::new();
    sqf_rec(&f, 1, p, k, &mut out)?;
    out.sort_by(|a, b| a.0.cmp_with(&b.0, k).then(a.1.cmp(&b.1)));
    Some(out)
}

fn sqf_rec(f: &UPoly, mult: usize, p: usize, k: &Field, out: &mut Vec<(UPoly, usize)>) -> Option<()> {
    if f.deg() == 0 {
        return Some(());
    }
    let df = f.derivative(k);
    if df.is_zero() {
        let root = f.pth_root(p, k)?;
        return sqf_rec(&root, mult * p, p, k, out);
    }
    // Yun-style loop, with the characteristic-p residue handled recursively.
    let mut c = f.gcd(&df, k);
    let mut w = f.div_exact(&c, k).unwrap();
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c, k);
        let z = w.div_exact(&y, k).unwrap();
        if z.deg() > 0 {
            out.push((z.monic(k), i * mult));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w, k).unwrap();
    }
    if c.deg() > 0 {
        // only possible in characteristic p: c is a p-th power
        let root = c.pth_root(p, k)?;
        let mut sub = Vec::new();
        sqf_rec(&root, mult * p, p, k, &mut sub)?;
        for (g, m) in sub {
            out.push((g, m));
        }
    }
    Some(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_and_gcd() {
        let k = Field::Rationals;
        let a = UPoly::from_i64s(&[-1, 0, 1], &k); // x^2 - 1
        let b = UPoly::from_i64s(&[1, 2, 1], &k); // (x+1)^2
        assert_eq!(a.gcd(&b, &k), UPoly::from_i64s(&[1, 1], &k));
        let (q, r) = b.divrem(&a, &k);
        assert_eq!(q, UPoly::one(&k));
        assert_eq!(r, UPoly::from_i64s(&[2, 2], &k));
    }

    #[test]
    fn xgcd_identity() {
        let k = Field::Prime(7);
        let a = UPoly::from_i64s(&[3, 0, 1, 5], &k);
        let b = UPoly::from_i64s(&[1, 4, 2], &k);
        let (g, s, t) = a.xgcd(&b, &k);
        assert_eq!(s.mul(&a, &k).add(&t.mul(&b, &k), &k), g);
    }

    #[test]
    fn squarefree_char_two() {
        let k = Field::Prime(2);
        // (x+1)^4 * x = x^5 + x
        let f = UPoly::from_i64s(&[0, 1, 0, 0, 0, 1], &k);
        let sqf = squarefree_decomposition(&f, &k).unwrap();
        assert_eq!(
            sqf,
            vec![(UPoly::from_i64s(&[0, 1], &k), 1), (UPoly::from_i64s(&[1, 1], &k), 4)]
        );
    }

    #[test]
    fn squarefree_char_zero() {
        let k = Field::Rationals;
        let f = UPoly::from_i64s(&[-1, 1], &k)
            .pow(3, &k)
            .mul(&UPoly::from_i64s(&[1, 1], &k), &k);
        let sqf = squarefree_decomposition(&f, &k).unwrap();
        assert_eq!(sqf.len(), 2);
        assert_eq!(sqf[0], (UPoly::from_i64s(&[-1, 1], &k), 3));
    }
}
