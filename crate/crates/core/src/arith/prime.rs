//! Prime ideals of the supported rings, their residue fields, reduction maps
//! and the restriction maps `R -> R/p` that stay inside the supported rings.
//!
//! Every prime is stored with canonical generators, so two specs compare
//! equal exactly when they describe the same ideal. The residue map is an
//! evaluation homomorphism: coefficients go to the prime field of the
//! residue field and each variable has a fixed image.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::factor::{self, is_prime};
use super::field::{Field, FieldSummary, Scalar};
use super::poly::Poly;
use super::ring::{integer_content, Coefficients, Ring};
use super::upoly::UPoly;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PrimeKind {
    Generic,
    PrincipalIrreducible,
    MaximalPoint,
}

#[derive(Clone, Debug)]
pub struct PrimeSpec {
    ring: Ring,
    gens: Vec<Poly>,
    kind: PrimeKind,
    residue: Field,
    images: Vec<Scalar>,
}

impl PartialEq for PrimeSpec {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

impl Eq for PrimeSpec {}

impl std::hash::Hash for PrimeSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ring.hash(state);
        self.gens.hash(state);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeSummary {
    pub ring: String,
    pub generators: Vec<String>,
    pub kind: PrimeKind,
    pub residue_field: FieldSummary,
}

/// A ring map `R -> R/p` into another supported ring.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: Ring,
    target: Ring,
    /// Image of each source variable, as an element of the target.
    images: Vec<Poly>,
    /// Source variable carried by each target variable.
    kept: Vec<usize>,
}

impl PrimeSpec {
    pub fn generic(ring: &Ring) -> PrimeSpec {
        let residue = ring.fraction_field();
        let images = (0..ring.nvars()).map(|i| residue.generator(i)).collect();
        PrimeSpec {
            ring: ring.clone(),
            gens: Vec::new(),
            kind: PrimeKind::Generic,
            residue,
            images,
        }
    }

    /// Validate and canonicalize the ideal generated by `gens`.
    pub fn new(ring: &Ring, gens: Vec<Poly>) -> Result<PrimeSpec> {
        for g in &gens {
            if !ring.contains(g) {
                return Err(Error::Parse(format!("generator is not an element of {ring}")));
            }
        }
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Ok(PrimeSpec::generic(ring));
        }
        match (ring.coefficients(), ring.nvars()) {
            (Coefficients::Integers, 0) => integer_prime(ring, &gens),
            (Coefficients::Integers, _) => integer_poly_prime(ring, &gens),
            (_, 0) => Err(Error::NotPrime("a nonzero element of a field generates the unit ideal".into())),
            (_, 1) => field_poly_prime(ring, &gens),
            _ => bivariate_prime(ring, &gens),
        }
    }

    /// Parse `p=<int>`, `gen=[<poly>,...]` or `generic`.
    pub fn parse(text: &str, ring: &Ring) -> Result<PrimeSpec> {
        let t = text.trim();
        if t == "generic" || t == "0" || t == "(0)" {
            return Ok(PrimeSpec::generic(ring));
        }
        if let Some(p) = t.strip_prefix("p=") {
            let n: BigInt = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer in prime {text:?}")))?;
            return PrimeSpec::new(ring, vec![ring.from_bigint(&n)]);
        }
        if let Some(rest) = t.strip_prefix("gen=") {
            let inner = rest
                .trim()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("expected gen=[...] in {text:?}")))?;
            let gens = split_top_level(inner)
                .iter()
                .filter(|s| !s.trim().is_empty())
                .map(|s| ring.parse_element(s))
                .collect::<Result<Vec<_>>>()?;
            return PrimeSpec::new(ring, gens);
        }
        Err(Error::Parse(format!(
            "prime must be p=<int>, gen=[...] or generic, got {text:?}"
        )))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn kind(&self) -> PrimeKind {
        self.kind
    }

    pub fn residue_field(&self) -> &Field {
        &self.residue
    }

    pub fn is_generic(&self) -> bool {
        self.kind == PrimeKind::Generic
    }

    pub fn is_maximal(&self) -> bool {
        self.residue.function_vars().is_empty()
    }

    pub fn summary(&self) -> PrimeSummary {
        PrimeSummary {
            ring: self.ring.to_string(),
            generators: self.gens.iter().map(|g| self.ring.format_element(g)).collect(),
            kind: self.kind,
            residue_field: self.residue.summary(),
        }
    }

    /// Image of a ring element in the residue field.
    pub fn reduce(&self, x: &Poly) -> Scalar {
        let l = &self.residue;
        if self.is_generic() {
            return self.ring.to_fraction(x);
        }
        let mut acc = l.zero();
        for (m, c) in x.terms() {
            let mut t = embed_coefficient(c, l);
            for (v, img) in self.images.iter().enumerate() {
                if m[v] > 0 {
                    t = l.mul(&t, &l.pow(img, m[v] as u128));
                }
            }
            acc = l.add(&acc, &t);
        }
        acc
    }

    pub fn contains(&self, x: &Poly) -> bool {
        self.residue.is_zero(&self.reduce(x))
    }

    /// `self` is contained in `other` (both in the same ring).
    pub fn is_contained_in(&self, other: &PrimeSpec) -> bool {
        self.ring == other.ring && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn is_in_localization(&self, alpha: &Scalar) -> bool {
        !self.contains(&self.ring.denominator_ideal(alpha))
    }

    /// Image of a fraction-field element lying in the local ring at this prime.
    pub fn reduce_fraction(&self, alpha: &Scalar) -> Result<Scalar> {
        if self.is_generic() {
            return Ok(alpha.clone());
        }
        let k = self.ring.fraction_field();
        let d = self.ring.denominator_ideal(alpha);
        let rd = self.reduce(&d);
        if self.residue.is_zero(&rd) {
            return Err(Error::NotReducible(k.format(alpha)));
        }
        let a = self
            .ring
            .from_fraction(&k.mul(alpha, &self.ring.to_fraction(&d)))
            .expect("denominator ideal clears the fraction");
        Ok(self.residue.div(&self.reduce(&a), &rd))
    }

    /// The ring map `R -> R/p` when `R/p` is again a supported ring.
    pub fn restriction_map(&self) -> Result<RingMap> {
        let ring = &self.ring;
        let k = ring.coefficient_field();
        let unsupported = || {
            Error::UnsupportedRestriction(format!("{ring}/{self} is not a supported ring"))
        };
        if self.is_generic() {
            return Ok(RingMap {
                source: ring.clone(),
                target: ring.clone(),
                images: (0..ring.nvars()).map(|i| ring.var(i)).collect(),
                kept: (0..ring.nvars()).collect(),
            });
        }
        match (ring.coefficients(), ring.nvars(), self.gens.len()) {
            (Coefficients::Integers, _, 1) if self.gens[0].is_constant() => {
                let p = self.gens[0].constant_value(&k);
                let p = rational_to_u64(&p).ok_or_else(unsupported)?;
                let target = Ring::new(Coefficients::Prime(p), ring.vars().to_vec())?;
                let images = (0..ring.nvars()).map(|i| target.var(i)).collect();
                Ok(RingMap {
                    source: ring.clone(),
                    target,
                    images,
                    kept: (0..ring.nvars()).collect(),
                })
            }
            (_, 1, 1) if self.gens[0].total_degree() == Some(1) => {
                // (a*x + b) with a a unit
                let g = &self.gens[0];
                let u = g.to_upoly(0, &k);
                let a = &u.coeffs()[1];
                if ring.has_integer_coefficients() && !ring.is_unit(&Poly::constant(a.clone(), 0, &k)) {
                    return Err(unsupported());
                }
                let root = k.neg(&k.div(&u.coeffs()[0], a));
                let target = Ring::new(ring.coefficients().clone(), vec![])?;
                Ok(RingMap {
                    source: ring.clone(),
                    target,
                    images: vec![Poly::constant(root, 0, &k)],
                    kept: vec![],
                })
            }
            (_, 2, 1) => {
                let g = &self.gens[0];
                let (v, image) = linear_solution(g, &k).ok_or_else(unsupported)?;
                let w = 1 - v;
                let target = Ring::new(ring.coefficients().clone(), vec![ring.vars()[w].clone()])?;
                let mut images = vec![Poly::zero(1); 2];
                images[w] = target.var(0);
                images[v] = image.remove_var(v).embed_vars(1, &[0], &k);
                Ok(RingMap {
                    source: ring.clone(),
                    target,
                    images,
                    kept: vec![w],
                })
            }
            (_, 2, 2) if self.residue == k => {
                let target = Ring::new(ring.coefficients().clone(), vec![])?;
                let images = self
                    .images
                    .iter()
                    .map(|c| Poly::constant(c.clone(), 0, &k))
                    .collect();
                Ok(RingMap {
                    source: ring.clone(),
                    target,
                    images,
                    kept: vec![],
                })
            }
            (Coefficients::Integers, 1, 2) => {
                let Field::Prime(p) = self.residue else {
                    return Err(unsupported());
                };
                let target = Ring::new(Coefficients::Prime(p), vec![])?;
                let images = self
                    .images
                    .iter()
                    .map(|c| Poly::constant(c.clone(), 0, &self.residue))
                    .collect();
                Ok(RingMap {
                    source: ring.clone(),
                    target,
                    images,
                    kept: vec![],
                })
            }
            _ => Err(unsupported()),
        }
    }
}

impl RingMap {
    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
    }

    pub fn apply(&self, x: &Poly) -> Poly {
        let kt = self.target.coefficient_field();
        let n = self.target.nvars();
        let mut acc = Poly::zero(n);
        for (m, c) in x.terms() {
            let mut t = Poly::constant(embed_coefficient(c, &kt), n, &kt);
            for (v, img) in self.images.iter().enumerate() {
                if m[v] > 0 {
                    t = t.mul(&img.pow(m[v], &kt), &kt);
                }
            }
            acc = acc.add(&t, &kt);
        }
        acc
    }

    /// A preimage of a target element; prime-field residues lift to `0..p`.
    pub fn lift(&self, y: &Poly) -> Poly {
        let ks = self.source.coefficient_field();
        let terms = y
            .terms()
            .iter()
            .map(|(m, c)| {
                let c = match (c, &ks) {
                    (Scalar::Mod(v), Field::Rationals) => Scalar::Rat(BigRational::from_integer((*v).into())),
                    _ => c.clone(),
                };
                let mut out = [0, 0];
                for (j, &src) in self.kept.iter().enumerate() {
                    out[src] = m[j];
                }
                (out, c)
            })
            .collect();
        Poly::from_terms(self.source.nvars(), terms, &ks)
    }

    /// The prime of the source ring corresponding to a prime of the target,
    /// given the prime this map restricts at.
    pub fn lift_prime(&self, at: &PrimeSpec, child: &PrimeSpec) -> Result<PrimeSpec> {
        let mut gens = at.generators().to_vec();
        gens.extend(child.generators().iter().map(|g| self.lift(g)));
        PrimeSpec::new(&self.source, gens)
    }
}

impl fmt::Display for PrimeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.format_element(g)).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn embed_coefficient(c: &Scalar, l: &Field) -> Scalar {
    match c {
        Scalar::Rat(q) => l.from_rational(q),
        Scalar::Mod(v) => l.from_bigint(&BigInt::from(*v)),
        _ => unreachable!("ring coefficients are rational or prime-field scalars"),
    }
}

fn rational_to_u64(c: &Scalar) -> Option<u64> {
    match c {
        Scalar::Rat(q) if q.is_integer() => q.numer().abs().to_u64(),
        _ => None,
    }
}

/// Split at top-level commas, ignoring commas inside parentheses.
fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur);
    out
}

fn integer_prime(ring: &Ring, gens: &[Poly]) -> Result<PrimeSpec> {
    let k = Field::Rationals;
    let g = gens.iter().fold(BigInt::zero(), |acc, x| {
        num_integer::Integer::gcd(&acc, &integer_value(x, &k))
    });
    if !is_prime(&g) {
        return Err(Error::NotPrime(format!("({g}) in Z")));
    }
    let p = g.to_u64().filter(|p| *p < 1 << 62).ok_or_else(|| {
        Error::UnsupportedResidueField(format!("prime {g} exceeds the word-size limit"))
    })?;
    Ok(PrimeSpec {
        ring: ring.clone(),
        gens: vec![ring.from_bigint(&g)],
        kind: PrimeKind::PrincipalIrreducible,
        residue: Field::Prime(p),
        images: vec![],
    })
}

fn integer_value(x: &Poly, k: &Field) -> BigInt {
    match x.constant_value(k) {
        Scalar::Rat(q) => q.to_integer(),
        _ => unreachable!(),
    }
}

/// Residue field of `k[w]/(f)` for monic irreducible `f`, and the image of `w`.
fn simple_extension(f: &UPoly, k: &Field, name: &str) -> Result<(Field, Scalar)> {
    if f.deg() == 1 {
        return Ok((k.clone(), k.neg(&f.coeffs()[0])));
    }
    match k {
        Field::Prime(p) => {
            let modulus: Vec<u64> = f
                .coeffs()
                .iter()
                .map(|c| match c {
                    Scalar::Mod(v) => *v,
                    _ => unreachable!(),
                })
                .collect();
            Ok((Field::galois(*p, modulus, name), Scalar::Ext(vec![0, 1])))
        }
        _ => Err(Error::UnsupportedResidueField(format!(
            "extension of degree {} over {k}",
            f.deg()
        ))),
    }
}

fn integer_poly_prime(ring: &Ring, gens: &[Poly]) -> Result<PrimeSpec> {
    let k = Field::Rationals;
    let name = ring.vars()[0].clone();
    let (consts, polys): (Vec<&Poly>, Vec<&Poly>) = gens.iter().partition(|g| g.is_constant());
    if !consts.is_empty() {
        let p = consts.iter().fold(BigInt::zero(), |acc, x| {
            num_integer::Integer::gcd(&acc, &integer_value(x, &k))
        });
        if !is_prime(&p) {
            return Err(Error::NotPrime(format!("ideal contains {p}")));
        }
        let pu = p.to_u64().filter(|p| *p < 1 << 62).ok_or_else(|| {
            Error::UnsupportedResidueField(format!("prime {p} exceeds the word-size limit"))
        })?;
        let fp = Field::Prime(pu);
        let mut g = UPoly::zero();
        for f in &polys {
            let fm = f.to_upoly(0, &k).map(&fp, |c| embed_coefficient(c, &fp));
            g = g.gcd(&fm, &fp);
        }
        if g.is_zero() {
            return Ok(PrimeSpec {
                ring: ring.clone(),
                gens: vec![ring.from_bigint(&p)],
                kind: PrimeKind::PrincipalIrreducible,
                residue: Field::function(fp.clone(), vec![name]),
                images: vec![Field::function(fp, ring.vars().to_vec()).generator(0)],
            });
        }
        if g.deg() == 0 {
            return Err(Error::NotPrime("generators generate the unit ideal".into()));
        }
        if !factor::is_irreducible(&g, &fp, usize::MAX)? {
            return Err(Error::NotPrime(format!(
                "{} is reducible modulo {p}",
                g.format(&name, &fp)
            )));
        }
        let (residue, alpha) = simple_extension(&g, &fp, &name)?;
        let lifted = g.map(&k, |c| embed_coefficient(c, &k));
        return Ok(PrimeSpec {
            ring: ring.clone(),
            gens: vec![ring.from_bigint(&p), Poly::from_upoly(&lifted, 0, 1, &k)],
            kind: PrimeKind::MaximalPoint,
            residue,
            images: vec![alpha],
        });
    }
    let first = ring.normalize(polys[0]);
    if polys.iter().any(|g| ring.normalize(g) != first) {
        return Err(Error::UnsupportedResidueField(
            "several non-constant generators without an integer generator".into(),
        ));
    }
    let f = first;
    if !integer_content(&f).is_one() {
        return Err(Error::NotPrime(format!("{} is not primitive", ring.format_element(&f))));
    }
    let u = f.to_upoly(0, &k);
    if !factor::is_irreducible_rational(&u, factor::DEFAULT_MAX_DEGREE)? {
        return Err(Error::NotPrime(format!("{} is reducible over Q", ring.format_element(&f))));
    }
    if u.deg() > 1 {
        return Err(Error::UnsupportedResidueField(format!(
            "Q[{name}]/({}) is a number field",
            ring.format_element(&f)
        )));
    }
    let root = k.neg(&k.div(&u.coeffs()[0], &u.coeffs()[1]));
    Ok(PrimeSpec {
        ring: ring.clone(),
        gens: vec![f],
        kind: PrimeKind::PrincipalIrreducible,
        residue: Field::Rationals,
        images: vec![root],
    })
}

fn field_poly_prime(ring: &Ring, gens: &[Poly]) -> Result<PrimeSpec> {
    let k = ring.coefficient_field();
    let name = ring.vars()[0].clone();
    let g = gens
        .iter()
        .fold(UPoly::zero(), |acc, f| acc.gcd(&f.to_upoly(0, &k), &k));
    if g.deg() == 0 {
        return Err(Error::NotPrime("generators generate the unit ideal".into()));
    }
    if !factor::is_irreducible(&g, &k, factor::DEFAULT_MAX_DEGREE)? {
        return Err(Error::NotPrime(format!("{} is reducible", g.format(&name, &k))));
    }
    let (residue, alpha) = simple_extension(&g, &k, &name)?;
    Ok(PrimeSpec {
        ring: ring.clone(),
        gens: vec![Poly::from_upoly(&g, 0, 1, &k)],
        kind: PrimeKind::PrincipalIrreducible,
        residue,
        images: vec![alpha],
    })
}

/// For `g = a*v + b` with `a`, `b` in `k[w]` coprime, returns `v` and the
/// solution `v = -b/a` when `a` is a nonzero constant.
fn linear_solution(g: &Poly, k: &Field) -> Option<(usize, Poly)> {
    for v in [1usize, 0] {
        if g.degree_in(v) != 1 {
            continue;
        }
        let cs = g.coefficients_in(v, k);
        if cs[1].is_constant() {
            let a = cs[1].constant_value(k);
            return Some((v, cs[0].scale(&k.neg(&k.inv(&a)), k)));
        }
    }
    None
}

fn univariate_var(g: &Poly) -> Option<usize> {
    match g.support_vars().as_slice() {
        [w] => Some(*w),
        _ => None,
    }
}

fn bivariate_prime(ring: &Ring, gens: &[Poly]) -> Result<PrimeSpec> {
    let k = ring.coefficient_field();
    let mut gens: Vec<Poly> = gens.iter().map(|g| g.monic(&k)).collect();
    gens.sort_by(|a, b| a.cmp_with(b, &k));
    gens.dedup();
    if gens.iter().any(|g| g.is_constant()) {
        return Err(Error::NotPrime("ideal contains a unit".into()));
    }
    if gens.len() == 1 {
        return principal_bivariate(ring, &gens[0]);
    }
    for w in [0usize, 1] {
        let uni: Vec<&Poly> = gens.iter().filter(|g| univariate_var(g) == Some(w)).collect();
        if uni.is_empty() {
            continue;
        }
        let f = uni
            .iter()
            .fold(UPoly::zero(), |acc, g| acc.gcd(&g.remove_var(1 - w).to_upoly(0, &k), &k));
        if f.deg() == 0 {
            return Err(Error::NotPrime("generators generate the unit ideal".into()));
        }
        if !factor::is_irreducible(&f, &k, factor::DEFAULT_MAX_DEGREE)? {
            return Err(Error::UnsupportedResidueField(
                "maximal point over a reducible univariate polynomial".into(),
            ));
        }
        let v = 1 - w;
        let (kw, alpha) = simple_extension(&f, &k, &ring.vars()[w])?;
        let mut h = UPoly::zero();
        for g in gens.iter().filter(|g| univariate_var(g) != Some(w)) {
            // substitute w -> alpha, view as a polynomial in v over kw
            let cs = g.coefficients_in(v, &k);
            let coeffs: Vec<Scalar> = cs
                .iter()
                .map(|c| {
                    let mut acc = kw.zero();
                    for (m, s) in c.terms() {
                        let t = kw.mul(&embed_coefficient(s, &kw), &kw.pow(&alpha, m[w] as u128));
                        acc = kw.add(&acc, &t);
                    }
                    acc
                })
                .collect();
            h = h.gcd(&UPoly::from_coeffs(coeffs, &kw), &kw);
        }
        let fw = Poly::from_upoly(&f, 0, 1, &k).embed_vars(2, &[w], &k);
        if h.is_zero() {
            return principal_bivariate(ring, &fw);
        }
        if h.deg() == 0 {
            return Err(Error::NotPrime("generators generate the unit ideal".into()));
        }
        if h.deg() > 1 {
            return Err(Error::UnsupportedResidueField(
                "maximal point with a residue field of higher degree".into(),
            ));
        }
        let beta = kw.neg(&h.coeffs()[0]);
        let mut images = vec![kw.zero(), kw.zero()];
        images[w] = alpha;
        images[v] = beta.clone();
        // canonical generators: rational points as (x - a, y - b), otherwise (f(w), v - h(w))
        let hw = match &beta {
            Scalar::Ext(c) => {
                let terms = c
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| {
                        let mut m = [0, 0];
                        m[w] = i as u32;
                        (m, k.from_i64(x as i64))
                    })
                    .collect();
                Poly::from_terms(2, terms, &k)
            }
            b => Poly::constant(b.clone(), 2, &k),
        };
        let vpoly = Poly::var(v, 2, &k).sub(&hw, &k);
        let gens = if f.deg() == 1 {
            let mut g = vec![fw, vpoly];
            g.sort_by_key(|p| p.support_vars());
            g
        } else {
            vec![fw, vpoly]
        };
        return Ok(PrimeSpec {
            ring: ring.clone(),
            gens,
            kind: PrimeKind::MaximalPoint,
            residue: kw,
            images,
        });
    }
    Err(Error::UnsupportedResidueField(
        "ideal shape is not a supported maximal point".into(),
    ))
}

fn principal_bivariate(ring: &Ring, f: &Poly) -> Result<PrimeSpec> {
    let k = ring.coefficient_field();
    let f = f.monic(&k);
    if let Some(w) = univariate_var(&f) {
        let v = 1 - w;
        let u = f.remove_var(v).to_upoly(0, &k);
        if !factor::is_irreducible(&u, &k, factor::DEFAULT_MAX_DEGREE)? {
            return Err(Error::NotPrime(format!("{} is reducible", ring.format_element(&f))));
        }
        let (kw, alpha) = simple_extension(&u, &k, &ring.vars()[w])?;
        let residue = Field::function(kw.clone(), vec![ring.vars()[v].clone()]);
        let mut images = vec![residue.zero(), residue.zero()];
        images[w] = residue.embed_base(&alpha);
        images[v] = residue.generator(0);
        return Ok(PrimeSpec {
            ring: ring.clone(),
            gens: vec![f],
            kind: PrimeKind::PrincipalIrreducible,
            residue,
            images,
        });
    }
    for v in [1usize, 0] {
        if f.degree_in(v) != 1 {
            continue;
        }
        let w = 1 - v;
        let cs = f.coefficients_in(v, &k);
        let (b, a) = (cs[0].remove_var(v), cs[1].remove_var(v));
        if !super::gcd::poly_gcd(&a, &b, &k).is_one(&k) {
            continue;
        }
        let residue = Field::function(k.clone(), vec![ring.vars()[w].clone()]);
        let value = residue.fraction(b.neg(&k), a);
        let mut images = vec![residue.zero(), residue.zero()];
        images[w] = residue.generator(0);
        images[v] = value;
        return Ok(PrimeSpec {
            ring: ring.clone(),
            gens: vec![f],
            kind: PrimeKind::PrincipalIrreducible,
            residue,
            images,
        });
    }
    Err(Error::UnsupportedResidueField(format!(
        "cannot certify that {} is irreducible",
        ring.format_element(&f)
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(ring: &str, text: &str) -> Result<PrimeSpec> {
        PrimeSpec::parse(text, &Ring::parse(ring).unwrap())
    }

    #[test]
    fn reduce_examples() {
        let z = Ring::integers();
        let p2 = prime("Z", "p=2").unwrap();
        assert!(p2.residue_field().is_zero(&p2.reduce(&z.from_i64(6))));
        let qx = Ring::parse("Q[x]").unwrap();
        let p = prime("Q[x]", "gen=[x-1]").unwrap();
        let v = p.reduce(&qx.parse_element("x^2+1").unwrap());
        assert_eq!(p.residue_field().format(&v), "2");
        let zx = Ring::parse("Z[x]").unwrap();
        let p3 = prime("Z[x]", "p=3").unwrap();
        assert!(p3.contains(&zx.parse_element("3*x").unwrap()));
    }

    #[test]
    fn validation() {
        assert!(matches!(prime("Z", "gen=[4]"), Err(Error::NotPrime(_))));
        assert!(matches!(prime("Q[x]", "gen=[x^2-1]"), Err(Error::NotPrime(_))));
        assert!(matches!(prime("Q[x]", "gen=[x^2+1]"), Err(Error::UnsupportedResidueField(_))));
        let f4 = prime("F_2[x]", "gen=[x^2+x+1]").unwrap();
        assert_eq!(f4.residue_field().order(), Some(4));
        assert!(matches!(prime("Z[x]", "gen=[2*x]"), Err(Error::NotPrime(_))));
        assert!(matches!(prime("Q", "gen=[3]"), Err(Error::NotPrime(_))));
    }

    #[test]
    fn canonical_generators_of_points() {
        let a = prime("Z[d]", "gen=[2, d+4]").unwrap();
        let b = prime("Z[d]", "gen=[d, 6-4]").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(2,d)");
        let c = prime("Q[x,y]", "gen=[x-y, y-2]").unwrap();
        let d = prime("Q[x,y]", "gen=[y-2, x-2]").unwrap();
        assert_eq!(c, d);
        assert_eq!(c.kind(), PrimeKind::MaximalPoint);
    }

    #[test]
    fn localization() {
        let z = Ring::integers();
        let k = z.fraction_field();
        let a = k.div(&k.from_i64(3), &k.from_i64(2));
        assert!(prime("Z", "p=3").unwrap().is_in_localization(&a));
        assert!(!prime("Z", "p=2").unwrap().is_in_localization(&a));
        let p5 = prime("Z", "p=5").unwrap();
        assert_eq!(p5.reduce_fraction(&a).unwrap(), Scalar::Mod(4));
    }

    #[test]
    fn restriction_and_lift() {
        let at = prime("Z[d]", "p=2").unwrap();
        let map = at.restriction_map().unwrap();
        assert_eq!(map.target().to_string(), "F_2[d]");
        let child = PrimeSpec::parse("gen=[d]", map.target()).unwrap();
        assert_eq!(map.lift_prime(&at, &child).unwrap().to_string(), "(2,d)");
        let at = prime("Z[d]", "gen=[d]").unwrap();
        let map = at.restriction_map().unwrap();
        assert_eq!(map.target().to_string(), "Z");
        let child = PrimeSpec::parse("p=2", map.target()).unwrap();
        assert_eq!(map.lift_prime(&at, &child).unwrap().to_string(), "(2,d)");
        let line = prime("Q[x,y]", "gen=[y-x^2]").unwrap();
        let map = line.restriction_map().unwrap();
        let img = map.apply(&Ring::parse("Q[x,y]").unwrap().parse_element("x*y+1").unwrap());
        assert_eq!(map.target().format_element(&img), "x^3+1");
    }

    #[test]
    fn bivariate_line_residue() {
        let r = Ring::parse("Q[x,y]").unwrap();
        let p = prime("Q[x,y]", "gen=[x*y-1]").unwrap();
        let v = p.reduce(&r.parse_element("y").unwrap());
        assert_eq!(p.residue_field().format(&v), "1/x");
    }
}
