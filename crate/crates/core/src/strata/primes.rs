//! Minimal primes over an element, and seeded samplers of primes.

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::factor::{factor_upoly, is_prime, prime_divisors, primitive_integer};
use crate::arith::ring::integer_content;
use crate::arith::{Coefficients, Field, Poly, PrimeSpec, Ring, Scalar, UPoly};
use crate::error::{Error, Result};

/// A minimal prime over an element, or a factor that could not be turned
/// into a supported prime.
#[derive(Clone, Debug, PartialEq)]
pub enum PrimeComponent {
    Prime(PrimeSpec),
    Unresolved { factor: String, reason: String },
}

impl PrimeComponent {
    pub fn label(&self) -> String {
        match self {
            PrimeComponent::Prime(p) => p.to_string(),
            PrimeComponent::Unresolved { factor, .. } => format!("({factor})"),
        }
    }
}

fn component(ring: &Ring, gen: Poly) -> PrimeComponent {
    match PrimeSpec::new(ring, vec![gen.clone()]) {
        Ok(p) => PrimeComponent::Prime(p),
        Err(e) => PrimeComponent::Unresolved {
            factor: ring.format_element(&gen),
            reason: e.to_string(),
        },
    }
}

fn integer_primes(ring: &Ring, n: &BigInt) -> Result<Vec<PrimeComponent>> {
    Ok(prime_divisors(&n.abs())?
        .iter()
        .map(|p| component(ring, ring.from_bigint(p)))
        .collect())
}

/// Irreducible factors of a univariate polynomial in variable `var`.
fn univariate_factors(ring: &Ring, g: &Poly, var: usize, max_degree: usize) -> Result<Vec<Poly>> {
    let k = ring.coefficient_field();
    let mut u = g.to_upoly(var, &k);
    if u.deg() == 0 {
        return Ok(Vec::new());
    }
    // only the distinct factors matter, so factor the squarefree part
    let d = u.derivative(&k);
    if !d.is_zero() {
        u = u.div_exact(&u.gcd(&d, &k), &k).expect("gcd divides");
    }
    let n = ring.nvars();
    Ok(factor_upoly(&u, &k, max_degree)?
        .into_iter()
        .map(|(f, _)| {
            let f = if ring.has_integer_coefficients() {
                let z = primitive_integer(&f);
                UPoly::from_coeffs(z.iter().map(|c| k.from_bigint(c)).collect(), &k)
            } else {
                f
            };
            Poly::from_upoly(&f, var, n, &k)
        })
        .collect())
}

fn derivative(g: &Poly, var: usize, k: &Field) -> Poly {
    let terms = g
        .terms()
        .iter()
        .filter(|(m, _)| m[var] > 0)
        .map(|(m, c)| {
            let mut m = *m;
            let e = m[var];
            m[var] -= 1;
            (m, k.mul(c, &k.from_i64(e as i64)))
        })
        .collect();
    Poly::from_terms(g.nvars(), terms, k)
}

/// Content of `g` as a polynomial in `var`: the gcd of its coefficients.
fn content_in(ring: &Ring, g: &Poly, var: usize) -> Poly {
    let k = ring.coefficient_field();
    g.coefficients_in(var, &k)
        .iter()
        .fold(ring.zero(), |acc, c| ring.gcd(&acc, c))
}

fn bivariate_components(ring: &Ring, g: &Poly, max_degree: usize) -> Result<Vec<PrimeComponent>> {
    let k = ring.coefficient_field();
    let mut out = Vec::new();
    let mut rest = g.clone();
    // content in y is a polynomial in x, and vice versa
    for (var, other) in [(1, 0), (0, 1)] {
        let c = content_in(ring, &rest, var);
        rest = ring.div_exact(&rest, &c).expect("content divides");
        for f in univariate_factors(ring, &c, other, max_degree)? {
            out.push(component(ring, f));
        }
    }
    if rest.is_constant() {
        return Ok(out);
    }
    let var = if rest.degree_in(1) > 0 { 1 } else { 0 };
    let d = derivative(&rest, var, &k);
    let unresolved = |reason: &str| PrimeComponent::Unresolved {
        factor: ring.format_element(&rest),
        reason: reason.to_string(),
    };
    if d.is_zero() {
        out.push(unresolved("inseparable primitive part"));
        return Ok(out);
    }
    let sq = ring.div_exact(&rest, &ring.gcd(&rest, &d)).expect("gcd divides");
    // primitive in both variables, so linear in either one means irreducible
    if sq.degree_in(0) <= 1 || sq.degree_in(1) <= 1 {
        out.push(component(ring, sq));
    } else {
        out.push(PrimeComponent::Unresolved {
            factor: ring.format_element(&sq),
            reason: Error::UnsupportedFactorization("bivariate factor of degree 2 or more in both variables".into()).to_string(),
        });
    }
    Ok(out)
}

fn dedupe(mut v: Vec<PrimeComponent>) -> Vec<PrimeComponent> {
    let mut out: Vec<PrimeComponent> = Vec::new();
    v.drain(..).for_each(|c| {
        if !out.contains(&c) {
            out.push(c)
        }
    });
    out.sort_by_key(PrimeComponent::label);
    out
}

/// Minimal primes over the principal ideal `(g)`.
pub fn minimal_primes(ring: &Ring, g: &Poly, max_degree: usize) -> Result<Vec<PrimeComponent>> {
    if g.is_zero() {
        return Err(Error::InvariantViolation("the zero ideal has no proper minimal primes".into()));
    }
    if ring.is_unit(g) {
        return Ok(Vec::new());
    }
    let k = ring.coefficient_field();
    let out = match (ring.coefficients(), ring.nvars()) {
        (Coefficients::Integers, 0) => integer_primes(ring, &integer_content(g))?,
        (Coefficients::Integers, _) => {
            let c = integer_content(g);
            let mut out = integer_primes(ring, &c)?;
            let prim = g.scale(&k.inv(&k.from_bigint(&c)), &k);
            out.extend(univariate_factors(ring, &prim, 0, max_degree)?.into_iter().map(|f| component(ring, f)));
            out
        }
        (_, 1) => univariate_factors(ring, g, 0, max_degree)?
            .into_iter()
            .map(|f| component(ring, f))
            .collect(),
        _ => bivariate_components(ring, g, max_degree)?,
    };
    Ok(dedupe(out))
}

fn linear(ring: &Ring, var: usize, a: i64) -> Poly {
    ring.sub(&ring.var(var), &ring.from_i64(a))
}

fn random_candidate(ring: &Ring, rng: &mut ChaCha8Rng) -> Option<Vec<Poly>> {
    let small = |rng: &mut ChaCha8Rng| rng.gen_range(-30..=30);
    match (ring.coefficients(), ring.nvars()) {
        (_, 0) if ring.is_field() => None,
        (Coefficients::Integers, 0) => Some(vec![ring.from_i64(rng.gen_range(2..2000))]),
        (Coefficients::Integers, _) => {
            let p = ring.from_i64(rng.gen_range(2..200));
            let a = small(rng);
            Some(match rng.gen_range(0..3) {
                0 => vec![p],
                1 => vec![linear(ring, 0, a)],
                _ => vec![p, linear(ring, 0, a)],
            })
        }
        (Coefficients::Prime(q), 1) if rng.gen_bool(0.3) => {
            // an irreducible factor of a random monic quadratic
            let k = ring.coefficient_field();
            let c: Vec<Scalar> = vec![k.from_i64(rng.gen_range(0..*q as i64)), k.from_i64(rng.gen_range(0..*q as i64)), k.one()];
            let f = factor_upoly(&UPoly::from_coeffs(c, &k), &k, 2).ok()?;
            Some(vec![Poly::from_upoly(&f.last()?.0, 0, 1, &k)])
        }
        (_, 1) => Some(vec![linear(ring, 0, small(rng))]),
        _ => {
            let (a, b) = (small(rng), small(rng));
            Some(match rng.gen_range(0..3) {
                0 => vec![linear(ring, 0, a)],
                1 => vec![linear(ring, 1, b)],
                _ => vec![linear(ring, 0, a), linear(ring, 1, b)],
            })
        }
    }
}

/// Up to `count` distinct nonzero primes, none containing `avoid`.
pub fn sample_primes(ring: &Ring, avoid: Option<&Poly>, count: usize, seed: u64) -> Vec<PrimeSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<PrimeSpec> = Vec::new();
    for _ in 0..count * 50 {
        if out.len() == count {
            break;
        }
        let Some(gens) = random_candidate(ring, &mut rng) else {
            break;
        };
        if ring.nvars() == 0 && ring.has_integer_coefficients() {
            let n = integer_content(&gens[0]);
            if !is_prime(&n) {
                continue;
            }
        }
        let Ok(p) = PrimeSpec::new(ring, gens) else {
            continue;
        };
        if p.is_generic() || avoid.is_some_and(|g| p.contains(g)) || out.contains(&p) {
            continue;
        }
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(ring: &Ring, g: &str) -> Vec<String> {
        let g = ring.parse_element(g).unwrap();
        minimal_primes(ring, &g, 32).unwrap().iter().map(PrimeComponent::label).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(labels(&Ring::integers(), "108"), vec!["(2)", "(3)"]);
        assert_eq!(labels(&Ring::parse("Q[delta]").unwrap(), "delta^2*(delta-1)"), vec!["(delta)", "(delta-1)"]);
        assert_eq!(labels(&Ring::parse("Z[delta]").unwrap(), "2*delta"), vec!["(2)", "(delta)"]);
        assert!(labels(&Ring::integers(), "-1").is_empty());
    }

    #[test]
    fn bivariate() {
        let r = Ring::parse("Q[x,y]").unwrap();
        assert_eq!(labels(&r, "x^2*(y-x)"), vec!["(x)", "(x-y)"]);
        let g = r.parse_element("x^2+y^2+1").unwrap();
        assert!(matches!(minimal_primes(&r, &g, 32).unwrap()[0], PrimeComponent::Unresolved { .. }));
    }

    #[test]
    fn samples_avoid_the_element() {
        let z = Ring::integers();
        let six = z.from_i64(6);
        let ps = sample_primes(&z, Some(&six), 20, 7);
        assert_eq!(ps.len(), 20);
        assert!(ps.iter().all(|p| !p.contains(&six)));
        let r = Ring::parse("Z[delta]").unwrap();
        assert_eq!(sample_primes(&r, None, 10, 1).len(), 10);
    }
}
