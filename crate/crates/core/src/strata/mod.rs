//! Decomposition discriminants and the stratification of `Spec R` into
//! loci where the decomposition map is trivial.
//!
//! The candidate discriminant over-approximates the bad locus; every
//! minimal prime over it is then checked exactly by comparing radical
//! dimensions, so the reported excluded set is verified.

mod lattice;
mod primes;
mod schur;
mod tree;

pub use lattice::{candidate_discriminant, radical_lattice, CandidateDiscriminant, RadicalLattice};
pub use primes::{minimal_primes, sample_primes, PrimeComponent};
pub use schur::{schur_elements, summarize as summarize_schur, SchurElement, SchurSummary};
pub use tree::{stratify, Stratum, StratumNode, StratificationTree};

use serde::Serialize;

use crate::analysis::Analysis;
use crate::arith::PrimeSpec;
use crate::decomposition::radical_comparison;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum ComponentStatus {
    Excluded { generic_radical_dim: usize, fiber_radical_dim: usize },
    RecoveredTrivial { radical_dim: usize },
    Unknown { reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct Component {
    pub prime: String,
    #[serde(skip)]
    pub spec: Option<PrimeSpec>,
    #[serde(flatten)]
    pub status: ComponentStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct Discriminant {
    pub ring: String,
    /// Generator of the candidate ideal, before verification.
    pub candidate: String,
    pub components: Vec<Component>,
}

impl Discriminant {
    pub fn excluded(&self) -> Vec<&PrimeSpec> {
        self.components
            .iter()
            .filter(|c| matches!(c.status, ComponentStatus::Excluded { .. }))
            .filter_map(|c| c.spec.as_ref())
            .collect()
    }

    pub fn excluded_labels(&self) -> Vec<String> {
        self.excluded().iter().map(|p| p.to_string()).collect()
    }

    pub fn unknown(&self) -> Vec<&Component> {
        self.components
            .iter()
            .filter(|c| matches!(c.status, ComponentStatus::Unknown { .. }))
            .collect()
    }
}

fn verify(an: &Analysis, p: &PrimeSpec) -> ComponentStatus {
    match radical_comparison(an, p) {
        Ok(c) if c.trivial => ComponentStatus::RecoveredTrivial {
            radical_dim: c.fiber_radical_dim,
        },
        Ok(c) => ComponentStatus::Excluded {
            generic_radical_dim: c.generic_radical_dim,
            fiber_radical_dim: c.fiber_radical_dim,
        },
        Err(e) => ComponentStatus::Unknown { reason: e.to_string() },
    }
}

/// Candidate discriminant and the exact status of each of its minimal primes.
pub fn dec_ex(an: &Analysis) -> Result<Discriminant> {
    let ring = an.algebra().ring();
    if ring.is_field() {
        return Ok(Discriminant {
            ring: ring.to_string(),
            candidate: "1".into(),
            components: Vec::new(),
        });
    }
    let lattice = radical_lattice(an)?;
    let candidate = candidate_discriminant(an, &lattice)?;
    if candidate.generator.is_zero() {
        return Err(Error::UnsupportedFactorization(
            "the trace form of the semisimple quotient is degenerate everywhere".into(),
        ));
    }
    let components = minimal_primes(ring, &candidate.generator, an.options().max_degree)?
        .into_iter()
        .map(|c| match c {
            PrimeComponent::Prime(p) => Component {
                prime: p.to_string(),
                status: verify(an, &p),
                spec: Some(p),
            },
            PrimeComponent::Unresolved { factor, reason } => Component {
                prime: format!("({factor})"),
                spec: None,
                status: ComponentStatus::Unknown { reason },
            },
        })
        .collect();
    Ok(Discriminant {
        ring: ring.to_string(),
        candidate: ring.format_element(&candidate.generator),
        components,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SchurCrosscheck {
    pub schur_elements: Vec<SchurSummary>,
    pub product: String,
    pub schur_primes: Vec<String>,
    pub excluded: Vec<String>,
    pub agrees: bool,
}

/// Compare the zero locus of the product of the Schur elements with the
/// verified excluded primes.
pub fn schur_discriminant_crosscheck(an: &Analysis) -> Result<SchurCrosscheck> {
    let ring = an.algebra().ring();
    let k = ring.fraction_field();
    let elements = schur_elements(an)?;
    let product = elements.iter().fold(k.one(), |acc, e| k.mul(&acc, &e.value));
    let product = ring
        .from_fraction(&product)
        .ok_or_else(|| Error::InvariantViolation("product of Schur elements left the ring".into()))?;
    let comps = minimal_primes(ring, &product, an.options().max_degree)?;
    let schur_primes: Vec<String> = comps.iter().map(PrimeComponent::label).collect();
    let mut excluded = dec_ex(an)?.excluded_labels();
    excluded.sort();
    let mut sorted = schur_primes.clone();
    sorted.sort();
    let agrees = sorted == excluded && comps.iter().all(|c| matches!(c, PrimeComponent::Prime(_)));
    Ok(SchurCrosscheck {
        schur_elements: summarize_schur(an, &elements),
        product: ring.format_element(&product),
        schur_primes,
        excluded,
        agrees,
    })
}
