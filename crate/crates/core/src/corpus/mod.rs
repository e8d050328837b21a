//! Example algebras: group algebras, diagram algebras and synthetic families,
//! with the facts each one is expected to satisfy.

mod diagrams;
mod groups;
mod synthetic;

pub use diagrams::{brauer_algebra, compose, temperley_lieb};
pub use groups::{cyclic_group_algebra, group_algebra, symmetric_group_s3};
pub use synthetic::{direct_sum, dual_numbers, matrix_algebra, upper_triangular};

use crate::algebra::FiniteFreeAlgebra;
use crate::arith::{factor::prime_divisors, Ring};
use crate::error::Result;

/// A fact about an algebra together with the independent argument behind it.
#[derive(Clone, Debug, PartialEq)]
pub enum ExpectedFact {
    /// Primes (as displayed) with non-trivial decomposition map, in codimension one.
    ExcludedPrimes { primes: Vec<String>, oracle: String },
    /// The algebra splits over the base field in the generic fiber.
    GenericallySplit { split: bool, oracle: String },
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub algebra: FiniteFreeAlgebra,
    pub expected: Vec<ExpectedFact>,
    /// Excluded from the acceptance gates because of its cost.
    pub stretch: bool,
}

impl CorpusEntry {
    fn new(id: &str, algebra: FiniteFreeAlgebra) -> CorpusEntry {
        CorpusEntry {
            id: id.to_string(),
            algebra,
            expected: Vec::new(),
            stretch: false,
        }
    }

    fn expect(mut self, fact: ExpectedFact) -> CorpusEntry {
        self.expected.push(fact);
        self
    }

    pub fn expected_excluded(&self) -> Option<&[String]> {
        self.expected.iter().find_map(|f| match f {
            ExpectedFact::ExcludedPrimes { primes, .. } => Some(primes.as_slice()),
            _ => None,
        })
    }

    pub fn expected_split(&self) -> Option<bool> {
        self.expected.iter().find_map(|f| match f {
            ExpectedFact::GenericallySplit { split, .. } => Some(*split),
            _ => None,
        })
    }
}

fn group_primes(order: u64) -> ExpectedFact {
    let primes = prime_divisors(&order.into())
        .expect("small order")
        .iter()
        .map(|p| format!("({p})"))
        .collect();
    ExpectedFact::ExcludedPrimes {
        primes,
        oracle: format!("Maschke: exactly the primes dividing the group order {order}"),
    }
}

fn constant_radical() -> ExpectedFact {
    ExpectedFact::ExcludedPrimes {
        primes: Vec::new(),
        oracle: "radical dimension is the same in every fiber".into(),
    }
}

fn split(split: bool, oracle: &str) -> ExpectedFact {
    ExpectedFact::GenericallySplit {
        split,
        oracle: oracle.into(),
    }
}

/// All corpus entries, in a fixed order.
pub fn corpus() -> Result<Vec<CorpusEntry>> {
    let z = Ring::integers();
    let qd = Ring::parse("Q[delta]")?;
    let zd = Ring::parse("Z[delta]")?;
    let mut b3 = CorpusEntry::new("B3_Qdelta", brauer_algebra(3, &qd)?);
    b3.stretch = true;
    Ok(vec![
        CorpusEntry::new("C2", cyclic_group_algebra(2, &z)?)
            .expect(group_primes(2))
            .expect(split(true, "linear characters take values +1 and -1")),
        CorpusEntry::new("C3", cyclic_group_algebra(3, &z)?)
            .expect(split(false, "x^2 + x + 1 is irreducible over Q")),
        CorpusEntry::new("S3", symmetric_group_s3(&z)?)
            .expect(group_primes(6))
            .expect(split(true, "the character table of S3 is rational")),
        CorpusEntry::new("Mat2", matrix_algebra(2, &z)?)
            .expect(constant_radical())
            .expect(split(true, "a full matrix algebra is split simple")),
        CorpusEntry::new("UT2", upper_triangular(2, &z)?)
            .expect(constant_radical())
            .expect(split(true, "the simples are the two diagonal characters")),
        CorpusEntry::new("Dual", dual_numbers(&z)?)
            .expect(constant_radical())
            .expect(split(true, "one simple, the augmentation")),
        CorpusEntry::new("C2+Dual", direct_sum(&cyclic_group_algebra(2, &z)?, &dual_numbers(&z)?)?)
            .expect(group_primes(2)),
        CorpusEntry::new("B2_Qdelta", brauer_algebra(2, &qd)?),
        CorpusEntry::new("B2_Zdelta", brauer_algebra(2, &zd)?),
        CorpusEntry::new("TL2", temperley_lieb(2, &qd)?),
        CorpusEntry::new("TL3", temperley_lieb(3, &qd)?),
        CorpusEntry::new("TL4", temperley_lieb(4, &qd)?),
        b3,
    ])
}

pub fn entry(id: &str) -> Result<Option<CorpusEntry>> {
    Ok(corpus()?.into_iter().find(|e| e.id == id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_algebra, serialize_algebra};

    #[test]
    fn entries_round_trip_through_the_file_format() {
        for e in corpus().unwrap() {
            let text = serialize_algebra(&e.algebra);
            let back = parse_algebra(&text).unwrap();
            assert_eq!(serialize_algebra(&back), text, "{}", e.id);
        }
    }

    #[test]
    fn group_entries_expect_order_divisors() {
        let s3 = entry("S3").unwrap().unwrap();
        assert_eq!(s3.expected_excluded().unwrap(), &["(2)".to_string(), "(3)".to_string()]);
    }
}
