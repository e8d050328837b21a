use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants fall into three families: input validation failures, requests
/// outside the supported scope, and internal-consistency failures that
/// indicate a bug (they should never fire on valid input).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("unsupported residue field: {0}")]
    UnsupportedResidueField(String),
    #[error("unsupported restriction: {0}")]
    UnsupportedRestriction(String),
    #[error("unsupported factorization: {0}")]
    UnsupportedFactorization(String),
    #[error("factorization budget exceeded: {0}")]
    FactorBudgetExceeded(String),
    #[error("not a prime ideal: {0}")]
    NotPrime(String),
    #[error("structure constants are not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit vector is not a two-sided unit: {0}")]
    NoUnit(String),
    #[error("bad trace form: {0}")]
    BadTraceForm(String),
    #[error("ideal contains the unit")]
    UnitInIdeal,
    #[error("composition-factor search exceeded its budget: {0}")]
    ChopBudgetExceeded(String),
    #[error("computed radical is not nilpotent")]
    RadicalNotNilpotent,
    #[error("fingerprint coefficient {0} does not lie in the base ring")]
    AttractorEscapesBase(String),
    #[error("coefficient {0} is not in the localization at the prime")]
    NotReducible(String),
    #[error("fiber does not split: {0}")]
    NotSplit(String),
    #[error("decomposition system has no unique non-negative integer solution: {0}")]
    NoIntegerSolution(String),
    #[error("algebra is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("generic fiber is not split semisimple: {0}")]
    NotSemisimpleGeneric(String),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("internal consistency check failed: {0}")]
    InvariantViolation(String),
}

/// Coarse classification used by the command-line exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Validation,
    Unsupported,
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            Parse(_) | DimensionMismatch(_) | NotSquare(..) | NotPrime(_) | NotAssociative(..)
            | NoUnit(_) | BadTraceForm(_) | UnitInIdeal | NotAGroup(_) | Io(_) | NotSymmetric(_)
            | Inconsistent => ErrorClass::Validation,
            UnsupportedRing(_)
            | UnsupportedResidueField(_)
            | UnsupportedRestriction(_)
            | UnsupportedFactorization(_)
            | FactorBudgetExceeded(_)
            | ChopBudgetExceeded(_)
            | NotSplit(_)
            | NotSemisimpleGeneric(_) => ErrorClass::Unsupported,
            RadicalNotNilpotent
            | AttractorEscapesBase(_)
            | NotReducible(_)
            | NoIntegerSolution(_)
            | InvariantViolation(_) => ErrorClass::Internal,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
