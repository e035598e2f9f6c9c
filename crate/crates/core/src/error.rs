use thiserror::Error;

/// Errors raised by ring construction, structural analysis and map handling.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("elements belong to different rings")]
    RingMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unit axiom violated: {0}")]
    UnitAxiom(String),
    #[error("budget exceeded: {needed} evaluations needed, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("unsupported scalar domain: {0}")]
    UnsupportedDomain(String),
    #[error("element is not idempotent: {0}")]
    NotIdempotent(String),
    #[error("idempotent is trivial (zero or the unit)")]
    TrivialIdempotent,
    #[error("Peirce projections are inconsistent: {0}")]
    InconsistentFrame(String),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("ring is not associative; {0} requires an associative ring")]
    NotAssociative(String),
    #[error("offset is not central or does not vanish on commutators: {0}")]
    OffsetNotCentral(String),
    #[error("map is not bijective: {0}")]
    NotBijective(String),
    #[error("image of the idempotent is not a nontrivial idempotent")]
    NotIdempotentImage,
    #[error("hypothesis failed: {condition}")]
    HypothesisFailed { condition: String, witness: Option<Vec<String>> },
    #[error("branch undetermined: {0}")]
    BranchUndetermined(String),
    #[error("ambiguous central split: {0}")]
    AmbiguousCentralSplit(String),
    #[error("certification failed: {certificate}")]
    CertificationFailed { certificate: String, witness: Option<Vec<Vec<String>>> },
    #[error("{0}")]
    Other(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
