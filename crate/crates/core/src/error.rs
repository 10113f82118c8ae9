use thiserror::Error;

use crate::arrangement::IndexSet;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator {denominator} vanishes at the given point")]
    DenominatorVanishes { denominator: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("malformed index set: {0}")]
    MalformedIndexSet(String),
    #[error("invalid realization: {0}")]
    InvalidRealization(String),
    #[error("dependency data is not matroidal: {0}")]
    NotMatroidal(String),
    #[error("{0} is not a beta-nbc frame")]
    NotBetaNbc(IndexSet),
    #[error("weights have length {found}, expected {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error("weights are resonant: {0}")]
    Resonant(String),
    #[error("cocycles and coboundaries fail to span the top degree (defect {defect})")]
    SpanDefect { defect: usize },
    #[error("beta-nbc cocycles are dependent modulo coboundaries (rank defect {defect})")]
    DependentCocycles { defect: usize },
    #[error("{tprime:?} is not a degeneration of {t:?}")]
    NotADegeneration { t: Vec<IndexSet>, tprime: Vec<IndexSet> },
    #[error("minor {0} vanishes identically along the path")]
    IdenticallyZeroMinor(IndexSet),
    #[error("type at {at} does not match the declared type: expected dep {expected:?}, found {found:?}")]
    TypeMismatch { at: String, expected: Vec<IndexSet>, found: Vec<IndexSet> },
    #[error("path leaves the closure of the stratum: minor {0} is not identically zero")]
    PathLeavesStratum(IndexSet),
    #[error("multiplicity keys {found:?} do not match relative dependencies {expected:?}")]
    MultiplicityKeyMismatch { expected: Vec<IndexSet>, found: Vec<IndexSet> },
    #[error("inconsistent connection system: row {row} fails verification")]
    InconsistentSystem { row: IndexSet },
    #[error("projection matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("index sets {0} and {1} do not overlap in exactly l-1 elements")]
    Overlap(IndexSet, IndexSet),
    #[error("type has {0} dependent sets; the closed form needs exactly one")]
    NotCodimensionOne(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
