use thiserror::Error;

use crate::time::Seconds;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library reports. Messages name the violated invariant.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid decimal time {0:?}: expected digits with at most nine decimal places")]
    InvalidTime(String),
    #[error("time set must contain at least one interval or point")]
    EmptyTimeSet,
    #[error("interval [{lo}, {hi}] has its lower end above its upper end")]
    InvertedInterval { lo: Seconds, hi: Seconds },

    #[error("model violates {count} invariant(s); first: {first}")]
    InvalidModel { count: usize, first: String },
    #[error("model is not restorable (mapping is not a bijection on state values): {witness}")]
    NotRestorable { witness: String },
    #[error("reflection index {index} is out of range (model has {len} reflections)")]
    UnknownReflection { index: usize, len: usize },

    #[error("reflection {reflection} is the image of several state entries; atoms would overlap")]
    SharedReflection { reflection: usize },
    #[error("atomic pieces share reflection identity {reflection}")]
    OverlappingPieces { reflection: usize },
    #[error("pieces assign conflicting measures to element {element:?}")]
    MeasureConflict { element: String },
    #[error("nothing to combine: piece list is empty")]
    NoPieces,

    #[error("chain is empty")]
    EmptyChain,
    #[error("chain broken at junction {junction} (link {junction} -> link {}): {reason}", junction + 1)]
    ChainMismatch { junction: usize, reason: String },

    #[error("{what} measure missing for {missing:?}")]
    MissingMeasure { what: &'static str, missing: Vec<String> },
    #[error("equivalence relation is not total: states {missing:?} carry no class label")]
    PartialRelation { missing: Vec<usize> },
    #[error("equivalence relation labels equal state values {first} and {second} differently")]
    InconsistentRelation { first: usize, second: usize },
    #[error("relation edge {edge} refers to state index {index}, which does not exist")]
    UnresolvedEdge { edge: usize, index: usize },
    #[error("state set is empty; ratios over its cardinality are undefined")]
    EmptyStates,

    #[error("no sampling gaps: the occurrence time has no interruptions")]
    NoGaps,
    #[error("gap ({lo}, {hi}) is empty")]
    EmptyGap { lo: Seconds, hi: Seconds },
    #[error("gap {index} leaves the occurrence hull [{inf}, {sup}]")]
    GapOutsideHull { index: usize, inf: Seconds, sup: Seconds },
    #[error("gap {index} intersects the occurrence time")]
    GapMeetsOccurrence { index: usize },
    #[error("gaps {first} and {second} overlap")]
    GapsOverlap { first: usize, second: usize },

    #[error("coverage needs at least one copy record (the model itself counts as one)")]
    MissingCopies,
    #[error("value dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("distance kind {kind} needs numeric values")]
    NonNumeric { kind: &'static str },
    #[error("distance weights must be nonnegative, finite and not all zero")]
    InvalidWeights,

    #[error("probabilities sum to {sum}, not 1")]
    NonNormalized { sum: f64 },
    #[error("probability {index} is {value}; probabilities must be nonnegative")]
    NegativeProbability { index: usize, value: f64 },
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("{name} must be nonnegative, got {value}")]
    Negative { name: &'static str, value: f64 },
    #[error("input list is empty")]
    EmptyInput,
    #[error("session {index} ends before it starts")]
    InvertedSession { index: usize },

    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("innovation covariance is not positive definite at step {step}")]
    SingularInnovation { step: usize },

    #[error("invalid n = {n}: {reason}")]
    InvalidCount { n: usize, reason: &'static str },
    #[error("no candidates to search")]
    EmptyCandidates,
    #[error("bisection needs candidates sorted by occurrence supremum; candidate {index} is out of order")]
    UnsortedCandidates { index: usize },

    #[error("instantaneous regime needs the carrier's quantum count")]
    MissingQuantumCount,
    #[error("carrier needs a positive mass, radiation energy or quantum count")]
    EmptyCarrier,
    #[error("invalid constants: {0}")]
    InvalidConstants(String),
}
