//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("modulus {0} out of supported range [3, 2^63)")]
    ModulusOutOfRange(u64),
    #[error("zero is not a unit")]
    ZeroElement,
    #[error("{e} does not divide the group order {order}")]
    NotADivisor { e: u64, order: u64 },
    #[error("element is not invertible")]
    NotInvertible,
    #[error("parse error at offset {offset}: expected {expected}, found {found}")]
    ParseError {
        offset: usize,
        expected: String,
        found: String,
    },
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("resultant input has no X term: degree in X must be positive")]
    DegenerateInX,
    #[error("lift system is singular; retry with other solutions")]
    SingularSystem,
    #[error("({x}, {y}) is not a solution of the curve modulo p")]
    NotASolution { x: u64, y: u64 },
    #[error("need at least {needed} solutions, got {got}")]
    InsufficientSolutions { needed: usize, got: usize },
    #[error("degree {degree} exceeds the cap {cap}{}", note.as_deref().map(|s| format!(" ({s})")).unwrap_or_default())]
    DegreeTooLarge {
        degree: u32,
        cap: u32,
        note: Option<String>,
    },
    #[error("modulus {p} exceeds the enumeration bound {cap}")]
    ModulusTooLarge { p: u64, cap: u64 },
    #[error("interval length {h} must be smaller than the modulus {p}")]
    IntervalTooLong { h: u64, p: u64 },
    #[error("budget exceeded after {processed} units; partial count {partial}")]
    BudgetExceeded { partial: u64, processed: u64 },
    #[error("need at least {needed} points with nonzero counts, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error("composed degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: u64, cap: u64 },
    #[error("system contains a power map a*X^m; group-metric bound comparison refused")]
    PowerFormExcluded,
    #[error("every path from this start hits a pole before reaching depth {depth}")]
    AllPathsTruncated { depth: u64 },
    #[error("rational map must be nonconstant")]
    ConstantMap,
    #[error("hypothesis check failed: {0}")]
    HypothesisFailed(String),
    #[error("candidate factor search space too large ({combinations} combinations)")]
    FactorSearchTooLarge { combinations: u64 },
    #[error("invalid {what}: {detail}")]
    InvalidInput { what: String, detail: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(what: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::InvalidInput {
            what: what.into(),
            detail: detail.into(),
        }
    }
}
