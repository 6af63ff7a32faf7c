use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    /// `index` is 1-based, as reported to users.
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("trivial code: generator matrix has rank 0")]
    TrivialCode,

    #[error("dual is the zero code (k = n)")]
    DualIsZero,

    #[error("dimension k = {k} exceeds the enumeration budget of {cap}; use bounded variant (at-least check) or information-set enumeration")]
    EnumerationBudget { k: usize, cap: usize },

    #[error("search would visit about {estimate:.3e} candidates (budget {budget:.3e}); pass --force to run anyway")]
    SearchBudget { estimate: f64, budget: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no LCD subcode guarantee for k = {k}, and none was found")]
    NoSubcodeGuarantee { k: usize },

    #[error("cache conflict for {key}: stored value {stored}, new value {new}")]
    CacheConflict {
        key: String,
        stored: usize,
        new: usize,
    },

    #[error("cached cell {key} failed verification: {reason}")]
    CacheCorrupt { key: String, reason: String },

    #[error("table is incomplete: {0}")]
    IncompleteTable(String),

    #[error("unknown format {0:?}")]
    UnknownFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
