use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShadowError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("size {0} is outside the supported range 1..=8")]
    SizeOutOfRange(usize),

    #[error("entry {value} at ({row}, {col}) is outside [-2, 2]")]
    EntryOutOfRange { row: usize, col: usize, value: i64 },

    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkewSymmetric { row: usize, col: usize },

    #[error("worker count must be at least 1")]
    NoWorkers,

    #[error("expected {expected} free entries, got {found}")]
    Arity { expected: usize, found: usize },

    #[error("row {0} violates the row sign/multiplicity conditions")]
    InadmissibleRow(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("assignment does not cover parameter {0}")]
    IncompleteAssignment(usize),

    #[error("brute-force oracle refuses n = {0} (limit {1})")]
    OracleLimit(usize, usize),
}

pub type Result<T> = std::result::Result<T, ShadowError>;
