use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("invalid marker q = {q} for partition {lambda}; allowed values are {allowed:?}")]
    InvalidQ {
        lambda: String,
        q: usize,
        allowed: Vec<usize>,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("operation requires characteristic zero, got characteristic {0}")]
    CharNotZero(u64),

    #[error("weight is not dominant (entries must be nonincreasing): {0:?}")]
    NotDominant(Vec<i64>),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
