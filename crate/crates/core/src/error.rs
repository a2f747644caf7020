use thiserror::Error;

/// Errors produced by the matrix, sequence and identity operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("cofactor expansion limited to order {max}, got order {order}")]
    SizeGuard { order: usize, max: usize },

    #[error("invalid column/row selection: {0}")]
    Selection(String),

    #[error("invalid range {lo}..{hi}")]
    Range { lo: i64, hi: i64 },

    #[error("the last column {0} cannot be deleted")]
    LastColumn(usize),

    #[error("expected {expected} deleted columns, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("matrix {0} is singular")]
    Singular(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
