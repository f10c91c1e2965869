use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("operator is not traceless")]
    NotTraceless,
    #[error("zero vector has no reduced density matrix")]
    ZeroVector,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("vector has free parameters; specialize a and b first")]
    Symbolic,
    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
