use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid size vector: {0}")]
    InvalidSize(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    #[error("word is not the canonical form of its necklace")]
    NotCanonical,
    #[error("index {index} out of range (count is {count})")]
    OutOfRange { index: String, count: String },
    #[error("invalid Parikh vector: {0}")]
    InvalidContent(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
