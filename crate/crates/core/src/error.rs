use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("combinatorics error: {0}")]
    Combinatorics(String),
    #[error("splitting strategy failed on {ideal}: {reason}")]
    Strategy { ideal: String, reason: String },
    #[error("audit mismatch: {0}")]
    Audit(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
