use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("lookup error: {0}")]
    Lookup(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("unsupported path: {0}")]
    UnsupportedPath(String),
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
