use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum StmnError {
    /// Tensor/kernel dimension disagreement.
    #[error("shape error: {0}")]
    Shape(String),
    /// Invalid configuration value (radius, channel counts, spec fields).
    #[error("configuration error: {0}")]
    Config(String),
    /// API misuse: empty sequence, missing cache, zero proposals.
    #[error("usage error: {0}")]
    Usage(String),
    /// An input violated a documented precondition (e.g. negative values
    /// fed to the gate normalizer).
    #[error("contract violation: {0}")]
    Contract(String),
    /// The finite-difference oracle hit a non-finite evaluation.
    #[error("oracle error: {0}")]
    Oracle(String),
    /// Training produced a non-finite loss.
    #[error("training diverged: {0}")]
    Diverged(String),
    #[error("tolerance exceeded: {0}")]
    Tolerance(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
    #[error("bad file format: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, StmnError>;
