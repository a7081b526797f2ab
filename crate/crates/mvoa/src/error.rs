use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("inconsistency: {0}")]
    Inconsistent(String),
    #[error("unsupported label: {0}")]
    UnsupportedLabel(String),
}
