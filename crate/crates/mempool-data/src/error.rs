use thiserror::Error;

/// Errors reported while ingesting or analysing mempool data.
#[derive(Debug, Error)]
pub enum DataError {
    /// Reading the underlying stream failed.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    /// A row could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },
    /// The file structure violates the snapshot contract.
    #[error("schema error: {0}")]
    Schema(String),
    /// A requested fee level is not a bucket boundary.
    #[error("unknown bucket: {0}")]
    Lookup(String),
    /// An estimator has no usable observations.
    #[error("estimation error: {0}")]
    Estimation(String),
    /// A parameter lies outside the documented domain of an operation.
    #[error("invalid parameter: {0}")]
    Param(String),
}

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T, DataError> {
    Err(DataError::Param(msg.into()))
}
