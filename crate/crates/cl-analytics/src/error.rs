use thiserror::Error;

/// Errors reported by the analytic routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClError {
    /// A parameter lies outside the documented domain of an operation.
    #[error("invalid parameter: {0}")]
    Param(String),
    /// A numerical routine failed to reach its accuracy target.
    #[error("numerical failure: {0}")]
    Numeric(String),
}

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T, ClError> {
    Err(ClError::Param(msg.into()))
}
