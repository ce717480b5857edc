use thiserror::Error;

/// Errors reported by the recommendation engine.
#[derive(Debug, Error)]
pub enum FeeError {
    /// A parameter lies outside the documented domain of an operation.
    #[error("invalid parameter: {0}")]
    Param(String),
    /// An estimator could not produce a usable value.
    #[error("estimation failed: {0}")]
    Estimation(String),
    /// No bucket meets the confirmation target; the payload names the
    /// closest miss so callers can report what would be achievable.
    #[error("no bucket meets the target: best achievable tail {best_tail} at bucket {best_bucket}")]
    Infeasible { best_bucket: f64, best_tail: f64 },
    /// Hindsight data never confirms any bucket within its horizon.
    #[error("oracle undefined: {0}")]
    OracleUndefined(String),
    /// A distributional evaluation failed inside the analytics layer.
    #[error("analytic evaluation failed: {0}")]
    Analytic(#[from] cl_analytics::ClError),
    /// Bucket series handed to the oracle were rejected upstream.
    #[error("series construction failed: {0}")]
    Data(#[from] mempool_data::DataError),
    /// A report writer could not produce output.
    #[error("report output failed: {0}")]
    Io(#[from] std::io::Error),
}

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T, FeeError> {
    Err(FeeError::Param(msg.into()))
}
