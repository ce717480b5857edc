use thiserror::Error;

/// Errors reported by the simulation engines.
#[derive(Debug, Error)]
pub enum SimError {
    /// A parameter lies outside the documented domain of an operation.
    #[error("invalid parameter: {0}")]
    Param(String),
    /// The offered load reaches or exceeds the service capacity.
    #[error("unstable configuration: {0}")]
    Unstable(String),
    /// A single transaction cannot fit in any block.
    #[error("infeasible transaction: {0}")]
    Infeasible(String),
    /// A sample path exceeded the event cap without absorbing.
    #[error("runaway simulation: exceeded {events} events before first passage")]
    Runaway { events: u64 },
    /// An analytic target used by an experiment failed to evaluate.
    #[error("analytic target failed: {0}")]
    Analytic(#[from] cl_analytics::ClError),
}

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T, SimError> {
    Err(SimError::Param(msg.into()))
}
