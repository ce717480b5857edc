use std::fmt;

use cl_analytics::ClError;
use fee_engine::FeeError;
use mempool_data::DataError;
use stochastic_sim::SimError;

/// Exit code for invalid input or parameters.
pub const EXIT_INVALID: u8 = 2;
/// Exit code when no bucket can meet the requested target.
pub const EXIT_INFEASIBLE: u8 = 3;
/// Exit code when a simulation exceeds its event cap.
pub const EXIT_RUNAWAY: u8 = 4;

/// A command failure carrying the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }

    pub fn infeasible(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INFEASIBLE,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Failure {}

impl From<ClError> for Failure {
    fn from(err: ClError) -> Self {
        Failure::invalid(err.to_string())
    }
}

impl From<DataError> for Failure {
    fn from(err: DataError) -> Self {
        Failure::invalid(err.to_string())
    }
}

impl From<SimError> for Failure {
    fn from(err: SimError) -> Self {
        let code = match err {
            SimError::Runaway { .. } => EXIT_RUNAWAY,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<FeeError> for Failure {
    fn from(err: FeeError) -> Self {
        let code = match err {
            FeeError::Infeasible { .. } => EXIT_INFEASIBLE,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure::invalid(err.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(err: serde_json::Error) -> Self {
        Failure::invalid(err.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(err: csv::Error) -> Self {
        Failure::invalid(err.to_string())
    }
}
