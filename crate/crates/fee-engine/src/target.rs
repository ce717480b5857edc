use serde::{Deserialize, Serialize};

use crate::error::{param, FeeError};

/// Default confirmation probability when none is given.
pub const DEFAULT_CONFIDENCE: f64 = 0.95;

/// A confirmation-time target: confirm within `t_star` block units
/// with probability at least `confidence`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TargetSpec {
    t_star: f64,
    confidence: f64,
}

impl TargetSpec {
    /// Target with the default 95% confirmation probability.
    ///
    /// ```
    /// use fee_engine::TargetSpec;
    ///
    /// let target = TargetSpec::new(5.0).unwrap();
    /// assert_eq!(target.confidence(), 0.95);
    /// assert!((target.tail_bound() - 0.05).abs() < 1e-15);
    /// ```
    pub fn new(t_star: f64) -> Result<Self, FeeError> {
        Self::with_confidence(t_star, DEFAULT_CONFIDENCE)
    }

    pub fn with_confidence(t_star: f64, confidence: f64) -> Result<Self, FeeError> {
        if !t_star.is_finite() || t_star <= 0.0 {
            return param(format!("target time must be positive, got {t_star}"));
        }
        if !confidence.is_finite() || confidence <= 0.0 || confidence >= 1.0 {
            return param(format!("confidence must lie in (0, 1), got {confidence}"));
        }
        Ok(Self { t_star, confidence })
    }

    /// Maximum acceptable confirmation time in block units.
    pub fn t_star(&self) -> f64 {
        self.t_star
    }

    pub fn confidence(&self) -> f64 {
        self.confidence
    }

    /// Largest tail probability a qualifying bucket may have. A bucket
    /// qualifies only when its tail is strictly below this bound.
    pub fn tail_bound(&self) -> f64 {
        1.0 - self.confidence
    }
}
