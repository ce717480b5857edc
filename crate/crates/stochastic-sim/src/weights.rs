use rand::Rng;
use rand_distr::{Distribution, Exp, Uniform};

use crate::error::{param, SimError};

/// Distribution of individual transaction weights.
///
/// All supported families have strictly positive support and a finite
/// second moment, which the batch-service limit theory requires.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightDist {
    /// Every transaction has the same weight.
    Deterministic { weight: f64 },
    /// Exponential with the given mean.
    Exponential { mean: f64 },
    /// Uniform on `[lo, hi]` with `lo > 0`.
    Uniform { lo: f64, hi: f64 },
    /// Resampling with replacement from an observed list.
    Empirical { weights: Vec<f64> },
}

impl WeightDist {
    /// Checks positivity of the support.
    pub fn validate(&self) -> Result<(), SimError> {
        match self {
            Self::Deterministic { weight } => {
                if !weight.is_finite() || *weight <= 0.0 {
                    return param(format!("deterministic weight must be positive, got {weight}"));
                }
            }
            Self::Exponential { mean } => {
                if !mean.is_finite() || *mean <= 0.0 {
                    return param(format!("exponential mean must be positive, got {mean}"));
                }
            }
            Self::Uniform { lo, hi } => {
                if !lo.is_finite() || !hi.is_finite() || *lo <= 0.0 || hi < lo {
                    return param(format!(
                        "uniform bounds must satisfy 0 < lo <= hi, got [{lo}, {hi}]"
                    ));
                }
            }
            Self::Empirical { weights } => {
                if weights.is_empty() {
                    return param("empirical weight list must be nonempty".to_string());
                }
                if weights.iter().any(|w| !w.is_finite() || *w <= 0.0) {
                    return param("empirical weights must all be positive".to_string());
                }
            }
        }
        Ok(())
    }

    /// Mean weight.
    pub fn mean(&self) -> f64 {
        match self {
            Self::Deterministic { weight } => *weight,
            Self::Exponential { mean } => *mean,
            Self::Uniform { lo, hi } => 0.5 * (lo + hi),
            Self::Empirical { weights } => {
                weights.iter().sum::<f64>() / weights.len() as f64
            }
        }
    }

    /// Second moment `E[X^2]`.
    pub fn second_moment(&self) -> f64 {
        match self {
            Self::Deterministic { weight } => weight * weight,
            Self::Exponential { mean } => 2.0 * mean * mean,
            Self::Uniform { lo, hi } => (lo * lo + lo * hi + hi * hi) / 3.0,
            Self::Empirical { weights } => {
                weights.iter().map(|w| w * w).sum::<f64>() / weights.len() as f64
            }
        }
    }

    /// Largest possible weight, if the support is bounded.
    pub fn upper_bound(&self) -> Option<f64> {
        match self {
            Self::Deterministic { weight } => Some(*weight),
            Self::Exponential { .. } => None,
            Self::Uniform { hi, .. } => Some(*hi),
            Self::Empirical { weights } => weights.iter().cloned().reduce(f64::max),
        }
    }

    /// Draws one weight.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            Self::Deterministic { weight } => *weight,
            Self::Exponential { mean } => {
                Exp::new(1.0 / mean).expect("validated mean").sample(rng)
            }
            Self::Uniform { lo, hi } => {
                Uniform::new_inclusive(*lo, *hi).expect("validated bounds").sample(rng)
            }
            Self::Empirical { weights } => weights[rng.random_range(0..weights.len())],
        }
    }
}
