use crate::error::{param, FeeError};

/// Empirical distribution function over observed confirmation times.
///
/// Censored observations (windows whose confirmation never arrived)
/// enter the denominator but never the numerator, so they weigh down
/// the CDF exactly as "still unconfirmed" evidence should.
#[derive(Debug, Clone)]
pub struct EmpiricalCdf {
    sorted: Vec<f64>,
    censored: usize,
}

impl EmpiricalCdf {
    /// Build from fully observed samples.
    ///
    /// ```
    /// use fee_engine::EmpiricalCdf;
    ///
    /// let cdf = EmpiricalCdf::new(&[1.0, 2.0, 3.0]).unwrap();
    /// assert!((cdf.value(2.0) - 2.0 / 3.0).abs() < 1e-15);
    /// assert_eq!(cdf.value(0.5), 0.0);
    /// assert_eq!(cdf.value(3.0), 1.0);
    /// ```
    pub fn new(samples: &[f64]) -> Result<Self, FeeError> {
        Self::with_censored(samples, 0)
    }

    /// Build from observed samples plus a count of censored windows.
    pub fn with_censored(samples: &[f64], censored: usize) -> Result<Self, FeeError> {
        if samples.is_empty() && censored == 0 {
            return param("empirical CDF needs at least one observation".to_string());
        }
        if samples.iter().any(|s| !s.is_finite()) {
            return param("samples must be finite".to_string());
        }
        let mut sorted = samples.to_vec();
        sorted.sort_by(f64::total_cmp);
        Ok(Self { sorted, censored })
    }

    /// Right-continuous CDF value: share of observations at or below `t`.
    pub fn value(&self, t: f64) -> f64 {
        let below = self.sorted.partition_point(|s| *s <= t);
        below as f64 / self.total() as f64
    }

    /// Complement `1 - value(t)`, the probability of confirming later
    /// than `t`.
    pub fn tail(&self, t: f64) -> f64 {
        1.0 - self.value(t)
    }

    /// Observed plus censored count.
    pub fn total(&self) -> usize {
        self.sorted.len() + self.censored
    }

    pub fn observed(&self) -> &[f64] {
        &self.sorted
    }

    pub fn censored(&self) -> usize {
        self.censored
    }
}
