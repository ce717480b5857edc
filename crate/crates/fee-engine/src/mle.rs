use crate::error::{param, FeeError};

/// Drift estimate recovered from confirmation times alone.
///
/// Fitting the inverse-Gaussian surrogate by maximum likelihood gives
/// a location estimate equal to the sample mean and a shape estimate
/// equal to the inverse mean reciprocal spread. Because the surrogate
/// ties location to `1 / (1 - c)` and shape to the squared starting
/// level, the two estimates pin down the drift:
///
/// `c = 1 - [ (1/n) Σ (1/Tᵢ - 1/T̄) ]^{-1/2} / T̄`
///
/// ```
/// use fee_engine::estimate_c_mle;
///
/// let c = estimate_c_mle(&[1.0, 5.0, 12.0]).unwrap();
/// assert!(c > 0.6 && c < 0.7);
/// ```
pub fn estimate_c_mle(samples: &[f64]) -> Result<f64, FeeError> {
    if samples.len() < 2 {
        return param(format!(
            "drift estimation needs at least two samples, got {}",
            samples.len()
        ));
    }
    if samples.iter().any(|t| !t.is_finite() || *t <= 0.0) {
        return param("confirmation times must be positive".to_string());
    }
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let recip_spread = samples.iter().map(|t| 1.0 / t - 1.0 / mean).sum::<f64>() / n;
    if recip_spread <= 0.0 {
        return Err(FeeError::Estimation(
            "samples carry no reciprocal spread; the shape estimate degenerates".into(),
        ));
    }
    let c = 1.0 - 1.0 / (recip_spread.sqrt() * mean);
    if c <= 0.0 || c >= 1.0 {
        return Err(FeeError::Estimation(format!(
            "drift estimate {c} falls outside (0, 1)"
        )));
    }
    Ok(c)
}
