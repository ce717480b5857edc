use crate::error::{param, SimError};

/// One-sample Kolmogorov-Smirnov statistic: the sup-norm distance
/// between the empirical CDF of a sorted sample and a reference CDF.
///
/// At each sample point both one-sided gaps are taken, since the
/// empirical CDF jumps there.
///
/// # Examples
///
/// ```
/// use stochastic_sim::ks_statistic;
///
/// // Two-point sample {1, 2} against the Uniform(0, 1) CDF: everything
/// // below 1 has empirical mass 0 but reference mass approaching 1.
/// let d = ks_statistic(&[1.0, 2.0], |x| x.clamp(0.0, 1.0)).unwrap();
/// assert_eq!(d, 1.0);
/// ```
pub fn ks_statistic<F: Fn(f64) -> f64>(sorted: &[f64], cdf: F) -> Result<f64, SimError> {
    let values: Vec<f64> = sorted.iter().map(|&x| cdf(x)).collect();
    ks_from_cdf_values(sorted, &values)
}

/// The same statistic with the reference CDF already evaluated at the
/// sample points, for callers that batch those evaluations.
pub(crate) fn ks_from_cdf_values(sorted: &[f64], cdf_values: &[f64]) -> Result<f64, SimError> {
    if sorted.is_empty() {
        return param("Kolmogorov-Smirnov statistic needs a nonempty sample".to_string());
    }
    debug_assert_eq!(sorted.len(), cdf_values.len());
    if sorted.windows(2).any(|p| p[1] < p[0]) {
        return param("sample must be sorted ascending".to_string());
    }
    let n = sorted.len() as f64;
    let mut sup = 0.0f64;
    for (i, &f) in cdf_values.iter().enumerate() {
        let below = f - i as f64 / n;
        let above = (i as f64 + 1.0) / n - f;
        sup = sup.max(below).max(above);
    }
    Ok(sup.clamp(0.0, 1.0))
}
