//! Slope and level estimators for bucket series.
//!
//! The arrival slope is estimated from the increments of the series:
//! intervals where the level fell contain a block removal and are
//! excluded, so the estimator is the total observed inflow divided by
//! the time spent in purely rising intervals. All formulas use the
//! actual sample spacings and never assume uniformity.

use crate::error::DataError;
use crate::types::BucketSeries;

fn positive_increment_ratio(
    times: &[f64],
    values: &[f64],
    from: usize,
    to: usize,
) -> Result<f64, DataError> {
    let mut inflow = 0.0;
    let mut span = 0.0;
    for j in (from + 1)..=to {
        let x = values[j] - values[j - 1];
        if x > 0.0 {
            inflow += x;
            span += times[j] - times[j - 1];
        }
    }
    if span == 0.0 {
        return Err(DataError::Estimation(
            "no rising interval in the window".into(),
        ));
    }
    Ok(inflow / span)
}

/// Estimates the arrival slope over the whole series.
///
/// # Examples
///
/// ```
/// use mempool_data::{estimate_c_global, BucketSeries};
///
/// // Increments 0, +2, -5, +3 at unit spacing: the rising intervals
/// // carry weight 5 over 2 time units.
/// let series = BucketSeries::new(
///     7.0,
///     0.0,
///     vec![0.0, 1.0, 2.0, 3.0, 4.0],
///     vec![10.0, 10.0, 12.0, 7.0, 10.0],
/// )
/// .unwrap();
/// assert_eq!(estimate_c_global(&series).unwrap(), 2.5);
/// ```
pub fn estimate_c_global(series: &BucketSeries) -> Result<f64, DataError> {
    if series.len() < 2 {
        return Err(DataError::Estimation(
            "need at least two samples to estimate a slope".into(),
        ));
    }
    positive_increment_ratio(series.times(), series.values(), 0, series.len() - 1)
}

/// Estimates the arrival slope over the window `(j1, j2]`.
pub fn estimate_c_local(series: &BucketSeries, j1: usize, j2: usize) -> Result<f64, DataError> {
    if j1 >= j2 || j2 >= series.len() {
        return Err(DataError::Param(format!(
            "window ({j1}, {j2}] must satisfy j1 < j2 < {}",
            series.len()
        )));
    }
    positive_increment_ratio(series.times(), series.values(), j1, j2)
}

/// Sample median of the series values, taking the lower of the two
/// middle values on even counts.
///
/// # Examples
///
/// ```
/// use mempool_data::{estimate_y_median, BucketSeries};
///
/// let series = BucketSeries::new(
///     1.0,
///     0.0,
///     vec![0.0, 1.0, 2.0, 3.0],
///     vec![4.0, 1.0, 3.0, 2.0],
/// )
/// .unwrap();
/// assert_eq!(estimate_y_median(&series).unwrap(), 2.0);
/// ```
pub fn estimate_y_median(series: &BucketSeries) -> Result<f64, DataError> {
    if series.is_empty() {
        return Err(DataError::Estimation("empty series has no median".into()));
    }
    let mut sorted = series.values().to_vec();
    sorted.sort_by(f64::total_cmp);
    Ok(sorted[(sorted.len() - 1) / 2])
}
