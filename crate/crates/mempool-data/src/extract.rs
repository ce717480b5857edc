//! Confirmation-time extraction from discretely sampled series.
//!
//! A sampled mempool level almost never shows an exact zero even when
//! the underlying process emptied between samples. Emptiness is
//! therefore inferred from the criterion that the level was already
//! below one block size minus a margin and then fell: the fall means a
//! block was found with room to spare, so everything pending before it
//! was confirmed.

use crate::error::DataError;
use crate::estimators::{estimate_c_global, estimate_c_local, estimate_y_median};
use crate::types::{BucketSeries, ExtractedConfirmation, ValidationSample};

/// Block size in normalized units; series values are already scaled so
/// one block equals one unit.
const BLOCK_SIZE: f64 = 1.0;

/// Scans a value slice for the emptiness criterion and returns the
/// number of samples from the slice start until it fires, or `None`.
///
/// The criterion fires at the first index `j >= 1` with
/// `values[j-1] < 1 - epsilon` and `values[j] < values[j-1]`. The
/// margin defaults to `c_hat / 10` and may be pinned, e.g. to zero so
/// that any drop below one block counts.
///
/// # Examples
///
/// ```
/// use mempool_data::get_confirmation_time;
///
/// let values = [0.5, 0.7, 0.9, 0.3];
/// assert_eq!(get_confirmation_time(&values, 0.5, Some(0.05)), Some(3));
/// assert_eq!(get_confirmation_time(&[0.2, 0.4, 0.6], 0.5, None), None);
/// ```
pub fn get_confirmation_time(values: &[f64], c_hat: f64, epsilon: Option<f64>) -> Option<usize> {
    let eps = epsilon.unwrap_or(c_hat / 10.0);
    for j in 1..values.len() {
        if values[j - 1] < BLOCK_SIZE - eps && values[j] < values[j - 1] {
            return Some(j);
        }
    }
    None
}

/// Extracts non-overlapping confirmation times that share one starting
/// level and arrival slope.
///
/// The global slope estimate and the median level are computed first.
/// The series is then scanned for upward crossings of the median; each
/// crossing starts a confirmation clock that runs until the emptiness
/// criterion of [`get_confirmation_time`] fires. A confirmation is kept
/// only when the slope re-estimated over its own window lies within
/// `delta` of the global estimate, guarding against rate drift over
/// long traces; a zero tolerance therefore keeps nothing. The scan
/// resumes after the window, so kept and discarded confirmations alike
/// never overlap.
pub fn extract_validation_sample(
    series: &BucketSeries,
    delta: f64,
) -> Result<ValidationSample, DataError> {
    if !delta.is_finite() || delta < 0.0 {
        return Err(DataError::Param(format!(
            "slope tolerance must be nonnegative, got {delta}"
        )));
    }
    let c_hat = estimate_c_global(series)?;
    let y_hat = estimate_y_median(series)?;
    let times = series.times();
    let values = series.values();
    let last = series.len() - 1;

    let mut confirmations = Vec::new();
    let mut j = 0usize;
    while j < last {
        let Some(j0) = ((j + 1)..last).find(|&i| values[i] < y_hat && values[i + 1] > y_hat)
        else {
            break;
        };
        let Some(samples) = get_confirmation_time(&values[j0..], c_hat, None) else {
            break;
        };
        let end = j0 + samples;
        let c_local = estimate_c_local(series, j0, end)?;
        if (c_local - c_hat).abs() < delta {
            confirmations.push(ExtractedConfirmation {
                start_index: j0,
                samples,
                duration: times[end] - times[j0],
                c_local,
            });
        }
        j = end;
    }
    Ok(ValidationSample {
        c_hat,
        y_hat,
        confirmations,
    })
}
