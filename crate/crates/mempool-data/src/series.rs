use crate::error::DataError;
use crate::types::{BucketSeries, MempoolSnapshot, UnitScale};

/// Builds the pending-weight-above-`phi` series in model units.
///
/// `phi` must equal one of the bucket lower bounds; the series value at
/// each snapshot is the sum of the weights of all buckets at or above
/// it, converted to block-size units, against times in block-interval
/// units anchored at the first snapshot.
///
/// # Examples
///
/// ```
/// use mempool_data::{bucket_series, MempoolSnapshot, UnitScale};
///
/// let snap = MempoolSnapshot::new(100.0, vec![1.0, 2.0], vec![3.0, 1.2]).unwrap();
/// let series = bucket_series(&[snap], 2.0, &UnitScale::default()).unwrap();
/// assert!((series.values()[0] - 1.2 / 0.956).abs() < 1e-12);
/// ```
pub fn bucket_series(
    snapshots: &[MempoolSnapshot],
    phi: f64,
    scale: &UnitScale,
) -> Result<BucketSeries, DataError> {
    let Some(first) = snapshots.first() else {
        return Err(DataError::Param("no snapshots".into()));
    };
    let Some(cut) = first.buckets.iter().position(|b| *b == phi) else {
        return Err(DataError::Lookup(format!(
            "{phi} is not a bucket boundary; valid boundaries: {:?}",
            first.buckets
        )));
    };

    let origin = first.timestamp;
    let mut times = Vec::with_capacity(snapshots.len());
    let mut values = Vec::with_capacity(snapshots.len());
    for snap in snapshots {
        if snap.buckets != first.buckets {
            return Err(DataError::Schema(
                "snapshots disagree on the bucket ladder".into(),
            ));
        }
        times.push(scale.seconds_to_blocks(snap.timestamp - origin));
        values.push(scale.vmb_to_blocks(snap.weights[cut..].iter().sum()));
    }
    BucketSeries::new(phi, origin, times, values)
}
