use std::io::Write;

use crate::error::DataError;
use crate::types::{BucketSeries, EstimatorSummary, ExtractedConfirmation, UnitScale};

/// Writes extracted confirmations as CSV with the fixed header
/// `phi,start_timestamp,duration_block_units,c_local`.
///
/// Start timestamps are recovered in epoch seconds from the series
/// anchor.
pub fn write_confirmations_csv<W: Write>(
    writer: W,
    series: &BucketSeries,
    confirmations: &[ExtractedConfirmation],
    scale: &UnitScale,
) -> Result<(), DataError> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["phi", "start_timestamp", "duration_block_units", "c_local"])
        .map_err(|e| DataError::Schema(e.to_string()))?;
    for conf in confirmations {
        let start =
            series.origin_seconds() + scale.blocks_to_seconds(series.times()[conf.start_index]);
        w.write_record([
            series.phi().to_string(),
            start.to_string(),
            conf.duration.to_string(),
            conf.c_local.to_string(),
        ])
        .map_err(|e| DataError::Schema(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// Writes the estimator summary as pretty JSON.
pub fn write_estimator_summary<W: Write>(
    writer: W,
    summary: &EstimatorSummary,
) -> Result<(), DataError> {
    serde_json::to_writer_pretty(writer, summary)
        .map_err(|e| DataError::Schema(format!("summary serialization failed: {e}")))
}
