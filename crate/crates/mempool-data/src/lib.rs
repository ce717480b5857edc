//! Ingestion and analysis of bucketed mempool snapshots.
//!
//! A snapshot records, at one timestamp, the pending transaction
//! weight in each fee-density bucket. Summing the buckets at or above
//! a fee level `phi` and normalizing to model units (block intervals
//! and block sizes) yields the level series that the analytic
//! confirmation-time model describes: it rises at the arrival slope
//! and drops when blocks confirm weight.
//!
//! The module provides the full path from raw wide CSV to model
//! parameters: [`parse_snapshots`] and [`bucket_series`] for
//! ingestion, [`estimate_c_global`], [`estimate_y_median`] and
//! [`estimate_c_local`] for the slope and level estimators, and
//! [`get_confirmation_time`] plus [`extract_validation_sample`] for
//! recovering confirmation durations from discretely sampled data.
//! [`synth_trace`] generates realistic snapshot files with known
//! parameters so the whole pipeline can be validated end to end.
//!
//! ```
//! use cl_analytics::ClParams;
//! use mempool_data::{
//!     bucket_series, estimate_c_global, synth_trace, UnitScale, SYNTH_TARGET_PHI,
//! };
//! use stochastic_sim::Seed;
//!
//! let params = ClParams::new(2.0, 0.6).unwrap();
//! let scale = UnitScale::default();
//! let spacing = scale.minutes_to_blocks(1.0);
//! let snaps = synth_trace(&params, spacing, 60.0, Seed::new(5, 0), &scale)?;
//! let series = bucket_series(&snaps, SYNTH_TARGET_PHI, &scale)?;
//! let c_hat = estimate_c_global(&series)?;
//! assert!((c_hat - 0.6).abs() < 0.1);
//! # Ok::<(), mempool_data::DataError>(())
//! ```

mod error;
mod estimators;
mod extract;
mod parse;
mod report;
mod series;
mod synth;
mod types;

pub use error::DataError;
pub use estimators::{estimate_c_global, estimate_c_local, estimate_y_median};
pub use extract::{extract_validation_sample, get_confirmation_time};
pub use parse::{parse_snapshots, write_snapshots_csv};
pub use report::{write_confirmations_csv, write_estimator_summary};
pub use series::bucket_series;
pub use synth::{synth_trace, SYNTH_BUCKET_BOUNDS, SYNTH_TARGET_PHI};
pub use types::{
    BucketSeries, EstimatorSummary, ExtractedConfirmation, MempoolSnapshot, UnitScale,
    ValidationSample, DEFAULT_BUCKET_BOUNDS,
};
