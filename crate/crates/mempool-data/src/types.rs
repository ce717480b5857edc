use serde::{Deserialize, Serialize};

use crate::error::{param, DataError};

/// Fee-bucket lower bounds (sat/vbyte) of the canonical snapshot
/// ladder; the last bucket is open-ended above 10000.
pub const DEFAULT_BUCKET_BOUNDS: [f64; 46] = [
    0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 10.0, 12.0, 14.0, 17.0, 20.0, 25.0, 30.0, 40.0,
    50.0, 60.0, 70.0, 80.0, 100.0, 120.0, 140.0, 170.0, 200.0, 250.0, 300.0, 400.0, 500.0, 600.0,
    700.0, 800.0, 1000.0, 1200.0, 1400.0, 1700.0, 2000.0, 2500.0, 3000.0, 4000.0, 5000.0, 6000.0,
    7000.0, 8000.0, 10000.0,
];

/// One observation of the mempool: per-bucket pending weight at a
/// given time.
#[derive(Debug, Clone, PartialEq)]
pub struct MempoolSnapshot {
    /// Seconds since the epoch of the observation.
    pub timestamp: f64,
    /// Ascending bucket lower bounds in sat/vbyte.
    pub buckets: Vec<f64>,
    /// Pending weight per bucket in vMB, aligned with `buckets`.
    pub weights: Vec<f64>,
}

impl MempoolSnapshot {
    /// Validates bucket ordering and weight alignment.
    pub fn new(timestamp: f64, buckets: Vec<f64>, weights: Vec<f64>) -> Result<Self, DataError> {
        if !timestamp.is_finite() {
            return param(format!("timestamp must be finite, got {timestamp}"));
        }
        if buckets.is_empty() {
            return Err(DataError::Schema("snapshot needs at least one bucket".into()));
        }
        if buckets.windows(2).any(|w| w[0] >= w[1]) {
            return Err(DataError::Schema(
                "bucket lower bounds must be strictly ascending".into(),
            ));
        }
        if weights.len() != buckets.len() {
            return Err(DataError::Schema(format!(
                "{} weights for {} buckets",
                weights.len(),
                buckets.len()
            )));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(DataError::Schema("weights must be finite and >= 0".into()));
        }
        Ok(Self {
            timestamp,
            buckets,
            weights,
        })
    }
}

/// Conversion factors between physical units and model units.
///
/// One model time unit is the mean block inter-arrival time; one model
/// weight unit is the effective block size. The defaults reproduce the
/// long-run Bitcoin averages used throughout: 10.10406 minutes per
/// block and 0.956 vMB per block.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitScale {
    pub minutes_per_block: f64,
    pub vmb_per_block: f64,
}

impl Default for UnitScale {
    fn default() -> Self {
        Self {
            minutes_per_block: 10.10406,
            vmb_per_block: 0.956,
        }
    }
}

impl UnitScale {
    pub fn new(minutes_per_block: f64, vmb_per_block: f64) -> Result<Self, DataError> {
        if !minutes_per_block.is_finite() || minutes_per_block <= 0.0 {
            return param(format!(
                "minutes per block must be positive, got {minutes_per_block}"
            ));
        }
        if !vmb_per_block.is_finite() || vmb_per_block <= 0.0 {
            return param(format!("vMB per block must be positive, got {vmb_per_block}"));
        }
        Ok(Self {
            minutes_per_block,
            vmb_per_block,
        })
    }

    pub fn minutes_to_blocks(&self, minutes: f64) -> f64 {
        minutes / self.minutes_per_block
    }

    pub fn blocks_to_minutes(&self, blocks: f64) -> f64 {
        blocks * self.minutes_per_block
    }

    pub fn seconds_to_blocks(&self, seconds: f64) -> f64 {
        self.minutes_to_blocks(seconds / 60.0)
    }

    pub fn blocks_to_seconds(&self, blocks: f64) -> f64 {
        self.blocks_to_minutes(blocks) * 60.0
    }

    pub fn vmb_to_blocks(&self, vmb: f64) -> f64 {
        vmb / self.vmb_per_block
    }

    pub fn blocks_to_vmb(&self, blocks: f64) -> f64 {
        blocks * self.vmb_per_block
    }
}

/// The pending weight above one fee level over time, in model units.
///
/// `times` are block-interval units anchored at the first snapshot;
/// `values` are block-size units. The anchor is kept so extracted
/// events can be reported against the original timestamps.
#[derive(Debug, Clone, PartialEq)]
pub struct BucketSeries {
    phi: f64,
    origin_seconds: f64,
    times: Vec<f64>,
    values: Vec<f64>,
}

impl BucketSeries {
    /// Validates monotone times and nonnegative values.
    pub fn new(
        phi: f64,
        origin_seconds: f64,
        times: Vec<f64>,
        values: Vec<f64>,
    ) -> Result<Self, DataError> {
        if times.len() != values.len() {
            return param(format!(
                "{} times for {} values",
                times.len(),
                values.len()
            ));
        }
        if times.windows(2).any(|w| w[0] >= w[1]) {
            return param("times must be strictly increasing".to_string());
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return param("values must be finite and >= 0".to_string());
        }
        Ok(Self {
            phi,
            origin_seconds,
            times,
            values,
        })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Epoch seconds of the first sample, the anchor of `times`.
    pub fn origin_seconds(&self) -> f64 {
        self.origin_seconds
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// One confirmation event recovered from a bucket series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtractedConfirmation {
    /// Sample index where the confirmation clock starts.
    pub start_index: usize,
    /// Number of samples until the emptiness criterion fires.
    pub samples: usize,
    /// Elapsed time over those samples, in block-interval units.
    pub duration: f64,
    /// Arrival-rate estimate over the confirmation window.
    pub c_local: f64,
}

/// Output of the validation-sample extraction: the global estimates
/// and the confirmations that passed the local-rate filter.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationSample {
    pub c_hat: f64,
    pub y_hat: f64,
    pub confirmations: Vec<ExtractedConfirmation>,
}

impl ValidationSample {
    /// Condenses the extraction into the summary record emitted as
    /// JSON.
    pub fn summary(&self, phi: f64) -> EstimatorSummary {
        EstimatorSummary {
            phi,
            c_hat: self.c_hat,
            y_hat: self.y_hat,
            n: self.confirmations.len(),
        }
    }
}

/// Summary of one extraction run for downstream reporting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EstimatorSummary {
    pub phi: f64,
    pub c_hat: f64,
    pub y_hat: f64,
    pub n: usize,
}
