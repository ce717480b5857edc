use cl_analytics::{ig_cdf, ig_params, ClParams};
use mempool_data::{get_confirmation_time, BucketSeries};
use serde::{Deserialize, Serialize};

use crate::ecdf::EmpiricalCdf;
use crate::error::{param, FeeError};
use crate::target::TargetSpec;

/// How a recommendation was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Model,
    Data,
    Oracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Method::Model => "model",
            Method::Data => "data",
            Method::Oracle => "oracle",
        };
        f.write_str(name)
    }
}

/// Per-bucket state at decision time: fee density `phi`, estimated
/// drift `c`, and currently queued weight `y` in block units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BucketState {
    pub phi: f64,
    pub c: f64,
    pub y: f64,
}

/// A selected bucket together with the tail probability the selector
/// predicted at the target time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BucketRecommendation {
    pub bucket: f64,
    pub method: Method,
    pub predicted_tail: f64,
}

/// One evaluated rung of the ladder.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailRow {
    pub bucket: f64,
    pub predicted_tail: f64,
    pub qualifies: bool,
}

fn check_ascending(phis: impl Iterator<Item = f64>) -> Result<(), FeeError> {
    let phis: Vec<f64> = phis.collect();
    if phis.is_empty() {
        return param("bucket ladder must be nonempty".to_string());
    }
    if phis.windows(2).any(|w| w[0] >= w[1]) {
        return param("bucket ladder must be strictly ascending".to_string());
    }
    Ok(())
}

fn pick(rows: &[TailRow], method: Method) -> Result<BucketRecommendation, FeeError> {
    if let Some(row) = rows.iter().find(|r| r.qualifies) {
        return Ok(BucketRecommendation {
            bucket: row.bucket,
            method,
            predicted_tail: row.predicted_tail,
        });
    }
    let best = rows
        .iter()
        .min_by(|a, b| a.predicted_tail.total_cmp(&b.predicted_tail))
        .expect("ladder was validated nonempty");
    Err(FeeError::Infeasible {
        best_bucket: best.bucket,
        best_tail: best.predicted_tail,
    })
}

/// Tail probabilities the surrogate model predicts for every rung.
///
/// Each bucket's confirmation time is modelled by the inverse-Gaussian
/// surrogate for its `(y, c)` state; the row qualifies when the tail
/// at the target time is strictly below the target's bound.
pub fn model_tails(states: &[BucketState], target: &TargetSpec) -> Result<Vec<TailRow>, FeeError> {
    check_ascending(states.iter().map(|s| s.phi))?;
    let mut rows = Vec::with_capacity(states.len());
    for state in states {
        let params = ClParams::new(state.y, state.c)
            .map_err(|e| FeeError::Param(format!("bucket {}: {e}", state.phi)))?;
        let ig = ig_params(&params)?;
        let tail = (1.0 - ig_cdf(target.t_star(), &ig)?).max(0.0);
        rows.push(TailRow {
            bucket: state.phi,
            predicted_tail: tail,
            qualifies: tail < target.tail_bound(),
        });
    }
    Ok(rows)
}

/// Cheapest bucket whose surrogate-model tail beats the target.
pub fn model_based_bucket(
    states: &[BucketState],
    target: &TargetSpec,
) -> Result<BucketRecommendation, FeeError> {
    pick(&model_tails(states, target)?, Method::Model)
}

/// Tail probabilities read off per-bucket empirical distributions.
pub fn data_tails(
    buckets: &[(f64, EmpiricalCdf)],
    target: &TargetSpec,
) -> Result<Vec<TailRow>, FeeError> {
    check_ascending(buckets.iter().map(|(phi, _)| *phi))?;
    Ok(buckets
        .iter()
        .map(|(phi, cdf)| {
            let tail = cdf.tail(target.t_star());
            TailRow {
                bucket: *phi,
                predicted_tail: tail,
                qualifies: tail < target.tail_bound(),
            }
        })
        .collect())
}

/// Cheapest bucket whose empirical tail beats the target. A bucket
/// sitting exactly on the bound does not qualify.
pub fn data_driven_bucket(
    buckets: &[(f64, EmpiricalCdf)],
    target: &TargetSpec,
) -> Result<BucketRecommendation, FeeError> {
    pick(&data_tails(buckets, target)?, Method::Data)
}

/// Cheapest bucket that, in hindsight, confirms before the target time.
///
/// Scans every series forward from `start` with the zero-margin
/// emptiness criterion and returns the first fee density whose
/// realized confirmation lands strictly inside the target. This is the
/// defining brute-force scan; optimized callers must agree with it.
pub fn oracle_bucket(
    series: &[BucketSeries],
    start: usize,
    target: &TargetSpec,
) -> Result<f64, FeeError> {
    check_ascending(series.iter().map(|s| s.phi()))?;
    for s in series {
        if start >= s.len() {
            return param(format!(
                "decision index {start} outside series of length {}",
                s.len()
            ));
        }
        let values = &s.values()[start..];
        if let Some(samples) = get_confirmation_time(values, 0.0, Some(0.0)) {
            let duration = s.times()[start + samples] - s.times()[start];
            if duration < target.t_star() {
                return Ok(s.phi());
            }
        }
    }
    Err(FeeError::OracleUndefined(format!(
        "no bucket confirms before {} within the observed horizon",
        target.t_star()
    )))
}
