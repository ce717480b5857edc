use std::io::Write;

use serde::Serialize;

use crate::benchmark::BenchmarkReport;
use crate::error::FeeError;
use crate::score::ScoreSummary;
use crate::select::{BucketRecommendation, TailRow};
use crate::target::TargetSpec;

/// JSON document for a single recommendation: the target, the chosen
/// bucket, and the tail every rung was predicted to have.
#[derive(Debug, Clone, Serialize)]
pub struct RecommendationReport {
    pub t_star: f64,
    pub confidence: f64,
    pub recommendation: BucketRecommendation,
    pub alternatives: Vec<TailRow>,
}

impl RecommendationReport {
    pub fn new(
        target: &TargetSpec,
        recommendation: BucketRecommendation,
        alternatives: Vec<TailRow>,
    ) -> Self {
        Self {
            t_star: target.t_star(),
            confidence: target.confidence(),
            recommendation,
            alternatives,
        }
    }
}

pub fn write_recommendation_json<W: Write>(
    mut writer: W,
    report: &RecommendationReport,
) -> Result<(), FeeError> {
    serde_json::to_writer_pretty(&mut writer, report).map_err(std::io::Error::from)?;
    writer.write_all(b"\n")?;
    Ok(())
}

fn summary_record(method: &str, summary: &ScoreSummary) -> Vec<String> {
    let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
    vec![
        method.to_string(),
        summary.total.to_string(),
        summary.optimal_pct.to_string(),
        summary.late_pct.to_string(),
        opt(summary.mean_lateness),
        summary.overpay_pct.to_string(),
        opt(summary.mean_overpay),
    ]
}

/// Evaluation table with one row per method: percentage optimal,
/// percentage late with conditional mean lateness, and percentage
/// overpaid with conditional mean overpay.
pub fn write_evaluation_csv<W: Write>(
    writer: W,
    report: &BenchmarkReport,
) -> Result<(), FeeError> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record([
        "method",
        "instances",
        "optimal_pct",
        "late_pct",
        "mean_lateness",
        "overpay_pct",
        "mean_overpay",
    ])
    .map_err(csv_io)?;
    out.write_record(summary_record("model", &report.model))
        .map_err(csv_io)?;
    out.write_record(summary_record("data", &report.data))
        .map_err(csv_io)?;
    out.flush()?;
    Ok(())
}

fn csv_io(err: csv::Error) -> FeeError {
    FeeError::Io(std::io::Error::other(err))
}
