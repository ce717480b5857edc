use std::fs::File;
use std::path::Path;

use cl_analytics::{ig_params, ClParams, MAX_DRIFT};
use fee_engine::{
    data_driven_bucket, data_tails, model_based_bucket, model_tails, write_recommendation_json,
    BucketRecommendation, BucketState, EmpiricalCdf, FeeError, RecommendationReport, TailRow,
    TargetSpec,
};
use mempool_data::{bucket_series, estimate_c_global, parse_snapshots, UnitScale};
use serde::Deserialize;
use serde_json::json;

use crate::cli::{MethodKind, OutputFormat, RecommendArgs};
use crate::config::Settings;
use crate::failure::Failure;
use crate::output::{emit, json_bytes};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateFile {
    buckets: Vec<BucketState>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SamplesFile {
    buckets: Vec<SampleBucket>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SampleBucket {
    phi: f64,
    durations: Vec<f64>,
    #[serde(default)]
    censored: usize,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let file = File::open(path)
        .map_err(|e| Failure::invalid(format!("cannot open {}: {e}", path.display())))?;
    serde_json::from_reader(file)
        .map_err(|e| Failure::invalid(format!("invalid JSON in {}: {e}", path.display())))
}

/// Estimates a (c, y) state for every bucket boundary of a snapshot
/// file: the slope from the whole series, the level from the last
/// sample. Buckets without a priceable fit are dropped with a warning.
fn states_from_snapshots(path: &Path, scale: &UnitScale) -> Result<Vec<BucketState>, Failure> {
    let file = File::open(path)
        .map_err(|e| Failure::invalid(format!("cannot open {}: {e}", path.display())))?;
    let snapshots = parse_snapshots(file)?;
    let boundaries = snapshots
        .first()
        .map(|s| s.buckets.clone())
        .unwrap_or_default();
    let mut states = Vec::new();
    let mut dropped = Vec::new();
    for phi in boundaries {
        let series = bucket_series(&snapshots, phi, scale)?;
        let y = *series.values().last().expect("series is nonempty");
        let priced = estimate_c_global(&series)
            .ok()
            .filter(|c| *c > 0.0 && *c < MAX_DRIFT)
            .filter(|c| {
                ClParams::new(y, *c)
                    .and_then(|p| ig_params(&p))
                    .is_ok()
            });
        match priced {
            Some(c) => states.push(BucketState { phi, c, y }),
            None => dropped.push(phi),
        }
    }
    if !dropped.is_empty() {
        eprintln!(
            "warning: dropped {} bucket(s) without a priceable fit: {dropped:?}",
            dropped.len()
        );
    }
    if states.is_empty() {
        return Err(Failure::invalid(format!(
            "no bucket of {} could be priced",
            path.display()
        )));
    }
    Ok(states)
}

fn emit_outcome(
    target: &TargetSpec,
    rows: Vec<TailRow>,
    outcome: Result<BucketRecommendation, FeeError>,
    settings: &Settings,
) -> Result<(), Failure> {
    match outcome {
        Ok(rec) => match settings.format {
            OutputFormat::Json => {
                let report = RecommendationReport::new(target, rec, rows);
                let mut bytes = Vec::new();
                write_recommendation_json(&mut bytes, &report)?;
                emit(settings.out.as_deref(), &bytes)
            }
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["bucket", "predicted_tail", "qualifies", "selected"])?;
                for row in &rows {
                    w.write_record([
                        row.bucket.to_string(),
                        row.predicted_tail.to_string(),
                        row.qualifies.to_string(),
                        (row.bucket == rec.bucket).to_string(),
                    ])?;
                }
                let bytes = w.into_inner().map_err(|e| Failure::invalid(e.to_string()))?;
                emit(settings.out.as_deref(), &bytes)
            }
        },
        Err(FeeError::Infeasible {
            best_bucket,
            best_tail,
        }) => {
            let body = json!({
                "error": "no bucket meets the target",
                "t_star": target.t_star(),
                "confidence": target.confidence(),
                "best_bucket": best_bucket,
                "best_tail": best_tail,
            });
            emit(settings.out.as_deref(), &json_bytes(&body)?)?;
            Err(Failure::infeasible(format!(
                "no bucket meets the target; best achievable tail {best_tail} at bucket {best_bucket}"
            )))
        }
        Err(other) => Err(other.into()),
    }
}

pub fn run(args: &RecommendArgs, settings: &Settings) -> Result<(), Failure> {
    let confidence = args.confidence.unwrap_or(settings.confidence);
    let target = TargetSpec::with_confidence(args.t_star, confidence)?;
    match args.method {
        MethodKind::Model => {
            if args.samples.is_some() {
                return Err(Failure::invalid(
                    "--samples applies to the data method only".to_string(),
                ));
            }
            let states = match (&args.state, &args.input) {
                (Some(state), None) => read_json::<StateFile>(state)?.buckets,
                (None, Some(input)) => {
                    let scale =
                        settings.scale_with(args.minutes_per_block, args.vmb_per_block)?;
                    states_from_snapshots(input, &scale)?
                }
                (Some(_), Some(_)) => {
                    return Err(Failure::invalid(
                        "give either --state or --input, not both".to_string(),
                    ))
                }
                (None, None) => {
                    return Err(Failure::invalid(
                        "the model method needs --state or --input".to_string(),
                    ))
                }
            };
            let rows = model_tails(&states, &target)?;
            emit_outcome(&target, rows, model_based_bucket(&states, &target), settings)
        }
        MethodKind::Data => {
            if args.state.is_some() || args.input.is_some() {
                return Err(Failure::invalid(
                    "the data method reads --samples only".to_string(),
                ));
            }
            let Some(path) = &args.samples else {
                return Err(Failure::invalid(
                    "the data method needs --samples".to_string(),
                ));
            };
            let samples = read_json::<SamplesFile>(path)?;
            let ladder: Vec<(f64, EmpiricalCdf)> = samples
                .buckets
                .iter()
                .map(|b| {
                    EmpiricalCdf::with_censored(&b.durations, b.censored).map(|cdf| (b.phi, cdf))
                })
                .collect::<Result<_, _>>()?;
            let rows = data_tails(&ladder, &target)?;
            emit_outcome(&target, rows, data_driven_bucket(&ladder, &target), settings)
        }
    }
}
