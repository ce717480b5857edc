use std::fs::File;
use std::path::Path;

use fee_engine::{run_benchmark, BenchmarkConfig, BenchmarkReport, BucketModel};
use serde::Deserialize;
use serde_json::json;
use stochastic_sim::Seed;

use crate::cli::{EvaluateArgs, OutputFormat};
use crate::config::Settings;
use crate::failure::Failure;
use crate::output::{emit, json_bytes};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelsFile {
    buckets: Vec<BucketModel>,
}

fn read_models(path: &Path) -> Result<Vec<BucketModel>, Failure> {
    let file = File::open(path)
        .map_err(|e| Failure::invalid(format!("cannot open {}: {e}", path.display())))?;
    let models: ModelsFile = serde_json::from_reader(file)
        .map_err(|e| Failure::invalid(format!("invalid JSON in {}: {e}", path.display())))?;
    Ok(models.buckets)
}

fn build_config(args: &EvaluateArgs, settings: &Settings) -> Result<BenchmarkConfig, Failure> {
    let mut config = BenchmarkConfig {
        confidence: args.confidence.unwrap_or(settings.confidence),
        ..BenchmarkConfig::default()
    };
    if let Some(path) = &args.models {
        config.buckets = read_models(path)?;
    }
    if let Some(v) = args.instances {
        config.instances = v;
    }
    if let Some(v) = args.draws {
        config.draws = v;
    }
    if let Some(v) = args.window {
        config.window = v;
    }
    if let Some(v) = args.forward {
        config.forward = v;
    }
    if let Some(minutes) = args.spacing_minutes {
        config.spacing = settings.scale.minutes_to_blocks(minutes);
    }
    if let Some(v) = args.t_star {
        config.t_star = v;
    }
    Ok(config)
}

fn percent_field(value: Option<f64>) -> String {
    value.map(|v| v.to_string()).unwrap_or_default()
}

fn write_csv(runs: &[(u64, BenchmarkReport)]) -> Result<Vec<u8>, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "seed",
        "method",
        "instances",
        "optimal_pct",
        "late_pct",
        "mean_lateness",
        "overpay_pct",
        "mean_overpay",
    ])?;
    for (seed, report) in runs {
        for (method, summary) in [("model", &report.model), ("data", &report.data)] {
            w.write_record([
                seed.to_string(),
                method.to_string(),
                summary.total.to_string(),
                summary.optimal_pct.to_string(),
                summary.late_pct.to_string(),
                percent_field(summary.mean_lateness),
                summary.overpay_pct.to_string(),
                percent_field(summary.mean_overpay),
            ])?;
        }
    }
    w.into_inner().map_err(|e| Failure::invalid(e.to_string()))
}

pub fn run(args: &EvaluateArgs, settings: &Settings) -> Result<(), Failure> {
    if args.seeds == 0 {
        return Err(Failure::invalid("--seeds must be at least 1".to_string()));
    }
    let config = build_config(args, settings)?;
    let mut runs = Vec::with_capacity(args.seeds as usize);
    for k in 0..args.seeds {
        let value = settings.seed.value.wrapping_add(k);
        let report = run_benchmark(&config, Seed::new(value, settings.seed.stream))?;
        runs.push((value, report));
    }
    let model_wins = runs
        .iter()
        .filter(|(_, r)| r.model.optimal_pct > r.data.optimal_pct)
        .count();
    match settings.format {
        OutputFormat::Csv => emit(settings.out.as_deref(), &write_csv(&runs)?),
        OutputFormat::Json => {
            let seeds: Vec<_> = runs
                .iter()
                .map(|(seed, report)| json!({ "seed": seed, "report": report }))
                .collect();
            let body = json!({
                "t_star": config.t_star,
                "confidence": config.confidence,
                "instances": config.instances,
                "model_wins": model_wins,
                "seeds": seeds,
            });
            emit(settings.out.as_deref(), &json_bytes(&body)?)
        }
    }
}
