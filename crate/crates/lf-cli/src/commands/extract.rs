use std::fs::File;

use mempool_data::{
    bucket_series, extract_validation_sample, parse_snapshots, write_confirmations_csv,
    write_estimator_summary,
};
use serde_json::json;

use crate::cli::{ExtractArgs, OutputFormat};
use crate::config::Settings;
use crate::failure::Failure;
use crate::output::{emit, json_bytes, sidecar_path, write_atomic};

pub fn run(args: &ExtractArgs, settings: &Settings) -> Result<(), Failure> {
    let file = File::open(&args.input)
        .map_err(|e| Failure::invalid(format!("cannot open {}: {e}", args.input.display())))?;
    let snapshots = parse_snapshots(file)?;
    let scale = settings.scale_with(args.minutes_per_block, args.vmb_per_block)?;
    let series = bucket_series(&snapshots, args.phi, &scale)?;
    let delta = args.delta.unwrap_or(settings.delta);
    let sample = extract_validation_sample(&series, delta)?;
    let summary = sample.summary(args.phi);

    match settings.format {
        OutputFormat::Csv => {
            let mut bytes = Vec::new();
            write_confirmations_csv(&mut bytes, &series, &sample.confirmations, &scale)?;
            emit(settings.out.as_deref(), &bytes)?;
            if let Some(out) = &settings.out {
                let mut side = Vec::new();
                write_estimator_summary(&mut side, &summary)?;
                side.push(b'\n');
                write_atomic(&sidecar_path(out, ".estimators.json"), &side)?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = sample
                .confirmations
                .iter()
                .map(|conf| {
                    let start = series.origin_seconds()
                        + scale.blocks_to_seconds(series.times()[conf.start_index]);
                    json!({
                        "phi": args.phi,
                        "start_timestamp": start,
                        "duration_block_units": conf.duration,
                        "c_local": conf.c_local,
                    })
                })
                .collect();
            let doc = json!({
                "summary": { "phi": summary.phi, "c_hat": summary.c_hat, "y_hat": summary.y_hat, "n": summary.n },
                "confirmations": rows,
            });
            emit(settings.out.as_deref(), &json_bytes(&doc)?)?;
        }
    }
    Ok(())
}
