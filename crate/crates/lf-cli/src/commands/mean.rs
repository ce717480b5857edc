use cl_analytics::{mean_time, ClParams};
use serde_json::json;

use crate::cli::{MeanArgs, OutputFormat};
use crate::config::Settings;
use crate::failure::Failure;
use crate::output::{emit, json_bytes};

pub fn run(args: &MeanArgs, settings: &Settings) -> Result<(), Failure> {
    let params = ClParams::with_extra_conf(args.y, args.c, args.z)?;
    let mean = mean_time(&params)?;
    let bytes = match settings.format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["y", "c", "z", "mean"])?;
            w.write_record([
                args.y.to_string(),
                args.c.to_string(),
                args.z.to_string(),
                mean.to_string(),
            ])?;
            w.into_inner().map_err(|e| Failure::invalid(e.to_string()))?
        }
        OutputFormat::Json => json_bytes(&json!({
            "y": args.y,
            "c": args.c,
            "z": args.z,
            "mean": mean,
        }))?,
    };
    emit(settings.out.as_deref(), &bytes)
}
