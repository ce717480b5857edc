use serde_json::json;
use stochastic_sim::{
    diffusion_scaling_experiment, fluid_scaling_experiment, BsqParams, ScalingReport,
};

use crate::cli::{ConvergeArgs, ConvergeMode, OutputFormat};
use crate::commands::simulate::build_weights;
use crate::config::Settings;
use crate::failure::Failure;
use crate::output::{emit, json_bytes};

const FLUID_SCALES: [u64; 3] = [10, 100, 1000];
const DIFFUSION_SCALES: [u64; 3] = [10, 40, 160];

pub fn run(args: &ConvergeArgs, settings: &Settings) -> Result<(), Failure> {
    let weights = build_weights(
        args.weight_dist,
        Some(args.weight_mean),
        args.weight_lo,
        args.weight_hi,
    )?;
    let base = BsqParams::new(args.nu, args.lambda, args.k, 0, weights)?;
    let scales: Vec<u64> = match &args.scales {
        Some(list) => list.clone(),
        None => match args.mode {
            ConvergeMode::Fluid => FLUID_SCALES.to_vec(),
            ConvergeMode::Diffusion => DIFFUSION_SCALES.to_vec(),
        },
    };

    let report: ScalingReport = match args.mode {
        ConvergeMode::Fluid => {
            if args.sigma.is_some() {
                return Err(Failure::invalid(
                    "--sigma applies to the diffusion mode only".to_string(),
                ));
            }
            fluid_scaling_experiment(&base, args.y, &scales, args.reps, settings.seed)?
        }
        ConvergeMode::Diffusion => {
            let sigma = args.sigma.unwrap_or_else(|| args.lambda.sqrt());
            diffusion_scaling_experiment(&base, args.y, sigma, &scales, args.reps, settings.seed)?
        }
    };

    let bytes = match settings.format {
        OutputFormat::Csv => report.to_csv_string().into_bytes(),
        OutputFormat::Json => {
            let mode = match args.mode {
                ConvergeMode::Fluid => "fluid",
                ConvergeMode::Diffusion => "diffusion",
            };
            let rows: Vec<serde_json::Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "view": r.view.as_str(),
                        "n": r.n,
                        "reps": r.reps,
                        "ks": r.ks,
                        "mean": r.mean,
                        "stderr": r.stderr,
                    })
                })
                .collect();
            json_bytes(&json!({ "mode": mode, "rows": rows }))?
        }
    };
    emit(settings.out.as_deref(), &bytes)
}
