use cl_analytics::ClParams;
use serde_json::json;
use stochastic_sim::{
    simulate_bm_hit, simulate_bsq_hit_with_cap, simulate_cl_hit_with_cap,
    simulate_dm1_busy_period_with_cap, BsqParams, HittingSample, WeightDist, DEFAULT_EVENT_CAP,
};

use crate::cli::{ModelKind, OutputFormat, SimulateArgs, WeightKind};
use crate::config::Settings;
use crate::failure::Failure;
use crate::output::{emit, json_bytes, sidecar_path, write_atomic};

fn need<T: Copy>(value: Option<T>, flag: &str, model: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::invalid(format!("--{flag} is required for the {model} model")))
}

fn reject_unused(model: &str, flags: &[(&str, bool)]) -> Result<(), Failure> {
    for (flag, present) in flags {
        if *present {
            return Err(Failure::invalid(format!(
                "--{flag} does not apply to the {model} model"
            )));
        }
    }
    Ok(())
}

/// Builds the transaction-weight family shared by the bsq model and
/// the scaling experiments.
pub(crate) fn build_weights(
    kind: WeightKind,
    mean: Option<f64>,
    lo: Option<f64>,
    hi: Option<f64>,
) -> Result<WeightDist, Failure> {
    let dist = match kind {
        WeightKind::Det => {
            if lo.is_some() || hi.is_some() {
                return Err(Failure::invalid(
                    "--weight-lo/--weight-hi apply to uniform weights only".to_string(),
                ));
            }
            WeightDist::Deterministic {
                weight: need(mean, "weight-mean", "det-weight")?,
            }
        }
        WeightKind::Exp => {
            if lo.is_some() || hi.is_some() {
                return Err(Failure::invalid(
                    "--weight-lo/--weight-hi apply to uniform weights only".to_string(),
                ));
            }
            WeightDist::Exponential {
                mean: need(mean, "weight-mean", "exp-weight")?,
            }
        }
        WeightKind::Uniform => {
            if mean.is_some() {
                return Err(Failure::invalid(
                    "--weight-mean applies to det and exp weights only".to_string(),
                ));
            }
            WeightDist::Uniform {
                lo: need(lo, "weight-lo", "uniform-weight")?,
                hi: need(hi, "weight-hi", "uniform-weight")?,
            }
        }
    };
    dist.validate()?;
    Ok(dist)
}

enum Samples {
    /// Time, blocks, and undershoot per path (cl, bsq).
    Hitting(Vec<HittingSample>),
    /// Blocks per busy period (dm1).
    Blocks(Vec<u64>),
    /// First-passage time per path (bm).
    Times(Vec<f64>),
}

fn mean_stderr(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

pub fn run(args: &SimulateArgs, settings: &Settings) -> Result<(), Failure> {
    if args.reps == 0 {
        return Err(Failure::invalid("--reps must be at least 1".to_string()));
    }
    let cap = args.event_cap.unwrap_or(DEFAULT_EVENT_CAP);
    let seed = settings.seed;
    let stream = |rep: u32| seed.with_stream(seed.stream + rep as u64);

    let bsq_flags = [
        ("nu", args.nu.is_some()),
        ("lambda", args.lambda.is_some()),
        ("k", args.k.is_some()),
        ("m", args.m.is_some()),
        ("weight-dist", args.weight_dist.is_some()),
        ("weight-mean", args.weight_mean.is_some()),
        ("weight-lo", args.weight_lo.is_some()),
        ("weight-hi", args.weight_hi.is_some()),
    ];
    let bm_flags = [
        ("drift", args.drift.is_some()),
        ("variance", args.variance.is_some()),
    ];

    let model = match args.model {
        ModelKind::Cl => "cl",
        ModelKind::Bsq => "bsq",
        ModelKind::Dm1 => "dm1",
        ModelKind::Bm => "bm",
    };
    let samples = match args.model {
        ModelKind::Cl => {
            reject_unused(model, &bsq_flags)?;
            reject_unused(model, &bm_flags)?;
            let params = ClParams::new(need(args.y, "y", model)?, need(args.c, "c", model)?)?;
            let hits: Result<Vec<_>, _> = (0..args.reps)
                .map(|rep| simulate_cl_hit_with_cap(&params, stream(rep), cap))
                .collect();
            Samples::Hitting(hits?)
        }
        ModelKind::Bsq => {
            reject_unused(model, &[("y", args.y.is_some()), ("c", args.c.is_some())])?;
            reject_unused(model, &bm_flags)?;
            let weights = build_weights(
                need(args.weight_dist, "weight-dist", model)?,
                args.weight_mean,
                args.weight_lo,
                args.weight_hi,
            )?;
            let params = BsqParams::new(
                need(args.nu, "nu", model)?,
                need(args.lambda, "lambda", model)?,
                need(args.k, "k", model)?,
                args.m.unwrap_or(0),
                weights,
            )?;
            let hits: Result<Vec<_>, _> = (0..args.reps)
                .map(|rep| simulate_bsq_hit_with_cap(&params, stream(rep), cap))
                .collect();
            Samples::Hitting(hits?)
        }
        ModelKind::Dm1 => {
            reject_unused(model, &bsq_flags)?;
            reject_unused(model, &bm_flags)?;
            let y = need(args.y, "y", model)?;
            let c = need(args.c, "c", model)?;
            let counts: Result<Vec<_>, _> = (0..args.reps)
                .map(|rep| simulate_dm1_busy_period_with_cap(y, c, stream(rep), cap))
                .collect();
            Samples::Blocks(counts?)
        }
        ModelKind::Bm => {
            reject_unused(model, &bsq_flags)?;
            reject_unused(model, &[("c", args.c.is_some())])?;
            let y = need(args.y, "y", model)?;
            let drift = need(args.drift, "drift", model)?;
            let variance = need(args.variance, "variance", model)?;
            let times: Result<Vec<_>, _> = (0..args.reps)
                .map(|rep| simulate_bm_hit(y, drift, variance, stream(rep)))
                .collect();
            Samples::Times(times?)
        }
    };

    let summary = match &samples {
        Samples::Hitting(hits) => {
            let times: Vec<f64> = hits.iter().map(|h| h.time).collect();
            let (mean, stderr) = mean_stderr(&times);
            let mean_blocks =
                hits.iter().map(|h| h.blocks as f64).sum::<f64>() / hits.len() as f64;
            let mean_undershoot =
                hits.iter().map(|h| h.undershoot).sum::<f64>() / hits.len() as f64;
            json!({
                "model": model,
                "reps": args.reps,
                "metric": "time",
                "mean": mean,
                "stderr": stderr,
                "mean_blocks": mean_blocks,
                "mean_undershoot": mean_undershoot,
            })
        }
        Samples::Blocks(counts) => {
            let xs: Vec<f64> = counts.iter().map(|n| *n as f64).collect();
            let (mean, stderr) = mean_stderr(&xs);
            json!({
                "model": model,
                "reps": args.reps,
                "metric": "blocks",
                "mean": mean,
                "stderr": stderr,
                "mean_blocks": null,
                "mean_undershoot": null,
            })
        }
        Samples::Times(times) => {
            let (mean, stderr) = mean_stderr(times);
            json!({
                "model": model,
                "reps": args.reps,
                "metric": "time",
                "mean": mean,
                "stderr": stderr,
                "mean_blocks": null,
                "mean_undershoot": null,
            })
        }
    };

    match settings.format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            match &samples {
                Samples::Hitting(hits) => {
                    w.write_record(["rep", "time", "blocks", "undershoot"])?;
                    for (rep, h) in hits.iter().enumerate() {
                        w.write_record([
                            rep.to_string(),
                            h.time.to_string(),
                            h.blocks.to_string(),
                            h.undershoot.to_string(),
                        ])?;
                    }
                }
                Samples::Blocks(counts) => {
                    w.write_record(["rep", "blocks"])?;
                    for (rep, n) in counts.iter().enumerate() {
                        w.write_record([rep.to_string(), n.to_string()])?;
                    }
                }
                Samples::Times(times) => {
                    w.write_record(["rep", "time"])?;
                    for (rep, t) in times.iter().enumerate() {
                        w.write_record([rep.to_string(), t.to_string()])?;
                    }
                }
            }
            let bytes = w.into_inner().map_err(|e| Failure::invalid(e.to_string()))?;
            emit(settings.out.as_deref(), &bytes)?;
            if let Some(out) = &settings.out {
                write_atomic(&sidecar_path(out, ".summary.json"), &json_bytes(&summary)?)?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = match &samples {
                Samples::Hitting(hits) => hits
                    .iter()
                    .enumerate()
                    .map(|(rep, h)| {
                        json!({
                            "rep": rep,
                            "time": h.time,
                            "blocks": h.blocks,
                            "undershoot": h.undershoot,
                        })
                    })
                    .collect(),
                Samples::Blocks(counts) => counts
                    .iter()
                    .enumerate()
                    .map(|(rep, n)| json!({ "rep": rep, "blocks": n }))
                    .collect(),
                Samples::Times(times) => times
                    .iter()
                    .enumerate()
                    .map(|(rep, t)| json!({ "rep": rep, "time": t }))
                    .collect(),
            };
            let doc = json!({ "summary": summary, "samples": rows });
            emit(settings.out.as_deref(), &json_bytes(&doc)?)?;
        }
    }
    Ok(())
}
