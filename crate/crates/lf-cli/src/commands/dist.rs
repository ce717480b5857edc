use cl_analytics::{
    cdf_ty_many, default_horizon, density_ty, density_with_extra_conf, mean_time, ClParams,
};
use serde_json::json;

use crate::cli::{DistArgs, OutputFormat};
use crate::config::Settings;
use crate::failure::Failure;
use crate::output::{emit, json_bytes, sidecar_path, write_atomic};

/// Largest number of grid rows a single invocation may emit.
const MAX_ROWS: usize = 1_000_000;

/// Regular grid over `[0, t_max]` with the density's kink points
/// spliced in exactly: the times where the rising backlog `y + c t`
/// crosses an integer, which is where the saw-tooth pattern lives.
fn build_grid(y: f64, c: f64, step: f64, t_max: f64) -> Result<Vec<f64>, Failure> {
    let regular = (t_max / step).floor() as usize + 1;
    let kinks = (t_max * c).ceil() as usize + 1;
    if regular.saturating_add(kinks) > MAX_ROWS {
        return Err(Failure::invalid(format!(
            "grid would exceed {MAX_ROWS} rows; raise --step or lower --t-max"
        )));
    }
    let mut grid: Vec<f64> = (0..regular).map(|k| k as f64 * step).collect();
    if *grid.last().unwrap() < t_max {
        grid.push(t_max);
    }
    let mut n = y.floor() + 1.0;
    loop {
        let t = (n - y) / c;
        if t > t_max {
            break;
        }
        if t > 0.0 {
            grid.push(t);
        }
        n += 1.0;
    }
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    Ok(grid)
}

pub fn run(args: &DistArgs, settings: &Settings) -> Result<(), Failure> {
    let params = ClParams::with_extra_conf(args.y, args.c, args.z)?;
    if !args.step.is_finite() || args.step <= 0.0 {
        return Err(Failure::invalid(format!(
            "--step must be positive, got {}",
            args.step
        )));
    }
    let t_max = match args.t_max {
        Some(t) if t.is_finite() && t >= args.step => t,
        Some(t) => {
            return Err(Failure::invalid(format!(
                "--t-max must cover at least one step, got {t}"
            )))
        }
        None => default_horizon(&params)?,
    };

    let grid = build_grid(args.y, args.c, args.step, t_max)?;
    let (pdf, cdf) = if args.z == 0 {
        let pdf: Result<Vec<f64>, _> = grid.iter().map(|t| density_ty(*t, &params)).collect();
        (pdf?, cdf_ty_many(&grid, &params)?)
    } else {
        let pdf: Result<Vec<f64>, _> = grid
            .iter()
            .map(|t| density_with_extra_conf(*t, &params))
            .collect();
        let pdf = pdf?;
        // The extra-confirmation law has no closed CDF here; accumulate
        // the density over the grid instead.
        let mut cdf = Vec::with_capacity(grid.len());
        let mut acc = 0.0;
        cdf.push(0.0);
        for i in 1..grid.len() {
            acc += 0.5 * (pdf[i] + pdf[i - 1]) * (grid[i] - grid[i - 1]);
            cdf.push(acc.min(1.0));
        }
        (pdf, cdf)
    };
    let mean = mean_time(&params)?;

    match settings.format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["t", "pdf", "cdf"])?;
            for ((t, p), f) in grid.iter().zip(&pdf).zip(&cdf) {
                w.write_record([t.to_string(), p.to_string(), f.to_string()])?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::invalid(e.to_string()))?;
            emit(settings.out.as_deref(), &bytes)?;
            if let Some(out) = &settings.out {
                let summary = json!({ "y": args.y, "c": args.c, "z": args.z, "mean": mean });
                write_atomic(&sidecar_path(out, ".summary.json"), &json_bytes(&summary)?)?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = grid
                .iter()
                .zip(&pdf)
                .zip(&cdf)
                .map(|((t, p), f)| json!({ "t": t, "pdf": p, "cdf": f }))
                .collect();
            let doc = json!({
                "y": args.y,
                "c": args.c,
                "z": args.z,
                "mean": mean,
                "rows": rows,
            });
            emit(settings.out.as_deref(), &json_bytes(&doc)?)?;
        }
    }
    Ok(())
}
