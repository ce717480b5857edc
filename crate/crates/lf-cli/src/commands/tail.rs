use cl_analytics::{tail_blocks, ClParams};
use serde_json::json;

use crate::cli::{OutputFormat, TailArgs};
use crate::config::Settings;
use crate::failure::Failure;
use crate::output::{emit, json_bytes};

pub fn run(args: &TailArgs, settings: &Settings) -> Result<(), Failure> {
    if args.n == 0 {
        return Err(Failure::invalid("--n must be at least 1".to_string()));
    }
    let params = ClParams::new(args.y, args.c)?;
    let tails: Vec<f64> = (1..=args.n)
        .map(|n| tail_blocks(n, &params))
        .collect::<Result<_, _>>()?;
    let bytes = match settings.format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "tail"])?;
            for (n, tail) in (1..=args.n).zip(&tails) {
                w.write_record([n.to_string(), tail.to_string()])?;
            }
            w.into_inner().map_err(|e| Failure::invalid(e.to_string()))?
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = (1..=args.n)
                .zip(&tails)
                .map(|(n, tail)| json!({ "n": n, "tail": tail }))
                .collect();
            json_bytes(&json!({ "y": args.y, "c": args.c, "rows": rows }))?
        }
    };
    emit(settings.out.as_deref(), &bytes)
}
