//! Command-line surface over the confirmation-time libraries: analytic
//! tables, Monte Carlo sampling, scaling experiments, snapshot
//! extraction, and fee recommendation. Every command is deterministic
//! under a fixed seed and config.

mod cli;
mod commands;
mod config;
mod failure;
mod output;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let parsed = cli::Cli::parse();
    match commands::run(parsed) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code)
        }
    }
}
