mod converge;
mod dist;
mod evaluate;
mod extract;
mod mean;
mod recommend;
mod simulate;
mod tail;

use crate::cli::{Cli, Command};
use crate::config::Settings;
use crate::failure::Failure;

pub fn run(cli: Cli) -> Result<(), Failure> {
    let settings = Settings::resolve(&cli.global)?;
    match cli.command {
        Command::Dist(args) => dist::run(&args, &settings),
        Command::Mean(args) => mean::run(&args, &settings),
        Command::Tail(args) => tail::run(&args, &settings),
        Command::Simulate(args) => simulate::run(&args, &settings),
        Command::Converge(args) => converge::run(&args, &settings),
        Command::Extract(args) => extract::run(&args, &settings),
        Command::Recommend(args) => recommend::run(&args, &settings),
        Command::Evaluate(args) => evaluate::run(&args, &settings),
    }
}
