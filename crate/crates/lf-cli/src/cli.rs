use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

/// Confirmation-time analytics, simulation, and fee recommendation for
/// fee-bucketed mempools.
#[derive(Debug, Parser)]
#[command(name = "lf", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Seed for every random stream; identical seeds reproduce outputs
    /// byte for byte.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Output format of the primary artifact.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write the primary artifact to this path (atomically) instead of
    /// stdout. Commands with a secondary artifact place it next to it.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// TOML config file supplying defaults; the LF_CONFIG environment
    /// variable names one when the flag is absent. Flags win over the
    /// file, the file wins over built-in defaults.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Density and CDF table of the confirmation time from a backlog.
    Dist(DistArgs),
    /// Expected confirmation time.
    Mean(MeanArgs),
    /// Tail probabilities of the number of blocks to confirmation.
    Tail(TailArgs),
    /// Monte Carlo first-passage samples of one of the process models.
    Simulate(SimulateArgs),
    /// Scaling experiment: goodness of fit of queue hitting times to
    /// their limit law over a ladder of system sizes.
    Converge(ConvergeArgs),
    /// Extract confirmation durations and slope estimates from a
    /// mempool snapshot file.
    Extract(ExtractArgs),
    /// Recommend the cheapest fee bucket meeting a confirmation
    /// target.
    Recommend(RecommendArgs),
    /// Score the model-based and data-driven recommenders against the
    /// hindsight oracle on synthetic benchmarks.
    Evaluate(EvaluateArgs),
}

#[derive(Debug, Args)]
pub struct DistArgs {
    /// Starting backlog in block units.
    #[arg(long)]
    pub y: f64,
    /// Arrival rate in block units (must be below 1).
    #[arg(long)]
    pub c: f64,
    /// Extra block confirmations to wait after first passage.
    #[arg(long, default_value_t = 0)]
    pub z: u32,
    /// Grid step between reported times.
    #[arg(long, default_value_t = 0.01)]
    pub step: f64,
    /// Upper end of the grid; defaults to a horizon carrying at least
    /// 99.9% of the distribution's mass.
    #[arg(long)]
    pub t_max: Option<f64>,
}

#[derive(Debug, Args)]
pub struct MeanArgs {
    /// Starting backlog in block units.
    #[arg(long)]
    pub y: f64,
    /// Arrival rate in block units (must be below 1).
    #[arg(long)]
    pub c: f64,
    /// Extra block confirmations to wait after first passage.
    #[arg(long, default_value_t = 0)]
    pub z: u32,
}

#[derive(Debug, Args)]
pub struct TailArgs {
    /// Starting backlog in block units.
    #[arg(long)]
    pub y: f64,
    /// Arrival rate in block units (must be below 1).
    #[arg(long)]
    pub c: f64,
    /// Largest block count to report; rows cover 1 through this value.
    #[arg(long, default_value_t = 10)]
    pub n: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    /// Drift-and-unit-jump level process.
    Cl,
    /// Batch-service queue.
    Bsq,
    /// Dual single-server queue busy period (block counts).
    Dm1,
    /// Drifted Brownian motion first passage.
    Bm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightKind {
    /// Every transaction has the same weight.
    Det,
    /// Exponential weights.
    Exp,
    /// Uniform weights on [lo, hi].
    Uniform,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Process model to sample.
    #[arg(long, value_enum)]
    pub model: ModelKind,
    /// Number of independent first-passage samples.
    #[arg(long, default_value_t = 10_000)]
    pub reps: u32,
    /// Starting level (cl, dm1, bm).
    #[arg(long)]
    pub y: Option<f64>,
    /// Arrival rate in block units (cl, dm1).
    #[arg(long)]
    pub c: Option<f64>,
    /// Transaction arrival rate (bsq).
    #[arg(long)]
    pub nu: Option<f64>,
    /// Block arrival rate (bsq).
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Block weight capacity (bsq).
    #[arg(long)]
    pub k: Option<f64>,
    /// Initially queued transactions (bsq).
    #[arg(long)]
    pub m: Option<u64>,
    /// Weight family of bsq transactions.
    #[arg(long, value_enum)]
    pub weight_dist: Option<WeightKind>,
    /// Weight of det transactions, or mean of exp ones.
    #[arg(long)]
    pub weight_mean: Option<f64>,
    /// Lower uniform weight bound.
    #[arg(long)]
    pub weight_lo: Option<f64>,
    /// Upper uniform weight bound.
    #[arg(long)]
    pub weight_hi: Option<f64>,
    /// Negative drift of the Brownian motion (bm).
    #[arg(long)]
    pub drift: Option<f64>,
    /// Variance per unit time of the Brownian motion (bm).
    #[arg(long)]
    pub variance: Option<f64>,
    /// Abort a path after this many events instead of the built-in
    /// cap.
    #[arg(long)]
    pub event_cap: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvergeMode {
    /// Law-of-large-numbers scaling toward the drift-and-jump limit.
    Fluid,
    /// Near-critical scaling toward the inverse-Gaussian limit.
    Diffusion,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    /// Scaling regime.
    #[arg(long, value_enum)]
    pub mode: ConvergeMode,
    /// Weight-normalized initial level.
    #[arg(long, default_value_t = 1.0)]
    pub y: f64,
    /// Ladder of system sizes; defaults to 10,100,1000 (fluid) or
    /// 10,40,160 (diffusion).
    #[arg(long, value_delimiter = ',')]
    pub scales: Option<Vec<u64>>,
    /// Replications per rung.
    #[arg(long, default_value_t = 2000)]
    pub reps: u32,
    /// Base transaction arrival rate.
    #[arg(long, default_value_t = 2.0)]
    pub nu: f64,
    /// Block arrival rate.
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    /// Base block weight capacity.
    #[arg(long, default_value_t = 1.0)]
    pub k: f64,
    /// Weight family of transactions.
    #[arg(long, value_enum, default_value_t = WeightKind::Det)]
    pub weight_dist: WeightKind,
    /// Weight of det transactions, or mean of exp ones.
    #[arg(long, default_value_t = 0.35)]
    pub weight_mean: f64,
    /// Lower uniform weight bound.
    #[arg(long)]
    pub weight_lo: Option<f64>,
    /// Upper uniform weight bound.
    #[arg(long)]
    pub weight_hi: Option<f64>,
    /// Noise scale of the diffusion schedule; defaults to
    /// sqrt(lambda).
    #[arg(long)]
    pub sigma: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ExtractArgs {
    /// Mempool snapshot CSV.
    #[arg(long)]
    pub input: PathBuf,
    /// Fee-density bucket boundary to extract.
    #[arg(long)]
    pub phi: f64,
    /// Tolerance between local and global slope estimates; zero keeps
    /// nothing.
    #[arg(long)]
    pub delta: Option<f64>,
    /// Minutes per block used to convert timestamps.
    #[arg(long)]
    pub minutes_per_block: Option<f64>,
    /// Effective block size in vMB used to convert weights.
    #[arg(long)]
    pub vmb_per_block: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodKind {
    /// Surrogate-model tails from per-bucket (c, y) states.
    Model,
    /// Empirical tails from per-bucket confirmation samples.
    Data,
}

#[derive(Debug, Args)]
pub struct RecommendArgs {
    /// Maximum acceptable confirmation time in block units.
    #[arg(long)]
    pub t_star: f64,
    /// Required confirmation probability.
    #[arg(long)]
    pub confidence: Option<f64>,
    /// Recommendation method.
    #[arg(long, value_enum)]
    pub method: MethodKind,
    /// Per-bucket state JSON ({"buckets": [{"phi", "c", "y"}, ...]})
    /// for the model method.
    #[arg(long)]
    pub state: Option<PathBuf>,
    /// Mempool snapshot CSV; bucket states are estimated from it for
    /// the model method.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Per-bucket confirmation samples JSON ({"buckets": [{"phi",
    /// "durations", "censored"}, ...]}) for the data method.
    #[arg(long)]
    pub samples: Option<PathBuf>,
    /// Minutes per block used to convert timestamps.
    #[arg(long)]
    pub minutes_per_block: Option<f64>,
    /// Effective block size in vMB used to convert weights.
    #[arg(long)]
    pub vmb_per_block: Option<f64>,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Number of benchmark seeds; seed values count up from --seed.
    #[arg(long, default_value_t = 1)]
    pub seeds: u64,
    /// Decision instances per seed.
    #[arg(long)]
    pub instances: Option<usize>,
    /// Confirmation measurements per bucket and instance.
    #[arg(long)]
    pub draws: Option<usize>,
    /// Lookback window length in samples.
    #[arg(long)]
    pub window: Option<usize>,
    /// Forward horizon in samples available to the oracle.
    #[arg(long)]
    pub forward: Option<usize>,
    /// Minutes between successive samples.
    #[arg(long)]
    pub spacing_minutes: Option<f64>,
    /// Maximum acceptable confirmation time in block units.
    #[arg(long)]
    pub t_star: Option<f64>,
    /// Required confirmation probability.
    #[arg(long)]
    pub confidence: Option<f64>,
    /// Bucket-model ladder JSON ({"buckets": [{"phi", "y", "c"},
    /// ...]}); defaults to the built-in three-tier ladder.
    #[arg(long)]
    pub models: Option<PathBuf>,
}
