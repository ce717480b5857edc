//! Event-driven simulation of the batch-service mempool queue and its
//! scaling limits.
//!
//! The central object is a queue fed by a Poisson stream of
//! transactions with i.i.d. weights, served by blocks arriving as a
//! second independent Poisson process; each block packs whole
//! transactions in FIFO order up to a fixed weight capacity, and the
//! first transaction that does not fit opens the next block.
//! [`simulate_bsq_hit`] runs one
//! replication from an initial backlog until the queue first empties
//! and records the hitting time, the number of blocks used, and the
//! normalized undershoot of the last block.
//!
//! Around it sit reference processes with the same first-passage laws:
//! the drift-and-jump level process ([`simulate_cl_hit`]), the busy
//! period of a single-server queue with deterministic service
//! ([`simulate_dm1_busy_period`]), and Brownian motion with drift
//! ([`simulate_bm_hit`]). [`fluid_scaling_experiment`] and
//! [`diffusion_scaling_experiment`] drive ladders of queue sizes
//! against the analytic limit laws and summarize the fit with
//! Kolmogorov-Smirnov statistics.
//!
//! All randomness flows through [`Seed`], a counter-mode generator
//! with independent substreams, so every experiment is reproducible
//! bit for bit regardless of thread scheduling.
//!
//! ```
//! use stochastic_sim::{simulate_bsq_hit, BsqParams, Seed, WeightDist};
//!
//! let params = BsqParams::new(
//!     1.2,
//!     1.0,
//!     1.0,
//!     3,
//!     WeightDist::Deterministic { weight: 0.5 },
//! )?;
//! let sample = simulate_bsq_hit(&params, Seed::new(7, 0))?;
//! assert!(sample.time > 0.0);
//! assert!(sample.blocks >= 2);
//! # Ok::<(), stochastic_sim::SimError>(())
//! ```

mod bsq;
mod error;
mod fill;
mod ks;
mod level_paths;
mod scaling;
mod seed;
mod weights;

pub use bsq::{
    simulate_bsq_hit, simulate_bsq_hit_with_cap, BsqParams, HittingSample, DEFAULT_EVENT_CAP,
};
pub use error::SimError;
pub use fill::{sample_block_fill, BlockFill};
pub use ks::ks_statistic;
pub use level_paths::{
    simulate_bm_hit, simulate_cl_hit, simulate_cl_hit_with_cap, simulate_dm1_busy_period,
    simulate_dm1_busy_period_with_cap,
};
pub use scaling::{
    diffusion_scaling_experiment, fluid_scaling_experiment, SampleView, ScalingReport, ScalingRow,
};
pub use seed::Seed;
pub use weights::WeightDist;
