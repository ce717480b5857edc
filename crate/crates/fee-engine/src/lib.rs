//! Fee-bucket recommendation against confirmation-time targets.
//!
//! Given a ladder of fee-density buckets, three selectors pick the
//! cheapest bucket expected to confirm within a target time at a
//! required probability:
//!
//! * the model-based selector fits each bucket's backlog with the
//!   inverse-Gaussian surrogate of its `(y, c)` state;
//! * the data-driven selector reads tails off per-bucket empirical
//!   distributions of measured confirmation times;
//! * the hindsight oracle scans realized future series and marks the
//!   cheapest bucket that actually confirmed in time.
//!
//! Predictions are scored as signed ladder distances to the oracle and
//! aggregated into an evaluation table. [`run_benchmark`] plays both
//! live selectors against the oracle on synthetic backlog paths.
//!
//! ```
//! use fee_engine::{model_based_bucket, BucketState, TargetSpec};
//!
//! let ladder = [
//!     BucketState { phi: 5.0, c: 0.7, y: 1.2 },
//!     BucketState { phi: 20.0, c: 0.5, y: 0.4 },
//!     BucketState { phi: 50.0, c: 0.3, y: 0.1 },
//! ];
//! let target = TargetSpec::new(4.0)?;
//! let pick = model_based_bucket(&ladder, &target)?;
//! assert_eq!(pick.bucket, 50.0);
//! assert!(pick.predicted_tail < 0.05);
//! # Ok::<(), fee_engine::FeeError>(())
//! ```

mod benchmark;
mod ecdf;
mod error;
mod mle;
mod report;
mod score;
mod select;
mod target;

pub use benchmark::{
    default_bucket_models, run_benchmark, BenchmarkConfig, BenchmarkReport, BucketModel,
};
pub use ecdf::EmpiricalCdf;
pub use error::FeeError;
pub use mle::estimate_c_mle;
pub use report::{write_evaluation_csv, write_recommendation_json, RecommendationReport};
pub use score::{score, summarize_scores, Score, ScoreClass, ScoreSummary};
pub use select::{
    data_driven_bucket, data_tails, model_based_bucket, model_tails, oracle_bucket,
    BucketRecommendation, BucketState, Method, TailRow,
};
pub use target::{TargetSpec, DEFAULT_CONFIDENCE};
