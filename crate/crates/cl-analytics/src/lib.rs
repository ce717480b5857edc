//! Analytics for confirmation times in a drift-and-jump queueing model.
//!
//! A transaction entering a fee market sees a backlog of `y` block
//! capacities ahead of it. Competing work arrives continuously at rate
//! `c` capacities per expected block interval, and blocks arrive as a
//! unit-rate Poisson process, each clearing one capacity. The level
//! ahead of the transaction is
//!
//! ```text
//! Y(t) = y + c t - N(t)
//! ```
//!
//! and the transaction confirms at the first passage `T_y = inf{t > 0 :
//! Y(t) < 0}`. For `c < 1` confirmation is certain and `T_y` has finite
//! moments; as `c` approaches one the queue becomes critical.
//!
//! The crate provides the exact density, CDF, quantiles and block-count
//! tail of `T_y`, exact means and undershoots via closed forms and a
//! grid recursion, and a moment-matched inverse-Gaussian approximation
//! suitable for fast fee decisions.
//!
//! # Examples
//!
//! ```
//! use cl_analytics::{cdf_ty, ig_cdf, ig_params, mean_time, ClParams};
//!
//! let p = ClParams::new(2.5, 0.6).unwrap();
//! let exact_mean = mean_time(&p).unwrap();
//! assert!((exact_mean - 7.152).abs() < 1e-3);
//!
//! // The inverse-Gaussian surrogate is close in distribution.
//! let ig = ig_params(&p).unwrap();
//! let t = 10.0;
//! let gap = (cdf_ty(t, &p).unwrap() - ig_cdf(t, &ig).unwrap()).abs();
//! assert!(gap < 0.05);
//! ```

mod density;
mod error;
mod ig;
mod mean;
mod params;
mod rho;
mod special;
mod sweep;
mod tail;
mod undershoot;

pub use density::{
    cdf_ty, cdf_ty_many, default_horizon, density_t0, density_ty, density_with_extra_conf,
    quantile_ty, tail_decay_rate,
};
pub use error::ClError;
pub use ig::{ig_cdf, ig_params, ig_quantile, IgParams};
pub use mean::{mean_time, mean_time_closed_form, MeanTable};
pub use params::{ClParams, MAX_DRIFT};
pub use rho::solve_rho;
pub use tail::tail_blocks;
pub use undershoot::{expected_undershoot, limiting_undershoot};
