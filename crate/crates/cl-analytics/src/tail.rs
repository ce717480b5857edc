//! Distribution of the number of blocks to confirmation.
//!
//! By duality with a queue fed by deterministic unit inter-arrivals and
//! exponential service, the block count `N_y` exceeds `n` exactly when a
//! unit-rate Poisson process `M` observed at the lattice `tau_k = (k -
//! y)/c` stays below its index: `M(tau_k) < k` for all `k <= n`. The
//! constraints are trivial while `tau_k <= 0`, so with `m = floor(y)` the
//! first `m` blocks are certain and the remaining stages contribute
//! Poisson increments of mean `(1 - frac(y))/c` then `1/c`.
//!
//! A dynamic program over the Poisson prefix sums evaluates the
//! probability exactly; each stage keeps at most `n` states and the
//! per-stage increments are truncated where their mass falls below
//! 1e-15 relative.

use crate::error::ClError;
use crate::params::ClParams;
use crate::special::poisson_ln_pmf;

/// Truncated Poisson probabilities `P(X = 0..=max_k)` for mean `lambda`.
fn poisson_pmf_row(lambda: f64, max_k: usize) -> Vec<f64> {
    let mut row = Vec::with_capacity(max_k + 1);
    let mut cum = 0.0;
    for k in 0..=max_k {
        let p = poisson_ln_pmf(k as u64, lambda).exp();
        row.push(p);
        cum += p;
        if 1.0 - cum < 1e-15 {
            break;
        }
    }
    row
}

/// Probability that confirmation needs more than `n` blocks.
///
/// Equals one for `n <= floor(y)` and decreases geometrically beyond
/// the mean block count.
///
/// # Examples
///
/// ```
/// use cl_analytics::{tail_blocks, ClParams};
///
/// let p = ClParams::new(0.0, 0.4).unwrap();
/// let tail = tail_blocks(1, &p).unwrap();
/// assert!((tail - (-2.5f64).exp()).abs() < 1e-14);
/// ```
pub fn tail_blocks(n: u64, params: &ClParams) -> Result<f64, ClError> {
    params.require_base("tail_blocks")?;
    if n == 0 {
        return Err(ClError::Param("block count must be >= 1".into()));
    }
    let y = params.y();
    let c = params.c();
    let m = y.floor();
    if (n as f64) <= m {
        return Ok(1.0);
    }

    let stages = (n as f64 - m) as usize;
    let first_mean = (1.0 - (y - m)) / c;
    let later_mean = 1.0 / c;

    // dp[s]: probability the Poisson prefix sum equals s while satisfying
    // every constraint seen so far; after stage j the sum must stay at or
    // below floor(y) + j.
    let mut cap = m as usize;
    let mut dp = poisson_pmf_row(first_mean, cap);
    dp.resize(cap + 1, 0.0);

    let later_row = poisson_pmf_row(later_mean, (m as usize) + stages);
    for _ in 1..stages {
        cap += 1;
        let mut next = vec![0.0; cap + 1];
        for (s, &mass) in dp.iter().enumerate() {
            if mass == 0.0 {
                continue;
            }
            let top = (cap - s).min(later_row.len() - 1);
            for (k, &p) in later_row[..=top].iter().enumerate() {
                next[s + k] += mass * p;
            }
        }
        dp = next;
    }
    Ok(dp.iter().sum::<f64>().min(1.0))
}
