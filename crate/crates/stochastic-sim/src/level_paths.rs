//! Direct simulators of the level process, its queueing dual, and the
//! Brownian surrogate.

use cl_analytics::ClParams;
use rand_distr::{Distribution, Exp, InverseGaussian};

use crate::bsq::{HittingSample, DEFAULT_EVENT_CAP};
use crate::error::{param, SimError};
use crate::seed::Seed;

/// Simulates the level process `Y(t) = y + c t - N(t)` to first passage
/// below zero, with the default event cap.
///
/// Between unit-rate block arrivals the level rises with slope `c`; each
/// block drops it by one. The undershoot is the depth below zero after
/// the fatal drop, `1 - (level just before the jump)`.
///
/// # Examples
///
/// ```
/// use cl_analytics::ClParams;
/// use stochastic_sim::{simulate_cl_hit, Seed};
///
/// let p = ClParams::new(2.5, 0.3).unwrap();
/// let hit = simulate_cl_hit(&p, Seed::new(42, 0)).unwrap();
/// assert!(hit.time > 0.0);
/// assert!(hit.blocks >= 3);
/// assert!((0.0..=1.0).contains(&hit.undershoot));
/// ```
pub fn simulate_cl_hit(params: &ClParams, seed: Seed) -> Result<HittingSample, SimError> {
    simulate_cl_hit_with_cap(params, seed, DEFAULT_EVENT_CAP)
}

/// [`simulate_cl_hit`] with an explicit event cap.
pub fn simulate_cl_hit_with_cap(
    params: &ClParams,
    seed: Seed,
    event_cap: u64,
) -> Result<HittingSample, SimError> {
    if params.z() != 0 {
        return param(
            "path simulation covers the base first passage; extra_conf must be 0".to_string(),
        );
    }
    let mut rng = seed.rng();
    let gap = Exp::new(1.0).expect("unit rate");
    let c = params.c();
    let mut level = params.y();
    let mut t = 0.0;
    let mut blocks = 0u64;
    loop {
        blocks += 1;
        if blocks > event_cap {
            return Err(SimError::Runaway { events: blocks });
        }
        let dt = gap.sample(&mut rng);
        t += dt;
        level += c * dt - 1.0;
        if level < 0.0 {
            return Ok(HittingSample {
                time: t,
                blocks,
                undershoot: -level,
            });
        }
    }
}

/// Counts the customers served in one busy period of the dual queue:
/// deterministic unit inter-arrivals, exponential services with mean
/// `c`, and `y` units of work present initially.
///
/// By duality this count has the same distribution as the number of
/// blocks to confirmation from level `y`, giving an independent Monte
/// Carlo route to the block-count tail.
///
/// # Examples
///
/// ```
/// use stochastic_sim::{simulate_dm1_busy_period, Seed};
///
/// let n = simulate_dm1_busy_period(0.7, 0.5, Seed::new(9, 0)).unwrap();
/// assert!(n >= 1);
/// ```
pub fn simulate_dm1_busy_period(y: f64, c: f64, seed: Seed) -> Result<u64, SimError> {
    simulate_dm1_busy_period_with_cap(y, c, seed, DEFAULT_EVENT_CAP)
}

/// [`simulate_dm1_busy_period`] with an explicit event cap.
pub fn simulate_dm1_busy_period_with_cap(
    y: f64,
    c: f64,
    seed: Seed,
    event_cap: u64,
) -> Result<u64, SimError> {
    if !y.is_finite() || y < 0.0 {
        return param(format!("initial work must be >= 0, got {y}"));
    }
    if !c.is_finite() || c <= 0.0 || c >= 1.0 {
        return param(format!("service mean must lie in (0, 1), got {c}"));
    }
    let mut rng = seed.rng();
    let service = Exp::new(1.0 / c).expect("validated mean");
    let mut work = y;
    let mut served = 0u64;
    loop {
        served += 1;
        if served > event_cap {
            return Err(SimError::Runaway { events: served });
        }
        work += service.sample(&mut rng);
        if work < served as f64 {
            return Ok(served);
        }
    }
}

/// Samples the first passage to zero of a Brownian motion started at
/// `y` with the given negative drift and variance, exactly via its
/// inverse-Gaussian law (no path discretization).
///
/// # Examples
///
/// ```
/// use stochastic_sim::{simulate_bm_hit, Seed};
///
/// let t = simulate_bm_hit(2.0, -0.5, 1.0, Seed::new(3, 0)).unwrap();
/// assert!(t > 0.0);
/// ```
pub fn simulate_bm_hit(y: f64, drift: f64, variance: f64, seed: Seed) -> Result<f64, SimError> {
    if !y.is_finite() || y <= 0.0 {
        return param(format!("starting level must be positive, got {y}"));
    }
    if !drift.is_finite() || drift >= 0.0 {
        return param(format!("drift must be negative, got {drift}"));
    }
    if !variance.is_finite() || variance <= 0.0 {
        return param(format!("variance must be positive, got {variance}"));
    }
    let mean = y / (-drift);
    let shape = y * y / variance;
    let ig = InverseGaussian::new(mean, shape)
        .map_err(|e| SimError::Param(format!("inverse-Gaussian setup failed: {e}")))?;
    Ok(ig.sample(&mut seed.rng()))
}
