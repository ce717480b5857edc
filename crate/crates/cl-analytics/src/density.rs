//! Exact confirmation-time density, CDF and quantiles.
//!
//! For a zero backlog the density has the sawtooth form
//!
//! ```text
//! f_{T_0}(t) = e^{-t}                                   c t < 1
//!            = ((c t - floor(c t)) / (c t)) e^{-t} t^g / g!,   g = floor(c t)
//! ```
//!
//! vanishing whenever `c t` is an integer. For a positive backlog `y` the
//! density combines a Poisson-weight main term with corrections indexed
//! by the number of blocks mined before the level first dips under each
//! integer:
//!
//! ```text
//! f_{T_y}(t) = e^{-t}                                       y + c t < 1
//!            = e^{-t} t^F / F!
//!              - sum_{i=ceil(y)}^{F} f_{T_0}(t - (i-y)/c) p_i,   F = floor(y + c t)
//! p_i = e^{-l_i} l_i^i / i!,  l_i = (i - y)/c
//! ```
//!
//! The correction weights `p_i` do not depend on `t` and decay like
//! `e^{-i (1-c+c ln c)/c}` beyond `i ~ y/(1-c)`, so they are tabulated
//! once per parameter set and truncated where they stop contributing.
//!
//! The density is smooth between the lattice points `t_n = (n - y)/c`;
//! the CDF integrates panel by panel with a Gauss-Legendre rule, which
//! keeps every panel integral accurate to near machine precision.

use crate::error::ClError;
use crate::ig::ig_params;
use crate::params::{ClParams, MAX_DRIFT};
use crate::special::{gl16, ln_factorial, LnFactorial};

/// Absolute floor under which correction weights are dropped; the
/// weights multiply a density bounded by one, so discarded terms change
/// nothing representable.
const PMF_FLOOR_LN: f64 = -110.0;

fn check_time(t: f64) -> Result<(), ClError> {
    if !t.is_finite() || t < 0.0 {
        return Err(ClError::Param(format!(
            "time must be finite and >= 0, got {t}"
        )));
    }
    Ok(())
}

fn check_drift(c: f64) -> Result<(), ClError> {
    if !c.is_finite() || c <= 0.0 || c >= MAX_DRIFT {
        return Err(ClError::Param(format!(
            "drift must lie in (0, {MAX_DRIFT}), got {c}"
        )));
    }
    Ok(())
}

/// Correction weights `p_i` for `i = i0, i0+1, ...`, truncated once they
/// are past their peak near `y/(1-c)` and numerically negligible.
#[derive(Debug, Clone)]
struct Corrections {
    i0: u64,
    pmf: Vec<f64>,
}

impl Corrections {
    fn build(y: f64, c: f64) -> Result<Self, ClError> {
        let i0 = y.ceil() as u64;
        let peak = y / (1.0 - c);
        let mut pmf = Vec::new();
        let mut i = i0;
        loop {
            let lambda = (i as f64 - y) / c;
            let ln_p = if lambda == 0.0 {
                if i == 0 {
                    0.0
                } else {
                    f64::NEG_INFINITY
                }
            } else {
                -lambda + i as f64 * lambda.ln() - ln_factorial(i)
            };
            if (i as f64) > peak && ln_p < PMF_FLOOR_LN {
                break;
            }
            pmf.push(if ln_p.is_finite() { ln_p.exp() } else { 0.0 });
            i += 1;
            if i - i0 > 10_000_000 {
                return Err(ClError::Numeric(
                    "correction-weight table failed to truncate".into(),
                ));
            }
        }
        Ok(Self { i0, pmf })
    }
}

/// Evaluates the density repeatedly under one parameter set, sharing the
/// correction weights and the log-factorial table across calls.
#[derive(Debug, Clone)]
pub(crate) struct DensityEvaluator {
    y: f64,
    c: f64,
    corr: Corrections,
    lnf: LnFactorial,
}

impl DensityEvaluator {
    /// Prepares tables valid for all `t <= t_max`.
    pub(crate) fn new(y: f64, c: f64, t_max: f64) -> Result<Self, ClError> {
        let max_index = (y + c * t_max).floor().max(c * t_max) as usize + 2;
        Ok(Self {
            y,
            c,
            corr: Corrections::build(y, c)?,
            lnf: LnFactorial::with_max(max_index),
        })
    }

    fn zero_level(&self, t: f64) -> f64 {
        if t < 0.0 {
            return 0.0;
        }
        let x = self.c * t;
        if x < 1.0 {
            return (-t).exp();
        }
        let g = x.floor();
        let frac = x - g;
        if frac == 0.0 {
            return 0.0;
        }
        frac / x * (-t + g * t.ln() - self.lnf.get(g as usize)).exp()
    }

    pub(crate) fn density(&self, t: f64) -> f64 {
        if self.y == 0.0 {
            return self.zero_level(t);
        }
        let s = self.y + self.c * t;
        if s < 1.0 {
            return (-t).exp();
        }
        let f_idx = s.floor();
        let mut acc = if t == 0.0 {
            0.0
        } else {
            (-t + f_idx * t.ln() - self.lnf.get(f_idx as usize)).exp()
        };
        let last = f_idx as u64;
        for (j, &p) in self.corr.pmf.iter().enumerate() {
            let i = self.corr.i0 + j as u64;
            if i > last {
                break;
            }
            if p > 0.0 {
                acc -= p * self.zero_level(t - (i as f64 - self.y) / self.c);
            }
        }
        acc.max(0.0)
    }
}

/// Lattice points `(n - y)/c` splitting `[0, t_max]` into smooth panels.
fn panel_edges(y: f64, c: f64, t_max: f64) -> Vec<f64> {
    let mut edges = vec![0.0];
    let mut n = y.floor() + 1.0;
    loop {
        let t = (n - y) / c;
        if t >= t_max {
            break;
        }
        if t > 0.0 {
            edges.push(t);
        }
        n += 1.0;
    }
    edges.push(t_max);
    edges
}

/// Sawtooth density of the confirmation time from a zero backlog.
///
/// # Examples
///
/// ```
/// use cl_analytics::density_t0;
///
/// let v = density_t0(0.5, 0.4).unwrap();
/// assert!((v - (-0.5f64).exp()).abs() < 1e-12);
/// assert_eq!(density_t0(2.5, 0.4).unwrap(), 0.0);
/// ```
pub fn density_t0(t: f64, c: f64) -> Result<f64, ClError> {
    check_time(t)?;
    check_drift(c)?;
    Ok(DensityEvaluator::new(0.0, c, t)?.zero_level(t))
}

/// Density of the confirmation time from backlog `y`.
///
/// `params` must not request extra confirmations; see
/// [`density_with_extra_conf`] for that variant.
///
/// # Examples
///
/// ```
/// use cl_analytics::{density_ty, ClParams};
///
/// let p = ClParams::new(1.5, 0.6).unwrap();
/// let v = density_ty(2.0, &p).unwrap();
/// assert!(v > 0.0 && v.is_finite());
/// ```
pub fn density_ty(t: f64, params: &ClParams) -> Result<f64, ClError> {
    check_time(t)?;
    params.require_base("density_ty")?;
    Ok(DensityEvaluator::new(params.y(), params.c(), t)?.density(t))
}

/// CDF of the confirmation time, by panel-wise Gauss-Legendre
/// integration of [`density_ty`].
///
/// # Examples
///
/// ```
/// use cl_analytics::{cdf_ty, ClParams};
///
/// let p = ClParams::new(1.0, 0.6).unwrap();
/// let f = cdf_ty(10.0, &p).unwrap();
/// assert!(f > 0.9 && f <= 1.0);
/// ```
pub fn cdf_ty(t: f64, params: &ClParams) -> Result<f64, ClError> {
    check_time(t)?;
    params.require_base("cdf_ty")?;
    if t == 0.0 {
        return Ok(0.0);
    }
    let eval = DensityEvaluator::new(params.y(), params.c(), t)?;
    let edges = panel_edges(params.y(), params.c(), t);
    let mut acc = 0.0;
    for pair in edges.windows(2) {
        acc += gl16(pair[0], pair[1], |u| eval.density(u));
    }
    Ok(acc.clamp(0.0, 1.0))
}

/// CDF evaluated at an ascending list of times in one sweep.
///
/// Useful when a goodness-of-fit statistic needs the CDF at every point
/// of a sorted sample; the panel integration is shared across queries
/// instead of restarting from zero each time.
pub fn cdf_ty_many(ts: &[f64], params: &ClParams) -> Result<Vec<f64>, ClError> {
    params.require_base("cdf_ty_many")?;
    for pair in ts.windows(2) {
        if !(pair[1] >= pair[0]) {
            return Err(ClError::Param(
                "query times must be sorted in ascending order".into(),
            ));
        }
    }
    let Some(&t_last) = ts.last() else {
        return Ok(Vec::new());
    };
    check_time(ts[0])?;
    check_time(t_last)?;

    let eval = DensityEvaluator::new(params.y(), params.c(), t_last)?;
    let edges = panel_edges(params.y(), params.c(), t_last.max(1.0));
    let mut out = Vec::with_capacity(ts.len());
    let mut acc = 0.0;
    let mut panel = 0usize;
    for &t in ts {
        while panel + 1 < edges.len() && edges[panel + 1] <= t {
            acc += gl16(edges[panel], edges[panel + 1], |u| eval.density(u));
            panel += 1;
        }
        let partial = if t > edges[panel] {
            gl16(edges[panel], t, |u| eval.density(u))
        } else {
            0.0
        };
        out.push((acc + partial).clamp(0.0, 1.0));
    }
    Ok(out)
}

/// Rate `1 - c + c ln c` of exponential decay of the confirmation-time
/// tail in physical time; it controls how far integrations must reach to
/// capture a given mass.
pub fn tail_decay_rate(c: f64) -> Result<f64, ClError> {
    check_drift(c)?;
    Ok(1.0 - c + c * c.ln())
}

/// Default integration horizon capturing at least `1 - 1e-3` of the mass:
/// ten approximate means, floored at twenty block intervals and extended
/// by five tail e-folds for drifts close to one.
pub fn default_horizon(params: &ClParams) -> Result<f64, ClError> {
    let ig = ig_params(params)?;
    let kappa = tail_decay_rate(params.c())?;
    Ok((10.0 * (ig.mean + params.z() as f64))
        .max(20.0)
        .max(5.0 / kappa))
}

/// Quantile of the confirmation time, bisected until the CDF matches the
/// level within 1e-6.
///
/// # Examples
///
/// ```
/// use cl_analytics::{cdf_ty, quantile_ty, ClParams};
///
/// let p = ClParams::new(1.0, 0.6).unwrap();
/// let t90 = quantile_ty(0.9, &p).unwrap();
/// assert!((cdf_ty(t90, &p).unwrap() - 0.9).abs() <= 1e-6);
/// ```
pub fn quantile_ty(p: f64, params: &ClParams) -> Result<f64, ClError> {
    params.require_base("quantile_ty")?;
    if !p.is_finite() || p <= 0.0 || p >= 1.0 {
        return Err(ClError::Param(format!(
            "quantile level must lie in (0, 1), got {p}"
        )));
    }
    let mut hi = default_horizon(params)?;
    while cdf_ty(hi, params)? < p {
        hi *= 2.0;
        if hi > 1e6 {
            return Err(ClError::Numeric(format!(
                "quantile level {p} unreachable within horizon 1e6"
            )));
        }
    }

    let eval = DensityEvaluator::new(params.y(), params.c(), hi)?;
    let edges = panel_edges(params.y(), params.c(), hi);
    let mut prefix = Vec::with_capacity(edges.len());
    prefix.push(0.0);
    for pair in edges.windows(2) {
        let last = *prefix.last().unwrap();
        prefix.push(last + gl16(pair[0], pair[1], |u| eval.density(u)));
    }
    let cdf_at = |t: f64| -> f64 {
        let idx = edges.partition_point(|&e| e <= t) - 1;
        let base = prefix[idx];
        let partial = if t > edges[idx] && idx + 1 < edges.len() {
            gl16(edges[idx], t.min(edges[idx + 1]), |u| eval.density(u))
        } else {
            0.0
        };
        (base + partial).clamp(0.0, 1.0)
    };

    let mut lo = 0.0;
    let mut hi_t = hi;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi_t);
        let f = cdf_at(mid);
        if (f - p).abs() <= 1e-6 {
            return Ok(mid);
        }
        if f < p {
            lo = mid;
        } else {
            hi_t = mid;
        }
    }
    Ok(0.5 * (lo + hi_t))
}

/// Density of the confirmation time plus `z >= 1` extra block
/// confirmations: the base density convolved with an Erlang(`z`, 1)
/// waiting time.
///
/// # Examples
///
/// ```
/// use cl_analytics::{density_with_extra_conf, ClParams};
///
/// let p = ClParams::with_extra_conf(1.0, 0.4, 2).unwrap();
/// let v = density_with_extra_conf(3.0, &p).unwrap();
/// assert!(v > 0.0 && v.is_finite());
/// ```
pub fn density_with_extra_conf(t: f64, params: &ClParams) -> Result<f64, ClError> {
    check_time(t)?;
    let z = params.z();
    if z == 0 {
        return Err(ClError::Param(
            "extra-confirmation density requires extra_conf >= 1; use density_ty".into(),
        ));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let base = ClParams::new(params.y(), params.c())?;
    let eval = DensityEvaluator::new(base.y(), base.c(), t)?;
    let edges = panel_edges(base.y(), base.c(), t);
    let ln_fact_z = ln_factorial(z as u64 - 1);
    let erlang = |v: f64| -> f64 {
        if v <= 0.0 {
            return if z == 1 && v == 0.0 { 1.0 } else { 0.0 };
        }
        (-v + (z as f64 - 1.0) * v.ln() - ln_fact_z).exp()
    };
    let mut acc = 0.0;
    for pair in edges.windows(2) {
        acc += gl16(pair[0], pair[1], |u| eval.density(u) * erlang(t - u));
    }
    Ok(acc.max(0.0))
}
