//! Decay-rate equation of the confirmation-time tail.
//!
//! For drift `c` in `(0, 1)` the positive root `rho` of
//!
//! ```text
//! c rho - 1 + exp(-rho) = 0
//! ```
//!
//! governs the exponential tail of the confirmation time and enters the
//! closed-form means. The root is unique: the left side is convex in
//! `rho`, negative near zero and eventually positive.

use crate::error::ClError;

#[inline]
fn residual(c: f64, rho: f64) -> f64 {
    c * rho - 1.0 + (-rho).exp()
}

/// Solves `c rho - 1 + e^{-rho} = 0` for the positive root.
///
/// Bisection on `[1e-12, hi]` brackets the root (with `hi` doubled from 50
/// until the residual changes sign, which small drifts require since the
/// root grows like `1/c`), and a few Newton steps polish it. The returned
/// root satisfies `|c rho - 1 + e^{-rho}| <= 1e-12`.
///
/// # Examples
///
/// ```
/// use cl_analytics::solve_rho;
///
/// let rho = solve_rho(0.6).unwrap();
/// assert!((0.6 * rho - 1.0 + (-rho).exp()).abs() <= 1e-12);
/// ```
pub fn solve_rho(c: f64) -> Result<f64, ClError> {
    if !c.is_finite() || c <= 0.0 || c >= 1.0 {
        return Err(ClError::Param(format!(
            "decay-rate equation requires drift in (0, 1), got {c}"
        )));
    }

    let mut lo = 1e-12;
    let mut hi = 50.0;
    while residual(c, hi) <= 0.0 {
        hi *= 2.0;
        if hi > 1e9 {
            return Err(ClError::Numeric(format!(
                "failed to bracket the decay rate for c = {c}"
            )));
        }
    }

    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if residual(c, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-14 * hi {
            break;
        }
    }

    let mut rho = 0.5 * (lo + hi);
    for _ in 0..6 {
        let f = residual(c, rho);
        let df = c - (-rho).exp();
        if df.abs() < 1e-300 {
            break;
        }
        let next = rho - f / df;
        if next.is_finite() && next > 0.0 {
            rho = next;
        } else {
            break;
        }
    }

    if residual(c, rho).abs() > 1e-12 {
        return Err(ClError::Numeric(format!(
            "decay-rate residual above tolerance for c = {c}"
        )));
    }
    Ok(rho)
}
