//! Expected undershoot below zero at confirmation.
//!
//! The level does not in general hit zero exactly: the fatal block
//! overshoots, leaving `S_y = -Y(T_y)` in `[0, 1]`. Its expectation
//! satisfies the same interval recursion as the mean (see
//! [`crate::sweep`]); on the bottom interval the closed form
//! `E[S_y] = 1 - y - c + e^{-(1-y)/c} (c + E[S_1])` seeds the sweep.
//!
//! As the starting level grows the undershoot forgets `y` and converges
//! to a limit `s(c)`; the limit feeds the inverse-Gaussian approximation
//! of the confirmation time, which replaces the absorbed level `y` by the
//! effective overshoot-corrected level `y + s(c)`.

use crate::error::ClError;
use crate::params::MAX_DRIFT;
use crate::rho::solve_rho;
use crate::sweep::{SweepKind, SweepTable};

fn check_c(c: f64) -> Result<(), ClError> {
    if !c.is_finite() || c <= 0.0 || c >= MAX_DRIFT {
        return Err(ClError::Param(format!(
            "undershoot requires drift in (0, {MAX_DRIFT}), got {c}"
        )));
    }
    Ok(())
}

/// Expected undershoot `E[S_y]` for the exact starting level `y`.
///
/// Always lies in `[0, 1]`. It is linked to the mean confirmation time by
/// the stopping identity `E[S_y] = (1 - c) E[T_y] - y`.
///
/// # Examples
///
/// ```
/// use cl_analytics::expected_undershoot;
///
/// let s = expected_undershoot(0.0, 0.05).unwrap();
/// assert!((s - 0.95).abs() < 1e-4);
/// ```
pub fn expected_undershoot(y: f64, c: f64) -> Result<f64, ClError> {
    check_c(c)?;
    if !y.is_finite() || y < 0.0 {
        return Err(ClError::Param(format!(
            "undershoot requires a level >= 0, got {y}"
        )));
    }
    let table = SweepTable::build(c, y.max(1.0), SweepKind::Undershoot)?;
    Ok(table.value(y))
}

/// Limit `s(c)` of the expected undershoot as the starting level grows.
///
/// The undershoot mixes at the exponential rate `rho` of the
/// confirmation-time tail, so the value at `y* = ceil(30 / rho) + 3`
/// matches the limit to well below 1e-10 and is returned as the limit.
///
/// # Examples
///
/// ```
/// use cl_analytics::limiting_undershoot;
///
/// let s = limiting_undershoot(0.6).unwrap();
/// assert!((s - 0.3621).abs() < 1e-3);
/// ```
pub fn limiting_undershoot(c: f64) -> Result<f64, ClError> {
    check_c(c)?;
    let rho = solve_rho(c)?;
    let y_star = (30.0 / rho).ceil() + 3.0;
    let table = SweepTable::build(c, y_star, SweepKind::Undershoot)?;
    Ok(table.value(y_star))
}
