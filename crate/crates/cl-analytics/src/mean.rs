//! Expected confirmation time.
//!
//! Three exact routes cover the parameter space. For levels at or below
//! one block the mean has a closed form driven by the tail decay rate
//! `rho`. For integer levels a finite alternating sum gives the mean
//! directly, numerically reliable while `y/c` stays moderate. Everywhere
//! else the grid recursion of [`crate::sweep`] evaluates the mean on a
//! fine grid, and a query interpolates linearly.

use crate::error::ClError;
use crate::params::{ClParams, MAX_DRIFT};
use crate::rho::solve_rho;
use crate::sweep::{SweepKind, SweepTable, GRID_STEP};

/// Largest `y/c` for which the integer closed form is evaluated in
/// double precision; beyond it the alternating sum loses digits to
/// cancellation and the grid recursion takes over.
const CLOSED_FORM_MAX_RATIO: f64 = 21.0;

/// Expected confirmation time `E[T_y]` on the grid `y = k * grid_step`,
/// built by the interval recursion.
///
/// The table stores the boundary convention `E[T_0] = 0`: a transaction
/// facing no backlog confirms in the first block, whose arrival is not
/// counted as waiting at level zero. Values are nondecreasing in `y`.
///
/// # Examples
///
/// ```
/// use cl_analytics::MeanTable;
///
/// let table = MeanTable::build(0.6, 3.0).unwrap();
/// assert_eq!(table.value(0.0).unwrap(), 0.0);
/// assert!((table.value(1.0).unwrap() - 3.5404).abs() < 5e-4);
/// ```
#[derive(Debug, Clone)]
pub struct MeanTable {
    /// Spacing of the level grid.
    pub grid_step: f64,
    table: SweepTable,
}

impl MeanTable {
    /// Builds the table for levels in `[0, y_max]`.
    pub fn build(c: f64, y_max: f64) -> Result<Self, ClError> {
        let table = SweepTable::build(c, y_max, SweepKind::Mean)?;
        Ok(Self {
            grid_step: GRID_STEP,
            table,
        })
    }

    /// Mean at level `y`, interpolated linearly between grid points.
    pub fn value(&self, y: f64) -> Result<f64, ClError> {
        if !y.is_finite() || y < 0.0 || y > self.table.y_max() {
            return Err(ClError::Param(format!(
                "level {y} outside the tabulated range [0, {}]",
                self.table.y_max()
            )));
        }
        if y == 0.0 {
            return Ok(0.0);
        }
        Ok(self.table.value(y))
    }

    /// Values on the grid over `[0, y_max]`, with the `y = 0` entry set to
    /// the boundary convention `0`.
    pub fn values(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for (m, row) in self.table.intervals.iter().enumerate() {
            let skip = usize::from(m > 0);
            out.extend_from_slice(&row[skip..]);
        }
        out[0] = 0.0;
        out
    }
}

/// Closed-form mean for integer starting levels `y >= 1`.
///
/// ```text
/// E[T_y] = y + 1 + sum_{i=0}^{y} e^{i/c} S_i,
/// S_i = (1/(rho c)) z^j / j! - sum_{k=0}^{j} z^k / k!,   z = -i/c, j = y - i
/// ```
///
/// The alternating terms cancel heavily as `y/c` grows; the routine
/// rejects `y/c > 21`, past which double precision no longer recovers the
/// result. Within that range it agrees with the grid recursion to better
/// than 1e-5.
///
/// # Examples
///
/// ```
/// use cl_analytics::mean_time_closed_form;
///
/// let mean = mean_time_closed_form(1, 0.6).unwrap();
/// assert!((mean - 3.5404).abs() < 1e-3);
/// ```
pub fn mean_time_closed_form(y: u32, c: f64) -> Result<f64, ClError> {
    if y == 0 {
        return Err(ClError::Param(
            "closed-form mean requires an integer level >= 1".into(),
        ));
    }
    if !c.is_finite() || c <= 0.0 || c >= MAX_DRIFT {
        return Err(ClError::Param(format!(
            "closed-form mean requires drift in (0, {MAX_DRIFT}), got {c}"
        )));
    }
    if y as f64 / c > CLOSED_FORM_MAX_RATIO {
        return Err(ClError::Numeric(format!(
            "closed-form mean unstable for y/c = {} > {CLOSED_FORM_MAX_RATIO}; \
             use the grid recursion",
            y as f64 / c
        )));
    }

    let rho = solve_rho(c)?;
    let mut total = y as f64 + 1.0;
    for i in 0..=y {
        let z = -(i as f64) / c;
        let j = y - i;
        let mut power = 1.0;
        let mut partial = 1.0;
        for k in 1..=j {
            power *= z / k as f64;
            partial += power;
        }
        let s = power / (rho * c) - partial;
        total += (i as f64 / c).exp() * s;
    }
    Ok(total)
}

/// Expected confirmation time `E[T_y]`, plus one block arrival per extra
/// confirmation.
///
/// Dispatches to the route that is exact and stable for the parameters:
/// the boundary convention at `y = 0`, the sub-one-block closed form
/// `1 + e^{y/c - rho}/(c rho)` for `y` in `(0, 1]`, the integer closed
/// form while it holds full precision, and the grid recursion otherwise.
///
/// # Examples
///
/// ```
/// use cl_analytics::{mean_time, ClParams};
///
/// let p = ClParams::new(1.0, 0.6).unwrap();
/// assert!((mean_time(&p).unwrap() - 3.5404).abs() < 1e-3);
///
/// let shifted = ClParams::with_extra_conf(1.0, 0.6, 2).unwrap();
/// assert!((mean_time(&shifted).unwrap() - mean_time(&p).unwrap() - 2.0).abs() < 1e-12);
/// ```
pub fn mean_time(params: &ClParams) -> Result<f64, ClError> {
    let y = params.y();
    let c = params.c();
    let shift = params.z() as f64;

    if y == 0.0 {
        return Ok(shift);
    }
    if y <= 1.0 {
        let rho = solve_rho(c)?;
        return Ok(1.0 + (y / c - rho).exp() / (c * rho) + shift);
    }
    if y.fract() == 0.0 && y / c <= CLOSED_FORM_MAX_RATIO && y <= u32::MAX as f64 {
        return Ok(mean_time_closed_form(y as u32, c)? + shift);
    }
    let table = MeanTable::build(c, y)?;
    Ok(table.value(y)? + shift)
}
