use crate::error::{param, ClError};

/// Upper bound on the drift accepted by [`ClParams`].
///
/// The model is stable for any drift below one, but several routines
/// (grid recursions, tail integrations) lose their accuracy guarantees as
/// the drift approaches criticality, so construction rejects `c >= 0.99`.
pub const MAX_DRIFT: f64 = 0.99;

/// Parameters of the confirmation-time model.
///
/// The queue level seen by a transaction evolves as `Y(t) = y + c t - N(t)`
/// with `N` a unit-rate Poisson process counting blocks (time is measured
/// in expected block intervals, level in block capacities). `y` is the
/// backlog ahead of the transaction at submission, `c` is the drift: the
/// arrival rate of competing work as a fraction of capacity. The
/// confirmation time is the first passage `T_y = inf{t > 0 : Y(t) < 0}`.
///
/// `extra_conf` adds that many additional block confirmations on top of
/// first passage; each extra confirmation waits one more block arrival.
///
/// # Examples
///
/// ```
/// use cl_analytics::ClParams;
///
/// let p = ClParams::new(1.5, 0.6).unwrap();
/// assert_eq!(p.y(), 1.5);
/// assert!(ClParams::new(1.5, 0.99).is_err());
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClParams {
    y: f64,
    c: f64,
    z: u32,
}

impl ClParams {
    /// Builds parameters with no extra confirmations.
    pub fn new(y: f64, c: f64) -> Result<Self, ClError> {
        Self::with_extra_conf(y, c, 0)
    }

    /// Builds parameters requiring `z` extra confirmations after first
    /// passage.
    pub fn with_extra_conf(y: f64, c: f64, z: u32) -> Result<Self, ClError> {
        if !y.is_finite() || y < 0.0 {
            return param(format!("initial level y must be finite and >= 0, got {y}"));
        }
        if !c.is_finite() || c <= 0.0 || c >= MAX_DRIFT {
            return param(format!(
                "drift c must lie in (0, {MAX_DRIFT}) for reliable evaluation, got {c}"
            ));
        }
        Ok(Self { y, c, z })
    }

    /// Initial queue level ahead of the transaction, in block capacities.
    #[inline]
    pub fn y(&self) -> f64 {
        self.y
    }

    /// Drift: competing arrival rate as a fraction of block capacity.
    #[inline]
    pub fn c(&self) -> f64 {
        self.c
    }

    /// Number of extra confirmations required after first passage.
    #[inline]
    pub fn z(&self) -> u32 {
        self.z
    }

    pub(crate) fn require_base(&self, op: &str) -> Result<(), ClError> {
        if self.z != 0 {
            return param(format!(
                "{op} is defined for the base first-passage time; extra_conf must be 0, got {}",
                self.z
            ));
        }
        Ok(())
    }
}
