use rand::Rng;

use crate::error::{param, SimError};
use crate::weights::WeightDist;

/// Outcome of filling one block from a transaction stream.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockFill {
    /// Number of transactions packed, including a carried-in one.
    pub count: u64,
    /// Capacity left unused, in `[0, capacity)`.
    pub slack: f64,
    /// The draw that overflowed and must lead the next block.
    pub carry_out: f64,
}

/// Packs one block of the given capacity from an i.i.d. weight stream.
///
/// A transaction carried over from the previous block (the one that
/// overflowed it) is packed first; fresh draws follow until the next
/// draw would exceed the remaining capacity. A draw equal to the
/// remaining capacity still fits. The overflowing draw is returned as
/// the carry for the next block, so consecutive fills consume a single
/// uninterrupted stream.
///
/// # Examples
///
/// ```
/// use stochastic_sim::{sample_block_fill, Seed, WeightDist};
///
/// let unit = WeightDist::Deterministic { weight: 1.0 };
/// let mut rng = Seed::new(1, 0).rng();
/// let fill = sample_block_fill(3.5, None, &unit, &mut rng).unwrap();
/// assert_eq!(fill.count, 3);
/// assert_eq!(fill.slack, 0.5);
/// assert_eq!(fill.carry_out, 1.0);
/// ```
pub fn sample_block_fill<R: Rng + ?Sized>(
    capacity: f64,
    carry_in: Option<f64>,
    weights: &WeightDist,
    rng: &mut R,
) -> Result<BlockFill, SimError> {
    if !capacity.is_finite() || capacity <= 0.0 {
        return param(format!("capacity must be positive, got {capacity}"));
    }
    weights.validate()?;

    let mut remaining = capacity;
    let mut count = 0u64;
    if let Some(carry) = carry_in {
        if !carry.is_finite() || carry <= 0.0 {
            return param(format!("carried weight must be positive, got {carry}"));
        }
        if carry >= capacity {
            return Err(SimError::Infeasible(format!(
                "carried weight {carry} cannot fit in capacity {capacity}"
            )));
        }
        remaining -= carry;
        count += 1;
    }

    loop {
        let draw = weights.sample(rng);
        if draw > remaining {
            return Ok(BlockFill {
                count,
                slack: remaining,
                carry_out: draw,
            });
        }
        remaining -= draw;
        count += 1;
    }
}
