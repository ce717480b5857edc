use cl_analytics::ClParams;
use rand_distr::{Distribution, Exp};
use stochastic_sim::Seed;

use crate::error::{param, DataError};
use crate::types::{MempoolSnapshot, UnitScale};

/// Bucket ladder used by the synthetic generator.
pub const SYNTH_BUCKET_BOUNDS: [f64; 3] = [1.0, 4.0, 7.0];

/// The bucket whose above-`phi` series carries the requested level
/// process.
pub const SYNTH_TARGET_PHI: f64 = 7.0;

/// Generates a synthetic snapshot trace whose top-fee series follows
/// the drift-and-jump level process of `params`.
///
/// Three fee tiers accrue weight linearly; blocks arrive at unit rate
/// in block time and remove one block size of weight from the highest
/// fees downward. Under that discipline the pending weight above any
/// tier is a level process with slope equal to the summed slopes above
/// it, reflected at zero (an emptied tier simply starts filling again,
/// as a real mempool does). The tier at [`SYNTH_TARGET_PHI`] gets the
/// slope `c` of `params` and starts at its level `y`; the two cheaper
/// tiers start empty and split half the residual capacity `1 - c`, so
/// the whole system stays stable.
///
/// Sampling every `spacing` block units over `horizon` renders
/// physical snapshots via `scale`: with the default scale and a
/// spacing of one minute, timestamps advance by 60 seconds.
pub fn synth_trace(
    params: &ClParams,
    spacing: f64,
    horizon: f64,
    seed: Seed,
    scale: &UnitScale,
) -> Result<Vec<MempoolSnapshot>, DataError> {
    if params.z() != 0 {
        return param("synthetic traces cover the base process; extra_conf must be 0".to_string());
    }
    if !spacing.is_finite() || spacing <= 0.0 {
        return param(format!("sample spacing must be positive, got {spacing}"));
    }
    if !horizon.is_finite() || horizon < spacing {
        return param(format!(
            "horizon must cover at least one spacing, got {horizon}"
        ));
    }

    let c = params.c();
    let side = 0.25 * (1.0 - c);
    let slopes = [side, side, c];
    let mut levels = [0.0, 0.0, params.y()];

    let mut rng = seed.rng();
    let gap = Exp::new(1.0).expect("unit rate");
    let mut t_now = 0.0_f64;
    let mut next_block = gap.sample(&mut rng);

    let samples = (horizon / spacing).floor() as usize;
    let mut out = Vec::with_capacity(samples + 1);
    for k in 0..=samples {
        let s = k as f64 * spacing;
        while next_block <= s {
            let dt = next_block - t_now;
            for (level, slope) in levels.iter_mut().zip(slopes) {
                *level += slope * dt;
            }
            t_now = next_block;
            let mut capacity = 1.0_f64;
            for level in levels.iter_mut().rev() {
                let taken = capacity.min(*level);
                *level -= taken;
                capacity -= taken;
                if capacity <= 0.0 {
                    break;
                }
            }
            next_block += gap.sample(&mut rng);
        }
        let dt = s - t_now;
        for (level, slope) in levels.iter_mut().zip(slopes) {
            *level += slope * dt;
        }
        t_now = s;

        out.push(MempoolSnapshot::new(
            scale.blocks_to_seconds(s),
            SYNTH_BUCKET_BOUNDS.to_vec(),
            levels.iter().map(|l| scale.blocks_to_vmb(*l)).collect(),
        )?);
    }
    Ok(out)
}
