use std::collections::VecDeque;

use rand_distr::{Distribution, Exp};

use crate::error::{param, SimError};
use crate::seed::Seed;
use crate::weights::WeightDist;

/// Default bound on events per sample path before a run is declared
/// runaway.
pub const DEFAULT_EVENT_CAP: u64 = 100_000_000;

/// Parameters of the batch-service queue.
///
/// Transactions arrive as a Poisson process of rate `nu`, each carrying
/// an i.i.d. weight; blocks arrive as an independent Poisson process of
/// rate `lambda` and serve waiting transactions in arrival order up to a
/// weight capacity `k` per block, never splitting a transaction. The
/// queue starts with `m` transactions already waiting.
#[derive(Debug, Clone, PartialEq)]
pub struct BsqParams {
    nu: f64,
    lambda: f64,
    k: f64,
    m: u64,
    weights: WeightDist,
}

impl BsqParams {
    /// Validates rates, capacity and stability `nu E[X] < k lambda`.
    ///
    /// For weight distributions with bounded support the bound must fit
    /// inside one block; the exponential family is accepted as is, since
    /// its rare oversized draws surface as infeasibility errors at
    /// simulation time instead.
    pub fn new(
        nu: f64,
        lambda: f64,
        k: f64,
        m: u64,
        weights: WeightDist,
    ) -> Result<Self, SimError> {
        if !nu.is_finite() || nu <= 0.0 {
            return param(format!("arrival rate must be positive, got {nu}"));
        }
        if !lambda.is_finite() || lambda <= 0.0 {
            return param(format!("block rate must be positive, got {lambda}"));
        }
        if !k.is_finite() || k <= 0.0 {
            return param(format!("block capacity must be positive, got {k}"));
        }
        weights.validate()?;
        if nu * weights.mean() >= k * lambda {
            return Err(SimError::Unstable(format!(
                "offered load {} >= service capacity {}",
                nu * weights.mean(),
                k * lambda
            )));
        }
        if let Some(hi) = weights.upper_bound() {
            if hi >= k {
                return Err(SimError::Infeasible(format!(
                    "maximal weight {hi} cannot fit in capacity {k}"
                )));
            }
        }
        Ok(Self {
            nu,
            lambda,
            k,
            m,
            weights,
        })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
    pub fn lambda(&self) -> f64 {
        self.lambda
    }
    pub fn k(&self) -> f64 {
        self.k
    }
    pub fn m(&self) -> u64 {
        self.m
    }
    pub fn weights(&self) -> &WeightDist {
        &self.weights
    }
}

/// One first-passage observation of a queueing or level process.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HittingSample {
    /// Physical time of the clearing block.
    pub time: f64,
    /// Number of blocks mined up to and including the clearing one.
    pub blocks: u64,
    /// Capacity-normalized overshoot below zero at absorption.
    pub undershoot: f64,
}

/// Simulates one batch-service queue path to first emptiness, with the
/// default event cap.
pub fn simulate_bsq_hit(params: &BsqParams, seed: Seed) -> Result<HittingSample, SimError> {
    simulate_bsq_hit_with_cap(params, seed, DEFAULT_EVENT_CAP)
}

/// Simulates one path to first emptiness with an explicit event cap.
///
/// The path tracks both the weight view (total pending weight) and the
/// count view (number of pending transactions) of the queue. They empty
/// at the same block by construction; the incremental weight accounting
/// is asserted against emptiness on every path to catch bookkeeping
/// drift.
///
/// At the clearing block the remaining capacity is completed with
/// notional future draws under the block-fill rule, and the weight they
/// pack, normalized by capacity, is returned as the undershoot: it is
/// the amount by which the block overshoots the queue, matching the
/// level-process undershoot in the scaling limits.
pub fn simulate_bsq_hit_with_cap(
    params: &BsqParams,
    seed: Seed,
    event_cap: u64,
) -> Result<HittingSample, SimError> {
    let mut rng = seed.rng();
    let arrival_gap = Exp::new(params.nu).expect("validated rate");
    let block_gap = Exp::new(params.lambda).expect("validated rate");

    let mut queue: VecDeque<f64> = VecDeque::with_capacity(params.m as usize);
    let mut pending_weight = 0.0;
    for _ in 0..params.m {
        let w = params.weights.sample(&mut rng);
        queue.push_back(w);
        pending_weight += w;
    }
    let mut inflow = pending_weight;

    let mut t;
    let mut blocks = 0u64;
    let mut events = 0u64;
    let mut next_arrival = arrival_gap.sample(&mut rng);
    let mut next_block = block_gap.sample(&mut rng);

    loop {
        events += 1;
        if events > event_cap {
            return Err(SimError::Runaway { events });
        }
        if next_arrival < next_block {
            t = next_arrival;
            let w = params.weights.sample(&mut rng);
            queue.push_back(w);
            pending_weight += w;
            inflow += w;
            next_arrival = t + arrival_gap.sample(&mut rng);
        } else {
            t = next_block;
            blocks += 1;
            let mut remaining = params.k;
            while let Some(&w) = queue.front() {
                if w > remaining {
                    if w >= params.k {
                        return Err(SimError::Infeasible(format!(
                            "weight {w} cannot fit in capacity {}",
                            params.k
                        )));
                    }
                    break;
                }
                remaining -= w;
                pending_weight -= w;
                queue.pop_front();
            }
            if queue.is_empty() {
                // Count view and weight view hit together; the running
                // weight must have drained to zero up to rounding drift.
                let drift_tol = 1e-12 * inflow.max(params.k) * (events as f64).sqrt().max(1.0);
                assert!(
                    pending_weight.abs() <= drift_tol,
                    "weight view out of step with count view: residual {pending_weight}"
                );
                let mut phantom = 0.0;
                loop {
                    let draw = params.weights.sample(&mut rng);
                    if draw > remaining {
                        break;
                    }
                    remaining -= draw;
                    phantom += draw;
                }
                return Ok(HittingSample {
                    time: t,
                    blocks,
                    undershoot: phantom / params.k,
                });
            }
            next_block = t + block_gap.sample(&mut rng);
        }
    }
}
