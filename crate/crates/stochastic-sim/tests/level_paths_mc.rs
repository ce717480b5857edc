use cl_analytics::{expected_undershoot, ig_cdf, mean_time, tail_blocks, ClParams, IgParams};
use stochastic_sim::{
    ks_statistic, simulate_bm_hit, simulate_cl_hit, simulate_dm1_busy_period, Seed, SimError,
};

fn mean_and_se(samples: &[f64]) -> (f64, f64) {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

#[test]
fn cl_paths_match_analytic_mean_and_wald_identity() {
    let params = ClParams::new(2.5, 0.3).unwrap();
    let reps = 100_000u64;
    let mut times = Vec::with_capacity(reps as usize);
    let mut diffs = Vec::with_capacity(reps as usize);
    for stream in 0..reps {
        let hit = simulate_cl_hit(&params, Seed::new(31, stream)).unwrap();
        assert!(hit.blocks >= 3, "block count below floor(y)+1");
        times.push(hit.time);
        diffs.push(hit.blocks as f64 - hit.time);
    }
    let (mean_t, se_t) = mean_and_se(&times);
    let target = mean_time(&params).unwrap();
    assert!(
        (mean_t - target).abs() <= 3.0 * se_t,
        "sample mean {mean_t} vs analytic {target} (se {se_t})"
    );
    // Blocks and time share their expectation; the paired difference
    // isolates it with a much smaller standard error.
    let (mean_d, se_d) = mean_and_se(&diffs);
    assert!(
        mean_d.abs() <= 3.0 * se_d,
        "mean(blocks) - mean(time) = {mean_d} (se {se_d})"
    );
}

#[test]
fn cl_undershoot_matches_analytic_expectation() {
    for (idx, &(y, c)) in [(0.5, 0.3), (2.5, 0.6), (4.5, 0.9)].iter().enumerate() {
        let params = ClParams::new(y, c).unwrap();
        let reps = if c > 0.8 { 40_000u64 } else { 100_000u64 };
        let mut under = Vec::with_capacity(reps as usize);
        for stream in 0..reps {
            let hit = simulate_cl_hit(&params, Seed::new(32 + idx as u64, stream)).unwrap();
            assert!((0.0..=1.0).contains(&hit.undershoot));
            under.push(hit.undershoot);
        }
        let (mean_u, se_u) = mean_and_se(&under);
        let target = expected_undershoot(y, c).unwrap();
        assert!(
            (mean_u - target).abs() <= 3.0 * se_u,
            "undershoot {mean_u} vs analytic {target} at (y={y}, c={c}, se {se_u})"
        );
    }
}

#[test]
fn cl_rejects_extra_confirmations() {
    let params = ClParams::with_extra_conf(1.0, 0.5, 2).unwrap();
    assert!(matches!(
        simulate_cl_hit(&params, Seed::new(33, 0)),
        Err(SimError::Param(_))
    ));
}

#[test]
fn dual_queue_busy_period_reproduces_block_count_tail() {
    let (y, c) = (0.7, 0.5);
    let params = ClParams::new(y, c).unwrap();
    let reps = 100_000u64;
    let mut counts = vec![0u64; 11];
    for stream in 0..reps {
        let n = simulate_dm1_busy_period(y, c, Seed::new(34, stream)).unwrap();
        assert!(n >= 1);
        for (thresh, slot) in counts.iter_mut().enumerate() {
            if n > thresh as u64 {
                *slot += 1;
            }
        }
    }
    for n in 1..=10u64 {
        let p = tail_blocks(n, &params).unwrap();
        let phat = counts[n as usize] as f64 / reps as f64;
        let se = (p * (1.0 - p) / reps as f64).sqrt();
        assert!(
            (phat - p).abs() <= 3.0 * se.max(1e-9),
            "P[N > {n}]: empirical {phat} vs analytic {p} (se {se})"
        );
    }
}

#[test]
fn dual_queue_concentrates_when_services_are_instant() {
    // With service mean 0.01 the initial work 0.7 is cleared almost
    // surely before the second deterministic arrival.
    for stream in 0..1_000 {
        let n = simulate_dm1_busy_period(0.7, 0.01, Seed::new(35, stream)).unwrap();
        assert_eq!(n, 1);
    }
}

#[test]
fn brownian_hit_matches_inverse_gaussian_law() {
    let (y, drift, variance) = (2.0, -0.5, 1.0);
    let reps = 100_000u64;
    let mut times = Vec::with_capacity(reps as usize);
    for stream in 0..reps {
        times.push(simulate_bm_hit(y, drift, variance, Seed::new(36, stream)).unwrap());
    }
    let (mean_t, se_t) = mean_and_se(&times);
    assert!(
        (mean_t - y / drift.abs()).abs() <= 3.0 * se_t,
        "sample mean {mean_t} vs y/|drift| = 4 (se {se_t})"
    );

    times.sort_by(f64::total_cmp);
    let ig = IgParams::new(y / drift.abs(), y * y / variance).unwrap();
    let ks = ks_statistic(&times, |t| ig_cdf(t, &ig).unwrap()).unwrap();
    assert!(ks <= 0.01, "KS against the analytic law: {ks}");
}

#[test]
fn brownian_hit_is_reproducible() {
    let a = simulate_bm_hit(1.0, -1.0, 2.0, Seed::new(37, 4)).unwrap();
    let b = simulate_bm_hit(1.0, -1.0, 2.0, Seed::new(37, 4)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn brownian_hit_rejects_bad_parameters() {
    assert!(simulate_bm_hit(0.0, -1.0, 1.0, Seed::new(38, 0)).is_err());
    assert!(simulate_bm_hit(1.0, 0.5, 1.0, Seed::new(38, 0)).is_err());
    assert!(simulate_bm_hit(1.0, -1.0, 0.0, Seed::new(38, 0)).is_err());
}
