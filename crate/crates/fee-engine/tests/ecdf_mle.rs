//! Empirical-distribution and drift-recovery checks: documented step
//! values, a Glivenko-Cantelli bound against the analytic surrogate,
//! and maximum-likelihood recovery of known drifts.

use cl_analytics::{ig_cdf, ig_params, ClParams};
use fee_engine::{estimate_c_mle, EmpiricalCdf, FeeError};
use rand_distr::{Distribution, InverseGaussian};
use stochastic_sim::Seed;

/// Exact confirmation-time samples of the surrogate for a `(y, c)`
/// state, undershoot correction included.
fn surrogate_draws(y: f64, c: f64, n: usize, seed: Seed) -> Vec<f64> {
    let params = ClParams::new(y, c).unwrap();
    let ig = ig_params(&params).unwrap();
    let dist = InverseGaussian::new(ig.mean, ig.shape).unwrap();
    let mut rng = seed.rng();
    (0..n).map(|_| dist.sample(&mut rng)).collect()
}

#[test]
fn step_values_match_the_counting_definition() {
    let cdf = EmpiricalCdf::new(&[1.0, 2.0, 3.0]).unwrap();
    assert!((cdf.value(2.0) - 2.0 / 3.0).abs() < 1e-15);
    assert_eq!(cdf.value(0.5), 0.0);
    assert_eq!(cdf.value(3.0), 1.0);
    assert_eq!(cdf.value(10.0), 1.0);
    assert!((cdf.tail(2.0) - 1.0 / 3.0).abs() < 1e-15);
}

#[test]
fn censored_windows_weigh_the_denominator_only() {
    let cdf = EmpiricalCdf::with_censored(&[1.0, 2.0], 2).unwrap();
    assert_eq!(cdf.total(), 4);
    assert_eq!(cdf.value(2.0), 0.5);
    assert_eq!(cdf.tail(100.0), 0.5);

    let saturated = EmpiricalCdf::with_censored(&[], 3).unwrap();
    assert_eq!(saturated.value(1e9), 0.0);
    assert_eq!(saturated.tail(1e9), 1.0);
}

#[test]
fn empty_and_non_finite_samples_are_rejected() {
    assert!(matches!(
        EmpiricalCdf::new(&[]),
        Err(FeeError::Param(_))
    ));
    assert!(matches!(
        EmpiricalCdf::new(&[1.0, f64::NAN]),
        Err(FeeError::Param(_))
    ));
}

/// Glivenko-Cantelli at a fixed sample size: the empirical CDF of 1e5
/// surrogate draws stays within 0.01 of the analytic CDF everywhere.
/// The supremum over a step function is attained at its jumps.
#[test]
fn empirical_cdf_tracks_the_surrogate() {
    let draws = surrogate_draws(2.0, 0.6, 100_000, Seed::new(51, 0));
    let cdf = EmpiricalCdf::new(&draws).unwrap();
    let ig = ig_params(&ClParams::new(2.0, 0.6).unwrap()).unwrap();
    let n = cdf.total() as f64;
    let mut sup = 0.0f64;
    for (i, t) in cdf.observed().iter().enumerate() {
        let exact = ig_cdf(*t, &ig).unwrap();
        let above = ((i + 1) as f64 / n - exact).abs();
        let below = (i as f64 / n - exact).abs();
        sup = sup.max(above).max(below);
    }
    assert!(sup <= 0.01, "sup distance {sup} exceeds 0.01");
}

#[test]
fn mle_recovers_a_moderate_drift() {
    let draws = surrogate_draws(2.0, 0.6, 10_000, Seed::new(52, 0));
    let c = estimate_c_mle(&draws).unwrap();
    assert!((c - 0.6).abs() <= 0.03, "estimate {c} misses 0.6 by more than 0.03");
}

#[test]
fn mle_recovers_a_heavy_drift() {
    let draws = surrogate_draws(2.0, 0.9, 10_000, Seed::new(53, 0));
    let c = estimate_c_mle(&draws).unwrap();
    assert!((c - 0.9).abs() <= 0.02, "estimate {c} misses 0.9 by more than 0.02");
}

/// Consistency: the median absolute estimation error over 20 seeds
/// shrinks as the sample size grows tenfold twice.
#[test]
fn mle_error_shrinks_with_sample_size() {
    let median_error = |n: usize| {
        let mut errors: Vec<f64> = (0..20)
            .map(|stream| {
                let draws = surrogate_draws(2.0, 0.6, n, Seed::new(54, stream));
                (estimate_c_mle(&draws).unwrap() - 0.6).abs()
            })
            .collect();
        errors.sort_by(f64::total_cmp);
        errors[errors.len() / 2]
    };
    let errs: Vec<f64> = [100, 1_000, 10_000].iter().map(|n| median_error(*n)).collect();
    assert!(
        errs[0] > errs[1] && errs[1] > errs[2],
        "median errors {errs:?} do not decrease over n = 100, 1000, 10000"
    );
}

#[test]
fn degenerate_samples_are_rejected() {
    assert!(matches!(
        estimate_c_mle(&[3.0, 3.0]),
        Err(FeeError::Estimation(_))
    ));
    assert!(matches!(estimate_c_mle(&[3.0]), Err(FeeError::Param(_))));
    assert!(matches!(
        estimate_c_mle(&[1.0, -2.0, 3.0]),
        Err(FeeError::Param(_))
    ));
    // Nearly equal samples push the implied drift below zero: reported
    // as an estimation failure, not clamped into (0, 1).
    assert!(matches!(
        estimate_c_mle(&[0.999, 1.0, 1.001]),
        Err(FeeError::Estimation(_))
    ));
}
