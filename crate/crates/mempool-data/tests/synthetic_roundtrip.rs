//! End-to-end checks on the synthetic generator: serialize, reparse,
//! aggregate, estimate, extract, and compare against the analytic mean.

use cl_analytics::{mean_time, ClParams};
use mempool_data::{
    bucket_series, extract_validation_sample, parse_snapshots, synth_trace, write_snapshots_csv,
    BucketSeries, MempoolSnapshot, UnitScale, SYNTH_TARGET_PHI,
};
use stochastic_sim::Seed;

const DRIFT: f64 = 0.6;
const START_LEVEL: f64 = 1.0;

/// Two days of one-minute snapshots under the default unit scale.
fn two_day_trace(seed: Seed) -> Vec<MempoolSnapshot> {
    let scale = UnitScale::default();
    let params = ClParams::new(START_LEVEL, DRIFT).unwrap();
    let spacing = scale.minutes_to_blocks(1.0);
    let horizon = scale.minutes_to_blocks(2.0 * 24.0 * 60.0);
    synth_trace(&params, spacing, horizon, seed, &scale).unwrap()
}

fn target_series(snapshots: &[MempoolSnapshot]) -> BucketSeries {
    bucket_series(snapshots, SYNTH_TARGET_PHI, &UnitScale::default()).unwrap()
}

#[test]
fn generator_is_deterministic_and_nonnegative() {
    let a = two_day_trace(Seed::new(11, 0));
    let b = two_day_trace(Seed::new(11, 0));
    assert_eq!(a.len(), b.len());
    for (left, right) in a.iter().zip(&b) {
        assert_eq!(left.timestamp, right.timestamp);
        assert_eq!(left.weights, right.weights);
        assert!(left.weights.iter().all(|w| *w >= 0.0));
    }
    let other = two_day_trace(Seed::new(11, 1));
    assert!(a.iter().zip(&other).any(|(l, r)| l.weights != r.weights));
}

#[test]
fn csv_round_trip_preserves_the_series() {
    let snaps = two_day_trace(Seed::new(3, 0));
    let mut buf = Vec::new();
    write_snapshots_csv(&mut buf, &snaps).unwrap();
    let reread = parse_snapshots(buf.as_slice()).unwrap();
    let before = target_series(&snaps);
    let after = target_series(&reread);
    assert_eq!(before.times(), after.times());
    assert_eq!(before.values(), after.values());
}

#[test]
fn slope_estimate_recovers_the_drift() {
    for stream in 0..3 {
        let snaps = two_day_trace(Seed::new(17, stream));
        let series = target_series(&snaps);
        let sample = extract_validation_sample(&series, 0.05).unwrap();
        assert!(
            (sample.c_hat - DRIFT).abs() < 0.02,
            "stream {stream}: estimated slope {} too far from {DRIFT}",
            sample.c_hat
        );
        assert!(sample.y_hat > 0.0 && sample.y_hat < 4.0);
    }
}

#[test]
fn extracted_durations_match_the_analytic_mean() {
    let snaps = two_day_trace(Seed::new(29, 0));
    let series = target_series(&snaps);
    let sample = extract_validation_sample(&series, 0.05).unwrap();
    let n = sample.confirmations.len();
    assert!(n >= 20, "only {n} confirmations extracted");

    let durations: Vec<f64> = sample.confirmations.iter().map(|c| c.duration).collect();
    let mean = durations.iter().sum::<f64>() / n as f64;
    let var = durations.iter().map(|d| (d - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    let se = (var / n as f64).sqrt();

    let fitted = ClParams::new(sample.y_hat, sample.c_hat).unwrap();
    let model = mean_time(&fitted).unwrap();
    assert!(
        (mean - model).abs() <= 3.0 * se,
        "sample mean {mean} vs model {model} (3 SE = {})",
        3.0 * se
    );

    for pair in sample.confirmations.windows(2) {
        assert!(pair[0].start_index + pair[0].samples <= pair[1].start_index);
    }
}
