use cl_analytics::{expected_undershoot, limiting_undershoot, mean_time, ClParams};
use proptest::prelude::*;

#[test]
fn small_drift_closed_form() {
    // For c -> 0 the level barely moves between blocks, so from y = 0
    // the undershoot is 1 - c + O(e^{-1/c}).
    let s = expected_undershoot(0.0, 0.05).unwrap();
    assert!((s - 0.95).abs() <= 1e-5);
}

#[test]
fn limiting_values() {
    let cases = [(0.3, 0.401500), (0.6, 0.362107), (0.9, 0.339207)];
    for (c, expected) in cases {
        let s = limiting_undershoot(c).unwrap();
        assert!(
            (s - expected).abs() <= 5e-5,
            "limit({c}) = {s}, expected {expected}"
        );
    }
}

#[test]
fn limit_is_reached_from_moderate_levels() {
    // The undershoot forgets the starting level at the tail decay rate;
    // by y = 25 it sits on the limit for mid-range drifts.
    let c = 0.5;
    let far = expected_undershoot(25.0, c).unwrap();
    let limit = limiting_undershoot(c).unwrap();
    assert!((far - limit).abs() <= 1e-6);
}

#[test]
fn argument_checks() {
    assert!(expected_undershoot(-1.0, 0.5).is_err());
    assert!(expected_undershoot(1.0, 0.99).is_err());
    assert!(limiting_undershoot(0.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bounded_by_one_block(y in 0.0f64..6.5, c in 0.2f64..0.9) {
        let s = expected_undershoot(y, c).unwrap();
        prop_assert!((0.0..=1.0).contains(&s));
    }

    #[test]
    fn wald_identity(y in 0.01f64..6.5, c in 0.2f64..0.9) {
        // Optional stopping on Y(t) - (c - 1) t gives
        // E[S_y] = (1 - c) E[T_y] - y, linking the undershoot recursion
        // to the independently computed mean.
        let s = expected_undershoot(y, c).unwrap();
        let p = ClParams::new(y, c).unwrap();
        let mean = mean_time(&p).unwrap();
        prop_assert!(((1.0 - c) * mean - y - s).abs() <= 1e-6);
    }
}
