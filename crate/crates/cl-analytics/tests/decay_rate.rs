use cl_analytics::solve_rho;
use proptest::prelude::*;

#[test]
fn known_roots() {
    let cases = [
        (0.3, 3.197059146346),
        (0.5, 1.593624260040),
        (0.6, 1.126261222635),
        (0.9, 0.214555741271),
    ];
    for (c, expected) in cases {
        let rho = solve_rho(c).unwrap();
        assert!(
            (rho - expected).abs() <= 1e-9,
            "rho({c}) = {rho}, expected {expected}"
        );
    }
}

#[test]
fn small_drift_extends_bracket() {
    // Root grows like 1/c; for c = 0.015 it sits near 66, beyond the
    // initial bracket top of 50.
    let rho = solve_rho(0.015).unwrap();
    assert!(rho > 50.0);
    assert!((0.015 * rho - 1.0 + (-rho).exp()).abs() <= 1e-12);
}

#[test]
fn rejects_out_of_range_drift() {
    assert!(solve_rho(0.0).is_err());
    assert!(solve_rho(1.0).is_err());
    assert!(solve_rho(-0.2).is_err());
    assert!(solve_rho(f64::NAN).is_err());
}

proptest! {
    #[test]
    fn residual_within_tolerance(c in 0.01f64..0.99) {
        let rho = solve_rho(c).unwrap();
        prop_assert!(rho > 0.0);
        prop_assert!((c * rho - 1.0 + (-rho).exp()).abs() <= 1e-12);
        // Root identity used by the closed-form means.
        prop_assert!((1.0 - c * rho - (-rho).exp()).abs() <= 1e-12);
    }
}
