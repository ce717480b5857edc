use cl_analytics::{
    cdf_ty, cdf_ty_many, default_horizon, density_t0, density_ty, density_with_extra_conf,
    mean_time, quantile_ty, ClParams,
};
use proptest::prelude::*;

/// Trapezoid integral of `f` over `[0, hi]` with step `h`.
fn trapezoid(hi: f64, h: f64, f: impl Fn(f64) -> f64) -> f64 {
    let n = (hi / h).ceil() as usize;
    let mut acc = 0.5 * (f(0.0) + f(hi));
    for k in 1..n {
        acc += f(k as f64 * h);
    }
    acc * h
}

#[test]
fn zero_level_spot_values() {
    // Below the first lattice point the density is a bare exponential.
    let v = density_t0(0.5, 0.4).unwrap();
    assert!((v - (-0.5f64).exp()).abs() <= 1e-15);

    // c t = 1.2: fractional part 0.2, g = 1.
    let v = density_t0(3.0, 0.4).unwrap();
    let exact = 0.2 / 1.2 * (-3.0f64).exp() * 3.0;
    assert!((v - exact).abs() <= 1e-15);

    // Sawtooth zero at integer c t.
    assert_eq!(density_t0(2.5, 0.4).unwrap(), 0.0);
}

#[test]
fn zero_backlog_matches_zero_level_density() {
    let p = ClParams::new(0.0, 0.7).unwrap();
    for t in [0.0, 0.3, 1.7, 4.2, 9.9] {
        let a = density_ty(t, &p).unwrap();
        let b = density_t0(t, 0.7).unwrap();
        assert!((a - b).abs() <= 1e-15);
    }
}

#[test]
fn distribution_mean_consistency() {
    // E[T] = integral of the survival function, which is continuous
    // where the density jumps; the time-weighted tail decays slower
    // than the mass, so integrate well past the default horizon.
    let p = ClParams::new(1.0, 0.6).unwrap();
    let ts: Vec<f64> = (0..=20_000).map(|k| k as f64 * 0.01).collect();
    let cdf = cdf_ty_many(&ts, &p).unwrap();
    let mut m = 0.0;
    for pair in cdf.windows(2) {
        m += 0.01 * (1.0 - 0.5 * (pair[0] + pair[1]));
    }
    let exact = mean_time(&p).unwrap();
    assert!(
        (m - exact).abs() <= 1e-4,
        "integral mean {m} vs exact {exact}"
    );
}

#[test]
fn normalization_over_parameter_grid() {
    for ci in 2..=9 {
        let c = ci as f64 / 10.0;
        for yi in 0..=13 {
            let y = yi as f64 * 0.5;
            let p = ClParams::new(y, c).unwrap();
            let hi = default_horizon(&p).unwrap();
            let mass = cdf_ty(hi, &p).unwrap();
            assert!(
                mass >= 0.999,
                "mass {mass} below 0.999 at y = {y}, c = {c}, horizon {hi}"
            );
            assert!(mass <= 1.0 + 1e-9);
        }
    }
}

#[test]
fn finite_far_into_the_tail() {
    let p = ClParams::new(3.0, 0.9).unwrap();
    let v = density_ty(1e4, &p).unwrap();
    assert!(v.is_finite());
    assert!(v < 1e-8);

    let edge = ClParams::new(3.0, 0.989).unwrap();
    assert!(density_ty(1e4, &edge).unwrap().is_finite());
    assert!(ClParams::new(3.0, 0.99).is_err());
}

#[test]
fn quantile_roundtrip() {
    let p = ClParams::new(1.5, 0.6).unwrap();
    for q in [0.1, 0.5, 0.9, 0.99] {
        let t = quantile_ty(q, &p).unwrap();
        assert!((cdf_ty(t, &p).unwrap() - q).abs() <= 1e-6);
    }

    let heavy = ClParams::new(2.5, 0.9).unwrap();
    let t = quantile_ty(0.999, &heavy).unwrap();
    assert!((cdf_ty(t, &heavy).unwrap() - 0.999).abs() <= 1e-6);

    // A level deep enough in the tail to force the bracket to extend
    // beyond the default horizon.
    let tight = ClParams::new(0.0, 0.7).unwrap();
    let t = quantile_ty(0.999_999_9, &tight).unwrap();
    assert!((cdf_ty(t, &tight).unwrap() - 0.999_999_9).abs() <= 1e-6);
}

#[test]
fn batched_cdf_matches_pointwise() {
    let p = ClParams::new(2.2, 0.5).unwrap();
    let ts = [0.0, 0.9, 2.4, 2.4, 3.1, 7.7, 15.0];
    let batch = cdf_ty_many(&ts, &p).unwrap();
    for (&t, &f) in ts.iter().zip(&batch) {
        assert!((f - cdf_ty(t, &p).unwrap()).abs() <= 1e-9);
    }
    assert!(cdf_ty_many(&[2.0, 1.0], &p).is_err());
    assert!(cdf_ty_many(&[], &p).unwrap().is_empty());
}

#[test]
fn extra_confirmations_shift_the_mean() {
    let base = ClParams::new(1.0, 0.4).unwrap();
    let shifted = ClParams::with_extra_conf(1.0, 0.4, 2).unwrap();
    let hi = default_horizon(&shifted).unwrap();

    let mass = trapezoid(hi, 1e-3, |t| density_with_extra_conf(t, &shifted).unwrap());
    assert!((mass - 1.0).abs() <= 1e-3, "mass {mass}");

    let mean = trapezoid(hi, 1e-3, |t| {
        t * density_with_extra_conf(t, &shifted).unwrap()
    });
    let exact = mean_time(&base).unwrap() + 2.0;
    assert!((mean - exact).abs() <= 2e-3, "mean {mean} vs {exact}");
}

#[test]
fn extra_confirmation_argument_checks() {
    let base = ClParams::new(1.0, 0.4).unwrap();
    let shifted = ClParams::with_extra_conf(1.0, 0.4, 1).unwrap();
    assert!(density_with_extra_conf(1.0, &base).is_err());
    assert!(density_ty(1.0, &shifted).is_err());
    assert!(cdf_ty(1.0, &shifted).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sawtooth_zero_at_integer_lattice(idx in 0usize..5, n in 1u32..40) {
        // Dyadic drifts make the lattice points exactly representable,
        // so the zero of the sawtooth is hit rather than straddled.
        let c = [0.25, 0.375, 0.5, 0.625, 0.75][idx];
        let t = n as f64 / c;
        let v = density_t0(t, c).unwrap();
        prop_assert!(v.abs() <= 1e-12);
    }

    #[test]
    fn density_nonnegative(y in 0.0f64..6.5, c in 0.2f64..0.9, t in 0.0f64..40.0) {
        let p = ClParams::new(y, c).unwrap();
        let v = density_ty(t, &p).unwrap();
        prop_assert!(v >= 0.0 && v.is_finite());
    }

    #[test]
    fn cdf_monotone(y in 0.0f64..4.0, c in 0.2f64..0.9, t in 0.1f64..30.0, dt in 0.1f64..5.0) {
        let p = ClParams::new(y, c).unwrap();
        let a = cdf_ty(t, &p).unwrap();
        let b = cdf_ty(t + dt, &p).unwrap();
        prop_assert!(b + 1e-12 >= a);
        prop_assert!((0.0..=1.0).contains(&a));
    }
}
