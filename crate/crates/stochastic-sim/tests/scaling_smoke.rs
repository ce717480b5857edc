use stochastic_sim::{
    diffusion_scaling_experiment, fluid_scaling_experiment, BsqParams, SampleView, Seed, SimError,
    WeightDist,
};

fn base() -> BsqParams {
    BsqParams::new(0.7, 1.0, 1.0, 0, WeightDist::Exponential { mean: 1.0 }).unwrap()
}

#[test]
fn fluid_report_is_well_formed_and_deterministic() {
    let seed = Seed::new(51, 0);
    let report = fluid_scaling_experiment(&base(), 2.0, &[5, 40], 200, seed).unwrap();
    assert_eq!(report.rows.len(), 4);
    for pair in report.rows.chunks(2) {
        assert_eq!(pair[0].view, SampleView::Weight);
        assert_eq!(pair[1].view, SampleView::Count);
        assert_eq!(pair[0].ks, pair[1].ks);
        assert!((0.0..=1.0).contains(&pair[0].ks));
        assert!(pair[0].mean > 0.0);
        assert!(pair[0].stderr > 0.0);
        assert_eq!(pair[0].reps, 200);
    }
    let again = fluid_scaling_experiment(&base(), 2.0, &[5, 40], 200, seed).unwrap();
    assert_eq!(report, again);
}

#[test]
fn fluid_fit_improves_with_scale() {
    let report = fluid_scaling_experiment(&base(), 2.0, &[5, 80], 400, Seed::new(52, 0)).unwrap();
    assert!(
        report.rows[2].ks < report.rows[0].ks,
        "KS at n=80 ({}) should beat n=5 ({})",
        report.rows[2].ks,
        report.rows[0].ks
    );
}

#[test]
fn fluid_zero_reps_yields_empty_report() {
    let report = fluid_scaling_experiment(&base(), 2.0, &[5, 40], 0, Seed::new(53, 0)).unwrap();
    assert!(report.rows.is_empty());
}

#[test]
fn fluid_rejects_bad_arguments() {
    assert!(matches!(
        fluid_scaling_experiment(&base(), -1.0, &[5], 10, Seed::new(54, 0)),
        Err(SimError::Param(_))
    ));
    assert!(matches!(
        fluid_scaling_experiment(&base(), 2.0, &[0], 10, Seed::new(54, 0)),
        Err(SimError::Param(_))
    ));
}

#[test]
fn diffusion_report_is_well_formed_and_deterministic() {
    let seed = Seed::new(55, 0);
    let report = diffusion_scaling_experiment(&base(), 1.0, 1.0, &[4, 16], 200, seed).unwrap();
    assert_eq!(report.rows.len(), 4);
    for pair in report.rows.chunks(2) {
        assert_eq!(pair[0].ks, pair[1].ks);
        assert!((0.0..=1.0).contains(&pair[0].ks));
        assert!(pair[0].mean > 0.0);
    }
    let again = diffusion_scaling_experiment(&base(), 1.0, 1.0, &[4, 16], 200, seed).unwrap();
    assert_eq!(report, again);
}

#[test]
fn diffusion_zero_reps_yields_empty_report() {
    let report =
        diffusion_scaling_experiment(&base(), 1.0, 1.0, &[4, 16], 0, Seed::new(56, 0)).unwrap();
    assert!(report.rows.is_empty());
}

#[test]
fn diffusion_rejects_bad_arguments() {
    assert!(matches!(
        diffusion_scaling_experiment(&base(), 0.0, 1.0, &[4], 10, Seed::new(57, 0)),
        Err(SimError::Param(_))
    ));
    assert!(matches!(
        diffusion_scaling_experiment(&base(), 1.0, -1.0, &[4], 10, Seed::new(57, 0)),
        Err(SimError::Param(_))
    ));
    // sqrt(n) must exceed sigma / lambda for the near-critical
    // schedule to keep a positive arrival rate.
    assert!(matches!(
        diffusion_scaling_experiment(&base(), 1.0, 5.0, &[16], 10, Seed::new(57, 0)),
        Err(SimError::Param(_))
    ));
}

#[test]
fn csv_rendering_has_the_agreed_header() {
    let report = fluid_scaling_experiment(&base(), 1.0, &[5], 10, Seed::new(58, 0)).unwrap();
    let csv = report.to_csv_string();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("view,n,reps,ks,mean,stderr"));
    let first = lines.next().unwrap();
    assert!(first.starts_with("weight,5,10,"));
    let second = lines.next().unwrap();
    assert!(second.starts_with("count,5,10,"));
}
