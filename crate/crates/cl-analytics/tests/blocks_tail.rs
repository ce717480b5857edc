use cl_analytics::{mean_time, solve_rho, tail_blocks, ClParams};
use proptest::prelude::*;

#[test]
fn exact_small_cases() {
    // From a zero backlog, surviving n blocks means the Poisson process
    // of service opportunities stays behind schedule; the first two
    // probabilities reduce to elementary expressions at c = 0.4.
    let p = ClParams::new(0.0, 0.4).unwrap();
    let t1 = tail_blocks(1, &p).unwrap();
    assert!((t1 - (-2.5f64).exp()).abs() <= 1e-15);

    let t2 = tail_blocks(2, &p).unwrap();
    let exact = (-5.0f64).exp() * 3.5;
    assert!((t2 - exact).abs() <= 1e-15);
}

#[test]
fn certain_blocks_below_backlog() {
    let p = ClParams::new(3.7, 0.5).unwrap();
    for n in 1..=3 {
        assert_eq!(tail_blocks(n, &p).unwrap(), 1.0);
    }
    assert!(tail_blocks(4, &p).unwrap() < 1.0);
    assert!(tail_blocks(0, &p).is_err());
}

#[test]
fn tail_sum_reproduces_mean() {
    // E[N_y] = 1 + sum_{n>=1} P[N_y > n], and one block arrival takes
    // one expected time unit, so the sum must match the mean time.
    for (y, c) in [(0.0, 0.4), (1.5, 0.6), (3.2, 0.5)] {
        let p = ClParams::new(y, c).unwrap();
        let mut sum = 1.0;
        for n in 1..10_000 {
            let t = tail_blocks(n, &p).unwrap();
            sum += t;
            if t < 1e-12 {
                break;
            }
        }
        // The block-count sum sees the continuous limit at y = 0, not
        // the boundary convention, so take the closed form there.
        let mean = if y == 0.0 {
            let rho = solve_rho(c).unwrap();
            1.0 + (-rho as f64).exp() / (c * rho)
        } else {
            mean_time(&p).unwrap()
        };
        assert!(
            (sum - mean).abs() <= 1e-3,
            "tail sum {sum} vs mean {mean} at y = {y}, c = {c}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn monotone_in_block_count(y in 0.0f64..5.0, c in 0.2f64..0.9, n in 1u64..30) {
        let p = ClParams::new(y, c).unwrap();
        let a = tail_blocks(n, &p).unwrap();
        let b = tail_blocks(n + 1, &p).unwrap();
        prop_assert!((0.0..=1.0).contains(&a));
        prop_assert!(b <= a + 1e-15);
    }
}
