use proptest::prelude::*;
use qbounds::nuttall::{self, NuttallParams};
use qbounds::oracle::{oracle_marcum, oracle_nuttall};
use qbounds::toronto::{self, TorontoParams};
use qbounds::FnOrder;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(64)
}

fn half_odd() -> impl Strategy<Value = f64> {
    (0u32..4).prop_map(|k| k as f64 + 0.5)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn oracle_nuttall_decreases_in_b(
        m in 0.0f64..4.0,
        n in 0.0f64..3.0,
        a in 0.2f64..4.0,
        b0 in 0.0f64..2.0,
        step in 0.1f64..0.5,
    ) {
        let ladder: Vec<f64> = (0..5)
            .map(|i| oracle_nuttall(m, FnOrder::new(n), a, b0 + step * i as f64, 1e-12).unwrap().value)
            .collect();
        prop_assert!(ladder.windows(2).all(|w| w[1] < w[0]), "{ladder:?}");
    }

    #[test]
    fn oracle_marcum_is_a_probability(m in 1.0f64..5.0, a in 0.1f64..6.0, b in 0.0f64..8.0) {
        let q = oracle_marcum(m, a, b, 1e-12).unwrap().value;
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&q), "{q}");
        let at_zero = oracle_marcum(m, a, 0.0, 1e-12).unwrap().value;
        prop_assert!((at_zero - 1.0).abs() < 1e-11);
    }

    #[test]
    fn nuttall_series_matches_oracle(m in 0.0f64..4.0, n in 0.0f64..3.0, a in 0.2f64..3.0, b in 0.0f64..4.0) {
        let p = NuttallParams::new(m, FnOrder::new(n), a, b).unwrap();
        let series = nuttall::series_adaptive(&p, 1e-13).unwrap().value;
        let oracle = oracle_nuttall(m, p.n, a, b, 1e-13).unwrap().value / a.powf(n);
        prop_assert!((series - oracle).abs() < 1e-9 * oracle.max(1e-3));
    }

    #[test]
    fn nuttall_truncation_residual_shrinks(m in 0.0f64..4.0, n in 0.0f64..3.0, a in 0.2f64..3.0, b in 0.1f64..3.0) {
        let p = NuttallParams::new(m, FnOrder::new(n), a, b).unwrap();
        let exact = nuttall::series_adaptive(&p, 1e-14).unwrap().value;
        let resid: Vec<f64> = (5..=30)
            .map(|t| (exact - nuttall::series_truncated(&p, t).unwrap().value).abs())
            .collect();
        prop_assert!(resid.windows(2).all(|w| w[1] <= w[0] + 1e-14 * exact));
    }

    #[test]
    fn nuttall_upper_bound_dominates(m in 0.5f64..4.0, n in 0.5f64..3.0, a in 0.5f64..3.0, frac in 0.0f64..1.0) {
        let b = frac * (2.0 / 3.0) * a.min(m).min(n);
        let p = NuttallParams::new(m, FnOrder::new(n), a, b).unwrap();
        let r = nuttall::upper_bound_report(&p).unwrap();
        prop_assert!(r.regime_ok);
        prop_assert!(r.holds(1e-10), "{r:?}");
    }

    #[test]
    fn nuttall_closed_form_matches_series(big_n in 0u32..3, extra in 0u32..3, a in 0.2f64..3.0, b in 0.0f64..4.0) {
        let n = big_n as f64 + 0.5;
        let m = n + extra as f64;
        let p = NuttallParams::new(m, FnOrder::new(n), a, b).unwrap();
        let closed = nuttall::half_integer_closed(&p).unwrap();
        let series = nuttall::series_adaptive(&p, 1e-14).unwrap().value;
        prop_assert!((closed - series).abs() < 1e-9 * series.max(1e-2), "{closed} vs {series}");
    }

    #[test]
    fn toronto_increases_in_b(m in 0.0f64..4.0, n in 0.0f64..2.0, r in 0.2f64..3.0, b0 in 0.2f64..2.0) {
        prop_assume!(m - n > -1.0);
        let vals: Vec<f64> = (0..5)
            .map(|i| {
                let p = TorontoParams::new(m, FnOrder::new(n), r, b0 + 0.5 * i as f64).unwrap();
                toronto::series_adaptive(&p, 1e-14).unwrap().value
            })
            .collect();
        prop_assert!(vals.windows(2).all(|w| w[1] > w[0]), "{vals:?}");
    }

    #[test]
    fn toronto_upper_bound_dominates_and_ignores_b(m in 0.0f64..3.0, n in 0.0f64..2.0, r in 0.2f64..2.0, b in 0.5f64..6.0) {
        prop_assume!(m - n > -1.0);
        let p = TorontoParams::new(m, FnOrder::new(n), r, b).unwrap();
        let rep = toronto::upper_bound_report(&p).unwrap();
        prop_assert!(rep.holds(1e-12), "{rep:?}");
        let other = toronto::upper_bound_report(&TorontoParams { big_b: b + 1.0, ..p }).unwrap();
        prop_assert_eq!(rep.bound_value.to_bits(), other.bound_value.to_bits());
    }

    #[test]
    fn toronto_closed_form_matches_series(n in half_odd(), extra in 0u32..3, r in 0.2f64..3.0, b in 0.2f64..4.0) {
        let m = 2.0 * n + extra as f64;
        let p = TorontoParams::new(m, FnOrder::new(n), r, b).unwrap();
        let closed = toronto::closed_form_half(m, p.n, r, b).unwrap();
        let series = toronto::series_adaptive(&p, 1e-14).unwrap().value;
        prop_assert!((closed - series).abs() < 1e-8 * series.max(1e-3), "{closed} vs {series}");
    }

    #[test]
    fn toronto_marcum_identity(m in 1.0f64..4.0, r in 0.2f64..3.0, b in 0.2f64..4.0) {
        prop_assert!(toronto::marcum_residual(m, r, b).unwrap() < 1e-9);
    }
}
