use proptest::prelude::*;
use proptest::strategy::ValueTree;

use trplan::plan::tables::{emit_table, PlanSource, TableKind, P_STAR_GRID, T_RATIO_GRID};
use trplan::plan::{
    binom_cdf, failure_prob, min_sample_size, oc_value, producer_risk, DesignQuery, SamplingPlan,
};
use trplan::TRParams;

mod common;
use common::{exact_binom_cdf, simpson, ROUNDING};

#[test]
fn cdf_is_monotone_on_grid() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let strategy = (0.1f64..10.0, -1.0f64..=1.0);
    for _ in 0..100 {
        let (sigma, lambda) = strategy.new_tree(&mut runner).unwrap().current();
        let p = TRParams::new(sigma, lambda).unwrap();
        let mut prev = 0.0;
        for i in 0..1000 {
            let x = sigma * 6.0 * i as f64 / 999.0;
            let f = p.cdf(x).unwrap();
            assert!(f >= prev, "sigma={sigma} lambda={lambda} x={x}");
            prev = f;
        }
        assert!(prev > 0.999_999);
    }
}

#[test]
fn raw_moments_match_quadrature() {
    for &lambda in &[-1.0, -0.5, 0.0, 0.5, 1.0] {
        let p = TRParams::new(1.3, lambda).unwrap();
        for r in 1..=4u32 {
            let integrand = |x: f64| x.powi(r as i32) * p.pdf(x).unwrap();
            let numeric = simpson(&integrand, 0.0, 1.3 * 40.0, 1e-13);
            let closed = p.raw_moment(r).unwrap();
            assert!(
                ((closed - numeric) / numeric).abs() < 1e-8,
                "lambda={lambda} r={r}: {closed} vs {numeric}"
            );
        }
    }
}

#[test]
fn density_integrates_to_one() {
    for &lambda in &[-1.0, -0.3, 0.0, 0.7, 1.0] {
        let p = TRParams::new(2.0, lambda).unwrap();
        let total = simpson(&|x| p.pdf(x).unwrap(), 0.0, 80.0, 1e-13);
        assert!((total - 1.0).abs() < 1e-10);
    }
}

#[test]
fn rayleigh_reduction() {
    let p = TRParams::new(1.7, 0.0).unwrap();
    for &x in &[0.2, 1.0, 2.5, 5.0] {
        let z: f64 = x / 1.7;
        assert!((p.pdf(x).unwrap() - z / 1.7 * (-z * z / 2.0).exp()).abs() < 1e-15);
        assert!((p.cdf(x).unwrap() - (1.0 - (-z * z / 2.0).exp())).abs() < 1e-15);
    }
    assert!((p.mean() - 1.7 * (std::f64::consts::PI / 2.0).sqrt()).abs() < 1e-14);
}

#[test]
fn binomial_matches_exact_rational_sum() {
    let ps = [1e-6, 0.01, 0.1, 0.252_435_933, 0.5, 0.67, 0.9, 0.999];
    for n in 1..=30u32 {
        for c in 0..=n {
            for &p in &ps {
                let got = binom_cdf(c, n, p).unwrap();
                let want = exact_binom_cdf(c, n, p);
                assert!(
                    (got - want).abs() < 1e-12,
                    "c={c} n={n} p={p}: {got} vs {want}"
                );
            }
        }
    }
}

#[test]
fn every_sample_size_is_minimal() {
    let table = emit_table(TableKind::SampleSize, 0.5, PlanSource::Recomputed).unwrap();
    for (p_star, row) in table.rows() {
        for (&t, &n) in T_RATIO_GRID.iter().zip(&row.values) {
            let n = n as u32;
            let p = failure_prob(t, 1.0, 0.5).unwrap();
            let beta = 1.0 - p_star;
            assert!(binom_cdf(row.c, n, p).unwrap() <= beta);
            if n > row.c + 1 {
                assert!(binom_cdf(row.c, n - 1, p).unwrap() > beta);
            }
        }
    }
}

#[test]
fn sample_size_monotone_over_grid() {
    for &p_star in &P_STAR_GRID {
        for c in 0..=10u32 {
            let ns: Vec<u32> = T_RATIO_GRID
                .iter()
                .map(|&t| {
                    min_sample_size(&DesignQuery::new(p_star, c, t, 0.5).unwrap())
                        .unwrap()
                        .n
                })
                .collect();
            assert!(
                ns.windows(2).all(|w| w[1] <= w[0]),
                "P*={p_star} c={c}: {ns:?}"
            );
        }
        for &t in &T_RATIO_GRID {
            let ns: Vec<u32> = (0..=10)
                .map(|c| {
                    min_sample_size(&DesignQuery::new(p_star, c, t, 0.5).unwrap())
                        .unwrap()
                        .n
                })
                .collect();
            assert!(
                ns.windows(2).all(|w| w[1] >= w[0]),
                "P*={p_star} t={t}: {ns:?}"
            );
        }
    }
}

proptest! {
    #[test]
    fn density_is_derivative_of_cdf(sigma in 0.2f64..20.0, lambda in -1.0f64..=1.0, u in 0.005f64..0.995) {
        let p = TRParams::new(sigma, lambda).unwrap();
        let x = p.quantile(u).unwrap();
        let h = 1e-6 * sigma;
        let fd = (p.cdf(x + h).unwrap() - p.cdf(x - h).unwrap()) / (2.0 * h);
        let pdf = p.pdf(x).unwrap();
        prop_assert!(((fd - pdf) / pdf).abs() < 1e-5, "fd={} pdf={}", fd, pdf);
    }

    #[test]
    fn quantile_round_trips(sigma in 0.01f64..1e4, lambda in -1.0f64..=1.0, u in 1e-6f64..0.999_999) {
        let p = TRParams::new(sigma, lambda).unwrap();
        let x = p.quantile(u).unwrap();
        prop_assert!((p.cdf(x).unwrap() - u).abs() < 1e-10);
        let back = p.quantile(p.cdf(x).unwrap()).unwrap();
        prop_assert!(((back - x) / x).abs() < 1e-10);
    }

    #[test]
    fn mean_inverts(sigma in 1e-3f64..1e5, lambda in -1.0f64..=1.0) {
        let p = TRParams::new(sigma, lambda).unwrap();
        let back = trplan::trdist::sigma_from_mu(p.mean(), lambda).unwrap();
        prop_assert!(((back - sigma) / sigma).abs() < 1e-12);
        prop_assert!(((p.raw_moment(1).unwrap() - p.mean()) / p.mean()).abs() < 1e-12);
    }

    #[test]
    fn failure_prob_monotone(t in 0.05f64..5.0, r in 0.2f64..12.0, lambda in -1.0f64..=1.0) {
        let base = failure_prob(t, r, lambda).unwrap();
        prop_assert!(failure_prob(t, r * 1.1, lambda).unwrap() <= base);
        prop_assert!(failure_prob(t * 1.1, r, lambda).unwrap() >= base);
    }

    #[test]
    fn oc_and_risk_monotone_and_complementary(
        n in 1u32..60, c_frac in 0.0f64..1.0, t in 0.1f64..5.0, r in 0.5f64..12.0, lambda in -1.0f64..=1.0,
    ) {
        let c = ((n - 1) as f64 * c_frac) as u32;
        let plan = SamplingPlan::new(n, c, t).unwrap();
        let pa = oc_value(&plan, r, lambda).unwrap();
        let pr = producer_risk(&plan, r, lambda).unwrap();
        prop_assert_eq!(pa + pr, 1.0);
        prop_assert!((0.0..=1.0).contains(&pa));
        prop_assert!(oc_value(&plan, r * 1.2, lambda).unwrap() >= pa - ROUNDING);
        prop_assert!(producer_risk(&plan, r * 1.2, lambda).unwrap() <= pr + ROUNDING);
    }

    #[test]
    fn binomial_monotone(n in 1u32..200, c_frac in 0.0f64..1.0, p in 0.0f64..=1.0) {
        let c = ((n - 1) as f64 * c_frac) as u32;
        let here = binom_cdf(c, n, p).unwrap();
        prop_assert!(binom_cdf(c, n + 1, p).unwrap() <= here + ROUNDING);
        prop_assert!(binom_cdf(c, n, (p + 0.01).min(1.0)).unwrap() <= here + ROUNDING);
    }

    #[test]
    fn designed_plans_meet_constraint(p_star in 0.5f64..0.999, c in 0u32..15, t in 0.2f64..5.0, lambda in -1.0f64..=1.0) {
        let q = DesignQuery::new(p_star, c, t, lambda).unwrap();
        let plan = min_sample_size(&q).unwrap();
        prop_assert!(plan.n > plan.c);
        let p = failure_prob(t, 1.0, lambda).unwrap();
        prop_assert!(binom_cdf(c, plan.n, p).unwrap() <= 1.0 - p_star);
        if plan.n > c + 1 {
            prop_assert!(binom_cdf(c, plan.n - 1, p).unwrap() > 1.0 - p_star);
        }
    }
}
