//! Single sampling plans for time-truncated life tests.
//!
//! A plan `(n, c, t/σ₀)` puts `n` items on test until time `t` and accepts
//! the lot when at most `c` of them fail. Every probability here is a
//! binomial tail in the per-item failure probability
//! `p = F(t; σ, λ)`, which only depends on `t/σ₀` and the quality ratio
//! `σ/σ₀`.

mod binomial;
pub mod published;
pub mod tables;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trdist::{check_lambda, TRParams};

pub use binomial::{binom_cdf, DIRECT_SUM_LIMIT};

/// Linear search for `n` stops here and switches to galloping + bisection.
const LINEAR_SEARCH_LIMIT: u32 = 10_000;

/// Consumer-side inputs for plan design. The consumer's risk is `1 - p_star`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DesignQuery {
    pub p_star: f64,
    pub c: u32,
    pub t_ratio: f64,
    pub lambda: f64,
}

impl DesignQuery {
    pub fn new(p_star: f64, c: u32, t_ratio: f64, lambda: f64) -> Result<Self> {
        check_probability("p_star", p_star)?;
        check_ratio("t_ratio", t_ratio)?;
        check_lambda(lambda)?;
        Ok(Self {
            p_star,
            c,
            t_ratio,
            lambda,
        })
    }

    pub fn consumer_risk(&self) -> f64 {
        1.0 - self.p_star
    }
}

/// A plan `(n, c, t/σ₀)`, optionally tagged with the confidence it was
/// designed for.
///
/// Plans with `n ≤ c` are accepted by the constructor but can never reject
/// a lot; [`min_sample_size`] never produces one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplingPlan {
    pub n: u32,
    pub c: u32,
    pub t_ratio: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p_star: Option<f64>,
}

impl SamplingPlan {
    pub fn new(n: u32, c: u32, t_ratio: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::domain("n", 0.0, "sample size must be >= 1"));
        }
        check_ratio("t_ratio", t_ratio)?;
        Ok(Self {
            n,
            c,
            t_ratio,
            p_star: None,
        })
    }

    pub fn with_p_star(mut self, p_star: f64) -> Result<Self> {
        check_probability("p_star", p_star)?;
        self.p_star = Some(p_star);
        Ok(self)
    }

    pub fn is_degenerate(&self) -> bool {
        self.n <= self.c
    }

    /// Absolute test duration for a specified scale `sigma0`.
    pub fn test_time(&self, sigma0: f64) -> f64 {
        self.t_ratio * sigma0
    }
}

/// One point of the operating characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OCPoint {
    pub scale_ratio: f64,
    pub p_fail: f64,
    pub prob_accept: f64,
}

/// Probability that one item fails before `t` when the true scale is
/// `scale_ratio · σ₀`.
pub fn failure_prob(t_ratio: f64, scale_ratio: f64, lambda: f64) -> Result<f64> {
    check_ratio("t_ratio", t_ratio)?;
    check_ratio("scale_ratio", scale_ratio)?;
    let dist = TRParams::new(scale_ratio, lambda)?;
    Ok(dist.cdf_unchecked(t_ratio))
}

/// Smallest `n ≥ c + 1` whose acceptance probability at `σ = σ₀` does not
/// exceed the consumer's risk.
pub fn min_sample_size(query: &DesignQuery) -> Result<SamplingPlan> {
    let q = DesignQuery::new(query.p_star, query.c, query.t_ratio, query.lambda)?;
    let p = failure_prob(q.t_ratio, 1.0, q.lambda)?;
    let beta = q.consumer_risk();
    let unsatisfiable = Error::Unsatisfiable {
        p_star: q.p_star,
        c: q.c,
        p_fail: p,
    };
    if p <= 0.0 {
        return Err(unsatisfiable);
    }
    let c = q.c;
    let meets = |n: u32| binomial::binom_cdf_unchecked(c, n, p) <= beta;

    let start = c.checked_add(1).ok_or(unsatisfiable.clone())?;
    let linear_end = start.saturating_add(LINEAR_SEARCH_LIMIT);
    let n = match (start..linear_end).find(|&n| meets(n)) {
        Some(n) => n,
        None => {
            let mut lo = linear_end - 1;
            let mut hi = linear_end;
            while !meets(hi) {
                lo = hi;
                hi = hi.checked_mul(2).ok_or(unsatisfiable.clone())?;
            }
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if meets(mid) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            hi
        }
    };
    SamplingPlan::new(n, c, q.t_ratio)?.with_p_star(q.p_star)
}

/// Lot acceptance probability when the true scale is `scale_ratio · σ₀`.
pub fn oc_value(plan: &SamplingPlan, scale_ratio: f64, lambda: f64) -> Result<f64> {
    Ok(oc_point(plan, scale_ratio, lambda)?.prob_accept)
}

pub fn oc_point(plan: &SamplingPlan, scale_ratio: f64, lambda: f64) -> Result<OCPoint> {
    let p_fail = failure_prob(plan.t_ratio, scale_ratio, lambda)?;
    let prob_accept = binomial::binom_cdf_unchecked(plan.c.min(plan.n), plan.n, p_fail);
    Ok(OCPoint {
        scale_ratio,
        p_fail,
        prob_accept,
    })
}

/// Probability of rejecting a lot whose true scale is `scale_ratio · σ₀`.
pub fn producer_risk(plan: &SamplingPlan, scale_ratio: f64, lambda: f64) -> Result<f64> {
    Ok(1.0 - oc_value(plan, scale_ratio, lambda)?)
}

/// Smallest quality ratio `σ/σ₀` on the 0.01 grid at which the producer's
/// risk is at most `delta`. Returns 1.00 when the plan already meets `delta`
/// at the specified quality.
pub fn min_scale_ratio(plan: &SamplingPlan, lambda: f64, delta: f64) -> Result<f64> {
    check_probability("delta", delta)?;
    let risk = |r: f64| producer_risk(plan, r, lambda);
    if risk(1.0)? <= delta {
        return Ok(1.0);
    }

    let mut lo = 1.0;
    let mut hi = 2.0;
    while risk(hi)? > delta {
        lo = hi;
        hi *= 2.0;
        if hi > 1e12 {
            return Err(Error::domain(
                "delta",
                delta,
                "producer's risk cannot be brought this low",
            ));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if risk(mid)? > delta {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-12 * hi {
            break;
        }
    }

    // Snap up to the 0.01 grid, then make sure the grid point is the
    // smallest one that satisfies the constraint.
    let mut hundredths = (hi * 100.0 - 1e-9).ceil().max(100.0) as u64;
    while risk(hundredths as f64 / 100.0)? > delta {
        hundredths += 1;
    }
    while hundredths > 100 && risk((hundredths - 1) as f64 / 100.0)? <= delta {
        hundredths -= 1;
    }
    Ok(hundredths as f64 / 100.0)
}

fn check_probability(name: &'static str, value: f64) -> Result<()> {
    if !(value > 0.0 && value < 1.0) {
        return Err(Error::domain(
            name,
            value,
            "must lie strictly inside (0, 1)",
        ));
    }
    Ok(())
}

fn check_ratio(name: &'static str, value: f64) -> Result<()> {
    if !(value.is_finite() && value > 0.0) {
        return Err(Error::domain(name, value, "must be finite and > 0"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn design(p_star: f64, c: u32, t: f64) -> u32 {
        min_sample_size(&DesignQuery::new(p_star, c, t, 0.5).unwrap())
            .unwrap()
            .n
    }

    #[test]
    fn failure_probability() {
        let e: f64 = (-1.257f64 * 1.257 / 2.0).exp();
        let want = (1.0 - e) * (1.0 + 0.5 * e);
        assert!((failure_prob(1.257, 1.0, 0.5).unwrap() - want).abs() < 1e-15);
        assert!((want - 0.670_101).abs() < 1e-6);
        assert!((failure_prob(1.257, 2.0, 0.5).unwrap() - 0.2528).abs() < 1e-4);
        for &(t, r) in &[(0.3f64, 1.0f64), (1.0, 3.0), (4.0, 0.5)] {
            let rayleigh = 1.0 - (-(t * t) / (2.0 * r * r)).exp();
            assert!((failure_prob(t, r, 0.0).unwrap() - rayleigh).abs() < 1e-15);
        }
        assert!(failure_prob(0.0, 1.0, 0.5).is_err());
        assert!(failure_prob(1.0, -1.0, 0.5).is_err());
        assert!(failure_prob(1.0, 1.0, 1.5).is_err());
    }

    #[test]
    fn design_examples() {
        assert_eq!(design(0.95, 2, 1.257), 7);
        assert_eq!(design(0.95, 2, 0.942), 11);
        assert_eq!(design(0.75, 0, 0.628), 5);
        assert_eq!(design(0.95, 1, 0.628), 17);
        // Every unit fails: one more than the acceptance number suffices.
        assert_eq!(design(0.99, 4, 60.0), 5);
    }

    #[test]
    fn design_rejects_bad_queries() {
        assert!(DesignQuery::new(1.0, 2, 1.0, 0.5).is_err());
        assert!(DesignQuery::new(0.9, 2, 0.0, 0.5).is_err());
        let q = DesignQuery {
            p_star: 0.9,
            c: 1,
            t_ratio: 1e-200,
            lambda: 0.5,
        };
        assert!(matches!(
            min_sample_size(&q),
            Err(Error::Unsatisfiable { .. })
        ));
    }

    #[test]
    fn large_designs_use_galloping() {
        // p ≈ 5e-5 pushes n well past the linear search window.
        let q = DesignQuery::new(0.99, 3, 0.01, 0.5).unwrap();
        let plan = min_sample_size(&q).unwrap();
        let p = failure_prob(0.01, 1.0, 0.5).unwrap();
        assert!(plan.n > LINEAR_SEARCH_LIMIT);
        assert!(binom_cdf(3, plan.n, p).unwrap() <= 0.01);
        assert!(binom_cdf(3, plan.n - 1, p).unwrap() > 0.01);
    }

    #[test]
    fn oc_and_risk_examples() {
        let plan = SamplingPlan::new(7, 2, 1.257).unwrap();
        assert!((oc_value(&plan, 4.0, 0.5).unwrap() - 0.989_881_2).abs() < 1e-7);
        assert!((oc_value(&plan, 2.0, 0.5).unwrap() - 0.750_622_3).abs() < 1e-7);
        assert!((producer_risk(&plan, 4.0, 0.5).unwrap() - 0.010_118_79).abs() < 1e-8);
        let plan12 = SamplingPlan::new(12, 2, 0.628).unwrap();
        assert!((producer_risk(&plan12, 2.0, 0.5).unwrap() - 0.048_490_4).abs() < 1e-7);

        let never_reject = SamplingPlan::new(3, 3, 2.0).unwrap();
        assert!(never_reject.is_degenerate());
        assert_eq!(oc_value(&never_reject, 0.1, 0.5).unwrap(), 1.0);
    }

    #[test]
    fn min_ratio_examples() {
        let plan = SamplingPlan::new(7, 2, 1.257).unwrap();
        let r = min_scale_ratio(&plan, 0.5, 0.05).unwrap();
        assert_eq!(r, 2.93);
        assert!(producer_risk(&plan, r, 0.5).unwrap() <= 0.05);
        assert!(producer_risk(&plan, r - 0.01, 0.5).unwrap() > 0.05);

        let plan = SamplingPlan::new(12, 2, 0.628).unwrap();
        assert_eq!(min_scale_ratio(&plan, 0.5, 0.05).unwrap(), 1.99);

        // Already satisfied at the specified quality.
        let lenient = SamplingPlan::new(5, 4, 0.2).unwrap();
        assert_eq!(min_scale_ratio(&lenient, 0.5, 0.05).unwrap(), 1.0);
        assert!(min_scale_ratio(&plan, 0.5, 0.0).is_err());
    }

    #[test]
    fn test_time_scales_with_sigma0() {
        let plan = SamplingPlan::new(11, 2, 0.942).unwrap();
        assert!((plan.test_time(935.0) - 880.77).abs() < 1e-9);
    }
}
