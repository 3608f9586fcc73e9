//! Simulation of the lot-sentencing rule, for checking the analytic
//! acceptance probability end to end.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plan::{oc_value, SamplingPlan};
use crate::trdist::TRParams;

pub const DEFAULT_TRIALS: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub trials: u64,
    pub acceptances: u64,
    pub estimate: f64,
    pub std_error: f64,
    /// Acceptance probability from the binomial model.
    pub analytic: f64,
    /// Deviation from `analytic` in units of the binomial standard error
    /// under the analytic value. 0 when a degenerate analytic value (0 or 1)
    /// is matched exactly, infinite when it is not.
    pub z_score: f64,
}

impl SimulationReport {
    fn new(trials: u64, acceptances: u64, analytic: f64) -> Self {
        let estimate = acceptances as f64 / trials as f64;
        let std_error = (estimate * (1.0 - estimate) / trials as f64).sqrt();
        let diff = estimate - analytic;
        let null_error = (analytic * (1.0 - analytic) / trials as f64).sqrt();
        let z_score = if diff == 0.0 { 0.0 } else { diff / null_error };
        Self {
            trials,
            acceptances,
            estimate,
            std_error,
            analytic,
            z_score,
        }
    }
}

/// Run `trials` independent life tests of `plan` on lots whose lifetimes
/// follow `true_params`, truncated at `t = t_ratio · sigma0`.
///
/// Trial `i` draws from its own ChaCha stream `i` under `seed`, so the report
/// does not depend on how trials are scheduled across threads.
pub fn simulate_plan(
    plan: &SamplingPlan,
    true_params: &TRParams,
    sigma0: f64,
    trials: u64,
    seed: u64,
) -> Result<SimulationReport> {
    if trials < 1 {
        return Err(Error::domain("trials", 0.0, "must be >= 1"));
    }
    if !(sigma0.is_finite() && sigma0 > 0.0) {
        return Err(Error::domain(
            "sigma0",
            sigma0,
            "must be finite and > 0",
        ));
    }
    let plan = SamplingPlan::new(plan.n, plan.c, plan.t_ratio)?;
    let analytic = oc_value(
        &plan,
        true_params.sigma() / sigma0,
        true_params.lambda(),
    )?;
    let truncation = plan.test_time(sigma0);
    let n = plan.n as usize;

    let acceptances = (0..trials)
        .into_par_iter()
        .map_init(
            || (ChaCha8Rng::seed_from_u64(seed), Vec::with_capacity(n)),
            |(rng, lifetimes), trial| {
                rng.set_stream(trial);
                rng.set_word_pos(0);
                lifetimes.clear();
                lifetimes.extend(true_params.sample_with(rng, n));
                let failures = lifetimes.iter().filter(|&&x| x <= truncation).count();
                u64::from(failures <= plan.c as usize)
            },
        )
        .sum();

    Ok(SimulationReport::new(trials, acceptances, analytic))
}
