//! Maximum-likelihood fitting of the transmuted Rayleigh model to observed
//! lifetimes, with AIC/BIC, Kolmogorov–Smirnov goodness of fit and
//! descriptive statistics.

pub mod datasets;
mod describe;
mod ks;
pub mod simplex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trdist::TRParams;

pub use describe::{describe, quantile_linear, DescriptiveStats};
pub use ks::{kolmogorov_cdf, kolmogorov_limit_sf, ks_statistic, ks_test, KsMethod, KsResult};

/// Number of free parameters in the model (σ, λ).
pub const PARAM_COUNT: u32 = 2;

/// Starting values of λ for the restarted simplex search.
const LAMBDA_STARTS: [f64; 3] = [-0.5, 0.0, 0.5];

/// Positive lifetimes, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LifetimeSample {
    values: Vec<f64>,
}

impl LifetimeSample {
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidSample(format!(
                "need at least 2 observations, got {}",
                values.len()
            )));
        }
        if let Some((i, x)) = values
            .iter()
            .enumerate()
            .find(|(_, x)| !(x.is_finite() && **x > 0.0))
        {
            return Err(Error::InvalidSample(format!(
                "observation {} is {x}; lifetimes must be finite and > 0",
                i + 1
            )));
        }
        values.sort_by(f64::total_cmp);
        Ok(Self { values })
    }

    /// Parse one observation per line. Blank lines and lines starting with
    /// `#` are skipped; errors carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let entry = raw.trim();
            if entry.is_empty() || entry.starts_with('#') {
                continue;
            }
            let x: f64 = entry.parse().map_err(|_| Error::Parse {
                line,
                message: format!("`{entry}` is not a number"),
            })?;
            if !(x.is_finite() && x > 0.0) {
                return Err(Error::Parse {
                    line,
                    message: format!("lifetime {entry} must be finite and > 0"),
                });
            }
            values.push(x);
        }
        if values.len() < 2 {
            return Err(Error::Parse {
                line: last_line.max(1),
                message: format!("need at least 2 observations, found {}", values.len()),
            });
        }
        Self::new(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn has_ties(&self) -> bool {
        self.values.windows(2).any(|w| w[0] == w[1])
    }

    /// Closed-form Rayleigh MLE `sqrt(Σx² / 2n)`.
    pub fn rayleigh_scale(&self) -> f64 {
        let n = self.values.len() as f64;
        (self.values.iter().map(|x| x * x).sum::<f64>() / (2.0 * n)).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub params: TRParams,
    pub loglik: f64,
    pub aic: f64,
    pub bic: f64,
    pub ks_stat: f64,
    pub ks_pvalue: f64,
    pub ks_method: KsMethod,
    pub n: usize,
    pub converged: bool,
}

/// `Σ ln f(x_i; σ, λ)`; `-∞` when any density is zero.
pub fn log_likelihood(data: &LifetimeSample, params: &TRParams) -> f64 {
    let sigma = params.sigma();
    let lambda = params.lambda();
    let n = data.len() as f64;
    let mut total = -2.0 * n * sigma.ln();
    for &x in data.values() {
        let z2 = (x / sigma).powi(2) * 0.5;
        let shape = 1.0 - lambda + 2.0 * lambda * (-z2).exp();
        if shape <= 0.0 {
            return f64::NEG_INFINITY;
        }
        total += x.ln() - z2 + shape.ln();
    }
    total
}

/// `(AIC, BIC)` for the two-parameter model.
pub fn information_criteria(loglik: f64, n: usize) -> (f64, f64) {
    let k = f64::from(PARAM_COUNT);
    (-2.0 * loglik + 2.0 * k, -2.0 * loglik + k * (n as f64).ln())
}

/// Maximum-likelihood fit over `σ > 0`, `λ ∈ [-1, 1]`.
///
/// The search runs on `(ln σ, λ)` from the Rayleigh scale estimate and
/// several starting values of λ, keeping the best optimum. A constant sample
/// has no informative likelihood surface and is reported unconverged.
pub fn fit_mle(data: &LifetimeSample) -> Result<FitResult> {
    let sigma0 = data.rayleigh_scale();
    let bounds = [(f64::NEG_INFINITY, f64::INFINITY), (-1.0, 1.0)];
    let objective = |x: &[f64]| {
        let sigma = x[0].exp();
        match TRParams::new(sigma, x[1]) {
            Ok(p) => -log_likelihood(data, &p),
            Err(_) => f64::INFINITY,
        }
    };

    let mut best: Option<simplex::SimplexResult> = None;
    for &lambda0 in &LAMBDA_STARTS {
        let mut run = simplex::minimize(
            objective,
            &[sigma0.ln(), lambda0],
            &[0.1, 0.25],
            &bounds,
            simplex::SimplexOptions::default(),
        );
        // Restart once from the optimum to shake off a collapsed simplex.
        let polish = simplex::minimize(
            objective,
            &run.x,
            &[0.02, 0.05],
            &bounds,
            simplex::SimplexOptions::default(),
        );
        if polish.value <= run.value {
            run = simplex::SimplexResult {
                evals: run.evals + polish.evals,
                ..polish
            };
        }
        if best.as_ref().is_none_or(|b| run.value < b.value) {
            best = Some(run);
        }
    }
    let best = best.expect("at least one start");

    let params = TRParams::new(best.x[0].exp(), best.x[1].clamp(-1.0, 1.0))?;
    let loglik = log_likelihood(data, &params);
    let (aic, bic) = information_criteria(loglik, data.len());
    let ks = ks_test(data, &params);
    let degenerate = data.values().first() == data.values().last();
    Ok(FitResult {
        params,
        loglik,
        aic,
        bic,
        ks_stat: ks.statistic,
        ks_pvalue: ks.pvalue,
        ks_method: ks.method,
        n: data.len(),
        converged: best.converged && loglik.is_finite() && !degenerate,
    })
}
