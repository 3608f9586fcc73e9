//! Transmuted Rayleigh lifetime distribution.
//!
//! With `y = exp(-x² / 2σ²)` the distribution function is
//! `F(x) = (1 - y)(1 + λy)` and the density is
//! `f(x) = (x / σ²) · y · (1 - λ + 2λy)`, for `σ > 0` and `|λ| ≤ 1`.
//! `λ = 0` is the plain Rayleigh distribution.

use rand::distributions::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};

/// Beyond this many scale units the survival factor `exp(-x²/2σ²)` is below
/// `e^-800` and the distribution function is taken as exactly 1.
const CDF_SATURATION: f64 = 40.0;

/// `√π / 2`
const HALF_SQRT_PI: f64 = 0.886_226_925_452_758;

/// Scale and transmutation parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TRParams {
    sigma: f64,
    lambda: f64,
}

impl TRParams {
    pub fn new(sigma: f64, lambda: f64) -> Result<Self> {
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::domain("sigma", sigma, "must be finite and > 0"));
        }
        check_lambda(lambda)?;
        Ok(Self { sigma, lambda })
    }

    /// Plain Rayleigh distribution with scale `sigma`.
    pub fn rayleigh(sigma: f64) -> Result<Self> {
        Self::new(sigma, 0.0)
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        check_support(x)?;
        Ok(self.pdf_unchecked(x))
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        check_support(x)?;
        Ok(self.cdf_unchecked(x))
    }

    /// Natural log of the density. `-∞` where the density vanishes.
    pub fn ln_pdf(&self, x: f64) -> Result<f64> {
        check_support(x)?;
        let z = x / self.sigma;
        let y = (-0.5 * z * z).exp();
        let shape = 1.0 - self.lambda + 2.0 * self.lambda * y;
        if x == 0.0 || shape <= 0.0 {
            return Ok(f64::NEG_INFINITY);
        }
        Ok(x.ln() - 2.0 * self.sigma.ln() - 0.5 * z * z + shape.ln())
    }

    pub(crate) fn pdf_unchecked(&self, x: f64) -> f64 {
        let z = x / self.sigma;
        let y = (-0.5 * z * z).exp();
        z / self.sigma * y * (1.0 - self.lambda + 2.0 * self.lambda * y)
    }

    pub(crate) fn cdf_unchecked(&self, x: f64) -> f64 {
        let z = x / self.sigma;
        if z > CDF_SATURATION {
            return 1.0;
        }
        let y = (-0.5 * z * z).exp();
        // 1 - y loses precision for small z; -expm1 keeps it.
        let one_minus_y = -(-0.5 * z * z).exp_m1();
        one_minus_y * (1.0 + self.lambda * y)
    }

    /// Inverse of the distribution function.
    ///
    /// Solves `λy² + (1-λ)y - (1-u) = 0` for `y = exp(-x²/2σ²)` on `(0, 1)`
    /// and returns `x = σ·sqrt(-2 ln y)`.
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(Error::domain("u", u, "must lie strictly inside (0, 1)"));
        }
        Ok(self.quantile_unchecked(u))
    }

    pub(crate) fn quantile_unchecked(&self, u: f64) -> f64 {
        let lambda = self.lambda;
        let survival = 1.0 - u;
        let y = if lambda == 0.0 {
            survival
        } else {
            // Positive root of the quadratic, written in the cancellation-free
            // form 2c / (b + sqrt(b² + 4ac)).
            let b = 1.0 - lambda;
            let disc = b * b + 4.0 * lambda * survival;
            2.0 * survival / (b + disc.sqrt())
        };
        self.sigma * (-2.0 * y.ln()).sqrt()
    }

    /// Raw moment `E[X^r] = (r/2) σ^r Γ(r/2) (λ + 2^{r/2}(1 - λ))`.
    pub fn raw_moment(&self, r: u32) -> Result<f64> {
        if r < 1 {
            return Err(Error::domain("r", r as f64, "moment order must be >= 1"));
        }
        let half = f64::from(r) / 2.0;
        Ok(half
            * self.sigma.powi(r as i32)
            * gamma(half)
            * (self.lambda + 2f64.powf(half) * (1.0 - self.lambda)))
    }

    pub fn mean(&self) -> f64 {
        self.sigma * mean_factor(self.lambda)
    }

    /// `n` deterministic draws by inverse transform from a generator seeded
    /// with `seed`.
    pub fn sample(&self, n: usize, seed: u64) -> Result<Vec<f64>> {
        if n < 1 {
            return Err(Error::domain("n", n as f64, "sample size must be >= 1"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(self.sample_with(&mut rng, n))
    }

    pub fn sample_with<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Vec<f64> {
        (0..n)
            .map(|_| self.quantile_unchecked(rng.sample(Open01)))
            .collect()
    }
}

/// Scale that gives mean lifetime `mu` for transmutation `lambda`.
pub fn sigma_from_mu(mu: f64, lambda: f64) -> Result<f64> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::domain("mu", mu, "must be finite and > 0"));
    }
    check_lambda(lambda)?;
    Ok(mu / mean_factor(lambda))
}

/// `μ / σ = (√π/2)(λ + √2(1 - λ))`
fn mean_factor(lambda: f64) -> f64 {
    HALF_SQRT_PI * (lambda + std::f64::consts::SQRT_2 * (1.0 - lambda))
}

pub(crate) fn check_lambda(lambda: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&lambda) {
        return Err(Error::domain("lambda", lambda, "must lie in [-1, 1]"));
    }
    Ok(())
}

fn check_support(x: f64) -> Result<()> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::domain("x", x, "must be >= 0"));
    }
    Ok(())
}
