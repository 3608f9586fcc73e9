use statrs::function::beta::beta_reg;

use crate::error::{Error, Result};

/// Above this sample size the lower tail is taken from the regularized
/// incomplete beta function instead of a term-by-term sum.
pub const DIRECT_SUM_LIMIT: u32 = 1000;

/// Lower binomial tail `P[X ≤ c]` for `X ~ Bin(n, p)`.
pub fn binom_cdf(c: u32, n: u32, p: f64) -> Result<f64> {
    if c > n {
        return Err(Error::domain(
            "c",
            f64::from(c),
            "acceptance number must not exceed n",
        ));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain("p", p, "must lie in [0, 1]"));
    }
    Ok(binom_cdf_unchecked(c, n, p))
}

pub(crate) fn binom_cdf_unchecked(c: u32, n: u32, p: f64) -> f64 {
    if c >= n || p == 0.0 {
        return 1.0;
    }
    if p == 1.0 {
        return 0.0;
    }
    if n > DIRECT_SUM_LIMIT {
        // P[X ≤ c] = I_{1-p}(n - c, c + 1)
        return beta_reg(f64::from(n - c), f64::from(c) + 1.0, 1.0 - p).clamp(0.0, 1.0);
    }
    let ln_p = p.ln();
    let ln_q = (-p).ln_1p();
    let nf = f64::from(n);
    let mut ln_choose = 0.0;
    let mut total = 0.0;
    for i in 0..=c {
        if i > 0 {
            let k = f64::from(i);
            ln_choose += ((nf - k + 1.0) / k).ln();
        }
        let k = f64::from(i);
        total += (ln_choose + k * ln_p + (nf - k) * ln_q).exp();
    }
    total.min(1.0)
}
