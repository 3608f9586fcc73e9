use serde::{Deserialize, Serialize};

use super::LifetimeSample;

/// Five-number summary plus mean, skewness and (non-excess) kurtosis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DescriptiveStats {
    pub minimum: f64,
    pub q1: f64,
    pub median: f64,
    pub mean: f64,
    pub q3: f64,
    pub maximum: f64,
    /// `m3 / m2^{3/2}` with central moments averaged over `n`.
    pub cs: f64,
    /// `m4 / m2²` with central moments averaged over `n`.
    pub ck: f64,
}

pub fn describe(data: &LifetimeSample) -> DescriptiveStats {
    let xs = data.values();
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let central = |k: i32| xs.iter().map(|x| (x - mean).powi(k)).sum::<f64>() / n;
    let m2 = central(2);
    let (cs, ck) = if m2 > 0.0 {
        (central(3) / m2.powf(1.5), central(4) / (m2 * m2))
    } else {
        (f64::NAN, f64::NAN)
    };
    DescriptiveStats {
        minimum: xs[0],
        q1: quantile_linear(xs, 0.25),
        median: quantile_linear(xs, 0.5),
        mean,
        q3: quantile_linear(xs, 0.75),
        maximum: xs[xs.len() - 1],
        cs,
        ck,
    }
}

/// Linear interpolation between order statistics at position `1 + (n-1)q`.
pub fn quantile_linear(sorted: &[f64], q: f64) -> f64 {
    let pos = (sorted.len() - 1) as f64 * q;
    let lo = pos.floor() as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    let frac = pos - lo as f64;
    sorted[lo] + frac * (sorted[hi] - sorted[lo])
}
