//! One-sample Kolmogorov–Smirnov test against a fitted lifetime model.

use serde::{Deserialize, Serialize};

use super::LifetimeSample;
use crate::trdist::TRParams;

/// Largest sample evaluated with the exact finite-n distribution.
pub const EXACT_LIMIT: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KsMethod {
    /// Finite-n Kolmogorov distribution (Marsaglia, Tsang & Wang).
    Exact,
    /// Limiting Kolmogorov distribution of `sqrt(n)·D`; used with ties or
    /// large samples.
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KsResult {
    pub statistic: f64,
    pub pvalue: f64,
    pub method: KsMethod,
}

pub fn ks_test(data: &LifetimeSample, params: &TRParams) -> KsResult {
    let statistic = ks_statistic(data.values(), |x| params.cdf_unchecked(x));
    let n = data.len();
    let (pvalue, method) = if n <= EXACT_LIMIT && !data.has_ties() {
        (1.0 - kolmogorov_cdf(n, statistic), KsMethod::Exact)
    } else {
        let scaled = (n as f64).sqrt() * statistic;
        (kolmogorov_limit_sf(scaled), KsMethod::Asymptotic)
    };
    KsResult {
        statistic,
        pvalue: pvalue.clamp(0.0, 1.0),
        method,
    }
}

/// `D = max_i max(|F(x_(i)) - i/n|, |F(x_(i)) - (i-1)/n|)` over sorted data.
pub fn ks_statistic<F: Fn(f64) -> f64>(sorted: &[f64], cdf: F) -> f64 {
    let n = sorted.len() as f64;
    sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            let upper = (i as f64 + 1.0) / n;
            let lower = i as f64 / n;
            (f - upper).abs().max((f - lower).abs())
        })
        .fold(0.0, f64::max)
}

/// `P(D_n < d)` for the two-sided statistic, by the matrix-power method of
/// Marsaglia, Tsang & Wang (2003).
pub fn kolmogorov_cdf(n: usize, d: f64) -> f64 {
    let nf = n as f64;
    if n == 0 || d <= 0.5 / nf {
        return 0.0;
    }
    if d >= 1.0 {
        return 1.0;
    }
    let k = (nf * d).floor() as usize + 1;
    let m = 2 * k - 1;
    let h = k as f64 - nf * d;

    let mut hm = vec![0.0; m * m];
    for i in 0..m {
        for j in 0..m {
            if i + 1 >= j {
                hm[i * m + j] = 1.0;
            }
        }
    }
    for i in 0..m {
        hm[i * m] -= h.powi(i as i32 + 1);
        hm[(m - 1) * m + i] -= h.powi((m - i) as i32);
    }
    if 2.0 * h - 1.0 > 0.0 {
        hm[(m - 1) * m] += (2.0 * h - 1.0).powi(m as i32);
    }
    for i in 0..m {
        for j in 0..m {
            if i + 1 > j {
                for g in 1..=(i + 1 - j) {
                    hm[i * m + j] /= g as f64;
                }
            }
        }
    }

    let (q, mut exp10) = matrix_power(&hm, m, n);
    let mut s = q[(k - 1) * m + (k - 1)];
    for i in 1..=n {
        s *= i as f64 / nf;
        if s < 1e-140 {
            s *= 1e140;
            exp10 -= 140;
        }
    }
    (s * 10f64.powi(exp10)).clamp(0.0, 1.0)
}

const RESCALE: f64 = 1e140;

fn matrix_power(a: &[f64], m: usize, n: usize) -> (Vec<f64>, i32) {
    if n == 1 {
        return (a.to_vec(), 0);
    }
    let (half, e) = matrix_power(a, m, n / 2);
    let mut out = mat_mul(&half, &half, m);
    let mut exp10 = 2 * e;
    if n % 2 == 1 {
        out = mat_mul(a, &out, m);
    }
    if out[(m / 2) * m + m / 2] > RESCALE {
        out.iter_mut().for_each(|v| *v /= RESCALE);
        exp10 += 140;
    }
    (out, exp10)
}

fn mat_mul(a: &[f64], b: &[f64], m: usize) -> Vec<f64> {
    let mut c = vec![0.0; m * m];
    for i in 0..m {
        for l in 0..m {
            let ail = a[i * m + l];
            if ail == 0.0 {
                continue;
            }
            for j in 0..m {
                c[i * m + j] += ail * b[l * m + j];
            }
        }
    }
    c
}

/// Survival function of the limiting Kolmogorov distribution,
/// `P(K > x)` with `K = lim sqrt(n)·D_n`.
pub fn kolmogorov_limit_sf(x: f64) -> f64 {
    if x <= 0.0 {
        return 1.0;
    }
    if x < 1.18 {
        // Jacobi-theta form converges fast for small arguments.
        let w = std::f64::consts::PI * std::f64::consts::PI / (8.0 * x * x);
        let cdf: f64 = (1..=20)
            .map(|j| {
                let odd = (2 * j - 1) as f64;
                (-odd * odd * w).exp()
            })
            .sum::<f64>()
            * (2.0 * std::f64::consts::PI).sqrt()
            / x;
        return (1.0 - cdf).clamp(0.0, 1.0);
    }
    let mut sum = 0.0;
    for j in 1..=100 {
        let jf = j as f64;
        let term = (-2.0 * jf * jf * x * x).exp();
        sum += if j % 2 == 1 { term } else { -term };
        if term < 1e-18 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_distribution_reference_values() {
        // Reference values from an independent implementation of the
        // finite-n Kolmogorov distribution.
        let cases = [
            (10, 0.129_090_687_997_717_83, 0.988_364_043_143_716_7),
            (5, 0.3, 0.664),
            (23, 0.2, 0.277_498_385_690_637_67),
            (50, 0.1, 0.662_311_270_465_818_6),
            (100, 0.05, 0.953_215_971_063_572_5),
            (3, 0.9, 0.002),
            (20, 0.35, 0.010_754_963_444_389_31),
        ];
        for (n, d, sf) in cases {
            let got = 1.0 - kolmogorov_cdf(n, d);
            assert!((got - sf).abs() < 1e-10, "n={n} d={d}: {got} vs {sf}");
        }
    }

    #[test]
    fn exact_distribution_closed_forms() {
        // n = 1: P(D < d) = 2d - 1 on [1/2, 1].
        for &d in &[0.55, 0.7, 0.95] {
            assert!((kolmogorov_cdf(1, d) - (2.0 * d - 1.0)).abs() < 1e-14);
        }
        assert_eq!(kolmogorov_cdf(7, 0.5 / 7.0), 0.0);
        assert_eq!(kolmogorov_cdf(7, 1.0), 1.0);
        // P(D_n < 1/(2n) + ε) ≈ n!/n^n · (2nε)^n is tiny but positive.
        assert!(kolmogorov_cdf(4, 0.13) > 0.0);
    }

    #[test]
    fn limiting_distribution_reference_values() {
        let cases = [
            (0.3, 0.999_990_694_198_665_5),
            (0.8, 0.544_142_411_574_198_1),
            (1.0, 0.269_999_671_677_354_56),
            (1.5, 0.022_217_962_616_525_127),
            (2.5, 7.453_306_344_157_342e-6),
        ];
        for (x, sf) in cases {
            let got = kolmogorov_limit_sf(x);
            assert!((got - sf).abs() < 1e-12, "x={x}: {got} vs {sf}");
        }
        // Both series agree at the switch point.
        let w = 1.18f64;
        let series: f64 = 2.0
            * (1..=50)
                .map(|j| {
                    let t = (-2.0 * (j * j) as f64 * w * w).exp();
                    if j % 2 == 1 {
                        t
                    } else {
                        -t
                    }
                })
                .sum::<f64>();
        assert!((kolmogorov_limit_sf(w - 1e-12) - series).abs() < 1e-12);
    }

    #[test]
    fn statistic_of_midpoint_quantiles() {
        let p = TRParams::new(2.0, 0.3).unwrap();
        for n in [4usize, 10, 37] {
            let xs: Vec<f64> = (1..=n)
                .map(|i| p.quantile((i as f64 - 0.5) / n as f64).unwrap())
                .collect();
            let d = ks_statistic(&xs, |x| p.cdf(x).unwrap());
            assert!((d - 0.5 / n as f64).abs() < 1e-12);
        }
    }
}
