#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Adaptive Simpson quadrature on [a, b].
pub fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    /// `lo` and `hi` are (abscissa, value) pairs; `fm` is the midpoint value.
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        lo: (f64, f64),
        hi: (f64, f64),
        fm: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let ((a, fa), (b, fb)) = (lo, hi);
        let m = 0.5 * (a + b);
        let flm = f(0.5 * (a + m));
        let frm = f(0.5 * (m + b));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
            return left + right + (left + right - whole) / 15.0;
        }
        rec(f, lo, (m, fm), flm, left, tol / 2.0, depth - 1)
            + rec(f, (m, fm), hi, frm, right, tol / 2.0, depth - 1)
    }
    // Fixed panels first, so a narrow peak cannot hide between the first
    // three sample points.
    const PANELS: usize = 64;
    let width = (b - a) / PANELS as f64;
    (0..PANELS)
        .map(|i| {
            let lo = a + width * i as f64;
            let hi = lo + width;
            let (fa, fm, fb) = (f(lo), f(0.5 * (lo + hi)), f(hi));
            let whole = width / 6.0 * (fa + 4.0 * fm + fb);
            rec(f, (lo, fa), (hi, fb), fm, whole, tol / PANELS as f64, 50)
        })
        .sum()
}

/// Slack for monotonicity checks near 1, where a sum of many terms carries a
/// few ulps of rounding.
pub const ROUNDING: f64 = 1e-13;

/// Exact lower binomial tail in rational arithmetic, with `p` taken as the
/// exact binary value of the f64.
pub fn exact_binom_cdf(c: u32, n: u32, p: f64) -> f64 {
    let p = BigRational::from_float(p).unwrap();
    let q = BigRational::one() - &p;
    let mut total = BigRational::zero();
    let mut choose = BigInt::one();
    for i in 0..=c {
        if i > 0 {
            choose = choose * BigInt::from(n - i + 1) / BigInt::from(i);
        }
        let term = BigRational::from_integer(choose.clone())
            * num_traits::pow(p.clone(), i as usize)
            * num_traits::pow(q.clone(), (n - i) as usize);
        total += term;
    }
    total.to_f64().unwrap()
}
