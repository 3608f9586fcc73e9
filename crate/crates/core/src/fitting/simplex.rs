//! Nelder–Mead simplex minimizer with per-coordinate box projection.

#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions {
    pub max_evals: usize,
    /// Converged once every vertex lies within this distance of the best one
    /// (per coordinate)...
    pub x_tol: f64,
    /// ...and the objective spread across the simplex is below this.
    pub f_tol: f64,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self {
            max_evals: 20_000,
            x_tol: 1e-10,
            f_tol: 1e-12,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SimplexResult {
    pub x: Vec<f64>,
    pub value: f64,
    pub evals: usize,
    pub converged: bool,
    /// Largest coordinate distance from the best vertex at termination.
    pub size: f64,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

pub fn minimize<F>(
    mut f: F,
    start: &[f64],
    step: &[f64],
    bounds: &[(f64, f64)],
    opts: SimplexOptions,
) -> SimplexResult
where
    F: FnMut(&[f64]) -> f64,
{
    let dim = start.len();
    let project = |x: &mut Vec<f64>| {
        for (xi, &(lo, hi)) in x.iter_mut().zip(bounds) {
            *xi = xi.clamp(lo, hi);
        }
    };
    let mut evals = 0;
    let mut eval = |x: &[f64], evals: &mut usize| {
        *evals += 1;
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };

    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    let mut x0 = start.to_vec();
    project(&mut x0);
    let f0 = eval(&x0, &mut evals);
    simplex.push((x0.clone(), f0));
    for i in 0..dim {
        let mut x = x0.clone();
        x[i] += step[i];
        project(&mut x);
        if x[i] == x0[i] {
            // Start sits on an upper bound; step the other way.
            x[i] -= step[i];
            project(&mut x);
        }
        let fx = eval(&x, &mut evals);
        simplex.push((x, fx));
    }

    let mut converged = false;
    let mut size = f64::INFINITY;
    while evals < opts.max_evals {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let best = &simplex[0];
        size = simplex[1..]
            .iter()
            .flat_map(|(x, _)| x.iter().zip(&best.0).map(|(a, b)| (a - b).abs()))
            .fold(0.0, f64::max);
        let spread = (simplex[dim].1 - best.1).abs();
        if size <= opts.x_tol && spread <= opts.f_tol.max(opts.f_tol * best.1.abs()) {
            converged = true;
            break;
        }

        let centroid: Vec<f64> = (0..dim)
            .map(|j| simplex[..dim].iter().map(|(x, _)| x[j]).sum::<f64>() / dim as f64)
            .collect();
        let worst = simplex[dim].clone();
        let along = |t: f64| -> Vec<f64> {
            let mut x: Vec<f64> = centroid
                .iter()
                .zip(&worst.0)
                .map(|(c, w)| c + t * (c - w))
                .collect();
            project(&mut x);
            x
        };

        let xr = along(REFLECT);
        let fr = eval(&xr, &mut evals);
        if fr < simplex[0].1 {
            let xe = along(EXPAND);
            let fe = eval(&xe, &mut evals);
            simplex[dim] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < simplex[dim - 1].1 {
            simplex[dim] = (xr, fr);
            continue;
        }
        let (xc, fc) = if fr < worst.1 {
            let xc = along(CONTRACT);
            let fc = eval(&xc, &mut evals);
            (xc, fc)
        } else {
            let xc = along(-CONTRACT);
            let fc = eval(&xc, &mut evals);
            (xc, fc)
        };
        if fc < worst.1.min(fr) {
            simplex[dim] = (xc, fc);
            continue;
        }
        let best = simplex[0].0.clone();
        for vertex in simplex.iter_mut().skip(1) {
            let mut x: Vec<f64> = best
                .iter()
                .zip(&vertex.0)
                .map(|(b, v)| b + SHRINK * (v - b))
                .collect();
            project(&mut x);
            let fx = eval(&x, &mut evals);
            *vertex = (x, fx);
        }
    }

    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, value) = simplex.swap_remove(0);
    SimplexResult {
        x,
        value,
        evals,
        converged,
        size,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_rosenbrock_minimum() {
        let rosen = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let inf = (f64::NEG_INFINITY, f64::INFINITY);
        let r = minimize(
            rosen,
            &[-1.2, 1.0],
            &[0.5, 0.5],
            &[inf, inf],
            SimplexOptions::default(),
        );
        assert!(r.converged);
        assert!(
            (r.x[0] - 1.0).abs() < 1e-6 && (r.x[1] - 1.0).abs() < 1e-6,
            "{:?}",
            r.x
        );
    }

    #[test]
    fn respects_box() {
        // Unconstrained minimum at (3, 0); box caps the first coordinate at 1.
        let f = |x: &[f64]| (x[0] - 3.0).powi(2) + x[1] * x[1];
        let r = minimize(
            f,
            &[0.0, 1.0],
            &[0.3, 0.3],
            &[(-1.0, 1.0), (f64::NEG_INFINITY, f64::INFINITY)],
            SimplexOptions::default(),
        );
        assert!((r.x[0] - 1.0).abs() < 1e-8);
        assert!(r.x[1].abs() < 1e-5);
    }

    #[test]
    fn reports_non_convergence_when_budget_runs_out() {
        let f = |x: &[f64]| x[0].powi(2) + x[1].powi(2);
        let inf = (f64::NEG_INFINITY, f64::INFINITY);
        let opts = SimplexOptions {
            max_evals: 5,
            ..SimplexOptions::default()
        };
        let r = minimize(f, &[10.0, 10.0], &[1.0, 1.0], &[inf, inf], opts);
        assert!(!r.converged);
    }
}
