use nalgebra::{DMatrix, DVector};

/// Settings for [`damped_gauss_newton`].
#[derive(Debug, Clone, Copy)]
pub struct GaussNewtonOptions {
    pub max_iter: usize,
    /// Stop once the Euclidean residual norm drops to this value.
    pub target: f64,
    /// Relative step for the central-difference Jacobian.
    pub fd_step: f64,
    pub initial_damping: f64,
}

impl Default for GaussNewtonOptions {
    fn default() -> Self {
        Self {
            max_iter: 200,
            target: 1e-14,
            fd_step: 1e-7,
            initial_damping: 1e-6,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GaussNewtonOutcome {
    pub x: Vec<f64>,
    pub residual_norm: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Levenberg-damped Gauss-Newton with a finite-difference Jacobian.
///
/// Each step solves `(J^T J + mu I) dx = -J^T r`. The damping shrinks after
/// an accepted step and grows after a rejected one, so rank-deficient systems
/// (solution curves rather than isolated points) still take bounded steps
/// toward the nearest solution. `project` is applied to every trial point
/// before it is evaluated.
pub fn damped_gauss_newton<F, P>(
    residual: F,
    x0: &[f64],
    mut project: P,
    opts: &GaussNewtonOptions,
) -> GaussNewtonOutcome
where
    F: Fn(&[f64]) -> Vec<f64>,
    P: FnMut(&mut [f64]),
{
    let n = x0.len();
    let mut x = x0.to_vec();
    project(&mut x);
    let mut r = residual(&x);
    let mut norm = l2(&r);
    let mut mu = opts.initial_damping;
    let mut iterations = 0;

    while iterations < opts.max_iter {
        if !norm.is_finite() {
            break;
        }
        if norm <= opts.target {
            break;
        }
        iterations += 1;
        let jac = jacobian(&residual, &x, r.len(), opts.fd_step);
        let rv = DVector::from_vec(r.clone());
        let jt = jac.transpose();
        let jtj = &jt * &jac;
        let grad = &jt * &rv;
        let scale = jtj.diagonal().max().max(f64::MIN_POSITIVE);

        let mut accepted = false;
        while mu < 1e12 {
            let mut lhs = jtj.clone();
            for i in 0..n {
                lhs[(i, i)] += mu * scale;
            }
            let Some(chol) = lhs.cholesky() else {
                mu *= 10.0;
                continue;
            };
            let step = chol.solve(&(-&grad));
            let mut trial: Vec<f64> = x.iter().zip(step.iter()).map(|(a, b)| a + b).collect();
            project(&mut trial);
            let rt = residual(&trial);
            let nt = l2(&rt);
            if nt.is_finite() && nt < norm {
                let moved = trial
                    .iter()
                    .zip(&x)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                x = trial;
                r = rt;
                norm = nt;
                mu = (mu / 3.0).max(1e-15);
                accepted = true;
                if moved == 0.0 {
                    mu = 1e12;
                }
                break;
            }
            mu *= 4.0;
        }
        if !accepted || mu >= 1e12 {
            break;
        }
    }

    GaussNewtonOutcome {
        converged: norm <= opts.target,
        x,
        residual_norm: norm,
        iterations,
    }
}

fn l2(r: &[f64]) -> f64 {
    r.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn jacobian<F>(residual: &F, x: &[f64], m: usize, rel: f64) -> DMatrix<f64>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    let n = x.len();
    let mut jac = DMatrix::zeros(m, n);
    let mut probe = x.to_vec();
    for j in 0..n {
        let h = rel * x[j].abs().max(1.0);
        probe[j] = x[j] + h;
        let fp = residual(&probe);
        probe[j] = x[j] - h;
        let fm = residual(&probe);
        probe[j] = x[j];
        for i in 0..m {
            jac[(i, j)] = (fp[i] - fm[i]) / (2.0 * h);
        }
    }
    jac
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_square_nonlinear_system() {
        // x^2 + y^2 = 1, x = y
        let out = damped_gauss_newton(
            |v| vec![v[0] * v[0] + v[1] * v[1] - 1.0, v[0] - v[1]],
            &[0.9, 0.1],
            |_| {},
            &GaussNewtonOptions::default(),
        );
        assert!(out.converged, "{out:?}");
        let h = 0.5f64.sqrt();
        assert!((out.x[0] - h).abs() < 1e-12 && (out.x[1] - h).abs() < 1e-12);
    }

    #[test]
    fn rank_deficient_system_lands_on_curve() {
        // both rows describe the unit circle
        let out = damped_gauss_newton(
            |v| {
                let c = v[0] * v[0] + v[1] * v[1] - 1.0;
                vec![c, 2.0 * c]
            },
            &[0.3, 0.4],
            |_| {},
            &GaussNewtonOptions::default(),
        );
        assert!(out.converged);
        // nearest point on the circle to (0.3, 0.4) is (0.6, 0.8)
        assert!((out.x[0] - 0.6).abs() < 1e-6 && (out.x[1] - 0.8).abs() < 1e-6);
    }

    #[test]
    fn projection_is_applied() {
        let out = damped_gauss_newton(
            |v| vec![v[0] - 2.0],
            &[0.0],
            |v| v[0] = v[0].min(1.0),
            &GaussNewtonOptions::default(),
        );
        assert!(!out.converged);
        assert!(out.x[0] <= 1.0);
    }
}
