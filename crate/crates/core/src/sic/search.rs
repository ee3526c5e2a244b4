//! Numerical fiducial search: random restarts plus damped least-squares
//! descent on the pairwise-fidelity residuals.
//!
//! The unknowns are the 2d real components of the fiducial candidate. The
//! residual vector stacks the norm constraint with the `d^2 - 1` fidelity
//! deviations `|<v|D_jk|v>|^2 - 1/(d+1)`; a SIC fiducial is a zero-residual
//! least-squares solution, so Levenberg-Marquardt polishes any basin hit by a
//! random restart down to machine precision.

use ndarray::Array1;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::rng::stream_rng;
use crate::sic::{displace, displace_adjoint, fiducial_residual, omega_powers, Fiducial, MAX_DIMENSION};

/// Restart and iteration budget for [`fiducial_search`].
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub restarts: usize,
    pub max_iterations: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            restarts: 64,
            max_iterations: 600,
        }
    }
}

/// Cost below which the polish is considered machine-limited.
const COST_FLOOR: f64 = 1e-26;

/// Searches for a certified fiducial in dimension `d`. Identical `(d, seed)`
/// pairs produce bitwise-identical fiducials.
pub fn fiducial_search(d: usize, seed: u64, tol: f64) -> Result<Fiducial> {
    fiducial_search_with(d, seed, tol, &SearchConfig::default())
}

/// [`fiducial_search`] with an explicit restart budget.
pub fn fiducial_search_with(
    d: usize,
    seed: u64,
    tol: f64,
    config: &SearchConfig,
) -> Result<Fiducial> {
    if !(2..=MAX_DIMENSION).contains(&d) {
        return Err(Error::InvalidDimension {
            dim: d,
            reason: "fiducial search supports dimensions 2..=7",
        });
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "certification tolerance must be positive, got {tol}"
        )));
    }

    let omega = omega_powers(d);
    let mut best_residual = f64::INFINITY;
    for restart in 0..config.restarts {
        // One stream per (dimension, restart) pair.
        let mut rng = stream_rng(seed, ((d as u64) << 32) ^ restart as u64);
        let mut x: Vec<f64> = (0..2 * d).map(|_| rng.sample(StandardNormal)).collect();
        let norm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        for v in &mut x {
            *v /= norm;
        }

        let polished = lm_minimize(d, &omega, x, config.max_iterations);
        let psi = normalized_vector(&polished);
        let residual = fiducial_residual(&psi);
        best_residual = best_residual.min(residual);
        if residual <= tol {
            return Fiducial::from_vector(Array1::from(psi), Some(seed));
        }
    }

    Err(Error::SearchFailed {
        dim: d,
        best_residual,
        restarts: config.restarts,
    })
}

fn normalized_vector(x: &[f64]) -> Vec<Complex64> {
    let d = x.len() / 2;
    let mut v: Vec<Complex64> = (0..d).map(|k| Complex64::new(x[2 * k], x[2 * k + 1])).collect();
    let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut v {
        *z /= norm;
    }
    v
}

fn complex_view(x: &[f64]) -> Vec<Complex64> {
    (0..x.len() / 2)
        .map(|k| Complex64::new(x[2 * k], x[2 * k + 1]))
        .collect()
}

/// Residual vector: `[ |v|^2 - 1, |<v|D_m|v>|^2 - 1/(d+1) ... ]`.
fn residuals(d: usize, omega: &[Complex64], x: &[f64]) -> (Vec<f64>, f64) {
    let v = complex_view(x);
    let target = 1.0 / (d as f64 + 1.0);
    let mut r = Vec::with_capacity(d * d);
    r.push(v.iter().map(|z| z.norm_sqr()).sum::<f64>() - 1.0);
    let mut buf = vec![Complex64::new(0.0, 0.0); d];
    for j in 0..d {
        for k in 0..d {
            if j == 0 && k == 0 {
                continue;
            }
            displace(j, k, &v, omega, &mut buf);
            let o: Complex64 = v.iter().zip(buf.iter()).map(|(a, b)| a.conj() * b).sum();
            r.push(o.norm_sqr() - target);
        }
    }
    let cost = r.iter().map(|v| v * v).sum();
    (r, cost)
}

/// Jacobian of the residual vector with respect to the 2d real parameters,
/// row-major `(d^2) x (2d)`.
fn jacobian(d: usize, omega: &[Complex64], x: &[f64]) -> Vec<f64> {
    let v = complex_view(x);
    let n = 2 * d;
    let rows = d * d;
    let mut jac = vec![0.0; rows * n];

    for (i, xi) in x.iter().enumerate() {
        jac[i] = 2.0 * xi;
    }

    let mut u = vec![Complex64::new(0.0, 0.0); d];
    let mut w = vec![Complex64::new(0.0, 0.0); d];
    let mut row = 1;
    for j in 0..d {
        for k in 0..d {
            if j == 0 && k == 0 {
                continue;
            }
            displace(j, k, &v, omega, &mut u);
            displace_adjoint(j, k, &v, omega, &mut w);
            let o: Complex64 = v.iter().zip(u.iter()).map(|(a, b)| a.conj() * b).sum();
            let oc = o.conj();
            let base = row * n;
            for (idx, (uk, wk)) in u.iter().zip(w.iter()).enumerate() {
                let plus = oc * (uk + wk.conj());
                let minus = oc * (uk - wk.conj());
                jac[base + 2 * idx] = 2.0 * plus.re;
                jac[base + 2 * idx + 1] = 2.0 * minus.im;
            }
            row += 1;
        }
    }
    jac
}

/// In-place Cholesky solve of `a x = b` for symmetric positive-definite `a`.
fn cholesky_solve(a: &mut [f64], n: usize, b: &mut [f64]) -> bool {
    for i in 0..n {
        for j in 0..=i {
            let mut s = a[i * n + j];
            for k in 0..j {
                s -= a[i * n + k] * a[j * n + k];
            }
            if i == j {
                if s <= 0.0 || !s.is_finite() {
                    return false;
                }
                a[i * n + i] = s.sqrt();
            } else {
                a[i * n + j] = s / a[j * n + j];
            }
        }
    }
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= a[i * n + k] * b[k];
        }
        b[i] = s / a[i * n + i];
    }
    for i in (0..n).rev() {
        let mut s = b[i];
        for k in i + 1..n {
            s -= a[k * n + i] * b[k];
        }
        b[i] = s / a[i * n + i];
    }
    true
}

fn lm_minimize(d: usize, omega: &[Complex64], mut x: Vec<f64>, max_iterations: usize) -> Vec<f64> {
    let n = 2 * d;
    let rows = d * d;
    let (mut r, mut cost) = residuals(d, omega, &x);
    let mut lambda = 1e-3;
    let mut stall = 0usize;

    for _ in 0..max_iterations {
        if cost <= COST_FLOOR {
            break;
        }
        let jac = jacobian(d, omega, &x);
        let mut normal = vec![0.0; n * n];
        let mut grad = vec![0.0; n];
        for row in 0..rows {
            let jr = &jac[row * n..(row + 1) * n];
            let rv = r[row];
            for i in 0..n {
                grad[i] += jr[i] * rv;
                for j in i..n {
                    normal[i * n + j] += jr[i] * jr[j];
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                normal[i * n + j] = normal[j * n + i];
            }
        }

        let mut accepted = false;
        for _ in 0..24 {
            let mut a = normal.clone();
            for i in 0..n {
                a[i * n + i] = normal[i * n + i] * (1.0 + lambda) + 1e-30;
            }
            let mut delta: Vec<f64> = grad.iter().map(|g| -g).collect();
            if !cholesky_solve(&mut a, n, &mut delta) {
                lambda *= 4.0;
                if lambda > 1e15 {
                    break;
                }
                continue;
            }
            let candidate: Vec<f64> = x.iter().zip(delta.iter()).map(|(a, b)| a + b).collect();
            let (rc, cc) = residuals(d, omega, &candidate);
            if cc.is_finite() && cc < cost {
                let drop = (cost - cc) / cost;
                x = candidate;
                r = rc;
                cost = cc;
                lambda = (lambda * 0.35).max(1e-14);
                stall = if drop < 1e-9 { stall + 1 } else { 0 };
                accepted = true;
                break;
            }
            lambda *= 4.0;
            if lambda > 1e15 {
                break;
            }
        }
        // Either a non-SIC local minimum or machine-limited; let the caller
        // measure the residual and decide.
        if !accepted || stall > 12 {
            break;
        }
    }
    x
}
