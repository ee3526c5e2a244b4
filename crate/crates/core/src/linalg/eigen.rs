//! Jacobi eigenvalue and singular-value routines for small dense complex matrices.
//!
//! Everything in the crate runs on matrices of dimension <= ~100, so robustness
//! wins over asymptotics: a cyclic Jacobi sweep for Hermitian eigenvalues and a
//! one-sided (Hestenes) Jacobi sweep for singular values. The one-sided variant
//! keeps tiny singular values accurate, which matters because several criteria
//! evaluate trace norms of exactly rank-deficient matrices.

use ndarray::Array2;
use num_complex::Complex64;

use crate::linalg::CMatrix;

/// Convergence target: off-diagonal Frobenius mass relative to the matrix norm.
const OFF_DIAGONAL_TOL: f64 = 1e-13;
/// Relative column-orthogonality target for the one-sided sweep.
const ORTHO_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 60;

/// The small-angle root of `t^2 - 2 tau t - 1 = 0`, the classic Jacobi choice.
#[inline]
fn jacobi_tangent(tau: f64) -> f64 {
    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
}

fn off_diagonal_mass(m: &[Complex64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                sum += m[p * n + q].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

fn frobenius(m: &[Complex64]) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Eigenvalues of a Hermitian matrix, ascending, by cyclic complex Jacobi
/// rotations. The caller is responsible for (approximate) hermiticity; the
/// routine only reads the matrix and works on an internal copy.
pub fn hermitian_eigenvalues(a: &CMatrix) -> Vec<f64> {
    let n = a.nrows();
    debug_assert_eq!(n, a.ncols(), "hermitian_eigenvalues needs a square matrix");
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![a[[0, 0]].re];
    }

    let mut m: Vec<Complex64> = a.iter().copied().collect();
    let fro = frobenius(&m);
    if fro == 0.0 {
        return vec![0.0; n];
    }
    let stop = OFF_DIAGONAL_TOL * fro;
    // Rotating away pivots below this still leaves off-mass under `stop`.
    let skip = stop / (2.0 * n as f64);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_mass(&m, n) <= stop {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = m[p * n + q];
                let h = apq.norm();
                if h <= skip {
                    continue;
                }
                let app = m[p * n + p].re;
                let aqq = m[q * n + q].re;
                let phase = apq / h;
                let t = jacobi_tangent((aqq - app) / (2.0 * h));
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let s_phase = s * phase;
                let s_phase_conj = s * phase.conj();

                // A <- J^dag A J with the pq block of J = [[c, s*phase], [-s*conj(phase), c]].
                for i in 0..n {
                    let aip = m[i * n + p];
                    let aiq = m[i * n + q];
                    m[i * n + p] = c * aip - s_phase_conj * aiq;
                    m[i * n + q] = s_phase * aip + c * aiq;
                }
                for i in 0..n {
                    let api = m[p * n + i];
                    let aqi = m[q * n + i];
                    m[p * n + i] = c * api - s_phase * aqi;
                    m[q * n + i] = s_phase_conj * api + c * aqi;
                }
                // The pivot is zero by construction; drop the rounding residue.
                m[p * n + q] = Complex64::new(0.0, 0.0);
                m[q * n + p] = Complex64::new(0.0, 0.0);
                m[p * n + p] = Complex64::new(m[p * n + p].re, 0.0);
                m[q * n + q] = Complex64::new(m[q * n + q].re, 0.0);
            }
        }
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| m[i * n + i].re).collect();
    eigenvalues.sort_by(|x, y| x.partial_cmp(y).expect("non-finite eigenvalue"));
    eigenvalues
}

/// Singular values of a rectangular complex matrix, nonincreasing, by
/// one-sided Jacobi orthogonalization of the columns.
pub fn singular_values(a: &CMatrix) -> Vec<f64> {
    let (r0, c0) = (a.nrows(), a.ncols());
    if r0 == 0 || c0 == 0 {
        return Vec::new();
    }
    // Orthogonalize the short side; singular values are adjoint-invariant.
    let transpose = c0 > r0;
    let (rows, cols) = if transpose { (c0, r0) } else { (r0, c0) };

    // Column-major buffer: column j occupies m[j*rows .. (j+1)*rows].
    let mut m = vec![Complex64::new(0.0, 0.0); rows * cols];
    for i in 0..r0 {
        for j in 0..c0 {
            let v = a[[i, j]];
            if transpose {
                m[i * rows + j] = v.conj();
            } else {
                m[j * rows + i] = v;
            }
        }
    }

    let mut norm2: Vec<f64> = (0..cols)
        .map(|j| m[j * rows..(j + 1) * rows].iter().map(|z| z.norm_sqr()).sum())
        .collect();
    let hmax = norm2.iter().cloned().fold(0.0, f64::max);
    if hmax == 0.0 {
        return vec![0.0; cols];
    }

    for _ in 0..MAX_SWEEPS {
        // Refresh column norms once per sweep to stop drift in the fast updates.
        for (j, nj) in norm2.iter_mut().enumerate() {
            *nj = m[j * rows..(j + 1) * rows].iter().map(|z| z.norm_sqr()).sum();
        }
        let mut rotated = false;
        for p in 0..cols - 1 {
            for q in p + 1..cols {
                let mut hpq = Complex64::new(0.0, 0.0);
                for i in 0..rows {
                    hpq += m[p * rows + i].conj() * m[q * rows + i];
                }
                let habs = hpq.norm();
                // Fast norm updates can round slightly negative; clamp before
                // they feed the threshold or the rotation angle.
                let hpp = norm2[p].max(0.0);
                let hqq = norm2[q].max(0.0);
                if habs == 0.0
                    || habs <= ORTHO_TOL * (hpp * hqq).sqrt() + f64::EPSILON.powi(2) * hmax
                {
                    continue;
                }
                rotated = true;
                let phase = hpq / habs;
                let t = jacobi_tangent((hqq - hpp) / (2.0 * habs));
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let s_phase = s * phase;
                let s_phase_conj = s * phase.conj();
                for i in 0..rows {
                    let vp = m[p * rows + i];
                    let vq = m[q * rows + i];
                    m[p * rows + i] = c * vp - s_phase_conj * vq;
                    m[q * rows + i] = s_phase * vp + c * vq;
                }
                let cs_h = 2.0 * c * s * habs;
                norm2[p] = (c * c * hpp + s * s * hqq - cs_h).max(0.0);
                norm2[q] = s * s * hpp + c * c * hqq + cs_h;
            }
        }
        if !rotated {
            break;
        }
    }

    let mut sigma: Vec<f64> = (0..cols)
        .map(|j| {
            m[j * rows..(j + 1) * rows]
                .iter()
                .map(|z| z.norm_sqr())
                .sum::<f64>()
                .sqrt()
        })
        .collect();
    sigma.sort_by(|x, y| y.partial_cmp(x).expect("non-finite singular value"));
    sigma
}

/// Singular values via the Hermitian Gram matrix, eigenvalues clamped at zero.
/// Squaring costs half the digits near zero, so this is kept as a cross-check
/// route for tests rather than the production path.
pub fn singular_values_gram(a: &CMatrix) -> Vec<f64> {
    let (r, c) = (a.nrows(), a.ncols());
    if r == 0 || c == 0 {
        return Vec::new();
    }
    let n = r.min(c);
    let mut gram = Array2::<Complex64>::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            if r <= c {
                // A A^dag
                for k in 0..c {
                    s += a[[i, k]] * a[[j, k]].conj();
                }
            } else {
                // A^dag A
                for k in 0..r {
                    s += a[[k, i]].conj() * a[[k, j]];
                }
            }
            gram[[i, j]] = s;
        }
    }
    let mut sigma: Vec<f64> = hermitian_eigenvalues(&gram)
        .into_iter()
        .map(|l| l.max(0.0).sqrt())
        .collect();
    sigma.sort_by(|x, y| y.partial_cmp(x).expect("non-finite singular value"));
    sigma
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_z_eigenvalues() {
        let z = array![[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]];
        let ev = hermitian_eigenvalues(&z);
        assert_abs_diff_eq!(ev[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(ev[1], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn complex_hermitian_2x2() {
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
        let m = array![[c(2.0, 0.0), c(0.0, 1.0)], [c(0.0, -1.0), c(2.0, 0.0)]];
        let ev = hermitian_eigenvalues(&m);
        assert_abs_diff_eq!(ev[0], 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(ev[1], 3.0, epsilon = 1e-13);
    }

    #[test]
    fn eigenvalue_sums_match_traces() {
        // Deterministic pseudo-random Hermitian matrix.
        let n = 12;
        let mut m = Array2::<Complex64>::zeros((n, n));
        let mut x = 0.5f64;
        let mut next = || {
            x = (x * 997.0 + 0.123).fract();
            x - 0.5
        };
        for i in 0..n {
            for j in i..n {
                let v = if i == j {
                    c(next(), 0.0)
                } else {
                    c(next(), next())
                };
                m[[i, j]] = v;
                m[[j, i]] = v.conj();
            }
        }
        let ev = hermitian_eigenvalues(&m);
        let trace: f64 = (0..n).map(|i| m[[i, i]].re).sum();
        let fro2: f64 = m.iter().map(|z| z.norm_sqr()).sum();
        assert_abs_diff_eq!(ev.iter().sum::<f64>(), trace, epsilon = 1e-10);
        assert_abs_diff_eq!(ev.iter().map(|l| l * l).sum::<f64>(), fro2, epsilon = 1e-9);
    }

    #[test]
    fn singular_values_of_diagonal_rectangle() {
        let m = array![
            [c(3.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(-2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        ];
        let s = singular_values(&m);
        assert_eq!(s.len(), 2);
        assert_abs_diff_eq!(s[0], 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s[1], 2.0, epsilon = 1e-14);
    }

    #[test]
    fn rank_one_matrix_has_clean_zeros() {
        // Outer product u v^T: one singular value, the rest must stay ~1e-16.
        let u = [c(0.6, 0.1), c(-0.3, 0.4), c(0.2, 0.0)];
        let v = [c(1.0, -0.5), c(0.7, 0.2), c(0.1, 0.9)];
        let mut m = Array2::<Complex64>::zeros((3, 3));
        for i in 0..3 {
            for j in 0..3 {
                m[[i, j]] = u[i] * v[j];
            }
        }
        let s = singular_values(&m);
        let nu: f64 = u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let nv: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert_abs_diff_eq!(s[0], nu * nv, epsilon = 1e-13);
        assert!(s[1] < 1e-14 && s[2] < 1e-14, "junk singular values {s:?}");
    }

    #[test]
    fn one_sided_and_gram_routes_agree_on_generic_input() {
        let n = 9;
        let mut m = Array2::<Complex64>::zeros((n, n));
        let mut x = 0.2f64;
        let mut next = || {
            x = (x * 991.0 + 0.517).fract();
            x - 0.5
        };
        for i in 0..n {
            for j in 0..n {
                m[[i, j]] = c(next(), next());
            }
        }
        let a = singular_values(&m);
        let b = singular_values_gram(&m);
        for (x, y) in a.iter().zip(b.iter()) {
            assert_abs_diff_eq!(x, y, epsilon = 1e-9);
        }
    }
}
