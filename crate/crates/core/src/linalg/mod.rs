//! Dense complex matrix kernel: Kronecker and partial operations, Hermitian
//! eigenvalues, singular values, trace norm, realignment, and operator bases.
//!
//! Index convention, fixed crate-wide: a bipartite system with local
//! dimensions `(d_a, d_b)` uses the composite row-major index
//! `i = i_a * d_b + i_b`. Realignment and the partial operations below are
//! only correct against this convention.

mod eigen;

pub use eigen::{hermitian_eigenvalues, singular_values};
#[doc(hidden)]
pub use eigen::singular_values_gram;

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense complex matrix, row-major.
pub type CMatrix = Array2<Complex64>;
/// Dense complex vector.
pub type CVector = Array1<Complex64>;

/// Default tolerance for density-matrix validation.
pub const DEFAULT_VALIDATION_TOL: f64 = 1e-10;

/// Which tensor factor an operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Subsystem {
    A,
    B,
}

/// Complex identity matrix of dimension `d`.
pub fn identity(d: usize) -> CMatrix {
    Array2::eye(d)
}

/// Conjugate transpose.
pub fn dagger(m: &CMatrix) -> CMatrix {
    m.t().mapv(|z| z.conj())
}

/// Trace of a square matrix.
pub fn trace(m: &CMatrix) -> Complex64 {
    m.diag().sum()
}

/// Largest entry magnitude.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Frobenius norm.
pub fn frobenius_norm(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest deviation from hermiticity, `max_ij |m_ij - conj(m_ji)|`.
pub fn hermiticity_residual(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let d = (m[[i, j]] - m[[j, i]].conj()).norm();
            worst = worst.max(d);
        }
    }
    worst
}

/// Kronecker product `a (x) b`.
///
/// Entry `[(i*rows_b + k), (j*cols_b + l)] = a[i,j] * b[k,l]`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ra, ca) = (a.nrows(), a.ncols());
    let (rb, cb) = (b.nrows(), b.ncols());
    let mut out = Array2::zeros((ra * rb, ca * cb));
    for i in 0..ra {
        for j in 0..ca {
            let aij = a[[i, j]];
            if aij == Complex64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    out[[i * rb + k, j * cb + l]] = aij * b[[k, l]];
                }
            }
        }
    }
    out
}

/// Trace norm (sum of singular values).
///
/// Hermitian inputs take the direct eigenvalue route `sum |lambda_i|`; general
/// matrices go through the one-sided Jacobi singular-value sweep.
pub fn trace_norm(m: &CMatrix) -> f64 {
    let scale = max_abs(m);
    if scale == 0.0 {
        return 0.0;
    }
    if m.nrows() == m.ncols() && hermiticity_residual(m) <= 1e-12 * scale {
        hermitian_eigenvalues(m).iter().map(|l| l.abs()).sum()
    } else {
        singular_values(m).iter().sum()
    }
}

/// A validated density matrix with an optional bipartition.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: CMatrix,
    bipartition: Option<(usize, usize)>,
}

impl DensityMatrix {
    /// Validates and wraps a candidate matrix; see [`validate_density`].
    pub fn new(matrix: &CMatrix, tol: f64) -> Result<Self> {
        validate_density(matrix, tol)
    }

    /// Wraps a matrix that is valid by construction. Hermitian part enforced.
    pub(crate) fn from_trusted(matrix: CMatrix, bipartition: Option<(usize, usize)>) -> Self {
        let sym = symmetrize(&matrix);
        DensityMatrix {
            matrix: sym,
            bipartition,
        }
    }

    /// Pure state `|psi><psi| / <psi|psi>`.
    pub fn pure(psi: &CVector) -> Result<Self> {
        let n2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if n2 <= 0.0 || !n2.is_finite() {
            return Err(Error::InvalidParameter(
                "pure state requires a nonzero finite vector".into(),
            ));
        }
        let d = psi.len();
        let mut m = Array2::zeros((d, d));
        for i in 0..d {
            for j in 0..d {
                m[[i, j]] = psi[i] * psi[j].conj() / n2;
            }
        }
        Ok(DensityMatrix {
            matrix: m,
            bipartition: None,
        })
    }

    /// Maximally mixed state `I/d`.
    pub fn maximally_mixed(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDimension {
                dim: 0,
                reason: "dimension must be positive",
            });
        }
        let m = identity(d).mapv(|z| z / d as f64);
        Ok(DensityMatrix {
            matrix: m,
            bipartition: None,
        })
    }

    /// Attaches a bipartition `(d_a, d_b)`; `d_a * d_b` must equal the dimension.
    pub fn with_bipartition(mut self, d_a: usize, d_b: usize) -> Result<Self> {
        if d_a == 0 || d_b == 0 || d_a * d_b != self.dim() {
            return Err(Error::BadBipartition {
                d_a,
                d_b,
                dim: self.dim(),
            });
        }
        self.bipartition = Some((d_a, d_b));
        Ok(self)
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn bipartition(&self) -> Option<(usize, usize)> {
        self.bipartition
    }

    pub(crate) fn require_bipartition(&self) -> Result<(usize, usize)> {
        self.bipartition.ok_or(Error::MissingBipartition)
    }

    /// Purity `tr(rho^2)`, via the squared Frobenius norm.
    pub fn purity(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn trace(&self) -> Complex64 {
        trace(&self.matrix)
    }
}

fn symmetrize(m: &CMatrix) -> CMatrix {
    let n = m.nrows();
    let mut out = Array2::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            out[[i, j]] = 0.5 * (m[[i, j]] + m[[j, i]].conj());
        }
    }
    out
}

/// Checks the density-matrix invariants at tolerance `tol` and wraps the
/// Hermitian part `(M + M^dag)/2` on success.
///
/// The three failure modes are reported distinctly: hermiticity residual,
/// trace deviation, and the most negative eigenvalue.
pub fn validate_density(m: &CMatrix, tol: f64) -> Result<DensityMatrix> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let residual = hermiticity_residual(m);
    if residual > tol {
        return Err(Error::NotHermitian { residual, tol });
    }
    let sym = symmetrize(m);
    let deviation = (trace(&sym) - Complex64::new(1.0, 0.0)).norm();
    if deviation > tol {
        return Err(Error::TraceDeviation { deviation, tol });
    }
    let eigenvalues = hermitian_eigenvalues(&sym);
    let smallest = eigenvalues.first().copied().unwrap_or(0.0);
    if smallest < -tol {
        return Err(Error::NotPositive {
            eigenvalue: smallest,
            tol,
        });
    }
    Ok(DensityMatrix {
        matrix: sym,
        bipartition: None,
    })
}

/// Transposes the chosen subsystem only. The result is Hermitian but possibly
/// non-positive.
pub fn partial_transpose(rho: &DensityMatrix, subsystem: Subsystem) -> Result<CMatrix> {
    let (da, db) = rho.require_bipartition()?;
    let m = rho.matrix();
    let mut out = Array2::zeros((da * db, da * db));
    for a in 0..da {
        for b in 0..db {
            for a2 in 0..da {
                for b2 in 0..db {
                    let src = match subsystem {
                        Subsystem::B => [a * db + b2, a2 * db + b],
                        Subsystem::A => [a2 * db + b, a * db + b2],
                    };
                    out[[a * db + b, a2 * db + b2]] = m[src];
                }
            }
        }
    }
    Ok(out)
}

/// Traces out the chosen subsystem, returning the reduced state on the other.
pub fn partial_trace(rho: &DensityMatrix, traced: Subsystem) -> Result<DensityMatrix> {
    let (da, db) = rho.require_bipartition()?;
    let m = rho.matrix();
    let out = match traced {
        Subsystem::B => {
            let mut r = Array2::zeros((da, da));
            for a in 0..da {
                for a2 in 0..da {
                    let mut s = Complex64::new(0.0, 0.0);
                    for b in 0..db {
                        s += m[[a * db + b, a2 * db + b]];
                    }
                    r[[a, a2]] = s;
                }
            }
            r
        }
        Subsystem::A => {
            let mut r = Array2::zeros((db, db));
            for b in 0..db {
                for b2 in 0..db {
                    let mut s = Complex64::new(0.0, 0.0);
                    for a in 0..da {
                        s += m[[a * db + b, a * db + b2]];
                    }
                    r[[b, b2]] = s;
                }
            }
            r
        }
    };
    Ok(DensityMatrix::from_trusted(out, None))
}

/// Realignment map: returns the `d_a^2 x d_b^2` matrix with
/// `R[(i,j), (k,l)] = rho[(i,k), (j,l)]`.
///
/// Its singular values are the operator-Schmidt coefficients of the state, so
/// `trace_norm(realign(rho))` is the realignment criterion value.
pub fn realign(rho: &DensityMatrix) -> Result<CMatrix> {
    let (da, db) = rho.require_bipartition()?;
    let m = rho.matrix();
    let mut out = Array2::zeros((da * da, db * db));
    for i in 0..da {
        for j in 0..da {
            for k in 0..db {
                for l in 0..db {
                    out[[i * da + j, k * db + l]] = m[[i * db + k, j * db + l]];
                }
            }
        }
    }
    Ok(out)
}

/// An orthonormal basis of Hermitian operators: `tr(G_k G_l) = delta_kl`.
#[derive(Debug, Clone)]
pub struct HermitianOperatorBasis {
    dimension: usize,
    operators: Vec<CMatrix>,
}

impl HermitianOperatorBasis {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn operators(&self) -> &[CMatrix] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }
}

/// The normalized identity plus the `d^2 - 1` generalized Gell-Mann matrices,
/// ordered: identity, symmetric pairs, antisymmetric pairs, diagonal.
pub fn gell_mann_basis(d: usize) -> Result<HermitianOperatorBasis> {
    if d < 2 {
        return Err(Error::InvalidDimension {
            dim: d,
            reason: "operator basis needs dimension >= 2",
        });
    }
    let mut operators = Vec::with_capacity(d * d);
    let inv_sqrt_d = 1.0 / (d as f64).sqrt();
    operators.push(identity(d).mapv(|z| z * inv_sqrt_d));

    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    for j in 0..d {
        for k in j + 1..d {
            let mut sym = Array2::zeros((d, d));
            sym[[j, k]] = Complex64::new(inv_sqrt2, 0.0);
            sym[[k, j]] = Complex64::new(inv_sqrt2, 0.0);
            operators.push(sym);
        }
    }
    for j in 0..d {
        for k in j + 1..d {
            let mut asym = Array2::zeros((d, d));
            asym[[j, k]] = Complex64::new(0.0, -inv_sqrt2);
            asym[[k, j]] = Complex64::new(0.0, inv_sqrt2);
            operators.push(asym);
        }
    }
    for l in 1..d {
        let norm = 1.0 / ((l * (l + 1)) as f64).sqrt();
        let mut diag = Array2::zeros((d, d));
        for m in 0..l {
            diag[[m, m]] = Complex64::new(norm, 0.0);
        }
        diag[[l, l]] = Complex64::new(-(l as f64) * norm, 0.0);
        operators.push(diag);
    }

    Ok(HermitianOperatorBasis {
        dimension: d,
        operators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pauli_x() -> CMatrix {
        array![[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
    }

    fn bell_phi_plus() -> DensityMatrix {
        let psi = Array1::from(vec![
            c(std::f64::consts::FRAC_1_SQRT_2, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        ]);
        DensityMatrix::pure(&psi)
            .unwrap()
            .with_bipartition(2, 2)
            .unwrap()
    }

    #[test]
    fn kron_identity_case() {
        let i2 = identity(2);
        let k = kron(&i2, &i2);
        assert_eq!(k, identity(4));
    }

    #[test]
    fn kron_diagonal_projectors() {
        let a = array![[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]];
        let b = array![[c(0.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
        let k = kron(&a, &b);
        let expected = Array2::from_diag(&Array1::from(vec![
            c(0.0, 0.0),
            c(1.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
        ]));
        assert_eq!(k, expected);
    }

    #[test]
    fn kron_flips_both_qubits() {
        // (sigma_x (x) sigma_x) |00> = |11>
        let xx = kron(&pauli_x(), &pauli_x());
        let e00 = Array1::from(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let out = xx.dot(&e00);
        let expected = [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        for (o, e) in out.iter().zip(expected.iter()) {
            assert_abs_diff_eq!((o - e).norm(), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn trace_norm_identity_and_zero() {
        for d in [1usize, 2, 5, 9] {
            assert_abs_diff_eq!(trace_norm(&identity(d)), d as f64, epsilon = 1e-12);
        }
        let z = Array2::<Complex64>::zeros((4, 7));
        assert_eq!(trace_norm(&z), 0.0);
    }

    #[test]
    fn partial_transpose_of_bell_state() {
        // Eigenvalues {1/2, 1/2, 1/2, -1/2}; trace norm 2.
        let rho = bell_phi_plus();
        let pt = partial_transpose(&rho, Subsystem::B).unwrap();
        let ev = hermitian_eigenvalues(&pt);
        assert_abs_diff_eq!(ev[0], -0.5, epsilon = 1e-12);
        for l in &ev[1..] {
            assert_abs_diff_eq!(*l, 0.5, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(trace_norm(&pt), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn partial_transpose_is_involution() {
        let rho = bell_phi_plus();
        let pt = partial_transpose(&rho, Subsystem::B).unwrap();
        let back = partial_transpose(
            &DensityMatrix::from_trusted(pt, Some((2, 2))),
            Subsystem::B,
        )
        .unwrap();
        let diff = (&back - rho.matrix()).mapv(|z| z.norm()).sum();
        assert_abs_diff_eq!(diff, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn partial_transpose_keeps_product_states_positive() {
        let rho_a = array![[c(0.7, 0.0), c(0.1, 0.2)], [c(0.1, -0.2), c(0.3, 0.0)]];
        let rho_b = array![[c(0.6, 0.0), c(0.0, 0.1)], [c(0.0, -0.1), c(0.4, 0.0)]];
        let prod = DensityMatrix::from_trusted(kron(&rho_a, &rho_b), Some((2, 2)));
        let pt = partial_transpose(&prod, Subsystem::B).unwrap();
        let ev = hermitian_eigenvalues(&pt);
        assert!(ev[0] > -1e-14, "separable PT went negative: {ev:?}");
        assert_abs_diff_eq!(trace_norm(&pt), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn partial_trace_of_product_recovers_factor() {
        let rho_a = array![[c(0.7, 0.0), c(0.1, 0.2)], [c(0.1, -0.2), c(0.3, 0.0)]];
        let rho_b =
            DensityMatrix::maximally_mixed(3).unwrap().matrix().clone();
        let prod = DensityMatrix::from_trusted(kron(&rho_a, &rho_b), Some((2, 3)));
        let red_a = partial_trace(&prod, Subsystem::B).unwrap();
        let diff = (red_a.matrix() - &rho_a).mapv(|z| z.norm()).sum();
        assert_abs_diff_eq!(diff, 0.0, epsilon = 1e-13);

        let red_b = partial_trace(&prod, Subsystem::A).unwrap();
        let diff_b = (red_b.matrix() - &rho_b).mapv(|z| z.norm()).sum();
        assert_abs_diff_eq!(diff_b, 0.0, epsilon = 1e-13);
    }

    #[test]
    fn partial_trace_of_bell_state_is_maximally_mixed() {
        let rho = bell_phi_plus();
        let red = partial_trace(&rho, Subsystem::B).unwrap();
        let expected = DensityMatrix::maximally_mixed(2).unwrap();
        let diff = (red.matrix() - expected.matrix()).mapv(|z| z.norm()).sum();
        assert_abs_diff_eq!(diff, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(red.trace().re, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn realign_values_for_known_states() {
        // Product pure state: rank one, trace norm 1.
        let e0 = Array1::from(vec![c(1.0, 0.0), c(0.0, 0.0)]);
        let pure_a = DensityMatrix::pure(&e0).unwrap().matrix().clone();
        let prod = DensityMatrix::from_trusted(kron(&pure_a, &pure_a), Some((2, 2)));
        let r = realign(&prod).unwrap();
        let s = singular_values(&r);
        assert_abs_diff_eq!(s[0], 1.0, epsilon = 1e-12);
        assert!(s[1..].iter().all(|x| *x < 1e-13));

        // Bell state: trace norm 2.
        assert_abs_diff_eq!(
            trace_norm(&realign(&bell_phi_plus()).unwrap()),
            2.0,
            epsilon = 1e-12
        );

        // I/4 on 2x2: trace norm 1/2.
        let mixed = DensityMatrix::maximally_mixed(4)
            .unwrap()
            .with_bipartition(2, 2)
            .unwrap();
        assert_abs_diff_eq!(trace_norm(&realign(&mixed).unwrap()), 0.5, epsilon = 1e-13);
    }

    #[test]
    fn gell_mann_basis_d2_is_normalized_pauli() {
        let basis = gell_mann_basis(2).unwrap();
        assert_eq!(basis.len(), 4);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        // Identity / sqrt(2)
        let diff = (&basis.operators()[0] - &identity(2).mapv(|z| z * s))
            .mapv(|z| z.norm())
            .sum();
        assert_abs_diff_eq!(diff, 0.0, epsilon = 1e-15);
        // sigma_x / sqrt(2)
        let sx = pauli_x().mapv(|z| z * s);
        let diff = (&basis.operators()[1] - &sx).mapv(|z| z.norm()).sum();
        assert_abs_diff_eq!(diff, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn gell_mann_basis_is_trace_orthonormal() {
        for d in 2..=6 {
            let basis = gell_mann_basis(d).unwrap();
            assert_eq!(basis.len(), d * d);
            for (i, gi) in basis.operators().iter().enumerate() {
                assert_abs_diff_eq!(hermiticity_residual(gi), 0.0, epsilon = 1e-15);
                for (j, gj) in basis.operators().iter().enumerate() {
                    let t = trace(&gi.dot(gj));
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert_abs_diff_eq!(t.re, expected, epsilon = 1e-14);
                    assert_abs_diff_eq!(t.im, 0.0, epsilon = 1e-14);
                }
            }
        }
    }

    #[test]
    fn gell_mann_basis_d3_structure() {
        let basis = gell_mann_basis(3).unwrap();
        assert_eq!(basis.len(), 9);
        let diagonal = basis
            .operators()
            .iter()
            .filter(|g| {
                (0..3).all(|i| (0..3).all(|j| i == j || g[[i, j]].norm() < 1e-15))
            })
            .count();
        assert_eq!(diagonal, 3);
        assert_eq!(basis.len() - diagonal, 6);
    }

    #[test]
    fn gell_mann_rejects_dimension_below_two() {
        assert!(matches!(
            gell_mann_basis(1),
            Err(Error::InvalidDimension { .. })
        ));
    }

    #[test]
    fn validate_density_accepts_and_rejects() {
        // I/d accepted.
        let ok = validate_density(DensityMatrix::maximally_mixed(3).unwrap().matrix(), 1e-10);
        assert!(ok.is_ok());

        // Negative eigenvalue rejected distinctly.
        let bad = array![[c(1.5, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-0.5, 0.0)]];
        assert!(matches!(
            validate_density(&bad, 1e-10),
            Err(Error::NotPositive { .. })
        ));

        // Trace failure reported distinctly.
        let traceless = array![[c(0.9, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.3, 0.0)]];
        assert!(matches!(
            validate_density(&traceless, 1e-10),
            Err(Error::TraceDeviation { .. })
        ));

        // Hermiticity failure reported distinctly.
        let skew = array![[c(0.5, 0.0), c(0.3, 0.0)], [c(0.0, 0.0), c(0.5, 0.0)]];
        assert!(matches!(
            validate_density(&skew, 1e-10),
            Err(Error::NotHermitian { .. })
        ));

        // Sub-tolerance asymmetry is accepted and symmetrized away.
        let mut nearly = DensityMatrix::maximally_mixed(2).unwrap().matrix().clone();
        nearly[[0, 1]] = c(1e-15, 0.0);
        let wrapped = validate_density(&nearly, 1e-10).unwrap();
        assert_abs_diff_eq!(
            hermiticity_residual(wrapped.matrix()),
            0.0,
            epsilon = 1e-16
        );
    }

    #[test]
    fn density_matrix_trace_norm_is_one() {
        let rho = bell_phi_plus();
        assert_abs_diff_eq!(trace_norm(rho.matrix()), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn bipartition_must_match_dimension() {
        let rho = DensityMatrix::maximally_mixed(6).unwrap();
        assert!(rho.clone().with_bipartition(2, 3).is_ok());
        assert!(matches!(
            rho.with_bipartition(2, 2),
            Err(Error::BadBipartition { .. })
        ));
    }

    #[test]
    fn missing_bipartition_is_reported() {
        let rho = DensityMatrix::maximally_mixed(4).unwrap();
        assert!(matches!(realign(&rho), Err(Error::MissingBipartition)));
        assert!(matches!(
            partial_transpose(&rho, Subsystem::B),
            Err(Error::MissingBipartition)
        ));
        assert!(matches!(
            partial_trace(&rho, Subsystem::B),
            Err(Error::MissingBipartition)
        ));
    }
}
