//! State families and seeded random ensembles.
//!
//! Every generator is a pure function of `(spec, stream index)`: ensembles
//! derive one RNG stream per sample via [`crate::rng::stream_rng`], so state
//! streams are reproducible regardless of evaluation order.

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Normal, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::{singular_values, CMatrix, CVector, DensityMatrix};
use crate::rng::stream_rng;

/// Standard complex Gaussian matrix: entries `(x + iy)/sqrt(2)` with
/// `x, y ~ N(0,1)`.
pub fn complex_ginibre<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    Array2::from_shape_fn((rows, cols), |_| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re * scale, im * scale)
    })
}

/// Haar-random pure state: normalized vector of standard complex Gaussians.
pub fn haar_random_pure<R: Rng>(d: usize, rng: &mut R) -> CVector {
    let g = complex_ginibre(d, 1, rng);
    let norm: f64 = g.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    Array1::from_iter(g.iter().map(|z| z / norm))
}

/// Haar-random unitary via QR of a Ginibre matrix (modified Gram-Schmidt with
/// positive diagonal).
pub fn random_unitary<R: Rng>(d: usize, rng: &mut R) -> CMatrix {
    let g = complex_ginibre(d, d, rng);
    let mut q = Array2::<Complex64>::zeros((d, d));
    for j in 0..d {
        let mut v: Vec<Complex64> = (0..d).map(|i| g[[i, j]]).collect();
        // Two orthogonalization passes keep the columns orthonormal to ~1e-15.
        for _ in 0..2 {
            for pred in 0..j {
                let mut overlap = Complex64::new(0.0, 0.0);
                for i in 0..d {
                    overlap += q[[i, pred]].conj() * v[i];
                }
                for i in 0..d {
                    let t = q[[i, pred]] * overlap;
                    v[i] -= t;
                }
            }
        }
        let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for i in 0..d {
            q[[i, j]] = v[i] / norm;
        }
    }
    q
}

/// Random mixed state from the induced measure `(N, K)`: partial trace over a
/// `K`-dimensional environment of a Haar pure state, realized as
/// `G G^dag / tr(G G^dag)` for an `N x K` Ginibre matrix.
pub fn induced_random_mixed<R: Rng>(n: usize, k: usize, rng: &mut R) -> DensityMatrix {
    assert!(n >= 1 && k >= 1, "induced measure needs N, K >= 1");
    let g = complex_ginibre(n, k, rng);
    let mut m = Array2::<Complex64>::zeros((n, n));
    for i in 0..n {
        for j in i..n {
            let mut s = Complex64::new(0.0, 0.0);
            for l in 0..k {
                s += g[[i, l]] * g[[j, l]].conj();
            }
            m[[i, j]] = s;
            m[[j, i]] = s.conj();
        }
    }
    let tr: f64 = (0..n).map(|i| m[[i, i]].re).sum();
    let m = m.mapv(|z| z / tr);
    DensityMatrix::from_trusted(m, None)
}

/// The maximally entangled state `sum_k |kk> / sqrt(d)` on a `d x d`
/// bipartition.
pub fn max_entangled(d: usize) -> Result<DensityMatrix> {
    if d < 2 {
        return Err(Error::InvalidDimension {
            dim: d,
            reason: "maximal entanglement needs local dimension >= 2",
        });
    }
    let mut psi = Array1::zeros(d * d);
    let amp = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
    for k in 0..d {
        psi[k * d + k] = amp;
    }
    DensityMatrix::pure(&psi)?.with_bipartition(d, d)
}

/// White-noise mixture `q rho + (1-q) I/d` on the same total dimension,
/// keeping the bipartition.
pub fn white_noise_mix(rho: &DensityMatrix, q: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidParameter(format!(
            "noise weight q must be in [0,1], got {q}"
        )));
    }
    let d = rho.dim();
    let off = (1.0 - q) / d as f64;
    let mut m = rho.matrix().mapv(|z| z * q);
    for i in 0..d {
        m[[i, i]] += Complex64::new(off, 0.0);
    }
    Ok(DensityMatrix::from_trusted(m, rho.bipartition()))
}

/// The 3x3 bound entangled family with parameter `x in [0, 1]`,
/// normalization `1/(8x+1)`. PPT for every `x`, entangled for `0 < x < 1`.
pub fn horodecki_state(x: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidParameter(format!(
            "family parameter x must be in [0,1], got {x}"
        )));
    }
    let h = (1.0 + x) / 2.0;
    let s = (1.0 - x * x).sqrt() / 2.0;
    let mut m = Array2::<f64>::zeros((9, 9));
    for (i, j) in [(0, 0), (1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (7, 7)] {
        m[[i, j]] = x;
    }
    for (i, j) in [(0, 4), (4, 0), (0, 8), (8, 0), (4, 8), (8, 4)] {
        m[[i, j]] = x;
    }
    m[[6, 6]] = h;
    m[[8, 8]] = h;
    m[[6, 8]] = s;
    m[[8, 6]] = s;
    let norm = 1.0 / (8.0 * x + 1.0);
    let cm = m.mapv(|v| Complex64::new(v * norm, 0.0));
    Ok(DensityMatrix::from_trusted(cm, Some((3, 3))))
}

/// Parameters of the chessboard family; `m5` and `m6` appear in denominators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChessboardParams {
    pub m: [f64; 6],
}

impl ChessboardParams {
    pub fn new(m: [f64; 6]) -> Result<Self> {
        if m.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(
                "chessboard parameters must be finite".into(),
            ));
        }
        if m[4] == 0.0 || m[5] == 0.0 {
            return Err(Error::InvalidParameter(
                "chessboard parameters m5 and m6 must be nonzero".into(),
            ));
        }
        Ok(ChessboardParams { m })
    }
}

/// The 3x3 chessboard bound entangled state `N sum_j |V_j><V_j|` built from
/// four unnormalized vectors, components in A-major order
/// `|00,01,02; 10,11,12; 20,21,22>`.
pub fn chessboard_state(params: &ChessboardParams) -> Result<DensityMatrix> {
    let [m1, m2, m3, m4, m5, m6] = params.m;
    if m5 == 0.0 || m6 == 0.0 {
        return Err(Error::InvalidParameter(
            "chessboard parameters m5 and m6 must be nonzero".into(),
        ));
    }
    let vectors: [[f64; 9]; 4] = [
        [m5, 0.0, m1 * m3 / m6, 0.0, m6, 0.0, 0.0, 0.0, 0.0],
        [0.0, m1, 0.0, m2, 0.0, m3, 0.0, 0.0, 0.0],
        [m6, 0.0, 0.0, 0.0, -m5, 0.0, m1 * m4 / m5, 0.0, 0.0],
        [0.0, m2, 0.0, -m1, 0.0, 0.0, 0.0, m4, 0.0],
    ];
    let mut m = Array2::<f64>::zeros((9, 9));
    let mut norm = 0.0;
    for v in &vectors {
        for i in 0..9 {
            for j in 0..9 {
                m[[i, j]] += v[i] * v[j];
            }
            norm += v[i] * v[i];
        }
    }
    let cm = m.mapv(|v| Complex64::new(v / norm, 0.0));
    Ok(DensityMatrix::from_trusted(cm, Some((3, 3))))
}

/// Six independent `Normal(0, 2)` parameter draws; `m5` and `m6` are redrawn
/// while their magnitude is below `1e-6`.
pub fn random_chessboard<R: Rng>(rng: &mut R) -> ChessboardParams {
    let normal = Normal::new(0.0, 2.0).expect("fixed parameters");
    let mut m = [0.0f64; 6];
    for (idx, slot) in m.iter_mut().enumerate() {
        let mut v: f64 = rng.sample(normal);
        if idx >= 4 {
            while v.abs() < 1e-6 {
                v = rng.sample(normal);
            }
        }
        *slot = v;
    }
    ChessboardParams { m }
}

/// Schmidt coefficients of a bipartite pure state: the singular values of the
/// `d_a x d_b` reshape of the amplitude vector.
pub fn schmidt_coefficients(psi: &CVector, dims: (usize, usize)) -> Result<Vec<f64>> {
    let (da, db) = dims;
    if psi.len() != da * db {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} cannot split as {}x{}",
            psi.len(),
            da,
            db
        )));
    }
    let m = Array2::from_shape_fn((da, db), |(a, b)| psi[a * db + b]);
    Ok(singular_values(&m))
}

/// Random-ensemble kinds used by the experiment harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnsembleKind {
    /// Haar-random bipartite pure states.
    HaarPure,
    /// Induced measure `(N, K)` with `N = d_a * d_b`.
    Induced { k: usize },
    /// Hilbert-Schmidt measure, the induced measure with `K = N`.
    HilbertSchmidt,
    /// Random chessboard states on a 3x3 bipartition.
    ChessboardRandom,
}

/// A deterministic ensemble: kind, bipartition, sample count, and master seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub dims: (usize, usize),
    pub count: usize,
    pub seed: u64,
}

impl EnsembleSpec {
    pub fn new(kind: EnsembleKind, dims: (usize, usize), count: usize, seed: u64) -> Result<Self> {
        if dims.0 < 2 || dims.1 < 2 {
            return Err(Error::InvalidParameter(format!(
                "ensemble needs local dimensions >= 2, got {}x{}",
                dims.0, dims.1
            )));
        }
        if count == 0 {
            return Err(Error::InvalidParameter("ensemble count must be >= 1".into()));
        }
        if let EnsembleKind::Induced { k } = kind {
            if k == 0 {
                return Err(Error::InvalidParameter(
                    "induced measure needs K >= 1".into(),
                ));
            }
        }
        if kind == EnsembleKind::ChessboardRandom && dims != (3, 3) {
            return Err(Error::InvalidParameter(
                "chessboard ensembles require a 3x3 bipartition".into(),
            ));
        }
        Ok(EnsembleSpec {
            kind,
            dims,
            count,
            seed,
        })
    }

    /// Stable label used in experiment reports.
    pub fn label(&self) -> String {
        let (da, db) = self.dims;
        match self.kind {
            EnsembleKind::HaarPure => format!("haar({da}x{db})"),
            EnsembleKind::Induced { k } => format!("induced({},{k})", da * db),
            EnsembleKind::HilbertSchmidt => format!("hs({da}x{db})"),
            EnsembleKind::ChessboardRandom => "chessboard".to_string(),
        }
    }

    /// The `index`-th state of the ensemble, independent of evaluation order.
    pub fn state_at(&self, index: usize) -> DensityMatrix {
        let mut rng = stream_rng(self.seed, index as u64);
        let (da, db) = self.dims;
        let n = da * db;
        match self.kind {
            EnsembleKind::HaarPure => {
                let psi = haar_random_pure(n, &mut rng);
                DensityMatrix::pure(&psi)
                    .expect("haar vector is valid")
                    .with_bipartition(da, db)
                    .expect("dims validated at construction")
            }
            EnsembleKind::Induced { k } => induced_random_mixed(n, k, &mut rng)
                .with_bipartition(da, db)
                .expect("dims validated at construction"),
            EnsembleKind::HilbertSchmidt => induced_random_mixed(n, n, &mut rng)
                .with_bipartition(da, db)
                .expect("dims validated at construction"),
            EnsembleKind::ChessboardRandom => {
                let params = random_chessboard(&mut rng);
                chessboard_state(&params).expect("redraw keeps denominators nonzero")
            }
        }
    }

    /// Iterates the whole ensemble in index order.
    pub fn states(&self) -> impl Iterator<Item = DensityMatrix> + '_ {
        (0..self.count).map(|i| self.state_at(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kron, partial_trace, trace_norm, validate_density, Subsystem};
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn haar_states_are_normalized_and_deterministic() {
        let mut rng = stream_rng(1, 0);
        let psi = haar_random_pure(5, &mut rng);
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);

        let mut rng2 = stream_rng(1, 0);
        let psi2 = haar_random_pure(5, &mut rng2);
        for (a, b) in psi.iter().zip(psi2.iter()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }

    #[test]
    fn haar_marginal_has_mean_one_over_d() {
        let d = 4;
        let draws = 100_000;
        let mut rng = stream_rng(2, 0);
        let mut sum = 0.0;
        for _ in 0..draws {
            let psi = haar_random_pure(d, &mut rng);
            sum += psi[0].norm_sqr();
        }
        let mean = sum / draws as f64;
        // Var of a Haar marginal is (d-1)/(d^2 (d+1)).
        let sigma = ((d as f64 - 1.0) / ((d * d) as f64 * (d as f64 + 1.0)) / draws as f64).sqrt();
        assert!(
            (mean - 1.0 / d as f64).abs() <= 3.0 * sigma,
            "mean {mean} vs {} +- {sigma}",
            1.0 / d as f64
        );
    }

    #[test]
    fn induced_measure_matches_purity_moment() {
        // Mean purity of the (N, K) measure is (N + K)/(N K + 1).
        let (n, k) = (4usize, 4usize);
        let draws = 10_000;
        let mut rng = stream_rng(3, 0);
        let mut purities = Vec::with_capacity(draws);
        for _ in 0..draws {
            purities.push(induced_random_mixed(n, k, &mut rng).purity());
        }
        let mean: f64 = purities.iter().sum::<f64>() / draws as f64;
        let var: f64 =
            purities.iter().map(|p| (p - mean) * (p - mean)).sum::<f64>() / draws as f64;
        let se = (var / draws as f64).sqrt();
        let expected = (n + k) as f64 / ((n * k + 1) as f64);
        assert!(
            (mean - expected).abs() <= 3.0 * se + 1e-4,
            "mean {mean} vs {expected} +- {se}"
        );

        // Large K concentrates toward the maximally mixed state.
        let k_big = 64usize;
        let mut sum = 0.0;
        let draws_big = 2000;
        for _ in 0..draws_big {
            sum += induced_random_mixed(n, k_big, &mut rng).purity();
        }
        let mean_big = sum / draws_big as f64;
        let expected_big = (n + k_big) as f64 / ((n * k_big + 1) as f64);
        assert!((mean_big - expected_big).abs() < 5e-3);
    }

    #[test]
    fn induced_k1_is_pure() {
        let mut rng = stream_rng(4, 0);
        let rho = induced_random_mixed(4, 1, &mut rng);
        assert_abs_diff_eq!(rho.purity(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn generators_pass_validation() {
        let mut rng = stream_rng(5, 0);
        for _ in 0..25 {
            let rho = induced_random_mixed(6, 5, &mut rng);
            assert!(validate_density(rho.matrix(), 1e-10).is_ok());
        }
        for x in [0.0, 0.3, 0.77, 1.0] {
            let rho = horodecki_state(x).unwrap();
            assert!(validate_density(rho.matrix(), 1e-10).is_ok());
            assert_abs_diff_eq!(rho.trace().re, 1.0, epsilon = 1e-12);
        }
        for i in 0..25 {
            let mut rng = stream_rng(6, i);
            let rho = chessboard_state(&random_chessboard(&mut rng)).unwrap();
            assert!(validate_density(rho.matrix(), 1e-10).is_ok());
        }
    }

    #[test]
    fn horodecki_x0_is_a_product_projector() {
        // At x = 0 the family collapses to |2> (x) (|0> + |2>)/sqrt(2).
        let rho = horodecki_state(0.0).unwrap();
        let e2 = Array1::from(vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let phi = Array1::from(vec![c(s, 0.0), c(0.0, 0.0), c(s, 0.0)]);
        let left = DensityMatrix::pure(&e2).unwrap();
        let right = DensityMatrix::pure(&phi).unwrap();
        let product = kron(left.matrix(), right.matrix());
        let diff = trace_norm(&(rho.matrix() - &product));
        assert!(diff <= 1e-13);
    }

    #[test]
    fn horodecki_rejects_out_of_range() {
        assert!(horodecki_state(-0.1).is_err());
        assert!(horodecki_state(1.1).is_err());
    }

    #[test]
    fn chessboard_normalization_and_rank() {
        let params = ChessboardParams::new([1.0; 6]).unwrap();
        let rho = chessboard_state(&params).unwrap();
        assert_abs_diff_eq!(rho.trace().re, 1.0, epsilon = 1e-13);

        let mut rng = stream_rng(7, 0);
        for _ in 0..20 {
            let rho = chessboard_state(&random_chessboard(&mut rng)).unwrap();
            let ev = crate::linalg::hermitian_eigenvalues(rho.matrix());
            let rank = ev.iter().filter(|l| **l > 1e-12).count();
            assert!(rank <= 4, "chessboard rank {rank} > 4");
        }
    }

    #[test]
    fn chessboard_rejects_zero_denominators() {
        assert!(ChessboardParams::new([1.0, 1.0, 1.0, 1.0, 0.0, 1.0]).is_err());
        assert!(ChessboardParams::new([1.0, 1.0, 1.0, 1.0, 1.0, 0.0]).is_err());
    }

    #[test]
    fn chessboard_draw_moments() {
        let draws = 100_000;
        let mut rng = stream_rng(8, 0);
        let mut sum = 0.0;
        let mut sum2 = 0.0;
        for _ in 0..draws {
            let p = random_chessboard(&mut rng);
            sum += p.m[0];
            sum2 += p.m[0] * p.m[0];
        }
        let mean = sum / draws as f64;
        let std = (sum2 / draws as f64 - mean * mean).sqrt();
        assert!(mean.abs() <= 3.0 * 2.0 / (draws as f64).sqrt());
        assert!((std - 2.0).abs() / 2.0 <= 0.02, "std {std}");

        // Determinism of redraws included.
        let a = random_chessboard(&mut stream_rng(9, 3));
        let b = random_chessboard(&mut stream_rng(9, 3));
        assert_eq!(a, b);
    }

    #[test]
    fn max_entangled_reductions_are_maximally_mixed() {
        for d in [2usize, 3] {
            let rho = max_entangled(d).unwrap();
            let red = partial_trace(&rho, Subsystem::B).unwrap();
            let target = DensityMatrix::maximally_mixed(d).unwrap();
            let diff = trace_norm(&(red.matrix() - target.matrix()));
            assert!(diff <= 1e-13);
        }
        assert!(max_entangled(1).is_err());
    }

    #[test]
    fn white_noise_endpoints_and_positivity() {
        let rho = max_entangled(2).unwrap();
        let at_one = white_noise_mix(&rho, 1.0).unwrap();
        assert!(trace_norm(&(at_one.matrix() - rho.matrix())) <= 1e-15);

        let at_zero = white_noise_mix(&rho, 0.0).unwrap();
        let mixed = DensityMatrix::maximally_mixed(4).unwrap();
        assert!(trace_norm(&(at_zero.matrix() - mixed.matrix())) <= 1e-15);

        let halfway = white_noise_mix(&rho, 0.5).unwrap();
        assert!(validate_density(halfway.matrix(), 1e-10).is_ok());
        assert_eq!(halfway.bipartition(), Some((2, 2)));

        assert!(white_noise_mix(&rho, 1.5).is_err());
        assert!(white_noise_mix(&rho, -0.1).is_err());
    }

    #[test]
    fn schmidt_coefficients_of_bell_state() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi = Array1::from(vec![c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)]);
        let lambda = schmidt_coefficients(&psi, (2, 2)).unwrap();
        assert_abs_diff_eq!(lambda[0], s, epsilon = 1e-12);
        assert_abs_diff_eq!(lambda[1], s, epsilon = 1e-12);
        assert!(schmidt_coefficients(&psi, (2, 3)).is_err());
    }

    #[test]
    fn ensembles_are_reproducible_and_labeled() {
        let spec = EnsembleSpec::new(EnsembleKind::HilbertSchmidt, (2, 2), 5, 11).unwrap();
        assert_eq!(spec.label(), "hs(2x2)");
        let a = spec.state_at(3);
        let b = spec.state_at(3);
        assert_eq!(a.matrix(), b.matrix());

        let induced = EnsembleSpec::new(EnsembleKind::Induced { k: 6 }, (2, 2), 5, 11).unwrap();
        assert_eq!(induced.label(), "induced(4,6)");

        assert!(EnsembleSpec::new(EnsembleKind::ChessboardRandom, (2, 2), 5, 1).is_err());
        assert!(EnsembleSpec::new(EnsembleKind::Induced { k: 0 }, (2, 2), 5, 1).is_err());
        assert!(EnsembleSpec::new(EnsembleKind::HaarPure, (2, 2), 0, 1).is_err());
    }

    #[test]
    fn random_unitary_is_unitary() {
        let mut rng = stream_rng(10, 0);
        for d in [2usize, 5, 10] {
            let u = random_unitary(d, &mut rng);
            let prod = u.dot(&crate::linalg::dagger(&u));
            let res = crate::linalg::max_abs(&(&prod - &crate::linalg::identity(d)));
            assert!(res <= 1e-13, "unitarity residual {res}");
        }
    }
}
