//! SIC POVMs in dimensions 2..7: construction from a fiducial vector via
//! Weyl-Heisenberg displacements, certification, Born-rule probabilities, and
//! linear state reconstruction.

mod search;

pub use search::{fiducial_search, fiducial_search_with, SearchConfig};

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock, RwLock};

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{identity, max_abs, CMatrix, CVector, DensityMatrix};

/// Certification threshold: a fiducial is certified when its maximum
/// pairwise-fidelity deviation stays below this.
pub const DEFAULT_CERT_TOL: f64 = 1e-9;

/// Largest dimension the fiducial machinery supports.
pub const MAX_DIMENSION: usize = 7;

/// Master seed used by [`SicLibrary`] when the caller does not supply one.
pub const DEFAULT_LIBRARY_SEED: u64 = 0x51c_f1d;

/// Displacement generator tag stored in cache files.
const GENERATOR_TAG: &str = "XjZk";

pub(crate) fn omega_powers(d: usize) -> Vec<Complex64> {
    (0..d)
        .map(|t| {
            let angle = 2.0 * std::f64::consts::PI * t as f64 / d as f64;
            Complex64::from_polar(1.0, angle)
        })
        .collect()
}

/// Applies the displacement `X^j Z^k` to `psi`:
/// `(D psi)_i = omega^(k (i-j)) psi_(i-j mod d)`.
pub(crate) fn displace(
    j: usize,
    k: usize,
    psi: &[Complex64],
    omega: &[Complex64],
    out: &mut [Complex64],
) {
    let d = psi.len();
    for (i, o) in out.iter_mut().enumerate() {
        let src = (i + d - j) % d;
        *o = omega[(k * src) % d] * psi[src];
    }
}

/// Adjoint displacement `(X^j Z^k)^dag` applied to `psi`.
pub(crate) fn displace_adjoint(
    j: usize,
    k: usize,
    psi: &[Complex64],
    omega: &[Complex64],
    out: &mut [Complex64],
) {
    let d = psi.len();
    for (i, o) in out.iter_mut().enumerate() {
        *o = omega[(k * i) % d].conj() * psi[(i + j) % d];
    }
}

/// The Weyl-Heisenberg displacement matrices `D_{jk} = X^j Z^k` for
/// `j, k in 0..d`, indexed as `m = j*d + k`. Each is unitary; `D_{00} = I`.
pub fn wh_displacements(d: usize) -> Result<Vec<CMatrix>> {
    if d < 2 {
        return Err(Error::InvalidDimension {
            dim: d,
            reason: "displacements need dimension >= 2",
        });
    }
    let omega = omega_powers(d);
    let mut out = Vec::with_capacity(d * d);
    for j in 0..d {
        for k in 0..d {
            let mut m = Array2::zeros((d, d));
            for i in 0..d {
                let col = (i + d - j) % d;
                m[[i, col]] = omega[(k * col) % d];
            }
            out.push(m);
        }
    }
    Ok(out)
}

/// Maximum deviation of the displacement-orbit fidelities from the
/// equiangular target `1/(d+1)`, over all `(j,k) != (0,0)`.
pub(crate) fn fiducial_residual(psi: &[Complex64]) -> f64 {
    let d = psi.len();
    let omega = omega_powers(d);
    let target = 1.0 / (d as f64 + 1.0);
    let mut shifted = vec![Complex64::new(0.0, 0.0); d];
    let mut worst = 0.0f64;
    for j in 0..d {
        for k in 0..d {
            if j == 0 && k == 0 {
                continue;
            }
            displace(j, k, psi, &omega, &mut shifted);
            let overlap: Complex64 = psi
                .iter()
                .zip(shifted.iter())
                .map(|(a, b)| a.conj() * b)
                .sum();
            worst = worst.max((overlap.norm_sqr() - target).abs());
        }
    }
    worst
}

/// A unit vector whose Weyl-Heisenberg orbit forms (approximately) a SIC POVM.
#[derive(Debug, Clone)]
pub struct Fiducial {
    dimension: usize,
    amplitudes: CVector,
    residual: f64,
    seed: Option<u64>,
}

impl Fiducial {
    /// Wraps a candidate vector, normalizing and measuring its SIC residual.
    pub fn from_vector(amplitudes: CVector, seed: Option<u64>) -> Result<Self> {
        let d = amplitudes.len();
        if !(2..=MAX_DIMENSION).contains(&d) {
            return Err(Error::InvalidDimension {
                dim: d,
                reason: "fiducials are supported for dimensions 2..=7",
            });
        }
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm <= 0.0 || !norm.is_finite() {
            return Err(Error::InvalidParameter(
                "fiducial vector must be nonzero and finite".into(),
            ));
        }
        let normalized = amplitudes.mapv(|z| z / norm);
        let residual = fiducial_residual(normalized.as_slice().expect("contiguous"));
        Ok(Fiducial {
            dimension: d,
            amplitudes: normalized,
            residual,
            seed,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    /// Maximum pairwise-fidelity deviation achieved by the orbit.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn is_certified(&self, tol: f64) -> bool {
        self.residual <= tol
    }

    /// Frame potential of the displaced orbit: the sum of `|<psi_a|psi_b>|^4`
    /// over all ordered pairs of the `d^2` orbit states. SIC fiducials attain
    /// the global minimum `2 d^3 / (d+1)`.
    pub fn frame_potential(&self) -> f64 {
        frame_potential(self)
    }
}

/// See [`Fiducial::frame_potential`].
pub fn frame_potential(fid: &Fiducial) -> f64 {
    let psi = fid.amplitudes.as_slice().expect("contiguous");
    let d = fid.dimension;
    let omega = omega_powers(d);
    let mut shifted = vec![Complex64::new(0.0, 0.0); d];
    let mut sum = 0.0;
    for j in 0..d {
        for k in 0..d {
            displace(j, k, psi, &omega, &mut shifted);
            let overlap: Complex64 = psi
                .iter()
                .zip(shifted.iter())
                .map(|(a, b)| a.conj() * b)
                .sum();
            sum += overlap.norm_sqr().powi(2);
        }
    }
    // Every ordered pair of orbit states reduces to one displacement overlap,
    // each counted d^2 times.
    (d * d) as f64 * sum
}

/// Known exact fiducials: d=2 (Bloch vector (1,1,1)/sqrt(3)) and
/// d=3 ((0, 1, -1)/sqrt(2)).
pub fn exact_fiducial(d: usize) -> Option<Fiducial> {
    let amplitudes: Vec<Complex64> = match d {
        2 => {
            let ct = 1.0 / 3.0f64.sqrt();
            let a = ((1.0 + ct) / 2.0).sqrt();
            let b = ((1.0 - ct) / 2.0).sqrt();
            vec![
                Complex64::new(a, 0.0),
                Complex64::from_polar(b, std::f64::consts::FRAC_PI_4),
            ]
        }
        3 => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(s, 0.0),
                Complex64::new(-s, 0.0),
            ]
        }
        _ => return None,
    };
    Some(Fiducial::from_vector(Array1::from(amplitudes), None).expect("exact fiducial is valid"))
}

/// A certified SIC POVM: `d^2` subnormalized projectors plus their rescaled
/// elements `E_k = sqrt(d(d+1)/2) Pi_k`.
#[derive(Debug, Clone)]
pub struct SicPovm {
    dimension: usize,
    states: Vec<CVector>,
    projectors: Vec<CMatrix>,
    normalized_elements: Vec<CMatrix>,
    residual: f64,
}

impl SicPovm {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The orbit states `|psi_k> = D_k |psi>`.
    pub fn states(&self) -> &[CVector] {
        &self.states
    }

    /// Subnormalized projectors `Pi_k = |psi_k><psi_k| / d`.
    pub fn projectors(&self) -> &[CMatrix] {
        &self.projectors
    }

    /// Rescaled elements `E_k = sqrt(d(d+1)/2) Pi_k`.
    pub fn normalized_elements(&self) -> &[CMatrix] {
        &self.normalized_elements
    }

    /// Certified pairwise-fidelity residual.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn outcomes(&self) -> usize {
        self.projectors.len()
    }

    /// The POVM conjugated elementwise by a unitary. Fidelities and
    /// completeness are untouched, so the residual carries over.
    pub fn conjugated(&self, u: &CMatrix) -> Result<SicPovm> {
        let d = self.dimension;
        if u.nrows() != d || u.ncols() != d {
            return Err(Error::DimensionMismatch(format!(
                "conjugating unitary is {}x{}, POVM dimension is {}",
                u.nrows(),
                u.ncols(),
                d
            )));
        }
        let udag = crate::linalg::dagger(u);
        let states: Vec<CVector> = self.states.iter().map(|s| u.dot(s)).collect();
        let projectors: Vec<CMatrix> = self
            .projectors
            .iter()
            .map(|p| u.dot(p).dot(&udag))
            .collect();
        let normalized_elements: Vec<CMatrix> = self
            .normalized_elements
            .iter()
            .map(|e| u.dot(e).dot(&udag))
            .collect();
        Ok(SicPovm {
            dimension: d,
            states,
            projectors,
            normalized_elements,
            residual: self.residual,
        })
    }
}

/// Builds the POVM from a certified fiducial: `|psi_jk> = D_jk |psi>`,
/// `Pi_k = |psi_k><psi_k| / d`, `E_k = sqrt(d(d+1)/2) Pi_k`.
pub fn sic_from_fiducial(fid: &Fiducial) -> Result<SicPovm> {
    if !fid.is_certified(DEFAULT_CERT_TOL) {
        return Err(Error::NotCertified {
            residual: fid.residual,
            tol: DEFAULT_CERT_TOL,
        });
    }
    let d = fid.dimension;
    let omega = omega_powers(d);
    let psi = fid.amplitudes.as_slice().expect("contiguous");
    let scale = ((d * (d + 1)) as f64 / 2.0).sqrt();

    let mut states = Vec::with_capacity(d * d);
    let mut projectors = Vec::with_capacity(d * d);
    let mut normalized_elements = Vec::with_capacity(d * d);
    let mut buf = vec![Complex64::new(0.0, 0.0); d];
    for j in 0..d {
        for k in 0..d {
            displace(j, k, psi, &omega, &mut buf);
            let state = Array1::from(buf.clone());
            let mut proj = Array2::zeros((d, d));
            for (r, zr) in buf.iter().enumerate() {
                for (c, zc) in buf.iter().enumerate() {
                    proj[[r, c]] = zr * zc.conj() / d as f64;
                }
            }
            normalized_elements.push(proj.mapv(|z| z * scale));
            projectors.push(proj);
            states.push(state);
        }
    }

    let mut povm = SicPovm {
        dimension: d,
        states,
        projectors,
        normalized_elements,
        residual: 0.0,
    };
    povm.residual = verify_sic(&povm).fidelity_residual;
    Ok(povm)
}

/// Residuals reported by [`verify_sic`].
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SicVerification {
    /// Max deviation of `|<psi_i|psi_j>|^2` from `(d delta_ij + 1)/(d+1)`.
    pub fidelity_residual: f64,
    /// Max entry of `|sum_k Pi_k - I|`.
    pub completeness_residual: f64,
}

impl SicVerification {
    pub fn max(&self) -> f64 {
        self.fidelity_residual.max(self.completeness_residual)
    }
}

/// Measures how far a POVM is from exact SIC structure. Pure measurement,
/// works from the projectors alone.
pub fn verify_sic(povm: &SicPovm) -> SicVerification {
    let d = povm.dimension;
    let dd = d as f64;
    let n = povm.projectors.len();
    let mut fidelity_residual = 0.0f64;
    for i in 0..n {
        for j in i..n {
            // |<psi_i|psi_j>|^2 = d^2 tr(Pi_i Pi_j)
            let pi = &povm.projectors[i];
            let pj = &povm.projectors[j];
            let mut t = Complex64::new(0.0, 0.0);
            for a in 0..d {
                for b in 0..d {
                    t += pi[[a, b]] * pj[[b, a]];
                }
            }
            let fidelity = dd * dd * t.re;
            let target = if i == j { 1.0 } else { 1.0 / (dd + 1.0) };
            fidelity_residual = fidelity_residual.max((fidelity - target).abs());
        }
    }

    let mut sum = Array2::<Complex64>::zeros((d, d));
    for p in &povm.projectors {
        sum += p;
    }
    let completeness_residual = max_abs(&(&sum - &identity(d)));

    SicVerification {
        fidelity_residual,
        completeness_residual,
    }
}

/// Born-rule probabilities `p_k = tr(rho Pi_k)` for every POVM outcome.
pub fn sic_probabilities(rho: &DensityMatrix, povm: &SicPovm) -> Result<Vec<f64>> {
    let d = povm.dimension;
    if rho.dim() != d {
        return Err(Error::DimensionMismatch(format!(
            "state dimension {} vs POVM dimension {}",
            rho.dim(),
            d
        )));
    }
    let m = rho.matrix();
    let probs = povm
        .projectors
        .iter()
        .map(|p| {
            let mut t = Complex64::new(0.0, 0.0);
            for a in 0..d {
                for b in 0..d {
                    t += m[[a, b]] * p[[b, a]];
                }
            }
            t.re
        })
        .collect();
    Ok(probs)
}

/// Rescaled outcome vector `e_k = sqrt(d(d+1)/2) p_k`.
pub fn rescaled_outcomes(probs: &[f64], d: usize) -> Vec<f64> {
    let scale = ((d * (d + 1)) as f64 / 2.0).sqrt();
    probs.iter().map(|p| scale * p).collect()
}

/// Linear tomographic reconstruction `rho = d(d+1) sum_k p_k Pi_k - I`.
pub fn reconstruct_state(probs: &[f64], povm: &SicPovm) -> Result<DensityMatrix> {
    let d = povm.dimension;
    if probs.len() != d * d {
        return Err(Error::MalformedProbabilities(format!(
            "expected {} outcomes, got {}",
            d * d,
            probs.len()
        )));
    }
    if probs.iter().any(|p| !p.is_finite()) {
        return Err(Error::MalformedProbabilities("non-finite entry".into()));
    }
    let total: f64 = probs.iter().sum();
    if (total - 1.0).abs() > 1e-10 {
        return Err(Error::MalformedProbabilities(format!(
            "probabilities sum to {total}, not 1"
        )));
    }
    let mut m = Array2::<Complex64>::zeros((d, d));
    for (p, proj) in probs.iter().zip(povm.projectors.iter()) {
        m.zip_mut_with(proj, |acc, v| *acc += v * *p);
    }
    let scale = (d * (d + 1)) as f64;
    let mut out = m.mapv(|z| z * scale);
    for i in 0..d {
        out[[i, i]] -= Complex64::new(1.0, 0.0);
    }
    DensityMatrix::new(&out, crate::linalg::DEFAULT_VALIDATION_TOL)
}

#[derive(Serialize, Deserialize)]
struct FiducialRecord {
    dimension: usize,
    amplitudes: Vec<[f64; 2]>,
    residual: f64,
    seed: Option<u64>,
    generator: String,
}

/// Writes a certified fiducial to the cache file for its dimension.
pub fn write_fiducial_cache(dir: &Path, fid: &Fiducial) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let record = FiducialRecord {
        dimension: fid.dimension,
        amplitudes: fid.amplitudes.iter().map(|z| [z.re, z.im]).collect(),
        residual: fid.residual,
        seed: fid.seed,
        generator: GENERATOR_TAG.to_string(),
    };
    let path = dir.join(format!("sic_d{}.json", fid.dimension));
    std::fs::write(&path, serde_json::to_string_pretty(&record)? + "\n")?;
    Ok(path)
}

/// Loads a cached fiducial if present and structurally sound. The stored
/// residual is advisory; the returned fiducial carries a freshly measured one.
pub fn read_fiducial_cache(dir: &Path, d: usize) -> Option<Fiducial> {
    let path = dir.join(format!("sic_d{d}.json"));
    let text = std::fs::read_to_string(path).ok()?;
    let record: FiducialRecord = serde_json::from_str(&text).ok()?;
    if record.dimension != d || record.generator != GENERATOR_TAG || record.amplitudes.len() != d {
        return None;
    }
    let amplitudes: CVector = record
        .amplitudes
        .iter()
        .map(|[re, im]| Complex64::new(*re, *im))
        .collect();
    Fiducial::from_vector(amplitudes, record.seed).ok()
}

/// Lazily constructed SIC POVMs keyed by dimension.
///
/// Dimensions 2 and 3 use the exact hard-coded fiducials; 4..7 fall back to a
/// seeded numerical search, consulting the cache directory first when one is
/// configured.
pub struct SicLibrary {
    seed: u64,
    tol: f64,
    cache_dir: Option<PathBuf>,
    povms: RwLock<HashMap<usize, Arc<SicPovm>>>,
}

impl Default for SicLibrary {
    fn default() -> Self {
        Self::new(DEFAULT_LIBRARY_SEED, DEFAULT_CERT_TOL)
    }
}

impl SicLibrary {
    pub fn new(seed: u64, tol: f64) -> Self {
        SicLibrary {
            seed,
            tol,
            cache_dir: None,
            povms: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The POVM for dimension `d`, constructing and caching it on first use.
    pub fn get(&self, d: usize) -> Result<Arc<SicPovm>> {
        if let Some(p) = self.povms.read().expect("sic library lock").get(&d) {
            return Ok(Arc::clone(p));
        }
        let fid = self.fiducial(d)?;
        let povm = Arc::new(sic_from_fiducial(&fid)?);
        self.povms
            .write()
            .expect("sic library lock")
            .insert(d, Arc::clone(&povm));
        Ok(povm)
    }

    fn fiducial(&self, d: usize) -> Result<Fiducial> {
        if let Some(exact) = exact_fiducial(d) {
            return Ok(exact);
        }
        if let Some(dir) = &self.cache_dir {
            if let Some(cached) = read_fiducial_cache(dir, d) {
                if cached.is_certified(self.tol) {
                    return Ok(cached);
                }
            }
        }
        let fid = fiducial_search(d, self.seed, self.tol)?;
        if let Some(dir) = &self.cache_dir {
            // Cache write failures are not fatal; the fiducial is already in hand.
            let _ = write_fiducial_cache(dir, &fid);
        }
        Ok(fid)
    }
}

/// Process-wide SIC library with default seed and tolerance.
pub fn default_sics() -> &'static SicLibrary {
    static LIBRARY: OnceLock<SicLibrary> = OnceLock::new();
    LIBRARY.get_or_init(SicLibrary::default)
}
