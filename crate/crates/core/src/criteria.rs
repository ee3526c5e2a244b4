//! The three entanglement criteria (PPT, CCNR, ESIC), correlation matrices,
//! operator-Schmidt spectra, and white-noise detection thresholds.
//!
//! Every criterion reduces to a trace norm with separability bound 1: the
//! partial transpose for PPT, the realigned state for CCNR, and the SIC
//! correlation matrix `[P]_ij = <E_i^A (x) E_j^B>` for ESIC. Values above
//! `1 + margin` certify entanglement.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use ndarray::Array2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    gell_mann_basis, partial_transpose, realign, singular_values, trace_norm, CMatrix,
    DensityMatrix, Subsystem,
};
use crate::sic::{default_sics, SicLibrary, SicPovm};
use crate::states::white_noise_mix;

/// Margin above the separability bound 1 required to flag detection;
/// suppresses false positives from floating-point noise near the bound.
pub const DETECTION_MARGIN: f64 = 1e-10;

/// Default bisection tolerance for white-noise thresholds.
pub const DEFAULT_BISECTION_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Ppt,
    Ccnr,
    Esic,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Criterion::Ppt => "ppt",
            Criterion::Ccnr => "ccnr",
            Criterion::Esic => "esic",
        };
        f.write_str(name)
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ppt" => Ok(Criterion::Ppt),
            "ccnr" => Ok(Criterion::Ccnr),
            "esic" => Ok(Criterion::Esic),
            other => Err(Error::InvalidParameter(format!(
                "unknown criterion '{other}' (expected ppt, ccnr, or esic)"
            ))),
        }
    }
}

/// Outcome of a criterion evaluation: a trace norm and the detection verdict.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CriterionResult {
    pub criterion: Criterion,
    pub value: f64,
    pub detected: bool,
    pub margin: f64,
}

impl CriterionResult {
    pub fn new(criterion: Criterion, value: f64) -> Self {
        Self::with_margin(criterion, value, DETECTION_MARGIN)
    }

    pub fn with_margin(criterion: Criterion, value: f64, margin: f64) -> Self {
        CriterionResult {
            criterion,
            value,
            detected: value > 1.0 + margin,
            margin,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CorrelationKind {
    Ccnr,
    Esic,
}

/// Real correlation matrix of local-operator expectation values together with
/// its singular-value spectrum (nonincreasing).
#[derive(Debug, Clone)]
pub struct CorrelationMatrix {
    pub kind: CorrelationKind,
    pub entries: Array2<f64>,
    pub singular_values: Vec<f64>,
}

impl CorrelationMatrix {
    fn from_entries(kind: CorrelationKind, entries: Array2<f64>) -> Self {
        let complex = entries.mapv(|v| Complex64::new(v, 0.0));
        let singular_values = singular_values(&complex);
        CorrelationMatrix {
            kind,
            entries,
            singular_values,
        }
    }

    /// Sum of singular values.
    pub fn trace_norm(&self) -> f64 {
        self.singular_values.iter().sum()
    }
}

/// Expectation table `P[i,j] = tr(rho (A_i (x) B_j))` for Hermitian local
/// operator families. The result must be real; a residual imaginary part
/// above 1e-10 is reported as an error.
fn correlation_entries(
    rho: &DensityMatrix,
    ops_a: &[CMatrix],
    ops_b: &[CMatrix],
) -> Result<Array2<f64>> {
    let (da, db) = rho.require_bipartition()?;
    for op in ops_a {
        if op.nrows() != da || op.ncols() != da {
            return Err(Error::DimensionMismatch(format!(
                "A-side operator is {}x{}, subsystem dimension is {da}",
                op.nrows(),
                op.ncols()
            )));
        }
    }
    for op in ops_b {
        if op.nrows() != db || op.ncols() != db {
            return Err(Error::DimensionMismatch(format!(
                "B-side operator is {}x{}, subsystem dimension is {db}",
                op.nrows(),
                op.ncols()
            )));
        }
    }

    let m = rho.matrix();
    let na = ops_a.len();
    let nb = ops_b.len();

    // First contract the B side: x[(a,a2), j] = tr_B(block(a,a2) B_j) where
    // block(a,a2)[b,b2] = rho[(a,b),(a2,b2)].
    let mut x = vec![Complex64::new(0.0, 0.0); da * da * nb];
    for a in 0..da {
        for a2 in 0..da {
            for (j, op) in ops_b.iter().enumerate() {
                let mut s = Complex64::new(0.0, 0.0);
                for b in 0..db {
                    for b2 in 0..db {
                        s += m[[a * db + b, a2 * db + b2]] * op[[b2, b]];
                    }
                }
                x[(a * da + a2) * nb + j] = s;
            }
        }
    }

    let mut entries = Array2::<f64>::zeros((na, nb));
    let mut max_imag = 0.0f64;
    for (i, opa) in ops_a.iter().enumerate() {
        for j in 0..nb {
            let mut s = Complex64::new(0.0, 0.0);
            for a in 0..da {
                for a2 in 0..da {
                    s += opa[[a2, a]] * x[(a * da + a2) * nb + j];
                }
            }
            max_imag = max_imag.max(s.im.abs());
            entries[[i, j]] = s.re;
        }
    }
    if max_imag > 1e-10 {
        return Err(Error::ImaginaryResidual { residual: max_imag });
    }
    Ok(entries)
}

/// CCNR correlation matrix over the Gell-Mann bases of both subsystems. Its
/// singular values are the operator-Schmidt coefficients of the state.
pub fn ccnr_correlation_matrix(rho: &DensityMatrix) -> Result<CorrelationMatrix> {
    let (da, db) = rho.require_bipartition()?;
    let basis_a = gell_mann_basis(da)?;
    let basis_b = gell_mann_basis(db)?;
    let entries = correlation_entries(rho, basis_a.operators(), basis_b.operators())?;
    Ok(CorrelationMatrix::from_entries(CorrelationKind::Ccnr, entries))
}

/// ESIC correlation matrix `[P]_ij = tr(rho (E_i^A (x) E_j^B))` over the
/// rescaled SIC elements of both subsystems.
pub fn esic_correlation_matrix(
    rho: &DensityMatrix,
    povm_a: &SicPovm,
    povm_b: &SicPovm,
) -> Result<CorrelationMatrix> {
    let (da, db) = rho.require_bipartition()?;
    if povm_a.dimension() != da || povm_b.dimension() != db {
        return Err(Error::DimensionMismatch(format!(
            "POVM dimensions {}x{} vs bipartition {da}x{db}",
            povm_a.dimension(),
            povm_b.dimension()
        )));
    }
    let entries = correlation_entries(
        rho,
        povm_a.normalized_elements(),
        povm_b.normalized_elements(),
    )?;
    Ok(CorrelationMatrix::from_entries(CorrelationKind::Esic, entries))
}

/// CCNR criterion value: the trace norm of the realigned state. Equal to the
/// trace norm of [`ccnr_correlation_matrix`], which tests cross-check.
pub fn ccnr_value(rho: &DensityMatrix) -> Result<CriterionResult> {
    let r = realign(rho)?;
    Ok(CriterionResult::new(Criterion::Ccnr, trace_norm(&r)))
}

/// ESIC criterion value: the trace norm of the SIC correlation matrix.
pub fn esic_value(
    rho: &DensityMatrix,
    povm_a: &SicPovm,
    povm_b: &SicPovm,
) -> Result<CriterionResult> {
    let p = esic_correlation_matrix(rho, povm_a, povm_b)?;
    Ok(CriterionResult::new(Criterion::Esic, p.trace_norm()))
}

/// [`esic_value`] with the process-wide default SIC POVMs.
pub fn esic_value_default(rho: &DensityMatrix) -> Result<CriterionResult> {
    let (da, db) = rho.require_bipartition()?;
    let sics = default_sics();
    let povm_a = sics.get(da)?;
    let povm_b = sics.get(db)?;
    esic_value(rho, &povm_a, &povm_b)
}

/// PPT criterion value: the trace norm of the partial transpose over B.
pub fn ppt_value(rho: &DensityMatrix) -> Result<CriterionResult> {
    let pt = partial_transpose(rho, Subsystem::B)?;
    Ok(CriterionResult::new(Criterion::Ppt, trace_norm(&pt)))
}

/// Criterion value dispatch used by threshold searches and the harness.
pub fn criterion_value(
    rho: &DensityMatrix,
    criterion: Criterion,
    sics: &SicLibrary,
) -> Result<f64> {
    match criterion {
        Criterion::Ppt => Ok(ppt_value(rho)?.value),
        Criterion::Ccnr => Ok(ccnr_value(rho)?.value),
        Criterion::Esic => {
            let (da, db) = rho.require_bipartition()?;
            let povm_a = sics.get(da)?;
            let povm_b = sics.get(db)?;
            Ok(esic_value(rho, &povm_a, &povm_b)?.value)
        }
    }
}

/// CCNR value of a pure state from its Schmidt coefficients: `(sum lambda)^2`.
pub fn pure_state_ccnr(schmidt: &[f64]) -> Result<f64> {
    if schmidt.iter().any(|l| *l < -1e-12 || !l.is_finite()) {
        return Err(Error::InvalidParameter(
            "Schmidt coefficients must be nonnegative".into(),
        ));
    }
    let norm2: f64 = schmidt.iter().map(|l| l * l).sum();
    if (norm2 - 1.0).abs() > 1e-10 {
        return Err(Error::InvalidParameter(format!(
            "Schmidt coefficients must satisfy sum lambda^2 = 1, got {norm2}"
        )));
    }
    let sum: f64 = schmidt.iter().sum();
    Ok(sum * sum)
}

/// Options for [`noise_threshold_with`].
#[derive(Debug, Clone)]
pub struct ThresholdOptions {
    /// Final bracket width.
    pub bisect_tol: f64,
    /// Detection margin used in the bisection predicate.
    pub margin: f64,
    /// Points in the coarse pre-scan validating a single detection crossing.
    pub prescan_points: usize,
    /// Hard cap on bisection steps.
    pub max_bisections: usize,
}

impl Default for ThresholdOptions {
    fn default() -> Self {
        ThresholdOptions {
            bisect_tol: DEFAULT_BISECTION_TOL,
            margin: DETECTION_MARGIN,
            prescan_points: 32,
            max_bisections: 60,
        }
    }
}

/// White-noise threshold `q*` for `rho(q) = q rho + (1-q) I/d`: the noise
/// level at which the criterion stops detecting, resolved by bisection to
/// `bisect_tol`.
pub fn noise_threshold(
    rho: &DensityMatrix,
    criterion: Criterion,
    tol: f64,
    sics: &SicLibrary,
) -> Result<f64> {
    let opts = ThresholdOptions {
        bisect_tol: tol,
        ..ThresholdOptions::default()
    };
    noise_threshold_with(rho, criterion, &opts, sics)
}

/// [`noise_threshold`] with full options.
///
/// The trace norm along the segment is convex, so the detection predicate
/// flips exactly once when the state is detected at `q = 1` and not at
/// `q = 0`; the pre-scan verifies that single crossing and reports a
/// [`Error::NonMonotone`] instance instead of silently bisecting.
pub fn noise_threshold_with(
    rho: &DensityMatrix,
    criterion: Criterion,
    opts: &ThresholdOptions,
    sics: &SicLibrary,
) -> Result<f64> {
    let value_at = |q: f64| -> Result<f64> {
        let mixed = white_noise_mix(rho, q)?;
        criterion_value(&mixed, criterion, sics)
    };
    let detected = |v: f64| v > 1.0 + opts.margin;

    let v1 = value_at(1.0)?;
    if !detected(v1) {
        return Err(Error::NotDetected {
            value: v1,
            margin: opts.margin,
        });
    }

    // Coarse pre-scan over [0, 1].
    let points = opts.prescan_points.max(2);
    let mut flags = Vec::with_capacity(points);
    let mut values = Vec::with_capacity(points);
    for i in 0..points {
        let q = i as f64 / (points - 1) as f64;
        let v = value_at(q)?;
        values.push((q, v));
        flags.push(detected(v));
    }
    if flags[0] {
        return Err(Error::NonMonotone(format!(
            "detected at q=0 (value {})",
            values[0].1
        )));
    }
    let crossings = flags.windows(2).filter(|w| w[0] != w[1]).count();
    if crossings != 1 {
        let detail: Vec<String> = values
            .iter()
            .zip(flags.iter())
            .map(|((q, v), f)| format!("q={q:.4}: {v:.6} ({})", if *f { "det" } else { "sep" }))
            .collect();
        return Err(Error::NonMonotone(format!(
            "{crossings} predicate crossings in pre-scan: {}",
            detail.join(", ")
        )));
    }

    let cross = flags.iter().position(|f| *f).expect("q=1 is detected");
    let mut lo = values[cross - 1].0;
    let mut hi = values[cross].0;
    let mut steps = 0;
    while hi - lo > opts.bisect_tol && steps < opts.max_bisections {
        let mid = 0.5 * (lo + hi);
        if detected(value_at(mid)?) {
            hi = mid;
        } else {
            lo = mid;
        }
        steps += 1;
    }
    Ok(0.5 * (lo + hi))
}

/// [`noise_threshold`] against the process-wide default SIC POVMs.
pub fn noise_threshold_default(rho: &DensityMatrix, criterion: Criterion, tol: f64) -> Result<f64> {
    noise_threshold(rho, criterion, tol, default_sics())
}

/// All three criteria evaluated on one state.
pub fn evaluate_all(
    rho: &DensityMatrix,
    sics: &SicLibrary,
    margin: f64,
) -> Result<(CriterionResult, CriterionResult, CriterionResult)> {
    let (da, db) = rho.require_bipartition()?;
    let ppt = CriterionResult::with_margin(Criterion::Ppt, ppt_value(rho)?.value, margin);
    let ccnr = CriterionResult::with_margin(Criterion::Ccnr, ccnr_value(rho)?.value, margin);
    let povm_a: Arc<SicPovm> = sics.get(da)?;
    let povm_b: Arc<SicPovm> = sics.get(db)?;
    let esic = CriterionResult::with_margin(
        Criterion::Esic,
        esic_value(rho, &povm_a, &povm_b)?.value,
        margin,
    );
    Ok((ppt, ccnr, esic))
}
