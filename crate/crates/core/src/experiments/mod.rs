//! Experiment harness: detection fractions over random ensembles, white-noise
//! threshold scatter, bound-entangled boundary curves, and the empirical
//! identity checks, all emitted as deterministic CSV/JSON reports.
//!
//! Per-sample work only depends on `(spec, sample index)` through a derived
//! RNG stream, so results are order-independent; rows are sorted by sample
//! index before emission.

mod report;

pub use report::{
    emit_report, render_report, wilson_interval, BoundaryReport, BoundaryRow, DetectionRecord,
    FractionReport, FractionRow, IdentityReport, IdentityRow, RecordsReport, ReportFormat,
    ScatterRecord, ScatterReport, ScatterSummary, TabularReport,
};

use crate::criteria::{
    ccnr_value, criterion_value, esic_value, evaluate_all, noise_threshold_with, Criterion,
    ThresholdOptions, DETECTION_MARGIN,
};
use crate::error::{Error, Result};
use crate::linalg::{kron, DensityMatrix};
use crate::rng::{derive_seed, stream_rng};
use crate::sic::SicLibrary;
use crate::states::{
    haar_random_pure, horodecki_state, induced_random_mixed, white_noise_mix, EnsembleKind,
    EnsembleSpec,
};

/// Default desk-scale sample count; the paper-scale runs use 50,000.
pub const DEFAULT_SAMPLES: usize = 5_000;

/// The three induced-measure ensembles of the two-qubit fraction table:
/// `(4,3)`, `(4,4)`, `(4,6)` on a 2x2 bipartition.
pub fn table_one_specs(samples: usize, seed: u64) -> Vec<EnsembleSpec> {
    [3usize, 4, 6]
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            EnsembleSpec::new(
                EnsembleKind::Induced { k },
                (2, 2),
                samples,
                derive_seed(seed, i as u64),
            )
            .expect("static spec is valid")
        })
        .collect()
}

/// Random chessboard ensemble on the 3x3 bipartition.
pub fn chessboard_spec(samples: usize, seed: u64) -> EnsembleSpec {
    EnsembleSpec::new(EnsembleKind::ChessboardRandom, (3, 3), samples, seed)
        .expect("static spec is valid")
}

/// Hilbert-Schmidt ensembles on square bipartitions `2x2 .. max_dim x max_dim`.
pub fn sweep_specs(samples: usize, seed: u64, max_dim: usize) -> Vec<EnsembleSpec> {
    (2..=max_dim)
        .map(|d| {
            EnsembleSpec::new(
                EnsembleKind::HilbertSchmidt,
                (d, d),
                samples,
                derive_seed(seed, d as u64),
            )
            .expect("static spec is valid")
        })
        .collect()
}

/// Fraction experiment output: aggregate rows plus the per-sample records.
#[derive(Debug, Clone)]
pub struct FractionsOutput {
    pub report: FractionReport,
    pub records: RecordsReport,
}

/// Evaluates all three criteria over each ensemble and aggregates detected
/// fractions, Wilson intervals, and the CCNR-detected-but-ESIC-missed
/// counterexample counter (emitted even when zero).
pub fn run_ensemble_fractions(specs: &[EnsembleSpec], sics: &SicLibrary) -> Result<FractionsOutput> {
    // Fail early if a SIC is unavailable for some requested dimension.
    for spec in specs {
        sics.get(spec.dims.0)?;
        sics.get(spec.dims.1)?;
    }

    let mut rows = Vec::with_capacity(specs.len());
    let mut records = Vec::new();
    for spec in specs {
        let label = spec.label();
        let mut ppt_detected = 0usize;
        let mut ccnr_detected = 0usize;
        let mut esic_detected = 0usize;
        let mut ccnr_not_esic = 0usize;
        for index in 0..spec.count {
            let rho = spec.state_at(index);
            let (ppt, ccnr, esic) = evaluate_all(&rho, sics, DETECTION_MARGIN)?;
            ppt_detected += ppt.detected as usize;
            ccnr_detected += ccnr.detected as usize;
            esic_detected += esic.detected as usize;
            if ccnr.detected && !esic.detected {
                ccnr_not_esic += 1;
            }
            records.push(DetectionRecord {
                sample: index,
                ensemble: label.clone(),
                ppt: ppt.value,
                ccnr: ccnr.value,
                esic: esic.value,
                detected_ppt: ppt.detected,
                detected_ccnr: ccnr.detected,
                detected_esic: esic.detected,
                q_ppt: None,
                q_ccnr: None,
                q_esic: None,
            });
        }
        let n = spec.count;
        let (ppt_lo, ppt_hi) = wilson_interval(ppt_detected, n);
        let (ccnr_lo, ccnr_hi) = wilson_interval(ccnr_detected, n);
        let (esic_lo, esic_hi) = wilson_interval(esic_detected, n);
        rows.push(FractionRow {
            ensemble: label,
            samples: n,
            ppt_detected,
            ppt_fraction: ppt_detected as f64 / n as f64,
            ppt_wilson_low: ppt_lo,
            ppt_wilson_high: ppt_hi,
            ccnr_detected,
            ccnr_fraction: ccnr_detected as f64 / n as f64,
            ccnr_wilson_low: ccnr_lo,
            ccnr_wilson_high: ccnr_hi,
            esic_detected,
            esic_fraction: esic_detected as f64 / n as f64,
            esic_wilson_low: esic_lo,
            esic_wilson_high: esic_hi,
            ccnr_not_esic,
        });
    }
    Ok(FractionsOutput {
        report: FractionReport { rows },
        records: RecordsReport { records },
    })
}

/// Configuration of the two-qubit threshold scatter experiment.
#[derive(Debug, Clone)]
pub struct ScatterConfig {
    pub samples: usize,
    pub seed: u64,
    pub bisect_tol: f64,
    pub margin: f64,
}

impl Default for ScatterConfig {
    fn default() -> Self {
        ScatterConfig {
            samples: DEFAULT_SAMPLES,
            seed: 1,
            bisect_tol: 1e-6,
            margin: DETECTION_MARGIN,
        }
    }
}

/// Samples Hilbert-Schmidt two-qubit states; for each entangled one
/// (PPT-detected at q = 1) records the white-noise thresholds of all three
/// criteria and the differences against PPT.
pub fn run_threshold_scatter(cfg: &ScatterConfig, sics: &SicLibrary) -> Result<ScatterReport> {
    let spec = EnsembleSpec::new(EnsembleKind::HilbertSchmidt, (2, 2), cfg.samples, cfg.seed)?;
    let opts = ThresholdOptions {
        bisect_tol: cfg.bisect_tol,
        margin: cfg.margin,
        ..ThresholdOptions::default()
    };
    let label = spec.label();

    let mut records = Vec::new();
    let mut summary = ScatterSummary {
        samples: cfg.samples,
        ..ScatterSummary::default()
    };
    for index in 0..spec.count {
        let rho = spec.state_at(index);
        let (ppt, ccnr, esic) = evaluate_all(&rho, sics, cfg.margin)?;
        if !ppt.detected {
            continue;
        }
        summary.entangled += 1;
        summary.ccnr_detected += ccnr.detected as usize;
        summary.esic_detected += esic.detected as usize;
        if ccnr.detected && !esic.detected {
            summary.ccnr_not_esic += 1;
        }

        let q_ppt = noise_threshold_with(&rho, Criterion::Ppt, &opts, sics)?;
        let q_ccnr = if ccnr.detected {
            Some(noise_threshold_with(&rho, Criterion::Ccnr, &opts, sics)?)
        } else {
            None
        };
        let q_esic = if esic.detected {
            Some(noise_threshold_with(&rho, Criterion::Esic, &opts, sics)?)
        } else {
            None
        };
        if let (Some(qc), Some(qe)) = (q_ccnr, q_esic) {
            if qe + 1e-9 < qc {
                summary.esic_better += 1;
            } else if qe > qc + 1e-9 {
                summary.esic_worse += 1;
            }
        }
        records.push(ScatterRecord {
            detection: DetectionRecord {
                sample: index,
                ensemble: label.clone(),
                ppt: ppt.value,
                ccnr: ccnr.value,
                esic: esic.value,
                detected_ppt: true,
                detected_ccnr: ccnr.detected,
                detected_esic: esic.detected,
                q_ppt: Some(q_ppt),
                q_ccnr,
                q_esic,
            },
            diff_ccnr: q_ccnr.map(|q| q - q_ppt),
            diff_esic: q_esic.map(|q| q - q_ppt),
        });
    }
    Ok(ScatterReport { summary, records })
}

/// Configuration of the bound-entangled boundary experiment.
#[derive(Debug, Clone)]
pub struct BoundaryConfig {
    /// Grid points, uniform over the open interval (0, 1).
    pub grid: usize,
    pub bisect_tol: f64,
    pub margin: f64,
}

impl Default for BoundaryConfig {
    fn default() -> Self {
        BoundaryConfig {
            grid: 49,
            bisect_tol: 1e-6,
            margin: DETECTION_MARGIN,
        }
    }
}

/// White-noise thresholds of CCNR and ESIC for the bound-entangled family
/// `q rho_x + (1-q) I/9` over an x-grid; thresholds are absent where the
/// criterion misses the state at q = 1. PPT never detects this family.
pub fn run_boundary_curves(cfg: &BoundaryConfig, sics: &SicLibrary) -> Result<BoundaryReport> {
    if cfg.grid < 2 {
        return Err(Error::InvalidParameter(
            "boundary grid needs at least 2 points".into(),
        ));
    }
    let opts = ThresholdOptions {
        bisect_tol: cfg.bisect_tol,
        margin: cfg.margin,
        ..ThresholdOptions::default()
    };
    let mut rows = Vec::with_capacity(cfg.grid);
    for i in 1..=cfg.grid {
        let x = i as f64 / (cfg.grid + 1) as f64;
        let rho = horodecki_state(x)?;
        let threshold = |criterion: Criterion| -> Result<Option<f64>> {
            match noise_threshold_with(&rho, criterion, &opts, sics) {
                Ok(q) => Ok(Some(q)),
                Err(Error::NotDetected { .. }) => Ok(None),
                Err(e) => Err(e),
            }
        };
        rows.push(BoundaryRow {
            x,
            q_ppt: threshold(Criterion::Ppt)?,
            q_ccnr: threshold(Criterion::Ccnr)?,
            q_esic: threshold(Criterion::Esic)?,
        });
    }
    Ok(BoundaryReport { rows })
}

/// Configuration of the empirical identity checks.
#[derive(Debug, Clone)]
pub struct IdentityConfig {
    pub dims: Vec<(usize, usize)>,
    pub samples: usize,
    pub seed: u64,
    /// White-noise weights applied to pure states for the mixed-identity check.
    pub noise_levels: Vec<f64>,
    pub margin: f64,
}

impl Default for IdentityConfig {
    fn default() -> Self {
        IdentityConfig {
            dims: vec![(2, 2), (2, 3), (3, 3), (4, 4)],
            samples: 1_000,
            seed: 1,
            noise_levels: vec![0.2, 0.5, 0.8],
            margin: DETECTION_MARGIN,
        }
    }
}

/// Runs three empirical checks per dimension pair: (a) the pure-state
/// identity `ccnr - 1 = 2 (esic - 1)`, also under white-noise mixing; (b) the
/// counterexample counter (CCNR detects, ESIC misses) over random mixed
/// states; (c) the product-state ordering `ccnr <= esic`.
pub fn run_identity_checks(cfg: &IdentityConfig, sics: &SicLibrary) -> Result<IdentityReport> {
    let mut rows = Vec::with_capacity(cfg.dims.len());
    for (pair_index, &(da, db)) in cfg.dims.iter().enumerate() {
        let povm_a = sics.get(da)?;
        let povm_b = sics.get(db)?;
        let n = da * db;
        let pure_seed = derive_seed(cfg.seed, 3 * pair_index as u64);
        let mixed_seed = derive_seed(cfg.seed, 3 * pair_index as u64 + 1);
        let product_seed = derive_seed(cfg.seed, 3 * pair_index as u64 + 2);

        let mut max_pure_residual = 0.0f64;
        let mut max_noise_residual = 0.0f64;
        for index in 0..cfg.samples {
            let mut rng = stream_rng(pure_seed, index as u64);
            let psi = haar_random_pure(n, &mut rng);
            let rho = DensityMatrix::pure(&psi)?.with_bipartition(da, db)?;
            let c = ccnr_value(&rho)?.value;
            let p = esic_value(&rho, &povm_a, &povm_b)?.value;
            max_pure_residual = max_pure_residual.max(((c - 1.0) - 2.0 * (p - 1.0)).abs());
            for &q in &cfg.noise_levels {
                let mixed = white_noise_mix(&rho, q)?;
                let c = ccnr_value(&mixed)?.value;
                let p = esic_value(&mixed, &povm_a, &povm_b)?.value;
                max_noise_residual = max_noise_residual.max(((c - 1.0) - 2.0 * (p - 1.0)).abs());
            }
        }

        let mixed_spec = EnsembleSpec::new(EnsembleKind::HilbertSchmidt, (da, db), cfg.samples, mixed_seed)?;
        let mut ccnr_not_esic = 0usize;
        for rho in mixed_spec.states() {
            let c = ccnr_value(&rho)?;
            if !c.detected {
                continue;
            }
            let p = esic_value(&rho, &povm_a, &povm_b)?;
            if !p.detected {
                ccnr_not_esic += 1;
            }
        }

        let mut ordering_violations = 0usize;
        for index in 0..cfg.samples {
            let mut rng = stream_rng(product_seed, index as u64);
            let a = induced_random_mixed(da, da, &mut rng);
            let b = induced_random_mixed(db, db, &mut rng);
            let rho = DensityMatrix::from_trusted(kron(a.matrix(), b.matrix()), Some((da, db)));
            let c = ccnr_value(&rho)?.value;
            let p = criterion_value(&rho, Criterion::Esic, sics)?;
            if c > p + 1e-10 {
                ordering_violations += 1;
            }
        }

        rows.push(IdentityRow {
            dims: format!("{da}x{db}"),
            samples: cfg.samples,
            max_pure_residual,
            max_noise_residual,
            ccnr_not_esic,
            ordering_violations,
        });
    }
    Ok(IdentityReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sic::default_sics;

    #[test]
    fn fraction_presets_are_labeled() {
        let specs = table_one_specs(10, 3);
        assert_eq!(specs.len(), 3);
        assert_eq!(specs[0].label(), "induced(4,3)");
        assert_eq!(specs[2].label(), "induced(4,6)");
        assert_ne!(specs[0].seed, specs[1].seed);

        let sweep = sweep_specs(10, 3, 4);
        assert_eq!(sweep.len(), 3);
        assert_eq!(sweep[0].label(), "hs(2x2)");
        assert_eq!(sweep[2].label(), "hs(4x4)");
    }

    #[test]
    fn fractions_smoke_run_is_deterministic() {
        let sics = default_sics();
        let specs = vec![EnsembleSpec::new(EnsembleKind::HilbertSchmidt, (2, 2), 40, 5).unwrap()];
        let a = run_ensemble_fractions(&specs, sics).unwrap();
        let b = run_ensemble_fractions(&specs, sics).unwrap();
        assert_eq!(a.report.rows, b.report.rows);
        assert_eq!(a.records.records, b.records.records);
        let row = &a.report.rows[0];
        assert_eq!(row.samples, 40);
        assert!(row.ppt_detected >= row.ccnr_detected);
        assert!(row.ppt_wilson_low <= row.ppt_fraction && row.ppt_fraction <= row.ppt_wilson_high);
        assert_eq!(a.records.records.len(), 40);
    }

    #[test]
    fn scatter_smoke_run() {
        let sics = default_sics();
        let cfg = ScatterConfig {
            samples: 30,
            seed: 9,
            ..ScatterConfig::default()
        };
        let report = run_threshold_scatter(&cfg, sics).unwrap();
        assert_eq!(report.summary.samples, 30);
        assert_eq!(report.summary.entangled, report.records.len());
        for r in &report.records {
            assert!(r.detection.detected_ppt);
            let q_ppt = r.detection.q_ppt.unwrap();
            assert!((0.0..=1.0).contains(&q_ppt));
            if let Some(d) = r.diff_esic {
                // PPT is exact on two qubits, so its threshold is the lowest.
                assert!(d >= -1e-9);
            }
        }
    }

    #[test]
    fn boundary_smoke_run() {
        let sics = default_sics();
        let cfg = BoundaryConfig {
            grid: 5,
            ..BoundaryConfig::default()
        };
        let report = run_boundary_curves(&cfg, sics).unwrap();
        assert_eq!(report.rows.len(), 5);
        for row in &report.rows {
            assert!(row.q_ppt.is_none(), "PPT detected a PPT-invariant family");
            assert!(row.x > 0.0 && row.x < 1.0);
        }
        assert!(run_boundary_curves(&BoundaryConfig { grid: 1, ..cfg }, sics).is_err());
    }

    #[test]
    fn identities_smoke_run() {
        let sics = default_sics();
        let cfg = IdentityConfig {
            dims: vec![(2, 2)],
            samples: 25,
            seed: 7,
            noise_levels: vec![0.5],
            ..IdentityConfig::default()
        };
        let report = run_identity_checks(&cfg, sics).unwrap();
        let row = &report.rows[0];
        assert_eq!(row.dims, "2x2");
        assert!(row.max_pure_residual <= 1e-9, "{}", row.max_pure_residual);
        assert!(row.max_noise_residual <= 1e-9, "{}", row.max_noise_residual);
        assert_eq!(row.ccnr_not_esic, 0);
        assert_eq!(row.ordering_violations, 0);
    }
}
