//! Report records and deterministic CSV/JSON emission.
//!
//! CSV per-sample column order is fixed: `sample, ensemble, ppt, ccnr, esic,
//! detected_ppt, detected_ccnr, detected_esic, q_ppt, q_ccnr, q_esic`.
//! Absent thresholds (state undetected at q = 1) are an empty CSV field and
//! JSON `null`, never 0 or 1. Identical inputs yield byte-identical files.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Output format for emitted reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Csv,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(crate::error::Error::InvalidParameter(format!(
                "unknown format '{other}' (expected csv or json)"
            ))),
        }
    }
}

/// A report that can render itself as CSV; JSON comes from `Serialize`.
pub trait TabularReport: Serialize {
    fn to_csv(&self) -> String;
}

/// Renders a report to a string in the requested format.
pub fn render_report<R: TabularReport>(report: &R, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Csv => Ok(report.to_csv()),
        ReportFormat::Json => Ok(serde_json::to_string_pretty(report)? + "\n"),
    }
}

/// Writes a report to `path`; emission is deterministic byte-for-byte.
pub fn emit_report<R: TabularReport>(report: &R, format: ReportFormat, path: &Path) -> Result<()> {
    let text = render_report(report, format)?;
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    std::fs::write(path, text)?;
    Ok(())
}

pub(crate) fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

pub(crate) fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

/// Wilson 95% score interval for `count` successes out of `n`.
pub fn wilson_interval(count: usize, n: usize) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let z = 1.96f64;
    let nf = n as f64;
    let p = count as f64 / nf;
    let z2 = z * z;
    let denom = 1.0 + z2 / nf;
    let center = (p + z2 / (2.0 * nf)) / denom;
    let half = z * (p * (1.0 - p) / nf + z2 / (4.0 * nf * nf)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Per-sample row: criterion values, detection flags, and white-noise
/// thresholds where the experiment computes them.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DetectionRecord {
    pub sample: usize,
    pub ensemble: String,
    pub ppt: f64,
    pub ccnr: f64,
    pub esic: f64,
    pub detected_ppt: bool,
    pub detected_ccnr: bool,
    pub detected_esic: bool,
    pub q_ppt: Option<f64>,
    pub q_ccnr: Option<f64>,
    pub q_esic: Option<f64>,
}

pub(crate) const DETECTION_HEADER: &str =
    "sample,ensemble,ppt,ccnr,esic,detected_ppt,detected_ccnr,detected_esic,q_ppt,q_ccnr,q_esic";

impl DetectionRecord {
    pub(crate) fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.sample,
            self.ensemble,
            fmt_f64(self.ppt),
            fmt_f64(self.ccnr),
            fmt_f64(self.esic),
            self.detected_ppt,
            self.detected_ccnr,
            self.detected_esic,
            fmt_opt(self.q_ppt),
            fmt_opt(self.q_ccnr),
            fmt_opt(self.q_esic),
        )
    }
}

/// Plain list of per-sample records.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct RecordsReport {
    pub records: Vec<DetectionRecord>,
}

impl TabularReport for RecordsReport {
    fn to_csv(&self) -> String {
        let mut out = String::from(DETECTION_HEADER);
        out.push('\n');
        for r in &self.records {
            out.push_str(&r.csv_row());
            out.push('\n');
        }
        out
    }
}

/// Aggregated detection fractions for one ensemble.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FractionRow {
    pub ensemble: String,
    pub samples: usize,
    pub ppt_detected: usize,
    pub ppt_fraction: f64,
    pub ppt_wilson_low: f64,
    pub ppt_wilson_high: f64,
    pub ccnr_detected: usize,
    pub ccnr_fraction: f64,
    pub ccnr_wilson_low: f64,
    pub ccnr_wilson_high: f64,
    pub esic_detected: usize,
    pub esic_fraction: f64,
    pub esic_wilson_low: f64,
    pub esic_wilson_high: f64,
    /// States detected by CCNR but missed by ESIC; counterexample counter,
    /// emitted even when zero.
    pub ccnr_not_esic: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct FractionReport {
    pub rows: Vec<FractionRow>,
}

impl TabularReport for FractionReport {
    fn to_csv(&self) -> String {
        let mut out = String::from(
            "ensemble,samples,ppt_detected,ppt_fraction,ppt_wilson_low,ppt_wilson_high,\
             ccnr_detected,ccnr_fraction,ccnr_wilson_low,ccnr_wilson_high,\
             esic_detected,esic_fraction,esic_wilson_low,esic_wilson_high,ccnr_not_esic",
        );
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                r.ensemble,
                r.samples,
                r.ppt_detected,
                fmt_f64(r.ppt_fraction),
                fmt_f64(r.ppt_wilson_low),
                fmt_f64(r.ppt_wilson_high),
                r.ccnr_detected,
                fmt_f64(r.ccnr_fraction),
                fmt_f64(r.ccnr_wilson_low),
                fmt_f64(r.ccnr_wilson_high),
                r.esic_detected,
                fmt_f64(r.esic_fraction),
                fmt_f64(r.esic_wilson_low),
                fmt_f64(r.esic_wilson_high),
                r.ccnr_not_esic,
            ));
        }
        out
    }
}

/// Per-state threshold record of the two-qubit scatter experiment: the
/// detection columns plus threshold differences against PPT.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ScatterRecord {
    #[serde(flatten)]
    pub detection: DetectionRecord,
    /// `q_ccnr - q_ppt`, absent when CCNR never detects the state.
    pub diff_ccnr: Option<f64>,
    /// `q_esic - q_ppt`, absent when ESIC never detects the state.
    pub diff_esic: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default, PartialEq)]
pub struct ScatterSummary {
    pub samples: usize,
    pub entangled: usize,
    pub ccnr_detected: usize,
    pub esic_detected: usize,
    /// Records with `q_esic + 1e-9 < q_ccnr` (ESIC survives more noise).
    pub esic_better: usize,
    /// Records with `q_esic > q_ccnr + 1e-9`.
    pub esic_worse: usize,
    /// CCNR-detected but ESIC-missed states; emitted even when zero.
    pub ccnr_not_esic: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct ScatterReport {
    pub summary: ScatterSummary,
    pub records: Vec<ScatterRecord>,
}

impl TabularReport for ScatterReport {
    fn to_csv(&self) -> String {
        let mut out = String::from(DETECTION_HEADER);
        out.push_str(",diff_ccnr,diff_esic\n");
        for r in &self.records {
            out.push_str(&r.detection.csv_row());
            out.push(',');
            out.push_str(&fmt_opt(r.diff_ccnr));
            out.push(',');
            out.push_str(&fmt_opt(r.diff_esic));
            out.push('\n');
        }
        out
    }
}

/// One grid point of the bound-entangled boundary experiment.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BoundaryRow {
    pub x: f64,
    pub q_ppt: Option<f64>,
    pub q_ccnr: Option<f64>,
    pub q_esic: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct BoundaryReport {
    pub rows: Vec<BoundaryRow>,
}

impl TabularReport for BoundaryReport {
    fn to_csv(&self) -> String {
        let mut out = String::from("x,q_ppt,q_ccnr,q_esic\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                fmt_f64(r.x),
                fmt_opt(r.q_ppt),
                fmt_opt(r.q_ccnr),
                fmt_opt(r.q_esic),
            ));
        }
        out
    }
}

/// Residual and counterexample summary of the identity checks for one
/// dimension pair.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct IdentityRow {
    pub dims: String,
    pub samples: usize,
    /// Max residual of `(ccnr - 1) - 2 (esic - 1)` over random pure states.
    pub max_pure_residual: f64,
    /// Same residual over pure states mixed with white noise.
    pub max_noise_residual: f64,
    /// CCNR-detected but ESIC-missed states over the random mixed ensemble.
    pub ccnr_not_esic: usize,
    /// Product states violating `ccnr <= esic`.
    pub ordering_violations: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct IdentityReport {
    pub rows: Vec<IdentityRow>,
}

impl TabularReport for IdentityReport {
    fn to_csv(&self) -> String {
        let mut out = String::from(
            "dims,samples,max_pure_residual,max_noise_residual,ccnr_not_esic,ordering_violations\n",
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.dims,
                r.samples,
                fmt_f64(r.max_pure_residual),
                fmt_f64(r.max_noise_residual),
                r.ccnr_not_esic,
                r.ordering_violations,
            ));
        }
        out
    }
}
