//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by matrix kernels, SIC construction, criteria, and reports.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("not Hermitian: residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("trace deviates from one by {deviation:.3e} (tolerance {tol:.3e})")]
    TraceDeviation { deviation: f64, tol: f64 },

    #[error("negative eigenvalue {eigenvalue:.3e} below tolerance -{tol:.3e}")]
    NotPositive { eigenvalue: f64, tol: f64 },

    #[error("density matrix carries no bipartition")]
    MissingBipartition,

    #[error("bipartition {d_a}x{d_b} incompatible with matrix dimension {dim}")]
    BadBipartition { d_a: usize, d_b: usize, dim: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid dimension {dim}: {reason}")]
    InvalidDimension { dim: usize, reason: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "fiducial search failed in dimension {dim}: best residual {best_residual:.3e} \
         after {restarts} restarts"
    )]
    SearchFailed {
        dim: usize,
        best_residual: f64,
        restarts: usize,
    },

    #[error("fiducial not certified: residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotCertified { residual: f64, tol: f64 },

    #[error("correlation matrix has imaginary residual {residual:.3e}")]
    ImaginaryResidual { residual: f64 },

    #[error("malformed probability vector: {0}")]
    MalformedProbabilities(String),

    #[error("state not detected at q=1: criterion value {value} within margin {margin:.1e} of 1")]
    NotDetected { value: f64, margin: f64 },

    #[error("detection predicate is not single-crossing along the noise segment: {0}")]
    NonMonotone(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "not_square",
            Error::NonFinite => "non_finite",
            Error::NotHermitian { .. } => "not_hermitian",
            Error::TraceDeviation { .. } => "trace_deviation",
            Error::NotPositive { .. } => "not_positive",
            Error::MissingBipartition => "missing_bipartition",
            Error::BadBipartition { .. } => "bad_bipartition",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::InvalidDimension { .. } => "invalid_dimension",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::SearchFailed { .. } => "search_failed",
            Error::NotCertified { .. } => "not_certified",
            Error::ImaginaryResidual { .. } => "imaginary_residual",
            Error::MalformedProbabilities(_) => "malformed_probabilities",
            Error::NotDetected { .. } => "not_detected",
            Error::NonMonotone(_) => "non_monotone",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
