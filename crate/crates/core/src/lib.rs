//! Entanglement detection for bipartite quantum states.
//!
//! The crate evaluates three separability criteria — positive partial
//! transpose (PPT), computable cross-norm / realignment (CCNR), and the
//! SIC-POVM correlation criterion (ESIC) — on dense density matrices, and
//! ships the machinery they need:
//!
//! - [`linalg`]: complex matrix kernel (Kronecker/partial operations,
//!   Hermitian eigenvalues, singular values, trace norm, realignment,
//!   Gell-Mann bases) for dimensions up to ~100.
//! - [`sic`]: SIC POVM construction in dimensions 2..7 via Weyl-Heisenberg
//!   covariance, with exact fiducials for d = 2, 3 and a seeded numerical
//!   search above.
//! - [`criteria`]: the three criterion values, correlation matrices, and
//!   white-noise detection thresholds.
//! - [`states`]: deterministic state families and seeded random ensembles.
//! - [`experiments`]: the reporting harness behind the CLI.
//!
//! Everything is a pure function of its inputs; random ensembles derive one
//! RNG stream per sample index, so any run is reproducible bit-for-bit from
//! its seed.

pub mod criteria;
pub mod error;
pub mod experiments;
pub mod linalg;
pub mod rng;
pub mod sic;
pub mod states;

pub use error::{Error, Result};
pub use linalg::{CMatrix, CVector, DensityMatrix, Subsystem};
pub use criteria::{Criterion, CriterionResult};
pub use sic::{Fiducial, SicLibrary, SicPovm};
pub use states::{ChessboardParams, EnsembleKind, EnsembleSpec};
