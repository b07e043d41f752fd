//! Desk-scale numerical workbench around Mertens' function in arithmetic
//! progressions: exact Möbius/Mertens sums, Dirichlet character groups with
//! exact root-of-unity arithmetic, Beurling-Selberg extremal functions,
//! Dirichlet L-function evaluation and critical-line zero scanning, explicit
//! formula and weighted prime-sum identity verification, V-typical ordinate
//! classification, and Perron contour integration with per-segment bound
//! reports.
//!
//! Everything that can be checked exactly is checked exactly (sieves,
//! character orthogonality); everything analytic carries a certified
//! truncation/tail bound next to its value. Inexplicit asymptotic constants
//! are never asserted, only reported as fitted empirical suprema.

pub mod bsapprox;
pub mod characters;
pub mod cli;
pub mod config;
pub mod explicit;
pub mod lfunc;
pub mod mobius;
pub mod perron;
pub mod quad;
pub mod report;
pub mod special;
pub mod suite;
pub mod vtypical;

use thiserror::Error;

/// Crate-wide error type. Usage and data errors map to CLI exit code 2,
/// check failures to exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("zero dataset incomplete: need height {needed}, certified to {have}")]
    Completeness { needed: f64, have: f64 },
    #[error("tolerance not achieved: requested {requested:e}, achieved bound {achieved:e}")]
    ToleranceNotAchieved { requested: f64, achieved: f64 },
    #[error("evaluation too close to a zero of L (|L| = {modulus:e})")]
    NearZero { modulus: f64 },
    #[error("evaluation too close to a pole or zero at {location}")]
    NearPole { location: String },
    #[error("no admissible V in the typicality range [{lo}, {hi}]")]
    NoAdmissibleV { lo: i64, hi: i64 },
    #[error("quadrature failure: {0}")]
    Quadrature(String),
    #[error("contour passes within {dist:e} of a zero on segment {segment}")]
    ContourNearZero { segment: String, dist: f64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
