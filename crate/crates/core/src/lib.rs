//! Exact commutative algebra over GF(p) for tangent spaces to Hilbert and
//! Quot schemes of points.
//!
//! The engine works with submodules K of a free module F over a polynomial
//! ring and the finite-length quotient M = F/K. It computes Gröbner bases
//! for modules, initial submodules, minimal graded free resolutions, graded
//! Hom/Ext dimension tables, and the tangent-space dimension hom(K, M),
//! together with enumeration of all monomial submodules of fixed colength
//! and verification sweeps for parity, duality, consecutive-cancellation and
//! semicontinuity identities.

pub mod cli;
pub mod element;
pub mod enumeration;
pub mod ext;
pub mod field;
pub mod grading;
pub mod groebner;
pub mod hom;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod parity;
pub mod presentation;
pub mod random;
pub mod report;
pub mod resolution;
pub mod submodule;
pub mod text;

use thiserror::Error;

/// Engine-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is not a prime in (0, 2^31)")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("exponent overflow: exponent exceeds cap {0}")]
    ExponentOverflow(u32),
    #[error("element is not homogeneous for the declared grading")]
    NonHomogeneous,
    #[error("quotient has infinite colength")]
    InfiniteColength,
    #[error("step budget of {0} exceeded")]
    StepBudget(u64),
    #[error("retry budget of {0} exhausted while sampling")]
    RetryBudget(u32),
    #[error("gradings are incompatible: {0}")]
    GradingMismatch(String),
    #[error("no count oracle for {0} variables (only 1..=3 supported)")]
    UnsupportedCountOracle(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource budget exceeded: {0}")]
    ResourceBudget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
