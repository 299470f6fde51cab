//! Exact-arithmetic toolkit for reflective Jacobi forms and their Borcherds
//! lifts on the rank-3 paramodular tower.
//!
//! The crate is organised as a pipeline:
//! - [`series`]: sparse Laurent/power-series kernels in one and three
//!   variables over big integers, plus the scalar modular series.
//! - [`jacobi`]: weak and nearly holomorphic Jacobi forms — the theta series,
//!   the weight-0 generator catalog, Eisenstein–Jacobi series.
//! - [`reflective`]: the reflective-form bases per index, the reflectivity
//!   criterion, root classes, divisor multiplicities, and the
//!   multiplicity-{0,1} search.
//! - [`borcherds`]: the exponential (Borcherds) lift and its leading-exponent
//!   data, plus simple-root multiplicity extraction.
//! - [`hyperbolic`]: rank-3 hyperbolic lattice geometry — reflections,
//!   fundamental chambers, Weyl vectors, generalized Cartan matrices.
//! - [`maass`]: explicit arithmetic sum-side expansions and the
//!   product-vs-sum identity verifier.
//! - [`cli`]: the command-line surface.

pub mod series;
pub mod jacobi;
pub mod reflective;
pub mod borcherds;
pub mod hyperbolic;
pub mod maass;
pub mod cli;

use thiserror::Error;

/// Crate-wide error type. Variants carry the first failing position where
/// that is meaningful, since "where exactness first broke" is the primary
/// debugging signal in exact series pipelines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("series is not divisible: first failing exponent position {pos:?}")]
    NonDivisible { pos: Vec<i64> },
    #[error("series is not a unit (leading coefficient not ±1 or no leading term)")]
    NotAUnit,
    #[error("non-exact scalar division by {divisor} at position {pos:?}")]
    Exactness { divisor: String, pos: Vec<i64> },
    #[error("Jacobi-form division failed at scaled q-order {q_order}")]
    DivisionFailed { q_order: i64 },
    #[error("insufficient precision: needed coefficient at {pos:?} beyond truncation")]
    InsufficientPrecision { pos: Vec<i64> },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("identity mismatch at monomial {pos:?}: lhs {lhs} vs rhs {rhs}")]
    Mismatch { pos: Vec<i64>, lhs: String, rhs: String },
    #[error("search box too small to certify orbit coverage")]
    BoxTooSmall,
    #[error("chamber construction did not terminate within the search radius")]
    NotTerminated,
    #[error("orbit exceeded the element cap {cap}")]
    OrbitUnbounded { cap: usize },
    #[error("numeric tail estimate {est} exceeds tolerance {tol}")]
    TailTooLarge { est: f64, tol: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
