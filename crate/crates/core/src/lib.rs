//! Explicit degree bounds for Sendov's conjecture and the numerics around them.
//!
//! * [`bounds`]: closed-form thresholds `N0`, `N1`, `N2`, `N3` and the headline
//!   bound `20800 / (a^7 (1 - a)^4)`, the quadratic-root thresholds and the
//!   mean-of-zeros bound.
//! * [`poly`], [`roots`], [`sendov`]: complex polynomials, a certified
//!   Aberth–Ehrlich root finder, and critical points of Sendov instances.
//! * [`verify`]: grid inequality suites, limit checks, the estimate chain,
//!   and randomized Sendov fuzzing.
//!
//! Data-parallel loops run on rayon when the `parallel` feature is enabled
//! (the default); pass [`Execution::Sequential`] to force a single thread.

pub mod bounds;
mod eft;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod minimize;
pub mod poly;
pub mod roots;
pub mod sendov;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
pub use num_complex::Complex64;
pub use poly::Polynomial;
pub use roots::{find_roots, find_roots_with, RootFinderOptions, RootReport};
pub use sendov::{critical_report, CriticalPointReport, SendovInstance};
