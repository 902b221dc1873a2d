//! Verification suites over the bound engine and the critical-point engine.
//!
//! Every check is a margin function `m(x)` that must stay at or above the
//! check's threshold; failures are reported, never raised. Outcomes carry the
//! worst margin and where it occurred so any line of a report can be
//! re-derived by evaluating the named inequality at that location.

mod chain;
mod extremal;
mod fuzz;
mod inequalities;
mod limits;

pub use chain::verify_estimate_chain;
pub use extremal::{check_extremal, extremal_cases, ExtremalCase};
pub use fuzz::{fuzz_matrix, fuzz_sendov, random_instance, FuzzReport, FuzzSummary, MAX_FUZZ_DEGREE, VIOLATION_SLACK};
pub use inequalities::{run_inequality_suite, DEFAULT_EXTRA_RANDOM};
pub use limits::verify_limits;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;

/// Margin required where an inequality is strict.
pub const STRICT_MARGIN: f64 = 1e-12;
pub const DEFAULT_GRID_STEP: f64 = 1e-3;
/// Seed for the random points and fuzz trials when none is given.
pub const DEFAULT_SEED: u64 = 42;
pub const MAX_GRID_STEP: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Location {
    Scalar(f64),
    Point([f64; 2]),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationOutcome {
    pub check_id: String,
    pub passed: bool,
    pub worst_margin: f64,
    pub worst_location: Location,
    pub threshold: f64,
    pub samples: usize,
    pub notes: String,
}

impl VerificationOutcome {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("outcome serialises")
    }
}

/// Validates a grid step for the sweeps.
pub fn check_grid_step(step: f64) -> Result<f64> {
    if step > 0.0 && step <= MAX_GRID_STEP {
        Ok(step)
    } else {
        Err(Error::Domain { name: "grid_step", value: step, domain: "(0, 0.01]" })
    }
}

/// `lo + k * step` strictly inside `(lo, hi)`. When `1/step` is an integer the
/// points are formed as `k / m`, so a step of `1e-3` yields exactly the decimal
/// grid `0.001, 0.002, ...`.
pub(crate) fn open_grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let m = (1.0 / step).round();
    let exact = (m * step - 1.0).abs() < 1e-12;
    let k_lo = (lo / step).floor() as i64;
    let k_hi = (hi / step).ceil() as i64;
    (k_lo..=k_hi).map(|k| if exact { k as f64 / m } else { k as f64 * step }).filter(|&x| x > lo && x < hi).collect()
}

/// Seeded uniform points in `(lo, hi)`.
pub(crate) fn random_points(lo: f64, hi: f64, count: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| loop {
            let x = rng.random_range(lo..hi);
            if x > lo {
                break x;
            }
        })
        .collect()
}

/// One named inequality as a margin function; `None` marks points outside
/// the inequality's domain.
pub(crate) struct Check {
    pub id: &'static str,
    pub threshold: f64,
    pub notes: &'static str,
    pub margin: Box<dyn Fn(f64) -> Option<f64> + Sync + Send>,
}

impl Check {
    pub fn new<F>(id: &'static str, threshold: f64, notes: &'static str, margin: F) -> Self
    where
        F: Fn(f64) -> Option<f64> + Sync + Send + 'static,
    {
        Check { id, threshold, notes, margin: Box::new(margin) }
    }

    /// Evaluates the check over `points` (sorted ascending for a stable
    /// tie-break on the worst location).
    pub fn run(&self, points: &[f64], exec: Execution) -> VerificationOutcome {
        let margins = exec.map_slice(points, |&x| (self.margin)(x).map(|m| (x, m)));
        let mut samples = 0;
        let mut worst: Option<(f64, f64)> = None;
        for (x, m) in margins.into_iter().flatten() {
            samples += 1;
            // NaN margins count as the worst possible outcome
            let m = if m.is_nan() { f64::NEG_INFINITY } else { m };
            if worst.is_none_or(|(_, w)| m < w) {
                worst = Some((x, m));
            }
        }
        let (loc, worst_margin) = worst.unwrap_or((f64::NAN, f64::NEG_INFINITY));
        VerificationOutcome {
            check_id: self.id.to_string(),
            passed: samples > 0 && worst_margin >= self.threshold,
            worst_margin,
            worst_location: Location::Scalar(loc),
            threshold: self.threshold,
            samples,
            notes: self.notes.to_string(),
        }
    }
}

/// Sorted union of a grid and extra points.
pub(crate) fn merge_points(mut grid: Vec<f64>, extra: Vec<f64>) -> Vec<f64> {
    grid.extend(extra);
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    grid
}

/// Runs the inequality suite, the limit checks and the estimate chain, in
/// that order.
pub fn run_all(grid_step: f64, extra_random: usize, seed: u64, exec: Execution) -> Result<Vec<VerificationOutcome>> {
    let mut out = run_inequality_suite(grid_step, extra_random, seed, exec)?;
    out.extend(verify_limits());
    out.extend(verify_estimate_chain(grid_step, exec)?);
    Ok(out)
}
