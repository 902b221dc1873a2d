use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{unit_open, Error, Result};
use crate::exec::Execution;
use crate::sendov::{critical_report, SendovInstance};

/// A trial counts as a violation when its nearest critical point is farther
/// than `1 + VIOLATION_SLACK` from `a`.
pub const VIOLATION_SLACK: f64 = 1e-9;
pub const MAX_FUZZ_DEGREE: usize = 200;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub a: f64,
    pub degree: usize,
    pub trials: u64,
    /// Over trials whose root finding converged; 0 if none did.
    pub max_sendov_distance: f64,
    pub violations: u64,
    pub passes: u64,
    pub seed: u64,
    pub non_converged: u64,
    /// Full instances behind every violation, for re-checking.
    pub violating_instances: Vec<SendovInstance>,
}

/// One CSV row of a fuzz summary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub a: f64,
    pub degree: usize,
    pub trials: u64,
    pub violations: u64,
    pub max_distance: f64,
    pub non_converged: u64,
    pub seed: u64,
}

impl FuzzReport {
    pub fn summary(&self) -> FuzzSummary {
        FuzzSummary {
            a: self.a,
            degree: self.degree,
            trials: self.trials,
            violations: self.violations,
            max_distance: self.max_sendov_distance,
            non_converged: self.non_converged,
            seed: self.seed,
        }
    }
}

pub(super) fn validate(a: f64, degree: usize, trials: u64) -> Result<()> {
    unit_open("a", a)?;
    if !(2..=MAX_FUZZ_DEGREE).contains(&degree) {
        return Err(Error::Domain { name: "degree", value: degree as f64, domain: "[2, 200]" });
    }
    if trials == 0 {
        return Err(Error::Domain { name: "trials", value: 0.0, domain: ">= 1" });
    }
    Ok(())
}

/// Trial `trial` of a fuzz run: `degree - 1` zeros uniform by area on the
/// closed unit disk, from a ChaCha8 stream keyed by `(seed, trial)`.
pub fn random_instance(a: f64, degree: usize, seed: u64, trial: u64) -> Result<SendovInstance> {
    validate(a, degree, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let zeros = (1..degree)
        .map(|_| {
            let r = rng.random::<f64>().sqrt();
            let theta = rng.random_range(0.0..std::f64::consts::TAU);
            Complex64::from_polar(r, theta)
        })
        .collect();
    SendovInstance::new(a, zeros)
}

enum Trial {
    Pass(f64),
    Violation(f64, SendovInstance),
    NotConverged,
}

/// Runs `trials` random instances and tallies Sendov violations. Root-finder
/// failures are counted in `non_converged`, never as violations.
pub fn fuzz_sendov(a: f64, degree: usize, trials: u64, seed: u64, exec: Execution) -> Result<FuzzReport> {
    validate(a, degree, trials)?;
    let outcomes = exec.map_range(trials as usize, |t| {
        let inst = random_instance(a, degree, seed, t as u64).expect("validated parameters");
        match critical_report(&inst) {
            Ok(r) if r.converged => {
                if r.within_unit_distance(VIOLATION_SLACK) {
                    Trial::Pass(r.sendov_distance)
                } else {
                    Trial::Violation(r.sendov_distance, inst)
                }
            }
            _ => Trial::NotConverged,
        }
    });
    let mut report = FuzzReport {
        a,
        degree,
        trials,
        max_sendov_distance: 0.0,
        violations: 0,
        passes: 0,
        seed,
        non_converged: 0,
        violating_instances: Vec::new(),
    };
    for o in outcomes {
        match o {
            Trial::Pass(d) => {
                report.passes += 1;
                report.max_sendov_distance = report.max_sendov_distance.max(d);
            }
            Trial::Violation(d, inst) => {
                report.violations += 1;
                report.max_sendov_distance = report.max_sendov_distance.max(d);
                report.violating_instances.push(inst);
            }
            Trial::NotConverged => report.non_converged += 1,
        }
    }
    Ok(report)
}

/// `fuzz_sendov` over every `(a, degree)` pair, `a` outermost. Each cell uses
/// the same `seed`, so a row reproduces with a single `fuzz_sendov` call.
pub fn fuzz_matrix(
    a_values: &[f64],
    degrees: &[usize],
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<Vec<FuzzReport>> {
    let mut out = Vec::with_capacity(a_values.len() * degrees.len());
    for &a in a_values {
        for &n in degrees {
            out.push(fuzz_sendov(a, n, trials, seed, exec)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_seeded_and_in_disk() {
        let x = random_instance(0.5, 10, 42, 3).unwrap();
        assert_eq!(x, random_instance(0.5, 10, 42, 3).unwrap());
        assert_ne!(x, random_instance(0.5, 10, 42, 4).unwrap());
        assert_ne!(x, random_instance(0.5, 10, 43, 3).unwrap());
        assert_eq!(x.degree(), 10);
        assert!(x.other_zeros().iter().all(|z| z.norm() <= 1.0));
    }

    #[test]
    fn area_uniform_radii() {
        // P(|z| <= 1/2) = 1/4 under the area measure
        let inner: usize = (0..200)
            .map(|t| random_instance(0.5, 51, 9, t).unwrap().other_zeros().iter().filter(|z| z.norm() <= 0.5).count())
            .sum();
        let frac = inner as f64 / 10_000.0;
        assert!((frac - 0.25).abs() < 0.02, "{frac}");
    }

    #[test]
    fn degree_two_never_violates() {
        let r = fuzz_sendov(0.5, 2, 200, 1, Execution::Parallel).unwrap();
        assert_eq!(r.violations, 0);
        assert_eq!(r.passes + r.non_converged + r.violations, r.trials);
        assert!(r.max_sendov_distance <= 0.75 + 1e-12);
    }

    #[test]
    fn degree_eight_sample() {
        let r = fuzz_sendov(0.5, 8, 500, 42, Execution::Parallel).unwrap();
        assert_eq!(r.violations, 0);
        assert_eq!(r.non_converged, 0);
    }

    #[test]
    fn modes_agree() {
        let s = fuzz_sendov(0.7, 16, 64, 5, Execution::Sequential).unwrap();
        let p = fuzz_sendov(0.7, 16, 64, 5, Execution::Parallel).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), serde_json::to_string(&p).unwrap());
    }

    #[test]
    fn validation() {
        assert!(fuzz_sendov(0.5, 1, 10, 0, Execution::Sequential).is_err());
        assert!(fuzz_sendov(0.5, 201, 10, 0, Execution::Sequential).is_err());
        assert!(fuzz_sendov(1.0, 4, 10, 0, Execution::Sequential).is_err());
        assert!(fuzz_sendov(0.5, 4, 0, 0, Execution::Sequential).is_err());
    }
}
