use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::sendov::{critical_report, CriticalPointReport, SendovInstance};

/// Structured instances with many zeros on the unit circle or at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalCase {
    /// `(z - a)(z^(n-1) - 1)`.
    UnitRoots,
    /// `(z - a)(z^(n-1) + 1)`.
    ShiftedUnitRoots,
    /// `(z - a) z^(n-1)`.
    Origin,
}

impl ExtremalCase {
    pub const ALL: [ExtremalCase; 3] = [ExtremalCase::UnitRoots, ExtremalCase::ShiftedUnitRoots, ExtremalCase::Origin];

    pub fn instance(self, a: f64, degree: usize) -> Result<SendovInstance> {
        let m = degree.saturating_sub(1);
        let zeros = (0..m)
            .map(|k| {
                let turn = match self {
                    ExtremalCase::UnitRoots => k as f64,
                    ExtremalCase::ShiftedUnitRoots => k as f64 + 0.5,
                    ExtremalCase::Origin => return Complex64::new(0.0, 0.0),
                };
                Complex64::from_polar(1.0, std::f64::consts::TAU * turn / m as f64)
            })
            .collect();
        SendovInstance::new(a, zeros)
    }
}

/// Critical-point reports for every structured family at `(a, degree)`.
pub fn extremal_cases(a: f64, degree: usize) -> Result<Vec<(ExtremalCase, CriticalPointReport)>> {
    ExtremalCase::ALL.iter().map(|&c| Ok((c, critical_report(&c.instance(a, degree)?)?))).collect()
}

/// The structured case with the largest Sendov distance.
pub fn check_extremal(a: f64, degree: usize) -> Result<CriticalPointReport> {
    super::fuzz::validate(a, degree, 1)?;
    let cases = extremal_cases(a, degree)?;
    let worst =
        cases.into_iter().max_by(|x, y| x.1.sendov_distance.total_cmp(&y.1.sendov_distance)).expect("three cases");
    Ok(worst.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_family_closed_form() {
        let (_, r) = extremal_cases(0.5, 5).unwrap().into_iter().find(|(c, _)| *c == ExtremalCase::Origin).unwrap();
        assert!((r.sendov_distance - 0.1).abs() < 1e-12);
    }

    #[test]
    fn degree_two_shifted_is_midpoint() {
        let inst = ExtremalCase::ShiftedUnitRoots.instance(0.9, 2).unwrap();
        assert!((inst.other_zeros()[0] - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        let r = critical_report(&inst).unwrap();
        assert!((r.sendov_distance - 0.95).abs() < 1e-15);
    }

    #[test]
    fn unit_roots_within_one() {
        let (_, r) = extremal_cases(0.5, 5).unwrap().into_iter().find(|(c, _)| *c == ExtremalCase::UnitRoots).unwrap();
        assert!(r.converged);
        assert!(r.sendov_distance <= 1.0);
    }

    #[test]
    fn worst_case_is_within_one() {
        for n in [2, 3, 8, 33] {
            for a in [0.1, 0.5, 0.9] {
                let r = check_extremal(a, n).unwrap();
                assert!(r.converged, "{a} {n}");
                assert!(r.within_unit_distance(1e-9), "{a} {n} {}", r.sendov_distance);
            }
        }
    }

    #[test]
    fn rejects_bad_degree() {
        assert!(check_extremal(0.5, 1).is_err());
        assert!(check_extremal(0.5, 201).is_err());
    }
}
