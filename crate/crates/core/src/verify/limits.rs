use crate::bounds::{mu1, mu2};

use super::{Location, VerificationOutcome};

const LIMIT: f64 = 0.875;
const LIMIT_TOLERANCE: f64 = 1e-6;
const SLOPE: f64 = 1.0 / 32.0;
const SLOPE_TOLERANCE: f64 = 1e-3;
const ENDPOINT_TOLERANCE: f64 = 1e-12;
const LIMIT_POINTS: [f64; 3] = [1e-3, 1e-4, 1e-5];
const SLOPE_AT: f64 = 1e-4;
const SLOPE_STEP: f64 = 1e-5;

/// Limits of the two thresholds as `a -> 0`, their slopes there, and the
/// closed form of `mu2(1)`.
pub fn verify_limits() -> Vec<VerificationOutcome> {
    let mut out = Vec::new();
    for (name, f) in [("mu2", mu2 as fn(f64) -> _), ("mu1", mu1 as fn(f64) -> _)] {
        out.push(limit_outcome(name, f));
    }
    for (name, f) in [("mu2", mu2 as fn(f64) -> _), ("mu1", mu1 as fn(f64) -> _)] {
        out.push(slope_outcome(name, f));
    }
    let exact = 3.0 * (13f64.sqrt() - 3.0) / 2.0;
    let rel = mu2(1.0).map_or(f64::INFINITY, |v| ((v - exact) / exact).abs());
    out.push(outcome(
        "limits.mu2_at_one",
        ENDPOINT_TOLERANCE - rel,
        1.0,
        1,
        "1e-12 - |mu2(1) - 3(sqrt(13) - 3)/2| / (3(sqrt(13) - 3)/2)",
    ));
    out
}

/// Two-point extrapolation assuming `f(a) = L + k a + O(a^2)`.
fn richardson(a1: f64, f1: f64, a2: f64, f2: f64) -> f64 {
    (a1 * f2 - a2 * f1) / (a1 - a2)
}

fn limit_outcome(name: &str, f: fn(f64) -> crate::Result<f64>) -> VerificationOutcome {
    let vals: Vec<f64> = LIMIT_POINTS.iter().map(|&a| f(a).unwrap_or(f64::NAN)).collect();
    // worst of the two successive extrapolations
    let margin = (0..LIMIT_POINTS.len() - 1)
        .map(|i| {
            let l = richardson(LIMIT_POINTS[i], vals[i], LIMIT_POINTS[i + 1], vals[i + 1]);
            LIMIT_TOLERANCE - (l - LIMIT).abs()
        })
        .fold(f64::INFINITY, f64::min);
    outcome(
        &format!("limits.{name}_limit_at_zero"),
        margin,
        LIMIT_POINTS[LIMIT_POINTS.len() - 1],
        LIMIT_POINTS.len(),
        "1e-6 - |L - 0.875|, L two-point extrapolated from a in {1e-3, 1e-4, 1e-5}",
    )
}

fn slope_outcome(name: &str, f: fn(f64) -> crate::Result<f64>) -> VerificationOutcome {
    let hi = f(SLOPE_AT + SLOPE_STEP).unwrap_or(f64::NAN);
    let lo = f(SLOPE_AT - SLOPE_STEP).unwrap_or(f64::NAN);
    let slope = (hi - lo) / (2.0 * SLOPE_STEP);
    outcome(
        &format!("limits.{name}_slope_at_zero"),
        SLOPE_TOLERANCE - (slope - SLOPE).abs(),
        SLOPE_AT,
        2,
        "1e-3 - |f'(1e-4) - 1/32|, central difference with h = 1e-5",
    )
}

fn outcome(id: &str, margin: f64, at: f64, samples: usize, notes: &str) -> VerificationOutcome {
    let margin = if margin.is_nan() { f64::NEG_INFINITY } else { margin };
    VerificationOutcome {
        check_id: id.to_string(),
        passed: margin >= 0.0,
        worst_margin: margin,
        worst_location: Location::Scalar(at),
        threshold: 0.0,
        samples,
        notes: notes.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_limits_pass() {
        let out = verify_limits();
        assert_eq!(out.len(), 5);
        for o in &out {
            assert!(o.passed && o.worst_margin > 0.0, "{o:?}");
        }
    }

    #[test]
    fn extrapolation_removes_linear_term() {
        let l = richardson(1e-3, 0.875 + 1e-3 / 32.0, 1e-4, 0.875 + 1e-4 / 32.0);
        assert!((l - 0.875).abs() < 1e-15);
    }
}
