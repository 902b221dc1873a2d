use serde::{Deserialize, Serialize};

use crate::error::{unit_open, Error, Result};
use crate::minimize::scan_then_refine;

pub const MEAN_SCAN_POINTS: usize = 1024;
const EDGE: f64 = 1e-9;
const REFINE_WIDTH: f64 = 1e-12;

/// Upper bounds on the real part of the mean of the zeros of a degree-`n`
/// polynomial that would violate the conjecture at `a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanBound {
    pub a: f64,
    pub n: u64,
    /// Objective at `delta = a/4`.
    pub bound_at_quarter: f64,
    /// Numerical infimum over `delta` in `(0, a)`.
    pub bound_inf: f64,
    /// Where the infimum was found.
    pub delta_at_inf: f64,
}

/// `delta/2 - log(1 - sqrt(1 + delta^2 - delta a)) / (delta n)`.
pub fn mean_objective(a: f64, n: f64, delta: f64) -> f64 {
    // 1 - sqrt(1 - x) = x / (1 + sqrt(1 - x)) with x = delta (a - delta) > 0
    let x = delta * (a - delta);
    let gap = x / (1.0 + (1.0 - x).sqrt());
    delta / 2.0 - gap.ln() / (delta * n)
}

pub fn mean_upper_bound(a: f64, n: u64) -> Result<MeanBound> {
    unit_open("a", a)?;
    if n < 2 {
        return Err(Error::Domain { name: "n", value: n as f64, domain: "n >= 2" });
    }
    let nf = n as f64;
    let f = |d: f64| mean_objective(a, nf, d);
    let bound_at_quarter = f(a / 4.0);
    let (mut delta_at_inf, mut bound_inf) = scan_then_refine(f, EDGE, a - EDGE, MEAN_SCAN_POINTS, REFINE_WIDTH);
    // a/4 is itself a candidate point
    if bound_at_quarter < bound_inf {
        (delta_at_inf, bound_inf) = (a / 4.0, bound_at_quarter);
    }
    Ok(MeanBound { a, n, bound_at_quarter, bound_inf, delta_at_inf })
}
