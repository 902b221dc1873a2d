//! Sendov instances `P(z) = (z - a) prod (z - z_j)` and their critical points.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::roots::{find_roots, RootReport};

/// Slack on `|z_j| <= 1` so instances survive a JSON round trip.
pub const MODULUS_TOLERANCE: f64 = 1e-12;

/// A zero `a` in `(0, 1)` plus `n - 1` further zeros in the closed unit disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "InstanceJson", into = "InstanceJson")]
pub struct SendovInstance {
    a: f64,
    other_zeros: Vec<Complex64>,
}

impl SendovInstance {
    pub fn new(a: f64, other_zeros: Vec<Complex64>) -> Result<Self> {
        crate::error::unit_open("a", a)?;
        if other_zeros.is_empty() {
            return Err(Error::InvalidInput("need at least one other zero (degree >= 2)".into()));
        }
        for (j, z) in other_zeros.iter().enumerate() {
            if !(z.re.is_finite() && z.im.is_finite()) || z.norm() > 1.0 + MODULUS_TOLERANCE {
                return Err(Error::InvalidInput(format!("zero #{j} = {z} lies outside the closed unit disk")));
            }
        }
        Ok(SendovInstance { a, other_zeros })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn other_zeros(&self) -> &[Complex64] {
        &self.other_zeros
    }

    pub fn degree(&self) -> usize {
        self.other_zeros.len() + 1
    }

    /// All `n` zeros, `a` first.
    pub fn zeros(&self) -> Vec<Complex64> {
        std::iter::once(Complex64::new(self.a, 0.0)).chain(self.other_zeros.iter().copied()).collect()
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_roots(&self.zeros()).expect("validated instance")
    }
}

/// Wire form `{"a": real, "zeros": [[re, im], ...]}`; `zeros` excludes `a`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub a: f64,
    pub zeros: Vec<[f64; 2]>,
}

impl TryFrom<InstanceJson> for SendovInstance {
    type Error = Error;

    fn try_from(v: InstanceJson) -> Result<Self> {
        SendovInstance::new(v.a, v.zeros.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
    }
}

impl From<SendovInstance> for InstanceJson {
    fn from(inst: SendovInstance) -> Self {
        InstanceJson { a: inst.a, zeros: inst.other_zeros.iter().map(|z| [z.re, z.im]).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalPointReport {
    /// The `n - 1` zeros of `P'`.
    pub critical_points: Vec<Complex64>,
    /// `min |w - a|` over the critical points.
    pub sendov_distance: f64,
    /// Real part of the mean of all `n` zeros, `a` included.
    pub mean_real_part: f64,
    pub residuals: Vec<f64>,
    pub converged: bool,
    pub clusters: Vec<Vec<usize>>,
}

impl CriticalPointReport {
    /// Critical points of `prod (z - zeros[k])` measured from the distinguished
    /// zero `a`, which need not be real (used for rotated configurations).
    pub fn from_zeros(a: Complex64, zeros: &[Complex64]) -> Result<Self> {
        if zeros.len() < 2 {
            return Err(Error::InvalidInput("degree must be at least 2".into()));
        }
        let p = Polynomial::from_roots(zeros)?;
        let roots: RootReport = find_roots(&p.derivative()?)?;
        let sendov_distance = roots.roots.iter().map(|w| (w - a).norm()).fold(f64::INFINITY, f64::min);
        let mean_real_part = zeros.iter().map(|z| z.re).sum::<f64>() / zeros.len() as f64;
        Ok(CriticalPointReport {
            critical_points: roots.roots,
            sendov_distance,
            mean_real_part,
            residuals: roots.residuals,
            converged: roots.converged,
            clusters: roots.clusters,
        })
    }

    /// Whether the disk `|z - a| <= 1` holds a critical point, allowing `slack`.
    pub fn within_unit_distance(&self, slack: f64) -> bool {
        self.sendov_distance <= 1.0 + slack
    }

    pub fn certified(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NotConverged {
                iterations: 0,
                restarts: 0,
                worst_residual: self.residuals.iter().copied().fold(0.0, f64::max),
            })
        }
    }
}

/// Finds the critical points of the instance polynomial. Non-convergence is
/// carried in [`CriticalPointReport::converged`]; see
/// [`CriticalPointReport::certified`] to turn it into an error.
pub fn critical_report(inst: &SendovInstance) -> Result<CriticalPointReport> {
    CriticalPointReport::from_zeros(Complex64::new(inst.a, 0.0), &inst.zeros())
}
