//! Simultaneous root finding by Aberth–Ehrlich iteration.
//!
//! The iteration runs in binary64 with a backward-error stopping rule, then a
//! few polishing sweeps re-evaluate `P` with double-double accumulation so
//! simple roots land within a few ulps of the roots of the stored
//! coefficients. Every root carries a scaled residual certificate; a report
//! is only marked converged when all certificates pass.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Residual bound `|P(r)| <= threshold * max|c_k| (1 + |r|)^n` for certified roots.
pub const CERTIFICATION_THRESHOLD: f64 = 1e-10;
/// Roots closer than this are reported as one cluster.
pub const CLUSTER_RADIUS: f64 = 1e-7;

/// Fractional part of the golden ratio, in turns; keeps the starting circle
/// off every axis of symmetry a structured input might have.
const ANGLE_OFFSET: f64 = 0.618_033_988_749_894_8 * TAU / 7.0;
const POLISH_SWEEPS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootFinderOptions {
    pub max_iterations: usize,
    pub max_restarts: usize,
    pub certification: f64,
    pub cluster_radius: f64,
}

impl Default for RootFinderOptions {
    fn default() -> Self {
        RootFinderOptions {
            max_iterations: 200,
            max_restarts: 3,
            certification: CERTIFICATION_THRESHOLD,
            cluster_radius: CLUSTER_RADIUS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootReport {
    pub roots: Vec<Complex64>,
    /// `|P(r)| / (max|c_k| (1 + |r|)^n)` per root.
    pub residuals: Vec<f64>,
    pub converged: bool,
    /// Iterations summed over every attempt.
    pub iterations: usize,
    pub restarts: usize,
    /// Index groups of roots closer than the cluster radius (only groups of 2+).
    pub clusters: Vec<Vec<usize>>,
}

impl RootReport {
    pub fn worst_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// Turns a non-converged report into [`Error::NotConverged`].
    pub fn certified(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NotConverged {
                iterations: self.iterations,
                restarts: self.restarts,
                worst_residual: self.worst_residual(),
            })
        }
    }
}

pub fn find_roots(p: &Polynomial) -> Result<RootReport> {
    find_roots_with(p, &RootFinderOptions::default())
}

pub fn find_roots_with(p: &Polynomial, opts: &RootFinderOptions) -> Result<RootReport> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::InvalidInput("a constant polynomial has no roots".into()));
    }
    if n == 1 {
        let c = p.coeffs();
        let root = -c[0] / c[1];
        let residuals = vec![p.scaled_residual(root)];
        let converged = residuals[0] <= opts.certification;
        return Ok(RootReport {
            roots: vec![root],
            residuals,
            converged,
            iterations: 0,
            restarts: 0,
            clusters: vec![],
        });
    }

    let mut iterations = 0;
    let mut best: Option<RootReport> = None;
    for attempt in 0..=opts.max_restarts {
        let mut z = initial_guesses(p, attempt);
        // roots at a multiple zero never meet the backward-error rule and
        // use the whole budget; the residual certificate decides for them
        let used = aberth(p, &mut z, opts.max_iterations);
        iterations += used;
        // polishing sweeps come out of the same budget
        polish(p, &mut z, POLISH_SWEEPS.min(opts.max_iterations - used));

        let residuals: Vec<f64> = z.iter().map(|&r| p.scaled_residual(r)).collect();
        let finite = z.iter().all(|r| r.re.is_finite() && r.im.is_finite());
        let converged = finite && residuals.iter().all(|&r| r <= opts.certification);
        let report = RootReport {
            clusters: clusters(&z, opts.cluster_radius),
            roots: z,
            residuals,
            converged,
            iterations,
            restarts: attempt,
        };
        if converged {
            return Ok(report);
        }
        let better = match &best {
            None => true,
            Some(b) => finite && report.worst_residual() < b.worst_residual(),
        };
        if better {
            best = Some(report);
        }
    }
    let mut report = best.expect("at least one attempt");
    report.iterations = iterations;
    report.restarts = opts.max_restarts;
    Ok(report)
}

/// Equally spaced points on a circle enclosing every root. The radius is
/// Fujiwara's bound `2 max_k |c_(n-k) / c_n|^(1/k)`, never larger than the
/// Cauchy bound `1 + max_k |c_k / c_n|` and usually far smaller for
/// derivatives of high-degree polynomials. Restarts rotate and rescale the
/// circle by a seeded pseudo-random amount.
fn initial_guesses(p: &Polynomial, attempt: usize) -> Vec<Complex64> {
    let n = p.degree();
    let lead = p.leading().norm();
    let c = p.coeffs();
    let cauchy = 1.0 + c[..n].iter().map(|c| c.norm() / lead).fold(0.0, f64::max);
    let fujiwara = (1..=n)
        .map(|k| {
            let ratio = c[n - k].norm() / lead;
            // the constant term enters with half weight in Fujiwara's bound
            let ratio = if k == n { ratio / 2.0 } else { ratio };
            ratio.powf(1.0 / k as f64)
        })
        .fold(0.0, f64::max)
        * 2.0;
    let base = if fujiwara > 0.0 { fujiwara.min(cauchy) } else { cauchy };
    let (mut radius, mut offset) = (base, ANGLE_OFFSET);
    if attempt > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0000 + attempt as u64);
        radius *= rng.random_range(0.5..1.5);
        offset += rng.random_range(0.0..TAU / n as f64);
    }
    (0..n).map(|k| Complex64::from_polar(radius, offset + TAU * k as f64 / n as f64)).collect()
}

/// Horner value, derivative and the running-error bound `sum |c_k| |z|^k`.
fn eval_with_bound(p: &Polynomial, z: Complex64) -> (Complex64, Complex64, f64) {
    let zero = Complex64::new(0.0, 0.0);
    let r = z.norm();
    p.coeffs().iter().rev().fold((zero, zero, 0.0), |(v, d, b), &c| (v * z + c, d * z + v, b * r + c.norm()))
}

fn aberth_step(z: &[Complex64], i: usize, value: Complex64, deriv: Complex64) -> Complex64 {
    let newton = value / deriv;
    let repulsion: Complex64 = z.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &zj)| (z[i] - zj).inv()).sum();
    newton / (Complex64::new(1.0, 0.0) - newton * repulsion)
}

/// Gauss–Seidel Aberth sweeps. A root stops moving once `|P(z)|` is below
/// the Horner rounding bound. Returns the iterations used.
fn aberth(p: &Polynomial, z: &mut [Complex64], max_iterations: usize) -> usize {
    let n = z.len();
    let noise = 4.0 * (n as f64 + 1.0) * f64::EPSILON;
    let mut settled = vec![false; n];
    for iter in 1..=max_iterations {
        for i in 0..n {
            if settled[i] {
                continue;
            }
            let (value, deriv, bound) = eval_with_bound(p, z[i]);
            if value.norm() <= noise * bound {
                settled[i] = true;
                continue;
            }
            let step = aberth_step(z, i, value, deriv);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] -= step;
            } else {
                // derivative vanished: nudge off the critical point
                z[i] += Complex64::from_polar(1e-8 * (1.0 + z[i].norm()), ANGLE_OFFSET * (i + 1) as f64);
            }
        }
        if settled.iter().all(|&s| s) {
            return iter;
        }
    }
    max_iterations
}

/// Aberth corrections driven by the compensated value of `P`; a move is kept
/// only if it lowers that value.
fn polish(p: &Polynomial, z: &mut [Complex64], sweeps: usize) {
    let n = z.len();
    for _ in 0..sweeps {
        let mut moved = false;
        for i in 0..n {
            let value = p.eval_compensated(z[i]);
            if value.norm() == 0.0 {
                continue;
            }
            let (_, deriv) = p.eval_with_derivative(z[i]);
            let step = aberth_step(z, i, value, deriv);
            if !(step.re.is_finite() && step.im.is_finite()) || step.norm() <= f64::EPSILON * z[i].norm() {
                continue;
            }
            let candidate = z[i] - step;
            if p.eval_compensated(candidate).norm() < value.norm() {
                z[i] = candidate;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
}

fn clusters(z: &[Complex64], radius: f64) -> Vec<Vec<usize>> {
    // single-linkage grouping via union-find
    let mut parent: Vec<usize> = (0..z.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            if (z[i] - z[j]).norm() < radius {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; z.len()];
    for i in 0..z.len() {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(i);
    }
    groups.retain(|g| g.len() > 1);
    groups
}
