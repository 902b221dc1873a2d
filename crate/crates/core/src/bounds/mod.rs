//! Closed-form degree bounds for Sendov's conjecture at a zero `a` in `(0, 1)`.
//!
//! The chain is: a mean bound forcing `m <= a/4` (`n0`), two thresholds making
//! the upper estimate `|P(c)| <= 1 + a` available (`n1`, `n2`), and a growth
//! rate `K' > 1` for the lower estimate `|P(c)| >= C K'^(n-1)`, which together
//! contradict each other beyond `n3`. Everything is evaluated in binary64;
//! the two quadratic-root thresholds `mu1`, `mu2` use a cancellation-free form
//! evaluated in double-double and rounded once.

mod mean;

pub use mean::{mean_objective, mean_upper_bound, MeanBound, MEAN_SCAN_POINTS};

use serde::{Deserialize, Serialize};

use crate::eft::Dd;
use crate::error::{open_interval, unit_open, Error, Result};

/// Numerator of the headline bound `20800 / (a^7 (1 - a)^4)`.
pub const FINAL_BOUND_CONSTANT: f64 = 20800.0;

/// Parameters fixed by `a` alone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AuxParams {
    pub a: f64,
    /// `(a/4) / (1 + a/2)`: the exponent `q` with the mean replaced by `a/4`.
    pub q_prime: f64,
    /// `(a/4) / (1 - a/2)`: the same replacement in `p`.
    pub p_prime: f64,
    /// `0.1 a + 0.9`.
    pub gamma: f64,
    /// `a * gamma`, the evaluation point between 0 and `a`.
    pub c: f64,
}

pub fn aux_params(a: f64) -> Result<AuxParams> {
    unit_open("a", a)?;
    let gamma = 0.1 * a + 0.9;
    Ok(AuxParams { a, q_prime: (a / 4.0) / (1.0 + a / 2.0), p_prime: (a / 4.0) / (1.0 - a / 2.0), gamma, c: a * gamma })
}

fn check_c(a: f64, c: f64) -> Result<()> {
    unit_open("a", a)?;
    open_interval("c", c, 0.0, a, "(0, a)")?;
    Ok(())
}

/// `32 log(40 / a^2) / a^2`.
pub fn n0(a: f64) -> Result<f64> {
    unit_open("a", a)?;
    Ok(32.0 * (40.0 / (a * a)).ln() / (a * a))
}

/// The degree threshold before `4 - sqrt(16 - 3a^2)` is replaced by `a^2/10`:
/// `32 log(4 / (4 - sqrt(16 - 3a^2))) / a^2`.
pub fn n0_sharp(a: f64) -> Result<f64> {
    unit_open("a", a)?;
    Ok(32.0 * (4.0 / sqrt_gap(a)).ln() / (a * a))
}

/// `4 - sqrt(16 - 3a^2)` without cancellation.
pub fn sqrt_gap(a: f64) -> f64 {
    3.0 * a * a / (4.0 + (16.0 - 3.0 * a * a).sqrt())
}

/// `max(9 ((4 + 2a)/a)^2, n0(a))`.
pub fn n1(a: f64) -> Result<f64> {
    let first = 9.0 * ((4.0 + 2.0 * a) / a).powi(2);
    Ok(first.max(n0(a)?))
}

/// `max(9 (log(a/16) / log(c/(1+a)))^2, n0(a))` for `0 < c < a`.
pub fn n2(a: f64, c: f64) -> Result<f64> {
    check_c(a, c)?;
    let first = 9.0 * ((a / 16.0).ln() / (c / (1.0 + a)).ln()).powi(2);
    Ok(first.max(n0(a)?))
}

/// `max((1/(1+a))^x, ((1+c)/(1+a))^x sqrt(1 + c^2 - ac)^(1-x))`.
pub fn d_function(a: f64, c: f64, x: f64) -> Result<f64> {
    check_c(a, c)?;
    unit_open("x", x)?;
    let first = (1.0 / (1.0 + a)).powf(x);
    let second = ((1.0 + c) / (1.0 + a)).powf(x) * (1.0 + c * c - a * c).sqrt().powf(1.0 - x);
    Ok(first.max(second))
}

/// Natural logs of the two growth factors
/// `K1 = (1 + c - ac)^p sqrt(1 + c^2 - ac)^(1-p)` and
/// `K2 = (1 + c)^q sqrt(1 + c^2 - ac)^(1-q)`.
pub fn log_k_factors(a: f64, c: f64, p: f64, q: f64) -> Result<(f64, f64)> {
    check_c(a, c)?;
    unit_open("p", p)?;
    unit_open("q", q)?;
    // 1 + c^2 - ac = 1 - c(a - c) < 1, so log1p keeps the small negative term exact
    let log_base = 0.5 * (-(c * (a - c))).ln_1p();
    let log_k1 = p * (c * (1.0 - a)).ln_1p() + (1.0 - p) * log_base;
    let log_k2 = q * c.ln_1p() + (1.0 - q) * log_base;
    Ok((log_k1, log_k2))
}

pub fn k_factors(a: f64, c: f64, p: f64, q: f64) -> Result<(f64, f64)> {
    let (l1, l2) = log_k_factors(a, c, p, q)?;
    Ok((l1.exp(), l2.exp()))
}

/// `min(K1(a, c, p'), K2(a, c, q'))` at `c = a gamma(a)`.
pub fn k_prime(a: f64) -> Result<f64> {
    Ok(log_k_prime(a)?.exp())
}

pub fn log_k_prime(a: f64) -> Result<f64> {
    let aux = aux_params(a)?;
    let (l1, l2) = log_k_factors(a, aux.c, aux.p_prime, aux.q_prime)?;
    Ok(l1.min(l2))
}

/// Positive root of `x^2 + beta x + rho` with `beta = (8 + 2a - a^2)/a^2`,
/// `rho = -(7 + 2a)/a^2`, computed as `2(2a + 7) / (sqrt(t) + 8 + 2a - a^2)`
/// where `t = a^4 + 4a^3 + 16a^2 + 32a + 64`.
pub fn mu2(a: f64) -> Result<f64> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain { name: "a", value: a, domain: "(0, 1]" });
    }
    let t = horner_dd(&[1.0, 4.0, 16.0, 32.0, 64.0], a);
    let tail = horner_dd(&[-1.0, 2.0, 8.0], a);
    let num = Dd::new(4.0).mul_f64(a).add_f64(14.0);
    Ok(num.div(t.sqrt().add(tail)).to_f64())
}

/// Positive root of the threshold quadratic for `K1`, computed as
/// `2(7 - 5a) / (sqrt(g) + a^3 - a^2 - 6a + 8)` with
/// `g = a^6 - 2a^5 + 9a^4 - 20a^3 + 48a^2 - 96a + 64`. The direct quadratic formula
/// divides by `2a^2(1 - a)`; this one has no pole at `a = 1` but the
/// operation keeps the open domain.
pub fn mu1(a: f64) -> Result<f64> {
    unit_open("a", a)?;
    let g = horner_dd(&[1.0, -2.0, 9.0, -20.0, 48.0, -96.0, 64.0], a);
    let tail = horner_dd(&[1.0, -1.0, -6.0, 8.0], a);
    let num = Dd::new(-5.0).mul_f64(a).add_f64(7.0).mul_f64(2.0);
    Ok(num.div(g.sqrt().add(tail)).to_f64())
}

/// `|x^2 + beta(a) x + rho(a)|` evaluated in double-double, so the result
/// reflects the error in `x` rather than in the evaluation.
pub fn mu2_quadratic_residual(a: f64, x: f64) -> f64 {
    let a2 = Dd::new(a).mul_f64(a);
    let beta = horner_dd(&[-1.0, 2.0, 8.0], a).div(a2);
    let rho = Dd::new(-2.0).mul_f64(a).add_f64(-7.0).div(a2);
    let x = Dd::new(x);
    x.mul(x).add(beta.mul(x)).add(rho).to_f64().abs()
}

/// Descending-coefficient Horner in double-double at a binary64 point.
fn horner_dd(desc: &[f64], x: f64) -> Dd {
    desc.iter().fold(Dd::ZERO, |acc, &c| acc.mul_f64(x).add_f64(c))
}

/// `r = c(a - c) / (2(1 - c^2))` and its simplification `r' = c(a - c)/2`.
pub fn r_param(a: f64, c: f64) -> Result<(f64, f64)> {
    check_c(a, c)?;
    let r_prime = c * (a - c) / 2.0;
    Ok((r_prime / (1.0 - c * c), r_prime))
}

/// `log(a/16) / log((c + r)/(1 + c r))`.
pub fn alpha_param(a: f64, c: f64, r: f64) -> Result<f64> {
    check_c(a, c)?;
    unit_open("r", r)?;
    Ok((a / 16.0).ln() / ((c + r) / (1.0 + c * r)).ln())
}

/// Stages of the majorisation that takes the exact third threshold to the
/// headline bound. Each stage is an upper bound for the previous one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct N3Chain {
    /// `(log((1+a)/(a-c)) + log((1-ac)/(1-c)) - alpha log r) / log K' + 1`.
    pub exact: f64,
    /// The same with `(alpha', r')` in place of `(alpha, r)`.
    pub primed: f64,
    /// Every log replaced by its elementary majorant:
    /// `(3/(a(1-g)) + 2/(a^3(1-g)) * 32/(a log(1/a))) * 16/(a^3(1-a)) + 1`.
    pub majorized: f64,
    /// `20800 / (a^7 (1-a)^2 log(1/a))`.
    pub log_form: f64,
    /// `20800 / (a^7 (1-a)^4)`.
    pub final_form: f64,
}

pub fn n3_chain(a: f64) -> Result<N3Chain> {
    let aux = aux_params(a)?;
    let (c, gamma) = (aux.c, aux.gamma);
    let (r, r_prime) = r_param(a, c)?;
    let alpha = alpha_param(a, c, r)?;
    let alpha_prime = alpha_param(a, c, r_prime)?;
    let log_k = log_k_prime(a)?;
    let logs = ((1.0 + a) / (a - c)).ln() + ((1.0 - a * c) / (1.0 - c)).ln();
    let exact = (logs - alpha * r.ln()) / log_k + 1.0;
    let primed = (logs - alpha_prime * r_prime.ln()) / log_k + 1.0;

    let one_minus_gamma = 1.0 - gamma;
    let log_inv_a = -a.ln();
    let majorized = (3.0 / (a * one_minus_gamma) + 2.0 / (a.powi(3) * one_minus_gamma) * (32.0 / (a * log_inv_a)))
        * (16.0 / (a.powi(3) * (1.0 - a)))
        + 1.0;
    let log_form = FINAL_BOUND_CONSTANT / (a.powi(7) * (1.0 - a).powi(2) * log_inv_a);
    Ok(N3Chain { exact, primed, majorized, log_form, final_form: final_bound(a)? })
}

/// `(n3_exact, n3_estimate)`: the exact third threshold at `c = a gamma(a)` and
/// its elementary majorant.
pub fn n3(a: f64) -> Result<(f64, f64)> {
    let chain = n3_chain(a)?;
    Ok((chain.exact, chain.majorized))
}

/// `20800 / (a^7 (1 - a)^4)`: beyond this degree every polynomial with a zero
/// at `a` and all zeros in the closed unit disk has a critical point within
/// unit distance of `a`.
pub fn final_bound(a: f64) -> Result<f64> {
    unit_open("a", a)?;
    Ok(FINAL_BOUND_CONSTANT / (a.powi(7) * (1.0 - a).powi(4)))
}

/// The degree threshold `2 + (60 - a^2) / (a^2 (1 - a^2))` known when all
/// other zeros lie on the unit circle. Comparison only.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SmallCircleBound {
    /// Clamped to `f64::MAX` when `overflow` is set.
    pub value: f64,
    pub overflow: bool,
}

pub fn small_circle_bound(a: f64) -> Result<SmallCircleBound> {
    unit_open("a", a)?;
    let value = 2.0 + (60.0 - a * a) / (a * a * (1.0 - a * a));
    let overflow = !value.is_finite() || value > 1e308;
    Ok(SmallCircleBound { value: if overflow { f64::MAX } else { value }, overflow })
}

/// Every intermediate quantity of the bound at one `a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundBreakdown {
    #[serde(flatten)]
    pub aux: AuxParams,
    pub n0: f64,
    pub n1: f64,
    pub n2: f64,
    pub mu1: f64,
    pub mu2: f64,
    pub k1: f64,
    pub k2: f64,
    pub k_prime: f64,
    pub r: f64,
    pub r_prime: f64,
    pub alpha: f64,
    pub alpha_prime: f64,
    pub n3_exact: f64,
    pub n3_estimate: f64,
    pub final_n: f64,
    pub small_bound: f64,
}

pub fn breakdown(a: f64) -> Result<BoundBreakdown> {
    let aux = aux_params(a)?;
    let c = aux.c;
    let (k1, k2) = k_factors(a, c, aux.p_prime, aux.q_prime)?;
    let (r, r_prime) = r_param(a, c)?;
    let (n3_exact, n3_estimate) = n3(a)?;
    Ok(BoundBreakdown {
        aux,
        n0: n0(a)?,
        n1: n1(a)?,
        n2: n2(a, c)?,
        mu1: mu1(a)?,
        mu2: mu2(a)?,
        k1,
        k2,
        k_prime: k1.min(k2),
        r,
        r_prime,
        alpha: alpha_param(a, c, r)?,
        alpha_prime: alpha_param(a, c, r_prime)?,
        n3_exact,
        n3_estimate,
        final_n: final_bound(a)?,
        small_bound: small_circle_bound(a)?.value,
    })
}

impl BoundBreakdown {
    /// Largest of the three thresholds the headline bound has to dominate.
    pub fn combined_threshold(&self) -> f64 {
        self.n1.max(self.n2).max(self.n3_exact)
    }

    /// Names of violated structural invariants (empty when all hold).
    pub fn invariant_violations(&self) -> Vec<&'static str> {
        let checks: [(&'static str, bool); 11] = [
            ("final_n >= n3_exact", self.final_n >= self.n3_exact),
            ("final_n >= n0", self.final_n >= self.n0),
            ("k_prime > 1", self.k_prime > 1.0),
            ("0 < mu1 < 1", self.mu1 > 0.0 && self.mu1 < 1.0),
            ("0 < mu2 < 1", self.mu2 > 0.0 && self.mu2 < 1.0),
            ("gamma > max(mu1, mu2)", self.aux.gamma > self.mu1.max(self.mu2)),
            ("r > r_prime > 0", self.r > self.r_prime && self.r_prime > 0.0),
            // alpha grows with r, so the smaller r' gives the smaller exponent
            ("alpha > alpha_prime > 0", self.alpha > self.alpha_prime && self.alpha_prime > 0.0),
            ("0 < q' < p'", self.aux.q_prime > 0.0 && self.aux.q_prime < self.aux.p_prime),
            ("0.9 < gamma < 1", self.aux.gamma > 0.9 && self.aux.gamma < 1.0),
            ("0 < c < a", self.aux.c > 0.0 && self.aux.c < self.aux.a),
        ];
        checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect()
    }
}
