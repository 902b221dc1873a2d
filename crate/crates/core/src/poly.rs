//! Dense complex polynomials in ascending-degree coefficient form.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::eft::{horner_dd_split, DdComplex};
use crate::error::{Error, Result};

/// A complex polynomial `c[0] + c[1] z + ... + c[n] z^n` with `c[n] != 0`.
///
/// Coefficients are binary64. Polynomials produced by [`Polynomial::from_roots`]
/// and [`Polynomial::derivative`] also keep the rounding error of each
/// coefficient as a low-order tail, which compensated evaluation adds back;
/// the tail is not serialised. When built from roots the generating roots
/// are kept alongside the expanded coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolynomialJson", into = "PolynomialJson")]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
    tail: Vec<Complex64>,
    roots: Option<Vec<Complex64>>,
}

fn ensure_finite(z: Complex64, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{what} is not finite: {z}")))
    }
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients. A constant (degree 0)
    /// is allowed so that differentiating a linear polynomial is representable.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        let Some(&lead) = coeffs.last() else {
            return Err(Error::InvalidInput("empty coefficient list".into()));
        };
        for &c in &coeffs {
            ensure_finite(c, "coefficient")?;
        }
        if lead == Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidInput("leading coefficient is zero".into()));
        }
        let tail = vec![Complex64::new(0.0, 0.0); coeffs.len()];
        Ok(Polynomial { coeffs, tail, roots: None })
    }

    /// Monic polynomial `prod (z - r)`, expanded by repeated multiplication
    /// with double-double accumulation; the binary64 coefficients are
    /// correctly rounded up to a few ulps and the tail keeps the rest.
    pub fn from_roots(roots: &[Complex64]) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidInput("empty root list".into()));
        }
        for &r in roots {
            ensure_finite(r, "root")?;
        }
        let mut acc = vec![DdComplex::ZERO; roots.len() + 1];
        acc[0] = DdComplex::new(Complex64::new(1.0, 0.0));
        for (k, &r) in roots.iter().enumerate() {
            // acc <- acc * (z - r), degree k -> k + 1
            let minus_r = -r;
            for j in (0..=k + 1).rev() {
                let shifted = if j > 0 { acc[j - 1] } else { DdComplex::ZERO };
                let scaled = if j <= k { acc[j].mul_c64(minus_r) } else { DdComplex::ZERO };
                acc[j] = shifted.add(scaled);
            }
        }
        let (coeffs, tail) = acc.into_iter().map(DdComplex::split).unzip();
        Ok(Polynomial { coeffs, tail, roots: Some(roots.to_vec()) })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn roots(&self) -> Option<&[Complex64]> {
        self.roots.as_deref()
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.degree()]
    }

    /// Horner evaluation in binary64.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Like [`Polynomial::eval`] but rejects a non-finite argument.
    pub fn try_eval(&self, z: Complex64) -> Result<Complex64> {
        ensure_finite(z, "evaluation point")?;
        Ok(self.eval(z))
    }

    /// Horner evaluation with double-double accumulation, tail included.
    pub fn eval_compensated(&self, z: Complex64) -> Complex64 {
        horner_dd_split(&self.coeffs, &self.tail, z)
    }

    /// Value and first derivative in one Horner pass (binary64).
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        self.coeffs.iter().rev().fold((zero, zero), |(p, dp), &c| (p * z + c, dp * z + p))
    }

    pub fn derivative(&self) -> Result<Polynomial> {
        if self.degree() == 0 {
            return Err(Error::InvalidInput("cannot differentiate a constant".into()));
        }
        let (coeffs, tail) = self.coeffs[1..]
            .iter()
            .zip(&self.tail[1..])
            .enumerate()
            .map(|(k, (&c, &t))| {
                let m = Complex64::new((k + 1) as f64, 0.0);
                DdComplex::new(c).mul_c64(m).add_c64(t * m).split()
            })
            .unzip();
        Ok(Polynomial { coeffs, tail, roots: None })
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `max_k |c_k| * (1 + |z|)^n`, the normaliser for root residuals.
    pub fn residual_scale(&self, z: Complex64) -> f64 {
        self.max_coeff_norm() * (1.0 + z.norm()).powi(self.degree() as i32)
    }

    /// `|P(z)| / residual_scale(z)` with the numerator evaluated compensated.
    pub fn scaled_residual(&self, z: Complex64) -> f64 {
        self.eval_compensated(z).norm() / self.residual_scale(z)
    }
}

/// Wire form `{"coeffs": [[re, im], ...]}`, ascending degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub coeffs: Vec<[f64; 2]>,
}

impl TryFrom<PolynomialJson> for Polynomial {
    type Error = Error;

    fn try_from(value: PolynomialJson) -> Result<Self> {
        Polynomial::new(value.coeffs.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
    }
}

impl From<Polynomial> for PolynomialJson {
    fn from(p: Polynomial) -> Self {
        PolynomialJson { coeffs: p.coeffs.iter().map(|c| [c.re, c.im]).collect() }
    }
}
