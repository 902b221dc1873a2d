//! Error-free transformations and a minimal double-double type.
//!
//! Used where binary64 alone loses digits: accumulating `from_roots`
//! coefficients, residual evaluation during root polishing, and the two
//! quadratic-root thresholds whose defining equation has `O(1/a^2)`
//! coefficients.

use num_complex::Complex64;

#[inline]
pub(crate) fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
pub(crate) fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    pub fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    fn renorm(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Dd { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        Dd::renorm(s, e + f)
    }

    pub fn add_f64(self, b: f64) -> Dd {
        let (s, e) = two_sum(self.hi, b);
        Dd::renorm(s, e + self.lo)
    }

    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        Dd::renorm(p, e + (self.hi * o.lo + self.lo * o.hi))
    }

    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        Dd::renorm(p, e + self.lo * b)
    }

    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        Dd::renorm(q1, q2).add_f64(q3)
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let s = self.hi.sqrt();
        let (p, e) = two_prod(s, s);
        let r = ((self.hi - p) - e + self.lo) / (2.0 * s);
        Dd::renorm(s, r)
    }
}

/// Complex number with double-double parts.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub(crate) struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ZERO: DdComplex = DdComplex { re: Dd::ZERO, im: Dd::ZERO };

    pub fn new(z: Complex64) -> Self {
        DdComplex { re: Dd::new(z.re), im: Dd::new(z.im) }
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// `(leading parts, trailing parts)`.
    pub fn split(self) -> (Complex64, Complex64) {
        (Complex64::new(self.re.hi, self.im.hi), Complex64::new(self.re.lo, self.im.lo))
    }

    pub fn add(self, o: DdComplex) -> DdComplex {
        DdComplex { re: self.re.add(o.re), im: self.im.add(o.im) }
    }

    pub fn add_c64(self, z: Complex64) -> DdComplex {
        DdComplex { re: self.re.add_f64(z.re), im: self.im.add_f64(z.im) }
    }

    /// Product with a binary64 complex factor.
    pub fn mul_c64(self, z: Complex64) -> DdComplex {
        DdComplex {
            re: self.re.mul_f64(z.re).sub(self.im.mul_f64(z.im)),
            im: self.re.mul_f64(z.im).add(self.im.mul_f64(z.re)),
        }
    }
}

/// Horner evaluation with double-double accumulation on ascending
/// coefficients `hi[k] + lo[k]`.
pub(crate) fn horner_dd_split(hi: &[Complex64], lo: &[Complex64], z: Complex64) -> Complex64 {
    hi.iter().zip(lo).rev().fold(DdComplex::ZERO, |acc, (&h, &l)| acc.mul_c64(z).add_c64(h).add_c64(l)).to_c64()
}
