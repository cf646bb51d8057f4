use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A complex number with finite components, used for assertion degrees and
/// amplitudes.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexNumber(Complex64);

impl ComplexNumber {
    pub const ZERO: ComplexNumber = ComplexNumber(Complex64::new(0.0, 0.0));
    pub const ONE: ComplexNumber = ComplexNumber(Complex64::new(1.0, 0.0));

    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(ComplexNumber(Complex64::new(re, im)))
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn real(re: f64) -> Result<Self> {
        Self::new(re, 0.0)
    }

    /// `modulus * e^{i phase}`.
    pub fn from_polar(modulus: f64, phase: f64) -> Result<Self> {
        let c = Complex64::from_polar(modulus, phase);
        Self::new(c.re, c.im)
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }

    /// |z|^2
    pub fn norm_sqr(self) -> f64 {
        self.0.norm_sqr()
    }

    pub fn as_complex(self) -> Complex64 {
        self.0
    }

    /// Multiply by `e^{i theta}`.
    pub fn rotate(self, theta: f64) -> Result<Self> {
        let c = self.0 * Complex64::from_polar(1.0, theta);
        Self::new(c.re, c.im)
    }

    /// Component-wise bit equality, distinguishing `0.0` from `-0.0`.
    pub fn bit_eq(self, other: Self) -> bool {
        self.re().to_bits() == other.re().to_bits() && self.im().to_bits() == other.im().to_bits()
    }
}

impl TryFrom<Complex64> for ComplexNumber {
    type Error = Error;

    fn try_from(c: Complex64) -> Result<Self> {
        Self::new(c.re, c.im)
    }
}

fn is_pos_zero(x: f64) -> bool {
    x == 0.0 && x.is_sign_positive()
}

/// Renders `a`, `bi` or `a+bi` / `a-bi` using the shortest decimal that
/// reads back to the same bits. A component is omitted only when it is `+0`.
impl fmt::Display for ComplexNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.re(), self.im());
        if is_pos_zero(im) {
            write!(f, "{re}")
        } else if is_pos_zero(re) {
            write!(f, "{im}i")
        } else if im.is_sign_negative() {
            write!(f, "{re}-{}i", -im)
        } else {
            write!(f, "{re}+{im}i")
        }
    }
}
