use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::{fmt_complex, RankMode, Real, Scalar};
use crate::error::{Error, Result};

/// Complex number with binary64 parts.
///
/// Operator impls follow IEEE semantics; the checked entry points
/// (`scalar_arith`, elimination, solving) turn non-finite results into
/// [`Error::Overflow`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatComplex {
    pub re: f64,
    pub im: f64,
}

impl FloatComplex {
    pub const fn new(re: f64, im: f64) -> Self {
        FloatComplex { re, im }
    }
}

impl Add for FloatComplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        FloatComplex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for FloatComplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        FloatComplex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for FloatComplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        FloatComplex::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for FloatComplex {
    type Output = Self;
    fn neg(self) -> Self {
        FloatComplex::new(-self.re, -self.im)
    }
}

impl fmt::Display for FloatComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_complex(f, self.re(), self.im())
    }
}

impl Scalar for FloatComplex {
    const MODE: RankMode = RankMode::Approx;

    fn zero() -> Self {
        FloatComplex::new(0.0, 0.0)
    }

    fn one() -> Self {
        FloatComplex::new(1.0, 0.0)
    }

    fn i() -> Self {
        FloatComplex::new(0.0, 1.0)
    }

    fn from_rational(re: &BigRational, im: &BigRational) -> Self {
        FloatComplex::new(
            re.to_f64().unwrap_or(f64::NAN),
            im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn from_i64(re: i64, im: i64) -> Self {
        FloatComplex::new(re as f64, im as f64)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn is_negligible(&self, threshold: f64) -> bool {
        self.modulus() <= threshold
    }

    fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }

    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    // Smith's algorithm keeps intermediate magnitudes bounded.
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.modulus() < f64::MIN_POSITIVE {
            return Err(Error::DivisionByZero);
        }
        let (a, b, c, d) = (self.re, self.im, rhs.re, rhs.im);
        let out = if c.abs() >= d.abs() {
            let r = d / c;
            let den = c + d * r;
            FloatComplex::new((a + b * r) / den, (b - a * r) / den)
        } else {
            let r = c / d;
            let den = c * r + d;
            FloatComplex::new((a * r + b) / den, (b * r - a) / den)
        };
        if self.is_finite() && !out.is_finite() {
            return Err(Error::Overflow);
        }
        Ok(out)
    }

    fn half(&self) -> Self {
        FloatComplex::new(self.re * 0.5, self.im * 0.5)
    }

    fn re(&self) -> Real {
        Real::Float(self.re)
    }

    fn im(&self) -> Real {
        Real::Float(self.im)
    }
}
