use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{fmt_complex, RankMode, Real, Scalar};
use crate::error::{Error, Result};

/// Gaussian rational `re + im·i₁` with arbitrary-precision parts.
///
/// `BigRational` keeps each part reduced with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactComplex {
    re: BigRational,
    im: BigRational,
}

impl ExactComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ExactComplex { re, im }
    }

    pub fn real_part(&self) -> &BigRational {
        &self.re
    }

    pub fn imag_part(&self) -> &BigRational {
        &self.im
    }

    fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl Add for ExactComplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        ExactComplex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ExactComplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        ExactComplex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ExactComplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        ExactComplex::new(re, im)
    }
}

impl Neg for ExactComplex {
    type Output = Self;
    fn neg(self) -> Self {
        ExactComplex::new(-self.re, -self.im)
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_complex(f, self.re(), self.im())
    }
}

impl Scalar for ExactComplex {
    const MODE: RankMode = RankMode::Exact;

    fn zero() -> Self {
        ExactComplex::new(BigRational::zero(), BigRational::zero())
    }

    fn one() -> Self {
        ExactComplex::new(BigRational::one(), BigRational::zero())
    }

    fn i() -> Self {
        ExactComplex::new(BigRational::zero(), BigRational::one())
    }

    fn from_rational(re: &BigRational, im: &BigRational) -> Self {
        ExactComplex::new(re.clone(), im.clone())
    }

    fn from_i64(re: i64, im: i64) -> Self {
        ExactComplex::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_negligible(&self, _threshold: f64) -> bool {
        self.is_zero()
    }

    fn modulus(&self) -> f64 {
        self.norm_sqr().to_f64().unwrap_or(f64::INFINITY).sqrt()
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = rhs.norm_sqr();
        let re = (&self.re * &rhs.re + &self.im * &rhs.im) / &d;
        let im = (&self.im * &rhs.re - &self.re * &rhs.im) / &d;
        Ok(ExactComplex::new(re, im))
    }

    fn half(&self) -> Self {
        let two = BigRational::from_integer(BigInt::from(2));
        ExactComplex::new(&self.re / &two, &self.im / &two)
    }

    fn re(&self) -> Real {
        Real::Rational(self.re.clone())
    }

    fn im(&self) -> Real {
        Real::Rational(self.im.clone())
    }
}
