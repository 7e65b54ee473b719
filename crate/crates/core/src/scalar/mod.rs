//! Complex scalar backends.
//!
//! Every higher layer is generic over [`Scalar`]. Two backends exist:
//! [`ExactComplex`] (Gaussian rationals, arbitrary precision) and
//! [`FloatComplex`] (binary64 pairs). Rank decisions on the float backend are
//! governed by a [`RankPolicy`].

mod elim;
mod exact;
mod float;
mod matrix;

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub use elim::{complex_rank, complex_solve, ComplexSolution};
pub use exact::ExactComplex;
pub use float::FloatComplex;
pub use matrix::ComplexMatrix;

/// Default relative pivot tolerance for the float backend.
pub const DEFAULT_PIVOT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMode {
    Exact,
    Approx,
}

/// How rank decisions are made.
///
/// `pivot_tolerance` is relative to the largest entry magnitude of the matrix
/// being reduced and is ignored in [`RankMode::Exact`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RankPolicy {
    pub mode: RankMode,
    pub pivot_tolerance: f64,
}

impl RankPolicy {
    pub const fn exact() -> Self {
        RankPolicy {
            mode: RankMode::Exact,
            pivot_tolerance: DEFAULT_PIVOT_TOLERANCE,
        }
    }

    pub const fn approx(pivot_tolerance: f64) -> Self {
        RankPolicy {
            mode: RankMode::Approx,
            pivot_tolerance,
        }
    }

    /// The policy a backend runs under when the caller has no preference.
    pub fn default_for<S: Scalar>() -> Self {
        match S::MODE {
            RankMode::Exact => Self::exact(),
            RankMode::Approx => Self::approx(DEFAULT_PIVOT_TOLERANCE),
        }
    }

    pub(crate) fn check<S: Scalar>(&self) -> Result<()> {
        if self.mode != S::MODE {
            return Err(Error::PolicyMismatch {
                policy: self.mode,
                backend: S::MODE,
            });
        }
        Ok(())
    }

    /// Two policies describe the same pivoting regime.
    pub fn same_regime(&self, other: &RankPolicy) -> bool {
        match (self.mode, other.mode) {
            (RankMode::Exact, RankMode::Exact) => true,
            (RankMode::Approx, RankMode::Approx) => self.pivot_tolerance == other.pivot_tolerance,
            _ => false,
        }
    }
}

/// A real coefficient as produced by a backend, used for literal output.
#[derive(Debug, Clone, PartialEq)]
pub enum Real {
    Rational(BigRational),
    Float(f64),
}

impl Real {
    pub fn is_zero(&self) -> bool {
        match self {
            Real::Rational(r) => r.is_zero(),
            Real::Float(f) => *f == 0.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Real::Rational(r) => r.is_negative(),
            Real::Float(f) => f.is_sign_negative() && *f != 0.0,
        }
    }

    pub fn abs(&self) -> Real {
        match self {
            Real::Rational(r) => Real::Rational(r.abs()),
            Real::Float(f) => Real::Float(f.abs()),
        }
    }
}

impl Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Rational(r) => write!(f, "{}", r),
            Real::Float(x) => write!(f, "{}", x),
        }
    }
}

/// Writes `re + im i` with zero parts omitted, `0` when both vanish.
pub(crate) fn fmt_complex(f: &mut fmt::Formatter<'_>, re: Real, im: Real) -> fmt::Result {
    match (re.is_zero(), im.is_zero()) {
        (true, true) => write!(f, "0"),
        (false, true) => write!(f, "{}", re),
        (true, false) => write!(f, "{} i", im),
        (false, false) => {
            let sign = if im.is_negative() { '-' } else { '+' };
            write!(f, "{} {} {} i", re, sign, im.abs())
        }
    }
}

/// An element of the complex field under one of the two backends.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const MODE: RankMode;

    fn zero() -> Self;
    fn one() -> Self;
    /// The imaginary unit i₁.
    fn i() -> Self;

    fn from_rational(re: &BigRational, im: &BigRational) -> Self;

    fn from_i64(re: i64, im: i64) -> Self;

    /// Exact zero test. Tolerance-based decisions go through [`Scalar::is_negligible`].
    fn is_zero(&self) -> bool;

    /// Whether the magnitude is at or below `threshold`. Exact backends
    /// ignore the threshold.
    fn is_negligible(&self, threshold: f64) -> bool;

    /// Modulus as a binary64 value, used for pivot selection and scaling.
    fn modulus(&self) -> f64;

    fn is_finite(&self) -> bool;

    fn checked_div(&self, rhs: &Self) -> Result<Self>;

    fn half(&self) -> Self;

    fn re(&self) -> Real;
    fn im(&self) -> Real;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field operation on two scalars with overflow and division checks.
pub fn scalar_arith<S: Scalar>(a: &S, b: &S, op: ArithOp) -> Result<S> {
    let out = match op {
        ArithOp::Add => a.clone() + b.clone(),
        ArithOp::Sub => a.clone() - b.clone(),
        ArithOp::Mul => a.clone() * b.clone(),
        ArithOp::Div => a.checked_div(b)?,
    };
    if a.is_finite() && b.is_finite() && !out.is_finite() {
        return Err(Error::Overflow);
    }
    Ok(out)
}
