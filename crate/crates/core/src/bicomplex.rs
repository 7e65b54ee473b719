//! Bicomplex numbers `ξ = z₁ + i₂·z₂` with `z₁, z₂` complex over `i₁`.
//!
//! Every element also has the idempotent form `ξ = ¹ξ·e₁ + ²ξ·e₂` where
//! `e₁ = (1 + i₁i₂)/2`, `e₂ = (1 − i₁i₂)/2`, `¹ξ = z₁ − i₁z₂` and
//! `²ξ = z₁ + i₁z₂`. Multiplication is componentwise in that form, so
//! an element is invertible exactly when both components are nonzero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct BiComplex<S> {
    pub z1: S,
    pub z2: S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BiComplexClass {
    Zero,
    Invertible,
    ZeroDivisor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcOp {
    Add,
    Sub,
    Mul,
}

impl<S: Scalar> BiComplex<S> {
    pub fn new(z1: S, z2: S) -> Self {
        BiComplex { z1, z2 }
    }

    /// `u1 + i₁u2 + i₂u3 + i₁i₂u4` from four real coefficients.
    pub fn from_components(u1: S, u2: S, u3: S, u4: S) -> Self {
        BiComplex {
            z1: u1 + S::i() * u2,
            z2: u3 + S::i() * u4,
        }
    }

    pub fn from_complex(z: S) -> Self {
        BiComplex { z1: z, z2: S::zero() }
    }

    pub fn zero() -> Self {
        Self::from_complex(S::zero())
    }

    pub fn one() -> Self {
        Self::from_complex(S::one())
    }

    pub fn i1() -> Self {
        Self::from_complex(S::i())
    }

    pub fn i2() -> Self {
        BiComplex { z1: S::zero(), z2: S::one() }
    }

    /// `i₁i₂`.
    pub fn j() -> Self {
        BiComplex { z1: S::zero(), z2: S::i() }
    }

    pub fn e1() -> Self {
        Self::from_idempotent(S::one(), S::zero())
    }

    pub fn e2() -> Self {
        Self::from_idempotent(S::zero(), S::one())
    }

    /// `(¹ξ, ²ξ) = (z₁ − i₁z₂, z₁ + i₁z₂)`.
    pub fn to_idempotent(&self) -> (S, S) {
        let iz2 = S::i() * self.z2.clone();
        (self.z1.clone() - iz2.clone(), self.z1.clone() + iz2)
    }

    /// Inverse of [`BiComplex::to_idempotent`]: `z₁ = (a+b)/2`, `z₂ = i₁(a−b)/2`.
    pub fn from_idempotent(a: S, b: S) -> Self {
        let z1 = (a.clone() + b.clone()).half();
        let z2 = (S::i() * (a - b)).half();
        BiComplex { z1, z2 }
    }

    pub fn is_zero(&self) -> bool {
        self.z1.is_zero() && self.z2.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.z1.is_finite() && self.z2.is_finite()
    }

    pub fn classify(&self) -> BiComplexClass {
        let (a, b) = self.to_idempotent();
        match (a.is_zero(), b.is_zero()) {
            (true, true) => BiComplexClass::Zero,
            (false, false) => BiComplexClass::Invertible,
            _ => BiComplexClass::ZeroDivisor,
        }
    }

    /// Componentwise inverse in the idempotent form.
    pub fn invert(&self) -> Result<Self> {
        if self.classify() != BiComplexClass::Invertible {
            return Err(Error::NotInvertible);
        }
        let (a, b) = self.to_idempotent();
        let inv_a = S::one().checked_div(&a)?;
        let inv_b = S::one().checked_div(&b)?;
        let out = Self::from_idempotent(inv_a, inv_b);
        if !out.is_finite() {
            return Err(Error::Overflow);
        }
        Ok(out)
    }

    /// A nonzero `η` with `ξ·η = 0`, when `ξ` is a zero divisor.
    pub fn annihilator(&self) -> Option<Self> {
        let (a, b) = self.to_idempotent();
        match (a.is_zero(), b.is_zero()) {
            (true, false) => Some(Self::e1()),
            (false, true) => Some(Self::e2()),
            _ => None,
        }
    }

    /// Multiplies by a complex scalar.
    pub fn scale(&self, k: &S) -> Self {
        BiComplex {
            z1: k.clone() * self.z1.clone(),
            z2: k.clone() * self.z2.clone(),
        }
    }

    /// Coefficients `(u1, u2, u3, u4)` of `1, i₁, i₂, i₁i₂`.
    pub fn components(&self) -> [crate::scalar::Real; 4] {
        [self.z1.re(), self.z1.im(), self.z2.re(), self.z2.im()]
    }
}

pub fn bc_arith<S: Scalar>(a: &BiComplex<S>, b: &BiComplex<S>, op: BcOp) -> BiComplex<S> {
    match op {
        BcOp::Add => a.clone() + b.clone(),
        BcOp::Sub => a.clone() - b.clone(),
        BcOp::Mul => a.clone() * b.clone(),
    }
}

impl<S: Scalar> Add for BiComplex<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        BiComplex::new(self.z1 + rhs.z1, self.z2 + rhs.z2)
    }
}

impl<S: Scalar> Sub for BiComplex<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        BiComplex::new(self.z1 - rhs.z1, self.z2 - rhs.z2)
    }
}

// (z₁ + i₂z₂)(w₁ + i₂w₂) = z₁w₁ − z₂w₂ + i₂(z₁w₂ + z₂w₁)
impl<S: Scalar> Mul for BiComplex<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let z1 = self.z1.clone() * rhs.z1.clone() - self.z2.clone() * rhs.z2.clone();
        let z2 = self.z1 * rhs.z2 + self.z2 * rhs.z1;
        BiComplex::new(z1, z2)
    }
}

impl<S: Scalar> Neg for BiComplex<S> {
    type Output = Self;
    fn neg(self) -> Self {
        BiComplex::new(-self.z1, -self.z2)
    }
}

/// Canonical four-coefficient literal, e.g. `1/2 + 1/2 j`.
impl<S: Scalar> fmt::Display for BiComplex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const UNITS: [&str; 4] = ["", " i1", " i2", " j"];
        let mut wrote = false;
        for (coef, unit) in self.components().iter().zip(UNITS) {
            if coef.is_zero() {
                continue;
            }
            match (wrote, coef.is_negative()) {
                (false, false) => write!(f, "{}{}", coef, unit)?,
                (false, true) => write!(f, "-{}{}", coef.abs(), unit)?,
                (true, false) => write!(f, " + {}{}", coef, unit)?,
                (true, true) => write!(f, " - {}{}", coef.abs(), unit)?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;
    use proptest::prelude::*;

    use super::*;
    use crate::scalar::{ExactComplex, FloatComplex};

    type E = ExactComplex;
    type B = BiComplex<E>;

    fn q(n: i64, d: i64) -> E {
        E::from_rational(&BigRational::new(n.into(), d.into()), &BigRational::from_integer(0.into()))
    }

    fn c(re: i64, im: i64) -> E {
        E::from_i64(re, im)
    }

    fn real4(u: [i64; 4]) -> B {
        B::from_components(c(u[0], 0), c(u[1], 0), c(u[2], 0), c(u[3], 0))
    }

    // Multiplication on the real basis {1, i₁, i₂, j}, with i₁² = i₂² = −1,
    // i₁i₂ = j, j² = 1, i₁j = −i₂, i₂j = −i₁. Independent of the z₁/z₂ route.
    fn real_mul(a: [i64; 4], b: [i64; 4]) -> [i64; 4] {
        // table[p][q] = (sign, index) of basis_p · basis_q
        const T: [[(i64, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (1, 3), (-1, 0), (-1, 1)],
            [(1, 3), (-1, 2), (-1, 1), (1, 0)],
        ];
        let mut out = [0i64; 4];
        for p in 0..4 {
            for r in 0..4 {
                let (s, k) = T[p][r];
                out[k] += s * a[p] * b[r];
            }
        }
        out
    }

    #[test]
    fn from_components_examples() {
        assert_eq!(real4([1, 0, 0, 0]), B::one());
        let e1 = B::from_components(q(1, 2), q(0, 1), q(0, 1), q(1, 2));
        assert_eq!(e1, B::e1());
        let x = real4([0, 1, 1, 0]);
        assert_eq!(x, B::i1() + B::i2());
        assert_eq!(x.to_idempotent(), (c(0, 0), c(0, 2)));
    }

    #[test]
    fn idempotent_view_examples() {
        assert_eq!(B::one().to_idempotent(), (c(1, 0), c(1, 0)));
        assert_eq!(B::e1().to_idempotent(), (c(1, 0), c(0, 0)));
        assert_eq!(B::i2().to_idempotent(), (c(0, -1), c(0, 1)));
        assert_eq!(B::from_idempotent(c(0, -1), c(0, 1)), B::i2());

        assert_eq!(B::from_idempotent(c(1, 0), c(0, 0)), B::e1());
        assert_eq!(B::from_idempotent(c(1, 0), c(1, 0)), B::one());
        let x = B::from_idempotent(c(2, 0), c(4, 0));
        assert_eq!(x, real4([3, 0, 0, -1]));
        assert_eq!(x.to_idempotent(), (c(2, 0), c(4, 0)));
    }

    #[test]
    fn idempotent_identities() {
        let (e1, e2) = (B::e1(), B::e2());
        assert_eq!(e1.clone() + e2.clone(), B::one());
        assert_eq!(e1.clone() * e2.clone(), B::zero());
        assert_eq!(e1.clone() * e1.clone(), e1);
        assert_eq!(e2.clone() * e2.clone(), e2);
    }

    #[test]
    fn product_example_matches_real_oracle() {
        let a = [1, 0, 1, 0];
        let b = [1, 0, -1, 0];
        assert_eq!(real_mul(a, b), [2, 0, 0, 0]);
        assert_eq!(bc_arith(&real4(a), &real4(b), BcOp::Mul), real4([2, 0, 0, 0]));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(B::zero().classify(), BiComplexClass::Zero);
        assert_eq!(B::e2().classify(), BiComplexClass::ZeroDivisor);
        let x = B::from_idempotent(c(2, 0), c(1, 0));
        assert_eq!(x.classify(), BiComplexClass::Invertible);
        let inv = x.invert().unwrap();
        assert_eq!(inv, B::from_idempotent(q(1, 2), c(1, 0)));
        assert_eq!(x * inv, B::one());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(B::one().invert().unwrap(), B::one());
        assert_eq!(real4([2, 0, 0, 0]).invert().unwrap(), B::from_complex(q(1, 2)));
        let inv = B::i2().invert().unwrap();
        assert_eq!(inv, -B::i2());
        assert_eq!(real_mul([0, 0, 1, 0], [0, 0, -1, 0]), [1, 0, 0, 0]);
        assert_eq!(B::e1().invert(), Err(Error::NotInvertible));
        assert_eq!(B::zero().invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn annihilator_witnesses_zero_divisors() {
        for x in [B::e1(), B::e2(), B::e1().scale(&c(3, -2))] {
            let eta = x.annihilator().unwrap();
            assert!(!eta.is_zero());
            assert!((x * eta).is_zero());
        }
        assert!(B::one().annihilator().is_none());
        assert!(B::zero().annihilator().is_none());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(B::e1().to_string(), "1/2 + 1/2 j");
        assert_eq!(B::e2().to_string(), "1/2 - 1/2 j");
        assert_eq!(B::zero().to_string(), "0");
        assert_eq!(real4([0, -1, 0, 0]).to_string(), "-1 i1");
        assert_eq!(real4([3, 0, 0, -1]).to_string(), "3 - 1 j");
    }

    #[test]
    fn float_round_trip_is_close() {
        let x = BiComplex::from_components(
            FloatComplex::new(0.1, 0.0),
            FloatComplex::new(-2.7, 0.0),
            FloatComplex::new(1e3, 0.0),
            FloatComplex::new(3.3, 0.0),
        );
        let (a, b) = x.to_idempotent();
        let back = BiComplex::from_idempotent(a, b);
        let tol = 4.0 * f64::EPSILON * 1e3;
        assert!((back.z1 - x.z1).modulus() <= tol);
        assert!((back.z2 - x.z2).modulus() <= tol);
    }

    fn arb_u() -> impl Strategy<Value = [i64; 4]> {
        prop::array::uniform4(-20i64..=20)
    }

    proptest! {
        #[test]
        fn round_trip_is_exact(u in arb_u()) {
            let x = real4(u);
            let (a, b) = x.to_idempotent();
            prop_assert_eq!(B::from_idempotent(a, b), x);
        }

        #[test]
        fn multiplication_matches_real_basis_oracle(a in arb_u(), b in arb_u()) {
            prop_assert_eq!(real4(a) * real4(b), real4(real_mul(a, b)));
        }

        #[test]
        fn idempotent_view_is_multiplicative(a in arb_u(), b in arb_u()) {
            let (x, y) = (real4(a), real4(b));
            let (x1, x2) = x.to_idempotent();
            let (y1, y2) = y.to_idempotent();
            prop_assert_eq!((x * y).to_idempotent(), (x1 * y1, x2 * y2));
        }

        #[test]
        fn zero_divisor_iff_annihilated(u in arb_u(), zero_side in 0usize..3) {
            let (a, b) = real4(u).to_idempotent();
            let x = match zero_side {
                0 => B::from_idempotent(E::zero(), b),
                1 => B::from_idempotent(a, E::zero()),
                _ => B::from_idempotent(a, b),
            };
            let is_zd = x.classify() == BiComplexClass::ZeroDivisor;
            prop_assert_eq!(is_zd, x.annihilator().is_some());
            if x.classify() == BiComplexClass::Invertible {
                prop_assert_eq!(x.clone() * x.invert().unwrap(), B::one());
            }
        }
    }
}
