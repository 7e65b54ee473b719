//! Linear systems `A·X = B` over the bicomplex numbers.
//!
//! The system splits into the two complex systems `¹A·¹X = ¹B` and
//! `²A·²X = ²B`. It is consistent iff both are, its solution set is
//! `ker(T_A) + S`, and `ker(T_A) = ker(T_¹A)·e₁ + ker(T_²A)·e₂` has dimension
//! `2n − ρ_mr(A)` over ℂ₁.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{BicomplexMatrix, BicomplexVector};
use crate::rank::modified_rank;
use crate::scalar::{complex_rank, complex_solve, ComplexMatrix, ComplexSolution, RankMode, RankPolicy, Scalar};

/// Scale factor of the approx-mode residual tolerance in [`verify_membership`].
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct KernelBasis<S> {
    /// Basis of `ker(T_¹A)`.
    pub from_first: Vec<Vec<S>>,
    /// Basis of `ker(T_²A)`.
    pub from_second: Vec<Vec<S>>,
    /// `v·e₁` for each `v` in `from_first`, then `w·e₂` for each `w` in `from_second`.
    pub lifted: Vec<BicomplexVector<S>>,
}

impl<S: Scalar> KernelBasis<S> {
    fn new(from_first: Vec<Vec<S>>, from_second: Vec<Vec<S>>) -> Self {
        let lifted = from_first
            .iter()
            .map(|v| BicomplexVector::lift_first(v))
            .chain(from_second.iter().map(|w| BicomplexVector::lift_second(w)))
            .collect();
        KernelBasis { from_first, from_second, lifted }
    }

    pub fn len(&self) -> usize {
        self.lifted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lifted.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolutionStatus {
    Inconsistent,
    Unique,
    Infinite,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSet<S> {
    pub status: SolutionStatus,
    pub particular: Option<BicomplexVector<S>>,
    pub kernel: KernelBasis<S>,
    /// `η(T_A)`, the ℂ₁-dimension of the kernel.
    pub nullity: usize,
}

impl<S: Scalar> SolutionSet<S> {
    /// `S + Σ cᵢ·kᵢ` over the lifted kernel basis.
    pub fn solution_with(&self, coeffs: &[S]) -> Result<Option<BicomplexVector<S>>> {
        let Some(base) = &self.particular else {
            return Ok(None);
        };
        if coeffs.len() != self.kernel.len() {
            return Err(Error::dims(
                format!("{} coefficients", self.kernel.len()),
                format!("{} coefficients", coeffs.len()),
            ));
        }
        let mut y = base.clone();
        for (c, k) in coeffs.iter().zip(&self.kernel.lifted) {
            y = y.add(&k.scale(c))?;
        }
        Ok(Some(y))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomogeneousClass {
    UniqueZero,
    Infinite,
    AllOfSpace,
}

/// Cases of the a-priori classification of `A·X = B`, `B ≠ 0`, from
/// `(ρ_mr(A), m, n)` alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NonHomogeneousCase {
    NoOrUnique,
    InfiniteSolutions,
    UniqueSolution,
    NoOrInfinite,
    NoSolution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResolvedOutcome {
    NoSolution,
    UniqueSolution,
    InfiniteSolutions,
}

impl From<SolutionStatus> for ResolvedOutcome {
    fn from(s: SolutionStatus) -> Self {
        match s {
            SolutionStatus::Inconsistent => ResolvedOutcome::NoSolution,
            SolutionStatus::Unique => ResolvedOutcome::UniqueSolution,
            SolutionStatus::Infinite => ResolvedOutcome::InfiniteSolutions,
        }
    }
}

impl NonHomogeneousCase {
    /// The case a system with these dimensions and modified rank falls into.
    pub fn from_ranks(rho_mr: usize, m: usize, n: usize) -> Self {
        if rho_mr == 0 {
            NonHomogeneousCase::NoSolution
        } else if rho_mr == 2 * n && n < m {
            NonHomogeneousCase::NoOrUnique
        } else if rho_mr == 2 * m && m < n {
            NonHomogeneousCase::InfiniteSolutions
        } else if rho_mr == 2 * m && m == n {
            NonHomogeneousCase::UniqueSolution
        } else {
            NonHomogeneousCase::NoOrInfinite
        }
    }

    pub fn admits(self, outcome: ResolvedOutcome) -> bool {
        use NonHomogeneousCase as C;
        use ResolvedOutcome as R;
        matches!(
            (self, outcome),
            (C::NoOrUnique, R::NoSolution | R::UniqueSolution)
                | (C::InfiniteSolutions, R::InfiniteSolutions)
                | (C::UniqueSolution, R::UniqueSolution)
                | (C::NoOrInfinite, R::NoSolution | R::InfiniteSolutions)
                | (C::NoSolution, R::NoSolution)
        )
    }

    pub fn is_definite(self) -> bool {
        !matches!(self, NonHomogeneousCase::NoOrUnique | NonHomogeneousCase::NoOrInfinite)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct NonHomogeneousClassification {
    pub apriori: NonHomogeneousCase,
    pub resolved: ResolvedOutcome,
}

fn check_rhs<S: Scalar>(a: &BicomplexMatrix<S>, b: &BicomplexVector<S>) -> Result<()> {
    if a.rows() != b.len() {
        return Err(Error::dims(format!("length {}", a.rows()), format!("length {}", b.len())));
    }
    Ok(())
}

/// Both component systems satisfy `ρ(ᵏA | ᵏB) = ρ(ᵏA)`.
pub fn is_consistent<S: Scalar>(
    a: &BicomplexMatrix<S>,
    b: &BicomplexVector<S>,
    policy: &RankPolicy,
) -> Result<bool> {
    check_rhs(a, b)?;
    let (b1, b2) = b.split();
    for (comp, rhs) in [(a.first(), b1), (a.second(), b2)] {
        let aug = comp.hstack(&ComplexMatrix::column(rhs.to_vec()))?;
        if complex_rank(&aug, policy)? != complex_rank(comp, policy)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ρ_mr(A | B) = ρ_mr(A)`.
pub fn consistent_via_modified_rank<S: Scalar>(
    a: &BicomplexMatrix<S>,
    b: &BicomplexVector<S>,
    policy: &RankPolicy,
) -> Result<bool> {
    check_rhs(a, b)?;
    Ok(modified_rank(&a.augment(b)?, policy)? == modified_rank(a, policy)?)
}

/// Particular solution (if any) and kernel basis of one component system.
type ComponentSolution<S> = (Option<Vec<S>>, Vec<Vec<S>>);

fn component_solve<S: Scalar>(
    m: &ComplexMatrix<S>,
    rhs: &[S],
    policy: &RankPolicy,
) -> Result<ComponentSolution<S>> {
    match complex_solve(m, rhs, policy)? {
        ComplexSolution::Affine { particular, kernel } => Ok((Some(particular), kernel)),
        ComplexSolution::NoSolution => {
            let zeros = vec![S::zero(); m.rows()];
            match complex_solve(m, &zeros, policy)? {
                ComplexSolution::Affine { kernel, .. } => Ok((None, kernel)),
                ComplexSolution::NoSolution => unreachable!("homogeneous systems are consistent"),
            }
        }
    }
}

/// Solves `A·X = B` through the two component systems.
pub fn solve<S: Scalar>(
    a: &BicomplexMatrix<S>,
    b: &BicomplexVector<S>,
    policy: &RankPolicy,
) -> Result<SolutionSet<S>> {
    check_rhs(a, b)?;
    let (b1, b2) = b.split();
    let (s1, k1) = component_solve(a.first(), b1, policy)?;
    let (s2, k2) = component_solve(a.second(), b2, policy)?;
    let kernel = KernelBasis::new(k1, k2);
    let nullity = kernel.len();
    let particular = match (s1, s2) {
        (Some(p), Some(q)) => Some(BicomplexVector::join(p, q)?),
        _ => None,
    };
    let status = match (&particular, nullity) {
        (None, _) => SolutionStatus::Inconsistent,
        (Some(_), 0) => SolutionStatus::Unique,
        (Some(_), _) => SolutionStatus::Infinite,
    };
    Ok(SolutionSet { status, particular, kernel, nullity })
}

pub fn classify_homogeneous<S: Scalar>(
    a: &BicomplexMatrix<S>,
    policy: &RankPolicy,
) -> Result<HomogeneousClass> {
    let rho = modified_rank(a, policy)?;
    let n = a.cols();
    Ok(if rho == 2 * n {
        HomogeneousClass::UniqueZero
    } else if rho == 0 {
        HomogeneousClass::AllOfSpace
    } else {
        HomogeneousClass::Infinite
    })
}

/// The a-priori case of `A·X = B` together with the outcome of actually
/// solving it. Requires `B ≠ 0`.
pub fn classify_nonhomogeneous<S: Scalar>(
    a: &BicomplexMatrix<S>,
    b: &BicomplexVector<S>,
    policy: &RankPolicy,
) -> Result<NonHomogeneousClassification> {
    check_rhs(a, b)?;
    if b.is_zero() {
        return Err(Error::ZeroRightHandSide);
    }
    let apriori = NonHomogeneousCase::from_ranks(modified_rank(a, policy)?, a.rows(), a.cols());
    let resolved = solve(a, b, policy)?.status.into();
    Ok(NonHomogeneousClassification { apriori, resolved })
}

/// `max(|¹ξ|, |²ξ|)`.
fn bc_modulus<S: Scalar>(x: &crate::bicomplex::BiComplex<S>) -> f64 {
    let (a, b) = x.to_idempotent();
    a.modulus().max(b.modulus())
}

/// Largest row sum of entry moduli.
fn matrix_inf_norm<S: Scalar>(a: &BicomplexMatrix<S>) -> f64 {
    (0..a.rows())
        .map(|i| a.row(i).iter().map(bc_modulus).sum::<f64>())
        .fold(0.0, f64::max)
}

fn vector_inf_norm<S: Scalar>(v: &BicomplexVector<S>) -> f64 {
    v.entries().iter().map(bc_modulus).fold(0.0, f64::max)
}

/// `|A·Y − B|∞` using the idempotent-component modulus.
pub fn residual_norm<S: Scalar>(
    a: &BicomplexMatrix<S>,
    b: &BicomplexVector<S>,
    y: &BicomplexVector<S>,
) -> Result<f64> {
    check_rhs(a, b)?;
    let r = a.apply(y)?.sub(b)?;
    Ok(vector_inf_norm(&r))
}

/// Whether `Y` solves `A·X = B`: exact equality, or in approx mode a
/// residual within `1e-8·(1 + ‖A‖∞)·(1 + |Y|∞)`.
pub fn verify_membership<S: Scalar>(
    a: &BicomplexMatrix<S>,
    b: &BicomplexVector<S>,
    y: &BicomplexVector<S>,
    policy: &RankPolicy,
) -> Result<bool> {
    policy.check::<S>()?;
    check_rhs(a, b)?;
    let ay = a.apply(y)?;
    match policy.mode {
        RankMode::Exact => Ok(&ay == b),
        RankMode::Approx => {
            let r = vector_inf_norm(&ay.sub(b)?);
            if !r.is_finite() {
                return Err(Error::Overflow);
            }
            let tol = RESIDUAL_TOLERANCE * (1.0 + matrix_inf_norm(a)) * (1.0 + vector_inf_norm(y));
            Ok(r <= tol)
        }
    }
}
