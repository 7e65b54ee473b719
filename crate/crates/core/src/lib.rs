//! Linear algebra over the bicomplex numbers ℂ₂.
//!
//! ℂ₂ is a commutative ring with zero divisors, so the usual field-based
//! rank and solvability theory does not carry over directly. This crate
//! works through the idempotent decomposition `A = ¹A·e₁ + ²A·e₂`: ranks,
//! consistency, kernels and particular solutions are all computed from the
//! two complex component matrices.
//!
//! Everything is generic over a complex [`Scalar`] backend: [`ExactComplex`]
//! (Gaussian rationals) or [`FloatComplex`] (binary64 with a pivot
//! tolerance).

pub mod bicomplex;
pub mod error;
pub mod linsys;
pub mod literal;
pub mod matrix;
pub mod rank;
pub mod report;
pub mod scalar;

pub use bicomplex::{bc_arith, BcOp, BiComplex, BiComplexClass};
pub use error::{Error, Result};
pub use linsys::{
    classify_homogeneous, classify_nonhomogeneous, consistent_via_modified_rank, is_consistent, solve,
    verify_membership, HomogeneousClass, KernelBasis, NonHomogeneousCase, NonHomogeneousClassification,
    ResolvedOutcome, SolutionSet, SolutionStatus,
};
pub use literal::{parse_literal, parse_matrix, parse_vector, ParseError};
pub use matrix::{BicomplexMatrix, BicomplexVector, MatOp};
pub use rank::{rank_report, RankReport};
pub use scalar::{
    complex_rank, complex_solve, scalar_arith, ArithOp, ComplexMatrix, ComplexSolution, ExactComplex,
    FloatComplex, RankMode, RankPolicy, Scalar,
};
