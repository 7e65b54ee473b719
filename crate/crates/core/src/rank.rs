//! Rank notions for bicomplex matrices.
//!
//! Row and column rank are dimensions over ℂ₁ of the span of the rows
//! (columns) inside ℂ₂ⁿ (ℂ₂ᵐ), computed through the idempotent-coordinate
//! embeddings. The idempotent row rank, idempotent column rank and modified
//! rank all equal `ρ(¹A) + ρ(²A)`; they are computed along separate routes
//! so that equality stays checkable.

use serde::Serialize;

use crate::error::Result;
use crate::matrix::BicomplexMatrix;
use crate::scalar::{complex_rank, RankPolicy, Scalar};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankReport {
    pub rho_r: usize,
    pub rho_c: usize,
    pub rho_ir: usize,
    pub rho_ic: usize,
    pub rho_mr: usize,
    pub rho_1: usize,
    pub rho_2: usize,
    #[serde(skip)]
    pub policy: RankPolicy,
}

impl RankReport {
    /// `ρ_ir = ρ_ic = ρ_mr = ρ(¹A) + ρ(²A)`.
    pub fn idempotent_ranks_agree(&self) -> bool {
        let sum = self.rho_1 + self.rho_2;
        self.rho_ir == sum && self.rho_ic == sum && self.rho_mr == sum
    }

    /// Row and column spans sit inside the idempotent ones.
    pub fn inclusions_hold(&self) -> bool {
        self.rho_r <= self.rho_ir && self.rho_c <= self.rho_ic
    }

    pub fn within_bound(&self, rows: usize, cols: usize) -> bool {
        self.rho_mr <= 2 * rows.min(cols)
    }

    /// `None` when the two reports were computed under different pivoting regimes.
    pub fn same_ranks(&self, other: &RankReport) -> Option<bool> {
        if !self.policy.same_regime(&other.policy) {
            return None;
        }
        Some(
            (self.rho_r, self.rho_c, self.rho_ir, self.rho_ic, self.rho_mr, self.rho_1, self.rho_2)
                == (other.rho_r, other.rho_c, other.rho_ir, other.rho_ic, other.rho_mr, other.rho_1, other.rho_2),
        )
    }
}

pub fn row_rank<S: Scalar>(a: &BicomplexMatrix<S>, policy: &RankPolicy) -> Result<usize> {
    complex_rank(&a.embed_rows(), policy)
}

pub fn column_rank<S: Scalar>(a: &BicomplexMatrix<S>, policy: &RankPolicy) -> Result<usize> {
    complex_rank(&a.embed_cols(), policy)
}

/// `(ρ(¹A), ρ(²A))`.
pub fn component_ranks<S: Scalar>(a: &BicomplexMatrix<S>, policy: &RankPolicy) -> Result<(usize, usize)> {
    Ok((complex_rank(a.first(), policy)?, complex_rank(a.second(), policy)?))
}

pub fn idempotent_row_rank<S: Scalar>(a: &BicomplexMatrix<S>, policy: &RankPolicy) -> Result<usize> {
    let (r1, r2) = component_ranks(a, policy)?;
    Ok(r1 + r2)
}

/// Column-space route: ranks of the transposed components.
pub fn idempotent_column_rank<S: Scalar>(a: &BicomplexMatrix<S>, policy: &RankPolicy) -> Result<usize> {
    Ok(complex_rank(&a.first().transpose(), policy)? + complex_rank(&a.second().transpose(), policy)?)
}

/// Modified rank `ρ_mr(A) = ρ(¹A) + ρ(²A)`.
pub fn modified_rank<S: Scalar>(a: &BicomplexMatrix<S>, policy: &RankPolicy) -> Result<usize> {
    idempotent_row_rank(a, policy)
}

pub fn rank_report<S: Scalar>(a: &BicomplexMatrix<S>, policy: &RankPolicy) -> Result<RankReport> {
    let (rho_1, rho_2) = component_ranks(a, policy)?;
    Ok(RankReport {
        rho_r: row_rank(a, policy)?,
        rho_c: column_rank(a, policy)?,
        rho_ir: idempotent_row_rank(a, policy)?,
        rho_ic: idempotent_column_rank(a, policy)?,
        rho_mr: modified_rank(a, policy)?,
        rho_1,
        rho_2,
        policy: *policy,
    })
}
