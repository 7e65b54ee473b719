//! Machine-readable and human-readable reports for the command-line tool.
//!
//! Structured reports are a single JSON document with a `format` version
//! field. Field order is fixed by the struct definitions, so identical inputs
//! produce identical bytes.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::linsys::{
    classify_homogeneous, classify_nonhomogeneous, residual_norm, solve, verify_membership,
    HomogeneousClass, NonHomogeneousCase, ResolvedOutcome, SolutionSet, SolutionStatus,
};
use crate::matrix::{BicomplexMatrix, BicomplexVector};
use crate::rank::{modified_rank, rank_report, RankReport};
use crate::scalar::{ComplexMatrix, RankMode, RankPolicy, Scalar};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verb {
    Decompose,
    Rank,
    Solve,
    Classify,
    Verify,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolicyEcho {
    pub mode: RankMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pivot_tolerance: Option<f64>,
}

impl From<&RankPolicy> for PolicyEcho {
    fn from(p: &RankPolicy) -> Self {
        PolicyEcho {
            mode: p.mode,
            pivot_tolerance: (p.mode == RankMode::Approx).then_some(p.pivot_tolerance),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub matrix_path: String,
    pub rows: usize,
    pub cols: usize,
    pub matrix: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate_path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub format: u32,
    pub verb: Verb,
    pub input: InputEcho,
    pub policy: PolicyEcho,
    pub result: Payload,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Decompose(DecomposePayload),
    Rank(RankReport),
    Solve(Box<SolvePayload>),
    Classify(ClassifyPayload),
    Verify(VerifyPayload),
}

#[derive(Debug, Clone, Serialize)]
pub struct DecomposePayload {
    pub first: Vec<Vec<String>>,
    pub second: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KernelPayload {
    pub from_first: Vec<Vec<String>>,
    pub from_second: Vec<Vec<String>>,
    pub lifted: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolvePayload {
    pub status: SolutionStatus,
    pub particular: Option<Vec<String>>,
    pub nullity: usize,
    pub kernel: KernelPayload,
    pub rank: RankReport,
    pub rank_augmented: RankReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyPayload {
    pub rho_mr: usize,
    pub homogeneous: HomogeneousClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub apriori: Option<NonHomogeneousCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolved: Option<ResolvedOutcome>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyPayload {
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn complex_rows<S: Scalar>(m: &ComplexMatrix<S>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| strings(m.row(i))).collect()
}

fn bicomplex_rows<S: Scalar>(a: &BicomplexMatrix<S>) -> Vec<Vec<String>> {
    (0..a.rows()).map(|i| strings(a.row(i))).collect()
}

impl InputEcho {
    pub fn new<S: Scalar>(matrix_path: &str, a: &BicomplexMatrix<S>) -> Self {
        InputEcho {
            matrix_path: matrix_path.to_string(),
            rows: a.rows(),
            cols: a.cols(),
            matrix: bicomplex_rows(a),
            rhs_path: None,
            rhs: None,
            candidate_path: None,
            candidate: None,
        }
    }

    pub fn with_rhs<S: Scalar>(mut self, path: &str, b: &BicomplexVector<S>) -> Self {
        self.rhs_path = Some(path.to_string());
        self.rhs = Some(strings(b.entries()));
        self
    }

    pub fn with_candidate<S: Scalar>(mut self, path: &str, y: &BicomplexVector<S>) -> Self {
        self.candidate_path = Some(path.to_string());
        self.candidate = Some(strings(y.entries()));
        self
    }
}

pub fn decompose_payload<S: Scalar>(a: &BicomplexMatrix<S>) -> Payload {
    let (p, q) = a.split();
    Payload::Decompose(DecomposePayload {
        first: complex_rows(p),
        second: complex_rows(q),
    })
}

pub fn rank_payload<S: Scalar>(a: &BicomplexMatrix<S>, policy: &RankPolicy) -> Result<Payload> {
    Ok(Payload::Rank(rank_report(a, policy)?))
}

pub fn solve_payload<S: Scalar>(
    a: &BicomplexMatrix<S>,
    b: &BicomplexVector<S>,
    policy: &RankPolicy,
) -> Result<Payload> {
    let sol: SolutionSet<S> = solve(a, b, policy)?;
    Ok(Payload::Solve(Box::new(SolvePayload {
        status: sol.status,
        particular: sol.particular.as_ref().map(|s| strings(s.entries())),
        nullity: sol.nullity,
        kernel: KernelPayload {
            from_first: sol.kernel.from_first.iter().map(|v| strings(v)).collect(),
            from_second: sol.kernel.from_second.iter().map(|v| strings(v)).collect(),
            lifted: sol.kernel.lifted.iter().map(|k| strings(k.entries())).collect(),
        },
        rank: rank_report(a, policy)?,
        rank_augmented: rank_report(&a.augment(b)?, policy)?,
    })))
}

/// Homogeneous classification, plus the a-priori and resolved
/// non-homogeneous classification when a nonzero right-hand side is given.
pub fn classify_payload<S: Scalar>(
    a: &BicomplexMatrix<S>,
    b: Option<&BicomplexVector<S>>,
    policy: &RankPolicy,
) -> Result<Payload> {
    let mut out = ClassifyPayload {
        rho_mr: modified_rank(a, policy)?,
        homogeneous: classify_homogeneous(a, policy)?,
        apriori: None,
        resolved: None,
    };
    if let Some(b) = b {
        if b.is_zero() {
            out.resolved = Some(solve(a, b, policy)?.status.into());
        } else {
            let c = classify_nonhomogeneous(a, b, policy)?;
            out.apriori = Some(c.apriori);
            out.resolved = Some(c.resolved);
        }
    }
    Ok(Payload::Classify(out))
}

pub fn verify_payload<S: Scalar>(
    a: &BicomplexMatrix<S>,
    b: &BicomplexVector<S>,
    y: &BicomplexVector<S>,
    policy: &RankPolicy,
) -> Result<Payload> {
    let member = verify_membership(a, b, y, policy)?;
    let residual = match policy.mode {
        RankMode::Exact => None,
        RankMode::Approx => Some(residual_norm(a, b, y)?),
    };
    Ok(Payload::Verify(VerifyPayload { member, residual }))
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let inp = &self.input;
        let _ = writeln!(out, "matrix: {} ({}x{})", inp.matrix_path, inp.rows, inp.cols);
        if let Some(p) = &inp.rhs_path {
            let _ = writeln!(out, "rhs: {}", p);
        }
        match self.policy.pivot_tolerance {
            Some(t) => {
                let _ = writeln!(out, "mode: approx (pivot tolerance {:e})", t);
            }
            None => {
                let _ = writeln!(out, "mode: exact");
            }
        }
        match &self.result {
            Payload::Decompose(d) => {
                let _ = writeln!(out, "first component (coefficient of e1):");
                write_grid(&mut out, &d.first);
                let _ = writeln!(out, "second component (coefficient of e2):");
                write_grid(&mut out, &d.second);
            }
            Payload::Rank(r) => write_ranks(&mut out, r),
            Payload::Solve(s) => {
                let _ = writeln!(out, "status: {}", snake(&s.status));
                match &s.particular {
                    Some(p) => {
                        let _ = writeln!(out, "particular solution: ({})", p.join(", "));
                    }
                    None => {
                        let _ = writeln!(out, "particular solution: none");
                    }
                }
                let _ = writeln!(out, "nullity: {}", s.nullity);
                let _ = writeln!(out, "kernel basis:");
                for k in &s.kernel.lifted {
                    let _ = writeln!(out, "  ({})", k.join(", "));
                }
                let _ = writeln!(out, "ranks of A:");
                write_ranks(&mut out, &s.rank);
                let _ = writeln!(out, "ranks of (A | B):");
                write_ranks(&mut out, &s.rank_augmented);
            }
            Payload::Classify(c) => {
                let _ = writeln!(out, "modified rank: {}", c.rho_mr);
                let _ = writeln!(out, "homogeneous system: {}", snake(&c.homogeneous));
                if let Some(a) = &c.apriori {
                    let _ = writeln!(out, "a-priori case: {}", snake(a));
                }
                if let Some(r) = &c.resolved {
                    let _ = writeln!(out, "resolved: {}", snake(r));
                }
            }
            Payload::Verify(v) => {
                let _ = writeln!(out, "member: {}", v.member);
                if let Some(r) = v.residual {
                    let _ = writeln!(out, "residual: {:e}", r);
                }
            }
        }
        out
    }
}

fn snake<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn write_grid(out: &mut String, rows: &[Vec<String>]) {
    for row in rows {
        let _ = writeln!(out, "  {}", row.join(" | "));
    }
}

fn write_ranks(out: &mut String, r: &RankReport) {
    let _ = writeln!(
        out,
        "  row rank {}, column rank {}, idempotent row rank {}, idempotent column rank {}, modified rank {}, rank(1A) {}, rank(2A) {}",
        r.rho_r, r.rho_c, r.rho_ir, r.rho_ic, r.rho_mr, r.rho_1, r.rho_2
    );
}
