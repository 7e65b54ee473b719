//! Matrices and vectors over the bicomplex numbers.
//!
//! A bicomplex matrix decomposes uniquely as `A = ¹A·e₁ + ²A·e₂` with complex
//! component matrices. The components are computed at construction and kept
//! alongside the entries; products and ranks are evaluated through them.

use crate::bicomplex::BiComplex;
use crate::error::{Error, Result};
use crate::scalar::{ComplexMatrix, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct BicomplexMatrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<BiComplex<S>>,
    first: ComplexMatrix<S>,
    second: ComplexMatrix<S>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatOp {
    Add,
    Sub,
    Matmul,
}

impl<S: Scalar> BicomplexMatrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<BiComplex<S>>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::dims(
                format!("{} entries", rows * cols),
                format!("{} entries", entries.len()),
            ));
        }
        let (first, second): (Vec<S>, Vec<S>) = entries.iter().map(BiComplex::to_idempotent).unzip();
        Ok(BicomplexMatrix {
            rows,
            cols,
            entries,
            first: ComplexMatrix::new(rows, cols, first)?,
            second: ComplexMatrix::new(rows, cols, second)?,
        })
    }

    pub fn from_rows(rows: Vec<Vec<BiComplex<S>>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(m * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::dims(format!("{} columns", n), format!("{} columns", row.len())));
            }
            entries.extend(row);
        }
        Self::new(m, n, entries)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BiComplex<S>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(rows, cols, entries).expect("from_fn produces rows*cols entries")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| BiComplex::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { BiComplex::one() } else { BiComplex::zero() })
    }

    /// Embeds a complex matrix (both idempotent components equal).
    pub fn from_complex(m: &ComplexMatrix<S>) -> Self {
        Self::join(m, m).expect("components share a shape")
    }

    /// Rebuilds `P·e₁ + Q·e₂` from its idempotent components.
    pub fn join(p: &ComplexMatrix<S>, q: &ComplexMatrix<S>) -> Result<Self> {
        if p.rows() != q.rows() || p.cols() != q.cols() {
            return Err(Error::dims(p.shape(), q.shape()));
        }
        let entries = p
            .entries()
            .iter()
            .zip(q.entries())
            .map(|(a, b)| BiComplex::from_idempotent(a.clone(), b.clone()))
            .collect();
        Ok(BicomplexMatrix {
            rows: p.rows(),
            cols: p.cols(),
            entries,
            first: p.clone(),
            second: q.clone(),
        })
    }

    /// `(¹A, ²A)`.
    pub fn split(&self) -> (&ComplexMatrix<S>, &ComplexMatrix<S>) {
        (&self.first, &self.second)
    }

    pub fn first(&self) -> &ComplexMatrix<S> {
        &self.first
    }

    pub fn second(&self) -> &ComplexMatrix<S> {
        &self.second
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BiComplex<S> {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BiComplex<S>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BiComplex<S>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BiComplex::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Entry/component agreement; always true for values built by this module.
    pub fn is_coherent(&self) -> bool {
        self.entries.iter().enumerate().all(|(k, x)| {
            let (a, b) = x.to_idempotent();
            a == self.first.entries()[k] && b == self.second.entries()[k]
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::join(&self.first.add(&other.first)?, &self.second.add(&other.second)?)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Self::join(&self.first.sub(&other.first)?, &self.second.sub(&other.second)?)
    }

    /// Product evaluated componentwise: `(¹A·¹B)e₁ + (²A·²B)e₂`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        Self::join(
            &self.first.matmul(&other.first)?,
            &self.second.matmul(&other.second)?,
        )
    }

    /// Product evaluated with bicomplex entry arithmetic.
    pub fn matmul_direct(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::dims(
                format!("{} rows on the right", self.cols),
                format!("{} rows", other.rows),
            ));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(BiComplex::zero(), |acc, k| {
                acc + self.get(i, k).clone() * other.get(k, j).clone()
            })
        }))
    }

    pub fn arith(&self, other: &Self, op: MatOp) -> Result<Self> {
        match op {
            MatOp::Add => self.add(other),
            MatOp::Sub => self.sub(other),
            MatOp::Matmul => self.matmul(other),
        }
    }

    /// `A·X` through the components: `join(¹A·¹X, ²A·²X)`.
    pub fn apply(&self, x: &BicomplexVector<S>) -> Result<BicomplexVector<S>> {
        if self.cols != x.len() {
            return Err(Error::dims(format!("length {}", self.cols), format!("length {}", x.len())));
        }
        BicomplexVector::join(
            self.first.mul_vec(&x.first)?,
            self.second.mul_vec(&x.second)?,
        )
    }

    /// `A·X` with bicomplex dot products.
    pub fn apply_direct(&self, x: &BicomplexVector<S>) -> Result<BicomplexVector<S>> {
        if self.cols != x.len() {
            return Err(Error::dims(format!("length {}", self.cols), format!("length {}", x.len())));
        }
        Ok(BicomplexVector::new(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(x.entries())
                        .fold(BiComplex::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
                })
                .collect(),
        ))
    }

    /// `[A | B]`.
    pub fn augment(&self, b: &BicomplexVector<S>) -> Result<Self> {
        if self.rows != b.len() {
            return Err(Error::dims(format!("length {}", self.rows), format!("length {}", b.len())));
        }
        Self::join(
            &self.first.hstack(&ComplexMatrix::column(b.first.clone()))?,
            &self.second.hstack(&ComplexMatrix::column(b.second.clone()))?,
        )
    }

    /// `m × 2n` complex matrix whose row k is `(¹row_k | ²row_k)`.
    pub fn embed_rows(&self) -> ComplexMatrix<S> {
        self.first.hstack(&self.second).expect("components share a shape")
    }

    /// `2m × n` complex matrix whose column j is `¹col_j` stacked over `²col_j`.
    pub fn embed_cols(&self) -> ComplexMatrix<S> {
        self.first.vstack(&self.second).expect("components share a shape")
    }
}

/// Vector over the bicomplex numbers with cached idempotent components.
#[derive(Debug, Clone, PartialEq)]
pub struct BicomplexVector<S> {
    entries: Vec<BiComplex<S>>,
    first: Vec<S>,
    second: Vec<S>,
}

impl<S: Scalar> BicomplexVector<S> {
    pub fn new(entries: Vec<BiComplex<S>>) -> Self {
        let (first, second) = entries.iter().map(BiComplex::to_idempotent).unzip();
        BicomplexVector { entries, first, second }
    }

    pub fn zeros(n: usize) -> Self {
        Self::new(vec![BiComplex::zero(); n])
    }

    pub fn join(first: Vec<S>, second: Vec<S>) -> Result<Self> {
        if first.len() != second.len() {
            return Err(Error::dims(
                format!("length {}", first.len()),
                format!("length {}", second.len()),
            ));
        }
        let entries = first
            .iter()
            .zip(&second)
            .map(|(a, b)| BiComplex::from_idempotent(a.clone(), b.clone()))
            .collect();
        Ok(BicomplexVector { entries, first, second })
    }

    /// `v·e₁` for a complex vector `v`.
    pub fn lift_first(v: &[S]) -> Self {
        Self::join(v.to_vec(), vec![S::zero(); v.len()]).expect("equal lengths")
    }

    /// `w·e₂` for a complex vector `w`.
    pub fn lift_second(w: &[S]) -> Self {
        Self::join(vec![S::zero(); w.len()], w.to_vec()).expect("equal lengths")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BiComplex<S>] {
        &self.entries
    }

    pub fn split(&self) -> (&[S], &[S]) {
        (&self.first, &self.second)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BiComplex::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(S, S) -> S) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::dims(format!("length {}", self.len()), format!("length {}", other.len())));
        }
        let zip = |x: &[S], y: &[S]| -> Vec<S> {
            x.iter().zip(y).map(|(a, b)| f(a.clone(), b.clone())).collect()
        };
        Self::join(zip(&self.first, &other.first), zip(&self.second, &other.second))
    }

    /// Multiplies by a complex scalar.
    pub fn scale(&self, k: &S) -> Self {
        Self::new(self.entries.iter().map(|x| x.scale(k)).collect())
    }

    /// `(¹v | ²v)` as a row of length 2n.
    pub fn embed(&self) -> Vec<S> {
        self.first.iter().chain(&self.second).cloned().collect()
    }

    /// The vector as an `n × 1` matrix.
    pub fn to_column(&self) -> BicomplexMatrix<S> {
        BicomplexMatrix::new(self.len(), 1, self.entries.clone()).expect("n entries")
    }
}

impl<S: Scalar> FromIterator<BiComplex<S>> for BicomplexVector<S> {
    fn from_iter<I: IntoIterator<Item = BiComplex<S>>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}
