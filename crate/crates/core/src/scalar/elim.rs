use super::{ComplexMatrix, RankMode, RankPolicy, Scalar};
use crate::error::{Error, Result};

/// Outcome of solving `M·x = b` over the complex field.
#[derive(Debug, Clone, PartialEq)]
pub enum ComplexSolution<S> {
    NoSolution,
    /// `particular + span(kernel)`; free variables of `particular` are 0 and
    /// each kernel vector has exactly one free variable set to 1.
    Affine { particular: Vec<S>, kernel: Vec<Vec<S>> },
}

impl<S> ComplexSolution<S> {
    pub fn is_consistent(&self) -> bool {
        matches!(self, ComplexSolution::Affine { .. })
    }
}

/// Rank of a complex matrix.
///
/// Exact mode runs fraction-free (Bareiss) elimination with exact zero
/// tests. Approx mode runs partial pivoting and counts pivots whose modulus
/// exceeds `pivot_tolerance` times the largest entry modulus.
pub fn complex_rank<S: Scalar>(m: &ComplexMatrix<S>, policy: &RankPolicy) -> Result<usize> {
    policy.check::<S>()?;
    if !m.is_finite() {
        return Err(Error::Overflow);
    }
    if m.rows() == 0 || m.cols() == 0 {
        return Ok(0);
    }
    match policy.mode {
        RankMode::Exact => Ok(bareiss_rank(m)),
        RankMode::Approx => pivoted_rank(m, policy.pivot_tolerance),
    }
}

fn bareiss_rank<S: Scalar>(m: &ComplexMatrix<S>) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = S::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for i in rank + 1..rows {
            let lead = a[i][c].clone();
            let (head, tail) = a.split_at_mut(i);
            let pivot_row = &head[rank];
            for (x, p) in tail[0][c + 1..].iter_mut().zip(&pivot_row[c + 1..]) {
                let num = pivot.clone() * x.clone() - lead.clone() * p.clone();
                // prev is a previous nonzero pivot, so the division is exact.
                *x = num.checked_div(&prev).expect("nonzero Bareiss pivot");
            }
            a[i][c] = S::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

fn pivoted_rank<S: Scalar>(m: &ComplexMatrix<S>, tol: f64) -> Result<usize> {
    let scale = m.max_modulus();
    if scale == 0.0 {
        return Ok(0);
    }
    let threshold = tol * scale;
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let p = argmax_modulus(&a, rank, c);
        if a[p][c].is_negligible(threshold) {
            continue;
        }
        a.swap(rank, p);
        eliminate_below(&mut a, rank, c)?;
        rank += 1;
    }
    Ok(rank)
}

fn argmax_modulus<S: Scalar>(a: &[Vec<S>], from: usize, c: usize) -> usize {
    let mut best = from;
    let mut best_mod = a[from][c].modulus();
    for (i, row) in a.iter().enumerate().skip(from + 1) {
        let md = row[c].modulus();
        if md > best_mod {
            best = i;
            best_mod = md;
        }
    }
    best
}

fn eliminate_below<S: Scalar>(a: &mut [Vec<S>], r: usize, c: usize) -> Result<()> {
    let pivot = a[r][c].clone();
    let (head, tail) = a.split_at_mut(r + 1);
    let pivot_row = &head[r];
    for row in tail {
        if row[c].is_zero() {
            continue;
        }
        let factor = row[c].checked_div(&pivot)?;
        for j in c + 1..pivot_row.len() {
            row[j] = row[j].clone() - factor.clone() * pivot_row[j].clone();
            if !row[j].is_finite() {
                return Err(Error::Overflow);
            }
        }
        row[c] = S::zero();
    }
    Ok(())
}

/// Solves `M·x = b` by reduction to reduced row-echelon form.
///
/// The system is inconsistent exactly when `rank(M | b) > rank(M)`. For a
/// consistent system the particular solution has every free variable set to
/// 0 and the kernel basis has one vector per free column.
pub fn complex_solve<S: Scalar>(
    m: &ComplexMatrix<S>,
    b: &[S],
    policy: &RankPolicy,
) -> Result<ComplexSolution<S>> {
    policy.check::<S>()?;
    let (rows, cols) = (m.rows(), m.cols());
    if b.len() != rows {
        return Err(Error::dims(format!("length {}", rows), format!("length {}", b.len())));
    }
    if !m.is_finite() || !b.iter().all(S::is_finite) {
        return Err(Error::Overflow);
    }

    let (pivot_threshold, residual_threshold) = match policy.mode {
        RankMode::Exact => (0.0, 0.0),
        RankMode::Approx => {
            let scale_m = m.max_modulus();
            let scale_b = b.iter().map(S::modulus).fold(0.0, f64::max);
            let tol = policy.pivot_tolerance;
            (tol * scale_m, tol * scale_m.max(scale_b))
        }
    };
    let pivot_ok = |z: &S| match policy.mode {
        RankMode::Exact => !z.is_zero(),
        RankMode::Approx => !z.is_negligible(pivot_threshold),
    };

    // Augmented rows; column `cols` holds b.
    let mut a: Vec<Vec<S>> = (0..rows)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    for c in 0..cols {
        let r = pivots.len();
        if r == rows {
            break;
        }
        let p = match policy.mode {
            RankMode::Exact => (r..rows).find(|&i| !a[i][c].is_zero()),
            RankMode::Approx => Some(argmax_modulus(&a, r, c)),
        };
        let Some(p) = p.filter(|&p| pivot_ok(&a[p][c])) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for x in &mut a[r][c..] {
            *x = x.checked_div(&pivot)?;
        }
        a[r][c] = S::one();
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for j in c..=cols {
                row[j] = row[j].clone() - factor.clone() * pivot_row[j].clone();
                if !row[j].is_finite() {
                    return Err(Error::Overflow);
                }
            }
            row[c] = S::zero();
        }
        pivots.push(c);
    }

    let rank = pivots.len();
    let inconsistent = a[rank..]
        .iter()
        .any(|row| match policy.mode {
            RankMode::Exact => !row[cols].is_zero(),
            RankMode::Approx => !row[cols].is_negligible(residual_threshold),
        });
    if inconsistent {
        return Ok(ComplexSolution::NoSolution);
    }

    let mut particular = vec![S::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = a[r][cols].clone();
    }

    let mut kernel = Vec::with_capacity(cols - rank);
    let mut next_pivot = pivots.iter().peekable();
    for f in 0..cols {
        if next_pivot.peek() == Some(&&f) {
            next_pivot.next();
            continue;
        }
        let mut v = vec![S::zero(); cols];
        v[f] = S::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -a[r][f].clone();
        }
        kernel.push(v);
    }

    Ok(ComplexSolution::Affine { particular, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ExactComplex, FloatComplex};

    type E = ExactComplex;

    fn ints(rows: &[&[i64]]) -> ComplexMatrix<E> {
        ComplexMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| E::from_i64(v, 0)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn ivec(v: &[i64]) -> Vec<E> {
        v.iter().map(|&x| E::from_i64(x, 0)).collect()
    }

    // Rank by Gram-style brute force: count rows that are not in the span of
    // the previously kept rows, testing membership by solving with plain
    // Gauss-Jordan on the kept rows' transpose.
    fn rank_oracle(m: &ComplexMatrix<E>) -> usize {
        let mut kept: Vec<Vec<E>> = Vec::new();
        for i in 0..m.rows() {
            let candidate = m.row(i).to_vec();
            let in_span = if kept.is_empty() {
                candidate.iter().all(E::is_zero)
            } else {
                let basis = ComplexMatrix::from_rows(kept.clone()).unwrap().transpose();
                complex_solve(&basis, &candidate, &RankPolicy::exact())
                    .unwrap()
                    .is_consistent()
            };
            if !in_span {
                kept.push(candidate);
            }
        }
        kept.len()
    }

    #[test]
    fn rank_examples() {
        let p = RankPolicy::exact();
        assert_eq!(complex_rank(&ints(&[&[1, 0], &[0, 0]]), &p).unwrap(), 1);
        assert_eq!(complex_rank(&ComplexMatrix::<E>::identity(3), &p).unwrap(), 3);
        assert_eq!(complex_rank(&ints(&[&[1, 2], &[2, 4]]), &p).unwrap(), 1);
        assert_eq!(complex_rank(&ComplexMatrix::<E>::zeros(0, 4), &p).unwrap(), 0);
        assert_eq!(complex_rank(&ComplexMatrix::<E>::zeros(3, 0), &p).unwrap(), 0);
    }

    #[test]
    fn rank_with_gaussian_entries() {
        // Row 2 = i·row 1.
        let m = ComplexMatrix::from_rows(vec![
            vec![E::from_i64(1, 1), E::from_i64(2, 0)],
            vec![E::from_i64(-1, 1), E::from_i64(0, 2)],
        ])
        .unwrap();
        assert_eq!(complex_rank(&m, &RankPolicy::exact()).unwrap(), 1);
        assert_eq!(rank_oracle(&m), 1);
    }

    #[test]
    fn bareiss_needs_column_skipping() {
        let m = ints(&[&[0, 1, 2], &[0, 2, 4], &[0, 0, 1]]);
        assert_eq!(complex_rank(&m, &RankPolicy::exact()).unwrap(), 2);
        assert_eq!(rank_oracle(&m), 2);
    }

    #[test]
    fn solve_examples() {
        let p = RankPolicy::exact();
        let sol = complex_solve(&ComplexMatrix::<E>::identity(2), &ivec(&[3, 4]), &p).unwrap();
        assert_eq!(
            sol,
            ComplexSolution::Affine { particular: ivec(&[3, 4]), kernel: vec![] }
        );

        let sol = complex_solve(&ints(&[&[0]]), &ivec(&[1]), &p).unwrap();
        assert_eq!(sol, ComplexSolution::NoSolution);

        let m = ints(&[&[1, 1]]);
        let sol = complex_solve(&m, &ivec(&[2]), &p).unwrap();
        assert_eq!(
            sol,
            ComplexSolution::Affine { particular: ivec(&[2, 0]), kernel: vec![ivec(&[-1, 1])] }
        );
        // Substitute back.
        assert_eq!(m.mul_vec(&ivec(&[2, 0])).unwrap(), ivec(&[2]));
        assert_eq!(m.mul_vec(&ivec(&[-1, 1])).unwrap(), ivec(&[0]));
    }

    #[test]
    fn solve_degenerate_shapes() {
        let p = RankPolicy::exact();
        // No rows: every x solves, kernel is the full space.
        let sol = complex_solve(&ComplexMatrix::<E>::zeros(0, 2), &[], &p).unwrap();
        assert_eq!(
            sol,
            ComplexSolution::Affine {
                particular: ivec(&[0, 0]),
                kernel: vec![ivec(&[1, 0]), ivec(&[0, 1])]
            }
        );
        // No columns: consistent iff b = 0.
        let empty = ComplexMatrix::<E>::zeros(2, 0);
        assert!(complex_solve(&empty, &ivec(&[0, 0]), &p).unwrap().is_consistent());
        assert!(!complex_solve(&empty, &ivec(&[0, 1]), &p).unwrap().is_consistent());
    }

    #[test]
    fn solve_rejects_bad_lengths() {
        let err = complex_solve(&ComplexMatrix::<E>::identity(2), &ivec(&[1]), &RankPolicy::exact());
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn mismatched_policy_is_rejected() {
        let m = ComplexMatrix::<FloatComplex>::identity(2);
        assert!(matches!(
            complex_rank(&m, &RankPolicy::exact()),
            Err(Error::PolicyMismatch { .. })
        ));
    }

    #[test]
    fn approx_rank_respects_tolerance() {
        let m = ComplexMatrix::from_rows(vec![
            vec![FloatComplex::new(1.0, 0.0), FloatComplex::new(0.0, 0.0)],
            vec![FloatComplex::new(0.0, 0.0), FloatComplex::new(1e-9, 0.0)],
        ])
        .unwrap();
        assert_eq!(complex_rank(&m, &RankPolicy::approx(1e-10)).unwrap(), 2);
        assert_eq!(complex_rank(&m, &RankPolicy::approx(1e-8)).unwrap(), 1);
    }

    #[test]
    fn approx_non_finite_input_is_overflow() {
        let m = ComplexMatrix::from_rows(vec![vec![FloatComplex::new(f64::INFINITY, 0.0)]]).unwrap();
        assert_eq!(complex_rank(&m, &RankPolicy::approx(1e-10)), Err(Error::Overflow));
    }
}
