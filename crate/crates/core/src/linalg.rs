//! Sparse column-major matrices and exact rank by Gaussian elimination.

use crate::scalar::Scalar;

/// A sparse matrix stored by columns; each column is sorted by row with no
/// explicit zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<F> {
    nrows: usize,
    cols: Vec<Vec<(usize, F)>>,
}

impl<F: Scalar> SparseMatrix<F> {
    pub fn new(nrows: usize) -> Self {
        SparseMatrix {
            nrows,
            cols: Vec::new(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Appends a column given as `(row, value)` pairs; duplicate rows are summed.
    pub fn push_column<I>(&mut self, entries: I)
    where
        I: IntoIterator<Item = (usize, F)>,
    {
        let mut col: Vec<(usize, F)> = entries.into_iter().collect();
        col.sort_by_key(|e| e.0);
        let mut merged: Vec<(usize, F)> = Vec::with_capacity(col.len());
        for (r, v) in col {
            assert!(r < self.nrows, "row {r} out of range {}", self.nrows);
            match merged.last_mut() {
                Some(last) if last.0 == r => last.1 = last.1.clone() + v,
                _ => merged.push((r, v)),
            }
        }
        merged.retain(|e| !e.1.is_zero());
        self.cols.push(merged);
    }

    /// Appends a column of small integers.
    pub fn push_int_column<I>(&mut self, entries: I)
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        self.push_column(entries.into_iter().map(|(r, v)| (r, F::from_i64(v))));
    }

    pub fn column(&self, c: usize) -> &[(usize, F)] {
        &self.cols[c]
    }

    /// Product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix<F>) -> SparseMatrix<F> {
        assert_eq!(self.ncols(), rhs.nrows, "dimension mismatch in product");
        let mut out = SparseMatrix::new(self.nrows);
        for col in &rhs.cols {
            let mut acc: Vec<(usize, F)> = Vec::new();
            for (k, v) in col {
                for (r, w) in &self.cols[*k] {
                    acc.push((*r, v.clone() * w.clone()));
                }
            }
            out.push_column(acc);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Rank over `F`.
    ///
    /// Columns are reduced left to right; each column's leading (smallest)
    /// row is eliminated against the pivot column registered for that row,
    /// if any. Pivot columns are normalized to a leading 1.
    pub fn rank(&self) -> usize {
        let mut pivots: Vec<Option<Vec<(usize, F)>>> = vec![None; self.nrows];
        let mut rank = 0;
        for col in &self.cols {
            let mut v = col.clone();
            while let Some((lead, coeff)) = v.first().cloned() {
                match &pivots[lead] {
                    Some(p) => v = axpy(&v, &coeff, p),
                    None => {
                        let inv = F::one() / coeff;
                        for e in v.iter_mut() {
                            e.1 = e.1.clone() * inv.clone();
                        }
                        pivots[lead] = Some(v);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }
}

/// `v - c * p` for sorted sparse vectors.
fn axpy<F: Scalar>(v: &[(usize, F)], c: &F, p: &[(usize, F)]) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < p.len() {
        let take_v = j >= p.len() || (i < v.len() && v[i].0 < p[j].0);
        let take_p = i >= v.len() || (j < p.len() && p[j].0 < v[i].0);
        if take_v {
            out.push(v[i].clone());
            i += 1;
        } else if take_p {
            out.push((p[j].0, -(c.clone() * p[j].1.clone())));
            j += 1;
        } else {
            let val = v[i].1.clone() - c.clone() * p[j].1.clone();
            if !val.is_zero() {
                out.push((v[i].0, val));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Fp, Rational};

    fn from_rows<F: Scalar>(rows: &[&[i64]]) -> SparseMatrix<F> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMatrix::new(nrows);
        for c in 0..ncols {
            m.push_int_column((0..nrows).map(|r| (r, rows[r][c])));
        }
        m
    }

    #[test]
    fn rank_of_small_matrices() {
        let m: SparseMatrix<Rational> = from_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let id: SparseMatrix<Rational> = from_rows(&[&[1, 0], &[0, 1]]);
        assert_eq!(id.rank(), 2);
        let z: SparseMatrix<Rational> = from_rows(&[&[0, 0], &[0, 0]]);
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2
        let rows: &[&[i64]] = &[&[1, 1], &[1, -1]];
        assert_eq!(from_rows::<Rational>(rows).rank(), 2);
        assert_eq!(from_rows::<Fp<2>>(rows).rank(), 1);
        assert_eq!(from_rows::<Fp<3>>(rows).rank(), 2);
    }

    #[test]
    fn product_and_duplicates() {
        let mut a: SparseMatrix<Rational> = SparseMatrix::new(2);
        a.push_int_column([(0, 1), (0, 1), (1, 3)]);
        assert_eq!(a.column(0).len(), 2);
        let b: SparseMatrix<Rational> = from_rows(&[&[1, -1]]);
        let p = a.mul(&b);
        assert_eq!(p.ncols(), 2);
        assert_eq!(p.rank(), 1);
    }

    proptest::proptest! {
        #[test]
        fn rank_matches_transpose(entries in proptest::collection::vec(-2i64..=2, 20)) {
            let rows: Vec<&[i64]> = entries.chunks(5).collect();
            let m: SparseMatrix<Rational> = from_rows(&rows);
            let cols: Vec<Vec<i64>> = (0..5).map(|c| rows.iter().map(|r| r[c]).collect()).collect();
            let col_refs: Vec<&[i64]> = cols.iter().map(|c| c.as_slice()).collect();
            let t: SparseMatrix<Rational> = from_rows(&col_refs);
            proptest::prop_assert_eq!(m.rank(), t.rank());
        }
    }
}
