//! Sparse column matrices and exact rank by fraction-free column reduction.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::scalar::ExactScalar;

/// Sparse column: `(row, entry)` pairs with strictly increasing rows and nonzero entries.
pub type SparseColumn<T> = Vec<(usize, T)>;

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    pub rows: usize,
    pub columns: Vec<SparseColumn<T>>,
}

impl<T: ExactScalar> SparseMatrix<T> {
    pub fn new(rows: usize, columns: Vec<SparseColumn<T>>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|(r, e)| *r < rows && !e.is_zero())));
        SparseMatrix { rows, columns }
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.columns[col]
            .binary_search_by_key(&row, |(r, _)| *r)
            .map(|i| self.columns[col][i].1.clone())
            .unwrap_or_else(|_| T::zero())
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut d = vec![vec![T::zero(); self.cols()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, e) in col {
                d[*i][j] = e.clone();
            }
        }
        d
    }

    /// Convert entries, e.g. from `i64` to `BigInt`.
    pub fn map<U: ExactScalar>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        SparseMatrix {
            rows: self.rows,
            columns: self
                .columns
                .iter()
                .map(|c| c.iter().map(|(r, e)| (*r, f(e))).collect())
                .collect(),
        }
    }

    /// Whether `self * other` is the zero matrix.
    pub fn product_is_zero(&self, other: &SparseMatrix<T>) -> bool {
        assert_eq!(self.cols(), other.rows, "dimension mismatch");
        for col in &other.columns {
            let mut acc: HashMap<usize, T> = HashMap::new();
            for (k, b) in col {
                for (i, a) in &self.columns[*k] {
                    let e = acc.entry(*i).or_insert_with(T::zero);
                    *e = T::mul_sub(a, b, &T::zero(), &T::zero()).expect("small entries") + e.clone();
                }
            }
            if acc.values().any(|v| !v.is_zero()) {
                return false;
            }
        }
        true
    }

    /// Exact rank, or `None` if an intermediate entry overflowed `T`.
    ///
    /// Columns are reduced left to right; a column's pivot is its lowest nonzero row index and
    /// is eliminated against the earlier column owning that pivot. The result is deterministic.
    pub fn try_rank(&self) -> Option<usize> {
        let mut pivot_owner: HashMap<usize, usize> = HashMap::new();
        let mut reduced: Vec<SparseColumn<T>> = Vec::new();
        for col in &self.columns {
            let mut col = col.clone();
            while let Some((row, _)) = col.first() {
                match pivot_owner.get(row) {
                    Some(&p) => {
                        col = eliminate(&col, &reduced[p])?;
                    }
                    None => {
                        pivot_owner.insert(*row, reduced.len());
                        reduced.push(col);
                        break;
                    }
                }
            }
        }
        Some(reduced.len())
    }
}

impl SparseMatrix<i64> {
    /// Rank with `i64` arithmetic, retrying with big integers on overflow.
    pub fn rank(&self) -> usize {
        self.try_rank()
            .unwrap_or_else(|| self.map(|&e| BigInt::from(e)).try_rank().expect("big integers do not overflow"))
    }
}

// x <- a*x - b*y where a = y's pivot entry and b = x's entry in that row.
fn eliminate<T: ExactScalar>(x: &SparseColumn<T>, y: &SparseColumn<T>) -> Option<SparseColumn<T>> {
    let a = &y[0].1;
    let b = &x[0].1;
    let zero = T::zero();
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (row, v) = match (x.get(i), y.get(j)) {
            (Some((rx, ex)), Some((ry, ey))) if rx == ry => {
                i += 1;
                j += 1;
                (*rx, T::mul_sub(a, ex, b, ey)?)
            }
            (Some((rx, ex)), Some((ry, _))) if rx < ry => {
                i += 1;
                (*rx, T::mul_sub(a, ex, &zero, &zero)?)
            }
            (Some((rx, ex)), None) => {
                i += 1;
                (*rx, T::mul_sub(a, ex, &zero, &zero)?)
            }
            (_, Some((ry, ey))) => {
                j += 1;
                (*ry, T::mul_sub(&zero, &zero, b, ey)?)
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    let mut entries: Vec<T> = out.iter().map(|(_, e)| e.clone()).collect();
    if !entries.is_empty() {
        T::normalize(&mut entries);
        for ((_, e), n) in out.iter_mut().zip(entries) {
            *e = n;
        }
    }
    Some(out)
}
