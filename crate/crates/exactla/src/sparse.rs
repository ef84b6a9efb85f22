use std::collections::BTreeMap;

use crate::{FpMatrix, LinAlgError, PrimeField};

/// Integer matrix stored as row-major sorted triplets without zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    /// Rejects duplicates and out-of-range positions; zero values are dropped.
    pub fn new(rows: usize, cols: usize, mut entries: Vec<(usize, usize, i64)>) -> Result<Self, LinAlgError> {
        for &(r, c, _) in &entries {
            if r >= rows || c >= cols {
                return Err(LinAlgError::OutOfRange {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
        }
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        for w in entries.windows(2) {
            if (w[0].0, w[0].1) == (w[1].0, w[1].1) {
                return Err(LinAlgError::DuplicateEntry(w[0].0, w[0].1));
            }
        }
        entries.retain(|e| e.2 != 0);
        Ok(SparseMatrix { rows, cols, entries })
    }

    /// Sums repeated positions, as when a matrix is assembled term by term.
    pub fn from_accumulated<I>(rows: usize, cols: usize, terms: I) -> Result<Self, LinAlgError>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (r, c, v) in terms {
            if r >= rows || c >= cols {
                return Err(LinAlgError::OutOfRange {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
            let e = acc.entry((r, c)).or_insert(0);
            *e = e.checked_add(v).ok_or(LinAlgError::Overflow)?;
        }
        let entries = acc
            .into_iter()
            .filter(|&(_, v)| v != 0)
            .map(|((r, c), v)| (r, c, v))
            .collect();
        Ok(SparseMatrix { rows, cols, entries })
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense input");
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    entries.push((i, j, v));
                }
            }
        }
        SparseMatrix {
            rows: nrows,
            cols: ncols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| (i, i, 1)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries
            .binary_search_by_key(&(row, col), |&(r, c, _)| (r, c))
            .map_or(0, |k| self.entries[k].2)
    }

    pub fn transpose(&self) -> Self {
        let mut entries: Vec<_> = self.entries.iter().map(|&(r, c, v)| (c, r, v)).collect();
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        let mut entries: Vec<_> = self
            .entries
            .iter()
            .map(|&(r, c, v)| (row_perm[r], col_perm[c], v))
            .collect();
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Exact product; fails on i64 overflow.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut other_rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); other.rows];
        for &(r, c, v) in &other.entries {
            other_rows[r].push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), i128> = BTreeMap::new();
        for &(r, k, a) in &self.entries {
            for &(c, b) in &other_rows[k] {
                *acc.entry((r, c)).or_insert(0) += a as i128 * b as i128;
            }
        }
        let mut entries = Vec::with_capacity(acc.len());
        for ((r, c), v) in acc {
            if v != 0 {
                let v = i64::try_from(v).map_err(|_| LinAlgError::Overflow)?;
                entries.push((r, c, v));
            }
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn mul_vec(&self, x: &[i64]) -> Result<Vec<i64>, LinAlgError> {
        if x.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        let mut y = vec![0i128; self.rows];
        for &(r, c, v) in &self.entries {
            y[r] += v as i128 * x[c] as i128;
        }
        y.into_iter()
            .map(|v| i64::try_from(v).map_err(|_| LinAlgError::Overflow))
            .collect()
    }

    pub fn to_fp(&self, field: PrimeField) -> FpMatrix {
        let mut m = FpMatrix::zeros(field, self.rows, self.cols);
        for &(r, c, v) in &self.entries {
            m.set(r, c, field.reduce(v));
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            d[r][c] = v;
        }
        d
    }
}
