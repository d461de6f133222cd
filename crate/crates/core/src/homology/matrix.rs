use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Integer matrix with arbitrary-precision entries, stored by columns as
/// sorted `(row, value)` lists of the nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from dense rows; all rows must have the same length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.set_big(r, c, BigInt::from(v));
    }

    pub fn set_big(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        let col = &mut self.columns[c];
        match col.binary_search_by_key(&r, |e| e.0) {
            Ok(i) if v.is_zero() => {
                col.remove(i);
            }
            Ok(i) => col[i].1 = v,
            Err(_) if v.is_zero() => {}
            Err(i) => col.insert(i, (r, v)),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        let col = &self.columns[c];
        col.binary_search_by_key(&r, |e| e.0).map_or_else(|_| BigInt::zero(), |i| col[i].1.clone())
    }

    /// Entry as `i64`; panics if it does not fit.
    pub fn get_i64(&self, r: usize, c: usize) -> i64 {
        self.get(r, c).to_i64().expect("entry fits in i64")
    }

    /// Nonzero entries of column `c` as `(row, value)`, by row.
    pub fn column(&self, c: usize) -> &[(usize, BigInt)] {
        &self.columns[c]
    }

    pub fn nonzeros(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Row-major nonzero lists.
    pub fn row_lists(&self) -> Vec<Vec<(usize, BigInt)>> {
        let mut out = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                out[*r].push((c, v.clone()));
            }
        }
        out
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                out[*r][c] = v.to_i64().expect("entry fits in i64");
            }
        }
        out
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = IntegerMatrix::zeros(self.cols, self.rows);
        for (r, row) in self.row_lists().into_iter().enumerate() {
            t.columns[r] = row;
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for (c, col) in other.columns.iter().enumerate() {
            let mut acc: Vec<BigInt> = vec![BigInt::zero(); self.rows];
            for (k, b) in col {
                for (r, a) in &self.columns[*k] {
                    acc[*r] += a * b;
                }
            }
            out.columns[c] = acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        }
        out
    }
}
