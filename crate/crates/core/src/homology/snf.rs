//! Smith normal form over the integers.
//!
//! Unit pivots are eliminated first on a sparse row representation (this
//! removes almost everything from simplicial boundary matrices without fill
//! growth); what is left goes through dense elimination with
//! smallest-magnitude pivots, followed by a gcd/lcm pass that enforces the
//! divisibility chain.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntegerMatrix;

/// Nonzero invariant factors `d_1 | d_2 | … | d_rank` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub rows: usize,
    pub cols: usize,
    pub diagonal: Vec<BigUint>,
    pub rank: usize,
}

impl SnfDecomposition {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn divisibility_chain_holds(&self) -> bool {
        self.diagonal.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }
}

type SparseRow = Vec<(usize, BigInt)>;

/// `target -= factor * source` on sorted sparse rows.
fn axpy(target: &SparseRow, factor: &BigInt, source: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let ci = target.get(i).map_or(usize::MAX, |e| e.0);
        let cj = source.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(target[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -(factor * &source[j].1)));
            j += 1;
        } else {
            let v = &target[i].1 - factor * &source[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn is_unit(v: &BigInt) -> bool {
    v.magnitude().is_one()
}

/// Removes unit pivots; returns the number removed and the remaining rows.
fn eliminate_unit_pivots(mut rows: Vec<SparseRow>, cols: usize) -> (usize, Vec<SparseRow>) {
    let mut alive = vec![true; rows.len()];
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); cols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c].push(r);
        }
    }
    let mut removed = 0;
    loop {
        // Markowitz-style choice among unit entries.
        let mut best: Option<(usize, usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            if !alive[r] || row.is_empty() {
                continue;
            }
            if let Some((_, _, cost)) = best {
                if row.len() - 1 >= cost {
                    continue;
                }
            }
            for (c, v) in row {
                if !is_unit(v) {
                    continue;
                }
                let cost = (row.len() - 1) * (col_rows[*c].len().max(1) - 1);
                if best.map_or(true, |b| cost < b.2) {
                    best = Some((r, *c, cost));
                }
            }
            if best.is_some_and(|b| b.2 == 0) {
                break;
            }
        }
        let Some((r, c, _)) = best else { break };
        let pivot_row = core::mem::take(&mut rows[r]);
        let unit = pivot_row.iter().find(|e| e.0 == c).expect("pivot present").1.clone();
        alive[r] = false;
        let touched: Vec<usize> = core::mem::take(&mut col_rows[c]);
        for k in touched {
            if k == r || !alive[k] {
                continue;
            }
            let Ok(pos) = rows[k].binary_search_by_key(&c, |e| e.0) else {
                continue;
            };
            let factor = &rows[k][pos].1 * &unit;
            let before: Vec<usize> = rows[k].iter().map(|e| e.0).collect();
            rows[k] = axpy(&rows[k], &factor, &pivot_row);
            for (cc, _) in &rows[k] {
                if before.binary_search(cc).is_err() {
                    col_rows[*cc].push(k);
                }
            }
        }
        // Stale entries in col_rows are skipped lazily; drop them for the
        // columns the pivot row touched.
        for (cc, _) in &pivot_row {
            col_rows[*cc].retain(|&k| alive[k] && rows[k].binary_search_by_key(cc, |e| e.0).is_ok());
        }
        removed += 1;
    }
    let rest = rows.into_iter().zip(alive).filter(|(row, a)| *a && !row.is_empty()).map(|(row, _)| row).collect();
    (removed, rest)
}

/// Diagonalises a dense matrix; returns the absolute diagonal entries.
fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigUint> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() && best.map_or(true, |(bi, bj)| v.magnitude() < a[bi][bj].magnitude()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..n {
                    let delta = &q * &a[t][j];
                    a[i][j] -= delta;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let delta = &q * &row[t];
                    row[j] -= delta;
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                break;
            }
            // A nonzero remainder is smaller than the pivot: move it in.
            let mut best = (t, t);
            for i in t + 1..m {
                if !a[i][t].is_zero() && a[i][t].magnitude() < a[best.0][best.1].magnitude() {
                    best = (i, t);
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() && a[t][j].magnitude() < a[best.0][best.1].magnitude() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            } else if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].magnitude().clone());
    }
    diag
}

/// Smith normal form of an integer matrix (invariant factors only).
pub fn smith_normal_form(m: &IntegerMatrix) -> SnfDecomposition {
    let (units, rest) = eliminate_unit_pivots(m.row_lists(), m.cols());
    let mut used: Vec<usize> = rest.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
    used.sort_unstable();
    used.dedup();
    let dense: Vec<Vec<BigInt>> = rest
        .iter()
        .map(|row| {
            let mut d = vec![BigInt::zero(); used.len()];
            for (c, v) in row {
                d[used.binary_search(c).expect("column recorded")] = v.clone();
            }
            d
        })
        .collect();
    let mut diag: Vec<BigUint> = vec![BigUint::one(); units];
    diag.extend(dense_diagonal(dense));
    // gcd/lcm pass: afterwards d_i divides every later entry.
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            if (&diag[j] % &diag[i]).is_zero() {
                continue;
            }
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    let rank = diag.len();
    SnfDecomposition { rows: m.rows(), cols: m.cols(), diagonal: diag, rank }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_u64(s: &SnfDecomposition) -> Vec<u64> {
        s.diagonal.iter().map(|d| d.try_into().unwrap()).collect()
    }

    #[test]
    fn identity_and_diagonal_inputs() {
        let s = smith_normal_form(&IntegerMatrix::identity(3));
        assert_eq!(diag_u64(&s), vec![1, 1, 1]);
        let s = smith_normal_form(&IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 4]]));
        assert_eq!(diag_u64(&s), vec![2, 4]);
        let s = smith_normal_form(&IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(diag_u64(&s), vec![1, 6]);
        assert!(s.divisibility_chain_holds());
    }

    #[test]
    fn zero_and_rectangular() {
        let s = smith_normal_form(&IntegerMatrix::zeros(3, 2));
        assert_eq!(s.rank, 0);
        let s = smith_normal_form(&IntegerMatrix::from_rows(&[vec![2, 4, 6], vec![4, 8, 12]]));
        assert_eq!(diag_u64(&s), vec![2]);
        let s = smith_normal_form(&IntegerMatrix::from_rows(&[vec![6, 10], vec![10, 15], vec![4, 6]]));
        assert_eq!(s.rank, 2);
        assert!(s.divisibility_chain_holds());
    }

    #[test]
    fn pivot_with_remainders() {
        // gcd of all entries is 1, determinant is -2.
        let s = smith_normal_form(&IntegerMatrix::from_rows(&[vec![4, 6], vec![6, 8]]));
        assert_eq!(diag_u64(&s), vec![2, 2]);
        let s = smith_normal_form(&IntegerMatrix::from_rows(&[vec![3, 5], vec![7, 11]]));
        assert_eq!(diag_u64(&s), vec![1, 2]);
    }
}
