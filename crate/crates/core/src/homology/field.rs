//! Ranks over the rationals and over prime fields.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::matrix::IntegerMatrix;

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse.
    let (mut base, mut exp, mut acc) = (a as u128 % p as u128, p - 2, 1u128);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        exp >>= 1;
    }
    acc as u64
}

fn reduce_mod(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

/// Rank over GF(p); `p` must be prime.
pub fn rank_mod_p(m: &IntegerMatrix, p: u64) -> usize {
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for row in m.row_lists() {
        let mut v: Vec<(usize, u64)> =
            row.iter().map(|(c, x)| (*c, reduce_mod(x, p))).filter(|e| e.1 != 0).collect();
        while let Some(&(lead, a)) = v.first() {
            let Some(prow) = pivots.get(&lead) else {
                let inv = inv_mod(a, p);
                let normed = v.iter().map(|&(c, x)| (c, mulmod(x, inv))).collect();
                pivots.insert(lead, normed);
                break;
            };
            // v -= a * prow, prow is monic
            let mut out = Vec::with_capacity(v.len() + prow.len());
            let (mut i, mut j) = (0, 0);
            while i < v.len() || j < prow.len() {
                let ci = v.get(i).map_or(usize::MAX, |e| e.0);
                let cj = prow.get(j).map_or(usize::MAX, |e| e.0);
                if ci < cj {
                    out.push(v[i]);
                    i += 1;
                } else if cj < ci {
                    out.push((cj, (p - mulmod(a, prow[j].1)) % p));
                    j += 1;
                } else {
                    let x = (v[i].1 + p - mulmod(a, prow[j].1)) % p;
                    if x != 0 {
                        out.push((ci, x));
                    }
                    i += 1;
                    j += 1;
                }
            }
            v = out;
        }
    }
    pivots.len()
}

fn primitive(v: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for (_, x) in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Rank over the rationals by fraction-free row echelon form.
pub fn rank_rational(m: &IntegerMatrix) -> usize {
    let mut pivots: BTreeMap<usize, Vec<(usize, BigInt)>> = BTreeMap::new();
    for mut v in m.row_lists() {
        primitive(&mut v);
        while let Some(lead) = v.first().map(|e| e.0) {
            let Some(prow) = pivots.get(&lead) else {
                pivots.insert(lead, v);
                break;
            };
            // v <- w_lead * v - v_lead * w
            let a = prow[0].1.clone();
            let b = v[0].1.clone();
            let mut out = Vec::with_capacity(v.len() + prow.len());
            let (mut i, mut j) = (0, 0);
            while i < v.len() || j < prow.len() {
                let ci = v.get(i).map_or(usize::MAX, |e| e.0);
                let cj = prow.get(j).map_or(usize::MAX, |e| e.0);
                let x = if ci < cj {
                    i += 1;
                    &a * &v[i - 1].1
                } else if cj < ci {
                    j += 1;
                    -(&b * &prow[j - 1].1)
                } else {
                    i += 1;
                    j += 1;
                    &a * &v[i - 1].1 - &b * &prow[j - 1].1
                };
                if !x.is_zero() {
                    out.push((ci.min(cj), x));
                }
            }
            primitive(&mut out);
            v = out;
        }
    }
    pivots.len()
}

/// Determinant of a square matrix (Bareiss elimination).
pub fn determinant(m: &IntegerMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols(), "square matrix required");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn ranks_differ_by_characteristic() {
        let m = IntegerMatrix::from_rows(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 2);
    }

    #[test]
    fn dependent_rows() {
        let m = IntegerMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1], vec![1, 3, 4]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 5), 2);
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntegerMatrix::from_rows(&[vec![0, 2, 1], vec![3, 1, 4], vec![5, 9, 2]]);
        // 0*(2-36) - 2*(6-20) + 1*(27-5) = 28 + 22 = 50
        assert_eq!(determinant(&m), BigInt::from(50));
        assert_eq!(determinant(&IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]])), -BigInt::one());
    }
}
