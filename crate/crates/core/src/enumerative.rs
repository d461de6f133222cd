//! Permutation statistics and the enumerative sides of the Möbius identity
//! for the Segre square of the Boolean lattice.
//!
//! Subsets `J ⊆ [n-1]` of descent positions are bit masks: bit `t - 1` set
//! means position `t` belongs to `J`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::constructions;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerativeError {
    #[error("entries must be pairwise distinct")]
    RepeatedEntry,
    #[error("n = {n} outside the supported range 1..={max}")]
    OutOfRange { n: usize, max: usize },
}

/// Largest `n` for the brute-force pair counts.
pub const MAX_PAIR_N: usize = 7;
/// Largest `n` for which derangements are enumerated directly.
pub const MAX_BRUTE_DERANGEMENT_N: usize = 9;

fn check_range(n: usize, max: usize) -> Result<(), EnumerativeError> {
    if n == 0 || n > max {
        Err(EnumerativeError::OutOfRange { n, max })
    } else {
        Ok(())
    }
}

/// Positions `t` (1-based) with `a_t > a_{t+1}`.
pub fn descent_set(word: &[u8]) -> Result<Vec<usize>, EnumerativeError> {
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(EnumerativeError::RepeatedEntry);
    }
    Ok((1..word.len()).filter(|&t| word[t - 1] > word[t]).collect())
}

pub(crate) fn descent_count(word: &[u8]) -> usize {
    word.windows(2).filter(|w| w[0] > w[1]).count()
}

fn descent_mask(word: &[u8]) -> u32 {
    word.windows(2).enumerate().fold(0, |m, (t, w)| if w[0] > w[1] { m | 1 << t } else { m })
}

fn ascent_mask(word: &[u8]) -> u32 {
    word.windows(2).enumerate().fold(0, |m, (t, w)| if w[0] < w[1] { m | 1 << t } else { m })
}

/// Rearranges `p` into the next permutation in lexicographic order.
/// Returns `false` after the last one.
pub fn next_permutation(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// All permutations of `[n]` as words, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut p: Vec<u8> = (1..=n as u8).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

/// Derangement numbers by the recurrence `D_n = (n-1)(D_{n-1} + D_{n-2})`.
pub fn derangements_recurrence(n: usize) -> u128 {
    let (mut a, mut b) = (1u128, 0u128); // D_0, D_1
    if n == 0 {
        return a;
    }
    for k in 2..=n {
        let next = (k as u128 - 1) * (a + b);
        a = b;
        b = next;
    }
    b
}

/// Number of fixed-point-free permutations of `[n]`.
///
/// Counted by enumeration for `n <= 9` and checked against the recurrence;
/// larger `n` use the recurrence alone (exact up to `n = 34`).
pub fn derangements(n: usize) -> Result<u128, EnumerativeError> {
    check_range(n, 34)?;
    let by_recurrence = derangements_recurrence(n);
    if n <= MAX_BRUTE_DERANGEMENT_N {
        let mut p: Vec<u8> = (1..=n as u8).collect();
        let mut count = 0u128;
        loop {
            if p.iter().enumerate().all(|(i, &v)| v as usize != i + 1) {
                count += 1;
            }
            if !next_permutation(&mut p) {
                break;
            }
        }
        assert_eq!(count, by_recurrence, "derangement enumeration disagrees with the recurrence");
    }
    Ok(by_recurrence)
}

/// Number of pairs `(σ, τ)` of permutations of `[n]` with no common ascent,
/// by brute force over all pairs.
pub fn no_common_ascent_pairs(n: usize) -> Result<u64, EnumerativeError> {
    check_range(n, MAX_PAIR_N)?;
    let asc: Vec<u32> = permutations(n).iter().map(|p| ascent_mask(p)).collect();
    let mut count = 0u64;
    for &a in &asc {
        count += asc.iter().filter(|&&b| a & b == 0).count() as u64;
    }
    Ok(count)
}

/// Flag `α` and `β` invariants of a poset indexed by rank subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
    pub n: usize,
    /// `alpha[J]` for every mask `J ⊆ [n-1]`.
    pub alpha: Vec<u64>,
    pub beta: Vec<u64>,
}

impl FlagVector {
    /// `Σ_J α_J β_J`.
    pub fn alpha_beta_sum(&self) -> u64 {
        self.alpha.iter().zip(&self.beta).map(|(a, b)| a * b).sum()
    }

    /// Checks `β_J = Σ_{T ⊆ J} (-1)^{|J∖T|} α_T` and `α_J >= β_J` for all `J`.
    pub fn inclusion_exclusion_holds(&self) -> bool {
        (0..self.alpha.len()).all(|j| {
            let mut s: i128 = 0;
            let mut t = j;
            loop {
                let sign = if (j & !t).count_ones() % 2 == 0 { 1 } else { -1 };
                s += sign * self.alpha[t] as i128;
                if t == 0 {
                    break;
                }
                t = (t - 1) & j;
            }
            s == self.beta[j] as i128 && self.alpha[j] >= self.beta[j]
        })
    }
}

/// Flag vector of `B_n`: maximal chains are permutations (the label of a
/// cover `A ⊂ B` is the element of `B - A`), `β_J` counts chains with
/// descent set `J` and `α_J` those with descent set inside `J`.
pub fn flag_vector_boolean(n: usize) -> Result<FlagVector, EnumerativeError> {
    check_range(n, 10)?;
    let size = 1usize << (n - 1);
    let mut beta = vec![0u64; size];
    for p in permutations(n) {
        beta[descent_mask(&p) as usize] += 1;
    }
    let alpha: Vec<u64> = (0..size)
        .map(|j| (0..size).filter(|&t| t & !j == 0).map(|t| beta[t]).sum())
        .collect();
    let fv = FlagVector { n, alpha, beta };
    assert!(fv.inclusion_exclusion_holds());
    Ok(fv)
}

/// Counts maximal chains of `M_n = B_n ∘_rk B_n` whose label sequence never
/// increases in both coordinates at the same step. The cover
/// `(A₁, B₁) ⊂ (A₂, B₂)` carries the label `(a, b)` with `a ∈ A₂ - A₁` and
/// `b ∈ B₂ - B₁`.
pub fn falling_chains_segre_square(n: usize) -> Result<u64, EnumerativeError> {
    check_range(n, 6)?;
    let m = constructions::minors(n).expect("n is in range");
    let bottom = m.index_of((0, 0)).expect("bottom exists");
    let label = |x: usize, y: usize| {
        let (a0, b0) = m.components[x];
        let (a1, b1) = m.components[y];
        ((a1 ^ a0).trailing_zeros(), (b1 ^ b0).trailing_zeros())
    };
    // Count by dynamic programming over (element, last label).
    let mut counts: BTreeMap<(usize, (u32, u32)), u64> = BTreeMap::new();
    for &y in m.poset.upper_covers(bottom) {
        *counts.entry((y, label(bottom, y))).or_default() += 1;
    }
    for _ in 1..n {
        let mut next: BTreeMap<(usize, (u32, u32)), u64> = BTreeMap::new();
        for (&(x, (la, lb)), &c) in &counts {
            for &y in m.poset.upper_covers(x) {
                let (a, b) = label(x, y);
                if !(a > la && b > lb) {
                    *next.entry((y, (a, b))).or_default() += c;
                }
            }
        }
        counts = next;
    }
    Ok(counts.values().sum())
}

/// Checks the reversal bijection between pairs with `Des σ ⊆ Des τ` and
/// pairs with no common ascent: `(σ, τ) ↦ (rev σ, rev τ̄)` where
/// `τ̄_i = n + 1 - τ_i`. Returns the number of pairs on either side when the
/// map is a bijection, `None` otherwise.
pub fn reversal_bijection(n: usize) -> Result<Option<u64>, EnumerativeError> {
    check_range(n, 6)?;
    let perms = permutations(n);
    let index: BTreeMap<Vec<u8>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let image_of = |p: &[u8], complement: bool| {
        let q: Vec<u8> = p.iter().rev().map(|&v| if complement { n as u8 + 1 - v } else { v }).collect();
        index[&q]
    };
    let des: Vec<u32> = perms.iter().map(|p| descent_mask(p)).collect();
    let asc: Vec<u32> = perms.iter().map(|p| ascent_mask(p)).collect();
    let mut hit = vec![false; perms.len() * perms.len()];
    let mut source_count = 0u64;
    for (s, ps) in perms.iter().enumerate() {
        for (t, pt) in perms.iter().enumerate() {
            if des[s] & !des[t] != 0 {
                continue;
            }
            source_count += 1;
            let (s2, t2) = (image_of(ps, false), image_of(pt, true));
            if asc[s2] & asc[t2] != 0 || hit[s2 * perms.len() + t2] {
                return Ok(None);
            }
            hit[s2 * perms.len() + t2] = true;
        }
    }
    let target_count = no_common_ascent_pairs(n)?;
    Ok((source_count == target_count).then_some(source_count))
}
