//! Finite posets stored by their cover relation.
//!
//! A [`Poset`] keeps the cover relation (the transitive reduction of the
//! order) together with the memoized strict order as bit sets, so order
//! queries are constant time and constructions can work with either view.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;

/// Default element-count limit for [`Poset::isomorphism`].
pub const DEFAULT_ISOMORPHISM_CUTOFF: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("relation contains a cycle through `{0}`")]
    Cycle(String),
    #[error("pair references unknown label `{0}`")]
    UnknownLabel(String),
    #[error("element index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("`{lower}` is not below `{upper}`")]
    NotBelow { lower: String, upper: String },
    #[error("poset is not pure: maximal chains of lengths {short} and {long}")]
    Impure { short: usize, long: usize },
    #[error("poset is not bounded")]
    NotBounded,
    #[error("isomorphism search aborted: {size} elements exceed the cutoff {cutoff}")]
    SizeCutoff { size: usize, cutoff: usize },
    #[error("map has {got} values for a poset with {expected} elements")]
    MapLength { expected: usize, got: usize },
    #[error("map is not order-preserving on `{lower}` < `{upper}`")]
    NotOrderPreserving { lower: String, upper: String },
    #[error("map value {0} is not an element of the target poset")]
    ValueOutOfRange(usize),
}

/// A finite partially ordered set.
///
/// Elements are the indices `0..len()`; each carries an opaque string label.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    above: Vec<BitSet>,
    below: Vec<BitSet>,
    linear_extension: Vec<usize>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.upper_covers == other.upper_covers
    }
}

impl Eq for Poset {}

/// Ranks of a pure poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankInfo {
    rank: Vec<usize>,
    top_rank: Option<usize>,
}

impl RankInfo {
    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Common length of all maximal chains; `None` for the empty poset.
    pub fn top_rank(&self) -> Option<usize> {
        self.top_rank
    }
}

/// Two maximal chains of different lengths, bottom to top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImpurityWitness {
    pub short_chain: Vec<usize>,
    pub long_chain: Vec<usize>,
}

impl ImpurityWitness {
    pub fn to_error(&self) -> PosetError {
        PosetError::Impure {
            short: self.short_chain.len() - 1,
            long: self.long_chain.len() - 1,
        }
    }
}

impl Poset {
    /// Builds a poset from labels and order pairs given by index.
    ///
    /// Redundant pairs are allowed; the stored covers are the transitive
    /// reduction of the relation the pairs generate.
    pub fn new(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, PosetError> {
        let n = labels.len();
        {
            let mut seen = BTreeMap::new();
            for (i, l) in labels.iter().enumerate() {
                if seen.insert(l.as_str(), i).is_some() {
                    return Err(PosetError::DuplicateLabel(l.clone()));
                }
            }
        }
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in pairs {
            if a >= n {
                return Err(PosetError::IndexOutOfRange(a));
            }
            if b >= n {
                return Err(PosetError::IndexOutOfRange(b));
            }
            if a == b {
                return Err(PosetError::Cycle(labels[a].clone()));
            }
            succ[a].push(b);
        }
        for s in succ.iter_mut() {
            s.sort_unstable();
            s.dedup();
        }
        // Kahn's algorithm; leftover elements lie on a cycle.
        let mut indeg = vec![0usize; n];
        for s in &succ {
            for &b in s {
                indeg[b] += 1;
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &succ[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if order.len() < n {
            let culprit = (0..n).find(|&i| indeg[i] > 0).unwrap_or(0);
            return Err(PosetError::Cycle(labels[culprit].clone()));
        }
        let mut above = vec![BitSet::new(n); n];
        for &x in order.iter().rev() {
            let mut acc = BitSet::new(n);
            for &s in &succ[x] {
                acc.insert(s);
                acc.union_with(&above[s]);
            }
            above[x] = acc;
        }
        let mut upper_covers = Vec::with_capacity(n);
        for x in 0..n {
            let mut covers = above[x].clone();
            for &s in &succ[x] {
                covers.difference_with(&above[s]);
            }
            upper_covers.push(covers.iter().collect());
        }
        Ok(Self::assemble(labels, upper_covers, above, Some(order)))
    }

    /// Builds a poset from labels and order pairs given by label.
    pub fn from_label_pairs<S: AsRef<str>>(
        labels: Vec<String>,
        pairs: &[(S, S)],
    ) -> Result<Self, PosetError> {
        let index: BTreeMap<&str, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| PosetError::UnknownLabel(s.to_string()))
        };
        let mut idx_pairs = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            idx_pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Poset::new(labels, &idx_pairs)
    }

    /// Builds a poset from a strict-order predicate that is known to be a
    /// partial order (used by the constructions).
    pub(crate) fn from_strict_order(labels: Vec<String>, lt: impl Fn(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let mut above = vec![BitSet::new(n); n];
        for (x, row) in above.iter_mut().enumerate() {
            for y in 0..n {
                if x != y && lt(x, y) {
                    row.insert(y);
                }
            }
        }
        Self::from_above_sets(labels, above)
    }

    /// `above[x]` must be the transitively closed strict up-set of `x`.
    pub(crate) fn from_above_sets(labels: Vec<String>, above: Vec<BitSet>) -> Self {
        let n = labels.len();
        let mut upper_covers = Vec::with_capacity(n);
        for x in 0..n {
            let mut covers = above[x].clone();
            for z in above[x].iter() {
                if covers.contains(z) {
                    covers.difference_with(&above[z]);
                }
            }
            upper_covers.push(covers.iter().collect());
        }
        Self::assemble(labels, upper_covers, above, None)
    }

    fn assemble(
        labels: Vec<String>,
        upper_covers: Vec<Vec<usize>>,
        above: Vec<BitSet>,
        order: Option<Vec<usize>>,
    ) -> Self {
        let n = labels.len();
        let mut below = vec![BitSet::new(n); n];
        let mut lower_covers = vec![Vec::new(); n];
        for x in 0..n {
            for y in above[x].iter() {
                below[y].insert(x);
            }
            for &y in &upper_covers[x] {
                lower_covers[y].push(x);
            }
        }
        let linear_extension = order.unwrap_or_else(|| {
            let mut idx: Vec<usize> = (0..n).collect();
            idx.sort_by_key(|&x| (below[x].count(), x));
            idx
        });
        let p = Poset { labels, upper_covers, lower_covers, above, below, linear_extension };
        debug_assert!(p.covers_are_reduced());
        p
    }

    fn covers_are_reduced(&self) -> bool {
        (0..self.len()).all(|x| {
            self.upper_covers[x].iter().all(|&y| {
                self.above[x].contains(y) && !self.above[x].iter().any(|z| self.above[z].contains(y))
            })
        })
    }

    pub fn empty() -> Self {
        Poset::new(Vec::new(), &[]).expect("empty poset is valid")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    /// Strict up-set of `x`.
    pub fn above(&self, x: usize) -> &BitSet {
        &self.above[x]
    }

    /// Strict down-set of `x`.
    pub fn below(&self, x: usize) -> &BitSet {
        &self.below[x]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    pub fn covers(&self, lower: usize, upper: usize) -> bool {
        self.upper_covers[lower].binary_search(&upper).is_ok()
    }

    /// All cover pairs, sorted by (lower, upper).
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, ups) in self.upper_covers.iter().enumerate() {
            out.extend(ups.iter().map(|&y| (x, y)));
        }
        out
    }

    pub fn cover_count(&self) -> usize {
        self.upper_covers.iter().map(Vec::len).sum()
    }

    /// Elements in an order compatible with the poset (smaller first).
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear_extension
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower_covers[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.upper_covers[x].is_empty()).collect()
    }

    pub fn minimum(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    pub fn maximum(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    fn check_index(&self, x: usize) -> Result<(), PosetError> {
        if x < self.len() {
            Ok(())
        } else {
            Err(PosetError::IndexOutOfRange(x))
        }
    }

    fn check_le(&self, x: usize, y: usize) -> Result<(), PosetError> {
        self.check_index(x)?;
        self.check_index(y)?;
        if self.le(x, y) {
            Ok(())
        } else {
            Err(PosetError::NotBelow { lower: self.labels[x].clone(), upper: self.labels[y].clone() })
        }
    }

    /// Ranks if the poset is pure, otherwise two maximal chains of different
    /// lengths.
    pub fn rank_info(&self) -> Result<RankInfo, ImpurityWitness> {
        let n = self.len();
        if n == 0 {
            return Ok(RankInfo { rank: Vec::new(), top_rank: None });
        }
        // Shortest and longest saturated chains from a minimal element.
        let mut lo = vec![0usize; n];
        let mut hi = vec![0usize; n];
        let mut lo_pred = vec![usize::MAX; n];
        let mut hi_pred = vec![usize::MAX; n];
        for &x in &self.linear_extension {
            for &w in &self.lower_covers[x] {
                if lo_pred[x] == usize::MAX || lo[w] + 1 < lo[x] {
                    lo[x] = lo[w] + 1;
                    lo_pred[x] = w;
                }
                if hi_pred[x] == usize::MAX || hi[w] + 1 > hi[x] {
                    hi[x] = hi[w] + 1;
                    hi_pred[x] = w;
                }
            }
        }
        let trace = |mut x: usize, pred: &[usize]| {
            let mut chain = vec![x];
            while pred[x] != usize::MAX {
                x = pred[x];
                chain.push(x);
            }
            chain.reverse();
            chain
        };
        let maxima = self.maximal_elements();
        for &m in &maxima {
            if lo[m] != hi[m] {
                return Err(ImpurityWitness { short_chain: trace(m, &lo_pred), long_chain: trace(m, &hi_pred) });
            }
        }
        let short = maxima.iter().copied().min_by_key(|&m| (lo[m], m)).expect("nonempty");
        let long = maxima.iter().copied().max_by_key(|&m| (hi[m], usize::MAX - m)).expect("nonempty");
        if lo[short] != hi[long] {
            return Err(ImpurityWitness { short_chain: trace(short, &lo_pred), long_chain: trace(long, &hi_pred) });
        }
        Ok(RankInfo { top_rank: Some(hi[long]), rank: hi })
    }

    pub fn is_pure(&self) -> bool {
        self.rank_info().is_ok()
    }

    /// Ranks of a pure poset, with impurity turned into an error.
    pub fn ranks(&self) -> Result<RankInfo, PosetError> {
        self.rank_info().map_err(|w| w.to_error())
    }

    /// Induced subposet on `keep`, in the given order.
    pub fn induced(&self, keep: &[usize]) -> Poset {
        let m = keep.len();
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &x) in keep.iter().enumerate() {
            pos[x] = i;
        }
        let mut above = vec![BitSet::new(m); m];
        for (i, &x) in keep.iter().enumerate() {
            for y in self.above[x].iter() {
                if pos[y] != usize::MAX {
                    above[i].insert(pos[y]);
                }
            }
        }
        let labels = keep.iter().map(|&x| self.labels[x].clone()).collect();
        Poset::from_above_sets(labels, above)
    }

    /// Elements strictly between `x` and `y`, ascending by index.
    pub fn open_interval_elements(&self, x: usize, y: usize) -> Result<Vec<usize>, PosetError> {
        self.check_le(x, y)?;
        if x == y {
            return Ok(Vec::new());
        }
        Ok(self.above[x].iter().filter(|&z| self.below[y].contains(z)).collect())
    }

    /// The open interval `(x, y)`; empty when `y` covers `x` or `x = y`.
    pub fn open_interval(&self, x: usize, y: usize) -> Result<Poset, PosetError> {
        let keep = self.open_interval_elements(x, y)?;
        Ok(self.induced(&keep))
    }

    /// The closed interval `[x, y]`.
    pub fn closed_interval(&self, x: usize, y: usize) -> Result<Poset, PosetError> {
        let mut keep = self.open_interval_elements(x, y)?;
        keep.push(x);
        if y != x {
            keep.push(y);
        }
        keep.sort_unstable();
        Ok(self.induced(&keep))
    }

    /// Principal order ideal `{z : z <= x}`.
    pub fn lower_set(&self, x: usize) -> Poset {
        let mut keep: Vec<usize> = self.below[x].iter().collect();
        keep.push(x);
        keep.sort_unstable();
        self.induced(&keep)
    }

    /// Adds a fresh bottom and a fresh top, even if the poset is already
    /// bounded. The bottom gets index `len()` and the top `len() + 1`.
    pub fn augment(&self) -> Poset {
        let n = self.len();
        let fresh = |base: &str| {
            let mut l = String::from(base);
            while self.labels.contains(&l) {
                l.push('\'');
            }
            l
        };
        let mut labels = self.labels.clone();
        labels.push(fresh("^0"));
        labels.push(fresh("^1"));
        let mut above = Vec::with_capacity(n + 2);
        for x in 0..n {
            let mut row = BitSet::new(n + 2);
            for y in self.above[x].iter() {
                row.insert(y);
            }
            row.insert(n + 1);
            above.push(row);
        }
        let mut bottom = BitSet::new(n + 2);
        for y in 0..n {
            bottom.insert(y);
        }
        bottom.insert(n + 1);
        above.push(bottom);
        above.push(BitSet::new(n + 2));
        let mut upper_covers: Vec<Vec<usize>> = self.upper_covers.clone();
        for x in 0..n {
            if upper_covers[x].is_empty() {
                upper_covers[x].push(n + 1);
            }
        }
        let mut bottom_covers = self.minimal_elements();
        if n == 0 {
            bottom_covers.push(1);
        }
        upper_covers.push(bottom_covers);
        upper_covers.push(Vec::new());
        let mut order = Vec::with_capacity(n + 2);
        order.push(n);
        order.extend_from_slice(&self.linear_extension);
        order.push(n + 1);
        Self::assemble(labels, upper_covers, above, Some(order))
    }

    /// Same elements, reversed order.
    pub fn dual(&self) -> Poset {
        let mut order = self.linear_extension.clone();
        order.reverse();
        Poset {
            labels: self.labels.clone(),
            upper_covers: self.lower_covers.iter().map(|v| sorted(v.clone())).collect(),
            lower_covers: self.upper_covers.clone(),
            above: self.below.clone(),
            below: self.above.clone(),
            linear_extension: order,
        }
    }

    /// Möbius function `μ(x, y)`.
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64, PosetError> {
        self.check_le(x, y)?;
        if x == y {
            return Ok(1);
        }
        let mut mu = vec![0i64; self.len()];
        mu[x] = 1;
        for &z in &self.linear_extension {
            if !(self.lt(x, z) && self.le(z, y)) {
                continue;
            }
            let mut s = mu[x];
            for w in self.below[z].iter() {
                if self.lt(x, w) {
                    s = s.checked_add(mu[w]).expect("Möbius value overflows i64");
                }
            }
            mu[z] = -s;
        }
        Ok(mu[y])
    }

    /// `μ(0̂, 1̂)` of a bounded poset.
    pub fn mobius_bounded(&self) -> Result<i64, PosetError> {
        match (self.minimum(), self.maximum()) {
            (Some(b), Some(t)) if self.le(b, t) => self.mobius(b, t),
            _ => Err(PosetError::NotBounded),
        }
    }

    /// Refined element colors, comparable across posets.
    fn refined_colors(&self, rounds: usize) -> Vec<u64> {
        let n = self.len();
        let mut height = vec![0u64; n];
        for &x in &self.linear_extension {
            for &w in &self.lower_covers[x] {
                height[x] = height[x].max(height[w] + 1);
            }
        }
        let mut depth = vec![0u64; n];
        for &x in self.linear_extension.iter().rev() {
            for &w in &self.upper_covers[x] {
                depth[x] = depth[x].max(depth[w] + 1);
            }
        }
        let mut color: Vec<u64> = (0..n)
            .map(|x| {
                let mut h = mix(height[x], depth[x]);
                h = mix(h, self.lower_covers[x].len() as u64);
                h = mix(h, self.upper_covers[x].len() as u64);
                h = mix(h, self.below[x].count() as u64);
                mix(h, self.above[x].count() as u64)
            })
            .collect();
        for _ in 0..rounds {
            let next: Vec<u64> = (0..n)
                .map(|x| {
                    let mut ups: Vec<u64> = self.upper_covers[x].iter().map(|&y| color[y]).collect();
                    let mut downs: Vec<u64> = self.lower_covers[x].iter().map(|&y| color[y]).collect();
                    ups.sort_unstable();
                    downs.sort_unstable();
                    let mut h = mix(color[x], 0x5eed);
                    for u in ups {
                        h = mix(h, u);
                    }
                    h = mix(h, 0xd0);
                    for d in downs {
                        h = mix(h, d);
                    }
                    h
                })
                .collect();
            color = next;
        }
        color
    }

    /// Isomorphism-invariant fingerprint; equal for isomorphic posets.
    pub fn invariant_hash(&self) -> u64 {
        let mut colors = self.refined_colors(3);
        colors.sort_unstable();
        colors.into_iter().fold(mix(self.len() as u64, self.cover_count() as u64), mix)
    }

    /// Searches for an order-isomorphism `self → other`.
    ///
    /// Returns the witness bijection (`witness[x]` is the image of `x`), or
    /// `None` when the posets are not isomorphic.
    pub fn isomorphism(&self, other: &Poset, cutoff: usize) -> Result<Option<Vec<usize>>, PosetError> {
        let n = self.len();
        for size in [n, other.len()] {
            if size > cutoff {
                return Err(PosetError::SizeCutoff { size, cutoff });
            }
        }
        if n != other.len() || self.cover_count() != other.cover_count() {
            return Ok(None);
        }
        if n == 0 {
            return Ok(Some(Vec::new()));
        }
        let rounds = 2 + (usize::BITS - n.leading_zeros()) as usize;
        let ca = self.refined_colors(rounds);
        let cb = other.refined_colors(rounds);
        let mut ha = ca.clone();
        let mut hb = cb.clone();
        ha.sort_unstable();
        hb.sort_unstable();
        if ha != hb {
            return Ok(None);
        }
        let mut class_size: BTreeMap<u64, usize> = BTreeMap::new();
        for &c in &ca {
            *class_size.entry(c).or_default() += 1;
        }
        // Visit order: grow along the Hasse diagram, smallest classes first.
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        let mut frontier_score = vec![0usize; n];
        for _ in 0..n {
            let next = (0..n)
                .filter(|&x| !placed[x])
                .min_by_key(|&x| (usize::MAX - frontier_score[x], class_size[&ca[x]], x))
                .expect("unplaced element exists");
            placed[next] = true;
            order.push(next);
            for &y in self.upper_covers[next].iter().chain(&self.lower_covers[next]) {
                frontier_score[y] += 1;
            }
        }
        let mut candidates: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (y, &c) in cb.iter().enumerate() {
            candidates.entry(c).or_default().push(y);
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let ok = self.extend_isomorphism(other, &order, 0, &ca, &candidates, &mut map, &mut used);
        Ok(if ok { Some(map) } else { None })
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_isomorphism(
        &self,
        other: &Poset,
        order: &[usize],
        depth: usize,
        colors: &[u64],
        candidates: &BTreeMap<u64, Vec<usize>>,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        for &y in &candidates[&colors[x]] {
            if used[y] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| {
                let fu = map[u];
                self.lt(u, x) == other.lt(fu, y) && self.lt(x, u) == other.lt(y, fu)
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if self.extend_isomorphism(other, order, depth + 1, colors, candidates, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }

    /// True iff an order-isomorphism exists (default size cutoff).
    pub fn is_isomorphic(&self, other: &Poset) -> Result<bool, PosetError> {
        Ok(self.isomorphism(other, DEFAULT_ISOMORPHISM_CUTOFF)?.is_some())
    }

    /// Checks that `map` is a bijection `self → other` preserving and
    /// reflecting the order.
    pub fn is_order_isomorphism(&self, other: &Poset, map: &[usize]) -> bool {
        let n = self.len();
        if n != other.len() || map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &y in map {
            if y >= n || hit[y] {
                return false;
            }
            hit[y] = true;
        }
        (0..n).all(|x| (0..n).all(|y| self.lt(x, y) == other.lt(map[x], map[y])))
    }

    /// Label-based description, handy in reports.
    pub fn describe(&self, x: usize) -> String {
        format!("{}#{}", self.labels[x], x)
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// 64-bit mixing for deterministic hashing without `std`.
pub(crate) fn mix(a: u64, b: u64) -> u64 {
    let mut z = a.rotate_left(23) ^ b.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Target of a [`PosetMap`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Codomain {
    /// The chain of natural numbers.
    Naturals,
    Poset(Poset),
}

/// A validated order-preserving map out of a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetMap {
    codomain: Codomain,
    values: Vec<usize>,
    strict: bool,
}

impl PosetMap {
    /// Map into `ℕ`; `values[x]` is the image of `x`.
    pub fn to_naturals(source: &Poset, values: Vec<usize>) -> Result<Self, PosetError> {
        Self::validate(source, Codomain::Naturals, values, |a, b| a <= b, |a, b| a < b)
    }

    /// Map into another poset; `values[x]` is an element index of `target`.
    pub fn to_poset(source: &Poset, target: &Poset, values: Vec<usize>) -> Result<Self, PosetError> {
        if let Some(&v) = values.iter().find(|&&v| v >= target.len()) {
            return Err(PosetError::ValueOutOfRange(v));
        }
        Self::validate(
            source,
            Codomain::Poset(target.clone()),
            values,
            |a, b| target.le(a, b),
            |a, b| target.lt(a, b),
        )
    }

    /// The rank function of a pure poset as a map into `ℕ`.
    pub fn rank(source: &Poset) -> Result<Self, PosetError> {
        let info = source.ranks()?;
        Self::to_naturals(source, info.rank)
    }

    /// Constant map into `ℕ`.
    pub fn constant(source: &Poset, value: usize) -> Self {
        Self::to_naturals(source, vec![value; source.len()]).expect("constant maps preserve order")
    }

    fn validate(
        source: &Poset,
        codomain: Codomain,
        values: Vec<usize>,
        le: impl Fn(usize, usize) -> bool,
        lt: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        if values.len() != source.len() {
            return Err(PosetError::MapLength { expected: source.len(), got: values.len() });
        }
        // Checking covers is enough: both conditions are transitive.
        let mut strict = true;
        for (x, y) in source.cover_pairs() {
            if !le(values[x], values[y]) {
                return Err(PosetError::NotOrderPreserving {
                    lower: source.label(x).to_string(),
                    upper: source.label(y).to_string(),
                });
            }
            strict &= lt(values[x], values[y]);
        }
        Ok(PosetMap { codomain, values, strict })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn value(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn codomain(&self) -> &Codomain {
        &self.codomain
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn chain3() -> Poset {
        Poset::from_label_pairs(labels(&["a", "b", "c"]), &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn build_chain_and_reduce_redundant_pairs() {
        let p = Poset::from_label_pairs(labels(&["a", "b", "c"]), &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(p.cover_pairs(), vec![(0, 1), (1, 2)]);
        assert!(p.lt(0, 2));
        assert_eq!(p, chain3());
    }

    #[test]
    fn build_errors() {
        let cyc = Poset::from_label_pairs(labels(&["a", "b"]), &[("a", "b"), ("b", "a")]);
        assert!(matches!(cyc, Err(PosetError::Cycle(_))));
        let dup = Poset::from_label_pairs::<&str>(labels(&["a", "a"]), &[]);
        assert_eq!(dup, Err(PosetError::DuplicateLabel("a".into())));
        let unknown = Poset::from_label_pairs(labels(&["a"]), &[("a", "z")]);
        assert_eq!(unknown, Err(PosetError::UnknownLabel("z".into())));
    }

    #[test]
    fn ranks_of_chain() {
        let info = chain3().rank_info().unwrap();
        assert_eq!(info.ranks(), &[0, 1, 2]);
        assert_eq!(info.top_rank(), Some(2));
    }

    #[test]
    fn impure_poset_reports_chains() {
        let p = Poset::from_label_pairs(
            labels(&["a", "b", "c", "x", "y"]),
            &[("a", "c"), ("b", "c"), ("a", "x"), ("x", "y")],
        )
        .unwrap();
        let w = p.rank_info().unwrap_err();
        assert_eq!(w.short_chain.len(), 2);
        assert_eq!(w.long_chain.len(), 3);
        assert_eq!(w.to_error(), PosetError::Impure { short: 1, long: 2 });
    }

    #[test]
    fn empty_poset_is_pure_without_top_rank() {
        let info = Poset::empty().rank_info().unwrap();
        assert_eq!(info.top_rank(), None);
    }

    #[test]
    fn intervals() {
        let p = chain3();
        assert!(p.open_interval(0, 1).unwrap().is_empty());
        assert_eq!(p.open_interval(0, 2).unwrap().labels(), &["b".to_string()]);
        assert_eq!(p.closed_interval(0, 2).unwrap().len(), 3);
        assert!(matches!(p.open_interval(2, 0), Err(PosetError::NotBelow { .. })));
    }

    #[test]
    fn augment_small_cases() {
        let anti = Poset::new(labels(&["a", "b"]), &[]).unwrap();
        let d = anti.augment();
        assert_eq!(d.len(), 4);
        assert_eq!(d.cover_count(), 4);
        let e = Poset::empty().augment();
        assert_eq!(e.cover_pairs(), vec![(0, 1)]);
        let one = Poset::new(labels(&["a"]), &[]).unwrap().augment();
        assert_eq!(one.rank_info().unwrap().top_rank(), Some(2));
        // fresh labels never collide
        let tricky = Poset::new(labels(&["^0"]), &[]).unwrap().augment();
        assert_eq!(tricky.label(1), "^0'");
    }

    #[test]
    fn mobius_of_cover_and_chain() {
        let p = chain3();
        assert_eq!(p.mobius(0, 1).unwrap(), -1);
        assert_eq!(p.mobius(0, 2).unwrap(), 0);
        assert_eq!(p.mobius(1, 1).unwrap(), 1);
        assert!(p.mobius(2, 0).is_err());
    }

    #[test]
    fn dual_of_v_is_lambda() {
        let v = Poset::from_label_pairs(labels(&["b", "t1", "t2"]), &[("b", "t1"), ("b", "t2")]).unwrap();
        let d = v.dual();
        assert_eq!(d.minimal_elements(), vec![1, 2]);
        assert_eq!(d.maximal_elements(), vec![0]);
        assert_eq!(d.dual(), v);
    }

    #[test]
    fn isomorphism_basics() {
        let two_chain = Poset::from_label_pairs(labels(&["a", "b"]), &[("a", "b")]).unwrap();
        let anti = Poset::new(labels(&["a", "b"]), &[]).unwrap();
        assert!(!two_chain.is_isomorphic(&anti).unwrap());
        let diamond = anti.augment();
        let witness = diamond.isomorphism(&diamond.dual(), 512).unwrap().unwrap();
        assert!(diamond.is_order_isomorphism(&diamond.dual(), &witness));
        assert_eq!(
            diamond.isomorphism(&diamond, 2),
            Err(PosetError::SizeCutoff { size: 4, cutoff: 2 })
        );
    }

    #[test]
    fn poset_maps() {
        let p = chain3();
        let rk = PosetMap::rank(&p).unwrap();
        assert!(rk.is_strict());
        let c = PosetMap::constant(&p, 0);
        assert!(!c.is_strict());
        assert!(matches!(
            PosetMap::to_naturals(&p, vec![2, 1, 0]),
            Err(PosetError::NotOrderPreserving { .. })
        ));
        assert!(matches!(PosetMap::to_naturals(&p, vec![0]), Err(PosetError::MapLength { .. })));
        let target = chain3();
        let m = PosetMap::to_poset(&p, &target, vec![0, 0, 2]).unwrap();
        assert!(!m.is_strict());
    }
}
