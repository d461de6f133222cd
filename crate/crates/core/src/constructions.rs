//! Poset constructions: products, Segre and Rees products, rank selection,
//! and the named families used throughout the crate.
//!
//! Constructions that produce pairs return a [`PairedPoset`], which keeps the
//! component indices of every element next to the poset. Element labels are
//! canonical (`"(p,q)"`, `"(p,q,i)"`, `"{1,3}"`, `"132"`), so results of
//! different construction paths can be compared label by label.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::enumerative;
use crate::poset::{Codomain, Poset, PosetError, PosetMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("map must take values in the natural numbers")]
    NotNaturalValued,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("word repeats the letter {0}")]
    RepeatedLetter(u8),
}

/// A poset whose elements are pairs of elements of two factor posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedPoset {
    pub poset: Poset,
    /// `components[x] = (p, q)` for element `x`.
    pub components: Vec<(usize, usize)>,
}

impl PairedPoset {
    fn build(
        components: Vec<(usize, usize)>,
        label: impl Fn(usize, usize) -> String,
        lt: impl Fn((usize, usize), (usize, usize)) -> bool,
    ) -> Self {
        let labels = components.iter().map(|&(p, q)| label(p, q)).collect();
        let poset = Poset::from_strict_order(labels, |x, y| lt(components[x], components[y]));
        PairedPoset { poset, components }
    }

    pub fn index_of(&self, pair: (usize, usize)) -> Option<usize> {
        self.components.iter().position(|&c| c == pair)
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }
}

pub(crate) fn pair_label(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// Direct product with componentwise order.
pub fn product(p: &Poset, q: &Poset) -> PairedPoset {
    let components = (0..p.len()).flat_map(|a| (0..q.len()).map(move |b| (a, b))).collect();
    PairedPoset::build(
        components,
        |a, b| pair_label(p.label(a), q.label(b)),
        |(a, b), (c, d)| (a, b) != (c, d) && p.le(a, c) && q.le(b, d),
    )
}

fn natural_values(m: &PosetMap) -> Result<&[usize], ConstructionError> {
    match m.codomain() {
        Codomain::Naturals => Ok(m.values()),
        Codomain::Poset(_) => Err(ConstructionError::NotNaturalValued),
    }
}

/// Segre product: the pairs `(p, q)` with `f(p) = g(q)`, as an induced
/// subposet of the product.
pub fn segre(p: &Poset, f: &PosetMap, q: &Poset, g: &PosetMap) -> Result<PairedPoset, ConstructionError> {
    let fv = natural_values(f)?;
    let gv = natural_values(g)?;
    for (m, src) in [(fv, p), (gv, q)] {
        if m.len() != src.len() {
            return Err(PosetError::MapLength { expected: src.len(), got: m.len() }.into());
        }
    }
    let mut components = Vec::new();
    for a in 0..p.len() {
        for b in 0..q.len() {
            if fv[a] == gv[b] {
                components.push((a, b));
            }
        }
    }
    Ok(PairedPoset::build(
        components,
        |a, b| pair_label(p.label(a), q.label(b)),
        |(a, b), (c, d)| (a, b) != (c, d) && p.le(a, c) && q.le(b, d),
    ))
}

/// Which hypotheses of the Segre preservation theorem hold for a grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SegreHypotheses {
    pub g_strict: bool,
    pub image_in_ranks: bool,
}

impl SegreHypotheses {
    pub fn satisfied(&self) -> bool {
        self.g_strict && self.image_in_ranks
    }
}

/// `g`-weighted Segre product `segre(P, rk_P, Q, g)` with a report on the
/// preservation hypotheses; the product is built either way.
pub fn weighted_segre(
    p: &Poset,
    q: &Poset,
    g: &PosetMap,
) -> Result<(PairedPoset, SegreHypotheses), ConstructionError> {
    let rk = PosetMap::rank(p)?;
    let ranks: BTreeSet<usize> = rk.values().iter().copied().collect();
    let gv = natural_values(g)?;
    let hyp = SegreHypotheses { g_strict: g.is_strict(), image_in_ranks: gv.iter().all(|v| ranks.contains(v)) };
    Ok((segre(p, &rk, q, g)?, hyp))
}

/// Rees product on `{(p, q) : rk p >= rk q}`.
pub fn rees(p: &Poset, q: &Poset) -> Result<PairedPoset, ConstructionError> {
    let rp = p.ranks()?;
    let rq = q.ranks()?;
    let mut components = Vec::new();
    for a in 0..p.len() {
        for b in 0..q.len() {
            if rp.rank(a) >= rq.rank(b) {
                components.push((a, b));
            }
        }
    }
    Ok(PairedPoset::build(
        components,
        |a, b| pair_label(p.label(a), q.label(b)),
        |(a, b), (c, d)| {
            (a, b) != (c, d)
                && p.le(a, c)
                && q.le(b, d)
                && rp.rank(c) - rp.rank(a) >= rq.rank(d) - rq.rank(b)
        },
    ))
}

/// Elements whose rank lies in `ranks`, with their indices in `p`.
pub fn rank_select_indexed(p: &Poset, ranks: &[usize]) -> Result<(Poset, Vec<usize>), ConstructionError> {
    let info = p.ranks()?;
    let keep: Vec<usize> = (0..p.len()).filter(|&x| ranks.contains(&info.rank(x))).collect();
    Ok((p.induced(&keep), keep))
}

/// Rank-selected subposet `P_S`.
pub fn rank_select(p: &Poset, ranks: &[usize]) -> Result<Poset, ConstructionError> {
    Ok(rank_select_indexed(p, ranks)?.0)
}

/// The Rees product realised as an unweighted Segre product `P ∘ Q̃` with
/// `Q̃ = (Q × chain(n + 1))` restricted to ranks `0..=n`, `n = rk P`.
#[derive(Clone, Debug)]
pub struct ReesAsSegre {
    pub q_tilde: Poset,
    /// `(q, i)` for each element of `q_tilde`.
    pub q_tilde_components: Vec<(usize, usize)>,
    /// Elements `(p, q̃)`.
    pub segre: PairedPoset,
    /// Projection of each Segre element `(p, (q, i))` to `(p, q)`.
    pub projection: Vec<(usize, usize)>,
}

impl ReesAsSegre {
    /// Checks the projection element by element: it must be a bijection onto
    /// the Rees product that preserves and reflects the order. Returns the
    /// index map on success.
    pub fn verify_against(&self, rees: &PairedPoset) -> Option<Vec<usize>> {
        let map: Option<Vec<usize>> = self.projection.iter().map(|&pair| rees.index_of(pair)).collect();
        let map = map?;
        self.segre.poset.is_order_isomorphism(&rees.poset, &map).then_some(map)
    }
}

pub fn rees_as_segre(p: &Poset, q: &Poset) -> Result<ReesAsSegre, ConstructionError> {
    let rp = p.ranks()?;
    q.ranks()?;
    let n = rp.top_rank().unwrap_or(0);
    let qc = product(q, &chain(n + 1));
    let levels: Vec<usize> = (0..=n).collect();
    let (q_tilde, kept) = rank_select_indexed(&qc.poset, &levels)?;
    let q_tilde_components: Vec<(usize, usize)> = kept.iter().map(|&x| qc.components[x]).collect();
    let f = PosetMap::rank(p)?;
    let g = PosetMap::rank(&q_tilde)?;
    let segre = segre(p, &f, &q_tilde, &g)?;
    let projection = segre.components.iter().map(|&(a, t)| (a, q_tilde_components[t].0)).collect();
    Ok(ReesAsSegre { q_tilde, q_tilde_components, segre, projection })
}

/// Label of a subset of `[n]` given as a bit mask (bit `k` is letter `k+1`).
pub fn set_label(mask: u64) -> String {
    let items: Vec<String> = (0..64).filter(|k| mask >> k & 1 == 1).map(|k| (k + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn check_family_size(n: usize, max: usize) -> Result<(), ConstructionError> {
    if n == 0 || n > max {
        return Err(ConstructionError::InvalidParameter(format!("n = {n} must lie in 1..={max}")));
    }
    Ok(())
}

/// Boolean lattice `B_n`; element `x` is the subset with bit mask `x`.
pub fn boolean(n: usize) -> Result<Poset, ConstructionError> {
    check_family_size(n, 16)?;
    let size = 1usize << n;
    let labels = (0..size).map(|m| set_label(m as u64)).collect();
    let mut pairs = Vec::new();
    for m in 0..size {
        for k in 0..n {
            if m >> k & 1 == 0 {
                pairs.push((m, m | 1 << k));
            }
        }
    }
    Ok(Poset::new(labels, &pairs)?)
}

/// `B_n` without the empty set; element `x` is the subset with mask `x + 1`.
pub fn boolean_minus_bottom(n: usize) -> Result<Poset, ConstructionError> {
    let b = boolean(n)?;
    let keep: Vec<usize> = (1..b.len()).collect();
    Ok(b.induced(&keep))
}

/// Chain with `m` elements, ranks `0..m`. `chain(0)` is the empty poset.
pub fn chain(m: usize) -> Poset {
    let labels = (0..m).map(|i| i.to_string()).collect();
    let pairs: Vec<(usize, usize)> = (1..m).map(|i| (i - 1, i)).collect();
    Poset::new(labels, &pairs).expect("chains are valid posets")
}

/// Antichain with `m` elements.
pub fn antichain(m: usize) -> Poset {
    Poset::new((0..m).map(|i| i.to_string()).collect(), &[]).expect("antichains are valid posets")
}

/// Poset of minors `M_n = B_n ∘_rk B_n`; components are subset masks.
pub fn minors(n: usize) -> Result<PairedPoset, ConstructionError> {
    let b = boolean(n)?;
    let rk = PosetMap::rank(&b)?;
    Ok(weighted_segre(&b, &b, &rk)?.0)
}

/// Label of a word over `[n]`.
pub fn word_label(word: &[u8]) -> String {
    if word.iter().all(|&a| a <= 9) {
        word.iter().map(|a| char::from(b'0' + a)).collect()
    } else {
        let parts: Vec<String> = word.iter().map(|a| a.to_string()).collect();
        parts.join(".")
    }
}

/// Subword order: `a` is obtained from `b` by deleting letters.
pub fn is_subword(a: &[u8], b: &[u8]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// All nonempty words with distinct letters from `letters`, shortest first
/// and lexicographic within a length.
pub fn injective_words(letters: &[u8]) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..letters.len() {
        let mut next = Vec::new();
        for w in &layer {
            for &a in letters {
                if !w.contains(&a) {
                    let mut v = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
        }
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// A poset of words under subword order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordPoset {
    pub poset: Poset,
    pub words: Vec<Vec<u8>>,
}

impl WordPoset {
    fn from_words(words: Vec<Vec<u8>>) -> Self {
        let labels = words.iter().map(|w| word_label(w)).collect();
        let poset = Poset::from_strict_order(labels, |x, y| {
            words[x].len() < words[y].len() && is_subword(&words[x], &words[y])
        });
        WordPoset { poset, words }
    }
}

/// `K_n`: nonempty words of distinct letters from `[n]` under subword order.
/// The empty word is excluded.
pub fn subword(n: usize) -> Result<WordPoset, ConstructionError> {
    check_family_size(n, 8)?;
    let letters: Vec<u8> = (1..=n as u8).collect();
    Ok(WordPoset::from_words(injective_words(&letters)))
}

/// `φ(w) = (support of w, 1 + number of descents)`; the support is sorted.
pub fn phi(word: &[u8]) -> Result<(Vec<u8>, usize), ConstructionError> {
    let mut support = word.to_vec();
    support.sort_unstable();
    if let Some(w) = support.windows(2).find(|w| w[0] == w[1]) {
        return Err(ConstructionError::RepeatedLetter(w[0]));
    }
    Ok((support, enumerative::descent_count(word) + 1))
}

fn mask_of(letters: &[u8]) -> u64 {
    letters.iter().fold(0, |m, &a| m | 1 << (a - 1))
}

/// `R_n = (B_n ∖ {∅}) * chain(n)`. Components are `(mask - 1, j)` where
/// `j` is the chain element, so `(A, i)` in the usual notation is
/// `(mask(A) - 1, i - 1)`.
pub fn rees_deranged(n: usize) -> Result<PairedPoset, ConstructionError> {
    rees(&boolean_minus_bottom(n)?, &chain(n))
}

/// Order ideal `I_{A,i}` of `K_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberIdeal {
    pub ideal: WordPoset,
    /// Whether the fiber equals the ideal generated by the words with
    /// support `A` and `i - 1` descents.
    pub consistent: bool,
}

/// Lower fiber of `φ : K_n → R_n` over `(A, i)`, computed as the preimage
/// of the principal ideal below `(A, i)` in `R_n`.
pub fn fiber_ideal(n: usize, a: &[u8], i: usize) -> Result<FiberIdeal, ConstructionError> {
    check_family_size(n, 8)?;
    let mut letters = a.to_vec();
    letters.sort_unstable();
    letters.dedup();
    if letters.is_empty() || letters.len() != a.len() || letters.iter().any(|&x| x == 0 || x as usize > n) {
        return Err(ConstructionError::InvalidParameter(format!(
            "A must be a nonempty set of distinct letters from 1..={n}"
        )));
    }
    if i == 0 || i > letters.len() {
        return Err(ConstructionError::InvalidParameter(format!("i = {i} must lie in 1..={}", letters.len())));
    }
    let r = rees_deranged(n)?;
    let top = r.index_of(((mask_of(&letters) - 1) as usize, i - 1)).expect("(A, i) lies in R_n");
    let all: Vec<u8> = (1..=n as u8).collect();
    let mut fiber = Vec::new();
    for w in injective_words(&all) {
        let (support, j) = phi(&w)?;
        let image = r.index_of(((mask_of(&support) - 1) as usize, j - 1)).expect("φ lands in R_n");
        if r.poset.le(image, top) {
            fiber.push(w);
        }
    }
    let mut generated: BTreeSet<Vec<u8>> = BTreeSet::new();
    for w in injective_words(&letters).into_iter().filter(|w| w.len() == letters.len()) {
        if enumerative::descent_count(&w) + 1 == i {
            for m in 1u32..(1 << w.len()) {
                let sub: Vec<u8> = (0..w.len()).filter(|k| m >> k & 1 == 1).map(|k| w[k]).collect();
                generated.insert(sub);
            }
        }
    }
    let consistent = generated.len() == fiber.len() && fiber.iter().all(|w| generated.contains(w));
    Ok(FiberIdeal { ideal: WordPoset::from_words(fiber), consistent })
}
