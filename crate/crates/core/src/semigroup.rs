//! Homogeneous affine semigroups and their divisibility posets.
//!
//! A semigroup `Λ ⊆ N^d` is given by generators together with an integer
//! weight `w` and scale `s` such that `w·g = s` for every generator; the
//! degree of an element is `w·λ / s`. Elements are found by layered
//! enumeration (degree `m` = degree `m - 1` plus a generator), which is also
//! the only membership oracle.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cm::{interval_homology, CmCoefficients};
use crate::constructions::{self, pair_label, ConstructionError};
use crate::homology::HomologySummary;
use crate::poset::{Poset, PosetError, PosetMap};

/// Default bound on the number of elements in one degree layer.
pub const DEFAULT_LAYER_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemigroupError {
    #[error("a semigroup needs at least one generator")]
    Empty,
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("generator {0} is repeated")]
    Duplicate(usize),
    #[error("expected vectors of length {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("generator {index} has weight {value}, expected {scale}")]
    NotHomogeneous { index: usize, value: u64, scale: u64 },
    #[error("scale must be positive")]
    ZeroScale,
    #[error("layer {degree} has more than {cap} elements")]
    LayerCap { degree: usize, cap: usize },
    #[error("{0} is not an element of the semigroup")]
    NotMember(String),
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

impl From<PosetError> for SemigroupError {
    fn from(e: PosetError) -> Self {
        SemigroupError::Construction(e.into())
    }
}

pub fn vector_label(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    format!("({})", parts.join(","))
}

fn dot(a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: &[u64], b: &[u64]) -> Option<Vec<u64>> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

/// A finitely generated homogeneous sub-semigroup of `N^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousSemigroup {
    dim: usize,
    generators: Vec<Vec<u64>>,
    weight: Vec<u64>,
    scale: u64,
}

impl HomogeneousSemigroup {
    pub fn new(generators: Vec<Vec<u64>>, weight: Vec<u64>, scale: u64) -> Result<Self, SemigroupError> {
        let dim = weight.len();
        if generators.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if scale == 0 {
            return Err(SemigroupError::ZeroScale);
        }
        let mut seen = BTreeSet::new();
        for (i, g) in generators.iter().enumerate() {
            if g.len() != dim {
                return Err(SemigroupError::DimMismatch { expected: dim, got: g.len() });
            }
            if g.iter().all(|&x| x == 0) {
                return Err(SemigroupError::ZeroGenerator(i));
            }
            if !seen.insert(g.clone()) {
                return Err(SemigroupError::Duplicate(i));
            }
            let value = dot(&weight, g);
            if value != scale {
                return Err(SemigroupError::NotHomogeneous { index: i, value, scale });
            }
        }
        Ok(HomogeneousSemigroup { dim, generators, weight, scale })
    }

    /// `N^d` with the unit vectors as generators.
    pub fn standard(d: usize) -> Self {
        let generators = (0..d).map(|i| (0..d).map(|j| u64::from(i == j)).collect()).collect();
        Self::new(generators, vec![1; d], 1).expect("unit vectors are homogeneous")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    pub fn weight(&self) -> &[u64] {
        &self.weight
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// `w·v / s`, or `None` if `s` does not divide `w·v`.
    pub fn degree(&self, v: &[u64]) -> Option<usize> {
        let w = dot(&self.weight, v);
        (w % self.scale == 0).then(|| (w / self.scale) as usize)
    }

    /// Elements of degree `0..=r`, layer by layer.
    pub fn enumerate(&self, r: usize) -> Result<Layers, SemigroupError> {
        self.enumerate_with_cap(r, DEFAULT_LAYER_CAP)
    }

    pub fn enumerate_with_cap(&self, r: usize, cap: usize) -> Result<Layers, SemigroupError> {
        let mut layers = vec![vec![vec![0u64; self.dim]]];
        for degree in 1..=r {
            let mut next = BTreeSet::new();
            for v in &layers[degree - 1] {
                for g in &self.generators {
                    next.insert(v.iter().zip(g).map(|(a, b)| a + b).collect::<Vec<u64>>());
                    if next.len() > cap {
                        return Err(SemigroupError::LayerCap { degree, cap });
                    }
                }
            }
            layers.push(next.into_iter().collect());
        }
        Ok(Layers { semigroup: self.clone(), layers })
    }
}

/// The semigroup with generators all `λ ∈ N^d` with coordinate sum `d`
/// except `(1, …, 1)`, degree = coordinate sum / `d`.
pub fn lambda_d(d: usize) -> Result<HomogeneousSemigroup, SemigroupError> {
    if d < 2 {
        return Err(SemigroupError::InvalidGrading(format!("lambda_d needs d >= 2, got {d}")));
    }
    fn compositions(total: u64, parts: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=total).rev() {
            cur.push(first);
            compositions(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut gens = Vec::new();
    compositions(d as u64, d, &mut Vec::new(), &mut gens);
    gens.retain(|g| g.iter().any(|&x| x != 1));
    HomogeneousSemigroup::new(gens, vec![1; d], d as u64)
}

/// Enumerated degree layers of a semigroup; each layer is sorted.
#[derive(Clone, Debug)]
pub struct Layers {
    semigroup: HomogeneousSemigroup,
    layers: Vec<Vec<Vec<u64>>>,
}

impl Layers {
    pub fn max_degree(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer(&self, degree: usize) -> &[Vec<u64>] {
        self.layers.get(degree).map_or(&[], Vec::as_slice)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<u64>> {
        self.layers.iter().flatten()
    }

    pub fn semigroup(&self) -> &HomogeneousSemigroup {
        &self.semigroup
    }

    /// Membership, decided from the layers; `None` past the enumerated range.
    pub fn contains(&self, v: &[u64]) -> Option<bool> {
        if v.len() != self.semigroup.dim {
            return Some(false);
        }
        let Some(d) = self.semigroup.degree(v) else {
            return Some(false);
        };
        let layer = self.layers.get(d)?;
        Some(layer.binary_search_by(|x| x.as_slice().cmp(v)).is_ok())
    }

    fn member(&self, v: &[u64]) -> Result<bool, SemigroupError> {
        self.contains(v).ok_or_else(|| SemigroupError::NotMember(vector_label(v)))
    }

    /// `a <= b` in the divisibility order.
    pub fn le(&self, a: &[u64], b: &[u64]) -> Result<bool, SemigroupError> {
        match sub(b, a) {
            Some(diff) => self.member(&diff),
            None => Ok(false),
        }
    }

    /// The interval `[0, λ]` as a poset on `{μ : μ, λ - μ ∈ Λ}`.
    pub fn lower_interval(&self, lambda: &[u64]) -> Result<VectorPoset, SemigroupError> {
        if !self.member(lambda)? {
            return Err(SemigroupError::NotMember(vector_label(lambda)));
        }
        let d = self.semigroup.degree(lambda).expect("member has a degree");
        let mut elements = Vec::new();
        for layer in &self.layers[..=d] {
            for mu in layer {
                if self.le(mu, lambda)? {
                    elements.push(mu.clone());
                }
            }
        }
        let mut lt = BTreeSet::new();
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                if i != j && self.le(a, b)? {
                    lt.insert((i, j));
                }
            }
        }
        let labels = elements.iter().map(|v| vector_label(v)).collect();
        let poset = Poset::from_strict_order(labels, |i, j| lt.contains(&(i, j)));
        Ok(VectorPoset { poset, elements })
    }

    /// Checks `[μ, λ] ≅ [0, λ - μ]` through the shift `x ↦ x - μ`.
    pub fn translation_holds(&self, mu: &[u64], lambda: &[u64]) -> Result<bool, SemigroupError> {
        let top = self.lower_interval(lambda)?;
        let Some(i) = top.index_of(mu) else {
            return Ok(false);
        };
        let j = top.index_of(lambda).expect("top present");
        let keep = top.poset.closed_interval(i, j)?;
        let kept: Vec<&Vec<u64>> =
            top.elements.iter().enumerate().filter(|&(x, _)| top.poset.le(i, x) && top.poset.le(x, j)).map(|(_, v)| v).collect();
        let diff = sub(lambda, mu).expect("mu <= lambda");
        let shifted = self.lower_interval(&diff)?;
        if shifted.elements.len() != kept.len() {
            return Ok(false);
        }
        let mut map = Vec::with_capacity(kept.len());
        for v in kept {
            match shifted.index_of(&sub(v, mu).expect("above mu")) {
                Some(k) => map.push(k),
                None => return Ok(false),
            }
        }
        Ok(keep.is_order_isomorphism(&shifted.poset, &map))
    }
}

/// A poset whose elements are semigroup vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorPoset {
    pub poset: Poset,
    pub elements: Vec<Vec<u64>>,
}

impl VectorPoset {
    pub fn index_of(&self, v: &[u64]) -> Option<usize> {
        self.elements.iter().position(|e| e.as_slice() == v)
    }

    /// Position of the zero vector and of the top, when present.
    fn bottom_top(&self) -> (usize, usize) {
        (self.poset.minimum().expect("lower intervals have a bottom"), self.poset.maximum().expect("and a top"))
    }

    pub fn is_self_dual(&self) -> Result<bool, SemigroupError> {
        Ok(self.poset.is_isomorphic(&self.poset.dual())?)
    }
}

/// Report of the interval criterion for Koszulness up to a rank bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulReport {
    pub max_rank: usize,
    pub coefficients: CmCoefficients,
    /// Elements `λ` with `2 <= deg λ <= max_rank`.
    pub elements_checked: usize,
    pub distinct_intervals: usize,
    pub witness: Option<KoszulWitness>,
}

impl KoszulReport {
    /// No interval up to the rank bound violates the criterion. This is a
    /// necessary condition for Koszulness, never a proof of it.
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// An element whose open interval `(0, λ)` has homology outside dimension
/// `deg λ - 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulWitness {
    pub lambda: Vec<u64>,
    pub degree: usize,
    pub dimension: isize,
    pub homology: HomologySummary,
}

/// Tests that `(0, λ)` has homology concentrated in dimension `deg λ - 2`
/// (free, in the integral mode) for every `λ` of degree `2..=r`.
pub fn koszul_necessary_test(
    s: &HomogeneousSemigroup,
    r: usize,
    coefficients: CmCoefficients,
) -> Result<KoszulReport, SemigroupError> {
    let layers = s.enumerate(r)?;
    let mut reps: Vec<Poset> = Vec::new();
    let mut buckets: BTreeMap<(usize, u64), Vec<usize>> = BTreeMap::new();
    let mut jobs: Vec<(Vec<u64>, usize, usize)> = Vec::new();
    for degree in 2..=r {
        for lambda in layers.layer(degree) {
            let closed = layers.lower_interval(lambda)?;
            let (bottom, top) = closed.bottom_top();
            let open = closed.poset.open_interval(bottom, top)?;
            let key = (open.len(), open.invariant_hash());
            let bucket = buckets.entry(key).or_default();
            let class = match bucket.iter().copied().find(|&c| open.is_isomorphic(&reps[c]).unwrap_or(false)) {
                Some(c) => c,
                None => {
                    bucket.push(reps.len());
                    reps.push(open);
                    reps.len() - 1
                }
            };
            jobs.push((lambda.clone(), degree, class));
        }
    }
    let results = crate::par::map(&reps, |p| interval_homology(p, coefficients));
    let mut witness = None;
    for (lambda, degree, class) in &jobs {
        let h = &results[*class];
        let expected = *degree as isize - 2;
        let bad = h.nonzero_dims().into_iter().find(|&d| d != expected).or_else(|| {
            (coefficients == CmCoefficients::IntegralSpherical && !h.is_torsion_free()).then_some(expected)
        });
        if let Some(dimension) = bad {
            witness = Some(KoszulWitness { lambda: lambda.clone(), degree: *degree, dimension, homology: h.clone() });
            break;
        }
    }
    Ok(KoszulReport {
        max_rank: r,
        coefficients,
        elements_checked: jobs.len(),
        distinct_intervals: reps.len(),
        witness,
    })
}

/// A linear grading `g(γ) = w·γ` of a semigroup, positive on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingMap {
    weight: Vec<u64>,
}

impl GradingMap {
    pub fn new(gamma: &HomogeneousSemigroup, weight: Vec<u64>) -> Result<Self, SemigroupError> {
        if weight.len() != gamma.dim() {
            return Err(SemigroupError::DimMismatch { expected: gamma.dim(), got: weight.len() });
        }
        if let Some(g) = gamma.generators().iter().find(|g| dot(&weight, g) == 0) {
            return Err(SemigroupError::InvalidGrading(format!("g{} = 0", vector_label(g))));
        }
        Ok(GradingMap { weight })
    }

    /// The semigroup's own degree, scaled by `factor`.
    pub fn scaled_degree(gamma: &HomogeneousSemigroup, factor: u64) -> Result<Self, SemigroupError> {
        if factor == 0 {
            return Err(SemigroupError::InvalidGrading(String::from("factor 0")));
        }
        // w·γ / s is the degree; find an integral multiple of it.
        if gamma.weight().iter().any(|w| (w * factor) % gamma.scale() != 0) {
            return Err(SemigroupError::InvalidGrading(String::from("degree times factor is not integral")));
        }
        Self::new(gamma, gamma.weight().iter().map(|w| w * factor / gamma.scale()).collect())
    }

    pub fn value(&self, v: &[u64]) -> usize {
        dot(&self.weight, v) as usize
    }

    pub fn weight(&self) -> &[u64] {
        &self.weight
    }
}

/// A poset on pairs of semigroup vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPoset {
    pub poset: Poset,
    pub elements: Vec<(Vec<u64>, Vec<u64>)>,
}

type Pair = (Vec<u64>, Vec<u64>);

fn pair_vector_label(p: &Pair) -> String {
    pair_label(&vector_label(&p.0), &vector_label(&p.1))
}

/// Shared machinery of the lazy product views: a product semigroup given
/// by a membership predicate on pairs with a compatible degree.
trait PairSemigroup {
    fn lambda(&self) -> &Layers;
    fn gamma(&self) -> &Layers;
    fn admits(&self, mu: &[u64], nu: &[u64]) -> bool;

    fn member(&self, p: &Pair) -> Result<bool, SemigroupError> {
        Ok(self.lambda().member(&p.0)? && self.gamma().member(&p.1)? && self.admits(&p.0, &p.1))
    }

    fn le(&self, a: &Pair, b: &Pair) -> Result<bool, SemigroupError> {
        match (sub(&b.0, &a.0), sub(&b.1, &a.1)) {
            (Some(x), Some(y)) => self.member(&(x, y)),
            _ => Ok(false),
        }
    }

    fn lower_pairs(&self, top: &Pair) -> Result<PairPoset, SemigroupError> {
        if !self.member(top)? {
            return Err(SemigroupError::NotMember(pair_vector_label(top)));
        }
        let dl = self.lambda().semigroup.degree(&top.0).expect("member");
        let dg = self.gamma().semigroup.degree(&top.1).expect("member");
        let mut elements = Vec::new();
        for mu in self.lambda().layers[..=dl].iter().flatten() {
            for nu in self.gamma().layers[..=dg].iter().flatten() {
                let p = (mu.clone(), nu.clone());
                if self.member(&p)? && self.le(&p, top)? {
                    elements.push(p);
                }
            }
        }
        let mut lt = BTreeSet::new();
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                if i != j && self.le(a, b)? {
                    lt.insert((i, j));
                }
            }
        }
        let labels = elements.iter().map(pair_vector_label).collect();
        let poset = Poset::from_strict_order(labels, |i, j| lt.contains(&(i, j)));
        Ok(PairPoset { poset, elements })
    }
}

/// Identity-on-pairs comparison of a pair poset with a product of the
/// factor intervals.
fn matches_identity_on_pairs(
    direct: &PairPoset,
    left: &VectorPoset,
    right: &VectorPoset,
    built: &constructions::PairedPoset,
) -> bool {
    if direct.elements.len() != built.poset.len() {
        return false;
    }
    let mut map = Vec::with_capacity(direct.elements.len());
    for (mu, nu) in &direct.elements {
        let (Some(a), Some(b)) = (left.index_of(mu), right.index_of(nu)) else {
            return false;
        };
        match built.index_of((a, b)) {
            Some(k) => map.push(k),
            None => return false,
        }
    }
    direct.poset.is_order_isomorphism(&built.poset, &map)
}

/// Lazy view of the `g`-weighted Segre semigroup
/// `{(λ, γ) : deg λ = g(γ)}`.
#[derive(Clone, Debug)]
pub struct SegreSemigroup {
    lambda: Layers,
    gamma: Layers,
    grading: GradingMap,
    max_gamma_degree: usize,
}

impl PairSemigroup for SegreSemigroup {
    fn lambda(&self) -> &Layers {
        &self.lambda
    }
    fn gamma(&self) -> &Layers {
        &self.gamma
    }
    fn admits(&self, mu: &[u64], nu: &[u64]) -> bool {
        self.lambda.semigroup.degree(mu) == Some(self.grading.value(nu))
    }
}

/// Segre view covering all pairs whose `Γ`-degree is at most `r`.
pub fn segre_semigroup(
    lambda: &HomogeneousSemigroup,
    gamma: &HomogeneousSemigroup,
    g: GradingMap,
    r: usize,
) -> Result<SegreSemigroup, SemigroupError> {
    if g.weight.len() != gamma.dim() {
        return Err(SemigroupError::DimMismatch { expected: gamma.dim(), got: g.weight.len() });
    }
    let gamma_layers = gamma.enumerate(r)?;
    let max_g = gamma_layers.iter().map(|v| g.value(v)).max().unwrap_or(0);
    Ok(SegreSemigroup { lambda: lambda.enumerate(max_g)?, gamma: gamma_layers, grading: g, max_gamma_degree: r })
}

impl SegreSemigroup {
    /// Elements `(λ, γ)` with `deg γ <= r`, by `Γ`-degree.
    pub fn elements(&self) -> Vec<Pair> {
        let mut out = Vec::new();
        for d in 0..=self.max_gamma_degree {
            for nu in self.gamma.layer(d) {
                for mu in self.lambda.layer(self.grading.value(nu)) {
                    out.push((mu.clone(), nu.clone()));
                }
            }
        }
        out
    }

    pub fn lower_interval(&self, top: &Pair) -> Result<PairPoset, SemigroupError> {
        self.lower_pairs(top)
    }

    /// `[0, (λ, γ)]` equals `weighted_segre([0, λ], [0, γ], g)` under the
    /// identity on pairs.
    pub fn interval_matches_segre(&self, top: &Pair) -> Result<bool, SemigroupError> {
        let direct = self.lower_pairs(top)?;
        let left = self.lambda.lower_interval(&top.0)?;
        let right = self.gamma.lower_interval(&top.1)?;
        let values = right.elements.iter().map(|v| self.grading.value(v)).collect();
        let g = PosetMap::to_naturals(&right.poset, values)?;
        let (built, _) = constructions::weighted_segre(&left.poset, &right.poset, &g)?;
        Ok(matches_identity_on_pairs(&direct, &left, &right, &built))
    }
}

/// Lazy view of the Rees semigroup generated by `(λ, 0)` and `(λ, γ)` for
/// degree-one `λ`, `γ`, i.e. the pairs with `deg λ >= deg γ`.
#[derive(Clone, Debug)]
pub struct ReesSemigroup {
    lambda: Layers,
    gamma: Layers,
}

impl PairSemigroup for ReesSemigroup {
    fn lambda(&self) -> &Layers {
        &self.lambda
    }
    fn gamma(&self) -> &Layers {
        &self.gamma
    }
    fn admits(&self, mu: &[u64], nu: &[u64]) -> bool {
        self.lambda.semigroup.degree(mu) >= self.gamma.semigroup.degree(nu)
    }
}

/// Rees view covering all pairs of degree at most `r`.
pub fn rees_semigroup(lambda: &HomogeneousSemigroup, gamma: &HomogeneousSemigroup, r: usize) -> Result<ReesSemigroup, SemigroupError> {
    Ok(ReesSemigroup { lambda: lambda.enumerate(r)?, gamma: gamma.enumerate(r)? })
}

impl ReesSemigroup {
    /// Elements of degree `<= r`, by degree.
    pub fn elements(&self) -> Vec<Pair> {
        let mut out = Vec::new();
        for d in 0..=self.lambda.max_degree() {
            for mu in self.lambda.layer(d) {
                for e in 0..=d {
                    for nu in self.gamma.layer(e) {
                        out.push((mu.clone(), nu.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn lower_interval(&self, top: &Pair) -> Result<PairPoset, SemigroupError> {
        self.lower_pairs(top)
    }

    /// `[0, (λ, γ)]` equals the principal lower ideal of `(λ, γ)` in
    /// `rees([0, λ], [0, γ])` under the identity on pairs. For `γ ≠ 0` the
    /// Rees product itself has no top: `(λ, 0)` is maximal as well.
    pub fn interval_matches_rees(&self, top: &Pair) -> Result<bool, SemigroupError> {
        let direct = self.lower_pairs(top)?;
        let left = self.lambda.lower_interval(&top.0)?;
        let right = self.gamma.lower_interval(&top.1)?;
        let full = constructions::rees(&left.poset, &right.poset)?;
        let (Some(a), Some(b)) = (left.index_of(&top.0), right.index_of(&top.1)) else {
            return Ok(false);
        };
        let Some(t) = full.index_of((a, b)) else {
            return Ok(false);
        };
        let keep: Vec<usize> = (0..full.poset.len()).filter(|&x| full.poset.le(x, t)).collect();
        let ideal = constructions::PairedPoset {
            poset: full.poset.induced(&keep),
            components: keep.iter().map(|&x| full.components[x]).collect(),
        };
        Ok(matches_identity_on_pairs(&direct, &left, &right, &ideal))
    }
}

impl PairPoset {
    pub fn is_self_dual(&self) -> Result<bool, SemigroupError> {
        Ok(self.poset.is_isomorphic(&self.poset.dual())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_errors() {
        assert_eq!(HomogeneousSemigroup::new(Vec::new(), vec![1], 1), Err(SemigroupError::Empty));
        assert_eq!(
            HomogeneousSemigroup::new(vec![vec![1, 0], vec![1, 1]], vec![1, 1], 1),
            Err(SemigroupError::NotHomogeneous { index: 1, value: 2, scale: 1 })
        );
        assert_eq!(HomogeneousSemigroup::new(vec![vec![0, 0]], vec![1, 1], 1), Err(SemigroupError::ZeroGenerator(0)));
        assert!(HomogeneousSemigroup::new(vec![vec![3], vec![4], vec![5]], vec![1], 3).is_err());
    }

    #[test]
    fn layer_sizes() {
        assert_eq!(HomogeneousSemigroup::standard(2).enumerate(2).unwrap().sizes(), vec![1, 2, 3]);
        assert_eq!(HomogeneousSemigroup::standard(1).enumerate(5).unwrap().sizes(), vec![1; 6]);
        assert_eq!(lambda_d(2).unwrap().generators().len(), 2);
        assert_eq!(lambda_d(3).unwrap().generators().len(), 9);
        assert_eq!(lambda_d(4).unwrap().generators().len(), 34);
        assert_eq!(lambda_d(3).unwrap().enumerate(1).unwrap().layer(1).len(), 9);
    }

    #[test]
    fn lower_intervals_of_free_semigroups() {
        let n1 = HomogeneousSemigroup::standard(1).enumerate(3).unwrap();
        let c = n1.lower_interval(&[3]).unwrap();
        assert!(c.poset.is_isomorphic(&constructions::chain(4)).unwrap());
        let n2 = HomogeneousSemigroup::standard(2).enumerate(2).unwrap();
        let d = n2.lower_interval(&[1, 1]).unwrap();
        assert!(d.poset.is_isomorphic(&constructions::boolean(2).unwrap()).unwrap());
        assert!(n2.lower_interval(&[3, 0]).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let s = HomogeneousSemigroup::standard(3);
        assert!(matches!(s.enumerate_with_cap(3, 5), Err(SemigroupError::LayerCap { degree: 2, cap: 5 })));
    }

    #[test]
    fn veronese_segre() {
        let n = HomogeneousSemigroup::standard(1);
        let g = GradingMap::new(&n, vec![2]).unwrap();
        let s = segre_semigroup(&n, &n, g, 3).unwrap();
        let elems = s.elements();
        assert_eq!(elems.len(), 4);
        assert!(elems.iter().all(|(a, b)| a[0] == 2 * b[0]));
        for e in &elems {
            assert!(s.interval_matches_segre(e).unwrap());
        }
    }

    #[test]
    fn rees_of_naturals() {
        let n = HomogeneousSemigroup::standard(1);
        let r = rees_semigroup(&n, &n, 3).unwrap();
        let elems = r.elements();
        assert!(elems.iter().all(|(a, b)| a[0] >= b[0]));
        assert_eq!(elems.len(), 1 + 2 + 3 + 4);
        for e in &elems {
            assert!(r.interval_matches_rees(e).unwrap());
        }
    }

    #[test]
    fn koszul_for_free_semigroups() {
        for d in 1..=2 {
            let rep = koszul_necessary_test(&HomogeneousSemigroup::standard(d), 3, CmCoefficients::Rationals).unwrap();
            assert!(rep.passed());
        }
    }

    #[test]
    fn rational_quartic_is_not_koszul() {
        let s = HomogeneousSemigroup::new(vec![vec![4, 0], vec![3, 1], vec![1, 3], vec![0, 4]], vec![1, 1], 4).unwrap();
        let rep = koszul_necessary_test(&s, 3, CmCoefficients::Rationals).unwrap();
        let w = rep.witness.expect("a cubic relation shows up in degree 3");
        assert_eq!(w.degree, 3);
    }
}
