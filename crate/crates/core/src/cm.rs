//! Cohen-Macaulay decision procedures.
//!
//! A pure poset `P` is CM over a field when every open interval `(x, y)` of
//! its bounded extension has reduced homology concentrated in dimension
//! `rk(y) - rk(x) - 2`. The integral-spherical mode asks in addition that
//! this homology be free; it is a necessary condition for homotopical CM,
//! not a decision procedure for it.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::constructions::{self, ConstructionError};
use crate::homology::{self, Coefficients, HomologyError, HomologySummary};
use crate::poset::{Poset, PosetMap};
use crate::simplicial::{face_poset, order_complex, SimplicialComplex};

/// Coefficients of a CM test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CmCoefficients {
    Rationals,
    Prime(u64),
    /// Free integral homology concentrated in the top dimension.
    IntegralSpherical,
}

impl CmCoefficients {
    pub fn prime(p: u64) -> Result<Self, HomologyError> {
        Coefficients::prime(p).map(|_| CmCoefficients::Prime(p))
    }

    pub fn homology_coefficients(self) -> Coefficients {
        match self {
            CmCoefficients::Rationals => Coefficients::Rationals,
            CmCoefficients::Prime(p) => Coefficients::Prime(p),
            CmCoefficients::IntegralSpherical => Coefficients::Integers,
        }
    }
}

impl core::fmt::Display for CmCoefficients {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CmCoefficients::IntegralSpherical => write!(f, "Z-spherical"),
            other => write!(f, "{}", other.homology_coefficients()),
        }
    }
}

/// An interval whose homology is not concentrated where it should be.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmFailure {
    pub lower: String,
    pub upper: String,
    /// `rk(upper) - rk(lower) - 2`.
    pub expected_dimension: isize,
    /// First dimension that violates the condition.
    pub dimension: isize,
    pub homology: HomologySummary,
}

/// Two maximal chains of different lengths, by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurityWitness {
    pub short_chain: Vec<String>,
    pub long_chain: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmReport {
    pub verdict: bool,
    pub coefficients: CmCoefficients,
    pub failures: Vec<CmFailure>,
    pub purity_witness: Option<PurityWitness>,
    /// Non-cover pairs `x < y` of the bounded extension.
    pub intervals_checked: usize,
    /// Isomorphism classes among those intervals.
    pub distinct_intervals: usize,
}

fn violation(h: &HomologySummary, expected: isize, coefficients: CmCoefficients) -> Option<isize> {
    if let Some(&d) = h.nonzero_dims().iter().find(|&&d| d != expected) {
        return Some(d);
    }
    if coefficients == CmCoefficients::IntegralSpherical && !h.is_torsion_free() {
        return Some(expected);
    }
    None
}

pub(crate) fn interval_homology(p: &Poset, coefficients: CmCoefficients) -> HomologySummary {
    let c = order_complex(p);
    homology::homology_via_integers(&c, coefficients.homology_coefficients()).expect("coefficients validated")
}

fn check(p: &Poset, coefficients: CmCoefficients, dedup: bool) -> CmReport {
    let mut report = CmReport {
        verdict: false,
        coefficients,
        failures: Vec::new(),
        purity_witness: None,
        intervals_checked: 0,
        distinct_intervals: 0,
    };
    if let Err(w) = p.rank_info() {
        let names = |c: &[usize]| c.iter().map(|&x| String::from(p.label(x))).collect();
        report.purity_witness = Some(PurityWitness { short_chain: names(&w.short_chain), long_chain: names(&w.long_chain) });
        return report;
    }
    let hat = p.augment();
    let ranks = hat.ranks().expect("bounded extension of a pure poset is pure");
    let n = hat.len();
    // Intervals in lexicographic order of endpoint labels; classes by
    // isomorphism, each evaluated once.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| hat.label(a).cmp(hat.label(b)));
    let mut reps: Vec<Poset> = Vec::new();
    let mut by_hash: BTreeMap<(usize, u64), Vec<usize>> = BTreeMap::new();
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for &x in &order {
        for &y in &order {
            if !hat.lt(x, y) || hat.covers(x, y) {
                continue;
            }
            let interval = hat.open_interval(x, y).expect("x < y");
            let class = if dedup {
                let key = (interval.len(), interval.invariant_hash());
                let bucket = by_hash.entry(key).or_default();
                let found = bucket.iter().copied().find(|&r| interval.is_isomorphic(&reps[r]).unwrap_or(false));
                match found {
                    Some(r) => r,
                    None => {
                        bucket.push(reps.len());
                        reps.push(interval);
                        reps.len() - 1
                    }
                }
            } else {
                reps.push(interval);
                reps.len() - 1
            };
            pairs.push((x, y, class));
        }
    }
    report.intervals_checked = pairs.len();
    report.distinct_intervals = reps.len();
    let results: Vec<HomologySummary> = crate::par::map(&reps, |q| interval_homology(q, coefficients));
    for (x, y, class) in pairs {
        let expected = ranks.rank(y) as isize - ranks.rank(x) as isize - 2;
        let h = &results[class];
        if let Some(dimension) = violation(h, expected, coefficients) {
            report.failures.push(CmFailure {
                lower: String::from(hat.label(x)),
                upper: String::from(hat.label(y)),
                expected_dimension: expected,
                dimension,
                homology: h.clone(),
            });
        }
    }
    report.verdict = report.failures.is_empty();
    report
}

/// Decides CM over a field, or integral sphericity, of a finite poset.
/// Isomorphic intervals share one homology computation.
pub fn is_cm_poset(p: &Poset, coefficients: CmCoefficients) -> CmReport {
    check(p, coefficients, true)
}

/// As [`is_cm_poset`], computing every interval separately.
pub fn is_cm_poset_uncached(p: &Poset, coefficients: CmCoefficients) -> CmReport {
    check(p, coefficients, false)
}

/// CM test for a complex through its face poset.
pub fn is_cm_complex(c: &SimplicialComplex, coefficients: CmCoefficients) -> Result<CmReport, HomologyError> {
    if c.is_void() {
        return Err(crate::simplicial::ComplexError::Void.into());
    }
    Ok(is_cm_poset(&face_poset(c), coefficients))
}

/// Which construction produced a preservation case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    RankSelection,
    WeightedSegre,
    Rees,
    NonStrictSegre,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreservationCase {
    pub construction: Construction,
    pub description: String,
    pub size: usize,
    /// Whether the theorems predict a CM result.
    pub expected_cm: bool,
    pub verdicts: Vec<(CmCoefficients, bool)>,
}

impl PreservationCase {
    pub fn consistent(&self) -> bool {
        self.verdicts.iter().all(|&(_, v)| v == self.expected_cm)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PreservationReport {
    pub cases: Vec<PreservationCase>,
    /// Seeds that failed their own CM check, or constructions that errored.
    pub setup_errors: Vec<String>,
}

impl PreservationReport {
    pub fn defects(&self) -> impl Iterator<Item = &PreservationCase> {
        self.cases.iter().filter(|c| !c.consistent())
    }

    pub fn passed(&self) -> bool {
        self.setup_errors.is_empty() && self.defects().next().is_none()
    }

    pub fn count(&self, construction: Construction) -> usize {
        self.cases.iter().filter(|c| c.construction == construction).count()
    }
}

/// A named seed poset for the preservation suite.
#[derive(Clone, Debug)]
pub struct Seed {
    pub name: String,
    pub poset: Poset,
}

/// Boolean lattices `B_1..=B_max_boolean`, chains with `1..=max_chain`
/// elements and face posets of simplex boundaries on `2..=max_sphere`
/// vertices.
pub fn default_seeds(max_boolean: usize, max_chain: usize, max_sphere: usize) -> Vec<Seed> {
    let mut seeds = Vec::new();
    for n in 1..=max_boolean {
        seeds.push(Seed { name: format!("B{n}"), poset: constructions::boolean(n).expect("small n") });
    }
    for m in 1..=max_chain {
        seeds.push(Seed { name: format!("C{m}"), poset: constructions::chain(m) });
    }
    for v in 2..=max_sphere {
        seeds.push(Seed { name: format!("F(bd simplex {v})"), poset: face_poset(&SimplicialComplex::simplex_boundary(v)) });
    }
    seeds
}

/// Strictly increasing maps `{0..=k} -> {0..=n}`.
fn increasing_maps(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k + 1 {
            out.push(cur.clone());
            return;
        }
        let remaining = k + 1 - cur.len();
        for v in start..=n {
            if n + 1 - v < remaining {
                break;
            }
            cur.push(v);
            go(k, n, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, n, 0, &mut Vec::new(), &mut out);
    out
}

fn acyclic(p: &Poset, coefficients: CmCoefficients) -> bool {
    interval_homology(p, coefficients).is_zero()
}

/// Applies rank selection, weighted Segre products with strict gradings
/// into the rank set, and Rees products with an acyclic second factor to
/// every seed (and pair of seeds), and checks the CM verdict of each
/// result over each coefficient choice against the preservation theorems.
/// The non-strict two-chain example is included and expected to fail.
pub fn cm_preservation_suite(seeds: &[Seed], coefficients: &[CmCoefficients]) -> PreservationReport {
    let mut report = PreservationReport::default();
    let mut jobs: Vec<(Construction, String, Poset, bool)> = Vec::new();
    let mut cm_seeds: Vec<(&Seed, usize, Vec<CmCoefficients>)> = Vec::new();
    for s in seeds {
        let ok: Vec<CmCoefficients> =
            coefficients.iter().copied().filter(|&c| is_cm_poset(&s.poset, c).verdict).collect();
        if ok.len() != coefficients.len() {
            report.setup_errors.push(format!("seed {} is not CM", s.name));
            continue;
        }
        let top = s.poset.ranks().ok().and_then(|r| r.top_rank()).unwrap_or(0);
        let acyclic_over: Vec<CmCoefficients> = coefficients.iter().copied().filter(|&c| acyclic(&s.poset, c)).collect();
        cm_seeds.push((s, top, acyclic_over));
    }
    let mut push = |jobs: &mut Vec<(Construction, String, Poset, bool)>, kind, name: String, built: Result<Poset, ConstructionError>| match built {
        Ok(p) => jobs.push((kind, name, p, kind != Construction::NonStrictSegre)),
        Err(e) => report.setup_errors.push(format!("{name}: {e}")),
    };
    for (s, top, _) in &cm_seeds {
        let all: Vec<usize> = (0..=*top).collect();
        for mask in 1u32..(1 << all.len()) {
            let sel: Vec<usize> = all.iter().copied().filter(|&r| mask & (1 << r) != 0).collect();
            push(&mut jobs, Construction::RankSelection, format!("{} S={sel:?}", s.name), constructions::rank_select(&s.poset, &sel));
        }
    }
    for (p, top_p, _) in &cm_seeds {
        for (q, top_q, acyclic_over) in &cm_seeds {
            if top_q <= top_p {
                let rq = q.poset.ranks().expect("pure seed");
                for h in increasing_maps(*top_q, *top_p) {
                    let values = rq.ranks().iter().map(|&r| h[r]).collect();
                    let built = PosetMap::to_naturals(&q.poset, values)
                        .map_err(ConstructionError::from)
                        .and_then(|g| constructions::weighted_segre(&p.poset, &q.poset, &g))
                        .map(|(pp, hyp)| {
                            debug_assert!(hyp.satisfied());
                            pp.into_poset()
                        });
                    push(&mut jobs, Construction::WeightedSegre, format!("{} o_g {} g={h:?}", p.name, q.name), built);
                }
            }
            if acyclic_over.len() == coefficients.len() {
                let built = constructions::rees(&p.poset, &q.poset).map(|r| r.into_poset());
                push(&mut jobs, Construction::Rees, format!("{} * {}", p.name, q.name), built);
            }
        }
    }
    let anti = constructions::antichain(2);
    let two = constructions::chain(2);
    let built = constructions::weighted_segre(&anti, &two, &PosetMap::constant(&two, 0)).map(|(pp, _)| pp.into_poset());
    push(&mut jobs, Construction::NonStrictSegre, String::from("A2 o_0 C2"), built);

    let verdicts = crate::par::map(&jobs, |(_, _, p, _)| {
        coefficients.iter().map(|&c| (c, is_cm_poset(p, c).verdict)).collect::<Vec<_>>()
    });
    for ((construction, description, p, expected_cm), verdicts) in jobs.into_iter().zip(verdicts) {
        report.cases.push(PreservationCase { construction, description, size: p.len(), expected_cm, verdicts });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::constructions::{antichain, boolean, chain, rank_select};

    #[test]
    fn boolean_lattices_are_cm() {
        for n in 1..=4 {
            let b = boolean(n).unwrap();
            for c in [CmCoefficients::Rationals, CmCoefficients::Prime(2), CmCoefficients::IntegralSpherical] {
                let r = is_cm_poset(&b, c);
                assert!(r.verdict, "B{n} over {c}");
            }
        }
    }

    #[test]
    fn two_disjoint_chains_fail() {
        let anti = antichain(2);
        let two = chain(2);
        let (p, hyp) = crate::constructions::weighted_segre(&anti, &two, &PosetMap::constant(&two, 0)).unwrap();
        assert!(!hyp.g_strict);
        let r = is_cm_poset(&p.poset, CmCoefficients::Rationals);
        assert!(!r.verdict);
        assert!(r.failures.iter().any(|f| f.dimension == 0 && f.expected_dimension == 1));
    }

    #[test]
    fn impure_poset_reports_witness() {
        let p = Poset::from_label_pairs(["a", "b", "c"].map(String::from).to_vec(), &[("a", "b")]).unwrap();
        let r = is_cm_poset(&p, CmCoefficients::Rationals);
        assert!(!r.verdict);
        let w = r.purity_witness.unwrap();
        assert_eq!(w.short_chain.len() + 1, w.long_chain.len());
    }

    #[test]
    fn empty_poset_and_point() {
        assert!(is_cm_poset(&Poset::empty(), CmCoefficients::Rationals).verdict);
        assert!(is_cm_complex(&SimplicialComplex::simplex(1), CmCoefficients::Rationals).unwrap().verdict);
    }

    #[test]
    fn sphere_and_disjoint_edges() {
        let bd = SimplicialComplex::simplex_boundary(4);
        assert!(is_cm_complex(&bd, CmCoefficients::Rationals).unwrap().verdict);
        let labels = (0..4).map(|i| format!("{i}")).collect();
        let edges = SimplicialComplex::from_facets(labels, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(!is_cm_complex(&edges, CmCoefficients::Rationals).unwrap().verdict);
    }

    #[test]
    fn rank_selection_of_b4() {
        let b = boolean(4).unwrap();
        assert!(is_cm_poset(&rank_select(&b, &[1, 3]).unwrap(), CmCoefficients::Rationals).verdict);
    }

    #[test]
    fn cache_matches_uncached() {
        let b = boolean(3).unwrap();
        let m = crate::constructions::minors(2).unwrap().into_poset();
        for p in [b, m] {
            let a = is_cm_poset(&p, CmCoefficients::Rationals);
            let u = is_cm_poset_uncached(&p, CmCoefficients::Rationals);
            assert_eq!(a.verdict, u.verdict);
            assert_eq!(a.failures, u.failures);
            assert!(a.distinct_intervals <= u.distinct_intervals);
        }
    }

    #[test]
    fn increasing_map_count() {
        assert_eq!(increasing_maps(1, 3).len(), 6);
        assert_eq!(increasing_maps(0, 0), vec![vec![0]]);
        assert!(increasing_maps(2, 1).is_empty());
    }
}
