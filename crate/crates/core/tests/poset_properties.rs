//! Structural properties of posets and products on random and named input.

use posettop_core::constructions::{boolean, chain, rank_select, rees, rees_as_segre, weighted_segre};
use posettop_core::homology::{integral_homology, Coefficients};
use posettop_core::simplicial::{complex_segre, order_complex, type_select};
use posettop_core::{Coloring, Poset, PosetMap};
use proptest::prelude::*;

/// A bounded graded poset: bottom, the given middle levels, top. Covers
/// between consecutive middle levels are taken from `bits`, patched so that
/// every element has a cover on each side.
fn graded_poset(levels: &[usize], bits: &[bool]) -> Poset {
    let mut sizes = vec![1];
    sizes.extend_from_slice(levels);
    sizes.push(1);
    let mut start = vec![0];
    for s in &sizes {
        start.push(start.last().unwrap() + s);
    }
    let n = *start.last().unwrap();
    let mut pairs = Vec::new();
    let mut bit = bits.iter().cycle();
    for k in 1..sizes.len() {
        let lower: Vec<usize> = (start[k - 1]..start[k]).collect();
        let upper: Vec<usize> = (start[k]..start[k + 1]).collect();
        let mut has_up = vec![false; lower.len()];
        for &u in &upper {
            let mut any = false;
            for (i, &l) in lower.iter().enumerate() {
                if *bit.next().unwrap() || sizes[k - 1] == 1 || sizes[k] == 1 {
                    pairs.push((l, u));
                    has_up[i] = true;
                    any = true;
                }
            }
            if !any {
                pairs.push((lower[0], u));
                has_up[0] = true;
            }
        }
        for (i, &l) in lower.iter().enumerate() {
            if !has_up[i] {
                pairs.push((l, upper[0]));
            }
        }
    }
    Poset::new((0..n).map(|i| format!("x{i}")).collect(), &pairs).unwrap()
}

fn graded_strategy() -> impl Strategy<Value = Poset> {
    (prop::collection::vec(1usize..=3, 1..=4), prop::collection::vec(any::<bool>(), 1..40))
        .prop_filter("at most ten elements", |(levels, _)| levels.iter().sum::<usize>() <= 8)
        .prop_map(|(levels, bits)| graded_poset(&levels, &bits))
}

fn relabelled(p: &Poset, perm: &[usize]) -> Poset {
    let n = p.len();
    let mut labels = vec![String::new(); n];
    for x in 0..n {
        labels[perm[x]] = format!("y{x}");
    }
    let pairs: Vec<(usize, usize)> = p.cover_pairs().into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
    Poset::new(labels, &pairs).unwrap()
}

fn permutation(n: usize, keys: &[u32]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| (keys.get(i).copied().unwrap_or(0), i));
    let mut perm = vec![0; n];
    for (pos, &i) in idx.iter().enumerate() {
        perm[i] = pos;
    }
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hall_theorem_on_random_graded_posets(p in graded_strategy()) {
        let (bottom, top) = (p.minimum().unwrap(), p.maximum().unwrap());
        let mu = p.mobius(bottom, top).unwrap();
        let open = order_complex(&p.open_interval(bottom, top).unwrap());
        prop_assert_eq!(mu, open.reduced_euler().unwrap());
        prop_assert_eq!(mu, integral_homology(&open).unwrap().euler_characteristic());
        prop_assert!(p.is_pure());
    }

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(p in graded_strategy(), keys in prop::collection::vec(any::<u32>(), 12)) {
        let q = relabelled(&p, &permutation(p.len(), &keys));
        prop_assert!(p.is_isomorphic(&p).unwrap());
        let there = p.isomorphism(&q, 512).unwrap().expect("relabelling is an isomorphism");
        prop_assert!(p.is_order_isomorphism(&q, &there));
        let back = q.isomorphism(&p, 512).unwrap().expect("and so is its inverse");
        prop_assert!(q.is_order_isomorphism(&p, &back));
        prop_assert_eq!(p.invariant_hash(), q.invariant_hash());
        prop_assert!(p.dual().dual().is_isomorphic(&p).unwrap());
    }

    #[test]
    fn rees_rank_is_first_rank(p in graded_strategy(), q in graded_strategy()) {
        let r = rees(&p, &q).unwrap();
        let rp = p.ranks().unwrap();
        let rr = r.poset.ranks().unwrap();
        for (x, &(a, _)) in r.components.iter().enumerate() {
            prop_assert_eq!(rr.rank(x), rp.rank(a));
        }
        let via = rees_as_segre(&p, &q).unwrap();
        prop_assert!(via.verify_against(&r).is_some());
    }

    #[test]
    fn weighted_segre_rank_is_first_rank(p in graded_strategy(), q in graded_strategy()) {
        let g = PosetMap::rank(&q).unwrap();
        let (s, _) = weighted_segre(&p, &q, &g).unwrap();
        let rp = p.ranks().unwrap();
        let rs = s.poset.ranks().unwrap();
        for (x, &(a, b)) in s.components.iter().enumerate() {
            prop_assert_eq!(rs.rank(x), rp.rank(a));
            prop_assert_eq!(g.value(b), rp.rank(a));
        }
    }
}

#[test]
fn rank_selection_is_type_selection() {
    for n in [3, 4] {
        let b = boolean(n).unwrap();
        let delta = order_complex(&b);
        let coloring = Coloring::from_ranks(&b, 0).unwrap();
        for mask in 1u32..(1 << (n + 1)) {
            let s: Vec<usize> = (0..=n).filter(|r| mask >> r & 1 == 1).collect();
            let by_type = type_select(&delta, &coloring, &s).unwrap();
            let by_rank = order_complex(&rank_select(&b, &s).unwrap());
            assert!(by_type.same_faces_by_label(&by_rank), "B{n}, S = {s:?}");
        }
    }
}

#[test]
fn complex_segre_matches_poset_segre() {
    let b2 = boolean(2).unwrap();
    let cases: Vec<(Poset, Vec<usize>)> = vec![
        (b2.clone(), vec![0, 1, 2]),
        (chain(2), vec![0, 2]),
        (chain(2), vec![1, 2]),
        (chain(3), vec![0, 1, 2]),
    ];
    for (q, h) in cases {
        let rq = q.ranks().unwrap();
        let g_values: Vec<usize> = rq.ranks().iter().map(|&r| h[r]).collect();
        let g = PosetMap::to_naturals(&q, g_values.clone()).unwrap();
        let (poset_segre, hyp) = weighted_segre(&b2, &q, &g).unwrap();
        assert!(hyp.satisfied());
        let g1 = Coloring::from_ranks(&b2, 1).unwrap();
        let g2 = Coloring(g_values.iter().map(|v| v + 1).collect());
        let (complex, report) = complex_segre(&order_complex(&b2), &g1, &order_complex(&q), &g2).unwrap();
        assert!(!report.colors_outside_range);
        assert!(complex.same_faces_by_label(&order_complex(&poset_segre.poset)), "h = {h:?}");
    }
}

#[test]
fn segre_of_booleans_is_acyclic_and_bounded() {
    let b3 = boolean(3).unwrap();
    let (m, _) = weighted_segre(&b3, &b3, &PosetMap::rank(&b3).unwrap()).unwrap();
    assert_eq!(m.poset.len(), 20);
    let h = posettop_core::homology::homology(&order_complex(&m.poset), Coefficients::Rationals).unwrap();
    assert!(h.is_zero());
}
