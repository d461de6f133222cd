//! Cross-checks between the independent homology routes on random input.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use posettop_core::homology::{
    betti, boundary_matrices, determinant, homology_via_integers, integral_homology, integral_homology_unreduced,
    rank_mod_p, rank_rational, smith_normal_form, Coefficients,
};
use posettop_core::simplicial::barycentric_subdivision;
use posettop_core::{IntegerMatrix, SimplicialComplex};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_complex(rng: &mut StdRng, max_vertices: usize, max_facet: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let facets: Vec<Vec<usize>> = (0..rng.gen_range(1..=6))
        .map(|_| {
            let size = rng.gen_range(1..=max_facet.min(n));
            let mut f: Vec<usize> = (0..n).collect();
            for i in 0..size {
                let j = rng.gen_range(i..n);
                f.swap(i, j);
            }
            f.truncate(size);
            f
        })
        .collect();
    SimplicialComplex::from_facets((0..n).map(|i| format!("v{i}")).collect(), &facets).unwrap()
}

fn rp2() -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 6, 2],
        [2, 3, 5], [3, 4, 6], [4, 5, 2], [5, 6, 3], [6, 2, 4],
    ]
    .iter()
    .map(|f| f.iter().map(|v| v - 1).collect())
    .collect();
    SimplicialComplex::from_facets((1..=6).map(|i| i.to_string()).collect(), &facets).unwrap()
}

#[test]
fn boundary_of_boundary_vanishes_on_random_complexes() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..150 {
        let c = random_complex(&mut rng, 8, 5);
        let mats = boundary_matrices(&c).unwrap();
        for w in mats.windows(2) {
            assert!(w[0].mul(&w[1]).is_zero());
        }
    }
}

#[test]
fn snf_and_elimination_agree_on_random_complexes() {
    let mut rng = StdRng::seed_from_u64(2024);
    let mut nontrivial = 0;
    for _ in 0..150 {
        let c = random_complex(&mut rng, 8, 5);
        let q = betti(&c, Coefficients::Rationals).unwrap();
        let z = integral_homology(&c).unwrap();
        let full = integral_homology_unreduced(&c).unwrap();
        assert_eq!(z, full);
        assert_eq!(q.betti_from_minus_one(), z.betti_from_minus_one());
        assert_eq!(q.euler_characteristic(), c.reduced_euler().unwrap());
        if !q.is_zero() {
            nontrivial += 1;
        }
        for p in [2, 3] {
            let by_rank = betti(&c, Coefficients::Prime(p)).unwrap();
            let by_uct = homology_via_integers(&c, Coefficients::Prime(p)).unwrap();
            assert_eq!(by_rank, by_uct);
        }
        assert_eq!(homology_via_integers(&c, Coefficients::Rationals).unwrap(), q);
    }
    assert!(nontrivial > 20);
}

#[test]
fn subdivision_preserves_integral_homology() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..40 {
        let c = random_complex(&mut rng, 6, 3);
        let sd = barycentric_subdivision(&c);
        assert_eq!(integral_homology(&c).unwrap(), integral_homology(&sd).unwrap());
    }
    let sd = barycentric_subdivision(&rp2());
    assert_eq!(integral_homology(&sd).unwrap().torsion(1), &[BigUint::from(2u32)]);
}

#[test]
fn projective_plane() {
    let c = rp2();
    assert!(betti(&c, Coefficients::Rationals).unwrap().is_zero());
    let f2 = betti(&c, Coefficients::Prime(2)).unwrap();
    assert_eq!(f2.betti_from_minus_one(), vec![0, 0, 1, 1]);
    let z = integral_homology(&c).unwrap();
    assert_eq!(z.betti_from_minus_one(), vec![0, 0, 0, 0]);
    assert_eq!(z.torsion(1), &[BigUint::from(2u32)]);
    assert!(z.torsion(0).is_empty() && z.torsion(2).is_empty());
}

#[test]
fn snf_invariants_on_random_matrices() {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..200 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let dense: Vec<Vec<i64>> =
            (0..rows).map(|_| (0..cols).map(|_| if rng.gen_bool(0.4) { 0 } else { rng.gen_range(-6..=6) }).collect()).collect();
        let m = IntegerMatrix::from_rows(&dense);
        let s = smith_normal_form(&m);
        assert!(s.divisibility_chain_holds());
        assert_eq!(s.rank, rank_rational(&m));
        assert!(s.rank >= rank_mod_p(&m, 5));
        if rows == cols {
            let prod = s.diagonal.iter().fold(BigUint::one(), |a, d| a * d);
            let det = determinant(&m);
            if s.rank == rows {
                assert_eq!(prod, det.magnitude().clone());
            } else {
                assert!(det.is_zero());
            }
        }
        let t = smith_normal_form(&m.transpose());
        assert_eq!(s.diagonal, t.diagonal);
    }
}
