//! Exact reduced simplicial homology.
//!
//! Three independent routes are provided:
//!
//! * [`betti`] over `Q` (fraction-free elimination on big integers) or
//!   `F_p` (modular elimination), straight on the boundary matrices;
//! * [`integral_homology`]: the augmented chain complex is first shrunk by
//!   elementary collapses and coreductions (both are deletions of a cell
//!   pair joined by a unit incidence, so the integral homology is
//!   untouched), then the remaining boundary maps go through
//!   [`smith_normal_form`];
//! * [`integral_homology_unreduced`], the SNF route without the shrinking
//!   step, used as a cross-check.

mod chain;
mod field;
mod matrix;
mod snf;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

pub use chain::BoundaryComplex;
pub use field::{determinant, rank_mod_p, rank_rational};
pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SnfDecomposition};

use crate::simplicial::{ComplexError, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Coefficient ring of a homology computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coefficients {
    Rationals,
    /// The prime field with `p` elements.
    Prime(u64),
    Integers,
}

impl Coefficients {
    /// `F_p`, rejecting composite `p`.
    pub fn prime(p: u64) -> Result<Self, HomologyError> {
        if is_prime(p) {
            Ok(Coefficients::Prime(p))
        } else {
            Err(HomologyError::NotPrime(p))
        }
    }
}

impl core::fmt::Display for Coefficients {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Coefficients::Rationals => write!(f, "Q"),
            Coefficients::Prime(p) => write!(f, "GF({p})"),
            Coefficients::Integers => write!(f, "Z"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Homology in one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DimHomology {
    pub betti: usize,
    /// Torsion coefficients `> 1`, ascending. Always empty over a field.
    pub torsion: Vec<BigUint>,
}

impl DimHomology {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Reduced homology of a complex in dimensions `0..=dim`.
///
/// The empty complex `{∅}` has `H̃_{-1} = k`; it is flagged by
/// `empty_complex` and has no entries in `dims`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    pub coefficients: Coefficients,
    pub empty_complex: bool,
    pub dims: Vec<DimHomology>,
}

impl HomologySummary {
    pub fn betti(&self, d: usize) -> usize {
        self.dims.get(d).map_or(0, |h| h.betti)
    }

    pub fn torsion(&self, d: usize) -> &[BigUint] {
        self.dims.get(d).map_or(&[], |h| h.torsion.as_slice())
    }

    /// Reduced Betti numbers indexed from dimension `-1`.
    pub fn betti_from_minus_one(&self) -> Vec<usize> {
        let mut v = vec![usize::from(self.empty_complex)];
        v.extend(self.dims.iter().map(|h| h.betti));
        v
    }

    /// `Σ (-1)^i b̃_i`, including `i = -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti_from_minus_one()
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.dims.iter().all(|h| h.torsion.is_empty())
    }

    /// Dimensions (from `-1`) with nonzero homology.
    pub fn nonzero_dims(&self) -> Vec<isize> {
        let mut out = Vec::new();
        if self.empty_complex {
            out.push(-1);
        }
        for (d, h) in self.dims.iter().enumerate() {
            if !h.is_zero() {
                out.push(d as isize);
            }
        }
        out
    }

    /// Nonzero only in dimension `d` (which may be `-1`).
    pub fn concentrated_in(&self, d: isize) -> bool {
        self.nonzero_dims().iter().all(|&x| x == d)
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero_dims().is_empty()
    }
}

/// Boundary matrices `∂_i : C_i → C_{i-1}` for `i = 0..=dim`, rows indexed
/// by the sorted `(i-1)`-faces and columns by the sorted `i`-faces.
/// `∂_0` is the augmentation row mapping every vertex to the empty face.
pub fn boundary_matrices(c: &SimplicialComplex) -> Result<Vec<IntegerMatrix>, HomologyError> {
    let dim = c.dim().ok_or(ComplexError::Void)?;
    let mut out = Vec::new();
    for i in 0..=dim {
        let rows = c.face_count(i - 1);
        let cols = c.face_count(i);
        let mut m = IntegerMatrix::zeros(rows, cols);
        for (j, face) in c.faces(i).enumerate() {
            for (skip, _) in face.iter().enumerate() {
                let mut sub = face.to_vec();
                sub.remove(skip);
                let r = c.face_index(&sub).expect("closed under subsets");
                m.set(r, j, if skip % 2 == 0 { 1 } else { -1 });
            }
        }
        out.push(m);
    }
    Ok(out)
}

fn summary_from_ranks(
    coefficients: Coefficients,
    c: &SimplicialComplex,
    ranks: &[usize],
    torsion: Vec<Vec<BigUint>>,
) -> HomologySummary {
    // ranks[i] = rank ∂_i for i = 0..=dim; ∂_{dim+1} = 0.
    let dim = ranks.len() as isize - 1;
    let rank_at = |i: isize| if i >= 0 && i <= dim { ranks[i as usize] } else { 0 };
    let mut dims = Vec::new();
    let mut torsion = torsion.into_iter();
    for i in 0..=dim {
        let betti = c.face_count(i) - rank_at(i) - rank_at(i + 1);
        dims.push(DimHomology { betti, torsion: torsion.next().unwrap_or_default() });
    }
    let empty_complex = c.face_count(-1) - rank_at(0) == 1;
    HomologySummary { coefficients, empty_complex, dims }
}

/// Reduced Betti numbers over `Q` or `F_p` by exact rank computation.
pub fn betti(c: &SimplicialComplex, coefficients: Coefficients) -> Result<HomologySummary, HomologyError> {
    let mats = boundary_matrices(c)?;
    let ranks: Vec<usize> = match coefficients {
        Coefficients::Rationals => mats.iter().map(rank_rational).collect(),
        Coefficients::Prime(p) => {
            if !is_prime(p) {
                return Err(HomologyError::NotPrime(p));
            }
            mats.iter().map(|m| rank_mod_p(m, p)).collect()
        }
        Coefficients::Integers => return integral_homology(c),
    };
    Ok(summary_from_ranks(coefficients, c, &ranks, Vec::new()))
}

/// Integral reduced homology from Smith normal forms after shrinking the
/// chain complex.
pub fn integral_homology(c: &SimplicialComplex) -> Result<HomologySummary, HomologyError> {
    if c.is_void() {
        return Err(ComplexError::Void.into());
    }
    let mut chain = BoundaryComplex::from_complex(c);
    chain.reduce();
    Ok(chain.homology())
}

/// Integral reduced homology from Smith normal forms of the full boundary
/// matrices.
pub fn integral_homology_unreduced(c: &SimplicialComplex) -> Result<HomologySummary, HomologyError> {
    let mats = boundary_matrices(c)?;
    let snfs: Vec<SnfDecomposition> = mats.iter().map(smith_normal_form).collect();
    let ranks: Vec<usize> = snfs.iter().map(|s| s.rank).collect();
    // Torsion in dimension i comes from ∂_{i+1}.
    let torsion: Vec<Vec<BigUint>> = (0..snfs.len()).map(|i| snfs.get(i + 1).map_or_else(Vec::new, |s| s.torsion())).collect();
    Ok(summary_from_ranks(Coefficients::Integers, c, &ranks, torsion))
}

/// Reduced homology over any coefficients, read off from the shrunk
/// integral complex by the universal coefficient theorem.
pub fn homology_via_integers(c: &SimplicialComplex, coefficients: Coefficients) -> Result<HomologySummary, HomologyError> {
    if let Coefficients::Prime(p) = coefficients {
        if !is_prime(p) {
            return Err(HomologyError::NotPrime(p));
        }
    }
    let z = integral_homology(c)?;
    let divisible = |d: usize, p: u64| z.torsion(d).iter().filter(|t| (*t % p) == BigUint::ZERO).count();
    let dims = (0..z.dims.len())
        .map(|d| {
            let betti = match coefficients {
                Coefficients::Integers => return z.dims[d].clone(),
                Coefficients::Rationals => z.betti(d),
                Coefficients::Prime(p) => z.betti(d) + divisible(d, p) + if d > 0 { divisible(d - 1, p) } else { 0 },
            };
            DimHomology { betti, torsion: Vec::new() }
        })
        .collect();
    Ok(HomologySummary { coefficients, empty_complex: z.empty_complex, dims })
}

/// Reduced homology with the given coefficients.
pub fn homology(c: &SimplicialComplex, coefficients: Coefficients) -> Result<HomologySummary, HomologyError> {
    match coefficients {
        Coefficients::Integers => integral_homology(c),
        _ => betti(c, coefficients),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    pub(crate) fn rp2() -> SimplicialComplex {
        let facets: Vec<Vec<usize>> = [
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 6, 2],
            [2, 3, 5], [3, 4, 6], [4, 5, 2], [5, 6, 3], [6, 2, 4],
        ]
        .iter()
        .map(|f| f.iter().map(|v| v - 1).collect())
        .collect();
        SimplicialComplex::from_facets(labels(6), &facets).unwrap()
    }

    fn hexagon() -> SimplicialComplex {
        let facets: Vec<Vec<usize>> = (0..6).map(|i| vec![i, (i + 1) % 6]).collect();
        SimplicialComplex::from_facets(labels(6), &facets).unwrap()
    }

    #[test]
    fn edge_boundary() {
        let mats = boundary_matrices(&SimplicialComplex::simplex(2)).unwrap();
        assert_eq!(mats.len(), 2);
        assert_eq!(mats[0].to_i64_rows(), vec![vec![1, 1]]);
        assert_eq!(mats[1].to_i64_rows(), vec![vec![-1], vec![1]]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for c in [SimplicialComplex::simplex_boundary(4), rp2(), hexagon()] {
            let mats = boundary_matrices(&c).unwrap();
            for w in mats.windows(2) {
                assert!(w[0].mul(&w[1]).is_zero());
            }
        }
        let hex = boundary_matrices(&hexagon()).unwrap();
        assert_eq!((hex[1].rows(), hex[1].cols()), (6, 6));
        assert!((0..6).all(|j| (0..6).filter(|&i| hex[1].get_i64(i, j) != 0).count() == 2));
    }

    #[test]
    fn point_and_hexagon() {
        let pt = betti(&SimplicialComplex::simplex(1), Coefficients::Rationals).unwrap();
        assert!(pt.is_zero());
        let hex = betti(&hexagon(), Coefficients::Rationals).unwrap();
        assert_eq!(hex.nonzero_dims(), vec![1]);
        assert_eq!(hex.betti(1), 1);
    }

    #[test]
    fn projective_plane_by_coefficients() {
        let c = rp2();
        assert!(betti(&c, Coefficients::Rationals).unwrap().is_zero());
        let f2 = betti(&c, Coefficients::Prime(2)).unwrap();
        assert_eq!((f2.betti(1), f2.betti(2)), (1, 1));
        let z = integral_homology(&c).unwrap();
        assert_eq!(z.nonzero_dims(), vec![1]);
        assert_eq!(z.betti(1), 0);
        assert_eq!(z.torsion(1), &[BigUint::from(2u32)]);
        assert_eq!(integral_homology_unreduced(&c).unwrap(), z);
    }

    #[test]
    fn sphere_homology() {
        let s2 = integral_homology(&SimplicialComplex::simplex_boundary(4)).unwrap();
        assert_eq!(s2.nonzero_dims(), vec![2]);
        assert_eq!(s2.betti(2), 1);
        assert!(s2.is_torsion_free());
    }

    #[test]
    fn empty_complex_has_homology_in_minus_one() {
        let e = SimplicialComplex::empty();
        for coeffs in [Coefficients::Rationals, Coefficients::Prime(3), Coefficients::Integers] {
            let h = homology(&e, coeffs).unwrap();
            assert!(h.empty_complex);
            assert_eq!(h.nonzero_dims(), vec![-1]);
            assert_eq!(h.euler_characteristic(), -1);
        }
        assert_eq!(integral_homology_unreduced(&e).unwrap().nonzero_dims(), vec![-1]);
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(betti(&hexagon(), Coefficients::Prime(4)), Err(HomologyError::NotPrime(4)));
        assert_eq!(Coefficients::prime(4), Err(HomologyError::NotPrime(4)));
        assert!(Coefficients::prime(7).is_ok());
    }
}
