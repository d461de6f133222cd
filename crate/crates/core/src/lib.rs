//! Finite poset and simplicial-complex topology.
//!
//! The crate covers four layers that build on each other:
//!
//! * [`poset`]: finite posets stored by their cover relation, ranks,
//!   intervals, Möbius function, duality and isomorphism search.
//! * [`constructions`]: products, (weighted) Segre products, Rees products,
//!   rank selection and the named families used in the reproduction suite
//!   (Boolean lattices, chains, minors, subword posets, fiber ideals).
//! * [`simplicial`] and [`homology`]: order complexes, face posets, type
//!   selection, complex Segre products, and exact reduced homology over
//!   `Q`, `F_p` and `Z` (Smith normal form on arbitrary-precision integers).
//! * [`cm`], [`semigroup`] and [`enumerative`]: Cohen-Macaulay decision
//!   procedures, the interval criterion for Koszul affine semigroup rings,
//!   and the permutation statistics behind the Möbius identities.
//!
//! The crate is `no_std` (it needs `alloc`). The `parallel` feature pulls in
//! `std` and `rayon` and evaluates independent interval checks concurrently.
#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

mod bitset;
mod par;

pub mod cm;
pub mod constructions;
pub mod enumerative;
pub mod homology;
pub mod poset;
pub mod semigroup;
pub mod simplicial;

pub use bitset::BitSet;
pub use cm::{is_cm_complex, is_cm_poset, CmCoefficients, CmReport};
pub use homology::{Coefficients, HomologySummary, IntegerMatrix, SnfDecomposition};
pub use poset::{Poset, PosetError, PosetMap, RankInfo};
pub use simplicial::{Coloring, SimplicialComplex};
