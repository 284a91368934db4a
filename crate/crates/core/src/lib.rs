//! Exact computations with degree-0 complete Lie algebras and their
//! realizations.
//!
//! - [`freelie`]: free Lie algebras truncated at a weight cap, in the Lyndon
//!   basis, with a small expression language ([`expr`]).
//! - [`bch`]: the Baker–Campbell–Hausdorff product as a universal table,
//!   an independent associative-series oracle, and the Bernoulli operator
//!   `ad_x / (e^{ad_x} - 1)`.
//! - [`algebra`] and [`structure`]: the [`LieAlgebra`](algebra::LieAlgebra)
//!   interface with free, abelian and structure-constant implementations.
//! - [`simplicial`]: simplicial sets, the bar construction `B•G` and an
//!   identity checker.
//! - [`realization`]: the cosimplicial generators `a_{i0..ip}`, the
//!   realization `Hom(L•, L)` in tuple form, and the map `Ψ` onto
//!   `B•(exp L)` together with a randomized isomorphism check.
//!
//! All arithmetic is exact over the rationals.

pub mod algebra;
pub mod assoc;
pub mod bch;
pub mod cli;
pub mod expr;
pub mod freelie;
pub mod rational;
pub mod realization;
pub mod sample;
pub mod simplicial;
pub mod structure;

pub use algebra::{Abelian, Coords, FreeNilpotent, LieAlgebra};
pub use bch::{
    assoc_oracle, bch_inverse, bch_product, bernoulli_operator, exp_difference_operator,
    universal_bch, ExpGroup, UniversalBchTable,
};
pub use freelie::{lyndon_words, Alphabet, FreeLieContext, LieElement, LyndonWord};
pub use rational::Rational;
pub use realization::{verify_iso, HomSimplex, IsoConfig, IsoReport, Realization};
pub use simplicial::{
    bar_degeneracy, bar_face, check_simplicial_identities, BarConstruction, BarSimplex, Group,
    SimplicialSet,
};
pub use structure::StructureConstants;
