//! Exact braid group representations on ground-state spaces of gapped
//! boundaries in twisted Dijkgraaf-Witten theories.
//!
//! A boundary is a monomial twisted Yetter-Drinfeld module over `(G, ω)`,
//! usually a Lagrangian module `L(H, γ)`. The space `Hom(1, X₁ ⊗ ⋯ ⊗ Xₙ)` has
//! a basis indexed by regular orbits of degree-e tuples, and the braid
//! generators act on it by monomial matrices.
//!
//! Exact cyclotomic arithmetic is generic over the coefficient field; the
//! aliases below fix the common choices.

pub mod braid;
pub mod cohomology;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod gset;
pub mod job;
pub mod lagrangian;
pub mod monomial;
pub mod oracle;
pub mod phase;

pub use braid::{
    braid_matrices, image_order, pure_braid_matrices, verify_braid_relations, BraidRep, ImageOrder,
    MonomialMatrix,
};
pub use cohomology::{check_three_cocycle, check_two_cochain, cyclic_cocycle, ThreeCocycle, TwoCochain};
pub use error::{Error, Result};
pub use group::{CosetData, FiniteGroup, Subgroup};
pub use gset::{CrossedGSet, GSet};
pub use lagrangian::{decoupled_basis, LagrangianData};
pub use monomial::{dimension, MonomialYD, OrbitOptions, OrbitTable, TensorProduct};
pub use oracle::brute_force_dimension;
pub use phase::Phase;

/// `Q(ζ_m)` over 64-bit rationals; overflows on large instances.
pub type CyclotomicField64 = cyclotomic::CyclotomicField<num_rational::Rational64>;
/// `Q(ζ_m)` over arbitrary-precision rationals.
pub type CyclotomicFieldBig = cyclotomic::CyclotomicField<num_rational::BigRational>;
pub type Cyclotomic64 = cyclotomic::Cyclotomic<num_rational::Rational64>;
pub type CyclotomicBig = cyclotomic::Cyclotomic<num_rational::BigRational>;
/// Dense complex matrices from [`MonomialMatrix::to_dense`].
pub type DenseMatrix64 = Vec<Vec<num_complex::Complex64>>;
