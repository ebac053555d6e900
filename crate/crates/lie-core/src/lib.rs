//! Exact arithmetic for finitely presented graded Lie algebras and their
//! truncated enveloping algebras.
//!
//! The building blocks:
//!
//! * [`scalar::Scalar`] — the coefficient abstraction. Exact rationals
//!   ([`num::BigRational`]) drive all structural computations (bases,
//!   quotients, relation checks); `Complex64` is used downstream for analytic
//!   evaluations. The two are never mixed inside one element.
//! * [`free::FreeLie`] — a free Lie algebra on a weighted alphabet, with its
//!   Lyndon-word basis per degree and exact bracket computation.
//! * [`quotient::LiePresentation`] / [`quotient::QuotientLie`] — a quotient of
//!   a free Lie algebra by homogeneous relations, with canonical normal forms
//!   obtained by exact row reduction of the relation ideal per degree.
//! * [`families`] — the presentations used throughout this workspace: the
//!   Lie algebras of the elliptic braid groups on `n` strands (and their
//!   reduced versions), the horizontal chord diagram algebras, and the two
//!   alternative elliptic presentations related by partial-sum generators.
//! * [`derivation::Derivation`] — degree-homogeneous derivations given on
//!   generators, with exact well-definedness checks against the relations.
//! * [`envelope::Envelope`] — the degree-truncated universal enveloping
//!   algebra with its Poincaré–Birkhoff–Witt monomial basis, products by
//!   straightening, `exp`/`log`, and group-like elements.
//! * [`morphism::LieMorphism`] — maps defined on generators (strand cabling,
//!   permutations, substitutions) together with induced envelope maps.

pub mod derivation;
pub mod envelope;
pub mod error;
pub mod families;
pub mod free;
pub mod lyndon;
pub mod morphism;
pub mod quotient;
pub mod scalar;

pub use derivation::Derivation;
pub use envelope::{EnvElement, Envelope, GroupLike};
pub use error::LieError;
pub use free::{FreeLie, LieElement};
pub use lyndon::{Alphabet, lyndon_words_by_degree, witt_dimensions};
pub use morphism::{cabling, permutation, LieMorphism};
pub use quotient::{LiePresentation, QuotientLie};
pub use scalar::{Q, Scalar};

/// Convenience alias used by downstream crates.
pub type C64 = num_complex::Complex64;
