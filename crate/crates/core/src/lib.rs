//! Exact symbolic construction of braid-group representations from the
//! ribbon braiding on quantum-group module categories.
//!
//! Given a Lie type, a rank, and a dominant highest weight, this crate
//! builds the braiding operator on the tensor square of the corresponding
//! simple module as a signed, weighted sum of isotypic projectors, lifts it
//! to generator images on higher tensor powers, and certifies every
//! categorical identity (Yang-Baxter, braid relations, intertwiner,
//! eigenvalue laws) as an exact identity over the fraction field of
//! Laurent polynomials in a fixed root of `q`.
//!
//! Module map:
//! - [`cartan`]: Cartan matrices, weight-lattice inner products, Weyl
//!   vector, Casimir eigenvalues for types A, B, D.
//! - [`qarith`]: exact Laurent-polynomial fraction field in `s = q^(1/D)`,
//!   q-integers, truncated series at `q = e^h`.
//! - [`matrix`]: dense matrices over any exact field scalar.
//! - [`qmodule`]: explicit finite-dimensional quantum-group modules,
//!   tensor products, relation verification, file format.
//! - [`fusion`]: tensor-square decompositions and isotypic projectors.
//! - [`ribbon`]: twist scalars, braiding spectra, assembly of the
//!   braiding operator.
//! - [`braid`]: braid words, representations on tensor powers,
//!   Yang-Baxter and braid-relation certification.
//! - [`classical`]: the classical sl2 shadow — Casimir 2-tensor,
//!   infinitesimal braid relations, first-order expansion checks.

pub mod braid;
pub mod cartan;
pub mod classical;
pub mod error;
pub mod fusion;
pub mod matrix;
pub mod qarith;
pub mod qmodule;
pub mod ribbon;

pub use error::{Error, Result};

/// Arbitrary-precision rational scalar used throughout.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for a rational from an integer pair.
pub fn rat(n: i64, d: i64) -> Rat {
    use num_bigint::BigInt;
    Rat::new(BigInt::from(n), BigInt::from(d))
}
