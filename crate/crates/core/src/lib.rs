//! Exact-arithmetic cohomology of tautological bundles on permutohedral
//! toric varieties.
//!
//! Given a realization L ⊆ k^E of a matroid, the library computes sheaf
//! cohomology of bundles built from the tautological sub and quotient bundles
//! on the permutohedral toric variety of E — by torus-weight decomposition and
//! exact Čech complexes — together with the generating-function identities,
//! fan/fiber combinatorics, a ℙ¹ restriction model, and the corollaries for
//! wonderful compactifications that those computations verify.
//!
//! Everything is exact: ℚ or a prime field, never floats.

#![warn(missing_docs)]

pub mod bundle;
pub mod cech;
pub mod combinat;
pub mod corpus;
pub mod error;
pub mod fan;
pub mod gf;
pub mod matrix;
pub mod matroid;
pub mod p1;
pub mod report;
pub mod suites;
pub mod wonderful;
pub mod scalar;

pub use error::{CoreError, Result};
