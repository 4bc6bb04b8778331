//! Generalized Hermitian algebraic-geometry codes over GF(2^r).
//!
//! The crate covers the whole chain from field arithmetic to code
//! parameters:
//!
//! - [`gf`]: GF(2^r) in a polynomial basis.
//! - [`semigroup`]: numerical and telescopic semigroups, Feng-Rao bounds.
//! - [`curve`]: rational points and the monomial basis of `L(sQ)`.
//! - [`linalg`]: dense matrices over GF(2^r).
//! - [`codes`]: the codes `GH_s`, their duals and designed distances.
//! - [`distance`]: exhaustive minimum-distance search.
//! - [`tables`]: the GF(8) parameter tables.

pub mod codes;
pub mod curve;
pub mod distance;
pub mod gf;
pub mod linalg;
pub mod semigroup;
pub mod tables;

pub use codes::{CodeError, CodeFamily, CodeReport, GhCode};
pub use curve::{AffinePoint, GhCurve, MonomialExponent};
pub use distance::{exact_min_distance, DistanceResult, Method, SearchOptions};
pub use gf::{FieldElement, FieldError, GaloisField};
pub use linalg::CodeMatrix;
pub use semigroup::{NonGapSequence, NumericalSemigroup, TelescopicSemigroup};
