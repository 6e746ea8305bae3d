//! Exact p-Bernoulli numbers and polynomials, geometric polynomials, Stirling
//! triangles, and a verifier that checks the identities linking them over
//! parameter grids.
//!
//! All arithmetic is exact: scalars are arbitrary-precision rationals and
//! polynomials are dense coefficient vectors over them. Nothing here ever
//! rounds, so two sides of an identity either agree coefficient for
//! coefficient or the verifier reports where they do not.
//!
//! ```
//! use pbern_core::sequences::{PBernoulliKey, Route, Sequences};
//! use pbern_core::exact::Rational;
//!
//! let s = Sequences::new();
//! let b = s.p_bernoulli_number(PBernoulliKey::new(1, 3), Route::Recurrence).unwrap();
//! assert_eq!(b, Rational::frac(-1, 5));
//! ```

pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod identities;
pub mod sequences;

pub use error::{Error, Result};
