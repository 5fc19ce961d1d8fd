//! Exact symbolic computation for grid-based transseries: formal asymptotic
//! series built from `x`, `exp` and `log` with coefficients in the ordered
//! field of fractions over the rational span of `{e^q}`.
//!
//! The crate provides
//!
//! - the coefficient field with decidable sign ([`coeff`]),
//! - transmonomials as recursive trees and finite transseries with their
//!   total asymptotic order and canonical decompositions ([`mono`], [`series`]),
//! - differentiation and the exp/log/power/reciprocal term streams under an
//!   explicit working-precision budget ([`calculus`]),
//! - right-composition, compositional inversion, exponentiality, the Taylor
//!   remainder operators and compositional equation solving ([`compose`]),
//! - a deterministic parser and canonical printer ([`syntax`]),
//! - seeded property suites used by the command line `selftest` ([`selftest`]).

pub mod calculus;
pub mod coeff;
pub mod compose;
pub mod error;
pub mod mono;
pub mod selftest;
pub mod series;
pub mod stream;
pub mod syntax;

pub use coeff::{Coeff, Rational};
pub use error::{Error, Result};
pub use mono::Monomial;
pub use series::{Budget, Transseries};
