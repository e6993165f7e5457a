//! Exact invariants of Seifert links and of their cyclic branched covers.
//!
//! * [`link`]: the parametric notation and its canonical form,
//! * [`laurent`]: integer Laurent polynomials,
//! * [`alexander`]: Alexander polynomials, determinants and genera,
//! * [`classify`]: fibredness, positivity, definiteness, ADE type and related predicates,
//! * [`orbifold`]: base orbifolds and finite fundamental groups of cyclic covers,
//! * [`cover`]: left-orderability of cyclic branched covers,
//! * [`cli`]: the parser, reports and tables behind the `seifert` binary.

pub mod alexander;
pub mod classify;
pub mod cli;
pub mod cover;
pub mod error;
pub mod exact;
pub mod laurent;
pub mod link;
pub mod orbifold;

pub use error::{Error, Result};
pub use exact::Rational;
pub use laurent::LaurentPoly;
pub use link::{RawSeifertLink, SeifertLink, Shape, Sign};
