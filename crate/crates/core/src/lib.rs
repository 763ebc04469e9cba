//! Exact Groebner-basis computations for matrix Schubert ideals.
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`]: fields, monomials, term orders, polynomials, Buchberger.
//! * [`ideal`]: ideals with cached bases, monomial ideals, sums,
//!   intersections, quotients and elimination.
//! * [`comb`]: partial permutations, involutions and their rank tables,
//!   dominant components and Bruhat covers.
//! * [`families`]: point, minor and antidiagonal ideals and orbit closures.
//! * [`transition`]: transition systems, their axiom checker and the
//!   transition-forest builder.
//! * [`cli`]: the batch front end behind the `msv` binary.

pub mod algebra;
pub mod cli;
pub mod comb;
pub mod error;
pub mod families;
pub mod ideal;
pub mod transition;

pub use error::{Error, Result};
