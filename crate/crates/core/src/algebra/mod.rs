//! Exact polynomial arithmetic and Groebner bases.

mod bucket;
pub mod field;
pub mod groebner;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod ring;

pub use field::{Field, FieldElement, Fp, Rat};
pub use groebner::{
    buchberger, buchberger_with_deadline, divide_with_remainder, is_groebner_basis, s_polynomial, GroebnerBasis,
};
pub use monomial::{Monomial, MAX_VARS};
pub use order::{MonomialOrder, TermOrder};
pub use poly::Polynomial;
pub use ring::{Ambient, Flavor, Ring, Var};
