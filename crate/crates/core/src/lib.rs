//! Computational commutative algebra over prime fields: Gröbner bases,
//! ideal calculus, Rees algebras and analytic spreads of ideals and
//! truncated filtrations, symbolic powers, and fat-point linear systems in
//! the projective plane.

pub mod error;
pub mod fatpoints;
pub mod field;
pub mod filtration;
pub mod groebner;
pub mod ideal;
pub mod ideal_ops;
pub mod linalg;
pub mod monomial;
pub mod newton;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField, DEFAULT_PRIME};
pub use groebner::{groebner_basis, normal_form, GroebnerBasis};
pub use ideal::{ideal_equal, Ideal};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_poly, parse_poly_list};
pub use poly::{poly_arith, ArithOp, Homogeneity, Polynomial};
pub use ring::{Ring, RingRef};

/// Exact rationals used for polyhedral feasibility.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals, adequate for small polyhedral systems.
pub type Rational64 = num_rational::Rational64;
