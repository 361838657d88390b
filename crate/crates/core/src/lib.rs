//! Exact integration of polynomials over rational simplices.
//!
//! All arithmetic is over arbitrary-precision rationals and integrals are
//! taken with respect to the integral Lebesgue measure of the simplex's
//! affine hull, so every result is an exact rational number.

pub mod arith;
pub mod bench;
pub mod clique;
pub mod error;
pub mod integrate;
pub mod lattice;
pub mod polynomial;
pub mod random;
pub mod request;
pub mod series;
pub mod simplex;

pub use arith::{format_rational, parse_rational, Rational};
pub use error::{Error, Result};
pub use integrate::{integrate, IntegrationConfig, MethodChoice, PolynomialInput};
pub use polynomial::{LinearForm, Monomial, SlpExpression, SparsePolynomial};
pub use series::TruncatedSeries;
pub use simplex::Simplex;
