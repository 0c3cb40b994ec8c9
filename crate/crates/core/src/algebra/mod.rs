//! Exact rational scalars, sparse multivariate polynomials and rational
//! functions.

mod gcd;
mod modp;
mod monomial;
mod parse;
mod poly;
mod prs;
mod rational_function;
mod ring;

use thiserror::Error;

pub use gcd::{poly_gcd, poly_gcd_many};
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use prs::gcd_prs;
pub use rational_function::{substitute, RationalFunction};
pub use ring::{Ring, VarKind};

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("polynomials live over different variable lists")]
    RingMismatch,
    #[error("not divisible; obstructing remainder term {0}")]
    NotDivisible(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator is identically zero")]
    ZeroDenominator,
    #[error("missing value for {0}")]
    MissingAssignment(String),
    #[error("polynomial is not homogeneous in the projective variables")]
    NotHomogeneous,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("invalid variable name {0:?}")]
    BadVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expression budget exceeded: {0}")]
    BudgetExceeded(String),
}

/// Shorthand for a rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `n / d` as a reduced rational.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
