//! Exact arithmetic shared by the vertex algebra crates.
//!
//! [`Scalar`] is the coefficient type of every field and state: a rational
//! number, or a rational function in named formal parameters. [`UPoly`] covers
//! the univariate work (root isolation, factoring, resultants) and
//! [`linalg`] the exact elimination routines.

pub mod linalg;
pub mod mpoly;
pub mod ratfunc;
pub mod scalar;
pub mod upoly;
pub mod var;

pub use mpoly::{MPoly, Mono};
pub use ratfunc::RatFunc;
pub use scalar::{fmt_rational, parse_rational, Scalar};
pub use upoly::UPoly;
pub use var::Var;

pub type Q = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("specializing {var} = {value} annihilates the denominator {den}")]
    Pole { var: String, value: String, den: String },
    #[error("parse error: {0}")]
    Parse(String),
}

/// `n choose k` for any integer `n` (falling factorial over `k!`).
pub fn binomial(n: i64, k: u32) -> Q {
    let mut num = Q::from_integer(1.into());
    for i in 0..k as i64 {
        num = num * Q::from_integer((n - i).into()) / Q::from_integer((i + 1).into());
    }
    num
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Q {
    (1..=n as i64).fold(Q::from_integer(1.into()), |acc, i| acc * Q::from_integer(i.into()))
}

/// Build a rational from a numerator and denominator.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}
