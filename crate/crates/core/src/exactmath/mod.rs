//! Exact rational arithmetic in one formal variable.
//!
//! Everything downstream (face-number formulas, the invariant algorithms,
//! root extraction) works over `Q[m]` and `Q(m)` with arbitrary-precision
//! coefficients, so constancy of a rational function and rationality of a
//! root are decided exactly rather than up to a tolerance.

mod poly;
mod ratfun;
mod rational;
mod roots;

pub use poly::Poly;
pub use ratfun::RationalFunction;
pub use rational::{
    binomial, fmt_rational, int, parse_rational, rat, rational_to_f64, Integer, Rational,
};
pub use roots::{rational_roots, simplest_rational_between, RootSet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("division leaves a nonzero remainder")]
    NonZeroRemainder,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("rational function is not constant")]
    NotConstant,
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}
