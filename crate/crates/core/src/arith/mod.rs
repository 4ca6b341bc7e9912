//! Exact scalars: rationals and elements of cyclotomic fields.

mod cyclo;
mod rational;
mod scalar;

pub use cyclo::{CycloElem, CycloField};
pub(crate) use rational::{ceil_i64, factorial, pow_i};
pub use rational::{int, parse_rational, rat, Rational};
pub use scalar::Scalar;
