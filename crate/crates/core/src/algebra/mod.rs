//! The coefficient field `Q(q,t)`: integer polynomials, reduced fractions,
//! substitutions, and linear solving.

mod heugcd;
mod linsolve;
mod mpoly;
mod parse;
mod ratfunc;
mod upoly;

pub use linsolve::{invert_matrix, solve_square, LinearSystem, Solution};
pub use mpoly::{grlex_cmp, Exponent, MPoly};
pub use parse::parse_ratfunc;
pub use ratfunc::{RatFunc, Substitution};
pub use upoly::UPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("denominator vanishes under substitution")]
    DenominatorVanishes,
    #[error("pole at evaluation point")]
    Pole,
    #[error("ambiguous system")]
    Ambiguous,
    #[error("parse error: {0}")]
    Parse(String),
}
