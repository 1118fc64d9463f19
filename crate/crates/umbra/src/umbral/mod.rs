//! The umbral engine: moment substitution for Laurent polynomials in B and
//! Ramanujan summation for analytic f(B + a).

mod em;
mod moments;
mod poly;
mod sum;

pub use em::{sum_convergent, EmSum};
pub use moments::{moment_value, MomentTable, Symbol};
pub use poly::{derivative, eval_poly, umbral_polynomial, umbral_polynomial_exact, UmbralExpr};
pub use sum::{moment_line, ramanujan_sum, ConvergenceClass, Method, Mode, SumConfig, UmbralResult};

use crate::bernoulli::BernoulliError;
use crate::jets::JetError;
use crate::numerics::NumericsError;
use crate::special::SpecialError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum UmbralError {
    #[error("unknown umbral symbol: {0}")]
    UnknownSymbol(String),
    #[error("oracle has poles on summation lattice: {0}")]
    LatticePole(String),
    #[error("not Ramanujan-summable in this mode: {0}")]
    NotSummable(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Bernoulli(#[from] BernoulliError),
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}
