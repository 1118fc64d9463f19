//! Truncated Taylor series ("jets") and the built-in derivative oracles.

mod analytic;
mod jet;
pub mod oracle;

pub use analytic::{Analytic, Coefficient};
pub use jet::{evaluate, Jet};
pub use oracle::{jet_of, OracleId};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum JetError {
    #[error("jet has no coefficients")]
    Empty,
    #[error("derivative order {requested} exceeds jet order {order}")]
    Order { requested: usize, order: usize },
    #[error("jets have different expansion points or orders")]
    Mismatch,
    #[error("division by a jet with zero constant term")]
    DivisionByZero,
    #[error("inadmissible point: {0}")]
    Inadmissible(String),
}
