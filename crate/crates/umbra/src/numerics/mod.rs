//! Working-precision arithmetic, quadrature and series acceleration.

pub mod accel;
mod complex;
pub mod precision;
pub mod pv;
pub mod quad;
mod real;
pub mod roots;
mod scalar;

pub use accel::{accelerate_alternating, alternating_terms_for, extrapolate_to_zero, richardson_powers, Accelerated};
pub use complex::Complex;
pub use pv::{principal_value_pair, LeftEnd, PvResult, PvSchedule};
pub use quad::{integrate, Domain, QuadResult, Quadrature, SemiInfinite};
pub use real::Real;
pub use roots::{find_sign_changes, refine_bracket};
pub use scalar::{Scalar, Vector};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericsError {
    #[error("precision {0} outside the supported range 15..=100 digits")]
    Precision(u32),
    #[error("non-finite value: {0}")]
    NonFinite(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("acceleration failed: {0}")]
    Acceleration(String),
    #[error("divergent: {0}")]
    Divergent(String),
}
