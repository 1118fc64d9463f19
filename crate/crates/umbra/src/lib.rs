//! Bernoulli-operator calculus.
//!
//! An expression in the operator `B` is evaluated either by expanding it as a
//! (Laurent) polynomial and substituting moments `B^n ↦ B_n` once, or — for
//! analytic `f` — by Ramanujan summation
//! `f(B + a) = f(N + a + B) − Σ_{k≤N} f′(k + a)` with an Euler–Maclaurin
//! expansion of the shifted term.
//!
//! Everything runs at a process-wide precision, see [`numerics::precision`].

// `!(x > 0.0)` is used on purpose to reject NaN alongside bad values;
// index loops mirror the recurrences they implement.
#![allow(
    clippy::neg_cmp_op_on_partial_ord,
    clippy::needless_range_loop,
    clippy::type_complexity
)]

pub mod bernoulli;
pub mod catalogue;
pub mod explicit;
pub mod jets;
pub mod numerics;
pub mod par;
pub mod special;
pub mod umbral;
pub mod xi;

pub use numerics::{Complex, Real};
pub use rug::Rational;
