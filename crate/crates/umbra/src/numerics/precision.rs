//! Process-wide working precision.
//!
//! `P` is measured in decimal digits. Every [`Real`](super::Real) is created
//! at the binary precision derived from the current `P`, so changing it
//! between computations is fine but changing it *during* one is not.

use std::cell::Cell;
use std::sync::atomic::{AtomicU32, Ordering};

use super::NumericsError;

pub const DEFAULT_DIGITS: u32 = 30;
pub const MIN_DIGITS: u32 = 15;
pub const MAX_DIGITS: u32 = 100;

/// Extra binary digits carried beyond `P`.
pub const GUARD_BITS: u32 = 24;

static DIGITS: AtomicU32 = AtomicU32::new(DEFAULT_DIGITS);

thread_local! {
    static LOCAL: Cell<Option<u32>> = const { Cell::new(None) };
}

pub fn digits() -> u32 {
    LOCAL
        .with(|l| l.get())
        .unwrap_or_else(|| DIGITS.load(Ordering::Relaxed))
}

pub fn set_digits(p: u32) -> Result<(), NumericsError> {
    if !(MIN_DIGITS..=MAX_DIGITS).contains(&p) {
        return Err(NumericsError::Precision(p));
    }
    DIGITS.store(p, Ordering::Relaxed);
    Ok(())
}

/// Binary precision used for every MPFR value.
pub fn bits() -> u32 {
    bits_for(digits())
}

pub fn bits_for(p: u32) -> u32 {
    // log2(10) = 3.3219...
    (f64::from(p) * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
}

/// 10^{-P}: the nominal accuracy of one working-precision result.
pub fn epsilon() -> f64 {
    10f64.powi(-(digits() as i32))
}

/// Runs `f` at precision `p` on the calling thread only; other threads
/// (including rayon workers spawned inside `f`) keep the global setting.
pub fn with_digits<R>(p: u32, f: impl FnOnce() -> R) -> Result<R, NumericsError> {
    if !(MIN_DIGITS..=MAX_DIGITS).contains(&p) {
        return Err(NumericsError::Precision(p));
    }
    let old = LOCAL.with(|l| l.replace(Some(p)));
    let r = f();
    LOCAL.with(|l| l.set(old));
    Ok(r)
}
