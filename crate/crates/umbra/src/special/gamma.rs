//! Gauss's Π(s) = Γ(s + 1): log Π and Π′/Π via the Stirling series after an
//! upward shift.

use super::SpecialError;
use crate::bernoulli;
use crate::jets::Analytic;
use crate::numerics::{precision, Complex, Real};

fn stirling_threshold() -> f64 {
    (0.45 * (precision::digits() as f64 + 10.0)).max(12.0)
}

fn check_pole(w: &Complex, what: &str) -> Result<(), SpecialError> {
    if w.im.is_zero() && w.re.signum() <= 0 {
        let (_, dist) = w.re.nearest_integer();
        if dist.to_f64() < 1e-25 {
            return Err(SpecialError::Pole(format!(
                "{what} has a pole at {}",
                w.re.to_string_digits(6)
            )));
        }
    }
    Ok(())
}

fn shift_for(w: &Complex) -> usize {
    let th = stirling_threshold();
    let re = w.re.to_f64();
    let im = w.im.to_f64().abs();
    if re >= th || im >= 2.0 * th {
        0
    } else {
        (th - re).ceil().max(0.0) as usize
    }
}

/// log Γ(w), continued from the positive axis (sum of logarithms on shift).
pub fn log_gamma_generic<T: Analytic>(w: &T) -> Result<T, SpecialError> {
    let wv = w.value();
    check_pole(&wv, "Γ")?;
    let m = shift_for(&wv);
    let mut correction = w.real_like(&Real::zero());
    for j in 0..m {
        correction = correction + w.add_real(&Real::from_u64(j as u64)).ln()?;
    }
    let z = w.add_real(&Real::from_u64(m as u64));
    let lz = z.ln()?;
    let half = Real::ratio(1, 2);
    let ln2pi = (Real::pi() * Real::from_i64(2)).ln();
    let mut acc = z.add_real(&-half.clone()) * lz - z.clone() + z.real_like(&(ln2pi * &half));
    let scaled = bernoulli::scaled_moments();
    let inv = z.recip()?;
    let inv2 = inv.square();
    let mut pw = inv;
    let target = 10f64.powi(-(precision::digits() as i32) - 8);
    let mut prev = f64::INFINITY;
    let mut k = 1usize;
    // B_{2k}/(2k(2k−1)) = (2k−2)! · B_{2k}/(2k)!
    let mut fact = Real::one();
    while 2 * k < scaled.len() {
        let coef = &scaled[2 * k] * &fact;
        let term = pw.scale(&coef);
        let mag = term.magnitude();
        if mag > prev {
            break;
        }
        acc = acc + term;
        if mag < target * acc.magnitude().max(1.0) {
            break;
        }
        prev = mag;
        fact *= Real::from_u64(((2 * k - 1) * (2 * k)) as u64);
        pw = pw * inv2.clone();
        k += 1;
    }
    Ok(acc - correction)
}

/// ψ(w) = Γ′(w)/Γ(w).
pub fn digamma_generic<T: Analytic>(w: &T) -> Result<T, SpecialError> {
    let wv = w.value();
    check_pole(&wv, "ψ")?;
    let m = shift_for(&wv);
    let mut correction = w.real_like(&Real::zero());
    for j in 0..m {
        correction = correction + w.add_real(&Real::from_u64(j as u64)).recip()?;
    }
    let z = w.add_real(&Real::from_u64(m as u64));
    let inv = z.recip()?;
    let mut acc = z.ln()? - inv.scale(&Real::ratio(1, 2));
    let scaled = bernoulli::scaled_moments();
    let inv2 = inv.square();
    let mut pw = inv2.clone();
    let target = 10f64.powi(-(precision::digits() as i32) - 8);
    let mut prev = f64::INFINITY;
    // B_{2k}/(2k) = (2k−1)! · B_{2k}/(2k)!
    let mut fact = Real::one();
    let mut k = 1usize;
    while 2 * k < scaled.len() {
        let coef = &scaled[2 * k] * &fact;
        let term = pw.scale(&coef);
        let mag = term.magnitude();
        if mag > prev {
            break;
        }
        acc = acc - term;
        if mag < target * acc.magnitude().max(1.0) {
            break;
        }
        prev = mag;
        fact *= Real::from_u64((2 * k * (2 * k + 1)) as u64);
        pw = pw * inv2.clone();
        k += 1;
    }
    Ok(acc - correction)
}

/// log Π(s) = log Γ(s + 1).
pub fn log_gamma_pi_generic<T: Analytic>(s: &T) -> Result<T, SpecialError> {
    log_gamma_generic(&s.add_real(&Real::one()))
}

/// Π′(s)/Π(s) = ψ(s + 1).
pub fn digamma_pi_generic<T: Analytic>(s: &T) -> Result<T, SpecialError> {
    digamma_generic(&s.add_real(&Real::one()))
}

pub fn log_gamma_pi(s: &Complex) -> Result<Complex, SpecialError> {
    log_gamma_pi_generic(s)
}

pub fn digamma_pi(s: &Complex) -> Result<Complex, SpecialError> {
    digamma_pi_generic(s)
}
