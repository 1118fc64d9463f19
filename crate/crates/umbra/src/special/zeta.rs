//! Hurwitz ζ by Euler–Maclaurin, generic over [`Analytic`] so derivatives in
//! either argument come out of the same code as jets.

use super::SpecialError;
use crate::bernoulli;
use crate::jets::Analytic;
use crate::numerics::{precision, Complex, Real};

/// Pieces of the Euler–Maclaurin sum for ζ(s, a):
/// ζ(s, a) = `regular` + `w1s` / (s − 1), with w1s = (n₀ + a)^{1−s}.
pub(crate) struct EmParts<T> {
    pub regular: T,
    pub w1s: T,
}

pub(crate) fn cutoff(s: &Complex) -> usize {
    let p = precision::digits() as f64;
    let m = s.abs().to_f64();
    (10.0f64).max(m.ceil() + p) as usize
}

pub(crate) fn hurwitz_parts<T: Analytic>(s: &T, a: &T) -> Result<EmParts<T>, SpecialError> {
    let av = a.value();
    if !av.im.is_zero() || av.re.signum() <= 0 {
        return Err(SpecialError::Domain(format!(
            "Hurwitz parameter must be a positive real, got {}",
            av.to_string_digits(8)
        )));
    }
    let sv = s.value();
    let n0 = cutoff(&sv);
    let neg_s = -s.clone();
    let mut regular = s.real_like(&Real::zero());
    for n in 0..n0 {
        let base = a.add_real(&Real::from_u64(n as u64));
        regular = regular + (neg_s.clone() * base.ln()?).exp();
    }
    let w = a.add_real(&Real::from_u64(n0 as u64));
    let lw = w.ln()?;
    let w_ms = (neg_s.clone() * lw).exp();
    let w1s = w_ms.clone() * w.clone();
    regular = regular + w_ms.scale(&Real::ratio(1, 2));

    let scaled = bernoulli::scaled_moments();
    let inv_w = w.recip()?;
    let inv_w2 = inv_w.square();
    let mut base = w_ms * inv_w;
    let mut poch = s.clone();
    let target = 10f64.powi(-(precision::digits() as i32) - 8);
    let mut prev = f64::INFINITY;
    let mut k = 1usize;
    while 2 * k < scaled.len() {
        let term = (base.clone() * poch.clone()).scale(&scaled[2 * k]);
        let mag = term.magnitude();
        if mag > prev {
            // asymptotic tail started growing; stop before it hurts
            break;
        }
        regular = regular + term;
        let scale = regular.magnitude().max(1e-300);
        if mag <= target * scale {
            break;
        }
        prev = mag;
        let two_k = Real::from_u64(2 * k as u64);
        poch = poch.clone() * s.add_real(&(&two_k - &Real::one())) * s.add_real(&two_k);
        base = base * inv_w2.clone();
        k += 1;
    }
    Ok(EmParts { regular, w1s })
}

/// ∂ζ(s, a)/∂s by differentiating the Euler–Maclaurin form term by term.
pub fn hurwitz_ds_generic<T: Analytic>(s: &T, a: &T) -> Result<T, SpecialError> {
    if is_one(&s.value()) {
        return Err(SpecialError::Pole("ζ′(s, a) has a pole at s = 1".into()));
    }
    let av = a.value();
    if !av.im.is_zero() || av.re.signum() <= 0 {
        return Err(SpecialError::Domain(format!(
            "Hurwitz parameter must be a positive real, got {}",
            av.to_string_digits(8)
        )));
    }
    let n0 = cutoff(&s.value());
    let neg_s = -s.clone();
    let mut acc = s.real_like(&Real::zero());
    for n in 0..n0 {
        let base = a.add_real(&Real::from_u64(n as u64));
        let l = base.ln()?;
        acc = acc - (neg_s.clone() * l.clone()).exp() * l;
    }
    let w = a.add_real(&Real::from_u64(n0 as u64));
    let lw = w.ln()?;
    let w_ms = (neg_s.clone() * lw.clone()).exp();
    let w1s = w_ms.clone() * w.clone();
    let inv_sm1 = s.add_real(&-Real::one()).recip()?;
    // d/ds [w^{1−s}/(s−1)] and d/ds [w^{−s}/2]
    acc = acc - (lw.clone() * w1s.clone() * inv_sm1.clone()) - w1s * inv_sm1.square();
    acc = acc - (w_ms.clone() * lw.clone()).scale(&Real::ratio(1, 2));

    let scaled = bernoulli::scaled_moments();
    let inv_w = w.recip()?;
    let inv_w2 = inv_w.square();
    let mut base = w_ms * inv_w;
    let mut poch = s.clone();
    let mut dpoch = s.real_like(&Real::one());
    let target = 10f64.powi(-(precision::digits() as i32) - 8);
    let mut prev = f64::INFINITY;
    let mut k = 1usize;
    while 2 * k < scaled.len() {
        // d/ds [poch · w^{−s−2k+1}] = (dpoch − poch·log w) w^{…}
        let term = ((dpoch.clone() - poch.clone() * lw.clone()) * base.clone()).scale(&scaled[2 * k]);
        let mag = term.magnitude();
        if mag > prev {
            break;
        }
        acc = acc + term;
        if mag <= target * acc.magnitude().max(1e-300) {
            break;
        }
        prev = mag;
        let two_k = Real::from_u64(2 * k as u64);
        let q1 = s.add_real(&(&two_k - &Real::one()));
        let q2 = s.add_real(&two_k);
        dpoch = dpoch * q1.clone() * q2.clone() + poch.clone() * (q1.clone() + q2.clone());
        poch = poch * q1 * q2;
        base = base * inv_w2.clone();
        k += 1;
    }
    Ok(acc)
}

/// ζ′(s).
pub fn zeta_derivative_generic<T: Analytic>(s: &T) -> Result<T, SpecialError> {
    hurwitz_ds_generic(s, &s.real_like(&Real::one()))
}

fn is_one(s: &Complex) -> bool {
    s.im.is_zero() && (&s.re - &Real::one()).is_zero()
}

/// ζ(s, a) for any analytic value type.
pub fn hurwitz_generic<T: Analytic>(s: &T, a: &T) -> Result<T, SpecialError> {
    if is_one(&s.value()) {
        return Err(SpecialError::Pole("ζ(s, a) has a pole at s = 1".into()));
    }
    let parts = hurwitz_parts(s, a)?;
    let sm1 = s.add_real(&-Real::one());
    Ok(parts.regular + parts.w1s * sm1.recip()?)
}

/// (s − 1)·ζ(s, a): entire, so it may be expanded at s = 1.
pub fn hurwitz_times_sm1_generic<T: Analytic>(s: &T, a: &T) -> Result<T, SpecialError> {
    let parts = hurwitz_parts(s, a)?;
    let sm1 = s.add_real(&-Real::one());
    Ok(parts.w1s + sm1 * parts.regular)
}

pub fn zeta_generic<T: Analytic>(s: &T) -> Result<T, SpecialError> {
    hurwitz_generic(s, &s.real_like(&Real::one()))
}

/// ζ(s) (order 0) or ζ′(s) (order 1).
pub fn zeta(s: &Complex, order: usize) -> Result<Complex, SpecialError> {
    match order {
        0 => zeta_generic(s),
        1 => zeta_derivative_generic(s),
        _ => Err(SpecialError::Domain(format!(
            "zeta derivative order {order} not supported"
        ))),
    }
}

/// ζ(s, α) for α > 0.
pub fn hurwitz_zeta(s: &Complex, alpha: &Real) -> Result<Complex, SpecialError> {
    hurwitz_generic(s, &Complex::from_real(alpha.clone()))
}

/// Real-argument convenience wrapper.
pub fn zeta_real(s: &Real) -> Result<Real, SpecialError> {
    zeta_generic(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex {
        Complex::from_f64(x, 0.0)
    }

    fn near(a: &Complex, b: &Real, tol: f64) -> bool {
        (&a.re - b).abs().to_f64() < tol && a.im.abs().to_f64() < tol
    }

    #[test]
    fn zeta_two() {
        let pi = Real::pi();
        assert!(near(
            &zeta(&c(2.0), 0).unwrap(),
            &(&pi * &pi / Real::from_i64(6)),
            1e-33
        ));
    }

    #[test]
    fn zeta_at_zero_and_derivative() {
        assert!(near(&zeta(&c(0.0), 0).unwrap(), &Real::ratio(-1, 2), 1e-33));
        let want = -((Real::pi() * Real::from_i64(2)).ln() / Real::from_i64(2));
        assert!(near(&zeta(&c(0.0), 1).unwrap(), &want, 1e-32));
    }

    #[test]
    fn zeta_three() {
        let z = zeta(&c(3.0), 0).unwrap();
        assert!((z.re.to_f64() - 1.2020569031595942).abs() < 1e-15);
    }

    #[test]
    fn even_values_match_bernoulli_closed_form() {
        for k in 1..=3i32 {
            let b = crate::bernoulli::moment(2 * k as usize).unwrap();
            let mut fact = Real::one();
            for j in 1..=(2 * k) as i64 {
                fact *= Real::from_i64(j);
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let want =
                Real::from_i64(sign) * (Real::pi() * Real::from_i64(2)).powi(2 * k) * b / (Real::from_i64(2) * fact);
            let z = zeta(&c(2.0 * k as f64), 0).unwrap();
            assert!(near(&z, &want, 1e-27));
        }
    }

    #[test]
    fn termwise_derivative_matches_jet() {
        use crate::jets::Jet;
        let s = Complex::from_f64(0.3, 2.0);
        let j = Jet::<Complex>::constant(Real::zero(), 1, s.clone()) + Jet::<Complex>::variable(Real::zero(), 1);
        let via_jet = zeta_generic(&j).unwrap().coeffs()[1].clone();
        let d = &zeta(&s, 1).unwrap() - &via_jet;
        assert!(d.abs().to_f64() < 1e-30);
    }

    #[test]
    fn hurwitz_examples() {
        let pi2 = Real::pi() * Real::pi();
        let z = hurwitz_zeta(&c(2.0), &Real::one()).unwrap();
        assert!(near(&z, &(&pi2 / Real::from_i64(6)), 1e-33));
        let z = hurwitz_zeta(&c(2.0), &Real::ratio(1, 2)).unwrap();
        assert!(near(&z, &(&pi2 / Real::from_i64(2)), 1e-32));
        let z3 = zeta(&c(3.0), 0).unwrap();
        let z = hurwitz_zeta(&c(3.0), &Real::from_i64(2)).unwrap();
        assert!(near(&z, &(&z3.re - &Real::one()), 1e-32));
    }

    #[test]
    fn hurwitz_decomposition_of_zeta() {
        // ζ(s) = k^{−s} Σ_r ζ(s, r/k)
        let s = c(2.5);
        let k = 3;
        let mut sum = Complex::zero();
        for r in 1..=k {
            sum += hurwitz_zeta(&s, &Real::ratio(r, k)).unwrap();
        }
        let scale = Real::from_i64(k).powf(&Real::from_f64(-2.5));
        let z = zeta(&s, 0).unwrap();
        assert!(near(&sum.scale(&scale), &z.re, 1e-31));
    }

    #[test]
    fn critical_line_value() {
        // ζ(1/2 + 14.134725141734693790i) ≈ 0
        let s = Complex::new(
            Real::ratio(1, 2),
            Real::parse("14.134725141734693790457251983562").unwrap(),
        );
        let z = zeta(&s, 0).unwrap();
        assert!(z.abs().to_f64() < 1e-25, "{}", z);
    }

    #[test]
    fn pole_and_domain_errors() {
        assert!(matches!(zeta(&c(1.0), 0), Err(SpecialError::Pole(_))));
        assert!(matches!(
            hurwitz_zeta(&c(2.0), &Real::zero()),
            Err(SpecialError::Domain(_))
        ));
    }

    #[test]
    fn entire_form_at_one() {
        let v = hurwitz_times_sm1_generic(&c(1.0), &c(1.0)).unwrap();
        assert!(near(&v, &Real::one(), 1e-33));
    }
}
