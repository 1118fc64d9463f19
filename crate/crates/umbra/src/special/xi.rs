use super::gamma::log_gamma_pi_generic;
use super::zeta::hurwitz_times_sm1_generic;
use super::SpecialError;
use crate::jets::Analytic;
use crate::numerics::{Complex, Real};

fn core<T: Analytic>(s: &T) -> Result<T, SpecialError> {
    let half = Real::ratio(1, 2);
    let hs = s.scale(&half);
    let lp = log_gamma_pi_generic(&hs)?;
    let lpi = Real::pi().ln();
    let zs = hurwitz_times_sm1_generic(s, &s.real_like(&Real::one()))?;
    Ok((lp - hs.scale(&lpi)).exp() * zs)
}

fn near_negative_even(s: &Complex) -> bool {
    let re = s.re.to_f64();
    if re > -1.0 || s.im.to_f64().abs() > 0.5 {
        return false;
    }
    let k = (re / 2.0).round() * 2.0;
    (re - k).abs() < 0.5
}

/// ξ(s) = Π(s/2)π^{−s/2}(s − 1)ζ(s), generic so jets give derivatives.
///
/// Near s = −2, −4, … the pole of Π(s/2) cancels a trivial zero of ζ; there
/// ξ(1 − s) is evaluated instead.
pub fn xi_generic<T: Analytic>(s: &T) -> Result<T, SpecialError> {
    if near_negative_even(&s.value()) {
        let refl = (-s.clone()).add_real(&Real::one());
        return core(&refl);
    }
    core(s)
}

pub fn xi_complete(s: &Complex) -> Result<Complex, SpecialError> {
    xi_generic(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let z = xi_complete(&Complex::zero()).unwrap();
        assert!((z.re.to_f64() - 0.5).abs() < 1e-30);
        let z = xi_complete(&Complex::from_f64(2.0, 0.0)).unwrap();
        assert!((z.re - Real::pi() / Real::from_i64(6)).abs().to_f64() < 1e-30);
        let one = xi_complete(&Complex::one()).unwrap();
        assert!((one.re.to_f64() - 0.5).abs() < 1e-30);
    }

    #[test]
    fn functional_equation() {
        for (a, b) in [(3.0, 0.0), (0.3, 2.0), (-1.5, 7.0), (2.5, -4.0), (0.5, 14.0)] {
            let s = Complex::from_f64(a, b);
            let t = Complex::new(Real::one() - Real::from_f64(a), Real::from_f64(-b));
            let d = &xi_complete(&s).unwrap() - &xi_complete(&t).unwrap();
            assert!(d.abs().to_f64() < 1e-26, "s=({a},{b}) diff {}", d.abs().to_f64());
        }
        let d =
            &xi_complete(&Complex::from_f64(3.0, 0.0)).unwrap() - &xi_complete(&Complex::from_f64(-2.0, 0.0)).unwrap();
        assert!(d.abs().to_f64() < 1e-28);
    }

    #[test]
    fn real_on_critical_line() {
        let z = xi_complete(&Complex::from_f64(0.5, 21.0)).unwrap();
        assert!(z.im.abs().to_f64() < 1e-30 * z.re.abs().to_f64().max(1e-10) + 1e-35);
    }
}
