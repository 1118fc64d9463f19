use super::SpecialError;
use crate::numerics::{precision, Real};

/// ψ_θ(x) = Σ_{n≥1} e^{−n²πx} and its first two derivatives.
#[derive(Clone, Debug)]
pub struct ThetaValues {
    pub psi: Real,
    pub d1: Real,
    pub d2: Real,
}

fn check(x: &Real) -> Result<(), SpecialError> {
    if x.signum() <= 0 {
        return Err(SpecialError::Domain(format!(
            "theta needs x > 0, got {}",
            x.to_string_digits(8)
        )));
    }
    Ok(())
}

/// All three at once; terms dropped once n²πx exceeds (P + 8)·ln 10 plus
/// the polynomial weight of ψ″.
pub fn theta_all(x: &Real) -> Result<ThetaValues, SpecialError> {
    check(x)?;
    let pi = Real::pi();
    let px = &pi * x;
    let cut = (precision::digits() as f64 + 8.0) * std::f64::consts::LN_10;
    let mut psi = Real::zero();
    let mut d1 = Real::zero();
    let mut d2 = Real::zero();
    let mut n = 1u64;
    loop {
        let n2 = Real::from_u64(n * n);
        let a = &n2 * &px;
        let af = a.to_f64();
        // relative to the leading term e^{−πx}
        if n > 1 && af - px.to_f64() > cut + 2.0 * (n2.to_f64() * pi.to_f64()).ln().max(0.0) {
            break;
        }
        let e = (-a).exp();
        let w = &n2 * &pi;
        d1 -= &w * &e;
        d2 += &w * &w * &e;
        psi += e;
        n += 1;
        if n > 1_000_000 {
            break;
        }
    }
    Ok(ThetaValues { psi, d1, d2 })
}

pub fn theta_psi(x: &Real) -> Result<Real, SpecialError> {
    Ok(theta_all(x)?.psi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn at_one() {
        let v = theta_psi(&Real::one()).unwrap();
        let pi = Real::pi();
        let want = (-pi.clone()).exp() + (-(&pi * Real::from_i64(4))).exp() + (-(&pi * Real::from_i64(9))).exp();
        assert!((v.clone() - want).abs().to_f64() < 1e-15);
        assert!((v.to_f64() - 0.0432174).abs() < 1e-6);
    }

    #[test]
    fn tiny_far_out() {
        let v = theta_psi(&Real::from_i64(100)).unwrap();
        assert!(v.to_f64() < 1e-136);
    }

    #[test]
    fn modular_relation() {
        // 2ψ(2)+1 = 2^{−1/2}(2ψ(1/2)+1)
        let two = Real::from_i64(2);
        let l = theta_psi(&two).unwrap() * &two + Real::one();
        let r = (theta_psi(&Real::ratio(1, 2)).unwrap() * &two + Real::one()) / two.sqrt();
        assert!((l - r).abs().to_f64() < 1e-27);
    }

    #[test]
    fn derivatives_by_differences() {
        let x = Real::ratio(3, 4);
        let h = Real::parse("1e-10").unwrap();
        let v = theta_all(&x).unwrap();
        let p = theta_all(&(&x + &h)).unwrap();
        let m = theta_all(&(&x - &h)).unwrap();
        let d1 = (&p.psi - &m.psi) / (&h * Real::from_i64(2));
        let d2 = (&p.d1 - &m.d1) / (&h * Real::from_i64(2));
        assert!((d1 - v.d1).abs().to_f64() < 1e-15);
        assert!((d2 - v.d2).abs().to_f64() < 1e-15);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(theta_psi(&Real::zero()).is_err());
    }
}
