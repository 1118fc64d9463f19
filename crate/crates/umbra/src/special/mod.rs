//! ζ, Hurwitz ζ, Dirichlet L, Π = Γ(·+1), the θ series and the completed ξ.

mod character;
mod gamma;
mod theta;
mod xi;
mod zeta;

pub use character::DirichletCharacter;
pub use gamma::{
    digamma_generic, digamma_pi, digamma_pi_generic, log_gamma_generic, log_gamma_pi, log_gamma_pi_generic,
};
pub use theta::{theta_all, theta_psi, ThetaValues};
pub use xi::{xi_complete, xi_generic};
pub use zeta::{
    hurwitz_ds_generic, hurwitz_generic, hurwitz_times_sm1_generic, hurwitz_zeta, zeta, zeta_derivative_generic,
    zeta_generic, zeta_real,
};

use crate::jets::JetError;
use crate::numerics::{Complex, Real};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecialError {
    #[error("pole: {0}")]
    Pole(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error("invalid character: {0}")]
    Character(String),
}

/// L(s, χ) = k^{−s} Σ_r χ(r) ζ(s, r/k).
///
/// At s = 1 (non-principal χ) the decomposition is taken to its limit:
/// L(1, χ) = −(1/k) Σ_r χ(r) ψ(r/k).
pub fn dirichlet_l(s: &Complex, chi: &DirichletCharacter) -> Result<Complex, SpecialError> {
    let k = chi.modulus();
    let at_one = s.im.is_zero() && (&s.re - &Real::one()).is_zero();
    if at_one {
        if chi.is_principal() {
            return Err(SpecialError::Pole("L(s, χ) for principal χ has a pole at s = 1".into()));
        }
        let mut acc = Complex::zero();
        for r in 1..=k {
            let c = chi.value(r);
            if c.abs().to_f64() == 0.0 {
                continue;
            }
            // ψ(r/k) = Π′/Π(r/k − 1)
            let arg = Complex::from_real(Real::ratio(r as i64, k as i64) - Real::one());
            acc += &c * &digamma_pi(&arg)?;
        }
        return Ok(-acc.scale(&Real::ratio(1, k as i64)));
    }
    let mut acc = Complex::zero();
    for r in 1..=k {
        let c = chi.value(r);
        if c.abs().to_f64() == 0.0 {
            continue;
        }
        acc += &c * &hurwitz_zeta(s, &Real::ratio(r as i64, k as i64))?;
    }
    let ks = Complex::from_real(Real::from_u64(k)).powc(&-s.clone());
    Ok(&acc * &ks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l_values() {
        let chi = DirichletCharacter::chi4();
        let l2 = dirichlet_l(&Complex::from_f64(2.0, 0.0), &chi).unwrap();
        assert!((l2.re.to_f64() - 0.915_965_594_177_219).abs() < 1e-14);
        let l1 = dirichlet_l(&Complex::one(), &chi).unwrap();
        assert!((l1.re - Real::pi() / Real::from_i64(4)).abs().to_f64() < 1e-30);
        let p = DirichletCharacter::principal_mod1();
        let z = dirichlet_l(&Complex::from_f64(2.0, 0.0), &p).unwrap();
        let z2 = zeta(&Complex::from_f64(2.0, 0.0), 0).unwrap();
        assert!((&z - &z2).abs().to_f64() < 1e-32);
        assert!(matches!(dirichlet_l(&Complex::one(), &p), Err(SpecialError::Pole(_))));
    }
}
