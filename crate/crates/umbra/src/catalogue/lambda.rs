//! λ₁ and λ₂ as brute double sums.
//!
//! λ₁ = Σ_{n≥1} [Σ_{k≥1} 1/(2n+k)² − 1/(2n)], inner sum = ζ(2, 2n+1);
//! λ₂ = Σ_{n≥1} [Σ_{k≥1} (−1)^{k−1}/(2n+k) − 1/(4n)], inner sum alternating.
//! The outer sums decay like n⁻² and go through Euler–Maclaurin; its
//! derivatives come from jets of the inner sums.

use crate::jets::{Analytic, Jet};
use crate::numerics::{accelerate_alternating, alternating_terms_for, precision, Domain, Quadrature, Real};
use crate::special::hurwitz_generic;
use crate::umbral::{sum_convergent, EmSum, UmbralError};

fn cutoff() -> usize {
    (precision::digits() as usize).max(20)
}

fn order() -> usize {
    2 * cutoff()
}

fn tail_integral<F>(g: F, from: &Real) -> Result<Real, UmbralError>
where
    F: Fn(&Real) -> Result<Real, UmbralError>,
{
    let failure = std::sync::Mutex::new(None);
    let h = |x: &Real| match g(x) {
        Ok(v) => v,
        Err(e) => {
            failure.lock().unwrap().get_or_insert(e);
            Real::zero()
        }
    };
    let tol = 10f64.powi(-(precision::digits() as i32) - 2);
    let r = Quadrature::with_tol(tol).integrate::<Real, Real, _>(h, Domain::SemiInfinite(from.clone()))?;
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    Ok(r.value)
}

fn lambda1_term<T: Analytic>(x: &T) -> Result<T, UmbralError> {
    let two = Real::from_i64(2);
    let a = x.scale(&two).add_real(&Real::one());
    let inner = hurwitz_generic(&x.real_like(&two), &a)?;
    Ok(inner - x.scale(&two).recip()?)
}

pub fn lambda1() -> Result<EmSum, UmbralError> {
    let g = |n: usize| lambda1_term(&Real::from_u64(n as u64));
    let taylor = |x: &Real, m: usize| Ok(lambda1_term(&Jet::<Real>::variable(x.clone(), m))?.coeffs().to_vec());
    let tail = |x: &Real| tail_integral(lambda1_term::<Real>, x);
    sum_convergent(g, taylor, tail, 1, cutoff(), order())
}

fn alternating_inner<T>(x: &T) -> Result<T, UmbralError>
where
    T: Analytic + crate::numerics::Vector<Real>,
{
    let n = alternating_terms_for(precision::digits());
    let two = Real::from_i64(2);
    let base = Analytic::scale(x, &two);
    let mut terms = Vec::with_capacity(n);
    for k in 1..=n as i64 {
        let t = base.add_real(&Real::from_i64(k)).recip()?;
        terms.push(if k % 2 == 1 { t } else { -t });
    }
    Ok(accelerate_alternating::<Real, T>(&terms)?.value)
}

fn lambda2_term<T>(x: &T) -> Result<T, UmbralError>
where
    T: Analytic + crate::numerics::Vector<Real>,
{
    let inner = alternating_inner(x)?;
    Ok(inner - Analytic::scale(x, &Real::from_i64(4)).recip()?)
}

pub fn lambda2() -> Result<EmSum, UmbralError> {
    let g = |n: usize| lambda2_term(&Real::from_u64(n as u64));
    let taylor = |x: &Real, m: usize| Ok(lambda2_term(&Jet::<Real>::variable(x.clone(), m))?.coeffs().to_vec());
    let tail = |x: &Real| tail_integral(lambda2_term::<Real>, x);
    sum_convergent(g, taylor, tail, 1, cutoff(), order())
}

/// (1 + log 2)/2 − 5π²/48.
pub fn lambda1_closed() -> Real {
    let pi = Real::pi();
    (Real::one() + Real::ln2()) / Real::from_i64(2) - Real::from_i64(5) * &pi * &pi / Real::from_i64(48)
}

/// (1 − 2 log 2)/4.
pub fn lambda2_closed() -> Real {
    (Real::one() - Real::from_i64(2) * Real::ln2()) / Real::from_i64(4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::precision::with_digits;

    #[test]
    fn brute_sums_hit_closed_forms() {
        with_digits(20, || {
            let l1 = lambda1().unwrap();
            assert!((l1.value.clone() - lambda1_closed()).abs().to_f64() < 1e-15, "{:?}", l1);
            let l2 = lambda2().unwrap();
            assert!((l2.value.clone() - lambda2_closed()).abs().to_f64() < 1e-15, "{:?}", l2);
            assert!((l1.value.to_f64() + 0.1815102).abs() < 1e-7);
            assert!((l2.value.to_f64() + 0.0965736).abs() < 1e-7);
        })
        .unwrap();
    }
}
