//! Euler–Maclaurin summation of convergent series Σ_{n≥n₀} g(n) whose
//! terms decay only algebraically.

use super::sum::truncate_bernoulli_series;
use super::UmbralError;
use crate::numerics::{precision, Complex, Real};
use crate::par;

#[derive(Clone, Debug)]
pub struct EmSum {
    pub value: Real,
    pub error: f64,
    /// Terms summed explicitly before switching to the expansion.
    pub cutoff: usize,
    pub order: usize,
}

/// Σ_{n=start}^{∞} g(n).
///
/// `g` gives single terms, `taylor(N, m)` the Taylor coefficients
/// g^{(j)}(N)/j! for j ≤ m, and `tail(N)` the integral ∫_N^∞ g.
///
/// With G′ = g, G(∞) = 0: Σ_{n≥N} g(n) = −G(N − 1 + B) = −G(N − B), which
/// expands to ∫_N^∞ g + ½g(N) − Σ_{m even} g^{(m−1)}(N)·B_m/m!.
pub fn sum_convergent<G, J, I>(
    g: G,
    taylor: J,
    tail: I,
    start: usize,
    cutoff: usize,
    order: usize,
) -> Result<EmSum, UmbralError>
where
    G: Fn(usize) -> Result<Real, UmbralError> + Sync + Send,
    J: Fn(&Real, usize) -> Result<Vec<Real>, UmbralError>,
    I: Fn(&Real) -> Result<Real, UmbralError>,
{
    let ns: Vec<usize> = (start..cutoff).collect();
    let head: Vec<Real> = par::map(&ns, |&n| g(n)).into_iter().collect::<Result<_, _>>()?;
    let mut acc = Real::zero();
    for v in head {
        acc += v;
    }
    let x = Real::from_u64(cutoff as u64);
    let c = taylor(&x, order)?;
    // coefficients of G at N: G^{(m)}(N)/m! = g^{(m−1)}(N)/(m−1)!/m
    let mut gc = vec![Complex::zero()];
    for (j, cj) in c.iter().enumerate() {
        gc.push(Complex::from_real(cj / Real::from_u64(j as u64 + 1)));
    }
    // Σ_{n≥N} g(n) = −G(N − B): flip the odd (m = 1) coefficient
    gc[1] = -gc[1].clone();
    let (series, err, inc, _) = truncate_bernoulli_series(&gc);
    let integral = tail(&x)?;
    // G(N) = −∫_N^∞ g was left out of `series`
    acc += integral - series.re;
    let rounding = acc.abs().to_f64() * precision::epsilon();
    Ok(EmSum {
        value: acc,
        error: err + rounding,
        cutoff,
        order: inc.saturating_sub(1),
    })
}
