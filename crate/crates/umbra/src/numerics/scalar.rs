//! The small amount of genericity the quadrature and acceleration code
//! needs: a real field (`f64` or [`Real`]) and vector spaces over it.

use std::collections::HashMap;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use super::{precision, Complex, Real};

pub trait Scalar:
    Clone
    + Send
    + Sync
    + Debug
    + PartialOrd
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Vector<Self>
{
    fn from_f64(x: f64) -> Self;
    fn from_i64(n: i64) -> Self;
    fn to_f64(&self) -> f64;
    fn abs(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn pi() -> Self;
    fn is_finite(&self) -> bool;
    /// Relative size of one rounding error.
    fn unit_roundoff() -> f64;
    /// Default Gauss–Legendre order for adaptive panels.
    fn panel_order() -> usize;
    /// Gauss–Legendre nodes and weights on [−1, 1].
    fn gauss_legendre(n: usize) -> Arc<Vec<(Self, Self)>>;

    fn zero() -> Self {
        Self::from_i64(0)
    }
    fn one() -> Self {
        Self::from_i64(1)
    }
    fn half() -> Self {
        Self::from_f64(0.5)
    }
}

/// Values an integrand or a series may produce: a vector space over `S`.
pub trait Vector<S>: Clone + Send + Sync {
    fn zero_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn scale(&self, w: &S) -> Self;
    /// A magnitude used for error control.
    fn norm(&self) -> f64;
    fn is_finite(&self) -> bool;
    /// Sign, when the notion applies (real scalars only).
    fn sign(&self) -> Option<i32> {
        None
    }
}

impl Scalar for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn sin(&self) -> Self {
        f64::sin(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn unit_roundoff() -> f64 {
        f64::EPSILON
    }
    fn panel_order() -> usize {
        10
    }
    fn gauss_legendre(n: usize) -> Arc<Vec<(Self, Self)>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<(f64, f64)>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(r) = cache.lock().unwrap().get(&n) {
            return r.clone();
        }
        let rule = Arc::new(legendre_rule::<f64>(n));
        cache.lock().unwrap().entry(n).or_insert(rule).clone()
    }
}

impl Scalar for Real {
    fn from_f64(x: f64) -> Self {
        Real::from_f64(x)
    }
    fn from_i64(n: i64) -> Self {
        Real::from_i64(n)
    }
    fn to_f64(&self) -> f64 {
        Real::to_f64(self)
    }
    fn abs(&self) -> Self {
        Real::abs(self)
    }
    fn sqrt(&self) -> Self {
        Real::sqrt(self)
    }
    fn exp(&self) -> Self {
        Real::exp(self)
    }
    fn ln(&self) -> Self {
        Real::ln(self)
    }
    fn sin(&self) -> Self {
        Real::sin(self)
    }
    fn cos(&self) -> Self {
        Real::cos(self)
    }
    fn pi() -> Self {
        Real::pi()
    }
    fn is_finite(&self) -> bool {
        Real::is_finite(self)
    }
    fn unit_roundoff() -> f64 {
        2f64.powi(-(precision::bits() as i32))
    }
    fn panel_order() -> usize {
        (precision::digits() as usize / 2).max(12)
    }
    fn half() -> Self {
        Real::ratio(1, 2)
    }
    fn gauss_legendre(n: usize) -> Arc<Vec<(Self, Self)>> {
        type Key = (usize, u32);
        static CACHE: OnceLock<Mutex<HashMap<Key, Arc<Vec<(Real, Real)>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let key = (n, precision::bits());
        if let Some(r) = cache.lock().unwrap().get(&key) {
            return r.clone();
        }
        let rule = Arc::new(legendre_rule::<Real>(n));
        cache.lock().unwrap().entry(key).or_insert(rule).clone()
    }
}

/// Newton iteration on P_n from the usual cosine guesses.
fn legendre_rule<S: Scalar>(n: usize) -> Vec<(S, S)> {
    assert!(n >= 1);
    let tol = S::unit_roundoff() * 8.0;
    let mut out = Vec::with_capacity(n);
    let m = n.div_ceil(2);
    for i in 0..m {
        let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut x = S::from_f64(guess);
        let mut dp = S::one();
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, &x);
            let dx = p / d.clone();
            x = x - dx.clone();
            dp = d;
            if dx.abs().to_f64() <= tol {
                let (_, d) = legendre_and_derivative(n, &x);
                dp = d;
                break;
            }
        }
        let one = S::one();
        let w = S::from_i64(2) / ((one - x.clone() * x.clone()) * dp.clone() * dp);
        out.push((x, w));
    }
    let mut full = Vec::with_capacity(n);
    for (i, (x, w)) in out.into_iter().enumerate() {
        if n % 2 == 1 && i == m - 1 {
            full.push((S::zero(), w));
        } else {
            full.push((-x.clone(), w.clone()));
            full.push((x, w));
        }
    }
    full.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    full
}

fn legendre_and_derivative<S: Scalar>(n: usize, x: &S) -> (S, S) {
    let mut p0 = S::one();
    let mut p1 = x.clone();
    for k in 2..=n {
        let kf = S::from_i64(k as i64);
        let a = S::from_i64(2 * k as i64 - 1);
        let b = S::from_i64(k as i64 - 1);
        let p2 = (a * x.clone() * p1.clone() - b * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = S::from_i64(n as i64);
    let d = nf * (x.clone() * p1.clone() - p0) / (x.clone() * x.clone() - S::one());
    (p1, d)
}

impl Vector<f64> for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn scale(&self, w: &f64) -> Self {
        self * w
    }
    fn norm(&self) -> f64 {
        f64::abs(*self)
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn sign(&self) -> Option<i32> {
        Some(if *self > 0.0 {
            1
        } else if *self < 0.0 {
            -1
        } else {
            0
        })
    }
}

impl Vector<Real> for Real {
    fn zero_like(&self) -> Self {
        Real::zero()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn scale(&self, w: &Real) -> Self {
        self * w
    }
    fn norm(&self) -> f64 {
        Real::abs(self).to_f64()
    }
    fn is_finite(&self) -> bool {
        Real::is_finite(self)
    }
    fn sign(&self) -> Option<i32> {
        Some(self.signum())
    }
}

impl Vector<Real> for Complex {
    fn zero_like(&self) -> Self {
        Complex::zero()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn scale(&self, w: &Real) -> Self {
        Complex::scale(self, w)
    }
    fn norm(&self) -> f64 {
        self.abs().to_f64()
    }
    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        for n in [1, 2, 5, 10, 16, 21] {
            let r = f64::gauss_legendre(n);
            assert_eq!(r.len(), n);
            let s: f64 = r.iter().map(|p| p.1).sum();
            assert!((s - 2.0).abs() < 1e-13, "n={n} sum={s}");
        }
    }

    #[test]
    fn nodes_integrate_polynomials_exactly() {
        let r = Real::gauss_legendre(12);
        // ∫_{-1}^{1} x^22 dx = 2/23
        let s: Real = r.iter().map(|(x, w)| x.powi(22) * w).sum();
        assert!((s - Real::ratio(2, 23)).abs().to_f64() < 1e-35);
    }

    #[test]
    fn nodes_sorted_and_symmetric() {
        let r = f64::gauss_legendre(7);
        for i in 0..7 {
            assert!((r[i].0 + r[6 - i].0).abs() < 1e-15);
        }
        assert!(r.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(r[3].0.abs() < 1e-15);
    }
}
