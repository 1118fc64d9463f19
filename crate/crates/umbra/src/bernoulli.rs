//! Exact Bernoulli numbers with B₁ = +1/2, and Bernoulli polynomials.
//!
//! The plus convention is the one under which (1 − B)^n = B^n holds for the
//! moment rule B^n ↦ B_n.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rug::{Integer, Rational};
use thiserror::Error;

use crate::numerics::{precision, Real};

pub const DEFAULT_CAP: usize = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BernoulliError {
    #[error("Bernoulli index {index} exceeds table capacity {cap}")]
    Capacity { index: usize, cap: usize },
}

/// B₀ … B_cap as exact rationals in lowest terms.
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    numbers: Vec<Rational>,
}

impl BernoulliTable {
    /// Akiyama–Tanigawa; its natural output already has B₁ = +1/2.
    pub fn new(cap: usize) -> Self {
        let mut a: Vec<Rational> = Vec::with_capacity(cap + 1);
        let mut numbers = Vec::with_capacity(cap + 1);
        for m in 0..=cap {
            a.push(Rational::from((1, m as u64 + 1)));
            for j in (1..=m).rev() {
                let d = Rational::from(&a[j - 1] - &a[j]);
                a[j - 1] = d * Integer::from(j);
            }
            numbers.push(a[0].clone());
        }
        BernoulliTable { numbers }
    }

    pub fn cap(&self) -> usize {
        self.numbers.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<&Rational, BernoulliError> {
        self.numbers.get(n).ok_or(BernoulliError::Capacity {
            index: n,
            cap: self.cap(),
        })
    }
}

/// The shared table, built on first use.
pub fn table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| BernoulliTable::new(DEFAULT_CAP))
}

pub fn bernoulli_number(n: usize) -> Result<Rational, BernoulliError> {
    table().get(n).cloned()
}

/// B_n rounded to working precision — the value of the moment B^n.
pub fn moment(n: usize) -> Result<Real, BernoulliError> {
    Ok(Real::from_rational(table().get(n)?))
}

/// B_n / n! at working precision for n ≤ cap, cached per precision.
pub fn scaled_moments() -> Arc<Vec<Real>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Real>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let bits = precision::bits();
    if let Some(v) = cache.lock().unwrap().get(&bits) {
        return v.clone();
    }
    let t = table();
    let mut fact = Integer::from(1);
    let mut v = Vec::with_capacity(t.cap() + 1);
    for n in 0..=t.cap() {
        if n > 0 {
            fact *= n as u32;
        }
        let q = Rational::from(&t.numbers[n] / &fact);
        v.push(Real::from_rational(&q));
    }
    let v = Arc::new(v);
    cache.lock().unwrap().entry(bits).or_insert(v).clone()
}

/// Coefficients of B_n(x), constant term first.
///
/// B_n(x) = Σ_k C(n,k) B⁻_k x^{n−k} with B⁻_k = (−1)^k B_k, so that
/// B_n(0) = (−1)^n B_n and B_n(1) = B_n.
pub fn polynomial_coefficients(n: usize) -> Result<Vec<Rational>, BernoulliError> {
    let t = table();
    let mut c = vec![Rational::new(); n + 1];
    for k in 0..=n {
        let mut b = t.get(k)?.clone();
        if k % 2 == 1 {
            b = -b;
        }
        let binom = Integer::from(Integer::binomial_u(n as u32, k as u32));
        c[n - k] = b * binom;
    }
    Ok(c)
}

/// Exact evaluation at a rational point.
pub fn polynomial_at_rational(n: usize, x: &Rational, periodic: bool) -> Result<Rational, BernoulliError> {
    let x = if periodic {
        let fl = Rational::from(x.floor_ref());
        x - fl
    } else {
        x.clone()
    };
    let c = polynomial_coefficients(n)?;
    let mut acc = Rational::new();
    for coef in c.iter().rev() {
        acc = acc * &x + coef;
    }
    Ok(acc)
}

/// B_n(x) (or the periodic B̄_n(x) = B_n(x − ⌊x⌋)) at working precision.
pub fn bernoulli_polynomial(n: usize, x: &Real, periodic: bool) -> Result<Real, BernoulliError> {
    let x = if periodic { x - &x.floor() } else { x.clone() };
    let c = polynomial_coefficients(n)?;
    let mut acc = Real::zero();
    for coef in c.iter().rev() {
        acc = acc * &x + Real::from_rational(coef);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::from((p, d))
    }

    #[test]
    fn first_values_plus_convention() {
        assert_eq!(bernoulli_number(0).unwrap(), q(1, 1));
        assert_eq!(bernoulli_number(1).unwrap(), q(1, 2));
        assert_eq!(bernoulli_number(2).unwrap(), q(1, 6));
        assert_eq!(bernoulli_number(3).unwrap(), q(0, 1));
        assert_eq!(bernoulli_number(12).unwrap(), q(-691, 2730));
    }

    #[test]
    fn odd_indices_vanish() {
        for n in (3..=DEFAULT_CAP).step_by(2) {
            assert_eq!(bernoulli_number(n).unwrap(), 0, "B_{n}");
        }
    }

    #[test]
    fn capacity_error() {
        assert_eq!(
            bernoulli_number(DEFAULT_CAP + 1),
            Err(BernoulliError::Capacity {
                index: DEFAULT_CAP + 1,
                cap: DEFAULT_CAP
            })
        );
        let small = BernoulliTable::new(10);
        assert!(small.get(11).is_err());
    }

    #[test]
    fn matches_classical_recurrence() {
        // Σ_{k<n+1} C(n+1,k) B⁻_k = 0 for n ≥ 1
        for n in 1..40u32 {
            let mut s = Rational::new();
            for k in 0..=n {
                let mut b = bernoulli_number(k as usize).unwrap();
                if k % 2 == 1 {
                    b = -b;
                }
                s += b * Integer::from(Integer::binomial_u(n + 1, k));
            }
            assert_eq!(s, 0, "n={n}");
        }
    }

    #[test]
    fn magnitude_growth() {
        // |B_2n| ≈ 2 (2n)! / (2π)^{2n}
        for n in 10..60usize {
            let b = moment(2 * n).unwrap().abs();
            let mut f = Real::one();
            for k in 1..=(2 * n) as i64 {
                f *= Real::from_i64(k);
            }
            let approx = Real::from_i64(2) * f / (Real::pi() * Real::from_i64(2)).powi(2 * n as i32);
            let ratio = (b / approx).to_f64();
            assert!((1.0 / 1.1..1.1).contains(&ratio), "n={n} ratio={ratio}");
        }
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(polynomial_at_rational(2, &q(0, 1), false).unwrap(), q(1, 6));
        assert_eq!(polynomial_at_rational(5, &q(0, 1), false).unwrap(), 0);
        let periodic = polynomial_at_rational(2, &q(5, 4), true).unwrap();
        assert_eq!(periodic, polynomial_at_rational(2, &q(1, 4), false).unwrap());
        assert_eq!(periodic, q(-1, 48));
    }

    #[test]
    fn polynomial_endpoints() {
        for n in 0..30 {
            let b = bernoulli_number(n).unwrap();
            let at1 = polynomial_at_rational(n, &q(1, 1), false).unwrap();
            let at0 = polynomial_at_rational(n, &q(0, 1), false).unwrap();
            assert_eq!(at1, b);
            let signed = if n % 2 == 1 { -b.clone() } else { b.clone() };
            assert_eq!(at0, signed);
            if n >= 2 {
                assert_eq!(at1, at0);
            }
        }
    }

    #[test]
    fn real_polynomial_matches_rational() {
        let x = Real::ratio(7, 3);
        let r = bernoulli_polynomial(6, &x, true).unwrap();
        let e = Real::from_rational(&polynomial_at_rational(6, &q(1, 3), false).unwrap());
        assert!((r - e).abs().to_f64() < 1e-35);
    }

    #[test]
    fn moments() {
        assert_eq!(moment(0).unwrap().to_f64(), 1.0);
        assert!((moment(2).unwrap().to_f64() - 1.0 / 6.0).abs() < 1e-16);
        assert!((moment(4).unwrap().to_f64() + 1.0 / 30.0).abs() < 1e-16);
    }
}
