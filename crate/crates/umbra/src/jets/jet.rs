use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Analytic, Coefficient, JetError};
use crate::numerics::{Complex, Real, Vector};

/// Truncated Taylor data of a function at `point`:
/// `coeffs[m] = f^{(m)}(point) / m!` for m = 0..=order.
#[derive(Clone, PartialEq)]
pub struct Jet<T> {
    point: Real,
    coeffs: Vec<T>,
}

impl<T: Coefficient> Jet<T> {
    pub fn from_coeffs(point: Real, coeffs: Vec<T>) -> Result<Self, JetError> {
        if coeffs.is_empty() {
            return Err(JetError::Empty);
        }
        Ok(Jet { point, coeffs })
    }

    /// The identity function x ↦ x expanded at `point`.
    pub fn variable(point: Real, order: usize) -> Self {
        let mut coeffs = vec![T::from_real(Real::zero()); order + 1];
        coeffs[0] = T::from_real(point.clone());
        if order >= 1 {
            coeffs[1] = T::from_real(Real::one());
        }
        Jet { point, coeffs }
    }

    pub fn constant(point: Real, order: usize, c: T) -> Self {
        let mut coeffs = vec![T::from_real(Real::zero()); order + 1];
        coeffs[0] = c;
        Jet { point, coeffs }
    }

    pub fn point(&self) -> &Real {
        &self.point
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Result<&T, JetError> {
        self.coeffs.get(m).ok_or(JetError::Order {
            requested: m,
            order: self.order(),
        })
    }

    /// f^{(m)}(point) = m! · c_m.
    pub fn derivative(&self, m: usize) -> Result<T, JetError> {
        let c = self.coeff(m)?.clone();
        let mut f = Real::one();
        for k in 2..=m as i64 {
            f *= Real::from_i64(k);
        }
        Ok(c.scale(&f))
    }

    /// Jet of f′ (one order lower).
    pub fn differentiate(&self) -> Result<Self, JetError> {
        if self.order() == 0 {
            return Err(JetError::Order { requested: 1, order: 0 });
        }
        let coeffs = (1..self.coeffs.len())
            .map(|m| self.coeffs[m].scale(&Real::from_i64(m as i64)))
            .collect();
        Ok(Jet {
            point: self.point.clone(),
            coeffs,
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = (order + 1).min(self.coeffs.len());
        Jet {
            point: self.point.clone(),
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    fn zeros_like(&self) -> Vec<T> {
        vec![self.coeffs[0].real_like(&Real::zero()); self.coeffs.len()]
    }

    fn check(&self, other: &Self) -> Result<(), JetError> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(JetError::Mismatch);
        }
        if self.point != other.point {
            return Err(JetError::Mismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, JetError> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, JetError> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a.clone() - b.clone()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, JetError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn zip(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Jet {
            point: self.point.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for m in 0..n {
            let mut acc = self.coeffs[0].clone() * other.coeffs[m].clone();
            for i in 1..=m {
                acc = acc + self.coeffs[i].clone() * other.coeffs[m - i].clone();
            }
            out.push(acc);
        }
        Jet {
            point: self.point.clone(),
            coeffs: out,
        }
    }

    /// Division; when both constant terms vanish the common factor
    /// (x − point) is cancelled first, lowering the order by one each time.
    pub fn try_div(&self, other: &Self) -> Result<Self, JetError> {
        self.check(other)?;
        let mut a = self.coeffs.clone();
        let mut b = other.coeffs.clone();
        while b[0].is_zero() {
            if !a[0].is_zero() || b.len() == 1 {
                return Err(JetError::DivisionByZero);
            }
            a.remove(0);
            b.remove(0);
        }
        let inv = b[0].recip()?;
        let mut c: Vec<T> = Vec::with_capacity(a.len());
        for m in 0..a.len() {
            let mut acc = a[m].clone();
            for i in 1..=m {
                acc = acc - b[i].clone() * c[m - i].clone();
            }
            c.push(acc * inv.clone());
        }
        Ok(Jet {
            point: self.point.clone(),
            coeffs: c,
        })
    }

    /// Composition h ∘ self where `h` is given by its Taylor coefficients at
    /// self's constant term: Σ h_k (self − c₀)^k.
    pub fn compose(&self, h: &[T]) -> Self {
        let mut shifted = self.clone();
        shifted.coeffs[0] = self.coeffs[0].real_like(&Real::zero());
        let mut acc = Jet {
            point: self.point.clone(),
            coeffs: self.zeros_like(),
        };
        // Horner in the nilpotent part
        for hk in h.iter().take(self.coeffs.len()).rev() {
            acc = acc.mul_unchecked(&shifted);
            acc.coeffs[0] = acc.coeffs[0].clone() + hk.clone();
        }
        acc
    }

    fn map_coeffs(&self, f: impl Fn(&T) -> T) -> Self {
        Jet {
            point: self.point.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn exp_jet(&self) -> Self {
        let n = self.coeffs.len();
        let mut e: Vec<T> = Vec::with_capacity(n);
        e.push(self.coeffs[0].exp());
        for m in 1..n {
            let mut acc = self.coeffs[1].clone() * e[m - 1].clone();
            for k in 2..=m {
                acc = acc + (self.coeffs[k].clone() * e[m - k].clone()).scale(&Real::from_i64(k as i64));
            }
            e.push(acc.scale(&Real::ratio(1, m as i64)));
        }
        Jet {
            point: self.point.clone(),
            coeffs: e,
        }
    }

    fn ln_jet(&self) -> Result<Self, JetError> {
        let n = self.coeffs.len();
        let a0 = &self.coeffs[0];
        let inv = a0.recip()?;
        let mut l: Vec<T> = Vec::with_capacity(n);
        l.push(a0.ln()?);
        for m in 1..n {
            let mut acc = self.coeffs[m].clone();
            if m > 1 {
                let mut s = (l[1].clone() * self.coeffs[m - 1].clone()).scale(&Real::one());
                for k in 2..m {
                    s = s + (l[k].clone() * self.coeffs[m - k].clone()).scale(&Real::from_i64(k as i64));
                }
                acc = acc - s.scale(&Real::ratio(1, m as i64));
            }
            l.push(acc * inv.clone());
        }
        Ok(Jet {
            point: self.point.clone(),
            coeffs: l,
        })
    }

    fn sin_cos_jet(&self) -> (Self, Self) {
        let n = self.coeffs.len();
        let mut s: Vec<T> = Vec::with_capacity(n);
        let mut c: Vec<T> = Vec::with_capacity(n);
        s.push(self.coeffs[0].sin());
        c.push(self.coeffs[0].cos());
        for m in 1..n {
            let mut ss = (self.coeffs[1].clone() * c[m - 1].clone()).scale(&Real::one());
            let mut cc = (self.coeffs[1].clone() * s[m - 1].clone()).scale(&Real::one());
            for k in 2..=m {
                let kk = Real::from_i64(k as i64);
                ss = ss + (self.coeffs[k].clone() * c[m - k].clone()).scale(&kk);
                cc = cc + (self.coeffs[k].clone() * s[m - k].clone()).scale(&kk);
            }
            let inv_m = Real::ratio(1, m as i64);
            s.push(ss.scale(&inv_m));
            c.push(-(cc.scale(&inv_m)));
        }
        (
            Jet {
                point: self.point.clone(),
                coeffs: s,
            },
            Jet {
                point: self.point.clone(),
                coeffs: c,
            },
        )
    }
}

impl<T: Coefficient> fmt::Debug for Jet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Jet")
            .field("point", &self.point)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

// Operator impls assume matching (point, order), which holds for every jet
// built from one `variable`; use the `try_*` methods when in doubt.
impl<T: Coefficient> Add for Jet<T> {
    type Output = Jet<T>;
    fn add(self, rhs: Jet<T>) -> Jet<T> {
        self.zip(&rhs, |a, b| a.clone() + b.clone())
    }
}

impl<T: Coefficient> Sub for Jet<T> {
    type Output = Jet<T>;
    fn sub(self, rhs: Jet<T>) -> Jet<T> {
        self.zip(&rhs, |a, b| a.clone() - b.clone())
    }
}

impl<T: Coefficient> Mul for Jet<T> {
    type Output = Jet<T>;
    fn mul(self, rhs: Jet<T>) -> Jet<T> {
        self.mul_unchecked(&rhs)
    }
}

impl<T: Coefficient> Div for Jet<T> {
    type Output = Jet<T>;
    fn div(self, rhs: Jet<T>) -> Jet<T> {
        self.try_div(&rhs)
            .expect("jet division by a jet with zero constant term")
    }
}

impl<T: Coefficient> Neg for Jet<T> {
    type Output = Jet<T>;
    fn neg(self) -> Jet<T> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<T: Coefficient> Analytic for Jet<T> {
    fn real_like(&self, r: &Real) -> Self {
        let mut coeffs = self.zeros_like();
        coeffs[0] = coeffs[0].real_like(r);
        Jet {
            point: self.point.clone(),
            coeffs,
        }
    }
    fn complex_like(&self, c: &Complex) -> Result<Self, JetError> {
        let mut coeffs = self.zeros_like();
        coeffs[0] = coeffs[0].complex_like(c)?;
        Ok(Jet {
            point: self.point.clone(),
            coeffs,
        })
    }
    fn scale(&self, r: &Real) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }
    fn add_real(&self, r: &Real) -> Self {
        let mut j = self.clone();
        j.coeffs[0] = j.coeffs[0].add_real(r);
        j
    }
    fn exp(&self) -> Self {
        self.exp_jet()
    }
    fn ln(&self) -> Result<Self, JetError> {
        self.ln_jet()
    }
    fn sin(&self) -> Self {
        self.sin_cos_jet().0
    }
    fn cos(&self) -> Self {
        self.sin_cos_jet().1
    }
    fn recip(&self) -> Result<Self, JetError> {
        self.real_like(&Real::one()).try_div(self)
    }
    fn value(&self) -> Complex {
        self.coeffs[0].value()
    }
    fn magnitude(&self) -> f64 {
        self.coeffs.iter().map(|c| c.magnitude()).fold(0.0, f64::max)
    }
}

impl<T: Coefficient> Vector<Real> for Jet<T>
where
    T: Vector<Real>,
{
    fn zero_like(&self) -> Self {
        Jet {
            point: self.point.clone(),
            coeffs: self.zeros_like(),
        }
    }
    fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.clone() + b.clone())
    }
    fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.clone() - b.clone())
    }
    fn scale(&self, w: &Real) -> Self {
        self.map_coeffs(|c| Analytic::scale(c, w))
    }
    fn norm(&self) -> f64 {
        Analytic::magnitude(self)
    }
    fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| Vector::<Real>::is_finite(c))
    }
    fn sign(&self) -> Option<i32> {
        // alternation is judged on the values themselves
        self.coeffs[0].sign()
    }
}

/// Value of the truncated series at `x`.
pub fn evaluate<T: Coefficient>(j: &Jet<T>, x: &Real) -> T {
    let h = x - j.point();
    let mut acc = j.coeffs().last().expect("non-empty").clone();
    for c in j.coeffs().iter().rev().skip(1) {
        acc = acc.scale(&h) + c.clone();
    }
    acc
}
