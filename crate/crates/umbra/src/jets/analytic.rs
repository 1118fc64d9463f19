use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::JetError;
use crate::numerics::{Complex, Real};

/// Something an analytic formula can be evaluated on: a real, a complex
/// number, or a truncated Taylor series of either.
///
/// Constants are built "like" an existing value so that jets inherit their
/// expansion point and order.
pub trait Analytic:
    Clone
    + Send
    + Sync
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn real_like(&self, r: &Real) -> Self;
    fn complex_like(&self, c: &Complex) -> Result<Self, JetError>;
    fn scale(&self, r: &Real) -> Self;
    fn add_real(&self, r: &Real) -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Result<Self, JetError>;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn recip(&self) -> Result<Self, JetError>;
    /// Constant term as a complex number.
    fn value(&self) -> Complex;
    /// Largest coefficient magnitude (plain magnitude for scalars).
    fn magnitude(&self) -> f64;

    fn int_like(&self, n: i64) -> Self {
        self.real_like(&Real::from_i64(n))
    }

    /// self^e = exp(e · log self).
    fn pow(&self, e: &Self) -> Result<Self, JetError> {
        Ok((e.clone() * self.ln()?).exp())
    }

    fn powi(&self, n: u32) -> Self {
        let mut acc = self.int_like(1);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

/// Coefficient types a jet may carry.
pub trait Coefficient: Analytic + PartialEq {
    fn from_real(r: Real) -> Self;
    fn from_complex(c: Complex) -> Result<Self, JetError>;
    fn is_zero(&self) -> bool;
}

impl Analytic for Real {
    fn real_like(&self, r: &Real) -> Self {
        r.clone()
    }
    fn complex_like(&self, c: &Complex) -> Result<Self, JetError> {
        <Real as Coefficient>::from_complex(c.clone())
    }
    fn scale(&self, r: &Real) -> Self {
        self * r
    }
    fn add_real(&self, r: &Real) -> Self {
        self + r
    }
    fn exp(&self) -> Self {
        Real::exp(self)
    }
    fn ln(&self) -> Result<Self, JetError> {
        if self.signum() <= 0 {
            return Err(JetError::Inadmissible(format!(
                "log of non-positive real {}",
                self.to_string_digits(8)
            )));
        }
        Ok(Real::ln(self))
    }
    fn sin(&self) -> Self {
        Real::sin(self)
    }
    fn cos(&self) -> Self {
        Real::cos(self)
    }
    fn recip(&self) -> Result<Self, JetError> {
        if self.is_zero() {
            return Err(JetError::DivisionByZero);
        }
        Ok(Real::recip(self))
    }
    fn value(&self) -> Complex {
        Complex::from_real(self.clone())
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64()
    }
}

impl Coefficient for Real {
    fn from_real(r: Real) -> Self {
        r
    }
    fn from_complex(c: Complex) -> Result<Self, JetError> {
        if !c.im.is_zero() {
            return Err(JetError::Inadmissible("complex value where a real was required".into()));
        }
        Ok(c.re)
    }
    fn is_zero(&self) -> bool {
        Real::is_zero(self)
    }
}

impl Analytic for Complex {
    fn real_like(&self, r: &Real) -> Self {
        Complex::from_real(r.clone())
    }
    fn complex_like(&self, c: &Complex) -> Result<Self, JetError> {
        Ok(c.clone())
    }
    fn scale(&self, r: &Real) -> Self {
        Complex::scale(self, r)
    }
    fn add_real(&self, r: &Real) -> Self {
        Complex::add_real(self, r)
    }
    fn exp(&self) -> Self {
        Complex::exp(self)
    }
    fn ln(&self) -> Result<Self, JetError> {
        if self.re.is_zero() && self.im.is_zero() {
            return Err(JetError::Inadmissible("log of zero".into()));
        }
        Ok(Complex::ln(self))
    }
    fn sin(&self) -> Self {
        Complex::sin(self)
    }
    fn cos(&self) -> Self {
        Complex::cos(self)
    }
    fn recip(&self) -> Result<Self, JetError> {
        if self.re.is_zero() && self.im.is_zero() {
            return Err(JetError::DivisionByZero);
        }
        Ok(Complex::recip(self))
    }
    fn value(&self) -> Complex {
        self.clone()
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64()
    }
}

impl Coefficient for Complex {
    fn from_real(r: Real) -> Self {
        Complex::from_real(r)
    }
    fn from_complex(c: Complex) -> Result<Self, JetError> {
        Ok(c)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}
