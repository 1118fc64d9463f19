use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Assign, Float, Rational};

use super::precision;

/// A real number at the current working precision.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct Real(Float);

impl Real {
    fn wrap(f: Float) -> Self {
        Real(f)
    }

    pub fn from_float(f: Float) -> Self {
        Real(Float::with_val(precision::bits(), f))
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn zero() -> Self {
        Real(Float::new(precision::bits()))
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn from_i64(n: i64) -> Self {
        Real(Float::with_val(precision::bits(), n))
    }

    pub fn from_u64(n: u64) -> Self {
        Real(Float::with_val(precision::bits(), n))
    }

    pub fn from_f64(x: f64) -> Self {
        Real(Float::with_val(precision::bits(), x))
    }

    pub fn from_rational(q: &Rational) -> Self {
        Real(Float::with_val(precision::bits(), q))
    }

    /// p/q exactly rounded.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(&Rational::from((p, q)))
    }

    /// Parses a decimal literal at full working precision.
    pub fn parse(s: &str) -> Option<Self> {
        let p = Float::parse(s.trim()).ok()?;
        Some(Real(Float::with_val(precision::bits(), p)))
    }

    pub fn pi() -> Self {
        Real(Float::with_val(precision::bits(), Constant::Pi))
    }

    pub fn ln2() -> Self {
        Real(Float::with_val(precision::bits(), Constant::Log2))
    }

    /// Euler's constant γ, from MPFR's own evaluation.
    pub fn euler_gamma() -> Self {
        Real(Float::with_val(precision::bits(), Constant::Euler))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.0.cmp0() {
            Some(Ordering::Greater) => 1,
            Some(Ordering::Less) => -1,
            _ => 0,
        }
    }

    pub fn abs(&self) -> Self {
        Self::wrap(Float::with_val(precision::bits(), self.0.abs_ref()))
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(Float::with_val(precision::bits(), self.0.sqrt_ref()))
    }

    pub fn exp(&self) -> Self {
        Self::wrap(Float::with_val(precision::bits(), self.0.exp_ref()))
    }

    pub fn ln(&self) -> Self {
        Self::wrap(Float::with_val(precision::bits(), self.0.ln_ref()))
    }

    pub fn sin(&self) -> Self {
        Self::wrap(Float::with_val(precision::bits(), self.0.sin_ref()))
    }

    pub fn cos(&self) -> Self {
        Self::wrap(Float::with_val(precision::bits(), self.0.cos_ref()))
    }

    pub fn sin_cos(&self) -> (Self, Self) {
        let b = precision::bits();
        let mut sc = (Float::new(b), Float::new(b));
        sc.assign(self.0.sin_cos_ref());
        (Real(sc.0), Real(sc.1))
    }

    pub fn tan(&self) -> Self {
        Self::wrap(Float::with_val(precision::bits(), self.0.tan_ref()))
    }

    pub fn sinh(&self) -> Self {
        Self::wrap(Float::with_val(precision::bits(), self.0.sinh_ref()))
    }

    pub fn cosh(&self) -> Self {
        Self::wrap(Float::with_val(precision::bits(), self.0.cosh_ref()))
    }

    pub fn atan2(&self, x: &Real) -> Self {
        Self::wrap(Float::with_val(precision::bits(), self.0.atan2_ref(&x.0)))
    }

    pub fn recip(&self) -> Self {
        Self::wrap(Float::with_val(precision::bits(), self.0.recip_ref()))
    }

    pub fn powi(&self, n: i32) -> Self {
        Self::wrap(Float::with_val(precision::bits(), (&self.0).pow(n)))
    }

    pub fn powf(&self, e: &Real) -> Self {
        Self::wrap(Float::with_val(precision::bits(), (&self.0).pow(&e.0)))
    }

    pub fn floor(&self) -> Self {
        Self::wrap(Float::with_val(precision::bits(), self.0.floor_ref()))
    }

    pub fn round(&self) -> Self {
        Self::wrap(Float::with_val(precision::bits(), self.0.round_ref()))
    }

    pub fn max(self, other: Real) -> Real {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Real) -> Real {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Distance to the nearest integer, and that integer.
    pub fn nearest_integer(&self) -> (i64, Real) {
        let r = self.round();
        let n = r.0.to_f64() as i64;
        ((n), (self - &r).abs())
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_string_digits(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".to_string();
        }
        let s = self.0.to_string_radix(10, Some(digits.max(1)));
        tidy_exponent(&s)
    }
}

// MPFR writes "1.2500e-1"; small exponents read better as plain decimals.
fn tidy_exponent(s: &str) -> String {
    let Some(i) = s.find('e') else {
        return s.to_string();
    };
    let (mant, exp) = s.split_at(i);
    let exp: i32 = exp[1..].parse().unwrap_or(0);
    if (-5..0).contains(&exp) {
        let (sign, body) = match mant.strip_prefix('-') {
            Some(b) => ("-", b),
            None => ("", mant),
        };
        let digits: String = body.chars().filter(|c| *c != '.').collect();
        let zeros = "0".repeat((-exp - 1) as usize);
        return format!("{sign}0.{zeros}{digits}");
    }
    format!("{mant}e{exp}")
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = f.precision().unwrap_or(precision::digits() as usize);
        f.write_str(&self.to_string_digits(d))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({})", self.to_string_digits(20))
    }
}

impl From<i64> for Real {
    fn from(n: i64) -> Self {
        Real::from_i64(n)
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real::from_f64(x)
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident, $atr:ident, $amethod:ident, $op:tt) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                Real::wrap(Float::with_val(precision::bits(), &self.0 $op &rhs.0))
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                &self $op &rhs
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                &self $op rhs
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self $op &rhs
            }
        }
        impl $atr<&Real> for Real {
            fn $amethod(&mut self, rhs: &Real) {
                *self = &*self $op rhs;
            }
        }
        impl $atr<Real> for Real {
            fn $amethod(&mut self, rhs: Real) {
                *self = &*self $op &rhs;
            }
        }
    };
}

real_binop!(Add, add, AddAssign, add_assign, +);
real_binop!(Sub, sub, SubAssign, sub_assign, -);
real_binop!(Mul, mul, MulAssign, mul_assign, *);
real_binop!(Div, div, DivAssign, div_assign, /);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(Float::with_val(precision::bits(), -&self.0))
    }
}

impl std::iter::Sum for Real {
    fn sum<I: Iterator<Item = Real>>(iter: I) -> Real {
        iter.fold(Real::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_have_expected_leading_digits() {
        assert!((Real::pi().to_f64() - std::f64::consts::PI).abs() < 1e-15);
        assert!((Real::euler_gamma().to_f64() - 0.5772156649015329).abs() < 1e-15);
    }

    #[test]
    fn arithmetic_keeps_precision() {
        let third = Real::ratio(1, 3);
        let back = &third * &Real::from_i64(3);
        assert!((back - Real::one()).abs().to_f64() < 1e-35);
    }

    #[test]
    fn display_round_trips() {
        let x = Real::pi();
        let s = x.to_string_digits(30);
        let y = Real::parse(&s).unwrap();
        assert!((x - y).abs().to_f64() < 1e-28);
        assert_eq!(Real::from_f64(0.25).to_string_digits(5), "0.25000");
        assert_eq!(Real::from_f64(-3e-4).to_string_digits(2), "-0.00030");
        assert_eq!(Real::from_f64(1e-20).to_string_digits(2), "1.0e-20");
    }
}
