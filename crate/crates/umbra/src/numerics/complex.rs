use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use super::Real;

/// A complex number as a pair of working-precision reals.
#[derive(Clone, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        Complex { re, im: Real::zero() }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Complex::new(Real::from_f64(re), Real::from_f64(im))
    }

    pub fn zero() -> Self {
        Complex::from_real(Real::zero())
    }

    pub fn one() -> Self {
        Complex::from_real(Real::one())
    }

    pub fn i() -> Self {
        Complex::new(Real::zero(), Real::one())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn arg(&self) -> Real {
        self.im.atan2(&self.re)
    }

    pub fn scale(&self, r: &Real) -> Self {
        Complex::new(&self.re * r, &self.im * r)
    }

    pub fn add_real(&self, r: &Real) -> Self {
        Complex::new(&self.re + r, self.im.clone())
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        Complex::new(&self.re / &d, -(&self.im / &d))
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Complex::new(&m * &c, &m * &s)
    }

    /// Principal logarithm, arg in (−π, π].
    pub fn ln(&self) -> Self {
        Complex::new(self.abs().ln(), self.arg())
    }

    pub fn sqrt(&self) -> Self {
        if self.im.is_zero() && !self.re.is_sign_negative() {
            return Complex::from_real(self.re.sqrt());
        }
        let r = self.abs();
        let half = Real::ratio(1, 2);
        let a = ((&r + &self.re) * &half).sqrt();
        let b = ((&r - &self.re) * &half).sqrt();
        let b = if self.im.is_sign_negative() { -b } else { b };
        Complex::new(a, b)
    }

    pub fn sin(&self) -> Self {
        let (s, c) = self.re.sin_cos();
        Complex::new(&s * &self.im.cosh(), &c * &self.im.sinh())
    }

    pub fn cos(&self) -> Self {
        let (s, c) = self.re.sin_cos();
        Complex::new(&c * &self.im.cosh(), -(&s * &self.im.sinh()))
    }

    pub fn powc(&self, e: &Complex) -> Self {
        if self.re.is_zero() && self.im.is_zero() {
            return Complex::zero();
        }
        (e * &self.ln()).exp()
    }

    pub fn powi(&self, n: i32) -> Self {
        let mut base = if n < 0 { self.recip() } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Complex::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn to_string_digits(&self, digits: usize) -> String {
        if self.im.is_zero() {
            return self.re.to_string_digits(digits);
        }
        let sign = if self.im.is_sign_negative() { "-" } else { "+" };
        format!(
            "{} {} {}i",
            self.re.to_string_digits(digits),
            sign,
            self.im.abs().to_string_digits(digits)
        )
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = f.precision().unwrap_or(super::precision::digits() as usize);
        f.write_str(&self.to_string_digits(d))
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex({})", self.to_string_digits(20))
    }
}

impl From<Real> for Complex {
    fn from(r: Real) -> Self {
        Complex::from_real(r)
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        if self.im.is_zero() {
            return rhs.scale(&self.re);
        }
        if rhs.im.is_zero() {
            return self.scale(&rhs.re);
        }
        Complex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div<&Complex> for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        if rhs.im.is_zero() {
            return Complex::new(&self.re / &rhs.re, &self.im / &rhs.re);
        }
        let d = rhs.norm_sqr();
        Complex::new(
            (&self.re * &rhs.re + &self.im * &rhs.im) / &d,
            (&self.im * &rhs.re - &self.re * &rhs.im) / &d,
        )
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: &Complex) -> Complex {
                (&self).$method(rhs)
            }
        }
        impl $tr<Complex> for &Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Complex> for Complex {
    fn add_assign(&mut self, rhs: &Complex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign<Complex> for Complex {
    fn add_assign(&mut self, rhs: Complex) {
        *self += &rhs;
    }
}

impl SubAssign<&Complex> for Complex {
    fn sub_assign(&mut self, rhs: &Complex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Complex> for Complex {
    fn mul_assign(&mut self, rhs: &Complex) {
        *self = &*self * rhs;
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}
