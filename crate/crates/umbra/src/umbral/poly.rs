//! Laurent polynomials in B, expanded completely before the moments are
//! substituted.

use std::collections::BTreeMap;

use rug::Rational;

use super::moments::{moment_value, Symbol};
use super::UmbralError;
use crate::bernoulli;
use crate::numerics::{Complex, Real};

/// ∑ c_n Bⁿ with moments substituted once: ∑ c_n · moment(Bⁿ).
pub fn umbral_polynomial(coeffs: &BTreeMap<i64, Complex>) -> Result<Complex, UmbralError> {
    let mut acc = Complex::zero();
    for (&n, c) in coeffs {
        let m = moment_value(&Symbol::Power(n))?;
        acc += c.scale(&m);
    }
    Ok(acc)
}

/// Exact version for non-negative exponents.
pub fn umbral_polynomial_exact(coeffs: &BTreeMap<i64, Rational>) -> Result<Rational, UmbralError> {
    let mut acc = Rational::new();
    for (&n, c) in coeffs {
        if n < 0 {
            return Err(UmbralError::UnknownSymbol(format!(
                "B^{n} has no exact rational moment"
            )));
        }
        let b = bernoulli::bernoulli_number(n as usize)?;
        acc += Rational::from(c * &b);
    }
    Ok(acc)
}

/// An unevaluated polynomial expression in B with exact rational
/// coefficients. Products are formed here, on the expression; evaluated
/// numbers are never multiplied together.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct UmbralExpr {
    terms: BTreeMap<i64, Rational>,
}

impl UmbralExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(n: i64, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(n, c);
        e
    }

    fn add_term(&mut self, n: i64, c: Rational) {
        let entry = self.terms.entry(n).or_default();
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&n);
        }
    }

    pub fn coefficients(&self) -> &BTreeMap<i64, Rational> {
        &self.terms
    }

    /// f(a + zB) for the ordinary polynomial f = ∑ p_k x^k.
    pub fn compose_shift(poly: &[Rational], a: &Rational, z: &Rational) -> Self {
        // Horner in the expression ring.
        let mut acc = Self::zero();
        let lin = {
            let mut e = Self::monomial(0, a.clone());
            e.add_term(1, z.clone());
            e
        };
        for c in poly.iter().rev() {
            acc = acc.mul(&lin);
            acc.add_term(0, c.clone());
        }
        acc
    }

    /// (c₀ + c₁B)ⁿ expanded.
    pub fn binomial_power(c0: &Rational, c1: &Rational, n: u32) -> Self {
        let mut lin = Self::monomial(0, c0.clone());
        lin.add_term(1, c1.clone());
        let mut acc = Self::monomial(0, Rational::from(1));
        for _ in 0..n {
            acc = acc.mul(&lin);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&n, c) in &other.terms {
            out.add_term(n, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (&n, v) in &self.terms {
            out.add_term(n, Rational::from(v * c));
        }
        out
    }

    /// Expression product (the umbra is applied afterwards, once).
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&n, a) in &self.terms {
            for (&m, b) in &other.terms {
                out.add_term(n + m, Rational::from(a * b));
            }
        }
        out
    }

    /// Multiply by B^k.
    pub fn shift_power(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (&n, c) in &self.terms {
            out.add_term(n + k, c.clone());
        }
        out
    }

    pub fn evaluate_exact(&self) -> Result<Rational, UmbralError> {
        umbral_polynomial_exact(&self.terms)
    }

    pub fn evaluate(&self) -> Result<Real, UmbralError> {
        let coeffs: BTreeMap<i64, Complex> = self
            .terms
            .iter()
            .map(|(&n, c)| (n, Complex::from_real(Real::from_rational(c))))
            .collect();
        Ok(umbral_polynomial(&coeffs)?.re)
    }
}

/// Derivative of an ordinary polynomial given by its coefficients.
pub fn derivative(poly: &[Rational]) -> Vec<Rational> {
    poly.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| Rational::from(c * k as u32))
        .collect()
}

/// Value of an ordinary polynomial.
pub fn eval_poly(poly: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::new();
    for c in poly.iter().rev() {
        acc *= x;
        acc += c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn cube_vanishes_and_is_not_a_product() {
        let e = UmbralExpr::monomial(3, q(1, 1));
        assert_eq!(e.evaluate_exact().unwrap(), 0);
        let b2 = UmbralExpr::monomial(2, q(1, 1)).evaluate_exact().unwrap();
        let b1 = UmbralExpr::monomial(1, q(1, 1)).evaluate_exact().unwrap();
        let product = Rational::from(&b2 * &b1);
        assert_eq!(product, q(1, 12));
        assert_ne!(e.evaluate_exact().unwrap(), product);
        // the product formed on expressions is B³
        let prod_expr = UmbralExpr::monomial(2, q(1, 1)).mul(&UmbralExpr::monomial(1, q(1, 1)));
        assert_eq!(prod_expr.evaluate_exact().unwrap(), 0);
    }

    #[test]
    fn reflection_exact_up_to_cap() {
        for n in 0..=256u32 {
            let lhs = UmbralExpr::binomial_power(&q(1, 1), &q(-1, 1), n)
                .evaluate_exact()
                .unwrap();
            let rhs = bernoulli::bernoulli_number(n as usize).unwrap();
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn cotangent_two_terms() {
        // 2/(πB) − (π/12)·B·… : c₋₁ = 2/π, c₁ = −π/6 gives π/4
        let pi = Real::pi();
        let mut c = BTreeMap::new();
        c.insert(-1, Complex::from_real(Real::from_i64(2) / &pi));
        c.insert(1, Complex::from_real(-(&pi / Real::from_i64(6))));
        // odd moments beyond B₁ vanish, so adding B³, B⁵ terms changes nothing
        c.insert(3, Complex::from_real(-(pi.powi(3) / Real::from_i64(360))));
        let v = umbral_polynomial(&c).unwrap();
        assert!((v.re - &pi / Real::from_i64(4)).abs().to_f64() < 1e-32);
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..12).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn taylor_reflection_exact(
            poly in prop::collection::vec(rational(), 1..=11),
            a in rational(),
            z in rational(),
        ) {
            let df = derivative(&poly);
            let fa1 = eval_poly(&df, &a);
            // f(a + Bz) = f(a − Bz) + f′(a) z
            let lhs = UmbralExpr::compose_shift(&poly, &a, &z).evaluate_exact().unwrap();
            let mz = Rational::from(-&z);
            let rhs = UmbralExpr::compose_shift(&poly, &a, &mz).evaluate_exact().unwrap()
                + Rational::from(&fa1 * &z);
            prop_assert_eq!(lhs, rhs);
            // B f′(a + Bz) = −B f′(a − Bz) + f′(a)
            let l = UmbralExpr::compose_shift(&df, &a, &z).shift_power(1).evaluate_exact().unwrap();
            let r = -UmbralExpr::compose_shift(&df, &a, &mz).shift_power(1).evaluate_exact().unwrap()
                + fa1.clone();
            prop_assert_eq!(l, r);
            // B² f″(a + Bz) = B² f″(a − Bz)
            let d2 = derivative(&df);
            let l = UmbralExpr::compose_shift(&d2, &a, &z).shift_power(2).evaluate_exact().unwrap();
            let r = UmbralExpr::compose_shift(&d2, &a, &mz).shift_power(2).evaluate_exact().unwrap();
            prop_assert_eq!(l, r);
        }
    }
}
