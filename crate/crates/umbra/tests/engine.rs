use std::collections::BTreeMap;

use umbra::jets::OracleId;
use umbra::numerics::precision::with_digits;
use umbra::umbral::{
    moment_value, ramanujan_sum, umbral_polynomial, ConvergenceClass, Method, Mode, SumConfig, Symbol,
};
use umbra::{Complex, Real};

fn sum(o: &OracleId, a: f64, cfg: &SumConfig) -> umbra::umbral::UmbralResult {
    ramanujan_sum(o, &Real::from_f64(a), cfg).unwrap()
}

#[test]
fn exp_neg_is_one_over_e_minus_one() {
    with_digits(30, || {
        let r = sum(
            &OracleId::from_name("exp-neg", None).unwrap(),
            0.0,
            &SumConfig::default(),
        );
        let e = Real::one().exp();
        let want = (e - Real::one()).recip();
        assert!((r.value.re - want).abs().to_f64() < 1e-25);
        assert_eq!(r.class, ConvergenceClass::Convergent);
    })
    .unwrap();
}

#[test]
fn kernels_on_grid() {
    with_digits(30, || {
        for x in [2i64, 4, 9, 16] {
            let xr = Real::from_i64(x);
            let lx = xr.ln();
            let o = OracleId::ExpScaled {
                c: Complex::from_real(-lx.clone()),
            };
            let v = sum(&o, 0.0, &SumConfig::default()).value.re;
            let want = &lx / (xr - Real::one());
            assert!((v - want).abs().to_f64() < 1e-25, "x = {x}");
        }
    })
    .unwrap();
}

#[test]
fn shift_does_not_move_a_convergent_result() {
    with_digits(30, || {
        let o = OracleId::Pow {
            c: Real::zero(),
            alpha: Complex::from_f64(-1.0, 0.0),
        };
        let a = sum(
            &o,
            0.0,
            &SumConfig {
                mode: Mode::ShiftedEm,
                n: Some(30),
                m: None,
            },
        );
        let b = sum(
            &o,
            0.0,
            &SumConfig {
                mode: Mode::ShiftedEm,
                n: Some(35),
                m: None,
            },
        );
        let d = (&a.value - &b.value).abs().to_f64();
        assert!(d <= 2.0 * (a.error_estimate + b.error_estimate) + 1e-28, "{d}");
    })
    .unwrap();
}

#[test]
fn divergent_case_uses_shifted_em() {
    with_digits(30, || {
        let r = sum(&OracleId::XLogX { c: Real::zero() }, 0.0, &SumConfig::default());
        assert_eq!(r.method, Method::ShiftedEm);
        assert_eq!(r.class, ConvergenceClass::Asymptotic);
        let want = moment_value(&Symbol::BLogB).unwrap();
        assert!((r.value.re - want).abs().to_f64() < 1e-25);
    })
    .unwrap();
}

#[test]
fn cube_of_b_is_not_a_product_of_moments() {
    with_digits(30, || {
        let mut c = BTreeMap::new();
        c.insert(3, Complex::one());
        let cube = umbral_polynomial(&c).unwrap();
        assert!(cube.abs().is_zero());
        let prod = moment_value(&Symbol::Power(2)).unwrap() * moment_value(&Symbol::Power(1)).unwrap();
        assert!((prod - Real::ratio(1, 12)).abs().to_f64() < 1e-30);
    })
    .unwrap();
}

#[test]
fn negative_powers_hit_zeta() {
    with_digits(30, || {
        let v = moment_value(&Symbol::Power(-1)).unwrap();
        let pi = Real::pi();
        assert!((v - &pi * &pi / Real::from_i64(6)).abs().to_f64() < 1e-28);
    })
    .unwrap();
}
