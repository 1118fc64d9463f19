use umbra::numerics::precision::with_digits;
use umbra::special::{digamma_pi, dirichlet_l, hurwitz_zeta, log_gamma_pi, zeta, DirichletCharacter};
use umbra::{Complex, Real};

#[test]
fn zeta_two_is_pi_squared_over_six() {
    with_digits(30, || {
        let v = zeta(&Complex::from_f64(2.0, 0.0), 0).unwrap();
        let pi = Real::pi();
        assert!((v.re - &pi * &pi / Real::from_i64(6)).abs().to_f64() < 1e-28);
    })
    .unwrap();
}

#[test]
fn hurwitz_pieces_rebuild_zeta() {
    with_digits(30, || {
        let s = Complex::from_f64(2.5, 0.0);
        let k = 3i64;
        let mut acc = Complex::zero();
        for r in 1..=k {
            acc = &acc + &hurwitz_zeta(&s, &Real::ratio(r, k)).unwrap();
        }
        let scaled = acc.scale(&(Real::from_i64(k).ln() * Real::from_f64(-2.5)).exp());
        let d = (&scaled - &zeta(&s, 0).unwrap()).abs().to_f64();
        assert!(d < 1e-26, "{d}");
    })
    .unwrap();
}

#[test]
fn catalan_from_chi4() {
    with_digits(30, || {
        let v = dirichlet_l(&Complex::from_f64(2.0, 0.0), &DirichletCharacter::chi4()).unwrap();
        assert!((v.re.to_f64() - 0.915_965_594_177_219).abs() < 1e-15);
    })
    .unwrap();
}

#[test]
fn gamma_family() {
    with_digits(30, || {
        // Π(1/2) = √π/2, Π′/Π(0) = −γ
        let lg = log_gamma_pi(&Complex::from_f64(0.5, 0.0)).unwrap().re;
        let want = (Real::pi().sqrt() / Real::from_i64(2)).ln();
        assert!((lg - want).abs().to_f64() < 1e-28);
        let d = digamma_pi(&Complex::zero()).unwrap().re;
        assert!((d + Real::euler_gamma()).abs().to_f64() < 1e-28);
    })
    .unwrap();
}

#[test]
fn bad_character_is_rejected() {
    assert!(DirichletCharacter::from_reals(&[]).is_err());
}
