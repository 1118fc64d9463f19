use std::path::Path;

use umbra::explicit::{self, parse_zeros, ExplicitError};
use umbra::numerics::precision::with_digits;
use umbra::xi::{moment_c, xi_b, XiKernel};
use umbra::Complex;

#[test]
fn xi_is_even_and_positive_on_reals() {
    with_digits(20, || {
        let s = Complex::from_f64(1.3, 4.0);
        for k in [XiKernel::Plain, XiKernel::SinWeighted] {
            let a = xi_b(&s, k).unwrap().value;
            let b = xi_b(&-&s, k).unwrap().value;
            assert!((&a - &b).abs().to_f64() < 1e-15);
        }
        for x in [-4.0, 0.0, 2.5] {
            let v = xi_b(&Complex::from_f64(x, 0.0), XiKernel::Plain).unwrap().value;
            assert!(v.re.to_f64() > 0.0);
        }
    })
    .unwrap();
}

#[test]
fn odd_moments_vanish() {
    with_digits(20, || {
        for n in [1, 3] {
            assert!(moment_c(n).unwrap().abs().to_f64() < 1e-4);
        }
    })
    .unwrap();
}

#[test]
fn zeros_file_errors_carry_path_and_line() {
    let e = parse_zeros("# header\n14.13\n\n12.0\n", Path::new("z.txt")).unwrap_err();
    assert!(matches!(e, ExplicitError::Parse { line: 4, .. }), "{e}");
    assert!(e.to_string().starts_with("z.txt:4:"));
    assert!(parse_zeros("abc\n", Path::new("z.txt")).is_err());
    assert!(parse_zeros("-3\n", Path::new("z.txt")).is_err());
}

#[test]
fn computed_zeros_match_table() {
    with_digits(30, || {
        let c = explicit::compute_zeros(3).unwrap();
        let r = explicit::reference_zeros();
        for (a, b) in c.ordinates().iter().zip(r.ordinates()) {
            assert!((a - b).abs() < 1e-4);
        }
    })
    .unwrap();
}

#[test]
fn explicit_formula_closes_at_ten() {
    let z = explicit::reference_zeros();
    let c = explicit::psi_comparisons(10.0, &z, &[0, 100]).unwrap();
    assert!(c[1].difference <= 0.05);
    assert!(c[1].difference < c[0].difference);
    // prime side: log 2 + log 3 + log 2 + log 5 + log 7 + log 2 + log 3 at x = 10
    assert!((c[0].prime_side - explicit::psi_prime_side(10.0).unwrap()).abs() < 1e-12);
}
