//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test -p umbra-cli --test acceptance`.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use umbra::bernoulli::bernoulli_number;
use umbra::catalogue::{run_identities, CatalogueConfig, Status, VerificationReport};
use umbra::explicit;
use umbra::jets::OracleId;
use umbra::numerics::precision::with_digits;
use umbra::numerics::{accelerate_alternating, alternating_terms_for, extrapolate_to_zero};
use umbra::special::{digamma_pi, zeta};
use umbra::umbral::{
    derivative, eval_poly, moment_value, ramanujan_sum, umbral_polynomial, SumConfig, Symbol, UmbralExpr,
};
use umbra::xi::moment_c;
use umbra::{Complex, Rational, Real};

const P: u32 = 30;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn at_p<F: FnOnce() -> Outcome>(f: F) -> Outcome {
    with_digits(P, f).map_err(|e| e.to_string())?
}

fn reports(ids: &[&str]) -> Result<Vec<VerificationReport>, String> {
    let cfg = CatalogueConfig {
        digits: Some(P),
        deterministic: true,
        ..Default::default()
    };
    run_identities(ids, &cfg).map_err(|e| e.to_string())
}

/// Every report passes its own check and every residual is below `tol`.
fn residuals_below(ids: &[&str], tol: f64) -> Outcome {
    let rs = reports(ids)?;
    let mut bad = Vec::new();
    let mut worst = 0.0f64;
    for r in &rs {
        let res = r.residual.unwrap_or(f64::NAN);
        worst = worst.max(res);
        if r.status != Status::Pass || res.is_nan() || res >= tol {
            bad.push(format!("{} {} ({res:.2e})", r.id, r.status));
        }
    }
    check(
        bad.is_empty(),
        if bad.is_empty() {
            format!("max residual {worst:.2e}")
        } else {
            bad.join(", ")
        },
    )
}

fn c1_exp_neg() -> Outcome {
    at_p(|| {
        let o = OracleId::from_name("exp-neg", None).map_err(|e| e.to_string())?;
        let v = ramanujan_sum(&o, &Real::zero(), &SumConfig::default())
            .map_err(|e| e.to_string())?
            .value;
        let want = Real::parse("0.58197670686932642438500200510901155854686930107539613626678705964804381").unwrap();
        let d = (v.re - want).abs().to_f64();
        check(d < 1e-12, format!("|e^-B - 1/(e-1)| = {d:.2e}"))
    })
}

fn c2_gamma_three_ways() -> Outcome {
    at_p(|| {
        let err = |e: umbra::special::SpecialError| e.to_string();
        let n = alternating_terms_for(P);
        let mut terms = Vec::new();
        for k in 2..2 + n as i64 {
            let z = zeta(&Complex::from_real(Real::from_i64(k)), 0).map_err(err)?.re / Real::from_i64(k);
            terms.push(if k % 2 == 0 { z } else { -z });
        }
        let series = accelerate_alternating::<Real, Real>(&terms)
            .map_err(|e| e.to_string())?
            .value;
        let (mut hs, mut vs) = (Vec::new(), Vec::new());
        for j in 3..=8 {
            let h = Real::from_i64(10).powi(-j);
            let s = Complex::from_real(Real::one() + &h);
            vs.push(zeta(&s, 0).map_err(err)?.re + &h * zeta(&s, 1).map_err(err)?.re);
            hs.push(h);
        }
        let limit = extrapolate_to_zero::<Real, Real>(&hs, &vs).map_err(|e| e.to_string())?;
        let log_b = -digamma_pi(&Complex::zero()).map_err(err)?.re;
        let d = [(&series - &limit), (&series - &log_b), (&limit - &log_b)]
            .iter()
            .map(|x| x.abs().to_f64())
            .fold(0.0, f64::max);
        check(d < 1e-10, format!("max pairwise difference {d:.2e}"))
    })
}

fn c3_b_constants() -> Outcome {
    let targets = at_p(|| {
        let pi = Real::pi();
        let l2p = (&pi * Real::from_i64(2)).ln();
        let g = Real::euler_gamma();
        let closed = [
            ((Real::one() - &l2p) / Real::from_i64(2), -0.4189385),
            (Real::ratio(1, 2) - Real::ln2(), -0.1931472),
            ((&l2p - Real::one()) / Real::from_i64(2) - &g, -0.1582771),
            (
                (Real::one() + &g + &l2p) / Real::from_i64(2) + &pi * &pi / Real::from_i64(16),
                2.3243966,
            ),
            (
                &pi / Real::from_i64(4) * (Real::one() + &g + (&pi * Real::from_i64(4)).ln()),
                3.2266040,
            ),
        ];
        let worst = closed.iter().map(|(v, d)| (v.to_f64() - d).abs()).fold(0.0, f64::max);
        check(worst < 1e-7, format!("closed forms match quoted digits to {worst:.1e}"))
    })?;
    let r = residuals_below(
        &[
            "prop-4.1-blogb",
            "prop-4.1-logpib",
            "prop-4.1-logsin-chain",
            "prop-4.1-zetalog",
            "prop-4.1-zetalog-weighted",
        ],
        1e-8,
    )?;
    Ok(format!("{r}; {targets}"))
}

fn c4_lambdas() -> Outcome {
    residuals_below(&["prop-4.3-lambda1", "prop-4.3-lambda2"], 1e-8)
}

fn c5_first_identities() -> Outcome {
    let r = residuals_below(&["eq-1.2", "eq-1.3", "eq-1.4", "eq-1.5"], 1e-10)?;
    let complex = reports(&["eq-1.2"])?[0].points.iter().any(|p| p.label.contains('i'));
    check(complex, format!("{r}, complex s on grid: {complex}"))
}

fn c6_lfunction() -> Outcome {
    let r = residuals_below(&["lfunc-hurwitz"], 1e-10)?;
    let rep = &reports(&["lfunc-hurwitz"])?[0];
    let v: f64 = rep.points[0].lhs.parse().map_err(|_| "unparsable value".to_string())?;
    check((v - 0.9159655942).abs() < 1e-10, format!("{r}, L(2, chi_4) = {v:.10}"))
}

fn c7_logpi_functional_equation() -> Outcome {
    residuals_below(&["funceq-5.1", "eq-5.7"], 1e-8)
}

fn c8_logzeta_functional_equation() -> Outcome {
    let rep = &reports(&["funceq-6.1"])?[0];
    let detail: Vec<String> = rep
        .points
        .iter()
        .map(|p| format!("{}: {:.2e}", p.label, p.residual))
        .collect();
    let ok = rep.points.len() == 3 && rep.points.iter().all(|p| p.residual < 1e-6);
    check(ok, detail.join(", "))
}

fn c9_xi() -> Outcome {
    let r = residuals_below(&["xi-symmetry", "xi-positivity", "xi-hardy"], f64::INFINITY)?;
    let m = at_p(|| {
        let c1 = moment_c(1).map_err(|e| e.to_string())?.abs().to_f64();
        let c3 = moment_c(3).map_err(|e| e.to_string())?.abs().to_f64();
        check(c1 < 1e-4 && c3 < 1e-4, format!("|C_1| = {c1:.1e}, |C_3| = {c3:.1e}"))
    })?;
    let diag = reports(&["xi-hardy"])?[0].diagnostics.clone().unwrap_or_default();
    Ok(format!("{r}; {m}; {diag}"))
}

fn c10_explicit_formula() -> Outcome {
    let zeros = explicit::reference_zeros();
    let mut mean = [0.0; 2];
    let mut detail = Vec::new();
    let mut ok = true;
    for x in [10.0, 20.0, 50.0] {
        let c = explicit::psi_comparisons(x, &zeros, &[20, 100]).map_err(|e| e.to_string())?;
        mean[0] += c[0].difference / 3.0;
        mean[1] += c[1].difference / 3.0;
        if x != 20.0 {
            ok &= c[1].difference <= 0.05;
            detail.push(format!("x={x}: {:.2e}", c[1].difference));
        }
    }
    ok &= mean[1] < mean[0];
    detail.push(format!("mean K=20 {:.2e} -> K=100 {:.2e}", mean[0], mean[1]));
    check(ok, detail.join(", "))
}

fn c11_internal_zeros() -> Outcome {
    at_p(|| {
        let computed = explicit::compute_zeros(3).map_err(|e| e.to_string())?;
        let table = explicit::reference_zeros();
        let d = computed
            .ordinates()
            .iter()
            .zip(table.ordinates())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        check(computed.len() == 3 && d < 1e-4, format!("first three within {d:.1e}"))
    })
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from((rng.gen_range(-50i64..50), rng.gen_range(1i64..12)))
}

fn c12_exactness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let ev = |e: &UmbralExpr| e.evaluate_exact().map_err(|e| e.to_string());
    for case in 0..100 {
        let deg = rng.gen_range(0..=10);
        let poly: Vec<Rational> = (0..=deg).map(|_| random_rational(&mut rng)).collect();
        let a = random_rational(&mut rng);
        let z = random_rational(&mut rng);
        let mz = Rational::from(-&z);
        let df = derivative(&poly);
        let d2 = derivative(&df);
        let fa1 = eval_poly(&df, &a);
        let ok = ev(&UmbralExpr::compose_shift(&poly, &a, &z))?
            == ev(&UmbralExpr::compose_shift(&poly, &a, &mz))? + Rational::from(&fa1 * &z)
            && ev(&UmbralExpr::compose_shift(&df, &a, &z).shift_power(1))?
                == -ev(&UmbralExpr::compose_shift(&df, &a, &mz).shift_power(1))? + fa1.clone()
            && ev(&UmbralExpr::compose_shift(&d2, &a, &z).shift_power(2))?
                == ev(&UmbralExpr::compose_shift(&d2, &a, &mz).shift_power(2))?;
        if !ok {
            return Err(format!("Taylor reflection broke on instance {case}"));
        }
    }
    let one = Rational::from(1);
    for n in 0..=256u32 {
        let lhs = ev(&UmbralExpr::binomial_power(&one, &Rational::from(-1), n))?;
        if lhs != bernoulli_number(n as usize).map_err(|e| e.to_string())? {
            return Err(format!("(1 - B)^{n} != B^{n}"));
        }
    }
    Ok("100 random instances exact; (1 - B)^n = B^n for n <= 256".into())
}

fn c13_non_multiplicative() -> Outcome {
    at_p(|| {
        let mut c = BTreeMap::new();
        c.insert(3, Complex::one());
        let cube = umbral_polynomial(&c).map_err(|e| e.to_string())?;
        let m = |n| moment_value(&Symbol::Power(n)).map_err(|e| e.to_string());
        let product = m(2)? * m(1)?;
        let twelfth = (product.clone() - Real::ratio(1, 12)).abs().to_f64() < 1e-30;
        check(
            cube.abs().is_zero() && twelfth,
            format!(
                "B^3 = {}, B^2 * B^1 = {}",
                cube.re.to_string_digits(3),
                product.to_string_digits(6)
            ),
        )
    })
}

fn c14_determinism() -> Outcome {
    let run = || -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_umbra"))
            .args(["verify", "--all", "--deterministic", "--format", "json"])
            .env("UMBRA_PRECISION", P.to_string())
            .output()
            .map_err(|e| e.to_string())?;
        match out.status.code() {
            Some(0) | Some(1) => Ok(out.stdout),
            other => Err(format!("exit {other:?}: {}", String::from_utf8_lossy(&out.stderr))),
        }
    };
    let a = run()?;
    let b = run()?;
    check(
        !a.is_empty() && a == b,
        format!("two runs, {} bytes each, identical: {}", a.len(), a == b),
    )
}

fn main() {
    let criteria: [Criterion; 14] = [
        ("e^-B = 1/(e-1)", c1_exp_neg),
        ("gamma three ways", c2_gamma_three_ways),
        ("B log B, log Pi(B), log sin, zeta'/zeta constants", c3_b_constants),
        ("lambda_1, lambda_2 double sums", c4_lambdas),
        ("B^{1-s} family", c5_first_identities),
        ("L(2, chi_4) via Hurwitz", c6_lfunction),
        ("log Pi(Bs) functional equation", c7_logpi_functional_equation),
        ("log zeta(B+s) functional equation", c8_logzeta_functional_equation),
        ("xi(B+s): symmetry, positivity, zeros, moments", c9_xi),
        ("explicit formula for psi(x)", c10_explicit_formula),
        ("internal zeros vs table", c11_internal_zeros),
        ("exact Taylor reflection and (1-B)^n = B^n", c12_exactness),
        ("B^3 is not B^2 * B", c13_non_multiplicative),
        ("verify --all is deterministic", c14_determinism),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(d) => println!("PASS {:>2} {name} ({secs:.1}s): {d}", k + 1),
            Err(d) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.1}s): {d}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
