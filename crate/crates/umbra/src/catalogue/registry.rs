//! Registry entries. Each evaluator computes both sides on its grid and
//! records them as points; the surrounding runner decides pass/fail.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::lambda::{lambda1, lambda1_closed, lambda2, lambda2_closed};
use super::IdentityClass::{AlgebraicChain, Asymptotic, Convergent, FormalNoncheck};
use super::{CatalogueError, Identity, Run};
use crate::bernoulli;
use crate::explicit;
use crate::jets::OracleId;
use crate::numerics::{accelerate_alternating, alternating_terms_for, extrapolate_to_zero, precision, Complex, Real};
use crate::special::{digamma_pi, dirichlet_l, hurwitz_zeta, log_gamma_pi, zeta, DirichletCharacter};
use crate::umbral::{moment_value, Mode, Symbol};
use crate::xi::{scan_xi_zeros_tol, xi_b, XiKernel};

type Res = Result<(), CatalogueError>;

fn r(x: f64) -> Real {
    Real::from_f64(x)
}

fn q(a: i64, b: i64) -> Real {
    Real::ratio(a, b)
}

fn cx(x: &Real) -> Complex {
    Complex::from_real(x.clone())
}

fn pi() -> Real {
    Real::pi()
}

fn euler() -> Real {
    Real::euler_gamma()
}

fn log2pi() -> Real {
    (pi() * Real::from_i64(2)).ln()
}

/// Π′/Π at a real point.
fn dpi(s: &Real) -> Result<Real, CatalogueError> {
    Ok(digamma_pi(&cx(s))?.re)
}

fn cot(x: &Real) -> Real {
    x.tan().recip()
}

fn zeta_c(s: &Complex) -> Result<Complex, CatalogueError> {
    Ok(zeta(s, 0)?)
}

fn zeta_prime(s: &Complex) -> Result<Complex, CatalogueError> {
    Ok(zeta(s, 1)?)
}

fn label(name: &str, v: &Real) -> String {
    format!("{name}={}", v.to_string_digits(6))
}

fn pow_oracle(s: &Complex) -> OracleId {
    OracleId::Pow {
        c: Real::zero(),
        alpha: &Complex::one() - s,
    }
}

fn logpi(scale: Real, shift: Real) -> OracleId {
    OracleId::LogPi { scale, shift }
}

/// (1 − log 2π)/2, the tabled value of B log B.
fn blogb_closed() -> Real {
    (Real::one() - log2pi()) / Real::from_i64(2)
}

/// Σ_k (−1)^k (2πs)^{2k} B_{2k}²/(2k)!, the moment series of πBs·cot(πBs),
/// stopped before its smallest term. Returns (sum, |smallest term|, k).
pub(crate) fn cot_moment_series(s: &Real) -> Result<(Real, f64, usize), CatalogueError> {
    let w = (pi() * Real::from_i64(2) * s).powi(2);
    let mut pw = Real::one();
    let mut fact = Real::one();
    let mut terms: Vec<Real> = Vec::new();
    let kmax = bernoulli::table().cap() / 2;
    for k in 0..=kmax {
        if k > 0 {
            pw *= &w;
            fact *= Real::from_u64((2 * k * (2 * k - 1)) as u64);
        }
        let b = bernoulli::moment(2 * k).map_err(crate::umbral::UmbralError::from)?;
        let mut t = &pw * &b * &b / &fact;
        if k % 2 == 1 {
            t = -t;
        }
        terms.push(t);
        let n = terms.len();
        if n >= 3 && terms[n - 1].abs() > terms[n - 2].abs() {
            let smallest = n - 2;
            let sum: Real = terms[..smallest].iter().cloned().sum();
            return Ok((sum, terms[smallest].abs().to_f64(), smallest));
        }
    }
    Err(CatalogueError::Check(
        "cot moment series did not reach its smallest term within the Bernoulli table".into(),
    ))
}

fn eq_exp_kernel(run: &mut Run) -> Res {
    let grid = [
        (0.5, 0.0),
        (1.0, 0.0),
        (2.0, 0.0),
        (4.0, 0.0),
        (6.0, 0.0),
        (-0.5, 0.0),
        (-1.0, 0.0),
        (1.0, 2.0),
        (-0.5, 3.0),
        (0.1, 5.5),
    ];
    for (a, b) in grid {
        let z = Complex::from_f64(a, b);
        let o = OracleId::ExpScaled { c: -&z };
        let lhs = run.engine(&o, &Real::zero())?;
        let rhs = &z / &(&z.exp() - &Complex::one());
        run.point(format!("z={}", z.to_string_digits(4)), &lhs, &rhs);
    }
    Ok(())
}

fn eq_1_2(run: &mut Run) -> Res {
    for (a, b) in [(2.0, 0.0), (3.0, 0.0), (5.0, 0.0), (2.5, 0.0), (3.0, 2.0)] {
        let s = Complex::from_f64(a, b);
        let lhs = run.engine(&pow_oracle(&s), &Real::zero())?;
        let rhs = &zeta_c(&s)? * &(&s - &Complex::one());
        run.point(format!("s={}", s.to_string_digits(4)), &lhs, &rhs);
    }
    Ok(())
}

fn eq_1_3(run: &mut Run) -> Res {
    let s = Complex::from_f64(3.0, 0.0);
    let z3 = zeta_c(&s)?.re;
    for n in [1i64, 2, 5] {
        let lhs = run.engine(&pow_oracle(&s), &Real::from_i64(n))?;
        let mut partial = z3.clone();
        for j in 1..=n {
            partial -= Real::from_i64(j).powi(-3);
        }
        let rhs = partial * Real::from_i64(2);
        run.point(format!("n={n}"), &lhs, &cx(&rhs));
    }
    Ok(())
}

fn eq_1_4(run: &mut Run) -> Res {
    // With B₁ = +1/2 the shift lands on the lattice α+1, α+2, … exactly as in
    // eq-1.3, so the Hurwitz sum is taken over that lattice: ζ(s,α) − α^{−s}.
    run.note("zeta(s,a) read over the lattice a+1, a+2, ... (consistent with eq-1.3 at a = n)");
    for alpha in [q(1, 2), q(1, 3), Real::from_i64(2)] {
        for s in [2i64, 3] {
            let sc = Complex::from_real(Real::from_i64(s));
            let lhs = run.engine(&pow_oracle(&sc), &alpha)?;
            let first = cx(&alpha.powi(-(s as i32)));
            let rhs = (&hurwitz_zeta(&sc, &alpha)? - &first).scale(&Real::from_i64(s - 1));
            run.point(format!("alpha={}, s={s}", alpha.to_string_digits(4)), &lhs, &rhs);
        }
    }
    Ok(())
}

fn eq_1_5(run: &mut Run) -> Res {
    for s in [3i64, 4] {
        let sc = Complex::from_real(Real::from_i64(s));
        let o = OracleId::PowLog {
            c: Real::zero(),
            alpha: &Complex::one() - &sc,
        };
        let lhs = -run.engine(&o, &Real::zero())?;
        let rhs = &zeta_c(&sc)? + &zeta_prime(&sc)?.scale(&Real::from_i64(s - 1));
        run.point(format!("s={s}"), &lhs, &rhs);
    }
    Ok(())
}

fn gamma_limit(run: &mut Run) -> Res {
    let mut hs = Vec::new();
    let mut vs = Vec::new();
    for j in 3..=8 {
        let h = Real::from_i64(10).powi(-j);
        let s = Complex::from_real(Real::one() + &h);
        let v = zeta_c(&s)?.re + &h * zeta_prime(&s)?.re;
        hs.push(h);
        vs.push(v);
    }
    let lim = extrapolate_to_zero::<Real, Real>(&hs, &vs)?;
    run.method("zeta-euler-maclaurin");
    run.method("polynomial-extrapolation");
    run.point_real("s=1+10^-j, j=3..8", &lim, &euler());
    Ok(())
}

/// Σ_{n≥2} (−1)ⁿ ζ(n)/n by alternating acceleration.
pub(crate) fn gamma_by_series() -> Result<(Real, f64), CatalogueError> {
    let n = alternating_terms_for(precision::digits());
    let mut terms = Vec::with_capacity(n);
    for k in 2..2 + n as i64 {
        let z = zeta_c(&Complex::from_real(Real::from_i64(k)))?.re / Real::from_i64(k);
        terms.push(if k % 2 == 0 { z } else { -z });
    }
    let acc = accelerate_alternating::<Real, Real>(&terms)?;
    Ok((acc.value, acc.error))
}

fn gamma_series(run: &mut Run) -> Res {
    let (v, e) = gamma_by_series()?;
    run.method("alternating-accel");
    run.engine_error(e);
    run.point_real("n>=2", &v, &euler());
    Ok(())
}

fn lfunc_hurwitz(run: &mut Run) -> Res {
    let s = Complex::from_f64(2.0, 0.0);
    let lhs = dirichlet_l(&s, &DirichletCharacter::chi4())?;
    let n = alternating_terms_for(precision::digits());
    let terms: Vec<Real> = (0..n as i64)
        .map(|k| {
            let t = Real::from_i64(2 * k + 1).powi(-2);
            if k % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .collect();
    let direct = accelerate_alternating::<Real, Real>(&terms)?;
    run.method("hurwitz-decomposition");
    run.method("alternating-accel");
    run.point("s=2, chi_4", &lhs, &cx(&direct.value));
    Ok(())
}

fn prop_blogb(run: &mut Run) -> Res {
    let lhs = run.engine(&OracleId::XLogX { c: Real::zero() }, &Real::zero())?;
    let closed = blogb_closed();
    run.point("engine x log x", &lhs, &cx(&closed));
    // −B log B = ζ(0) − ζ′(0)
    let z0 = Complex::zero();
    let route = -(&zeta_c(&z0)? - &zeta_prime(&z0)?);
    run.point("-(zeta(0) - zeta'(0))", &route, &cx(&closed));
    Ok(())
}

fn logpib_closed() -> Real {
    (log2pi() - Real::one()) / Real::from_i64(2) - euler()
}

fn engine_logpib(run: &mut Run) -> Result<Real, CatalogueError> {
    Ok(run
        .engine_mode(&logpi(Real::one(), Real::zero()), &Real::zero(), Mode::ShiftedEm)?
        .re)
}

fn prop_logpib(run: &mut Run) -> Res {
    let lhs = engine_logpib(run)?;
    run.point_real("log Pi(x)", &lhs, &logpib_closed());
    Ok(())
}

fn logsin_chain_value(lpb: &Real) -> Real {
    -euler() - lpb + log2pi() / Real::from_i64(2) - Real::ln2()
}

fn prop_logsin_chain(run: &mut Run) -> Res {
    let lpb = engine_logpib(run)?;
    let closed = q(1, 2) - Real::ln2();
    run.point_real("chain via log Pi(B)", &logsin_chain_value(&lpb), &closed);
    let o = OracleId::LogSin {
        c: pi() / Real::from_i64(2),
    };
    let line = run.engine_mode(&o, &Real::zero(), Mode::MomentLine)?;
    run.point("moment-line log sin(pi x/2)", &line, &cx(&closed));
    Ok(())
}

/// ζ′(B)/ζ(B) through π²/6 + (γ + log π)/2 + λ₁.
fn zetalog_route(run: &mut Run) -> Result<Real, CatalogueError> {
    let l1 = lambda1()?;
    run.method("euler-maclaurin-double-sum");
    run.engine_error(l1.error);
    let p = pi();
    Ok(&p * &p / Real::from_i64(6) + (euler() + p.ln()) / Real::from_i64(2) + l1.value)
}

fn zetalog_closed() -> Real {
    let p = pi();
    (Real::one() + euler() + log2pi()) / Real::from_i64(2) + &p * &p / Real::from_i64(16)
}

fn prop_zetalog(run: &mut Run) -> Res {
    let lhs = zetalog_route(run)?;
    run.point_real("lambda_1 route", &lhs, &zetalog_closed());
    Ok(())
}

fn zetalog_weighted_route(run: &mut Run) -> Result<Real, CatalogueError> {
    let l2 = lambda2()?;
    run.method("euler-maclaurin-double-sum");
    run.method("alternating-accel");
    run.engine_error(l2.error);
    let p = pi();
    Ok(&p * Real::ln2() + (euler() + p.ln()) * &p / Real::from_i64(4) + &p * l2.value)
}

fn zetalog_weighted_closed() -> Real {
    let p = pi();
    &p / Real::from_i64(4) * (Real::one() + euler() + (&p * Real::from_i64(4)).ln())
}

fn prop_zetalog_weighted(run: &mut Run) -> Res {
    let lhs = zetalog_weighted_route(run)?;
    run.point_real("lambda_2 route", &lhs, &zetalog_weighted_closed());
    Ok(())
}

fn prop_lambda1(run: &mut Run) -> Res {
    let l1 = lambda1()?;
    run.method("euler-maclaurin-double-sum");
    run.engine_error(l1.error);
    run.point_real("lambda_1", &l1.value, &lambda1_closed());
    Ok(())
}

fn prop_lambda2(run: &mut Run) -> Res {
    let l2 = lambda2()?;
    run.method("euler-maclaurin-double-sum");
    run.method("alternating-accel");
    run.engine_error(l2.error);
    run.point_real("lambda_2", &l2.value, &lambda2_closed());
    Ok(())
}

fn sinpib_over_b(run: &mut Run) -> Res {
    let lhs = run.engine(&OracleId::SinPiOverX, &Real::zero())?;
    run.point("sin(pi x)/x", &lhs, &cx(&(pi() * Real::ln2())));
    Ok(())
}

const KERNEL_GRID: [i64; 4] = [2, 4, 9, 16];

fn kernel_halfpow(run: &mut Run) -> Res {
    for x in KERNEL_GRID {
        let xr = Real::from_i64(x);
        let lx = xr.ln();
        let o = OracleId::ExpScaled {
            c: cx(&(-&lx / Real::from_i64(2))),
        };
        let lhs = run.engine(&o, &Real::zero())?;
        let rhs = &lx / (Real::from_i64(2) * (xr.sqrt() - Real::one()));
        run.point(format!("x={x}"), &lhs, &cx(&rhs));
    }
    Ok(())
}

fn kernel_sinweighted(run: &mut Run) -> Res {
    for x in KERNEL_GRID {
        let xr = Real::from_i64(x);
        let o = OracleId::SinExp {
            omega: pi(),
            c: -xr.ln(),
        };
        let lhs = run.engine(&o, &Real::zero())?;
        let rhs = pi() / (xr + Real::one());
        run.point(format!("x={x}"), &lhs, &cx(&rhs));
    }
    Ok(())
}

fn kernel_pow(run: &mut Run) -> Res {
    for x in KERNEL_GRID {
        let xr = Real::from_i64(x);
        let lx = xr.ln();
        let o = OracleId::ExpScaled { c: cx(&-&lx) };
        let lhs = run.engine(&o, &Real::zero())?;
        let rhs = lx / (xr - Real::one());
        run.point(format!("x={x}"), &lhs, &cx(&rhs));
    }
    Ok(())
}

fn eq_4_27(run: &mut Run) -> Res {
    let (v, err, k) = cot_moment_series(&Real::one())?;
    run.method("moment-series");
    run.engine_error(err);
    run.note(format!(
        "optimal truncation before k = {k}, smallest term {err:.3e}; consumed by cor-6.11-s1"
    ));
    run.point_real("pi B cot(pi B)", &v, &q(1, 2));
    Ok(())
}

fn eq_4_30(run: &mut Run) -> Res {
    let lhs = run.engine(&OracleId::XDigammaPi { scale: Real::one() }, &Real::zero())?;
    let rhs = q(1, 4) - euler() / Real::from_i64(2);
    run.point("x Pi'(x)/Pi(x)", &lhs, &cx(&rhs));
    Ok(())
}

fn lemma_6_2(run: &mut Run) -> Res {
    for s in [Real::zero(), q(1, 2), Real::one(), Real::from_i64(3)] {
        let lhs = run.engine(&OracleId::Log { c: s.clone() }, &Real::zero())?;
        run.point(label("s", &s), &lhs, &cx(&dpi(&s)?));
    }
    Ok(())
}

fn lemma_6_4(run: &mut Run) -> Res {
    let blogb = moment_value(&Symbol::BLogB)?;
    for s in [q(1, 2), Real::one(), Real::from_i64(2)] {
        let e = run.engine(&OracleId::XLogX { c: s.clone() }, &Real::zero())?;
        let lhs = e.re - &blogb - &s;
        let rhs = log_gamma_pi(&cx(&s))?.re;
        run.point_real(label("s", &s), &lhs, &rhs);
    }
    Ok(())
}

fn lemma_6_7(run: &mut Run) -> Res {
    // logΠ(s − B) = logΠ(s − 1 + (1 − B)) ≡ logΠ(s − 1 + B)
    for s in [2i64, 3] {
        let sr = Real::from_i64(s);
        let lhs = run.engine(&logpi(Real::one(), Real::zero()), &Real::from_i64(s - 1))?;
        let rhs = &sr * dpi(&sr)? - blogb_closed() - &sr;
        run.point(format!("s={s}"), &lhs, &cx(&rhs));
    }
    Ok(())
}

fn lemma_6_8_rhs(s: &Real) -> Result<Real, CatalogueError> {
    let hs = s / Real::from_i64(2);
    let ds = dpi(s)?;
    Ok(
        dpi(&hs)? / Real::from_i64(4) - &hs * Real::ln2() + &hs * &ds - &hs + &ds / Real::from_i64(2) - q(1, 4)
            + pi().ln() / Real::from_i64(2),
    )
}

fn lemma_6_8(run: &mut Run) -> Res {
    for s in [1i64, 2] {
        let sr = Real::from_i64(s);
        let o = logpi(q(1, 2), &sr / Real::from_i64(2));
        let lhs = run.engine(&o, &Real::zero())?;
        run.point(format!("s={s}"), &lhs, &cx(&lemma_6_8_rhs(&sr)?));
    }
    Ok(())
}

/// −log 2 + (πs/2)cot πs + (π/4)(2cot πs − cot(πs/2)).
fn logsin_shift_rhs(s: &Real) -> Real {
    let p = pi();
    let c1 = cot(&(&p * s));
    let c2 = cot(&(&p * s / Real::from_i64(2)));
    -Real::ln2() + &p * s / Real::from_i64(2) * &c1 + &p / Real::from_i64(4) * (Real::from_i64(2) * c1 - c2)
}

fn lemma_6_9(run: &mut Run) -> Res {
    for s in [q(1, 3), q(2, 3)] {
        let half = logpi(q(1, 2), Real::zero());
        let e_minus = run.engine(&half, &-&s)?.re;
        let e_plus = run.engine(&half, &s)?.re;
        let lhs = (pi() / Real::from_i64(2)).ln() + dpi(&-&s)? - e_minus - e_plus
            + dpi(&(&s / Real::from_i64(2)))? / Real::from_i64(2);
        run.point_real(label("s", &s), &lhs, &logsin_shift_rhs(&s));
    }
    Ok(())
}

fn funceq_5_1(run: &mut Run) -> Res {
    for s in [q(1, 2), Real::from_i64(2), Real::from_i64(3)] {
        let lhs = run.engine(&logpi(s.clone(), Real::zero()), &Real::zero())?;
        let inner = run.engine(&logpi(s.recip(), Real::zero()), &Real::zero())?.re;
        let rhs = &s * inner
            + (&s + Real::one()) / Real::from_i64(2) * s.ln()
            + (Real::one() - &s) * log2pi() / Real::from_i64(2);
        run.point(label("s", &s), &lhs, &cx(&rhs));
    }
    Ok(())
}

fn eq_5_7(run: &mut Run) -> Res {
    for s in [q(1, 3), q(1, 2)] {
        let lhs = run.engine(&logpi(s.clone(), Real::zero()), &Real::zero())?;
        let ls = run
            .engine_mode(&OracleId::LogSin { c: pi() * &s }, &Real::zero(), Mode::MomentLine)?
            .re;
        let g = euler();
        let rhs = (-&g * &s - &g + (pi() * &s).ln() - ls) / Real::from_i64(2);
        run.point(label("s", &s), &lhs, &cx(&rhs));
    }
    Ok(())
}

fn funceq_6_1_rhs(s: &Real) -> Result<Real, CatalogueError> {
    let p = pi();
    let c1 = cot(&(&p * s));
    let c2 = cot(&(&p * s / Real::from_i64(2)));
    Ok(s * dpi(s)? - q(1, 2) - s - s * log2pi()
        + &p * s / Real::from_i64(2) * &c1
        + &p / Real::from_i64(4) * (Real::from_i64(2) * c1 - c2))
}

fn funceq_6_1(run: &mut Run) -> Res {
    for s in [q(3, 10), q(1, 2), q(7, 10)] {
        let down = run.engine(&OracleId::LogZeta { c: -&s }, &Real::zero())?;
        let up = run.engine(&OracleId::LogZeta { c: s.clone() }, &Real::zero())?;
        let lhs = &down - &up;
        run.point(label("s", &s), &lhs, &cx(&funceq_6_1_rhs(&s)?));
    }
    Ok(())
}

fn cor_6_11_s1(run: &mut Run) -> Res {
    let lhs = -zetalog_route(run)?;
    let x_dpi = run
        .engine(&OracleId::XDigammaPi { scale: Real::one() }, &Real::zero())?
        .re;
    // πB cot πB = 1/2 enters as (Bπ/2)cot πB = 1/4
    let p = pi();
    let rhs = x_dpi - (Real::from_i64(2) + log2pi()) / Real::from_i64(2) + q(1, 4) - &p * &p / Real::from_i64(16);
    run.point_real("s=1", &lhs, &rhs);
    Ok(())
}

fn cor_6_11_small_s(run: &mut Run) -> Res {
    let zl = zetalog_route(run)?;
    run.method("moment-series");
    for s in [q(1, 20), q(1, 10)] {
        let lhs = -(&s * &zl);
        let x_dpi = run
            .engine(&OracleId::XDigammaPi { scale: s.clone() }, &Real::zero())?
            .re;
        let (cot_series, err, _) = cot_moment_series(&s)?;
        run.engine_error(err);
        let p = pi();
        let rhs = x_dpi - (Real::one() + &s + &s * log2pi()) / Real::from_i64(2) + cot_series / Real::from_i64(2)
            - &p * &p * &s / Real::from_i64(16);
        run.point_real(label("s", &s), &lhs, &rhs);
    }
    Ok(())
}

fn xi_symmetry(run: &mut Run) -> Res {
    let p = precision::digits() as i32;
    run.tolerance(10f64.powi(4 - p));
    run.method("xi-quadrature");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let pts: Vec<(f64, f64)> = (0..10)
        .map(|_| (rng.gen_range(-3.0..3.0), rng.gen_range(-10.0..10.0)))
        .collect();
    for flavor in [XiKernel::Plain, XiKernel::SinWeighted] {
        for &(a, b) in &pts {
            let s = Complex::from_f64(a, b);
            let up = xi_b(&s, flavor)?;
            let down = xi_b(&-&s, flavor)?;
            run.point(format!("{flavor} s={}", s.to_string_digits(5)), &up.value, &down.value);
        }
    }
    Ok(())
}

fn xi_positivity(run: &mut Run) -> Res {
    run.tolerance(0.0);
    run.method("xi-quadrature");
    for s in (-10..=10).step_by(2) {
        let v = xi_b(&Complex::from_f64(s as f64, 0.0), XiKernel::Plain)?.value;
        let neg = if v.re.to_f64() > 0.0 { 0.0 } else { -v.re.to_f64() };
        run.point_text(
            format!("s={s}"),
            v.re.to_string_digits(20),
            "> 0".into(),
            neg.max(v.im.abs().to_f64()),
        );
    }
    Ok(())
}

fn xi_hardy(run: &mut Run) -> Res {
    let p = precision::digits() as i32;
    run.tolerance(1e-6);
    run.method("xi-grid-scan");
    let fine = scan_xi_zeros_tol(60.0, 0.5, XiKernel::Plain, 10f64.powi(2 - p))?;
    let coarse = scan_xi_zeros_tol(60.0, 0.5, XiKernel::Plain, 10f64.powi(6 - p))?;
    if fine.ordinates.len() < 3 {
        return Err(CatalogueError::Check(format!(
            "only {} sign changes of xi(B + it) on (0, 60]",
            fine.ordinates.len()
        )));
    }
    if fine.ordinates.len() != coarse.ordinates.len() {
        return Err(CatalogueError::Check(format!(
            "sign-change count depends on the quadrature tolerance ({} vs {})",
            fine.ordinates.len(),
            coarse.ordinates.len()
        )));
    }
    run.note(format!("{} sign changes on (0, 60]", fine.ordinates.len()));
    for (k, (a, b)) in fine.ordinates.iter().zip(&coarse.ordinates).enumerate() {
        run.point_real(format!("zero {}", k + 1), a, b);
    }
    Ok(())
}

fn thm_3_1(run: &mut Run) -> Res {
    run.tolerance(0.05);
    run.method("pv-quadrature");
    run.method("prime-sieve");
    let zeros = explicit::reference_zeros();
    let mut mean = [0.0f64; 2];
    let xs = [10.0, 20.0, 50.0];
    for x in xs {
        let c = explicit::psi_comparisons(x, &zeros, &[20, 100])?;
        mean[0] += c[0].difference / xs.len() as f64;
        mean[1] += c[1].difference / xs.len() as f64;
        run.point_real(format!("x={x}, K=100"), &r(c[1].prime_side), &r(c[1].explicit_side));
    }
    let decreasing = mean[1] < mean[0];
    run.point_text(
        "mean |difference|, K=20 -> K=100",
        format!("{:.3e}", mean[0]),
        format!("{:.3e}", mean[1]),
        if decreasing { 0.0 } else { f64::INFINITY },
    );
    Ok(())
}

macro_rules! entry {
    ($id:expr, $class:expr, $reference:expr, $grid:expr, [$($l:expr),*], [$($r:expr),*], $f:expr) => {
        Identity {
            id: $id,
            reference: $reference,
            class: $class,
            grid: $grid,
            lhs_deps: &[$($l),*],
            rhs_deps: &[$($r),*],
            eval: $f,
        }
    };
}

pub(crate) static REGISTRY: &[Identity] = &[
    entry!("eq-exp-kernel", Convergent, "e^{-Bz} = z/(e^z - 1)", "10 z, |z| < 2pi, incl. complex",
        ["ramanujan-sum", "exp-jet"], ["complex-exp"], eq_exp_kernel),
    entry!("eq-1.2", Convergent, "B^{1-s} = zeta(s)(s-1)", "s in {2, 3, 5, 2.5, 3+2i}",
        ["ramanujan-sum", "pow-jet"], ["zeta-euler-maclaurin"], eq_1_2),
    entry!("eq-1.3", Convergent, "(B+n)^{1-s} = [zeta(s) - sum_{j<=n} j^{-s}](s-1)", "s = 3, n in {1, 2, 5}",
        ["ramanujan-sum", "pow-jet"], ["zeta-euler-maclaurin"], eq_1_3),
    entry!("eq-1.4", Convergent, "(B+a)^{1-s} = zeta(s,a)(s-1)", "a in {1/2, 1/3, 2}, s in {2, 3}; sum over a+1, a+2, ...",
        ["ramanujan-sum", "pow-jet"], ["hurwitz-euler-maclaurin"], eq_1_4),
    entry!("eq-1.5", Convergent, "-B^{1-s} log B = zeta(s) + (s-1)zeta'(s)", "s in {3, 4}",
        ["ramanujan-sum", "powlog-jet"], ["zeta-euler-maclaurin", "zeta-termwise-derivative"], eq_1_5),
    entry!("gamma-limit", Convergent, "lim_{s->1} [zeta(s) + (s-1)zeta'(s)] = gamma", "s = 1 + 10^-j, j = 3..8",
        ["zeta-euler-maclaurin", "polynomial-extrapolation"], ["mpfr-euler-constant"], gamma_limit),
    entry!("gamma-series", Convergent, "gamma = sum_{n>=2} (-1)^n zeta(n)/n", "n >= 2",
        ["zeta-euler-maclaurin", "alternating-accel"], ["mpfr-euler-constant"], gamma_series),
    entry!("lfunc-hurwitz", Convergent, "L(s,chi) = k^{-s} sum_r chi(r) zeta(s, r/k)", "s = 2, chi_4",
        ["hurwitz-euler-maclaurin"], ["direct-series", "alternating-accel"], lfunc_hurwitz),
    entry!("prop-4.1-blogb", Asymptotic, "B log B = (1 - log 2pi)/2; -B log B = zeta(0) - zeta'(0)", "single value, two routes",
        ["ramanujan-sum", "xlogx-jet", "zeta-euler-maclaurin"], ["closed-form"], prop_blogb),
    entry!("prop-4.1-logpib", Asymptotic, "log Pi(B) = (log 2pi - 1)/2 - gamma", "single value",
        ["ramanujan-sum", "loggamma-stirling"], ["closed-form", "mpfr-euler-constant"], prop_logpib),
    entry!("prop-4.1-logsin-chain", AlgebraicChain, "log sin(pi B/2) = 1/2 - log 2", "chain via log Pi(B); moment-line",
        ["ramanujan-sum", "loggamma-stirling", "moment-line"], ["closed-form"], prop_logsin_chain),
    entry!("prop-4.1-zetalog", Convergent, "zeta'(B)/zeta(B) = pi^2/6 + (gamma + log pi)/2 + lambda_1 = (1 + gamma + log 2pi)/2 + pi^2/16", "single value",
        ["lambda1-double-sum", "hurwitz-euler-maclaurin"], ["closed-form"], prop_zetalog),
    entry!("prop-4.1-zetalog-weighted", Convergent, "pi log 2 + (gamma + log pi)pi/4 + pi lambda_2 = (pi/4)(1 + gamma + log 4pi)", "single value",
        ["lambda2-double-sum", "alternating-accel"], ["closed-form"], prop_zetalog_weighted),
    entry!("prop-4.3-lambda1", Convergent, "lambda_1 = (1 + log 2)/2 - (5/48)pi^2", "double sum, inner zeta(2, 2n+1)",
        ["lambda1-double-sum", "hurwitz-euler-maclaurin"], ["closed-form"], prop_lambda1),
    entry!("prop-4.3-lambda2", Convergent, "lambda_2 = (1 - 2 log 2)/4", "double sum, inner alternating",
        ["lambda2-double-sum", "alternating-accel"], ["closed-form"], prop_lambda2),
    entry!("sinpib-over-b", Convergent, "sin(pi B)/B = pi log 2", "single value",
        ["ramanujan-sum", "sin-jet"], ["closed-form"], sinpib_over_b),
    entry!("kernel-halfpow", Convergent, "x^{-B/2} = log x/(2(sqrt x - 1))", "x in {2, 4, 9, 16}",
        ["ramanujan-sum", "exp-jet"], ["closed-form"], kernel_halfpow),
    entry!("kernel-sinweighted", Convergent, "sin(pi B) x^{-B} = pi/(x + 1)", "x in {2, 4, 9, 16}",
        ["ramanujan-sum", "sinexp-jet"], ["closed-form"], kernel_sinweighted),
    entry!("kernel-pow", Convergent, "x^{-B} = log x/(x - 1)", "x in {2, 4, 9, 16}",
        ["ramanujan-sum", "exp-jet"], ["closed-form"], kernel_pow),
    entry!("eq-4.27-chain", FormalNoncheck, "pi B cos(pi B)/sin(pi B) = 1/2", "moment series, optimal truncation",
        ["moment-series", "bernoulli-table"], ["closed-form"], eq_4_27),
    entry!("eq-4.30", Asymptotic, "B Pi'(B)/Pi(B) = 1/4 - gamma/2", "single value",
        ["ramanujan-sum", "digamma-stirling"], ["closed-form", "mpfr-euler-constant"], eq_4_30),
    entry!("lemma-6.2", Convergent, "log(B + s) = Pi'(s)/Pi(s)", "s in {0, 1/2, 1, 3}",
        ["ramanujan-sum", "log-jet"], ["digamma-stirling"], lemma_6_2),
    entry!("lemma-6.4", Asymptotic, "(B + s)log(B + s) - B log B - s = log Pi(s)", "s in {1/2, 1, 2}",
        ["ramanujan-sum", "xlogx-jet", "moment-table"], ["loggamma-stirling"], lemma_6_4),
    entry!("lemma-6.7", Asymptotic, "log Pi(s - B) = s Pi'(s)/Pi(s) - (1 - log 2pi)/2 - s", "s in {2, 3}; reflection 1 - B = B",
        ["ramanujan-sum", "loggamma-stirling"], ["digamma-stirling", "closed-form"], lemma_6_7),
    entry!("lemma-6.8", Asymptotic, "log Pi((B+s)/2) = Pi'(s/2)/(4Pi(s/2)) - (s/2)log 2 + (s/2)Pi'(s)/Pi(s) - s/2 + Pi'(s)/(2Pi(s)) - 1/4 + (log pi)/2", "s in {1, 2}",
        ["ramanujan-sum", "loggamma-stirling"], ["digamma-stirling", "closed-form"], lemma_6_8),
    entry!("lemma-6.9", AlgebraicChain, "log sin(pi(B - s)/2) = -log 2 + (pi s/2)cot(pi s) + (pi/4)(2cot(pi s) - cot(pi s/2))", "s in {1/3, 2/3}; via log Pi((B +- s)/2)",
        ["ramanujan-sum", "loggamma-stirling", "digamma-stirling"], ["closed-form", "cotangent"], lemma_6_9),
    entry!("funceq-5.1", Asymptotic, "log Pi(Bs) = s log Pi(B/s) + ((s+1)/2)log s + (1-s)(log 2pi)/2", "s in {1/2, 2, 3}",
        ["engine:logpi(s x)"], ["engine:logpi(x/s)", "closed-form"], funceq_5_1),
    entry!("eq-5.7", Asymptotic, "log Pi(Bs) = (-gamma s - gamma + log(pi s) - log sin(pi B s))/2", "s in {1/3, 1/2}",
        ["engine:logpi(s x)"], ["moment-line:logsin(pi s x)", "mpfr-euler-constant"], eq_5_7),
    entry!("funceq-6.1", Asymptotic, "log zeta(B - s) - log zeta(B + s) = s Pi'(s)/Pi(s) - 1/2 - s - s log 2pi + (pi s/2)cot(pi s) + (pi/4)(2cot(pi s) - cot(pi s/2))", "s in {0.3, 0.5, 0.7}",
        ["ramanujan-sum", "logzeta-jet", "zeta-euler-maclaurin"], ["digamma-stirling", "cotangent"], funceq_6_1),
    entry!("cor-6.11-s1", AlgebraicChain, "-zeta'(B)/zeta(B) = B Pi'(B)/Pi(B) - (2 + log 2pi)/2 + (pi B/2)cot(pi B) - pi^2/16", "s = 1, pi B cot(pi B) = 1/2",
        ["lambda1-double-sum", "hurwitz-euler-maclaurin"], ["ramanujan-sum", "digamma-stirling"], cor_6_11_s1),
    entry!("cor-6.11-small-s", Asymptotic, "-s zeta'(B)/zeta(B) = Bs Pi'(Bs)/Pi(Bs) - (1 + s + s log 2pi)/2 + (pi B s/2)cot(pi B s) - (pi^2/16)s", "s in {0.05, 0.1}",
        ["lambda1-double-sum", "hurwitz-euler-maclaurin"], ["ramanujan-sum", "digamma-stirling", "moment-series"], cor_6_11_small_s),
    entry!("xi-symmetry", Convergent, "xi(B + s) = xi(B - s)", "10 seeded random complex s, both kernels",
        ["xi-quadrature(+s)"], ["xi-quadrature(-s)"], xi_symmetry),
    entry!("xi-positivity", Convergent, "xi(B + s) > 0 for real s", "s in {-10, -8, ..., 10}",
        ["xi-quadrature"], ["sign-test"], xi_positivity),
    entry!("xi-hardy", Convergent, "xi(B + it) has infinitely many real zeros", "sign changes on (0, 60], two tolerances",
        ["xi-grid(tol)"], ["xi-grid(tol*1e4)"], xi_hardy),
    entry!("thm-3.1", Convergent, "psi(x) = log(x-1) - lim sum_rho PV int_0^x (t^{rho-1} + t^{-rho})/(t-1) dt + int_x^inf dt/(t(t-1)(t^2-1)) + log[-zeta(B)]", "x in {10, 20, 50}, K = 100 bundled zeros",
        ["prime-sieve"], ["zero-table", "pv-quadrature", "mangoldt-series"], thm_3_1),
];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstantRow {
    pub name: String,
    pub computed: String,
    pub closed_form: String,
    pub difference: f64,
    pub method: String,
}

fn row(name: &str, computed: &Real, closed: &Real, method: &str) -> ConstantRow {
    ConstantRow {
        name: name.to_string(),
        computed: computed.to_string_digits(20),
        closed_form: closed.to_string_digits(20),
        difference: (computed - closed).abs().to_f64(),
        method: method.to_string(),
    }
}

/// The B-constants (B log B, log Π(B), log sin(πB/2), ζ′(B)/ζ(B) two ways), γ, λ₁ and λ₂ against closed forms.
pub fn constants_table() -> Result<Vec<ConstantRow>, CatalogueError> {
    let mut run = Run::new(&Default::default());
    let blogb = run.engine(&OracleId::XLogX { c: Real::zero() }, &Real::zero())?.re;
    let lpb = engine_logpib(&mut run)?;
    let zl = zetalog_route(&mut run)?;
    let zw = zetalog_weighted_route(&mut run)?;
    let (g, _) = gamma_by_series()?;
    let l1 = lambda1()?.value;
    let l2 = lambda2()?.value;
    Ok(vec![
        row("B log B", &blogb, &blogb_closed(), "shifted-EM"),
        row("log Pi(B)", &lpb, &logpib_closed(), "shifted-EM"),
        row(
            "log sin(pi B/2)",
            &logsin_chain_value(&lpb),
            &(q(1, 2) - Real::ln2()),
            "chain via log Pi(B)",
        ),
        row("zeta'(B)/zeta(B)", &zl, &zetalog_closed(), "lambda_1 route"),
        row(
            "weighted zeta'(B)/zeta(B)",
            &zw,
            &zetalog_weighted_closed(),
            "lambda_2 route",
        ),
        row("gamma", &g, &euler(), "sum (-1)^n zeta(n)/n"),
        row("lambda_1", &l1, &lambda1_closed(), "double sum"),
        row("lambda_2", &l2, &lambda2_closed(), "double sum"),
    ])
}
