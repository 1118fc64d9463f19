//! f(B + a) for analytic f.
//!
//! f(B + a) = f(N + a + B) − Σ_{k=1}^{N} f′(k + a), with the shifted term
//! expanded as Σ_m f^{(m)}(N + a) B_m/m!. When −Σ f′(k + a) converges the
//! shift can be pushed to infinity instead (direct or accelerated sums).

use std::fmt;

use serde::Serialize;

use super::UmbralError;
use crate::bernoulli;
use crate::jets::{jet_of, Coefficient, JetError, OracleId};
use crate::numerics::{accelerate_alternating, alternating_terms_for, precision, Complex, Domain, Quadrature, Real};
use crate::par;
use crate::special::SpecialError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Auto,
    Direct,
    Alternating,
    ShiftedEm,
    /// E[f(a + ½ + iT)], T with density (π/2)sech²(πt).
    MomentLine,
}

impl std::str::FromStr for Mode {
    type Err = UmbralError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "auto" => Mode::Auto,
            "direct" | "direct-sum" => Mode::Direct,
            "alternating" | "alternating-accel" => Mode::Alternating,
            "shifted-em" | "em" => Mode::ShiftedEm,
            "moment-line" => Mode::MomentLine,
            other => return Err(UmbralError::Config(format!("unknown summation mode '{other}'"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "direct-sum")]
    DirectSum,
    #[serde(rename = "shifted-EM")]
    ShiftedEm,
    #[serde(rename = "alternating-accel")]
    AlternatingAccel,
    #[serde(rename = "moment-series")]
    MomentSeries,
    #[serde(rename = "moment-line")]
    MomentLine,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::DirectSum => "direct-sum",
            Method::ShiftedEm => "shifted-EM",
            Method::AlternatingAccel => "alternating-accel",
            Method::MomentSeries => "moment-series",
            Method::MomentLine => "moment-line",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConvergenceClass {
    #[serde(rename = "convergent")]
    Convergent,
    #[serde(rename = "asymptotic-optimal-truncation")]
    Asymptotic,
}

impl fmt::Display for ConvergenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConvergenceClass::Convergent => "convergent",
            ConvergenceClass::Asymptotic => "asymptotic-optimal-truncation",
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct SumConfig {
    pub mode: Mode,
    /// Shift N (shifted-EM); default max(10, P).
    pub n: Option<usize>,
    /// Highest Bernoulli order considered; default adaptive.
    pub m: Option<usize>,
}

impl SumConfig {
    pub fn mode(mode: Mode) -> Self {
        SumConfig {
            mode,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct UmbralResult {
    pub value: Complex,
    pub error_estimate: f64,
    pub shift: usize,
    pub order: usize,
    pub method: Method,
    pub class: ConvergenceClass,
}

fn lattice_error(x: &Real, e: JetError) -> UmbralError {
    UmbralError::LatticePole(format!("f′ at {}: {e}", x.to_string_digits(8)))
}

fn coefficients<T: Coefficient>(o: &OracleId, x: &Real, m: usize) -> Result<Vec<Complex>, JetError> {
    Ok(jet_of::<T>(o, x, m)?.coeffs().iter().map(|c| c.value()).collect())
}

fn derivative_at<T: Coefficient>(o: &OracleId, x: &Real) -> Result<Complex, UmbralError> {
    let c = coefficients::<T>(o, x, 1).map_err(|e| lattice_error(x, e))?;
    Ok(c[1].clone())
}

fn lattice_derivatives<T: Coefficient>(o: &OracleId, a: &Real, ks: &[u64]) -> Result<Vec<Complex>, UmbralError> {
    par::map(ks, |&k| derivative_at::<T>(o, &(a + Real::from_u64(k))))
        .into_iter()
        .collect()
}

fn real_sign(z: &Complex) -> Option<i32> {
    let m = z.abs().to_f64();
    if m == 0.0 || z.im.abs().to_f64() > 1e-20 * m {
        return None;
    }
    Some(z.re.signum())
}

/// f(B + a).
pub fn ramanujan_sum(o: &OracleId, a: &Real, cfg: &SumConfig) -> Result<UmbralResult, UmbralError> {
    if o.is_real() {
        run::<Real>(o, a, cfg)
    } else {
        run::<Complex>(o, a, cfg)
    }
}

fn run<T: Coefficient>(o: &OracleId, a: &Real, cfg: &SumConfig) -> Result<UmbralResult, UmbralError> {
    let mode = match cfg.mode {
        Mode::Auto => choose_mode::<T>(o, a)?,
        m => m,
    };
    match mode {
        Mode::Direct => direct::<T>(o, a),
        Mode::Alternating => alternating::<T>(o, a),
        Mode::ShiftedEm => shifted_em::<T>(o, a, cfg),
        Mode::MomentLine => moment_line(o, a),
        Mode::Auto => unreachable!(),
    }
}

fn choose_mode<T: Coefficient>(o: &OracleId, a: &Real) -> Result<Mode, UmbralError> {
    let ks: Vec<u64> = (1..=6).collect();
    let d = lattice_derivatives::<T>(o, a, &ks)?;
    let signs: Vec<Option<i32>> = d.iter().map(real_sign).collect();
    if signs.iter().all(|s| s.is_some()) && signs.windows(2).all(|w| w[0] != w[1]) {
        return Ok(Mode::Alternating);
    }
    let mags: Vec<f64> = d.iter().map(|z| z.abs().to_f64()).collect();
    if mags.iter().all(|&m| m > 0.0) {
        let ratios: Vec<f64> = mags.windows(2).map(|w| w[1] / w[0]).collect();
        let hi = ratios.iter().cloned().fold(0.0, f64::max);
        let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
        // geometric: (nearly) constant ratio below one
        if hi <= 0.99 && hi - lo <= 0.05 * hi {
            return Ok(Mode::Direct);
        }
    }
    Ok(Mode::ShiftedEm)
}

fn direct<T: Coefficient>(o: &OracleId, a: &Real) -> Result<UmbralResult, UmbralError> {
    let target = 10f64.powi(-(precision::digits() as i32) - 3);
    let mut acc = Complex::zero();
    let mut k = 1u64;
    let batch = 16u64;
    let mut last = (0.0, 0.0);
    while k < 20_000 {
        let ks: Vec<u64> = (k..k + batch).collect();
        let d = lattice_derivatives::<T>(o, a, &ks)?;
        for z in &d {
            acc -= z;
        }
        let m1 = d[batch as usize - 2].abs().to_f64();
        let m2 = d[batch as usize - 1].abs().to_f64();
        last = (m1, m2);
        k += batch;
        let scale = acc.abs().to_f64().max(1e-300);
        if m2 <= target * scale {
            let r = if m1 > 0.0 { (m2 / m1).min(0.99) } else { 0.0 };
            let err = m2 * r / (1.0 - r) + scale * precision::epsilon();
            return Ok(UmbralResult {
                value: acc,
                error_estimate: err,
                shift: (k - 1) as usize,
                order: 0,
                method: Method::DirectSum,
                class: crate::umbral::ConvergenceClass::Convergent,
            });
        }
    }
    Err(UmbralError::NotSummable(format!(
        "−Σ f′(k + a) not converged after {} terms (last |f′| = {:e})",
        k - 1,
        last.1
    )))
}

fn alternating<T: Coefficient>(o: &OracleId, a: &Real) -> Result<UmbralResult, UmbralError> {
    let n = alternating_terms_for(precision::digits()) as u64;
    // the method drops f(∞); make sure it is zero
    let quarter = Real::ratio(1, 4);
    let p1 = o
        .eval(&Complex::from_real(a + Real::from_u64(n) + &quarter))
        .map_err(UmbralError::from)?;
    let p2 = o
        .eval(&Complex::from_real(a + Real::from_u64(2 * n) + &quarter))
        .map_err(UmbralError::from)?;
    let (m1, m2) = (p1.abs().to_f64(), p2.abs().to_f64());
    if m2 > 1e-20 && m2 > 0.75 * m1 {
        return Err(UmbralError::NotSummable(format!(
            "alternating mode needs f(x) → 0, but |f| ≈ {m1:e}, {m2:e} at x = a + {n}, a + {}",
            2 * n
        )));
    }
    let ks: Vec<u64> = (1..=n).collect();
    let d = lattice_derivatives::<T>(o, a, &ks)?;
    let terms: Vec<Complex> = d.into_iter().map(|z| -z).collect();
    let acc = accelerate_alternating::<Real, Complex>(&terms).map_err(|e| UmbralError::NotSummable(e.to_string()))?;
    let err = acc.error + acc.value.abs().to_f64() * precision::epsilon();
    Ok(UmbralResult {
        value: acc.value,
        error_estimate: err,
        shift: n as usize,
        order: 0,
        method: Method::AlternatingAccel,
        class: ConvergenceClass::Convergent,
    })
}

/// Optimal truncation of Σ_m c_m B_m (c_m = f^{(m)}(x)/m!).
/// Returns (sum, first omitted term magnitude, highest included order,
/// whether the minimum was reached inside the available range).
pub(crate) fn truncate_bernoulli_series(c: &[Complex]) -> (Complex, f64, usize, bool) {
    let scaled_b: Vec<Real> = (0..c.len())
        .map(|m| bernoulli::moment(m).unwrap_or_else(|_| Real::zero()))
        .collect();
    let term = |m: usize| c[m].scale(&scaled_b[m]);
    let mut acc = term(0);
    if c.len() > 1 {
        acc += term(1);
    }
    let evens: Vec<usize> = (2..c.len()).step_by(2).collect();
    let mags: Vec<f64> = evens.iter().map(|&m| term(m).abs().to_f64()).collect();
    if mags.iter().all(|&m| m == 0.0) {
        for &m in &evens {
            acc += term(m);
        }
        return (acc, 0.0, c.len().saturating_sub(1), true);
    }
    // first local minimum of the even-term magnitudes (ignoring exact zeros)
    let mut best = None;
    for i in 0..mags.len() {
        if mags[i] == 0.0 {
            continue;
        }
        let next = mags[i + 1..].iter().find(|&&m| m != 0.0).copied();
        match next {
            Some(n) if n < mags[i] => continue,
            Some(_) => {
                best = Some((i, true));
                break;
            }
            None => {
                best = Some((i, false));
                break;
            }
        }
    }
    let (stop, interior) = best.unwrap_or((mags.len() - 1, false));
    for &m in &evens[..stop] {
        acc += term(m);
    }
    let included = if stop == 0 { 1 } else { evens[stop - 1] };
    (acc, mags[stop], included, interior)
}

fn shifted_em<T: Coefficient>(o: &OracleId, a: &Real, cfg: &SumConfig) -> Result<UmbralResult, UmbralError> {
    let p = precision::digits() as usize;
    let n = cfg.n.unwrap_or_else(|| p.max(10));
    let x = a + Real::from_u64(n as u64);
    let cap = bernoulli::DEFAULT_CAP - 1;
    let target = 10f64.powi(-(p as i32) - 5);
    let mut order = cfg.m.unwrap_or(24).min(cap);
    let (em, err, included) = loop {
        let c = coefficients::<T>(o, &x, order).map_err(|e| match e {
            JetError::Inadmissible(msg) => UmbralError::NotSummable(msg),
            other => UmbralError::Jet(other),
        })?;
        let (sum, err, inc, interior) = truncate_bernoulli_series(&c);
        let scale = sum.abs().to_f64().max(1.0);
        if interior || err <= target * scale || cfg.m.is_some() || order >= cap.min(160) {
            break (sum, err, inc);
        }
        order = (order * 2).min(cap.min(160));
    };
    let ks: Vec<u64> = (1..=n as u64).collect();
    let d = lattice_derivatives::<T>(o, a, &ks)?;
    let mut lattice = Complex::zero();
    let mut size = 0.0;
    for z in &d {
        size += z.abs().to_f64();
        lattice += z.clone();
    }
    let value = &em - &lattice;
    let scale = value.abs().to_f64().max(1.0);
    if err > 1e-6 * scale {
        return Err(UmbralError::NotSummable(format!(
            "Bernoulli tail at N = {n} never drops below {err:e}; derivatives do not decay"
        )));
    }
    let rounding = (size + em.abs().to_f64()) * precision::epsilon();
    Ok(UmbralResult {
        value,
        error_estimate: err + rounding,
        shift: n,
        order: included,
        method: Method::ShiftedEm,
        class: ConvergenceClass::Asymptotic,
    })
}

/// E[f(a + ½ + iT)] with T ~ (π/2)sech²(πt); its moments are the B_n.
pub fn moment_line(o: &OracleId, a: &Real) -> Result<UmbralResult, UmbralError> {
    let p = precision::digits();
    let centre = a + Real::ratio(1, 2);
    let pi = Real::pi();
    let half_pi = &pi / Real::from_i64(2);
    let t_max = (f64::from(p) + 6.0) * std::f64::consts::LN_10 / (2.0 * std::f64::consts::PI) + 1.0;
    let failure: std::sync::Mutex<Option<SpecialError>> = std::sync::Mutex::new(None);
    let integrand = |t: &Real| {
        let w = {
            let c = (&pi * t).cosh();
            &half_pi / (&c * &c)
        };
        let up = Complex::new(centre.clone(), t.clone());
        let dn = Complex::new(centre.clone(), -t.clone());
        match (o.eval(&up), o.eval(&dn)) {
            (Ok(u), Ok(d)) => (&u + &d).scale(&w),
            (Err(e), _) | (_, Err(e)) => {
                let mut f = failure.lock().unwrap();
                if f.is_none() {
                    *f = Some(e);
                }
                Complex::zero()
            }
        }
    };
    let tol = 10f64.powi(-(p as i32) - 2);
    let q = Quadrature::with_tol(tol);
    let r = q.integrate::<Real, Complex, _>(integrand, Domain::Finite(Real::zero(), Real::from_f64(t_max)))?;
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(UmbralError::from(e));
    }
    if !r.converged {
        return Err(UmbralError::NotSummable(
            "moment-line quadrature did not converge".into(),
        ));
    }
    Ok(UmbralResult {
        value: r.value,
        error_estimate: r.error + tol,
        shift: 0,
        order: 0,
        method: Method::MomentLine,
        class: ConvergenceClass::Convergent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(r: &UmbralResult, want: &Real, tol: f64) {
        let d = (&r.value.re - want).abs().to_f64();
        assert!(
            d < tol,
            "got {} want {} ({:?}, err {:e})",
            r.value,
            want,
            r.method,
            r.error_estimate
        );
        assert!(r.value.im.abs().to_f64() < tol);
    }

    #[test]
    fn reciprocal_is_zeta_two() {
        let o = OracleId::Pow {
            c: Real::zero(),
            alpha: Complex::from_f64(-1.0, 0.0),
        };
        let r = ramanujan_sum(&o, &Real::zero(), &SumConfig::default()).unwrap();
        let pi = Real::pi();
        close(&r, &(&pi * &pi / Real::from_i64(6)), 1e-28);
        assert_eq!(r.method, Method::ShiftedEm);
    }

    #[test]
    fn exp_neg() {
        let o = OracleId::from_name("exp-neg", None).unwrap();
        let want = (Real::one().exp() - Real::one()).recip();
        let r = ramanujan_sum(&o, &Real::zero(), &SumConfig::default()).unwrap();
        assert_eq!(r.method, Method::DirectSum);
        close(&r, &want, 1e-28);
        let r = ramanujan_sum(&o, &Real::zero(), &SumConfig::mode(Mode::ShiftedEm)).unwrap();
        close(&r, &want, 1e-28);
        let r = moment_line(&o, &Real::zero()).unwrap();
        close(&r, &want, 1e-28);
    }

    #[test]
    fn x_log_x() {
        let o = OracleId::from_name("xlogx", None).unwrap();
        let r = ramanujan_sum(&o, &Real::zero(), &SumConfig::default()).unwrap();
        let want = (Real::one() - (Real::pi() * Real::from_i64(2)).ln()) / Real::from_i64(2);
        assert_eq!(r.class, ConvergenceClass::Asymptotic);
        close(&r, &want, 1e-28);
    }

    #[test]
    fn sin_pi_over_x() {
        let r = ramanujan_sum(&OracleId::SinPiOverX, &Real::zero(), &SumConfig::default()).unwrap();
        assert_eq!(r.method, Method::AlternatingAccel);
        close(&r, &(Real::pi() * Real::ln2()), 1e-28);
    }

    #[test]
    fn shift_invariance() {
        let o = OracleId::LogPi {
            scale: Real::one(),
            shift: Real::zero(),
        };
        let a = ramanujan_sum(
            &o,
            &Real::zero(),
            &SumConfig {
                n: Some(30),
                ..SumConfig::mode(Mode::ShiftedEm)
            },
        )
        .unwrap();
        let b = ramanujan_sum(
            &o,
            &Real::zero(),
            &SumConfig {
                n: Some(35),
                ..SumConfig::mode(Mode::ShiftedEm)
            },
        )
        .unwrap();
        let d = (&a.value - &b.value).abs().to_f64();
        assert!(d <= a.error_estimate + b.error_estimate + 1e-30, "{d:e}");
    }

    #[test]
    fn polynomial_is_exact() {
        // x² at B is B₂ = 1/6
        let o = OracleId::Pow {
            c: Real::zero(),
            alpha: Complex::from_f64(2.0, 0.0),
        };
        let r = ramanujan_sum(&o, &Real::zero(), &SumConfig::mode(Mode::ShiftedEm)).unwrap();
        close(&r, &Real::ratio(1, 6), 1e-28);
    }

    #[test]
    fn kernels() {
        for x in [2i64, 4, 9, 16] {
            let xr = Real::from_i64(x);
            let lx = xr.ln();
            // x^{−B} = log x/(x − 1)
            let o = OracleId::ExpScaled {
                c: Complex::from_real(-lx.clone()),
            };
            let r = ramanujan_sum(&o, &Real::zero(), &SumConfig::default()).unwrap();
            close(&r, &(&lx / (&xr - Real::one())), 1e-25);
            // x^{−B/2} = log x/(2(√x − 1))
            let o = OracleId::ExpScaled {
                c: Complex::from_real(-(&lx / Real::from_i64(2))),
            };
            let r = ramanujan_sum(&o, &Real::zero(), &SumConfig::default()).unwrap();
            close(&r, &(&lx / ((xr.sqrt() - Real::one()) * Real::from_i64(2))), 1e-25);
            // sin πB · x^{−B} = π/(x + 1)
            let o = OracleId::SinExp {
                omega: Real::pi(),
                c: -lx.clone(),
            };
            let r = ramanujan_sum(&o, &Real::zero(), &SumConfig::default()).unwrap();
            close(&r, &(Real::pi() / (&xr + Real::one())), 1e-25);
        }
    }

    #[test]
    fn exponential_kernel_complex() {
        // e^{−Bz} = z/(e^z − 1), |z| < 2π
        for (re, im) in [(0.5, 0.0), (1.0, 2.0), (-0.4, 1.5), (3.0, -4.0), (0.1, 5.5)] {
            let z = Complex::from_f64(re, im);
            let o = OracleId::ExpScaled { c: -z.clone() };
            let want = &z * &(&z.exp() - &Complex::one()).recip();
            let got = ramanujan_sum(&o, &Real::zero(), &SumConfig::default()).unwrap();
            let d = (&got.value - &want).abs().to_f64();
            assert!(d < 1e-22, "z=({re},{im}) diff {d:e}");
        }
    }

    #[test]
    fn lattice_pole_rejected() {
        let o = OracleId::Log { c: Real::from_i64(-3) };
        let e = ramanujan_sum(&o, &Real::zero(), &SumConfig::default()).unwrap_err();
        assert!(matches!(e, UmbralError::LatticePole(_)), "{e}");
    }

    #[test]
    fn growth_rejected() {
        let o = OracleId::ExpScaled {
            c: Complex::from_f64(8.0, 0.0),
        };
        let e = ramanujan_sum(&o, &Real::zero(), &SumConfig::mode(Mode::ShiftedEm)).unwrap_err();
        assert!(matches!(e, UmbralError::NotSummable(_)), "{e}");
    }
}
