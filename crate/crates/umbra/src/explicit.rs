//! Weighted prime-power sum ψ(x) against its zero-indexed explicit formula:
//!
//! ψ(x) = log(x−1) − Σ_{Im ρ>0} PV∫₀^x (t^{ρ−1} + t^{−ρ})/(t−1) dt
//!        + ∫_x^∞ dt/(t(t−1)(t²−1)) + log[−ζ(B)].
//!
//! The zero terms, the prime side and the tail run in f64; the constant's
//! second route uses working precision.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::numerics::{
    find_sign_changes, principal_value_pair, refine_bracket, Complex, Domain, LeftEnd, NumericsError, PvSchedule,
    Quadrature, Real,
};
use crate::par;
use crate::special::{xi_complete, zeta, SpecialError};

/// Cutoff for the Λ-series of log[−ζ(B)].
pub const CONSTANT_CUTOFF: u64 = 10_000;
/// Largest count `compute_zeros` accepts.
pub const MAX_COMPUTED_ZEROS: usize = 200;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Error)]
pub enum ExplicitError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("{path}:{line}: {msg}")]
    Parse { path: PathBuf, line: usize, msg: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("zero computation: {0}")]
    Zeros(String),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Special(#[from] SpecialError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroSource {
    File,
    Internal,
}

impl fmt::Display for ZeroSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZeroSource::File => "file",
            ZeroSource::Internal => "internal",
        })
    }
}

/// Ordinates γ of zeros ½ + iγ with γ > 0, ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroList {
    ordinates: Vec<f64>,
    source: ZeroSource,
}

impl ZeroList {
    pub fn new(ordinates: Vec<f64>, source: ZeroSource) -> Result<Self, ExplicitError> {
        for (i, g) in ordinates.iter().enumerate() {
            check_ordinate(*g, i.checked_sub(1).map(|j| ordinates[j])).map_err(ExplicitError::Domain)?;
        }
        Ok(ZeroList { ordinates, source })
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn source(&self) -> ZeroSource {
        self.source
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// One ordinate per line, 12 decimals.
    pub fn to_text(&self) -> String {
        let mut s = format!("# {} zeta zero ordinates ({})\n", self.len(), self.source);
        for g in &self.ordinates {
            s.push_str(&format!("{g:.12}\n"));
        }
        s
    }
}

fn check_ordinate(g: f64, prev: Option<f64>) -> Result<(), String> {
    if !g.is_finite() || g <= 14.0 {
        return Err(format!("ordinate {g} is not > 14"));
    }
    if let Some(p) = prev {
        if g <= p {
            return Err(format!("ordinate {g} does not exceed the previous one ({p})"));
        }
    }
    Ok(())
}

/// Parse the zeros format: one decimal per line, `#` comments, blanks ignored.
pub fn parse_zeros(text: &str, path: &Path) -> Result<ZeroList, ExplicitError> {
    let mut out: Vec<f64> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| ExplicitError::Parse {
            path: path.to_path_buf(),
            line: i + 1,
            msg,
        };
        let g: f64 = line
            .parse()
            .map_err(|_| err(format!("not a decimal number: {line:?}")))?;
        check_ordinate(g, out.last().copied()).map_err(err)?;
        out.push(g);
    }
    Ok(ZeroList {
        ordinates: out,
        source: ZeroSource::File,
    })
}

pub fn load_zeros(path: impl AsRef<Path>) -> Result<ZeroList, ExplicitError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ExplicitError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_zeros(&text, path)
}

/// The first 100 ordinates shipped with the crate (12 decimals).
pub fn reference_zeros() -> ZeroList {
    parse_zeros(
        include_str!("../data/zeta_zeros_100.txt"),
        Path::new("data/zeta_zeros_100.txt"),
    )
    .expect("bundled zero table is well formed")
}

/// Ξ(t) = ξ(½ + it), real on the critical line.
pub fn xi_critical(t: &Real) -> Result<Real, SpecialError> {
    let s = Complex::new(Real::ratio(1, 2), t.clone());
    Ok(xi_complete(&s)?.re)
}

/// First `count` ordinates from sign changes of Ξ on a 0.2 grid, bisected to 1e-6.
pub fn compute_zeros(count: usize) -> Result<ZeroList, ExplicitError> {
    if count > MAX_COMPUTED_ZEROS {
        return Err(ExplicitError::Domain(format!(
            "at most {MAX_COMPUTED_ZEROS} zeros can be computed internally (asked for {count})"
        )));
    }
    compute_zeros_tol(count, 1e-6)
}

pub(crate) fn compute_zeros_tol(count: usize, tol: f64) -> Result<ZeroList, ExplicitError> {
    let step = Real::ratio(1, 5);
    let chunk = 50i64;
    let xi = |t: &Real| xi_critical(t).unwrap_or_else(|_| Real::zero());
    let mut brackets: Vec<(Real, Real)> = Vec::new();
    let mut lo = 10i64;
    while brackets.len() < count {
        if lo > 1000 {
            return Err(ExplicitError::Zeros(
                "scan passed t = 1000 without enough sign changes".into(),
            ));
        }
        let found = find_sign_changes(xi, Real::from_i64(lo), Real::from_i64(lo + chunk), step.clone())?;
        brackets.extend(found);
        lo += chunk;
    }
    brackets.truncate(count);
    let refined = par::map(&brackets, |b| refine_bracket(xi, b.clone(), tol));
    let mut ordinates = Vec::with_capacity(count);
    for r in refined {
        ordinates.push(r?.to_f64());
    }
    ZeroList::new(ordinates, ZeroSource::Internal)
}

/// ½[Σ_{pⁿ<x} + Σ_{pⁿ≤x}] log p/(pⁿ − 1).
pub fn psi_prime_side(x: f64) -> Result<f64, ExplicitError> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(ExplicitError::Domain(format!("prime side needs x > 1 (got {x})")));
    }
    let n = x.floor() as u64;
    let mut sum = 0.0;
    for p in primes_up_to(n) {
        let lp = (p as f64).ln();
        let mut q = p;
        while (q as f64) <= x {
            let w = if q as f64 == x { 0.5 } else { 1.0 };
            sum += w * lp / (q - 1) as f64;
            match q.checked_mul(p) {
                Some(v) => q = v,
                None => break,
            }
        }
    }
    Ok(sum)
}

fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i as u64)
        .collect()
}

/// Λ(n): log p when n is a power of the prime p, else 0.
pub fn von_mangoldt(n: u64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            return if m == 1 { (p as f64).ln() } else { 0.0 };
        }
        p += 1;
    }
    (n as f64).ln()
}

/// 2cos(γ log t)/(√t(t−1)): the pair t^{ρ−1} + t^{−ρ} over t − 1 for ρ = ½ + iγ.
pub fn zero_pair_integrand(gamma: f64, t: f64) -> f64 {
    2.0 * (gamma * t.ln()).cos() / (t.sqrt() * (t - 1.0))
}

fn zero_quadrature() -> Quadrature {
    Quadrature::with_tol(1e-11)
}

/// PV ∫₀^x of the zero pair, conjugate folded in analytically.
pub fn zero_pair_term(gamma: f64, x: f64, schedule: &PvSchedule) -> Result<f64, ExplicitError> {
    if !(gamma > 0.0) {
        return Err(ExplicitError::Domain(format!(
            "ordinate must be positive (got {gamma})"
        )));
    }
    if !(x > 1.0) {
        return Err(ExplicitError::Domain(format!("zero term needs x > 1 (got {x})")));
    }
    let r = principal_value_pair(
        |t: &f64| zero_pair_integrand(gamma, *t),
        x,
        LeftEnd::LogMap,
        schedule,
        &zero_quadrature(),
    )?;
    Ok(r.value)
}

/// ∫_x^∞ dt/(t(t−1)(t²−1)) by quadrature in u = 1/t.
pub fn tail_integral(x: f64) -> Result<f64, ExplicitError> {
    if !(x > 1.0) {
        return Err(ExplicitError::Domain(format!(
            "tail integral diverges for x ≤ 1 (got {x})"
        )));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    let r = Quadrature::with_tol(1e-15).integrate(
        |u: &f64| u * u / ((1.0 - u) * (1.0 - u * u)),
        Domain::Finite(0.0, 1.0 / x),
    )?;
    Ok(r.value)
}

/// Partial-fraction antiderivative of the tail integrand, for cross-checks.
pub fn tail_integral_closed(x: f64) -> f64 {
    -x.ln() + 0.75 * (x - 1.0).ln() + 0.5 / (x - 1.0) + 0.25 * (x + 1.0).ln()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConstantEstimate {
    pub value: f64,
    /// Bound on Σ_{n>N} log n/(n(n−1)).
    pub tail_bound: f64,
    pub cutoff: u64,
}

/// log[−ζ(B)] = −γ + Σ_{n=2}^{N} Λ(n)/(n(n−1)), with its truncation bound.
pub fn log_neg_zeta_b(cutoff: u64) -> Result<ConstantEstimate, ExplicitError> {
    if cutoff < 2 {
        return Err(ExplicitError::Domain("cutoff must be at least 2".into()));
    }
    let mut lambda = vec![0.0f64; cutoff as usize + 1];
    for p in primes_up_to(cutoff) {
        let lp = (p as f64).ln();
        let mut q = p;
        while q <= cutoff {
            lambda[q as usize] = lp;
            q *= p;
        }
    }
    // smallest terms first
    let mut s = 0.0;
    for n in (2..=cutoff).rev() {
        let nf = n as f64;
        s += lambda[n as usize] / (nf * (nf - 1.0));
    }
    let nf = cutoff as f64;
    Ok(ConstantEstimate {
        value: s - EULER_GAMMA,
        tail_bound: (nf.ln() + 1.0) / (nf - 1.0),
        cutoff,
    })
}

/// The same constant as −γ − Σ_{n≥2} ζ′(n)/ζ(n), at working precision.
pub fn log_neg_zeta_b_zeta_route() -> Result<Real, ExplicitError> {
    let eps = Real::from_f64(crate::numerics::precision::epsilon());
    let mut acc = -Real::euler_gamma();
    for n in 2..10_000i64 {
        let s = Complex::from_real(Real::from_i64(n));
        let term = (zeta(&s, 1)?.re) / zeta(&s, 0)?.re;
        acc -= &term;
        if term.abs() < eps {
            return Ok(acc);
        }
    }
    Err(ExplicitError::Domain("ζ′/ζ series did not settle".into()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PsiComparison {
    pub x: f64,
    pub prime_side: f64,
    pub explicit_side: f64,
    pub zeros_used: usize,
    pub difference: f64,
    pub log_term: f64,
    /// Σ_{k≤K} of the PV zero-pair integrals (enters with a minus sign).
    pub zero_sum: f64,
    pub tail_integral: f64,
    pub constant: f64,
    pub constant_tail_bound: f64,
}

/// PV zero terms at x for every ordinate, computed concurrently, in order.
pub fn zero_terms(x: f64, ordinates: &[f64]) -> Result<Vec<f64>, ExplicitError> {
    let schedule = PvSchedule::default();
    par::map(ordinates, |g| zero_pair_term(*g, x, &schedule))
        .into_iter()
        .collect()
}

/// Comparisons at x for each K in `ks`, sharing one pass over the zeros.
pub fn psi_comparisons(x: f64, zeros: &ZeroList, ks: &[usize]) -> Result<Vec<PsiComparison>, ExplicitError> {
    let kmax = ks.iter().copied().max().unwrap_or(0);
    if kmax > zeros.len() {
        return Err(ExplicitError::Domain(format!(
            "asked for {kmax} zeros but only {} are available",
            zeros.len()
        )));
    }
    let prime_side = psi_prime_side(x)?;
    let terms = zero_terms(x, &zeros.ordinates[..kmax])?;
    let tail = tail_integral(x)?;
    let constant = log_neg_zeta_b(CONSTANT_CUTOFF)?;
    let log_term = (x - 1.0).ln();
    Ok(ks
        .iter()
        .map(|&k| {
            let zero_sum: f64 = terms[..k].iter().sum();
            let explicit_side = log_term - zero_sum + tail + constant.value;
            PsiComparison {
                x,
                prime_side,
                explicit_side,
                zeros_used: k,
                difference: (prime_side - explicit_side).abs(),
                log_term,
                zero_sum,
                tail_integral: tail,
                constant: constant.value,
                constant_tail_bound: constant.tail_bound,
            }
        })
        .collect())
}

pub fn psi_explicit_side(x: f64, zeros: &ZeroList, k: usize) -> Result<PsiComparison, ExplicitError> {
    Ok(psi_comparisons(x, zeros, &[k])?.remove(0))
}
