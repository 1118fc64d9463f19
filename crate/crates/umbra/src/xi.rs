//! ξ(B + s) through its integral representation
//! ξ(B + s) = ∫₁^∞ φ(x)(x^{s/2} + x^{−s/2}) dx,
//! φ(x) = d[x^{3/2}ψ_θ′(x)]/dx · k(x).

use serde::Serialize;
use thiserror::Error;

use crate::numerics::{
    find_sign_changes, precision, refine_bracket, Complex, Domain, NumericsError, Quadrature, Real, SemiInfinite,
};
use crate::special::{theta_all, SpecialError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum XiKernel {
    /// k(x) = log x/(√x − 1), i.e. 2·x^{−B/2}
    #[serde(rename = "plain")]
    Plain,
    /// k(x) = 2π/(√x + 1), i.e. 2·sin πB·x^{−B/2}
    #[serde(rename = "sin-weighted")]
    SinWeighted,
}

impl std::fmt::Display for XiKernel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            XiKernel::Plain => "plain",
            XiKernel::SinWeighted => "sin-weighted",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum XiError {
    #[error("φ needs x ≥ 1, got {0}")]
    Domain(String),
    #[error("invalid scan parameters: {0}")]
    Parameters(String),
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Special(#[from] SpecialError),
}

/// D(x) = (3/2)√x ψ_θ′(x) + x^{3/2} ψ_θ″(x).
pub fn theta_weight(x: &Real) -> Result<Real, XiError> {
    let th = theta_all(x)?;
    let rx = x.sqrt();
    Ok(&rx * th.d1 * Real::ratio(3, 2) + &rx * x * th.d2)
}

fn kernel(x: &Real, flavor: XiKernel) -> Real {
    let rx = x.sqrt();
    match flavor {
        XiKernel::Plain => {
            // √x − 1 = (x − 1)/(√x + 1) without cancellation
            let d = x - Real::one();
            if d.is_zero() {
                Real::from_i64(2)
            } else {
                x.ln() * (rx + Real::one()) / d
            }
        }
        XiKernel::SinWeighted => Real::pi() * Real::from_i64(2) / (rx + Real::one()),
    }
}

/// φ(x) = D(x)·k(x) for x ≥ 1 (x = 1 by continuity).
pub fn phi_kernel(x: &Real, flavor: XiKernel) -> Result<Real, XiError> {
    if x < &Real::one() {
        return Err(XiError::Domain(x.to_string_digits(8)));
    }
    Ok(theta_weight(x)? * kernel(x, flavor))
}

#[derive(Clone, Debug)]
pub struct XiValue {
    pub value: Complex,
    pub error: f64,
}

fn default_tol() -> f64 {
    10f64.powi(-(precision::digits() as i32 - 2))
}

fn quad(tol: f64) -> Quadrature {
    Quadrature::with_tol(tol).semi_infinite(SemiInfinite::Panels { width: 2.0 })
}

/// ξ(B + s) with absolute tolerance `tol`.
pub fn xi_b_tol(s: &Complex, flavor: XiKernel, tol: f64) -> Result<XiValue, XiError> {
    let hs = s.scale(&Real::ratio(1, 2));
    let f = |x: &Real| -> Complex {
        let phi = match phi_kernel(x, flavor) {
            Ok(v) => v,
            Err(_) => return Complex::new(Real::from_f64(f64::NAN), Real::zero()),
        };
        let l = x.ln();
        // x^{s/2} + x^{−s/2} = 2cosh((s/2) log x)
        let w = hs.scale(&l);
        let e = w.exp();
        let sum = &e + &e.recip();
        sum.scale(&phi)
    };
    let r = quad(tol).integrate::<Real, Complex, _>(f, Domain::SemiInfinite(Real::one()))?;
    if !r.converged {
        return Err(XiError::Quadrature(format!(
            "ξ(B + s) at s = {}",
            s.to_string_digits(8)
        )));
    }
    Ok(XiValue {
        value: r.value,
        error: r.error,
    })
}

pub fn xi_b(s: &Complex, flavor: XiKernel) -> Result<XiValue, XiError> {
    xi_b_tol(s, flavor, default_tol())
}

/// t ↦ ξ(B + it), real because the integrand is 2φ(x)cos((t/2) log x).
/// Adaptive quadrature; see [`XiGrid`] for repeated evaluation.
pub fn xi_b_imaginary(t: &Real, flavor: XiKernel, tol: f64) -> Result<Real, XiError> {
    let ht = t / Real::from_i64(2);
    let f = |x: &Real| -> Real {
        match phi_kernel(x, flavor) {
            Ok(phi) => phi * (&ht * x.ln()).cos() * Real::from_i64(2),
            Err(_) => Real::from_f64(f64::NAN),
        }
    };
    let r = quad(tol).integrate::<Real, Real, _>(f, Domain::SemiInfinite(Real::one()))?;
    if !r.converged {
        return Err(XiError::Quadrature(format!(
            "ξ(B + it) at t = {}",
            t.to_string_digits(8)
        )));
    }
    Ok(r.value)
}

/// A fixed quadrature rule for t ↦ ξ(B + it), |t| ≤ t_max.
///
/// With x = e^v the integral is ∫₀^V 2φ(e^v)e^v cos(tv/2) dv; φ(e^v)e^v is
/// tabulated once on composite Gauss–Legendre nodes, after which every t
/// costs one cosine per node. The per-panel order is raised until two
/// consecutive orders agree to `tol` at t = 0 and t = t_max.
#[derive(Clone, Debug)]
pub struct XiGrid {
    nodes: Vec<(Real, Real)>,
    pub tol: f64,
    pub t_max: f64,
    pub order: usize,
}

impl XiGrid {
    pub fn new(flavor: XiKernel, tol: f64, t_max: f64) -> Result<XiGrid, XiError> {
        // φ(e^v)e^v ~ e^{−πe^v}: find where it is negligible
        let mut v_end = 1.0;
        loop {
            let x = Real::from_f64(v_end).exp();
            let w = phi_kernel(&x, flavor)?.abs() * &x;
            if w.to_f64() < tol * 1e-3 || v_end > 8.0 {
                break;
            }
            v_end += 0.25;
        }
        // panels short enough for the fastest cosine
        let omega = (t_max / 2.0).max(1.0);
        let width = (1.0 / omega).clamp(0.02, 0.25);
        let panels = (v_end / width).ceil() as usize;
        // panel edges in working precision so neighbours meet exactly
        let width = Real::from_f64(v_end) / Real::from_u64(panels as u64);
        let build = |n: usize| -> Result<Vec<(Real, Real)>, XiError> {
            let rule = <Real as crate::numerics::Scalar>::gauss_legendre(n);
            let mut pts = Vec::with_capacity(panels * n);
            let h = &width / Real::from_i64(2);
            for p in 0..panels {
                let c = &width * Real::from_u64(p as u64) + &h;
                for (z, w) in rule.iter() {
                    pts.push((&c + &h * z, &h * w));
                }
            }
            let vals = crate::par::map(&pts, |(v, w)| -> Result<(Real, Real), XiError> {
                let x = v.exp();
                let g = phi_kernel(&x, flavor)? * &x * Real::from_i64(2);
                Ok((v.clone(), g * w))
            });
            vals.into_iter().collect()
        };
        let probe = |nodes: &[(Real, Real)]| -> [Real; 2] {
            [Real::zero(), Real::from_f64(t_max)].map(|t| eval_nodes(nodes, &t))
        };
        let mut order = 8;
        let mut nodes = build(order)?;
        loop {
            let next = build(order + 4)?;
            let (a, b) = (probe(&nodes), probe(&next));
            let diff = a
                .iter()
                .zip(b.iter())
                .map(|(x, y)| (x - y).abs().to_f64())
                .fold(0.0, f64::max);
            nodes = next;
            order += 4;
            if diff < tol || order >= 48 {
                break;
            }
        }
        Ok(XiGrid {
            nodes,
            tol,
            t_max,
            order,
        })
    }

    /// ξ(B + it).
    pub fn eval(&self, t: &Real) -> Real {
        eval_nodes(&self.nodes, t)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

fn eval_nodes(nodes: &[(Real, Real)], t: &Real) -> Real {
    let ht = t / Real::from_i64(2);
    let mut acc = Real::zero();
    for (v, gw) in nodes {
        acc += gw * (&ht * v).cos();
    }
    acc
}

#[derive(Clone, Debug)]
pub struct XiScan {
    pub ordinates: Vec<Real>,
    pub warning: Option<String>,
}

/// Zeros of t ↦ ξ(B + it) on (0, t_max]: sign changes on a grid of the
/// given step, each bisected to width 1e−6. A coarse step can miss pairs.
pub fn scan_xi_zeros_tol(t_max: f64, step: f64, flavor: XiKernel, tol: f64) -> Result<XiScan, XiError> {
    if !(t_max > 0.0) || !(step > 0.0) || !t_max.is_finite() || !step.is_finite() {
        return Err(XiError::Parameters(format!(
            "t_max = {t_max}, step = {step} (both must be positive)"
        )));
    }
    if step > t_max {
        return Ok(XiScan {
            ordinates: Vec::new(),
            warning: Some(format!("step {step} exceeds t_max {t_max}: nothing to scan")),
        });
    }
    let grid = XiGrid::new(flavor, tol, t_max)?;
    let g = |t: &Real| grid.eval(t);
    let brackets = find_sign_changes(g, Real::from_f64(step), Real::from_f64(t_max), Real::from_f64(step))?;
    let refined: Vec<Result<Real, NumericsError>> = crate::par::map(&brackets, |b| refine_bracket(g, b.clone(), 1e-6));
    let ordinates = refined.into_iter().collect::<Result<Vec<_>, _>>()?;
    let warning = if ordinates.is_empty() {
        Some(format!(
            "no sign changes found with step {step}; a finer step may reveal zeros"
        ))
    } else {
        None
    };
    Ok(XiScan { ordinates, warning })
}

pub fn scan_xi_zeros(t_max: f64, step: f64, flavor: XiKernel) -> Result<XiScan, XiError> {
    scan_xi_zeros_tol(t_max, step, flavor, default_tol())
}

/// C_n = (1/(π n!)) ∫ ξ(B + it) tⁿ dt over [−T, T] with T = 64, where
/// |ξ(B + it)| has fallen below 10⁻²⁰.
pub fn moment_c(n: u32) -> Result<Real, XiError> {
    Ok(moments_c(&[n], XiKernel::Plain, 64.0)?.remove(0))
}

/// Several C_n from one tabulation of t ↦ ξ(B + it).
pub fn moments_c(ns: &[u32], flavor: XiKernel, t_cut: f64) -> Result<Vec<Real>, XiError> {
    let inner = 10f64.powi(-(precision::digits() as i32 - 6));
    let grid = XiGrid::new(flavor, inner, t_cut)?;
    let panel = 4.0;
    let panels = (2.0 * t_cut / panel).ceil() as usize;
    let rule = <Real as crate::numerics::Scalar>::gauss_legendre(20);
    let mut nodes = Vec::with_capacity(panels * rule.len());
    for p in 0..panels {
        let lo = -t_cut + p as f64 * panel;
        let c = Real::from_f64(lo + panel / 2.0);
        let h = Real::from_f64(panel / 2.0);
        for (x, w) in rule.iter() {
            nodes.push((&c + &h * x, &h * w));
        }
    }
    let vals = crate::par::map(&nodes, |(t, w)| grid.eval(t) * w);
    let pi = Real::pi();
    Ok(ns
        .iter()
        .map(|&n| {
            let mut acc = Real::zero();
            for ((t, _), v) in nodes.iter().zip(&vals) {
                acc += v * t.powi(n as i32);
            }
            let mut fact = Real::one();
            for k in 2..=n {
                fact *= Real::from_u64(k as u64);
            }
            acc / (&pi * fact)
        })
        .collect())
}
