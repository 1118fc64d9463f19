//! Symmetric principal value across a simple pole at t = 1.

use super::accel::richardson_powers;
use super::quad::{Domain, Quadrature, SemiInfinite};
use super::{NumericsError, Scalar};

/// How the left piece ∫₀^{1−ε} is integrated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeftEnd {
    /// Plain quadrature from 0.
    Origin,
    /// Substitute t = e^{−v}; removes t^{−1/2}-type endpoint behaviour and
    /// the infinite oscillation of cos(γ log t) at 0.
    LogMap,
}

#[derive(Clone, Debug)]
pub struct PvSchedule {
    /// Excision radii, largest first.
    pub eps: Vec<f64>,
    /// Convergence threshold on successive extrapolated values.
    pub tol: f64,
}

impl PvSchedule {
    /// ε ∈ {10^{−1}, …, 10^{−levels}}.
    pub fn decades(levels: usize, tol: f64) -> Self {
        PvSchedule {
            eps: (1..=levels as i32).map(|k| 10f64.powi(-k)).collect(),
            tol,
        }
    }

    /// ε_k = first·ratio^k, an alternative schedule for cross-checks.
    pub fn geometric(first: f64, ratio: f64, levels: usize, tol: f64) -> Self {
        PvSchedule {
            eps: (0..levels as i32).map(|k| first * ratio.powi(k)).collect(),
            tol,
        }
    }
}

impl Default for PvSchedule {
    fn default() -> Self {
        PvSchedule::decades(6, 1e-10)
    }
}

#[derive(Clone, Debug)]
pub struct PvResult<S> {
    pub value: S,
    /// Difference between the last two extrapolated values.
    pub error: f64,
    pub levels_used: usize,
}

/// lim_{ε→0} (∫₀^{1−ε} f + ∫_{1+ε}^x f).
///
/// The excised window is symmetric, so the pole part cancels exactly and
/// the remainder is odd in ε; the last three values are extrapolated with
/// the model v₀ + aε + bε³.
pub fn principal_value_pair<S, F>(
    f: F,
    x: S,
    left: LeftEnd,
    schedule: &PvSchedule,
    quad: &Quadrature,
) -> Result<PvResult<S>, NumericsError>
where
    S: Scalar,
    F: Fn(&S) -> S,
{
    if x <= S::one() {
        return Err(NumericsError::Domain("principal value needs x > 1".into()));
    }
    let one = S::one();
    let mut hs: Vec<S> = Vec::new();
    let mut raw: Vec<S> = Vec::new();
    let mut extrapolated: Vec<S> = Vec::new();
    let mut diffs: Vec<f64> = Vec::new();
    for (level, &e) in schedule.eps.iter().enumerate() {
        let eps = S::from_f64(e);
        let lhs = match left {
            LeftEnd::Origin => {
                quad.integrate(&f, Domain::Finite(S::zero(), one.clone() - eps.clone()))?
                    .value
            }
            LeftEnd::LogMap => {
                let v0 = -(one.clone() - eps.clone()).ln();
                let q = Quadrature {
                    semi_infinite: SemiInfinite::Panels { width: 4.0 },
                    ..quad.clone()
                };
                q.integrate(
                    |v: &S| {
                        let t = (-v.clone()).exp();
                        f(&t) * t
                    },
                    Domain::SemiInfinite(v0),
                )?
                .value
            }
        };
        let right_lo = one.clone() + eps.clone();
        let rhs = if right_lo < x {
            quad.integrate(&f, Domain::Finite(right_lo, x.clone()))?.value
        } else {
            S::zero()
        };
        hs.push(eps);
        raw.push(lhs + rhs);
        if raw.len() >= 3 {
            let v = richardson_powers(&hs, &raw, &[1, 3])?;
            if let Some(prev) = extrapolated.last() {
                let d = (v.clone() - prev.clone()).abs().to_f64();
                diffs.push(d);
                if d < schedule.tol {
                    return Ok(PvResult {
                        value: v,
                        error: d,
                        levels_used: level + 1,
                    });
                }
                let n = diffs.len();
                if n >= 2 && diffs[n - 1] > 2.0 * diffs[n - 2] && diffs[n - 1] > 1e3 * schedule.tol.max(1e-12) {
                    return Err(NumericsError::Divergent(format!(
                        "successive principal-value estimates grow ({:.3e} → {:.3e}); not a PV-cancelling singularity",
                        diffs[n - 2],
                        diffs[n - 1]
                    )));
                }
            }
            extrapolated.push(v);
        }
    }
    match (extrapolated.last(), diffs.last()) {
        (Some(v), Some(&d)) => {
            if d > 1e3 * schedule.tol.max(1e-12) && raw_growing(&raw) {
                return Err(NumericsError::Divergent(
                    "principal-value estimates do not settle; not a PV-cancelling singularity".into(),
                ));
            }
            Ok(PvResult {
                value: v.clone(),
                error: d,
                levels_used: schedule.eps.len(),
            })
        }
        _ => Err(NumericsError::Acceleration(
            "ε schedule needs at least four levels".into(),
        )),
    }
}

fn raw_growing<S: Scalar>(raw: &[S]) -> bool {
    let n = raw.len();
    n >= 3 && {
        let d1 = (raw[n - 1].clone() - raw[n - 2].clone()).abs().to_f64();
        let d0 = (raw[n - 2].clone() - raw[n - 3].clone()).abs().to_f64();
        d1 > 2.0 * d0
    }
}
