//! Built-in analytic families. Each one is a single generic formula, so the
//! same code yields plain values, complex values and jets of any order.

use std::fmt;

use super::{Analytic, Coefficient, Jet, JetError};
use crate::numerics::{Complex, Real};
use crate::special::{self, SpecialError};

#[derive(Clone, Debug, PartialEq)]
pub enum OracleId {
    /// e^{cx}
    ExpScaled { c: Complex },
    /// (x + c)^α
    Pow { c: Real, alpha: Complex },
    /// (x + c)^α log(x + c)
    PowLog { c: Real, alpha: Complex },
    /// log(x + c)
    Log { c: Real },
    /// (x + c) log(x + c)
    XLogX { c: Real },
    /// sin(cx)
    Sin { c: Real },
    /// cos(cx)
    Cos { c: Real },
    /// sin(ωx)·e^{cx}
    SinExp { omega: Real, c: Real },
    /// log sin(cx)
    LogSin { c: Real },
    /// log|ζ(x + c)|
    LogZeta { c: Real },
    /// log Π(scale·x + shift)
    LogPi { scale: Real, shift: Real },
    /// Π′/Π(scale·x + shift)
    DigammaPi { scale: Real, shift: Real },
    /// scale·x·Π′/Π(scale·x)
    XDigammaPi { scale: Real },
    /// ζ′/ζ(x + c)
    ZetaLogDeriv { c: Real },
    /// sin(πx)/x
    SinPiOverX,
}

/// Names accepted by [`OracleId::from_name`], with the meaning of the
/// optional parameter.
pub const ORACLE_NAMES: &[(&str, &str)] = &[
    ("exp-neg", "e^{-x}"),
    ("exp", "e^{cx}, parameter c (default -1)"),
    ("pow", "x^a, parameter a (default -1)"),
    ("log", "log x"),
    ("xlogx", "x log x"),
    ("sin", "sin(cx), parameter c (default pi)"),
    ("cos", "cos(cx), parameter c (default pi)"),
    ("logsin", "log sin(cx), parameter c (default pi/2)"),
    ("logzeta", "log zeta(x + c), parameter c (default 0)"),
    ("logpi", "log Pi(cx), parameter c (default 1)"),
    ("digamma-pi", "Pi'(cx)/Pi(cx), parameter c (default 1)"),
    ("zeta-logderiv", "zeta'(x + c)/zeta(x + c), parameter c (default 0)"),
    ("sinpi-over-x", "sin(pi x)/x"),
];

fn inadmissible(msg: String) -> SpecialError {
    SpecialError::Jet(JetError::Inadmissible(msg))
}

fn positive_real<T: Analytic>(v: &T, what: &str) -> Result<(), SpecialError> {
    let z = v.value();
    if z.im.is_zero() && z.re.signum() <= 0 {
        return Err(inadmissible(format!(
            "{what} requires a positive argument, got {}",
            z.re.to_string_digits(8)
        )));
    }
    Ok(())
}

impl OracleId {
    pub fn from_name(name: &str, param: Option<f64>) -> Result<OracleId, JetError> {
        let p = |d: f64| Real::from_f64(param.unwrap_or(d));
        let zero = Real::zero();
        Ok(match name {
            "exp-neg" => OracleId::ExpScaled {
                c: Complex::from_f64(-1.0, 0.0),
            },
            "exp" => OracleId::ExpScaled {
                c: Complex::from_real(p(-1.0)),
            },
            "pow" => OracleId::Pow {
                c: zero,
                alpha: Complex::from_real(p(-1.0)),
            },
            "log" => OracleId::Log { c: zero },
            "xlogx" => OracleId::XLogX { c: zero },
            "sin" => OracleId::Sin {
                c: param.map(Real::from_f64).unwrap_or_else(Real::pi),
            },
            "cos" => OracleId::Cos {
                c: param.map(Real::from_f64).unwrap_or_else(Real::pi),
            },
            "logsin" => OracleId::LogSin {
                c: param
                    .map(Real::from_f64)
                    .unwrap_or_else(|| Real::pi() / Real::from_i64(2)),
            },
            "logzeta" => OracleId::LogZeta { c: p(0.0) },
            "logpi" => OracleId::LogPi {
                scale: p(1.0),
                shift: zero,
            },
            "digamma-pi" => OracleId::DigammaPi {
                scale: p(1.0),
                shift: zero,
            },
            "zeta-logderiv" => OracleId::ZetaLogDeriv { c: p(0.0) },
            "sinpi-over-x" => OracleId::SinPiOverX,
            other => {
                let known: Vec<&str> = ORACLE_NAMES.iter().map(|(n, _)| *n).collect();
                return Err(JetError::Inadmissible(format!(
                    "unknown function '{other}' (known: {})",
                    known.join(", ")
                )));
            }
        })
    }

    /// f(x) for any analytic argument type.
    pub fn eval<T: Analytic>(&self, x: &T) -> Result<T, SpecialError> {
        Ok(match self {
            OracleId::ExpScaled { c } => (x.complex_like(c)? * x.clone()).exp(),
            OracleId::Pow { c, alpha } => {
                let y = x.add_real(c);
                positive_real(&y, "(x + c)^α")?;
                let a = x.complex_like(alpha)?;
                (a * y.ln()?).exp()
            }
            OracleId::PowLog { c, alpha } => {
                let y = x.add_real(c);
                positive_real(&y, "(x + c)^α log(x + c)")?;
                let a = x.complex_like(alpha)?;
                let l = y.ln()?;
                (a * l.clone()).exp() * l
            }
            OracleId::Log { c } => {
                let y = x.add_real(c);
                positive_real(&y, "log(x + c)")?;
                y.ln()?
            }
            OracleId::XLogX { c } => {
                let y = x.add_real(c);
                positive_real(&y, "(x + c) log(x + c)")?;
                y.clone() * y.ln()?
            }
            OracleId::Sin { c } => x.scale(c).sin(),
            OracleId::Cos { c } => x.scale(c).cos(),
            OracleId::SinExp { omega, c } => x.scale(omega).sin() * x.scale(c).exp(),
            OracleId::LogSin { c } => {
                let y = x.scale(c).sin();
                positive_real(&y, "log sin(cx)")?;
                y.ln()?
            }
            OracleId::LogZeta { c } => {
                let z = special::zeta_generic(&x.add_real(c))?;
                let v = z.value();
                // log|ζ|: same derivatives, real where ζ < 0
                if v.im.is_zero() && v.re.signum() < 0 {
                    (-z).ln()?
                } else {
                    z.ln()?
                }
            }
            OracleId::LogPi { scale, shift } => special::log_gamma_pi_generic(&x.scale(scale).add_real(shift))?,
            OracleId::DigammaPi { scale, shift } => special::digamma_pi_generic(&x.scale(scale).add_real(shift))?,
            OracleId::XDigammaPi { scale } => {
                let y = x.scale(scale);
                y.clone() * special::digamma_pi_generic(&y)?
            }
            OracleId::ZetaLogDeriv { c } => {
                let y = x.add_real(c);
                let v = y.value();
                if v.im.is_zero() && (&v.re - &Real::one()).is_zero() {
                    return Err(SpecialError::Pole("ζ′/ζ has a pole at x + c = 1".into()));
                }
                log_derivative(&y)?
            }
            OracleId::SinPiOverX => {
                let px = x.scale(&Real::pi());
                let v = x.value();
                if v.abs().to_f64() < 1e-8 {
                    // removable: π·Σ (−1)^k (πx)^{2k}/(2k+1)!
                    let u = px.square();
                    let mut term = x.real_like(&Real::one());
                    let mut acc = term.clone();
                    for k in 1..12i64 {
                        term = -(term * u.clone()).scale(&Real::ratio(1, (2 * k) * (2 * k + 1)));
                        acc = acc + term.clone();
                    }
                    acc.scale(&Real::pi())
                } else {
                    px.sin() / x.clone()
                }
            }
        })
    }

    /// Human-readable formula.
    pub fn formula(&self) -> String {
        let r = |x: &Real| x.to_string_digits(6);
        match self {
            OracleId::ExpScaled { c } => format!("exp(({}) x)", c.to_string_digits(6)),
            OracleId::Pow { c, alpha } => format!("(x + {})^({})", r(c), alpha.to_string_digits(6)),
            OracleId::PowLog { c, alpha } => {
                format!("(x + {c})^({a}) log(x + {c})", c = r(c), a = alpha.to_string_digits(6))
            }
            OracleId::Log { c } => format!("log(x + {})", r(c)),
            OracleId::XLogX { c } => format!("(x + {c}) log(x + {c})", c = r(c)),
            OracleId::Sin { c } => format!("sin({} x)", r(c)),
            OracleId::Cos { c } => format!("cos({} x)", r(c)),
            OracleId::SinExp { omega, c } => format!("sin({} x) exp({} x)", r(omega), r(c)),
            OracleId::LogSin { c } => format!("log sin({} x)", r(c)),
            OracleId::LogZeta { c } => format!("log zeta(x + {})", r(c)),
            OracleId::LogPi { scale, shift } => format!("log Pi({} x + {})", r(scale), r(shift)),
            OracleId::DigammaPi { scale, shift } => format!("Pi'/Pi({} x + {})", r(scale), r(shift)),
            OracleId::XDigammaPi { scale } => format!("{s} x Pi'/Pi({s} x)", s = r(scale)),
            OracleId::ZetaLogDeriv { c } => format!("zeta'/zeta(x + {})", r(c)),
            OracleId::SinPiOverX => "sin(pi x)/x".to_string(),
        }
    }

    /// True when every parameter is real, so real jets suffice.
    pub fn is_real(&self) -> bool {
        match self {
            OracleId::Pow { alpha, .. } | OracleId::PowLog { alpha, .. } => alpha.im.is_zero(),
            OracleId::ExpScaled { c } => c.im.is_zero(),
            _ => true,
        }
    }
}

impl fmt::Display for OracleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.formula())
    }
}

fn log_derivative<T: Analytic>(y: &T) -> Result<T, SpecialError> {
    let z = special::zeta_generic(y)?;
    let dz = special::zeta_derivative_generic(y)?;
    Ok(dz / z)
}

/// Jet of an oracle at `a` to order `m`.
pub fn jet_of<T: Coefficient>(oracle: &OracleId, a: &Real, m: usize) -> Result<Jet<T>, JetError> {
    let x = Jet::<T>::variable(a.clone(), m);
    oracle.eval(&x).map_err(|e| match e {
        SpecialError::Jet(j) => j,
        other => JetError::Inadmissible(other.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::precision;

    fn real_jet(o: &OracleId, a: f64, m: usize) -> Jet<Real> {
        jet_of::<Real>(o, &Real::from_f64(a), m).unwrap()
    }

    #[test]
    fn log_zeta_at_three() {
        let j = real_jet(&OracleId::LogZeta { c: Real::zero() }, 3.0, 2);
        let z3 = special::zeta_real(&Real::from_i64(3)).unwrap();
        assert!((j.coeffs()[0].clone() - z3.ln()).abs().to_f64() < 1e-30);
        let zp = special::zeta(&Complex::from_f64(3.0, 0.0), 1).unwrap().re;
        assert!((j.coeffs()[1].clone() - zp / z3).abs().to_f64() < 1e-30);
    }

    #[test]
    fn inadmissible_names_constraint() {
        let e = jet_of::<Real>(&OracleId::Log { c: Real::zero() }, &Real::from_f64(-1.0), 3).unwrap_err();
        assert!(e.to_string().contains("log(x + c)"), "{e}");
        assert!(OracleId::from_name("nope", None).is_err());
    }

    #[test]
    fn every_name_parses() {
        for (n, _) in ORACLE_NAMES {
            OracleId::from_name(n, None).unwrap();
        }
    }

    /// m-th central difference at higher precision.
    fn finite_difference(o: &OracleId, a: &Real, m: usize, h: &Real) -> Real {
        // Σ_j (−1)^j C(m, j) f(a + (m/2 − j)h) / h^m
        let mut acc = Real::zero();
        let mut binom = Real::one();
        for j in 0..=m {
            let off = Real::from_f64(m as f64 / 2.0 - j as f64) * h;
            let v = o.eval(&(a + &off)).unwrap();
            let term = &binom * v;
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
            binom = binom * Real::from_u64((m - j) as u64) / Real::from_u64(j as u64 + 1);
        }
        acc / h.powi(m as i32)
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let p = precision::digits();
        let oracles = [
            (
                OracleId::ExpScaled {
                    c: Complex::from_f64(-0.5, 0.0),
                },
                1.3,
            ),
            (OracleId::Log { c: Real::zero() }, 2.5),
            (OracleId::XLogX { c: Real::zero() }, 3.0),
            (
                OracleId::LogSin {
                    c: Real::pi() / Real::from_i64(2),
                },
                0.4,
            ),
            (OracleId::LogZeta { c: Real::zero() }, 3.0),
            (
                OracleId::LogPi {
                    scale: Real::one(),
                    shift: Real::zero(),
                },
                2.2,
            ),
            (
                OracleId::DigammaPi {
                    scale: Real::ratio(1, 2),
                    shift: Real::zero(),
                },
                1.5,
            ),
            (OracleId::ZetaLogDeriv { c: Real::zero() }, 2.5),
            (OracleId::SinPiOverX, 0.7),
            (
                OracleId::Pow {
                    c: Real::one(),
                    alpha: Complex::from_f64(-1.5, 0.0),
                },
                0.5,
            ),
        ];
        for (o, a) in oracles {
            let jet = real_jet(&o, a, 4);
            let fd: Vec<Real> = precision::with_digits(3 * p, || {
                let h = Real::from_i64(10).powf(&Real::from_f64(-(p as f64) / 3.0));
                let a = Real::from_f64(a);
                (1..=4).map(|m| finite_difference(&o, &a, m, &h)).collect()
            })
            .unwrap();
            for m in 1..=4 {
                let d = jet.derivative(m).unwrap();
                let rel = ((&d - &fd[m - 1]).abs() / d.abs().max(Real::one())).to_f64();
                assert!(rel < 10f64.powf(-(p as f64) / 2.0), "{o} m={m} rel={rel:e}");
            }
        }
    }
}
