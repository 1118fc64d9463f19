//! The identity registry: every checked identity as a named, runnable
//! comparison of two independently computed sides.

mod lambda;
mod registry;
mod report;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::explicit::ExplicitError;
use crate::jets::OracleId;
use crate::numerics::{precision, Complex, NumericsError, Real};
use crate::special::SpecialError;
use crate::umbral::{self, Mode, SumConfig, UmbralError, UmbralResult};
use crate::xi::XiError;

pub use lambda::{lambda1, lambda1_closed, lambda2, lambda2_closed};
pub use registry::{constants_table, ConstantRow};
pub use report::{exit_code, parse_json, render_reports, Format};

#[derive(Debug, Error)]
pub enum CatalogueError {
    #[error("unknown identity '{0}' (see `verify --list`)")]
    UnknownId(String),
    #[error(transparent)]
    Umbral(#[from] UmbralError),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Xi(#[from] XiError),
    #[error(transparent)]
    Explicit(#[from] ExplicitError),
    #[error("check failed: {0}")]
    Check(String),
    #[error("report serialization: {0}")]
    Serialize(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityClass {
    Convergent,
    Asymptotic,
    AlgebraicChain,
    FormalNoncheck,
}

impl IdentityClass {
    pub fn default_tolerance(self) -> f64 {
        match self {
            IdentityClass::Convergent | IdentityClass::Asymptotic => 1e-10,
            IdentityClass::AlgebraicChain => 1e-8,
            IdentityClass::FormalNoncheck => f64::INFINITY,
        }
    }
}

impl fmt::Display for IdentityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentityClass::Convergent => "convergent",
            IdentityClass::Asymptotic => "asymptotic",
            IdentityClass::AlgebraicChain => "algebraic-chain",
            IdentityClass::FormalNoncheck => "formal-noncheck",
        })
    }
}

/// A registered identity. `lhs_deps` and `rhs_deps` name the defining
/// representations each side is computed from; they must be disjoint.
pub struct Identity {
    pub id: &'static str,
    pub reference: &'static str,
    pub class: IdentityClass,
    pub grid: &'static str,
    pub lhs_deps: &'static [&'static str],
    pub rhs_deps: &'static [&'static str],
    pub(crate) eval: fn(&mut Run) -> Result<(), CatalogueError>,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("class", &self.class)
            .finish()
    }
}

#[derive(Clone, Debug, Default)]
pub struct CatalogueConfig {
    /// Digits for the run; the current precision when unset.
    pub digits: Option<u32>,
    /// Engine shift N override.
    pub n: Option<usize>,
    /// Engine order M override.
    pub m: Option<usize>,
    /// Omit timestamps so that repeated runs give identical reports.
    pub deterministic: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reported, never gates.
    Formal,
    /// An evaluator failed.
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Formal => "formal",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointReport {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub residual: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct MethodMeta {
    pub methods: Vec<String>,
    pub shift: Option<usize>,
    pub order: Option<usize>,
    pub engine_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub reference: String,
    pub class: IdentityClass,
    pub status: Status,
    /// max |lhs − rhs| over the grid; absent when an evaluator failed.
    pub residual: Option<f64>,
    pub tolerance: f64,
    pub precision: u32,
    pub method: MethodMeta,
    pub points: Vec<PointReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diagnostics: Option<String>,
    /// Seconds since the Unix epoch; omitted in deterministic runs.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timestamp: Option<u64>,
}

/// Evaluation state for one identity.
pub(crate) struct Run {
    sum: SumConfig,
    points: Vec<PointReport>,
    methods: BTreeSet<String>,
    shift: Option<usize>,
    order: Option<usize>,
    engine_error: f64,
    tolerance: Option<f64>,
    note: Option<String>,
}

const SHOWN_DIGITS: usize = 20;

impl Run {
    fn new(cfg: &CatalogueConfig) -> Self {
        Run {
            sum: SumConfig {
                mode: Mode::Auto,
                n: cfg.n,
                m: cfg.m,
            },
            points: Vec::new(),
            methods: BTreeSet::new(),
            shift: None,
            order: None,
            engine_error: 0.0,
            tolerance: None,
            note: None,
        }
    }

    fn record(&mut self, r: &UmbralResult) {
        self.methods.insert(r.method.to_string());
        if r.shift > 0 {
            self.shift = Some(self.shift.unwrap_or(0).max(r.shift));
        }
        if r.order > 0 {
            self.order = Some(self.order.unwrap_or(0).max(r.order));
        }
        self.engine_error = self.engine_error.max(r.error_estimate);
    }

    /// f(B + a) with the configured mode.
    pub(crate) fn engine(&mut self, o: &OracleId, a: &Real) -> Result<Complex, CatalogueError> {
        let cfg = self.sum.clone();
        self.engine_with(o, a, cfg)
    }

    pub(crate) fn engine_mode(&mut self, o: &OracleId, a: &Real, mode: Mode) -> Result<Complex, CatalogueError> {
        let cfg = SumConfig {
            mode,
            ..self.sum.clone()
        };
        self.engine_with(o, a, cfg)
    }

    fn engine_with(&mut self, o: &OracleId, a: &Real, cfg: SumConfig) -> Result<Complex, CatalogueError> {
        let r = if cfg.mode == Mode::MomentLine {
            umbral::moment_line(o, a)?
        } else {
            umbral::ramanujan_sum(o, a, &cfg)?
        };
        self.record(&r);
        Ok(r.value)
    }

    /// Tag a non-engine evaluation route.
    pub(crate) fn method(&mut self, name: &str) {
        self.methods.insert(name.to_string());
    }

    pub(crate) fn engine_error(&mut self, e: f64) {
        self.engine_error = self.engine_error.max(e);
    }

    pub(crate) fn tolerance(&mut self, tol: f64) {
        self.tolerance = Some(tol);
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) {
        let text = text.into();
        self.note = Some(match self.note.take() {
            Some(prev) => format!("{prev}; {text}"),
            None => text,
        });
    }

    pub(crate) fn point(&mut self, label: impl Into<String>, lhs: &Complex, rhs: &Complex) {
        let residual = (lhs - rhs).abs().to_f64();
        self.points.push(PointReport {
            label: label.into(),
            lhs: lhs.to_string_digits(SHOWN_DIGITS),
            rhs: rhs.to_string_digits(SHOWN_DIGITS),
            residual,
        });
    }

    pub(crate) fn point_real(&mut self, label: impl Into<String>, lhs: &Real, rhs: &Real) {
        self.point(
            label,
            &Complex::from_real(lhs.clone()),
            &Complex::from_real(rhs.clone()),
        );
    }

    /// A point whose residual is defined by the check rather than |lhs − rhs|.
    pub(crate) fn point_text(&mut self, label: impl Into<String>, lhs: String, rhs: String, residual: f64) {
        self.points.push(PointReport {
            label: label.into(),
            lhs,
            rhs,
            residual,
        });
    }
}

pub fn list_identities() -> &'static [Identity] {
    registry::REGISTRY
}

pub fn find_identity(id: &str) -> Result<&'static Identity, CatalogueError> {
    registry::REGISTRY
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| CatalogueError::UnknownId(id.to_string()))
}

fn now() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn execute(entry: &Identity, cfg: &CatalogueConfig) -> VerificationReport {
    let p = precision::digits();
    let mut run = Run::new(cfg);
    let outcome = (entry.eval)(&mut run);
    let residual = if run.points.is_empty() {
        None
    } else if run.points.iter().any(|pt| pt.residual.is_nan()) {
        Some(f64::NAN)
    } else {
        Some(run.points.iter().map(|pt| pt.residual).fold(0.0, f64::max))
    };
    let base = run.tolerance.unwrap_or_else(|| entry.class.default_tolerance());
    let tolerance = match entry.class {
        IdentityClass::Asymptotic => base.max(2.0 * run.engine_error),
        _ => base,
    };
    let mut diagnostics = run.note.clone();
    let (status, residual) = match outcome {
        Err(e) => {
            let msg = e.to_string();
            diagnostics = Some(match diagnostics {
                Some(d) => format!("{msg}; {d}"),
                None => msg,
            });
            (Status::Error, None)
        }
        Ok(()) => match residual {
            None => {
                diagnostics.get_or_insert_with(|| "no points evaluated".into());
                (Status::Error, None)
            }
            Some(r) => {
                let status = if entry.class == IdentityClass::FormalNoncheck {
                    Status::Formal
                } else if r.is_finite() && r <= tolerance {
                    Status::Pass
                } else {
                    Status::Fail
                };
                (status, Some(r))
            }
        },
    };
    VerificationReport {
        id: entry.id.to_string(),
        reference: entry.reference.to_string(),
        class: entry.class,
        status,
        residual: residual.filter(|r| r.is_finite()),
        tolerance,
        precision: p,
        method: MethodMeta {
            methods: run.methods.into_iter().collect(),
            shift: run.shift,
            order: run.order,
            engine_error: run.engine_error,
        },
        points: run.points,
        diagnostics,
        timestamp: if cfg.deterministic { None } else { Some(now()) },
    }
}

fn scoped<R>(cfg: &CatalogueConfig, f: impl FnOnce() -> R) -> Result<R, CatalogueError> {
    let p = cfg.digits.unwrap_or_else(precision::digits);
    Ok(precision::with_digits(p, f)?)
}

pub fn run_identity(id: &str, cfg: &CatalogueConfig) -> Result<VerificationReport, CatalogueError> {
    let entry = find_identity(id)?;
    scoped(cfg, || execute(entry, cfg))
}

/// Several identities, concurrently; reports come back in the order asked.
pub fn run_identities(ids: &[&str], cfg: &CatalogueConfig) -> Result<Vec<VerificationReport>, CatalogueError> {
    let entries = ids.iter().map(|id| find_identity(id)).collect::<Result<Vec<_>, _>>()?;
    scoped(cfg, || crate::par::map(&entries, |e| execute(e, cfg)))
}

/// The whole registry, in registry order.
pub fn run_all(cfg: &CatalogueConfig) -> Result<Vec<VerificationReport>, CatalogueError> {
    let ids: Vec<&str> = registry::REGISTRY.iter().map(|e| e.id).collect();
    run_identities(&ids, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_shape() {
        let ids: Vec<&str> = list_identities().iter().map(|e| e.id).collect();
        assert!(ids.len() >= 24);
        assert!(ids.contains(&"eq-1.2") && ids.contains(&"prop-4.1-blogb"));
        let unique: BTreeSet<&str> = ids.iter().copied().collect();
        assert_eq!(unique.len(), ids.len());
        assert!(matches!(find_identity("foo"), Err(CatalogueError::UnknownId(_))));
    }

    #[test]
    fn sides_are_independent() {
        for e in list_identities() {
            assert!(!e.lhs_deps.is_empty() && !e.rhs_deps.is_empty(), "{}", e.id);
            for d in e.lhs_deps {
                assert!(!e.rhs_deps.contains(d), "{}: '{d}' feeds both sides", e.id);
            }
        }
    }

    #[test]
    fn quick_entries_pass() {
        let cfg = CatalogueConfig {
            digits: Some(20),
            deterministic: true,
            ..Default::default()
        };
        for id in ["gamma-series", "lfunc-hurwitz", "kernel-pow", "sinpib-over-b"] {
            let r = run_identity(id, &cfg).unwrap();
            assert_eq!(r.status, Status::Pass, "{r:?}");
            assert_eq!(r.precision, 20);
            assert!(r.timestamp.is_none());
        }
    }
}
