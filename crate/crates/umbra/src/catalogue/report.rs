//! Report rendering: human table, JSON array, CSV.

use std::str::FromStr;

use super::{CatalogueError, Status, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "human" | "text" => Ok(Format::Human),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format '{other}' (human, json, csv)")),
        }
    }
}

pub const CSV_HEADER: [&str; 12] = [
    "id",
    "reference",
    "class",
    "status",
    "residual",
    "tolerance",
    "precision",
    "methods",
    "shift",
    "order",
    "engine_error",
    "timestamp",
];

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

fn sci(x: f64) -> String {
    format!("{x:.3e}")
}

pub fn render_reports(reports: &[VerificationReport], format: Format) -> Result<String, CatalogueError> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).map_err(|e| CatalogueError::Serialize(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let fail = |e: csv::Error| CatalogueError::Serialize(e.to_string());
            w.write_record(CSV_HEADER).map_err(fail)?;
            for r in reports {
                w.write_record([
                    r.id.clone(),
                    r.reference.clone(),
                    r.class.to_string(),
                    r.status.to_string(),
                    r.residual.map(sci).unwrap_or_default(),
                    sci(r.tolerance),
                    r.precision.to_string(),
                    r.method.methods.join(" "),
                    opt(&r.method.shift),
                    opt(&r.method.order),
                    sci(r.method.engine_error),
                    opt(&r.timestamp),
                ])
                .map_err(fail)?;
            }
            let bytes = w.into_inner().map_err(|e| CatalogueError::Serialize(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CatalogueError::Serialize(e.to_string()))
        }
        Format::Human => {
            let mut s = String::new();
            for r in reports {
                let res = r.residual.map(sci).unwrap_or_else(|| "-".into());
                s.push_str(&format!(
                    "{:<6} {:<28} residual {:>10}  tol {:>9}  [{}]\n",
                    r.status.to_string().to_uppercase(),
                    r.id,
                    res,
                    sci(r.tolerance),
                    r.method.methods.join(", ")
                ));
                if let Some(d) = &r.diagnostics {
                    s.push_str(&format!("       note: {d}\n"));
                }
            }
            let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
            let formal = reports.iter().filter(|r| r.status == Status::Formal).count();
            s.push_str(&format!(
                "{passed} passed, {} failed, {formal} formal of {}\n",
                reports.len() - passed - formal,
                reports.len()
            ));
            Ok(s)
        }
    }
}

pub fn parse_json(text: &str) -> Result<Vec<VerificationReport>, CatalogueError> {
    serde_json::from_str(text).map_err(|e| CatalogueError::Serialize(e.to_string()))
}

/// 0 when nothing failed (formal entries never gate), else 1.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| matches!(r.status, Status::Fail | Status::Error)) {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::super::{IdentityClass, MethodMeta};
    use super::*;

    fn report(status: Status) -> VerificationReport {
        VerificationReport {
            id: "x".into(),
            reference: "a = b".into(),
            class: IdentityClass::Convergent,
            status,
            residual: Some(1e-12),
            tolerance: 1e-10,
            precision: 30,
            method: MethodMeta::default(),
            points: Vec::new(),
            diagnostics: None,
            timestamp: None,
        }
    }

    #[test]
    fn empty_lists() {
        assert_eq!(render_reports(&[], Format::Json).unwrap().trim(), "[]");
        let csv = render_reports(&[], Format::Csv).unwrap();
        assert_eq!(csv.trim(), CSV_HEADER.join(","));
        assert_eq!(exit_code(&[]), 0);
    }

    #[test]
    fn json_round_trip() {
        let rs = vec![report(Status::Pass), report(Status::Formal)];
        let text = render_reports(&rs, Format::Json).unwrap();
        assert!(text.contains("\"status\": \"pass\""));
        assert_eq!(parse_json(&text).unwrap(), rs);
        assert_eq!(exit_code(&rs), 0);
    }

    #[test]
    fn mixed_statuses_fail() {
        let rs = vec![report(Status::Pass), report(Status::Fail)];
        assert_eq!(exit_code(&rs), 1);
        assert_eq!(exit_code(&[report(Status::Error)]), 1);
        let csv = render_reports(&rs, Format::Csv).unwrap();
        assert_eq!(csv.lines().count(), 3);
    }
}
