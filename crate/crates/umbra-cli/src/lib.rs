//! The `umbra` command line. `run` is the whole program; `main` only wires
//! it to the process streams and exit code.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use umbra::catalogue::{self, CatalogueConfig, Format};
use umbra::explicit::{self, ZeroList};
use umbra::jets::oracle::ORACLE_NAMES;
use umbra::jets::OracleId;
use umbra::numerics::precision;
use umbra::special::{self, DirichletCharacter};
use umbra::umbral::{ramanujan_sum, Mode, SumConfig};
use umbra::xi::{self, XiKernel};
use umbra::{Complex, Real};

pub const DEFAULT_PRECISION: u32 = 30;

/// Usage and input problems; verification failures are reported through
/// the exit code instead.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

fn input<E: Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "umbra",
    version,
    about = "Bernoulli-operator calculus: identity checks and special functions"
)]
struct Cli {
    /// Working precision in decimal digits.
    #[arg(long, global = true, env = "UMBRA_PRECISION", default_value_t = DEFAULT_PRECISION)]
    precision: u32,
    /// Leave timestamps out of reports so repeated runs are byte-identical.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Output format.
    #[arg(long, global = true, value_parser = parse_format, default_value = "human")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Computed constants against their closed forms.
    Constants,
    /// Run catalogue identities.
    Verify(VerifyArgs),
    /// Evaluate a special function.
    Eval(EvalArgs),
    /// Sign changes of t -> xi(B + it).
    XiScan(XiScanArgs),
    /// Zeta zero tables.
    #[command(subcommand)]
    Zeros(ZerosCommand),
    /// Compare both sides of the explicit formula for psi(x).
    Explicit(ExplicitArgs),
    /// f(B + a) for a named function.
    Sum(SumArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Identity id (repeatable).
    #[arg(long = "id")]
    ids: Vec<String>,
    /// Every registered identity.
    #[arg(long, conflicts_with = "ids")]
    all: bool,
    /// List the registry instead of running it.
    #[arg(long, conflicts_with_all = ["ids", "all"])]
    list: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Engine shift N.
    #[arg(long)]
    n: Option<usize>,
    /// Engine order M.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Function {
    Zeta,
    Hurwitz,
    Lfunc,
    Gammapi,
    Xi,
}

#[derive(Debug, Args)]
struct EvalArgs {
    function: Function,
    /// Argument as RE or RE,IM.
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    /// Hurwitz parameter.
    #[arg(long)]
    alpha: Option<String>,
    /// Character modulus (must match the table length).
    #[arg(long)]
    modulus: Option<u64>,
    /// Character values chi(1), ..., chi(k).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    char_table: Vec<i64>,
    /// Use the sin-weighted kernel for xi.
    #[arg(long)]
    weighted: bool,
}

#[derive(Debug, Args)]
struct XiScanArgs {
    #[arg(long)]
    t_max: f64,
    #[arg(long)]
    step: f64,
    /// Use the sin-weighted kernel.
    #[arg(long)]
    weighted: bool,
}

#[derive(Debug, Subcommand)]
enum ZerosCommand {
    /// Locate the first K ordinates.
    Compute {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a zeros file and compare its head with computed ordinates.
    Check {
        #[arg(long)]
        file: PathBuf,
        /// How many leading ordinates to recompute.
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
    },
}

#[derive(Debug, Args)]
struct ExplicitArgs {
    /// Evaluation point (repeatable).
    #[arg(long, required = true)]
    x: Vec<f64>,
    /// Zeros file to use.
    #[arg(long, conflicts_with = "compute_zeros")]
    zeros_file: Option<PathBuf>,
    /// Compute this many zeros instead of using the bundled table.
    #[arg(long)]
    compute_zeros: Option<usize>,
    /// Use only the first K zeros.
    #[arg(long)]
    num_zeros: Option<usize>,
}

#[derive(Debug, Args)]
struct SumArgs {
    /// Function name; `list` shows the choices.
    #[arg(long)]
    function: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    shift: String,
    /// Function parameter (see `--function list`).
    #[arg(long, allow_hyphen_values = true)]
    param: Option<f64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// auto, direct, alternating, shifted-em or moment-line.
    #[arg(long, default_value = "auto")]
    mode: String,
}

/// Runs the program; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    if let Err(e) = precision::set_digits(cli.precision) {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Constants => constants(cli, out),
        Command::Verify(a) => verify(cli, a, out),
        Command::Eval(a) => eval(cli, a, out),
        Command::XiScan(a) => xi_scan(cli, a, out, err),
        Command::Zeros(z) => zeros(cli, z, out),
        Command::Explicit(a) => explicit_cmd(cli, a, out),
        Command::Sum(a) => sum(cli, a, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(input)
}

fn to_json(v: &serde_json::Value) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(input)?;
    s.push('\n');
    Ok(s)
}

fn digits(cli: &Cli) -> usize {
    cli.precision as usize
}

fn constants(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows = catalogue::constants_table().map_err(input)?;
    let text = match cli.format {
        Format::Json => to_json(&json!({ "precision": cli.precision, "constants": rows }))?,
        Format::Csv => {
            let mut s = String::from("name,computed,closed_form,difference,method\n");
            for r in &rows {
                s += &format!(
                    "\"{}\",{},{},{:e},\"{}\"\n",
                    r.name, r.computed, r.closed_form, r.difference, r.method
                );
            }
            s
        }
        Format::Human => {
            let mut s = format!(
                "{:<28} {:>26} {:>26} {:>10}  method\n",
                "constant", "computed", "closed form", "|diff|"
            );
            for r in &rows {
                s += &format!(
                    "{:<28} {:>26} {:>26} {:>10.2e}  {}\n",
                    r.name, r.computed, r.closed_form, r.difference, r.method
                );
            }
            s + &format!("precision: {} digits\n", cli.precision)
        }
    };
    emit(out, &text)?;
    Ok(0)
}

fn verify(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.list {
        let mut s = String::new();
        for id in catalogue::list_identities() {
            s += &format!("{:<28} {:<16} {}\n", id.id, id.class.to_string(), id.reference);
        }
        emit(out, &s)?;
        return Ok(0);
    }
    if !a.all && a.ids.is_empty() {
        return Err(CliError::Input(
            "nothing to verify: pass --id ID (repeatable), --all or --list".into(),
        ));
    }
    let cfg = CatalogueConfig {
        digits: Some(cli.precision),
        n: a.n,
        m: a.m,
        deterministic: cli.deterministic,
    };
    let reports = if a.all {
        catalogue::run_all(&cfg)
    } else {
        let ids: Vec<&str> = a.ids.iter().map(String::as_str).collect();
        catalogue::run_identities(&ids, &cfg)
    }
    .map_err(input)?;
    let text = catalogue::render_reports(&reports, cli.format).map_err(input)?;
    match &a.report {
        Some(path) => {
            fs::write(path, &text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            if cli.format != Format::Human {
                let summary = catalogue::render_reports(&reports, Format::Human).map_err(input)?;
                emit(out, &summary)?;
            }
        }
        None => emit(out, &text)?,
    }
    Ok(catalogue::exit_code(&reports))
}

fn parse_real(what: &str, s: &str) -> Result<Real, CliError> {
    Real::parse(s).ok_or_else(|| CliError::Input(format!("{what}: '{s}' is not a number")))
}

fn parse_complex(s: &str) -> Result<Complex, CliError> {
    let mut parts = s.split(',');
    let re = parse_real("--s", parts.next().unwrap_or(""))?;
    let im = match parts.next() {
        Some(p) => parse_real("--s", p)?,
        None => Real::zero(),
    };
    if parts.next().is_some() {
        return Err(CliError::Input(format!("--s: expected RE or RE,IM, got '{s}'")));
    }
    Ok(Complex::new(re, im))
}

fn kernel(weighted: bool) -> XiKernel {
    if weighted {
        XiKernel::SinWeighted
    } else {
        XiKernel::Plain
    }
}

fn eval(cli: &Cli, a: &EvalArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let s = parse_complex(&a.s)?;
    let (name, value) = match a.function {
        Function::Zeta => ("zeta", special::zeta(&s, 0).map_err(input)?),
        Function::Hurwitz => {
            let alpha = a
                .alpha
                .as_deref()
                .ok_or_else(|| CliError::Input("hurwitz needs --alpha".into()))?;
            let alpha = parse_real("--alpha", alpha)?;
            ("hurwitz", special::hurwitz_zeta(&s, &alpha).map_err(input)?)
        }
        Function::Lfunc => {
            if a.char_table.is_empty() {
                return Err(CliError::Input("lfunc needs --char-table v1,v2,...".into()));
            }
            if let Some(k) = a.modulus {
                if k as usize != a.char_table.len() {
                    return Err(CliError::Input(format!(
                        "--modulus {k} does not match the {} table entries",
                        a.char_table.len()
                    )));
                }
            }
            let chi = DirichletCharacter::from_reals(&a.char_table).map_err(input)?;
            ("L", special::dirichlet_l(&s, &chi).map_err(input)?)
        }
        Function::Gammapi => ("Pi", special::log_gamma_pi(&s).map_err(input)?.exp()),
        Function::Xi => ("xi_B", xi::xi_b(&s, kernel(a.weighted)).map_err(input)?.value),
    };
    let text = match cli.format {
        Format::Json => to_json(&json!({
            "function": name,
            "s": { "re": s.re.to_string_digits(digits(cli)), "im": s.im.to_string_digits(digits(cli)) },
            "value": { "re": value.re.to_string_digits(digits(cli)), "im": value.im.to_string_digits(digits(cli)) },
            "precision": cli.precision,
        }))?,
        _ => format!("{}\n", value.to_string_digits(digits(cli))),
    };
    emit(out, &text)?;
    Ok(0)
}

fn xi_scan(cli: &Cli, a: &XiScanArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let scan = xi::scan_xi_zeros(a.t_max, a.step, kernel(a.weighted)).map_err(input)?;
    if let Some(w) = &scan.warning {
        let _ = writeln!(err, "warning: {w}");
    }
    let ords: Vec<String> = scan.ordinates.iter().map(|t| t.to_string_digits(10)).collect();
    let text = match cli.format {
        Format::Json => to_json(&json!({
            "kernel": kernel(a.weighted).to_string(),
            "t_max": a.t_max,
            "step": a.step,
            "ordinates": ords,
            "warning": scan.warning,
        }))?,
        _ => ords.iter().map(|o| format!("{o}\n")).collect(),
    };
    emit(out, &text)?;
    Ok(0)
}

fn zeros(cli: &Cli, z: &ZerosCommand, out: &mut dyn Write) -> Result<i32, CliError> {
    match z {
        ZerosCommand::Compute { count, out: path } => {
            let list = explicit::compute_zeros(*count).map_err(input)?;
            let text = list.to_text();
            match path {
                Some(p) => {
                    fs::write(p, &text).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
                    emit(out, &format!("wrote {} ordinates to {}\n", list.len(), p.display()))?;
                }
                None => emit(out, &text)?,
            }
            Ok(0)
        }
        ZerosCommand::Check { file, count, tol } => {
            let list = explicit::load_zeros(file).map_err(input)?;
            let k = (*count).min(list.len());
            let computed = explicit::compute_zeros(k).map_err(input)?;
            let diffs: Vec<f64> = list
                .ordinates()
                .iter()
                .zip(computed.ordinates())
                .map(|(a, b)| (a - b).abs())
                .collect();
            let worst = diffs.iter().cloned().fold(0.0, f64::max);
            let ok = worst <= *tol;
            let text = match cli.format {
                Format::Json => to_json(&json!({
                    "file": file.display().to_string(),
                    "ordinates": list.len(),
                    "compared": k,
                    "max_difference": worst,
                    "tolerance": tol,
                    "status": if ok { "pass" } else { "fail" },
                }))?,
                _ => format!(
                    "{}: {} ordinates, first {k} agree with computed zeros to {worst:.2e} (tol {tol:e}): {}\n",
                    file.display(),
                    list.len(),
                    if ok { "pass" } else { "fail" }
                ),
            };
            emit(out, &text)?;
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn explicit_cmd(cli: &Cli, a: &ExplicitArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let zeros: ZeroList = match (&a.zeros_file, a.compute_zeros) {
        (Some(p), _) => explicit::load_zeros(p).map_err(input)?,
        (None, Some(k)) => explicit::compute_zeros(k).map_err(input)?,
        (None, None) => explicit::reference_zeros(),
    };
    let k = a.num_zeros.unwrap_or(zeros.len());
    if k > zeros.len() {
        return Err(CliError::Input(format!(
            "--num-zeros {k} exceeds the {} zeros available",
            zeros.len()
        )));
    }
    let mut rows = Vec::new();
    for &x in &a.x {
        rows.extend(explicit::psi_comparisons(x, &zeros, &[k]).map_err(input)?);
    }
    let text = match cli.format {
        Format::Json => to_json(&json!({ "zeros_source": zeros.source(), "comparisons": rows }))?,
        _ => {
            let mut s = format!(
                "{:>10} {:>6} {:>16} {:>16} {:>12}\n",
                "x", "K", "prime side", "explicit side", "|diff|"
            );
            for r in &rows {
                s += &format!(
                    "{:>10} {:>6} {:>16.10} {:>16.10} {:>12.3e}\n",
                    r.x, r.zeros_used, r.prime_side, r.explicit_side, r.difference
                );
            }
            s + &format!("zeros: {} ({})\n", zeros.len(), zeros.source())
        }
    };
    emit(out, &text)?;
    Ok(0)
}

fn sum(cli: &Cli, a: &SumArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.function == "list" {
        let s: String = ORACLE_NAMES.iter().map(|(n, d)| format!("{n:<16} {d}\n")).collect();
        emit(out, &s)?;
        return Ok(0);
    }
    let o = OracleId::from_name(&a.function, a.param).map_err(input)?;
    let shift = parse_real("--shift", &a.shift)?;
    let mode: Mode = a.mode.parse().map_err(input)?;
    let cfg = SumConfig { mode, n: a.n, m: a.m };
    let r = ramanujan_sum(&o, &shift, &cfg).map_err(input)?;
    let text = match cli.format {
        Format::Json => to_json(&json!({
            "function": a.function,
            "shift": shift.to_string_digits(digits(cli)),
            "value": { "re": r.value.re.to_string_digits(digits(cli)), "im": r.value.im.to_string_digits(digits(cli)) },
            "error_estimate": r.error_estimate,
            "method": r.method,
            "class": r.class,
            "n": r.shift,
            "m": r.order,
            "precision": cli.precision,
        }))?,
        _ => format!(
            "{}\nerror estimate {:.2e}, {} (N = {}, M = {}), {}\n",
            r.value.to_string_digits(digits(cli)),
            r.error_estimate,
            r.method,
            r.shift,
            r.order,
            r.class
        ),
    };
    emit(out, &text)?;
    Ok(0)
}
