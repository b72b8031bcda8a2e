//! `g2cub` command line: dimension table, rule export, polynomial evaluation
//! and the verification suites.

use crate::chebyshev::{cheb_poly_kind, poly_json, ChebKind, WeightParams};
use crate::cubature::{fmt17, rule, RuleKind};
use crate::gentrig::TrigFamily;
use crate::lattice::{dim_pi_star, enum_gamma};
use crate::poly::MIndex;
use crate::sturm::{float_poly_json, jacobi_poly};
use crate::verify::{run_suite, Suite};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "g2cub", version, about = "Chebyshev polynomials and cubature on the G2 deltoid region")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of dim Π*_n and |Γ_n| per family for n = 1..=N.
    Dims {
        #[arg(long, default_value_t = 12)]
        n: i64,
    },
    /// Export the nodes and weights of a cubature rule.
    Nodes {
        #[arg(long, value_parser = parse_rule)]
        rule: RuleKind,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate P^{α,β}_{k1,k2} at (x, y).
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long)]
        k1: u32,
        #[arg(long)]
        k2: u32,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
        /// Also print the coefficient list.
        #[arg(long)]
        coeffs: bool,
    },
    /// Print the coefficients of P^{α,β}_{k1,k2} as JSON.
    Poly {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long)]
        k1: u32,
        #[arg(long)]
        k2: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a property suite; exit status 1 if any check fails.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        tol: Option<f64>,
    },
}

fn parse_rule(s: &str) -> Result<RuleKind, String> {
    s.parse().map_err(|e: crate::cubature::CubatureError| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: crate::verify::VerifyError| e.to_string())
}

enum Failure {
    Usage(String),
    Verify(String),
    Io(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let shown = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = if shown { write!(out, "{e}") } else { write!(err, "{e}") };
            return if shown { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Verify(m)) => {
            let _ = writeln!(err, "{m}");
            EXIT_VERIFY
        }
        Err(Failure::Io(m)) => {
            let _ = writeln!(err, "I/O error: {m}");
            EXIT_IO
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Dims { n } => cmd_dims(n, out),
        Command::Nodes { rule, n, format, out: path } => cmd_nodes(rule, n, format, path, out),
        Command::Eval { alpha, beta, k1, k2, x, y, coeffs } => cmd_eval(alpha, beta, MIndex::new(k1, k2), x, y, coeffs, out),
        Command::Poly { alpha, beta, k1, k2, out: path } => {
            let s = poly_text(alpha, beta, &MIndex::new(k1, k2))?;
            emit(&format!("{s}\n"), path, out)
        }
        Command::Verify { suite, n, tol } => cmd_verify(suite, n, tol, out),
    }
}

fn cmd_dims(n_max: i64, out: &mut dyn Write) -> Result<(), Failure> {
    if n_max < 1 {
        return Err(Failure::Usage(format!("--n must be at least 1, got {n_max}")));
    }
    writeln!(out, "n\tdim\tcc\tsc\tcs\tss")?;
    for n in 1..=n_max {
        let g: Vec<String> = TrigFamily::ALL.iter().map(|&f| enum_gamma(f, n).members.len().to_string()).collect();
        writeln!(out, "{n}\t{}\t{}", dim_pi_star(n), g.join("\t"))?;
    }
    Ok(())
}

fn emit(text: &str, path: Option<PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(&p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn cmd_nodes(kind: RuleKind, n: i64, format: Format, path: Option<PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    let r = rule(kind, n).map_err(|e| Failure::Usage(e.to_string()))?;
    let text = match format {
        Format::Json => r.to_json(),
        Format::Csv => r.to_csv(),
    };
    emit(&text, path, out)
}

fn params(alpha: f64, beta: f64) -> Result<WeightParams, Failure> {
    WeightParams::new(alpha, beta).map_err(|e| Failure::Usage(e.to_string()))
}

fn poly_text(alpha: f64, beta: f64, k: &MIndex) -> Result<String, Failure> {
    let p = params(alpha, beta)?;
    Ok(match ChebKind::from_params(alpha, beta) {
        Some(kind) => poly_json(alpha, beta, k, &cheb_poly_kind(kind, k)),
        None => {
            let j = jacobi_poly(&p, k).map_err(|e| Failure::Verify(e.to_string()))?;
            float_poly_json(&p, k, &j.poly)
        }
    })
}

fn cmd_eval(alpha: f64, beta: f64, k: MIndex, x: f64, y: f64, coeffs: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let p = params(alpha, beta)?;
    if !(x.is_finite() && y.is_finite()) {
        return Err(Failure::Usage("evaluation point must be finite".into()));
    }
    let v = match ChebKind::from_params(alpha, beta) {
        Some(kind) => cheb_poly_kind(kind, &k).to_float().eval(x, y),
        None => jacobi_poly(&p, &k).map_err(|e| Failure::Verify(e.to_string()))?.poly.eval(x, y),
    };
    writeln!(out, "{}", fmt17(v))?;
    if coeffs {
        writeln!(out, "{}", poly_text(alpha, beta, &k)?)?;
    }
    Ok(())
}

fn cmd_verify(suite: Suite, n: Option<i64>, tol: Option<f64>, out: &mut dyn Write) -> Result<(), Failure> {
    if let Some(t) = tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Failure::Usage(format!("--tol must be positive, got {t}")));
        }
    }
    if let Some(m) = n {
        if m < 1 {
            return Err(Failure::Usage(format!("--n must be at least 1, got {m}")));
        }
    }
    let report = run_suite(suite, n, tol).map_err(|e| Failure::Verify(format!("{suite}: {e}")))?;
    write!(out, "{report}")?;
    if report.passed() {
        Ok(())
    } else {
        let failed = report.checks.iter().filter(|c| !c.passed()).count();
        Err(Failure::Verify(format!("{suite}: {failed} check(s) failed")))
    }
}
