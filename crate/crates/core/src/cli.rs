//! The `stovar` command-line front end.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 failed
//! precondition (not square, not of type 1, ...), 3 inconclusive analysis
//! (no contraction power up to `--pmax`).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::analysis::{analyze, classify_2x2, AnalysisOptions, DEFAULT_K_REPORT, DEFAULT_P_MAX};
use crate::error::Error;
use crate::io::{parse_matrix, AnyMatrix, DomainChoice, Format, ParseError};
use crate::matrix::Matrix;
use crate::nonneg::SignPattern;
use crate::report::{AnalysisReport, ClassifyReport, PatternReport, VariationCommandReport};
use crate::scalar::{parse_rational, Scalar, Tolerance};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "stovar", version, about = "Column-variation analysis of type-1 matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide convergence of M^k and report E, P and a priori bounds.
    Analyze(AnalyzeArgs),
    /// Column variation and type of a matrix.
    Variation(VariationArgs),
    /// Powers, regularity index and column overlap of a 0/+ pattern.
    Pattern(PatternArgs),
    /// Classify [[1-a, b], [a, 1-b]].
    #[command(name = "classify2x2", allow_negative_numbers = true)]
    Classify2x2(ClassifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Matrix file (.csv or .json).
    pub path: PathBuf,
    /// Override the format implied by the file extension.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Scalar domain; `auto` picks rationals when any entry is a fraction.
    #[arg(long, value_enum, default_value_t = DomainChoice::Auto)]
    pub domain: DomainChoice,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = DEFAULT_P_MAX)]
    pub pmax: usize,
    /// Relative tolerance for float comparisons.
    #[arg(long, default_value_t = Tolerance::DEFAULT.value())]
    pub tol: f64,
    #[arg(long = "k-report", default_value_t = DEFAULT_K_REPORT)]
    pub k_report: usize,
    /// Print only the JSON report.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VariationArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = Tolerance::DEFAULT.value())]
    pub tol: f64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct PatternArgs {
    /// Pattern file: rows of `0` / `+` entries separated by commas or spaces.
    pub path: PathBuf,
    #[arg(long, default_value_t = 32)]
    pub kmax: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Exact number (`p/q` or decimal).
    #[arg(allow_hyphen_values = true)]
    pub a: String,
    #[arg(allow_hyphen_values = true)]
    pub b: String,
    #[arg(long)]
    pub json: bool,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure { code: EXIT_INPUT, message: e.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonUniqueFixedVector | Error::FixedVectorResidual { .. } => EXIT_INPUT,
            _ => EXIT_PRECONDITION,
        };
        Failure { code, message: e.to_string() }
    }
}

fn tolerance(value: f64) -> Result<Tolerance, Failure> {
    Tolerance::new(value).ok_or_else(|| Failure { code: EXIT_INPUT, message: format!("invalid tolerance {value}") })
}

fn emit<R: Serialize>(out: &mut dyn Write, json: bool, report: &R, summary: &str) -> std::io::Result<()> {
    if json {
        let text = serde_json::to_string_pretty(report).map_err(std::io::Error::other)?;
        writeln!(out, "{text}")
    } else {
        write!(out, "{summary}")
    }
}

fn run_analyze<T: Scalar>(m: &Matrix<T>, args: &AnalyzeArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let opts = AnalysisOptions { p_max: args.pmax, k_report: args.k_report, tol: tolerance(args.tol)? };
    let analysis = analyze(m, &opts)?;
    let report = AnalysisReport::build(m, &analysis, &opts)?;
    emit(out, args.json, &report, &report.summary()).map_err(io_failure)?;
    Ok(if analysis.converges() { EXIT_OK } else { EXIT_INCONCLUSIVE })
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure { code: EXIT_INPUT, message: e.to_string() }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Analyze(args) => {
            let input = &args.input;
            match parse_matrix(&input.path, input.format, input.domain)? {
                AnyMatrix::Rational(m) => run_analyze(&m, args, out),
                AnyMatrix::Float(m) => run_analyze(&m, args, out),
            }
        }
        Command::Variation(args) => {
            let input = &args.input;
            let tol = tolerance(args.tol)?;
            let report = match parse_matrix(&input.path, input.format, input.domain)? {
                AnyMatrix::Rational(m) => VariationCommandReport::build(&m, tol),
                AnyMatrix::Float(m) => VariationCommandReport::build(&m, tol),
            };
            emit(out, args.json, &report, &report.summary()).map_err(io_failure)?;
            Ok(EXIT_OK)
        }
        Command::Pattern(args) => {
            let text = std::fs::read_to_string(&args.path).map_err(|e| Failure {
                code: EXIT_INPUT,
                message: format!("cannot read {}: {e}", args.path.display()),
            })?;
            let pattern: SignPattern =
                text.parse().map_err(|message| Failure { code: EXIT_INPUT, message })?;
            let report = PatternReport::build(&pattern, args.kmax)?;
            emit(out, args.json, &report, &report.summary()).map_err(io_failure)?;
            Ok(EXIT_OK)
        }
        Command::Classify2x2(args) => {
            let parse = |s: &str| {
                parse_rational(s).map_err(|e| Failure { code: EXIT_INPUT, message: e.to_string() })
            };
            let c = classify_2x2(parse(&args.a)?, parse(&args.b)?, Tolerance::DEFAULT);
            let report = ClassifyReport::build(&c);
            emit(out, args.json, &report, &report.summary()).map_err(io_failure)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
