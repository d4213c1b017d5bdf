//! `togliatti`: check, enumerate and verify monomial Togliatti systems.
//!
//! Exit codes: 0 success or agreement, 1 usage or parse error, 2 violated
//! precondition, 3 candidate ceiling exceeded, 4 disagreement in `verify`.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use togliatti::classify::{
    default_n, enumerate_with, precheck, verify_with_fixtures, Checker, ClassificationResult, DiffReport,
    EnumerateOptions, Fixtures, Theorem, VerifyOptions, DEFAULT_CEILING,
};
use togliatti::report::{check_ideal, CheckReport};
use togliatti::toric::{is_smooth, SmoothnessVerdict};
use togliatti::{Error, MonomialIdeal};

const EXIT_USAGE: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_TOO_LARGE: u8 = 3;
const EXIT_DISAGREEMENT: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "togliatti", version, about = "Exact checks and classification of monomial Togliatti systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full verdict for one ideal.
    Check {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Also decide smoothness of the associated toric variety.
        #[arg(long)]
        with_smooth: bool,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        fixtures: FixtureArgs,
    },
    /// All minimal systems with `mu` generators, up to permutation.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        mu: usize,
        /// Keep only systems with a smooth toric variety.
        #[arg(long)]
        smooth_only: bool,
        /// Report the smoothness of every system.
        #[arg(long)]
        with_smooth: bool,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        fixtures: FixtureArgs,
    },
    /// Compare an exhaustive enumeration with a theorem's list.
    Verify {
        /// T36, T37, MAIN1, MAIN2, REM1 or REM2.
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
        #[arg(long)]
        d: u32,
        /// Defaults to 3 for REM1 and 2 otherwise.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        fixtures: FixtureArgs,
    },
    /// Smoothness verdict only, with the failing faces.
    Smooth {
        #[command(flatten)]
        ideal: IdealArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct IdealArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: u32,
    /// Comma-separated generators, e.g. "x0^3,x1^3,x2^3,x0*x1*x2".
    ideal: String,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Refuse enumerations with more candidate subsets than this.
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    ceiling: u128,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FixtureArgs {
    /// Directory with the fixture files (default: the bundled copies).
    #[arg(long)]
    fixtures: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. }
        | Error::Degree { .. }
        | Error::Index { .. }
        | Error::InvalidParameters(_)
        | Error::Fixture { .. } => EXIT_USAGE,
        Error::TooLarge { .. } => EXIT_TOO_LARGE,
        Error::NotArtinian(_)
        | Error::BoundExceeded { .. }
        | Error::BoundViolation { .. }
        | Error::UnsupportedParameters(_)
        | Error::NotTogliatti
        | Error::EmptySet
        | Error::LatticeConditionUnmet => EXIT_PRECONDITION,
    }
}

fn load_fixtures(args: &FixtureArgs) -> Result<Fixtures, Failure> {
    Ok(match &args.fixtures {
        Some(dir) => Fixtures::from_dir(dir)?,
        None => Fixtures::bundled(),
    })
}

/// Key-sorted JSON: `serde_json::Value` keeps object keys in a `BTreeMap`.
fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let value: Value = serde_json::to_value(value).map_err(|e| Failure::Io(e.to_string()))?;
    let mut text = serde_json::to_string_pretty(&value).map_err(|e| Failure::Io(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

/// Scalars as plain text, everything else as compact JSON.
fn cell(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Bool(_) | Value::Number(_) => value.to_string(),
        other => other.to_string(),
    }
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Io(e.to_string()))
}

/// One row with a column per top-level key, in sorted key order.
fn object_csv<T: Serialize>(value: &T) -> Result<String, Failure> {
    let Value::Object(map) = serde_json::to_value(value).map_err(|e| Failure::Io(e.to_string()))? else {
        return Err(Failure::Io("expected an object".into()));
    };
    let header: Vec<&str> = map.keys().map(String::as_str).collect();
    let row: Vec<String> = map.values().map(cell).collect();
    to_csv(&header, &[row])
}

fn check_csv(report: &CheckReport) -> Result<String, Failure> {
    object_csv(report)
}

fn enumerate_csv(result: &ClassificationResult) -> Result<String, Failure> {
    let rows: Vec<Vec<String>> = result
        .found
        .iter()
        .map(|f| {
            vec![
                result.n.to_string(),
                result.d.to_string(),
                result.mu.to_string(),
                f.ideal.to_string(),
                f.family.as_ref().map_or_else(|| "unlisted".to_string(), ToString::to_string),
                f.smooth.map_or_else(|| "skipped".to_string(), |s| s.to_string()),
            ]
        })
        .collect();
    to_csv(&["n", "d", "mu", "ideal", "family", "smooth"], &rows)
}

fn verify_csv(report: &DiffReport) -> Result<String, Failure> {
    let kinds = [("extra", &report.extras), ("missing", &report.missing)];
    let rows: Vec<Vec<String>> = kinds
        .iter()
        .flat_map(|(kind, entries)| {
            entries.iter().map(move |e| {
                vec![
                    report.theorem.to_string(),
                    report.n.to_string(),
                    report.d.to_string(),
                    report.mu.to_string(),
                    kind.to_string(),
                    e.ideal.to_string(),
                    e.family.as_ref().map_or_else(String::new, ToString::to_string),
                    e.note.clone().unwrap_or_default(),
                ]
            })
        })
        .collect();
    to_csv(&["theorem", "n", "d", "mu", "kind", "ideal", "family", "note"], &rows)
}

#[derive(Serialize)]
struct SmoothReport<'a> {
    ideal: &'a MonomialIdeal,
    #[serde(flatten)]
    verdict: &'a SmoothnessVerdict,
}

fn smooth_csv(report: &SmoothReport<'_>) -> Result<String, Failure> {
    let rows: Vec<Vec<String>> = if report.verdict.failures.is_empty() {
        vec![vec![report.ideal.to_string(), report.verdict.smooth.to_string(), String::new(), String::new()]]
    } else {
        report
            .verdict
            .failures
            .iter()
            .map(|f| {
                let points: Vec<String> = f.face.points.iter().map(ToString::to_string).collect();
                let condition = serde_json::to_value(f.condition).map(|v| cell(&v)).unwrap_or_default();
                vec![report.ideal.to_string(), report.verdict.smooth.to_string(), points.join(" "), condition]
            })
            .collect()
    };
    to_csv(&["ideal", "smooth", "failing_face", "condition"], &rows)
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn render<T: Serialize>(
    output: &OutputArgs,
    value: &T,
    csv: impl FnOnce(&T) -> Result<String, Failure>,
) -> Result<(), Failure> {
    let text = match output.format {
        Format::Json => to_json(value)?,
        Format::Csv => csv(value)?,
    };
    emit(output, &text)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Check { ideal, with_smooth, output, fixtures } => {
            let i = MonomialIdeal::parse(&ideal.ideal, ideal.n, ideal.d)?;
            let report = check_ideal(&i, with_smooth, &load_fixtures(&fixtures)?)?;
            render(&output, &report, check_csv)?;
        }
        Command::Enumerate { n, d, mu, smooth_only, with_smooth, run, output, fixtures } => {
            precheck(n, d, mu, run.ceiling)?;
            let fixtures = load_fixtures(&fixtures)?;
            let options = EnumerateOptions { jobs: run.jobs, ceiling: run.ceiling, with_smooth, smooth_only };
            let result = enumerate_with(&Checker::new(n, d), mu, &options, &fixtures)?;
            render(&output, &result, enumerate_csv)?;
        }
        Command::Verify { theorem, d, n, run, output, fixtures } => {
            let n = n.unwrap_or_else(|| default_n(theorem));
            let options = VerifyOptions { jobs: run.jobs, ceiling: run.ceiling };
            let report = verify_with_fixtures(theorem, d, n, &options, &load_fixtures(&fixtures)?)?;
            render(&output, &report, verify_csv)?;
            if !report.agreement {
                return Ok(EXIT_DISAGREEMENT);
            }
        }
        Command::Smooth { ideal, output } => {
            let i = MonomialIdeal::parse(&ideal.ideal, ideal.n, ideal.d)?;
            i.require_artinian()?;
            let verdict = is_smooth(&i)?;
            render(&output, &SmoothReport { ideal: &i, verdict: &verdict }, smooth_csv)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
