use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;
use sha2::{Digest, Sha256};

use tangent_sections::chow::{parse_expression, BasisElement, ChowError, ChowRing};
use tangent_sections::io::{parse_matrix, MatrixInput};
use tangent_sections::lab::{parse_catalog, run_entry, EntryOutcome, RunOptions, Status};
use tangent_sections::section::{classify, dual_membership, local_chart_equation, SectionError};

const WORKERS_ENV: &str = "TANSEC_WORKERS";

const EXIT_INPUT: u8 = 2;
const EXIT_SCALAR: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser)]
#[command(
    name = "tansec",
    version,
    about = "Hyperplane sections of P(T_P^n): classification, Chow ring, finite-field checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the section x^t A y = 0 of P(T_P^n).
    Classify {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Reduce an expression in z, a, E0..En to normal form.
    Chow {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        expr: String,
    },
    /// Enumerate every catalog entry over F_q and compare with predictions.
    Verify {
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        q_max: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Seeded conjugates checked per entry.
        #[arg(long, default_value_t = 2)]
        conjugates: usize,
        /// Skip the chart-by-chart singular point comparison.
        #[arg(long)]
        no_charts: bool,
        /// Include wall-clock time in the manifest (makes output vary run to run).
        #[arg(long)]
        timing: bool,
    },
    /// Print the affine equation of the section on the chart x_i = y_j = 1.
    Chart {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Whether [A] lies on the dual variety (the section is singular).
    Dual {
        #[arg(long)]
        matrix: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<SectionError> for Failure {
    fn from(e: SectionError) -> Self {
        let code = match e {
            SectionError::ScalarMatrix => EXIT_SCALAR,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<MatrixInput, Failure> {
    parse_matrix(&read(path)?).map_err(|e| Failure::input(e.to_string()))
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::input(format!("serialization failed: {e}")))?;
    println!("{text}");
    Ok(())
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n < 2 {
        return Err(Failure::input(format!(
            "n = {n} is not allowed: the classification assumes n >= 2"
        )));
    }
    Ok(())
}

fn run_classify(matrix: &Path, n: usize) -> Result<(), Failure> {
    check_n(n)?;
    let report = match load_matrix(matrix)? {
        MatrixInput::Rational(a) => classify(&tangent_sections::algebra::Rationals, &a, n)?,
        MatrixInput::Prime(f, a) => classify(&f, &a, n)?,
    };
    print_json(&report)
}

fn run_dual(matrix: &Path) -> Result<(), Failure> {
    #[derive(Serialize)]
    struct DualOut {
        n: usize,
        dual_member: bool,
    }
    let input = load_matrix(matrix)?;
    let n = input.size().saturating_sub(1);
    check_n(n)?;
    let dual_member = match input {
        MatrixInput::Rational(a) => dual_membership(&tangent_sections::algebra::Rationals, &a)?,
        MatrixInput::Prime(f, a) => dual_membership(&f, &a)?,
    };
    print_json(&DualOut { n, dual_member })
}

fn run_chart(matrix: &Path, n: usize, i: usize, j: usize) -> Result<(), Failure> {
    check_n(n)?;
    match load_matrix(matrix)? {
        MatrixInput::Rational(a) => {
            let f = tangent_sections::algebra::Rationals;
            print_json(&local_chart_equation(&f, &a, n, i, j)?.to_json(&f))
        }
        MatrixInput::Prime(f, a) => print_json(&local_chart_equation(&f, &a, n, i, j)?.to_json(&f)),
    }
}

#[derive(Serialize)]
struct ChowTerm {
    basis: String,
    label: String,
    #[serde(with = "tangent_sections::bignum")]
    coefficient: BigInt,
}

#[derive(Serialize)]
struct ChowOut {
    n: u32,
    expression: String,
    symbols: serde_json::Value,
    normal_form: String,
    terms: Vec<ChowTerm>,
    degree: Option<u32>,
    #[serde(with = "tangent_sections::bignum::option")]
    intersection_number: Option<BigInt>,
}

fn greek_label(b: &BasisElement) -> String {
    match *b {
        BasisElement::Exc(k) => format!("E{k}"),
        BasisElement::Mono(0, 0) => "1".into(),
        BasisElement::Mono(i, j) => {
            let mut parts = Vec::new();
            for (name, e) in [("zeta", i), ("alpha", j)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            parts.join("*")
        }
    }
}

fn run_chow(n: u32, expr: &str) -> Result<(), Failure> {
    if n < 2 {
        return Err(Failure::input(format!(
            "n = {n} is not allowed: the Chow ring is defined for n >= 2"
        )));
    }
    let ring = ChowRing::new(n).map_err(|e| Failure::input(e.to_string()))?;
    let class = parse_expression(&ring, expr).map_err(|e| match e {
        ChowError::Syntax { pos, ref message } => {
            let col = expr[..pos.min(expr.len())].chars().count();
            Failure::input(format!(
                "syntax error at position {pos}: {message}\n  {expr}\n  {}^",
                " ".repeat(col)
            ))
        }
        other => Failure::input(other.to_string()),
    })?;
    let degree = class.homogeneous_degree();
    let intersection_number = if class.is_zero() || degree == Some(ring.top_degree()) {
        Some(
            ring.intersection_number(&class)
                .map_err(|e| Failure::input(e.to_string()))?,
        )
    } else {
        None
    };
    let out = ChowOut {
        n,
        expression: expr.to_string(),
        symbols: serde_json::json!({"z": "zeta", "a": "alpha"}),
        normal_form: class.to_string(),
        terms: class
            .terms()
            .into_iter()
            .map(|(b, c)| ChowTerm {
                basis: b.to_string(),
                label: greek_label(&b),
                coefficient: c,
            })
            .collect(),
        degree,
        intersection_number,
    };
    print_json(&out)
}

#[derive(Serialize)]
struct Summary {
    passed: usize,
    failed: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct RunManifest {
    tool: &'static str,
    version: &'static str,
    input_sha256: String,
    seed: u64,
    q_max: Option<u64>,
    conjugates: usize,
    charts: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
    checks: Vec<EntryOutcome>,
    summary: Summary,
    all_passed: bool,
}

fn run_verify(catalog: &Path, opts: RunOptions, timing: bool) -> Result<(), Failure> {
    let start = Instant::now();
    let text = read(catalog)?;
    let entries = parse_catalog(&text).map_err(|e| Failure::input(e.to_string()))?;
    let mut checks = Vec::new();
    for e in &entries {
        let outcome =
            run_entry(e, &opts).map_err(|err| Failure::input(format!("{}: {err}", e.label())))?;
        let status = match outcome.status {
            Status::Pass => "pass".to_string(),
            Status::Fail => format!("FAIL ({})", outcome.reason.as_deref().unwrap_or("")),
            Status::Skipped => format!("skipped: {}", outcome.reason.as_deref().unwrap_or("")),
        };
        eprintln!("{:<40} {status}", outcome.label);
        checks.push(outcome);
    }
    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    let summary = Summary {
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
    };
    let all_passed = summary.failed == 0;
    let manifest = RunManifest {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        input_sha256: format!("{:x}", Sha256::digest(text.as_bytes())),
        seed: opts.seed,
        q_max: opts.q_max,
        conjugates: opts.conjugates,
        charts: opts.charts,
        elapsed_ms: timing.then(|| start.elapsed().as_millis()),
        checks,
        summary,
        all_passed,
    };
    print_json(&manifest)?;
    if !all_passed {
        return Err(Failure {
            code: EXIT_MISMATCH,
            message: format!(
                "{} catalog entries disagree with the prediction",
                manifest.summary.failed
            ),
        });
    }
    Ok(())
}

fn configure_workers() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let k: usize = raw.trim().parse().ok().filter(|&k| k > 0).ok_or_else(|| {
        Failure::input(format!(
            "{WORKERS_ENV} must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global()
        .map_err(|e| Failure::input(format!("cannot start {k} workers: {e}")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_workers()?;
    match cli.command {
        Command::Classify { matrix, n } => run_classify(&matrix, n),
        Command::Chow { n, expr } => run_chow(n, &expr),
        Command::Verify {
            catalog,
            q_max,
            seed,
            conjugates,
            no_charts,
            timing,
        } => run_verify(
            &catalog,
            RunOptions {
                q_max,
                seed,
                conjugates,
                charts: !no_charts,
            },
            timing,
        ),
        Command::Chart { matrix, n, i, j } => run_chart(&matrix, n, i, j),
        Command::Dual { matrix } => run_dual(&matrix),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
