//! `bickley` — command-line evaluation and verification for the
//! exponential-integral–type function
//! `Ki_α(x) = ∫₀^∞ e^{−x·cosh t} · (cosh t)^{−α} dt`.
//!
//! Subcommands:
//! * `eval`   — one point, with an absolute-error estimate;
//! * `table`  — a grid of points, JSON or CSV;
//! * `verify` — inequality-check suites over a parameter grid;
//! * `gram`   — positive-semidefiniteness of a moment Gram matrix;
//! * `det`    — Hankel-type determinants against independent oracles,
//!   plus a finite-difference complete-monotonicity probe;
//! * `report` — one-shot bundle of all verification artifacts.
//!
//! Exit codes: `0` success (all asserted checks pass), `2` usage or
//! domain error, `3` numerical failure (non-convergence, overflow,
//! variance explosion), `4` at least one asserted verification check
//! failed.
//!
//! Output is deterministic: identical invocations produce byte-identical
//! documents. There are no timestamps, collections keep insertion order,
//! and every float is printed with 17 significant digits.

mod output;
mod ranges;

use std::fmt;
use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use bickley::{
    det_cm_probe, det_ki, det_oracle_2x2, det_oracle_mc, gram_psd_in_alpha, gram_psd_in_x, ki,
    ki_grid, suite, sweep, CmProbeVerdict, EvalConfig, GridSpec, HankelSpec, KiValue, McConfig,
    MinEigenVerdict, SweepReport, VERDICT_TOL,
};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ranges::{LinearRange, LogRange};

/// Version tag of the output document layout.
const SCHEMA: u32 = 1;

const EXIT_VERIFICATION: u8 = 4;
const EXIT_USAGE: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

/// Relative agreement demanded between a determinant and its
/// quadrature oracle.
const DET_AGREEMENT_RTOL: f64 = 1e-8;

/// Sigma multiplier for Monte-Carlo oracle agreement.
const MC_SIGMA: f64 = 3.0;

/// Column set shared by `eval` and `table` CSV output.
const POINT_HEADER: &[&str] = &["alpha", "x", "value", "abs_err_est"];

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFICATION),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(command: Command) -> CliResult<bool> {
    match command {
        Command::Eval(args) => cmd_eval(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gram(args) => cmd_gram(args),
        Command::Det(args) => cmd_det(args),
        Command::Report(args) => cmd_report(args),
    }
}

// ---------------------------------------------------------------------------
// Failure plumbing
// ---------------------------------------------------------------------------

type CliResult<T> = Result<T, Failure>;

/// Everything that can abort a command, with its exit-code class.
#[derive(Debug)]
enum Failure {
    /// Library error (domain/config → usage; the rest → numerical).
    Lib(bickley::Error),
    /// Command-line combination the library never sees.
    Usage(String),
    /// The output document could not be written.
    Io(io::Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(e) if e.is_usage() => EXIT_USAGE,
            Failure::Lib(_) => EXIT_NUMERIC,
            Failure::Usage(_) | Failure::Io(_) => EXIT_USAGE,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Usage(msg) => write!(f, "{msg}"),
            Failure::Io(e) => write!(f, "cannot write output: {e}"),
        }
    }
}

impl From<bickley::Error> for Failure {
    fn from(e: bickley::Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

// ---------------------------------------------------------------------------
// Command-line surface
// ---------------------------------------------------------------------------

/// Evaluation and verification toolkit for the integral function
/// `Ki_α(x) = ∫₀^∞ e^{−x·cosh t} (cosh t)^{−α} dt`.
#[derive(Parser)]
#[command(name = "bickley", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate Ki_α(x) at a single point.
    Eval(EvalArgs),
    /// Evaluate Ki over a grid of orders and arguments.
    Table(TableArgs),
    /// Run inequality-check suites over a parameter grid.
    Verify(VerifyArgs),
    /// Test a moment Gram matrix for positive semidefiniteness.
    Gram(GramArgs),
    /// Compare Hankel-type determinants against independent oracles.
    Det(DetArgs),
    /// Produce the full verification bundle in one JSON document.
    Report(ReportArgs),
}

/// Quadrature tuning shared by every subcommand.
#[derive(Args)]
struct QuadArgs {
    /// Relative tolerance for quadrature refinement.
    #[arg(
        long,
        value_name = "TOL",
        default_value = "1e-12",
        allow_negative_numbers = true
    )]
    rel_tol: f64,
}

impl QuadArgs {
    fn config(&self) -> CliResult<EvalConfig> {
        let d = EvalConfig::default();
        EvalConfig::new(
            self.rel_tol,
            d.abs_tol(),
            d.max_refinements(),
            d.truncation_guard(),
        )
        .map_err(Failure::from)
    }
}

/// Output routing shared by every subcommand.
#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the document to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl OutputArgs {
    fn emit(&self, bytes: &[u8]) -> CliResult<()> {
        output::emit(bytes, self.out.as_deref()).map_err(Failure::from)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum GridName {
    Tiny,
    Default,
    Dense,
}

impl GridName {
    fn spec(self) -> GridSpec {
        match self {
            GridName::Tiny => GridSpec::tiny(),
            GridName::Default => GridSpec::default(),
            GridName::Dense => GridSpec::dense(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum OracleKind {
    /// Deterministic quadrature oracle (plain evaluation for n = 0,
    /// a tensorized double integral for n = 1).
    Quad,
    /// Seeded Monte-Carlo oracle (any supported n).
    Mc,
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

#[derive(Args)]
struct EvalArgs {
    /// Order α.
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    /// Argument x (must be positive).
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Serialize)]
struct EvalDoc {
    schema: u32,
    command: &'static str,
    config: EvalEcho,
    result: PointRecord,
}

#[derive(Serialize)]
struct EvalEcho {
    alpha: f64,
    x: f64,
    quad: EvalConfig,
    format: Format,
}

#[derive(Serialize)]
struct PointRecord {
    alpha: f64,
    x: f64,
    value: f64,
    abs_err_est: f64,
    rel_tol_used: f64,
}

fn point_cells(alpha: f64, x: f64, value: f64, abs_err_est: f64) -> Vec<String> {
    vec![
        output::cell(alpha),
        output::cell(x),
        output::cell(value),
        output::cell(abs_err_est),
    ]
}

fn cmd_eval(args: EvalArgs) -> CliResult<bool> {
    let cfg = args.quad.config()?;
    let v = ki(args.alpha, args.x, &cfg)?;
    let bytes = match args.output.format {
        Format::Json => output::to_json(&EvalDoc {
            schema: SCHEMA,
            command: "eval",
            config: EvalEcho {
                alpha: args.alpha,
                x: args.x,
                quad: cfg,
                format: args.output.format,
            },
            result: PointRecord {
                alpha: args.alpha,
                x: args.x,
                value: v.value,
                abs_err_est: v.abs_err_est,
                rel_tol_used: cfg.rel_tol(),
            },
        })?,
        Format::Csv => output::csv(
            POINT_HEADER,
            &[point_cells(args.alpha, args.x, v.value, v.abs_err_est)],
        ),
    };
    args.output.emit(&bytes)?;
    Ok(true)
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

#[derive(Args)]
#[command(group(ArgGroup::new("alpha_axis").required(true).args(["alpha", "alpha_range"])))]
#[command(group(ArgGroup::new("x_axis").required(true).args(["x", "x_range", "x_log_range"])))]
struct TableArgs {
    /// Single order α.
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Orders as an inclusive arithmetic range.
    #[arg(
        long,
        value_name = "A:B:STEP",
        allow_hyphen_values = true,
        value_parser = ranges::parse_linear
    )]
    alpha_range: Option<LinearRange>,
    /// Single argument x.
    #[arg(long, allow_negative_numbers = true)]
    x: Option<f64>,
    /// Arguments as an inclusive arithmetic range.
    #[arg(
        long,
        value_name = "A:B:STEP",
        allow_hyphen_values = true,
        value_parser = ranges::parse_linear
    )]
    x_range: Option<LinearRange>,
    /// Arguments as N points spaced evenly in log x.
    #[arg(
        long,
        value_name = "A:B:N",
        allow_hyphen_values = true,
        value_parser = ranges::parse_log
    )]
    x_log_range: Option<LogRange>,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Serialize)]
struct TableDoc {
    schema: u32,
    command: &'static str,
    config: TableEcho,
    rows: Vec<RowRecord>,
}

#[derive(Serialize)]
struct TableEcho {
    alphas: Vec<f64>,
    xs: Vec<f64>,
    quad: EvalConfig,
    format: Format,
}

#[derive(Serialize)]
struct RowRecord {
    alpha: f64,
    x: f64,
    value: f64,
    abs_err_est: f64,
}

fn cmd_table(args: TableArgs) -> CliResult<bool> {
    let cfg = args.quad.config()?;
    let alphas = match (args.alpha, args.alpha_range) {
        (Some(a), None) => vec![a],
        (None, Some(r)) => r.0,
        _ => unreachable!("clap enforces exactly one order axis"),
    };
    let xs = match (args.x, args.x_range, args.x_log_range) {
        (Some(x), None, None) => vec![x],
        (None, Some(r), None) => r.0,
        (None, None, Some(r)) => r.0,
        _ => unreachable!("clap enforces exactly one argument axis"),
    };
    // Axes resolve in ascending order, and the grid iterates arguments
    // within orders, so rows come out sorted by (alpha, x).
    let points = ki_grid(&alphas, &xs, &cfg)?;
    let rows: Vec<RowRecord> = points
        .iter()
        .map(|p| RowRecord {
            alpha: p.alpha,
            x: p.x,
            value: p.value,
            abs_err_est: p.abs_err_est,
        })
        .collect();
    let bytes = match args.output.format {
        Format::Json => output::to_json(&TableDoc {
            schema: SCHEMA,
            command: "table",
            config: TableEcho {
                alphas,
                xs,
                quad: cfg,
                format: args.output.format,
            },
            rows,
        })?,
        Format::Csv => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| point_cells(r.alpha, r.x, r.value, r.abs_err_est))
                .collect();
            output::csv(POINT_HEADER, &cells)
        }
    };
    args.output.emit(&bytes)?;
    Ok(true)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Args)]
struct VerifyArgs {
    /// Check suite: turan, means, chebyshev, additive, convexity,
    /// bounds, or all.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Parameter grid preset.
    #[arg(long, value_enum, default_value_t = GridName::Default)]
    grid: GridName,
    /// Normalized-margin tolerance for pass/fail classification
    /// (negative values force equality cases to fail; useful for
    /// exercising the failure path).
    #[arg(long, default_value_t = VERDICT_TOL, allow_negative_numbers = true)]
    tol: f64,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Serialize)]
struct VerifyDoc {
    schema: u32,
    command: &'static str,
    config: VerifyEcho,
    total_failures: usize,
    report: SweepReport,
}

#[derive(Serialize)]
struct VerifyEcho {
    suite: String,
    checks: Vec<&'static str>,
    grid: GridName,
    tol: f64,
    quad: EvalConfig,
    format: Format,
}

fn cmd_verify(args: VerifyArgs) -> CliResult<bool> {
    let cfg = args.quad.config()?;
    let names = suite(&args.suite)?;
    let grid = args.grid.spec();
    let report = sweep(&grid, &names, args.tol, &cfg)?;
    let total_failures = report.total_failures();
    let bytes = match args.output.format {
        Format::Json => output::to_json(&VerifyDoc {
            schema: SCHEMA,
            command: "verify",
            config: VerifyEcho {
                suite: args.suite,
                checks: names.iter().map(|c| c.as_str()).collect(),
                grid: args.grid,
                tol: args.tol,
                quad: cfg,
                format: args.output.format,
            },
            total_failures,
            report,
        })?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .summaries
                .iter()
                .map(|s| {
                    vec![
                        s.name.as_str().to_string(),
                        s.count.to_string(),
                        s.asserted_count.to_string(),
                        output::cell(s.min_margin),
                        output::cell(s.min_asserted_margin),
                        s.failure_count.to_string(),
                    ]
                })
                .collect();
            output::csv(
                &[
                    "name",
                    "count",
                    "asserted_count",
                    "min_margin",
                    "min_asserted_margin",
                    "failure_count",
                ],
                &rows,
            )
        }
    };
    args.output.emit(&bytes)?;
    if total_failures > 0 {
        eprintln!("verification failed: {total_failures} asserted check(s) violated");
        return Ok(false);
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// gram
// ---------------------------------------------------------------------------

#[derive(Args)]
#[command(group(ArgGroup::new("matrix").required(true).args(["points", "orders"])))]
struct GramArgs {
    /// Fixed order for an argument-mode matrix [Ki_α(x_j + x_k)];
    /// pair with --points.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "orders")]
    alpha: Option<f64>,
    /// Argument grid (comma separated) for the argument-mode matrix.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        requires = "alpha"
    )]
    points: Option<Vec<f64>>,
    /// Fixed argument for an order-mode matrix [Ki_{α_j+α_k}(x)];
    /// pair with --orders.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "points")]
    x: Option<f64>,
    /// Order grid (comma separated) for the order-mode matrix.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        requires = "x"
    )]
    orders: Option<Vec<f64>>,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Serialize)]
struct GramDoc {
    schema: u32,
    command: &'static str,
    config: GramEcho,
    verdict: MinEigenVerdict,
}

#[derive(Serialize)]
struct GramEcho {
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    points: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orders: Option<Vec<f64>>,
    quad: EvalConfig,
    format: Format,
}

fn cmd_gram(args: GramArgs) -> CliResult<bool> {
    let cfg = args.quad.config()?;
    let verdict = if let (Some(alpha), Some(points)) = (args.alpha, args.points.as_deref()) {
        gram_psd_in_x(alpha, points, &cfg)?
    } else if let (Some(x), Some(orders)) = (args.x, args.orders.as_deref()) {
        gram_psd_in_alpha(orders, x, &cfg)?
    } else {
        unreachable!("clap enforces exactly one matrix mode")
    };
    let holds = verdict.holds;
    let margin = verdict.margin;
    let bytes = match args.output.format {
        Format::Json => output::to_json(&GramDoc {
            schema: SCHEMA,
            command: "gram",
            config: GramEcho {
                mode: if args.points.is_some() {
                    "arguments"
                } else {
                    "orders"
                },
                alpha: args.alpha,
                points: args.points,
                x: args.x,
                orders: args.orders,
                quad: cfg,
                format: args.output.format,
            },
            verdict,
        })?,
        Format::Csv => output::csv(
            &[
                "name",
                "size",
                "min_eigenvalue",
                "trace",
                "margin",
                "err_budget",
                "holds",
                "asserted",
            ],
            &[vec![
                verdict.name.to_string(),
                verdict.size.to_string(),
                output::cell(verdict.min_eigenvalue),
                output::cell(verdict.trace),
                output::cell(verdict.margin),
                output::cell(verdict.err_budget),
                verdict.holds.to_string(),
                verdict.asserted.to_string(),
            ]],
        ),
    };
    args.output.emit(&bytes)?;
    if !holds {
        eprintln!("verification failed: minimum-eigenvalue margin {margin:.3e} is below tolerance");
        return Ok(false);
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// det
// ---------------------------------------------------------------------------

#[derive(Args)]
#[command(group(ArgGroup::new("argument").required(true).args(["x", "x_range"])))]
struct DetArgs {
    /// Top-left order α of the determinant family.
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    /// Matrix-size parameter: the matrix is (n+1)×(n+1).
    #[arg(long)]
    n: usize,
    /// Single argument x.
    #[arg(long, allow_negative_numbers = true)]
    x: Option<f64>,
    /// Arguments as an inclusive arithmetic range (uniform spacing, so
    /// the monotonicity probe applies directly).
    #[arg(
        long,
        value_name = "A:B:STEP",
        allow_hyphen_values = true,
        value_parser = ranges::parse_linear
    )]
    x_range: Option<LinearRange>,
    /// Independent oracle to compare against.
    #[arg(long, value_enum, default_value_t = OracleKind::Quad)]
    oracle: OracleKind,
    /// Monte-Carlo sample count (mc oracle only).
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    /// Monte-Carlo seed (mc oracle only).
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Serialize)]
struct DetDoc {
    schema: u32,
    command: &'static str,
    config: DetEcho,
    rows: Vec<DetRow>,
    cm_probe: CmProbeVerdict,
}

#[derive(Serialize)]
struct DetEcho {
    alpha: f64,
    n: usize,
    xs: Vec<f64>,
    oracle: OracleKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    quad: EvalConfig,
    format: Format,
}

#[derive(Serialize)]
struct DetRow {
    x: f64,
    det: f64,
    det_abs_err_est: f64,
    oracle: f64,
    oracle_abs_err_est: f64,
    discrepancy: f64,
    tolerance: f64,
    within_tolerance: bool,
}

/// Row comparing a determinant against a deterministic quadrature
/// oracle: agreement to [`DET_AGREEMENT_RTOL`] relative, plus both
/// error budgets.
fn quad_compared_row(x: f64, det: KiValue, oracle: KiValue) -> DetRow {
    let discrepancy = (det.value - oracle.value).abs();
    let scale = det.value.abs().max(oracle.value.abs()).max(1e-300);
    let tolerance = DET_AGREEMENT_RTOL * scale + det.abs_err_est + oracle.abs_err_est;
    DetRow {
        x,
        det: det.value,
        det_abs_err_est: det.abs_err_est,
        oracle: oracle.value,
        oracle_abs_err_est: oracle.abs_err_est,
        discrepancy,
        tolerance,
        within_tolerance: discrepancy <= tolerance,
    }
}

/// Row comparing a determinant against the Monte-Carlo oracle:
/// agreement to [`MC_SIGMA`] oracle standard errors plus the
/// determinant's own budget.
fn mc_compared_row(x: f64, det: KiValue, oracle: KiValue) -> DetRow {
    let discrepancy = (det.value - oracle.value).abs();
    let tolerance = MC_SIGMA * oracle.abs_err_est + det.abs_err_est;
    DetRow {
        x,
        det: det.value,
        det_abs_err_est: det.abs_err_est,
        oracle: oracle.value,
        oracle_abs_err_est: oracle.abs_err_est,
        discrepancy,
        tolerance,
        within_tolerance: discrepancy <= tolerance,
    }
}

fn det_csv(rows: &[DetRow]) -> Vec<u8> {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                output::cell(r.x),
                output::cell(r.det),
                output::cell(r.det_abs_err_est),
                output::cell(r.oracle),
                output::cell(r.oracle_abs_err_est),
                output::cell(r.discrepancy),
                output::cell(r.tolerance),
                r.within_tolerance.to_string(),
            ]
        })
        .collect();
    output::csv(
        &[
            "x",
            "det",
            "det_abs_err_est",
            "oracle",
            "oracle_abs_err_est",
            "discrepancy",
            "tolerance",
            "within_tolerance",
        ],
        &cells,
    )
}

fn cmd_det(args: DetArgs) -> CliResult<bool> {
    let cfg = args.quad.config()?;
    if args.oracle == OracleKind::Quad && args.n >= 2 {
        return Err(Failure::Usage(
            "the quadrature determinant oracle supports n <= 1; \
             use --oracle mc for larger matrices"
                .to_string(),
        ));
    }
    let mc = match args.oracle {
        OracleKind::Mc => Some(McConfig::new(args.samples, args.seed)?),
        OracleKind::Quad => None,
    };
    let xs = match (args.x, args.x_range) {
        (Some(x), None) => vec![x],
        (None, Some(r)) => r.0,
        _ => unreachable!("clap enforces exactly one argument axis"),
    };

    let mut rows = Vec::with_capacity(xs.len());
    for &x in &xs {
        let spec = HankelSpec::new(args.alpha, args.n, x)?;
        let det = det_ki(&spec, &cfg)?;
        let row = match &mc {
            Some(mc) => mc_compared_row(x, det, det_oracle_mc(&spec, mc)?),
            None if args.n == 0 => quad_compared_row(x, det, ki(args.alpha, x, &cfg)?),
            None => quad_compared_row(x, det, det_oracle_2x2(args.alpha, x, &cfg)?),
        };
        rows.push(row);
    }
    let order = (xs.len() - 1).min(2) as u32;
    let cm_probe = det_cm_probe(args.alpha, args.n, &xs, order, &cfg)?;

    let row_failures = rows.iter().filter(|r| !r.within_tolerance).count();
    let probe_holds = cm_probe.holds;
    let bytes = match args.output.format {
        Format::Json => output::to_json(&DetDoc {
            schema: SCHEMA,
            command: "det",
            config: DetEcho {
                alpha: args.alpha,
                n: args.n,
                xs,
                oracle: args.oracle,
                samples: mc.as_ref().map(McConfig::samples),
                seed: mc.as_ref().map(McConfig::seed),
                quad: cfg,
                format: args.output.format,
            },
            rows,
            cm_probe,
        })?,
        Format::Csv => det_csv(&rows),
    };
    args.output.emit(&bytes)?;

    if row_failures > 0 || !probe_holds {
        let mut msg = format!(
            "verification failed: {row_failures} oracle comparison(s) out of tolerance"
        );
        if !probe_holds {
            msg.push_str("; the monotonicity probe was violated");
        }
        eprintln!("{msg}");
        return Ok(false);
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

#[derive(Args)]
struct ReportArgs {
    /// Parameter grid preset for the inequality sweep.
    #[arg(long, value_enum, default_value_t = GridName::Default)]
    grid: GridName,
    /// Normalized-margin tolerance for the inequality sweep.
    #[arg(long, default_value_t = VERDICT_TOL, allow_negative_numbers = true)]
    tol: f64,
    #[command(flatten)]
    quad: QuadArgs,
    /// Write the document to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct ReportDoc {
    schema: u32,
    command: &'static str,
    config: ReportEcho,
    sweep: SweepReport,
    gram: Vec<MinEigenVerdict>,
    determinants: Vec<ReportDetRow>,
    cm_probes: Vec<CmProbeVerdict>,
    failures: FailureCounts,
    pass: bool,
}

#[derive(Serialize)]
struct ReportEcho {
    grid: GridName,
    tol: f64,
    quad: EvalConfig,
}

#[derive(Serialize)]
struct ReportDetRow {
    alpha: f64,
    n: usize,
    #[serde(flatten)]
    row: DetRow,
}

#[derive(Clone, Copy, Serialize)]
struct FailureCounts {
    sweep: usize,
    gram: usize,
    determinants: usize,
    cm_probes: usize,
}

fn cmd_report(args: ReportArgs) -> CliResult<bool> {
    let cfg = args.quad.config()?;
    let names = suite("all")?;
    let sweep_report = sweep(&args.grid.spec(), &names, args.tol, &cfg)?;

    // Gram battery: three argument-mode and three order-mode matrices
    // spanning small/moderate orders and arguments.
    let battery_x: [(f64, &[f64]); 3] = [
        (0.5, &[0.5, 1.0, 1.5, 2.0]),
        (2.0, &[0.5, 1.0, 1.5, 2.0]),
        (5.0, &[0.25, 0.75, 2.25, 6.75]),
    ];
    let battery_alpha: [(&[f64], f64); 3] = [
        (&[-2.0, -1.0, 0.0, 1.0, 2.0], 0.7),
        (&[-1.5, -0.5, 0.5, 1.5, 2.5], 2.0),
        (&[0.0, 1.0, 2.0, 3.0], 5.0),
    ];
    let mut gram = Vec::with_capacity(battery_x.len() + battery_alpha.len());
    for (alpha, points) in battery_x {
        gram.push(gram_psd_in_x(alpha, points, &cfg)?);
    }
    for (orders, x) in battery_alpha {
        gram.push(gram_psd_in_alpha(orders, x, &cfg)?);
    }

    // Determinant triangle: 2×2 determinants against the tensorized
    // quadrature oracle.
    let mut determinants = Vec::new();
    for alpha in [0.0, 2.0, 4.0] {
        for x in [0.5, 1.0, 2.0] {
            let spec = HankelSpec::new(alpha, 1, x)?;
            let det = det_ki(&spec, &cfg)?;
            let oracle = det_oracle_2x2(alpha, x, &cfg)?;
            determinants.push(ReportDetRow {
                alpha,
                n: 1,
                row: quad_compared_row(x, det, oracle),
            });
        }
    }

    // Complete-monotonicity probes on a uniform argument grid.
    let cm_grid: Vec<f64> = (0..10).map(|i| 0.5 + 0.5 * i as f64).collect();
    let mut cm_probes = Vec::new();
    for n in [1usize, 2] {
        for alpha in [-2.0, 0.0, 2.0] {
            cm_probes.push(det_cm_probe(alpha, n, &cm_grid, 2, &cfg)?);
        }
    }

    let failures = FailureCounts {
        sweep: sweep_report.total_failures(),
        gram: gram.iter().filter(|g| !g.holds).count(),
        determinants: determinants
            .iter()
            .filter(|d| !d.row.within_tolerance)
            .count(),
        cm_probes: cm_probes.iter().filter(|p| !p.holds).count(),
    };
    let pass = failures.sweep == 0
        && failures.gram == 0
        && failures.determinants == 0
        && failures.cm_probes == 0;

    let bytes = output::to_json(&ReportDoc {
        schema: SCHEMA,
        command: "report",
        config: ReportEcho {
            grid: args.grid,
            tol: args.tol,
            quad: cfg,
        },
        sweep: sweep_report,
        gram,
        determinants,
        cm_probes,
        failures,
        pass,
    })?;
    output::emit(&bytes, args.out.as_deref())?;

    if !pass {
        eprintln!(
            "verification failed: sweep={} gram={} determinants={} cm_probes={}",
            failures.sweep, failures.gram, failures.determinants, failures.cm_probes
        );
        return Ok(false);
    }
    Ok(true)
}
