//! Named-check registry and grid sweeps: expand a parameter grid into the
//! task list each check's preconditions admit, evaluate every task
//! (concurrently when built with the `parallel` feature), and fold the
//! verdicts into a deterministic per-check report.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::eval::{EvalConfig, ALPHA_LIMIT, X_LIMIT};
use crate::exec::{ordered_map, ordered_map_serial};
use crate::harness::checks;
use crate::harness::grid::GridSpec;
use crate::harness::verdict::InequalityVerdict;

/// Maximum number of failing verdicts retained per check; the count is
/// always exact, only the stored examples are capped.
const MAX_FAILURES_KEPT: usize = 50;

/// Every grid-sweepable check, in canonical report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckName {
    Turan,
    TuraLeft,
    TuraRight,
    GeomMeanLeft,
    GeomMeanRight,
    Chebyshev,
    Gruss,
    KimberlingProduct,
    KimberlingSubadditive,
    KimberlingPetrovic,
    Vasic,
    OrderProduct,
    OrderSubadditive,
    OrderPetrovic,
    PairMean,
    PairProduct,
    JointLogConvex,
    RelativeConvexity,
    LogConvexRatioX,
    GeomConcaveRatioX,
    UpperAmgm,
    UpperPowerEnvelope,
    Carlson,
    AlphaDerivativeBracket,
    BilateralChain,
}

impl CheckName {
    /// All checks, in canonical report order.
    pub const ALL: [CheckName; 25] = [
        CheckName::Turan,
        CheckName::TuraLeft,
        CheckName::TuraRight,
        CheckName::GeomMeanLeft,
        CheckName::GeomMeanRight,
        CheckName::Chebyshev,
        CheckName::Gruss,
        CheckName::KimberlingProduct,
        CheckName::KimberlingSubadditive,
        CheckName::KimberlingPetrovic,
        CheckName::Vasic,
        CheckName::OrderProduct,
        CheckName::OrderSubadditive,
        CheckName::OrderPetrovic,
        CheckName::PairMean,
        CheckName::PairProduct,
        CheckName::JointLogConvex,
        CheckName::RelativeConvexity,
        CheckName::LogConvexRatioX,
        CheckName::GeomConcaveRatioX,
        CheckName::UpperAmgm,
        CheckName::UpperPowerEnvelope,
        CheckName::Carlson,
        CheckName::AlphaDerivativeBracket,
        CheckName::BilateralChain,
    ];

    /// Canonical snake_case identifier (matches the verdicts' `name`).
    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Turan => "turan",
            CheckName::TuraLeft => "tura_left",
            CheckName::TuraRight => "tura_right",
            CheckName::GeomMeanLeft => "geom_mean_left",
            CheckName::GeomMeanRight => "geom_mean_right",
            CheckName::Chebyshev => "chebyshev",
            CheckName::Gruss => "gruss",
            CheckName::KimberlingProduct => "kimberling_product",
            CheckName::KimberlingSubadditive => "kimberling_subadditive",
            CheckName::KimberlingPetrovic => "kimberling_petrovic",
            CheckName::Vasic => "vasic",
            CheckName::OrderProduct => "order_product",
            CheckName::OrderSubadditive => "order_subadditive",
            CheckName::OrderPetrovic => "order_petrovic",
            CheckName::PairMean => "pair_mean",
            CheckName::PairProduct => "pair_product",
            CheckName::JointLogConvex => "joint_logconvex",
            CheckName::RelativeConvexity => "relative_convexity",
            CheckName::LogConvexRatioX => "log_convex_ratio_x",
            CheckName::GeomConcaveRatioX => "geom_concave_ratio_x",
            CheckName::UpperAmgm => "upper_amgm",
            CheckName::UpperPowerEnvelope => "upper_power_envelope",
            CheckName::Carlson => "carlson",
            CheckName::AlphaDerivativeBracket => "alpha_derivative_bracket",
            CheckName::BilateralChain => "bilateral_chain",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<CheckName> {
        CheckName::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown check name `{s}`")))
    }
}

impl Serialize for CheckName {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Named bundles of checks, as exposed by the command line.
pub fn suite(name: &str) -> Result<Vec<CheckName>> {
    use CheckName::*;
    Ok(match name {
        "turan" => vec![Turan, TuraLeft, TuraRight, LogConvexRatioX],
        "means" => vec![
            GeomMeanLeft,
            GeomMeanRight,
            GeomConcaveRatioX,
            PairMean,
            PairProduct,
        ],
        "chebyshev" => vec![Chebyshev, Gruss, RelativeConvexity],
        "additive" => vec![
            KimberlingProduct,
            KimberlingSubadditive,
            KimberlingPetrovic,
            Vasic,
            OrderProduct,
            OrderSubadditive,
            OrderPetrovic,
        ],
        "convexity" => vec![JointLogConvex, LogConvexRatioX, GeomConcaveRatioX],
        "bounds" => vec![
            UpperAmgm,
            UpperPowerEnvelope,
            Carlson,
            AlphaDerivativeBracket,
            BilateralChain,
        ],
        "all" => CheckName::ALL.to_vec(),
        other => {
            return Err(Error::Config(format!(
                "unknown suite `{other}` (expected turan, means, chebyshev, additive, \
                 convexity, bounds, or all)"
            )))
        }
    })
}

/// One unit of sweep work: a check at one parameter point. The meaning of
/// each slot depends on the check; unused slots are zero.
#[derive(Debug, Clone, Copy)]
struct Task {
    name: CheckName,
    p: [f64; 5],
}

fn order_ok(alpha: f64) -> bool {
    alpha.abs() <= ALPHA_LIMIT
}

fn arg_ok(x: f64) -> bool {
    x > 0.0 && x <= X_LIMIT
}

/// Expands one check over the grid, applying its preconditions as
/// filters. Iteration is a fixed nested-loop order (outermost axis is
/// listed first below), so task order — and therefore the report — is
/// deterministic.
fn tasks_for(name: CheckName, g: &GridSpec) -> Vec<Task> {
    let mut out = Vec::new();
    let mut push = |p: [f64; 5]| out.push(Task { name, p });
    match name {
        CheckName::Turan => {
            for &a1 in &g.alphas {
                for &a2 in &g.alphas {
                    for &x in &g.xs {
                        push([a1, a2, x, 0.0, 0.0]);
                    }
                }
            }
        }
        CheckName::TuraLeft | CheckName::TuraRight => {
            for &a in &g.alphas {
                for &x in &g.xs {
                    if order_ok(a - 1.0) && order_ok(a - 2.0) {
                        push([a, x, 0.0, 0.0, 0.0]);
                    }
                }
            }
        }
        CheckName::GeomMeanLeft | CheckName::GeomMeanRight => {
            for &a in &g.alphas {
                for &x in &g.xs {
                    for &y in &g.ys {
                        push([a, x, y, 0.0, 0.0]);
                    }
                }
            }
        }
        CheckName::Chebyshev => {
            for &a in &g.alphas {
                for &b in &g.betas {
                    for &x in &g.xs {
                        if order_ok(-b) && order_ok(a + b) {
                            push([a, b, x, 0.0, 0.0]);
                        }
                    }
                }
            }
        }
        CheckName::Gruss => {
            for &a in &g.alphas {
                for &b in &g.betas {
                    for &x in &g.xs {
                        if b <= 0.0 && a + b >= 0.0 && order_ok(-b) && order_ok(a + b) {
                            push([a, b, x, 0.0, 0.0]);
                        }
                    }
                }
            }
        }
        CheckName::KimberlingProduct
        | CheckName::KimberlingSubadditive
        | CheckName::KimberlingPetrovic => {
            for &a in &g.alphas {
                for &x in &g.xs {
                    for &y in &g.ys {
                        if a > 0.0 && arg_ok(x + y) {
                            push([a, x, y, 0.0, 0.0]);
                        }
                    }
                }
            }
        }
        CheckName::Vasic => {
            for &a in &g.alphas {
                for &x in &g.xs {
                    for &y in &g.ys {
                        for &r in &g.rs {
                            for &s in &g.ss {
                                if a > 0.0 && r >= 1.0 && s >= 1.0 && arg_ok(r * x + s * y) {
                                    push([a, x, y, r, s]);
                                }
                            }
                        }
                    }
                }
            }
        }
        CheckName::OrderProduct | CheckName::OrderSubadditive | CheckName::OrderPetrovic => {
            for &a in &g.alphas {
                for &b in &g.betas {
                    for &x in &g.xs {
                        if a > 0.0 && b > 0.0 && order_ok(a + b) {
                            push([a, b, x, 0.0, 0.0]);
                        }
                    }
                }
            }
        }
        CheckName::PairMean => {
            for &a in &g.alphas {
                for &b in &g.betas {
                    for &x in &g.xs {
                        if order_ok(a + b) && order_ok(a - b) {
                            push([a, b, x, 0.0, 0.0]);
                        }
                    }
                }
            }
        }
        CheckName::PairProduct => {
            for &a in &g.alphas {
                for &nu in &g.nus {
                    for &mu in &g.mus {
                        for &x in &g.xs {
                            if [a + nu, a - nu, a + mu, a - mu].iter().all(|&o| order_ok(o)) {
                                push([a, nu, mu, x, 0.0]);
                            }
                        }
                    }
                }
            }
        }
        CheckName::JointLogConvex => {
            for &a in &g.alphas {
                for &x in &g.xs {
                    for &nu in &g.nus {
                        for &mu in &g.mus {
                            if nu.abs() < 1.0
                                && order_ok(a * (1.0 + mu))
                                && order_ok(a * (1.0 - mu))
                                && arg_ok((1.0 + nu) * x)
                                && arg_ok((1.0 - nu) * x)
                            {
                                push([a, x, nu, mu, 0.0]);
                            }
                        }
                    }
                }
            }
        }
        CheckName::RelativeConvexity => {
            for &a in &g.alphas {
                for &x in &g.xs {
                    if a >= 2.0 {
                        push([a, x, 0.0, 0.0, 0.0]);
                    }
                }
            }
        }
        CheckName::LogConvexRatioX | CheckName::GeomConcaveRatioX => {
            for &a in &g.alphas {
                for w in g.xs.windows(2) {
                    if order_ok(a - 1.0) {
                        push([a, w[0], w[1], 0.0, 0.0]);
                    }
                }
            }
        }
        CheckName::UpperAmgm => {
            for &a in &g.alphas {
                for &x in &g.xs {
                    if a > 0.25 {
                        push([a, x, 0.0, 0.0, 0.0]);
                    }
                }
            }
        }
        CheckName::UpperPowerEnvelope => {
            for &a in &g.alphas {
                for &x in &g.xs {
                    if a > 0.0 {
                        push([a, x, 0.0, 0.0, 0.0]);
                    }
                }
            }
        }
        CheckName::Carlson => {
            for &a in &g.alphas {
                for &x in &g.xs {
                    if order_ok(2.0 * a) && order_ok(2.0 * a - 2.0) && arg_ok(2.0 * x) {
                        push([a, x, 0.0, 0.0, 0.0]);
                    }
                }
            }
        }
        CheckName::AlphaDerivativeBracket => {
            for &a in &g.alphas {
                for &x in &g.xs {
                    if order_ok(a + 2.0) && order_ok(a - 1.0) {
                        push([a, x, 0.0, 0.0, 0.0]);
                    }
                }
            }
        }
        CheckName::BilateralChain => {
            for &a in &g.alphas {
                for &x in &g.xs {
                    for &p in &g.ps {
                        if !(p > 1.0) || !(a > 0.0) {
                            continue;
                        }
                        let q = p / (p - 1.0);
                        if a * q <= ALPHA_LIMIT && arg_ok(p * x) {
                            push([a, x, p, 0.0, 0.0]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Runs one task to one verdict.
fn run_task(task: &Task, cfg: &EvalConfig) -> Result<InequalityVerdict> {
    let [p0, p1, p2, p3, p4] = task.p;
    match task.name {
        CheckName::Turan => checks::check_turan(p0, p1, p2, cfg),
        CheckName::TuraLeft => Ok(checks::check_tura_chain(p0, p1, cfg)?[0].clone()),
        CheckName::TuraRight => Ok(checks::check_tura_chain(p0, p1, cfg)?[1].clone()),
        CheckName::GeomMeanLeft => Ok(checks::check_geom_concavity_chain(p0, p1, p2, cfg)?[0].clone()),
        CheckName::GeomMeanRight => {
            Ok(checks::check_geom_concavity_chain(p0, p1, p2, cfg)?[1].clone())
        }
        CheckName::Chebyshev => checks::check_chebyshev(p0, p1, p2, cfg),
        CheckName::Gruss => checks::check_gruss(p0, p1, p2, cfg),
        CheckName::KimberlingProduct => Ok(checks::check_kimberling_chain(p0, p1, p2, cfg)?[0].clone()),
        CheckName::KimberlingSubadditive => {
            Ok(checks::check_kimberling_chain(p0, p1, p2, cfg)?[1].clone())
        }
        CheckName::KimberlingPetrovic => {
            Ok(checks::check_kimberling_chain(p0, p1, p2, cfg)?[2].clone())
        }
        CheckName::Vasic => checks::check_vasic(p0, p1, p2, p3, p4, cfg),
        CheckName::OrderProduct => Ok(checks::check_order_chain(p0, p1, p2, cfg)?[0].clone()),
        CheckName::OrderSubadditive => Ok(checks::check_order_chain(p0, p1, p2, cfg)?[1].clone()),
        CheckName::OrderPetrovic => Ok(checks::check_order_chain(p0, p1, p2, cfg)?[2].clone()),
        CheckName::PairMean => checks::check_pair_mean(p0, p1, p2, cfg),
        CheckName::PairProduct => checks::check_pair_product(p0, p1, p2, p3, cfg),
        CheckName::JointLogConvex => checks::check_joint_logconvex(p0, p1, p2, p3, cfg),
        CheckName::RelativeConvexity => checks::check_relative_convexity(p0, p1, cfg),
        CheckName::LogConvexRatioX => checks::check_log_convexity_pair(p0, p1, p2, cfg),
        CheckName::GeomConcaveRatioX => checks::check_geom_concavity_pair(p0, p1, p2, cfg),
        CheckName::UpperAmgm => checks::check_upper_amgm(p0, p1, cfg),
        CheckName::UpperPowerEnvelope => checks::check_upper_power_envelope(p0, p1, cfg),
        CheckName::Carlson => checks::check_carlson(p0, p1, cfg),
        CheckName::AlphaDerivativeBracket => checks::check_alpha_derivative_bracket(p0, p1, cfg),
        CheckName::BilateralChain => checks::check_bilateral_chain(p0, p1, p2, cfg),
    }
}

/// Aggregated outcome of one check across its grid tasks.
#[derive(Debug, Clone, Serialize)]
pub struct CheckSummary {
    /// Canonical check name.
    pub name: CheckName,
    /// Number of parameter points the grid admitted.
    pub count: usize,
    /// How many of those the statement asserts (the rest are report-only).
    pub asserted_count: usize,
    /// Smallest margin over all points (`+∞` when `count = 0`).
    pub min_margin: f64,
    /// Parameter point attaining `min_margin`, when any point ran.
    pub argmin: Option<InequalityVerdict>,
    /// Smallest margin among asserted points (`+∞` when none).
    pub min_asserted_margin: f64,
    /// Exact number of asserted points that failed at the sweep tolerance.
    pub failure_count: usize,
    /// Up to [`MAX_FAILURES_KEPT`] failing verdicts, in task order.
    pub failures: Vec<InequalityVerdict>,
    /// True when `failure_count` exceeded the stored examples.
    pub failures_truncated: bool,
}

/// Deterministic aggregate of a whole sweep run.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    /// Normalized tolerance the verdicts were judged at.
    pub tol: f64,
    /// Total number of parameter points across all checks.
    pub total_checks: usize,
    /// Per-check aggregates, in canonical check order.
    pub summaries: Vec<CheckSummary>,
}

impl SweepReport {
    /// Total asserted failures across all checks.
    pub fn total_failures(&self) -> usize {
        self.summaries.iter().map(|s| s.failure_count).sum()
    }
}

/// Deduplicates and orders the requested checks canonically.
fn canonical_selection(names: &[CheckName]) -> Vec<CheckName> {
    CheckName::ALL
        .iter()
        .copied()
        .filter(|c| names.contains(c))
        .collect()
}

fn summarize(
    name: CheckName,
    verdicts: Vec<Result<InequalityVerdict>>,
    tol: f64,
) -> Result<CheckSummary> {
    let mut summary = CheckSummary {
        name,
        count: 0,
        asserted_count: 0,
        min_margin: f64::INFINITY,
        argmin: None,
        min_asserted_margin: f64::INFINITY,
        failure_count: 0,
        failures: Vec::new(),
        failures_truncated: false,
    };
    for item in verdicts {
        let v = item?;
        summary.count += 1;
        if v.margin < summary.min_margin {
            summary.min_margin = v.margin;
            summary.argmin = Some(v.clone());
        }
        if v.asserted {
            summary.asserted_count += 1;
            if v.margin < summary.min_asserted_margin {
                summary.min_asserted_margin = v.margin;
            }
            if !v.holds_with(tol) {
                summary.failure_count += 1;
                if summary.failures.len() < MAX_FAILURES_KEPT {
                    summary.failures.push(v);
                } else {
                    summary.failures_truncated = true;
                }
            }
        }
    }
    Ok(summary)
}

fn sweep_with(
    grid: &GridSpec,
    names: &[CheckName],
    tol: f64,
    cfg: &EvalConfig,
    map: fn(&[Task], &EvalConfig) -> Vec<Result<InequalityVerdict>>,
) -> Result<SweepReport> {
    grid.validate()?;
    if !tol.is_finite() {
        return Err(Error::Config(format!("sweep tolerance must be finite, got {tol}")));
    }
    let mut report = SweepReport {
        tol,
        total_checks: 0,
        summaries: Vec::new(),
    };
    for name in canonical_selection(names) {
        let tasks = tasks_for(name, grid);
        let verdicts = map(&tasks, cfg);
        let summary = summarize(name, verdicts, tol)?;
        report.total_checks += summary.count;
        report.summaries.push(summary);
    }
    Ok(report)
}

/// Runs the named checks over the grid and aggregates one summary per
/// check (in canonical order, duplicates ignored). Evaluation may be
/// concurrent; the report is bit-identical across thread counts because
/// verdicts are folded in task order. The first evaluation error aborts
/// the sweep.
pub fn sweep(
    grid: &GridSpec,
    names: &[CheckName],
    tol: f64,
    cfg: &EvalConfig,
) -> Result<SweepReport> {
    sweep_with(grid, names, tol, cfg, |tasks, cfg| {
        ordered_map(tasks, |t| run_task(t, cfg))
    })
}

/// Always-sequential twin of [`sweep`]; produces bit-identical reports.
pub fn sweep_serial(
    grid: &GridSpec,
    names: &[CheckName],
    tol: f64,
    cfg: &EvalConfig,
) -> Result<SweepReport> {
    sweep_with(grid, names, tol, cfg, |tasks, cfg| {
        ordered_map_serial(tasks, |t| run_task(t, cfg))
    })
}
