//! Monotonicity probes along the argument: evaluate a derived ratio on a
//! grid of arguments and confirm it moves in the claimed direction between
//! every adjacent pair of points. Each grid point is evaluated once; pair
//! comparisons reuse the shared verdict rule.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::eval::{ki, ki_x_derivative, EvalConfig};
use crate::exec::ordered_map;
use crate::harness::verdict::{compare, is_integer_at_least, Val};

/// Outcome of a monotonicity probe over a grid of arguments.
#[derive(Debug, Clone, Serialize)]
pub struct MonotonicityVerdict {
    /// Canonical snake_case probe name.
    pub name: &'static str,
    /// Order at which the ratio was probed.
    pub alpha: f64,
    /// Claimed direction: `true` for non-decreasing, `false` for
    /// non-increasing.
    pub non_decreasing: bool,
    /// Number of grid points probed.
    pub points: usize,
    /// All adjacent-pair comparisons hold (within tolerance and budget).
    pub holds: bool,
    /// Whether the statement claims this order (report-only otherwise).
    pub asserted: bool,
    /// Smallest normalized pair margin (`+∞` when fewer than two points
    /// make the claim vacuous).
    pub worst_margin: f64,
    /// Left endpoint of the worst adjacent pair.
    pub worst_x: f64,
    /// Normalized error budget of the worst pair.
    pub err_budget: f64,
}

impl MonotonicityVerdict {
    /// Re-judges the worst pair with a caller-chosen tolerance.
    pub fn holds_with(&self, tol: f64) -> bool {
        self.worst_margin >= -(tol + self.err_budget)
    }
}

fn validate_grid(xs: &[f64]) -> Result<()> {
    if xs.is_empty() {
        return Err(Error::Config(
            "monotonicity probe needs at least one grid point".into(),
        ));
    }
    // Ties are allowed: repeated points compare bit-identical ratios and
    // contribute an exact zero margin.
    if xs.windows(2).any(|w| !(w[0] <= w[1])) {
        return Err(Error::Config("probe grid must be non-decreasing".into()));
    }
    Ok(())
}

fn run_probe(
    name: &'static str,
    alpha: f64,
    xs: &[f64],
    non_decreasing: bool,
    asserted: bool,
    ratio: impl Fn(f64) -> Result<Val> + Sync + Send,
) -> Result<MonotonicityVerdict> {
    validate_grid(xs)?;
    let ratios: Vec<Val> = ordered_map(xs, |&x| ratio(x))
        .into_iter()
        .collect::<Result<_>>()?;

    let mut verdict = MonotonicityVerdict {
        name,
        alpha,
        non_decreasing,
        points: xs.len(),
        holds: true,
        asserted,
        worst_margin: f64::INFINITY,
        worst_x: xs[0],
        err_budget: 0.0,
    };
    for (i, pair) in ratios.windows(2).enumerate() {
        let (lhs, rhs) = if non_decreasing {
            (pair[0], pair[1])
        } else {
            (pair[1], pair[0])
        };
        let step = compare(name, vec![], lhs, rhs, asserted);
        verdict.holds &= step.holds;
        if step.margin < verdict.worst_margin {
            verdict.worst_margin = step.margin;
            verdict.worst_x = xs[i];
            verdict.err_budget = step.err_budget;
        }
    }
    Ok(verdict)
}

/// Probes log-convexity in the argument: the logarithmic derivative
/// `r(x) = Ki′_α(x)/Ki_α(x)` must be non-decreasing on any grid.
pub fn probe_log_convexity_x(
    alpha: f64,
    xs: &[f64],
    cfg: &EvalConfig,
) -> Result<MonotonicityVerdict> {
    run_probe("log_convex_ratio_x", alpha, xs, true, true, |x| {
        let d: Val = ki_x_derivative(alpha, x, 1, cfg)?.into();
        let v: Val = ki(alpha, x, cfg)?.into();
        Ok(d.div(v))
    })
}

/// Probes geometric concavity in the argument: the log-log slope
/// `s(x) = x·Ki′_α(x)/Ki_α(x)` must be non-increasing. Stated for
/// integer `α ≥ −1`; other orders run report-only.
pub fn probe_geom_concavity_x(
    alpha: f64,
    xs: &[f64],
    cfg: &EvalConfig,
) -> Result<MonotonicityVerdict> {
    let asserted = is_integer_at_least(alpha, -1.0);
    run_probe("geom_concave_ratio_x", alpha, xs, false, asserted, |x| {
        let d: Val = ki_x_derivative(alpha, x, 1, cfg)?.into();
        let v: Val = ki(alpha, x, cfg)?.into();
        Ok(d.scale(x).div(v))
    })
}
