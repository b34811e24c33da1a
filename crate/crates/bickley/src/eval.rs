//! Evaluation of the Bickley function and its derivatives.
//!
//! The primary representation is the semi-infinite integral
//!
//! ```text
//! Ki_α(x) = ∫₀^∞ e^{−x·cosh t} (cosh t)^{−α} dt ,   x > 0, α real,
//! ```
//!
//! integrated by adaptive tanh-sinh quadrature on a truncated interval
//! `[0, T]` with an explicit bound on the discarded tail folded into the
//! error estimate. Special cases wired through the same machinery:
//!
//! * `Ki_0 = K_0` and `Ki_{−1} = K_1` (modified Bessel functions);
//! * m-th x-derivative: `(−1)^m Ki_{α−m}(x)` via the order recurrence;
//! * m-th α-derivative: same integral with an extra `[ln cosh t]^m`
//!   factor and sign `(−1)^m`;
//! * `Ki_α(0) = √π·Γ(α/2) / (2·Γ((α+1)/2))` for `α > 0` in closed form;
//! * the one-dimensional fractional-integral representation
//!   `Ki_α(x) = (1/Γ(α)) ∫_x^∞ (t−x)^{α−1} K_0(t) dt` for `α > 0`,
//!   used as an independent cross-check of the primary engine.

use std::cell::{Cell, RefCell};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec;
use crate::gamma::log_gamma;
use crate::quad::{tanh_sinh, QuadResult};

/// Largest |α| accepted by the evaluation routines. Beyond it the
/// truncation/overflow policy has not been validated.
pub const ALPHA_LIMIT: f64 = 50.0;
/// Largest x accepted: `e^{−x}` must stay a normal double so relative
/// error control remains meaningful.
pub const X_LIMIT: f64 = 705.0;
/// Double-precision floor for relative tolerances (2⁻⁵⁰).
pub const REL_TOL_FLOOR: f64 = 8.881_784_197_001_252e-16;
/// Most refinement levels any configuration may request.
pub const MAX_REFINEMENT_LIMIT: u32 = 30;

/// A computed function value together with a conservative absolute-error
/// estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KiValue {
    /// The numerical value.
    pub value: f64,
    /// Estimated absolute error: inter-level quadrature difference plus
    /// the truncation-tail bound (plus propagated inner errors where an
    /// operation composes several integrals). Always finite and ≥ 0.
    pub abs_err_est: f64,
}

/// Quadrature tolerances and refinement policy.
///
/// Construct with [`EvalConfig::new`] (validated) or use the default
/// (`rel_tol = 1e−12`, `abs_tol = 0`, 12 refinement levels, unit
/// truncation guard).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalConfig {
    rel_tol: f64,
    abs_tol: f64,
    max_refinements: u32,
    truncation_guard: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            rel_tol: 1e-12,
            abs_tol: 0.0,
            max_refinements: 12,
            truncation_guard: 1.0,
        }
    }
}

impl EvalConfig {
    /// Validated constructor.
    ///
    /// # Errors
    /// [`Error::Config`] unless `rel_tol ∈ [2⁻⁵⁰, 1)`, `abs_tol ≥ 0` and
    /// finite, `1 ≤ max_refinements ≤ 30`, and `truncation_guard > 0`.
    pub fn new(
        rel_tol: f64,
        abs_tol: f64,
        max_refinements: u32,
        truncation_guard: f64,
    ) -> Result<Self> {
        if !(rel_tol >= REL_TOL_FLOOR && rel_tol < 1.0) {
            return Err(Error::Config(format!(
                "rel_tol must lie in [{REL_TOL_FLOOR:e}, 1), got {rel_tol:e}"
            )));
        }
        if !(abs_tol >= 0.0) || !abs_tol.is_finite() {
            return Err(Error::Config(format!(
                "abs_tol must be finite and >= 0, got {abs_tol:e}"
            )));
        }
        if max_refinements == 0 || max_refinements > MAX_REFINEMENT_LIMIT {
            return Err(Error::Config(format!(
                "max_refinements must lie in 1..={MAX_REFINEMENT_LIMIT}, got {max_refinements}"
            )));
        }
        if !(truncation_guard > 0.0) || !truncation_guard.is_finite() {
            return Err(Error::Config(format!(
                "truncation_guard must be finite and > 0, got {truncation_guard}"
            )));
        }
        Ok(EvalConfig {
            rel_tol,
            abs_tol,
            max_refinements,
            truncation_guard,
        })
    }

    /// Relative tolerance for quadrature convergence.
    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    /// Absolute tolerance for quadrature convergence.
    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    /// Maximum number of step-halving refinement levels.
    pub fn max_refinements(&self) -> u32 {
        self.max_refinements
    }

    /// Multiplier applied to the computed truncation point.
    pub fn truncation_guard(&self) -> f64 {
        self.truncation_guard
    }

    /// A config like `self` but with `rel_tol` tightened/loosened to
    /// `factor · rel_tol`, clamped to the representable floor. Used for
    /// inner kernels that must out-resolve an outer integral.
    pub(crate) fn scaled_rel_tol(&self, factor: f64) -> EvalConfig {
        let mut c = *self;
        c.rel_tol = (self.rel_tol * factor).max(REL_TOL_FLOOR);
        c
    }
}

/// A parameter point `(α, x, m)` for evaluation and derivative operations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Params {
    /// Order of the Bickley function.
    pub alpha: f64,
    /// Argument; must be positive for the integral representation.
    pub x: f64,
    /// Derivative order where applicable (0 = the function itself).
    pub m: u32,
}

impl Params {
    /// Check the common domain constraints of the integral representation.
    pub fn validate(&self) -> Result<()> {
        if !self.alpha.is_finite() || self.alpha.abs() > ALPHA_LIMIT {
            return Err(Error::Domain(format!(
                "order alpha must be finite with |alpha| <= {ALPHA_LIMIT}, got {}",
                self.alpha
            )));
        }
        if !self.x.is_finite() || self.x <= 0.0 || self.x > X_LIMIT {
            return Err(Error::Domain(format!(
                "argument x must lie in (0, {X_LIMIT}], got {}",
                self.x
            )));
        }
        Ok(())
    }
}

/// Truncation point for the integral: beyond `T` the integrand is below
/// `~e^{−40}·rel_tol·10⁻³` relative to its scale, with the `−α·ln`
/// enhancement for negative orders accounted for.
pub(crate) fn cutoff_t(alpha_eff: f64, x: f64, cfg: &EvalConfig) -> f64 {
    let l = -(cfg.rel_tol * 1e-3).ln() + 40.0;
    let reach = (l + (-alpha_eff).max(0.0) * l.ln()) / x;
    cfg.truncation_guard * reach.max(2.0).acosh()
}

/// Upper bound on the discarded tail `∫_T^∞ e^{−x cosh t}(cosh t)^{−α} dt`,
/// computed in log space so it underflows to zero rather than misbehaving.
///
/// Substituting `c = cosh t` gives `∫_C^∞ e^{−xc} c^{−α} dc/√(c²−1)` with
/// `C = cosh T ≥ 2`, where `√(c²−1) ≥ (√3/2)·c`; the remaining
/// `∫ c^{β} e^{−xc} dc` (β = −α−1) is bounded by geometric-series
/// integration by parts, valid because the cutoff guarantees `xC > β`.
pub(crate) fn tail_bound(alpha_eff: f64, x: f64, t_cut: f64) -> f64 {
    let c = t_cut.cosh();
    let beta = -alpha_eff - 1.0;
    let mut ln_tail = (2.0 / 3f64.sqrt()).ln() + beta * c.ln() - x * c - x.ln();
    if beta > 0.0 {
        let ratio = beta / (x * c);
        if ratio >= 0.9 {
            // Cutoff policy should prevent this; stay conservative if not.
            return f64::INFINITY;
        }
        ln_tail -= (1.0 - ratio).ln();
    }
    if ln_tail < -745.0 {
        0.0
    } else {
        ln_tail.exp()
    }
}

/// Largest value of the log-integrand `−x·cosh t − α·ln cosh t` on `[0, T]`.
fn log_integrand_max(alpha: f64, x: f64, t_cut: f64) -> f64 {
    if alpha >= 0.0 {
        return -x;
    }
    // Interior critical point at cosh t = −α/x, clamped into the interval.
    let c = ((-alpha) / x).clamp(1.0, t_cut.cosh());
    -x * c - alpha * c.ln()
}

/// Integrate `e^{−x cosh t}(cosh t)^{−α}·[ln cosh t]^m` over `[0, T]` and
/// attach the truncation tail (computed at effective order `α − m`, valid
/// because `(ln c)^m ≤ c^m` for `c ≥ 1`).
fn integrate_kernel(alpha: f64, x: f64, m: u32, cfg: &EvalConfig) -> Result<KiValue> {
    let alpha_eff = alpha - f64::from(m);
    let t_cut = cutoff_t(alpha_eff, x, cfg);
    if log_integrand_max(alpha_eff, x, t_cut) > 700.0 {
        return Err(Error::Overflow(format!(
            "integrand exceeds double-precision range for alpha = {alpha}, x = {x}; \
             this regime (strongly negative order, very small argument) is outside \
             the representable contract"
        )));
    }
    let f = move |t: f64| {
        let ch = t.cosh();
        let lc = ch.ln();
        let g = (-x * ch - alpha * lc).exp();
        if m == 0 {
            g
        } else {
            g * lc.powi(m as i32)
        }
    };
    let tail = tail_bound(alpha_eff, x, t_cut);
    match tanh_sinh(f, 0.0, t_cut, cfg.rel_tol, cfg.abs_tol, cfg.max_refinements) {
        Ok(QuadResult { value, err_est, .. }) => Ok(KiValue {
            value,
            abs_err_est: err_est + tail,
        }),
        Err(Error::Convergence { partial, err_est }) => Err(Error::Convergence {
            partial,
            err_est: err_est + tail,
        }),
        Err(e) => Err(e),
    }
}

/// Evaluate `Ki_α(x) = ∫₀^∞ e^{−x cosh t}(cosh t)^{−α} dt`.
///
/// Headline accuracy contract: relative error within
/// `max(abs_tol, rel_tol·value)` for `α ∈ [−20, 20]`, `x ∈ [10⁻⁶, 700]`;
/// best effort with honest error estimates elsewhere in the accepted
/// domain (`|α| ≤ 50`, `x ∈ (0, 705]`).
///
/// # Errors
/// * [`Error::Domain`] for arguments outside the accepted domain;
/// * [`Error::Convergence`] if the refinement limit is reached first;
/// * [`Error::Overflow`] when the integrand leaves the range of `f64`
///   (strongly negative order together with a very small argument).
pub fn ki(alpha: f64, x: f64, cfg: &EvalConfig) -> Result<KiValue> {
    Params { alpha, x, m: 0 }.validate()?;
    integrate_kernel(alpha, x, 0, cfg)
}

/// Closed form at the origin: `Ki_α(0) = √π·Γ(α/2) / (2·Γ((α+1)/2))`,
/// finite only for `α > 0`.
///
/// # Errors
/// [`Error::Domain`] if `α ≤ 0` (the defining integral diverges there).
pub fn ki_at_zero(alpha: f64) -> Result<f64> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::Domain(format!(
            "Ki_alpha(0) is finite only for alpha > 0, got {alpha}"
        )));
    }
    let ln_val = 0.5 * std::f64::consts::PI.ln() + log_gamma(0.5 * alpha)?
        - std::f64::consts::LN_2
        - log_gamma(0.5 * (alpha + 1.0))?;
    Ok(ln_val.exp())
}

/// m-th derivative in `x`: `d^m/dx^m Ki_α(x) = (−1)^m · Ki_{α−m}(x)`,
/// computed exactly by the order recurrence (one shifted evaluation).
/// `m = 0` is bit-identical to [`ki`].
pub fn ki_x_derivative(alpha: f64, x: f64, m: u32, cfg: &EvalConfig) -> Result<KiValue> {
    Params { alpha, x, m }.validate()?;
    let shifted = alpha - f64::from(m);
    if shifted.abs() > ALPHA_LIMIT {
        return Err(Error::Domain(format!(
            "derivative order {m} shifts alpha = {alpha} to {shifted}, outside |alpha| <= {ALPHA_LIMIT}"
        )));
    }
    let base = ki(shifted, x, cfg)?;
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(KiValue {
        value: sign * base.value,
        abs_err_est: base.abs_err_est,
    })
}

/// m-th derivative in the order:
/// `∂^m/∂α^m Ki_α(x) = (−1)^m ∫₀^∞ e^{−x cosh t}(cosh t)^{−α}[ln cosh t]^m dt`.
///
/// Supported for `m ≤ 6`; higher orders amplify quadrature noise beyond
/// what the error model has been validated for.
pub fn ki_alpha_derivative(alpha: f64, x: f64, m: u32, cfg: &EvalConfig) -> Result<KiValue> {
    Params { alpha, x, m }.validate()?;
    if m > 6 {
        return Err(Error::Domain(format!(
            "order-derivative supported for m <= 6, got {m}"
        )));
    }
    if m == 0 {
        return ki(alpha, x, cfg);
    }
    let base = integrate_kernel(alpha, x, m, cfg)?;
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(KiValue {
        value: sign * base.value,
        abs_err_est: base.abs_err_est,
    })
}

/// Independent cross-representation:
/// `Ki_α(x) = (1/Γ(α)) ∫_x^∞ (t−x)^{α−1} K_0(t) dt`, `α > 0`,
/// with `K_0` supplied by `ki(0, ·)` at a tightened tolerance.
///
/// The integral is split at `t = x + 1`. On the near piece the endpoint
/// power is removed exactly for `α < 1` by substituting `u = (t−x)^α`;
/// for `α ≥ 1` it is integrated directly (the power is continuous there).
/// The far piece runs to `t = x + s_end` with an explicit bound on the
/// remaining `K_0` tail added to the error estimate.
pub fn ki_via_fractional(alpha: f64, x: f64, cfg: &EvalConfig) -> Result<KiValue> {
    if !alpha.is_finite() || alpha <= 0.0 || alpha > ALPHA_LIMIT {
        return Err(Error::Domain(format!(
            "fractional representation requires 0 < alpha <= {ALPHA_LIMIT}, got {alpha}"
        )));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    let l = -(cfg.rel_tol * 1e-3).ln() + 40.0;
    let s_end = (2.0 * alpha + 10.0).max(l);
    if x + s_end > X_LIMIT {
        return Err(Error::Domain(format!(
            "fractional representation needs x + {s_end:.1} <= {X_LIMIT} for its K_0 tail, got x = {x}"
        )));
    }

    let inner_cfg = cfg.scaled_rel_tol(1e-2);
    let first_failure: RefCell<Option<Error>> = RefCell::new(None);
    let worst_rel = Cell::new(0.0_f64);
    let kernel = |t: f64| -> f64 {
        match ki(0.0, t, &inner_cfg) {
            Ok(k) => {
                if k.value > 0.0 {
                    worst_rel.set(worst_rel.get().max(k.abs_err_est / k.value));
                }
                k.value
            }
            Err(e) => {
                let mut slot = first_failure.borrow_mut();
                if slot.is_none() {
                    *slot = Some(e);
                }
                0.0
            }
        }
    };

    // Near piece: ∫_x^{x+1} (t−x)^{α−1} K₀(t) dt.
    let near = if alpha < 1.0 {
        // u = (t−x)^α turns the integrand into (1/α)·K₀(x + u^{1/α}), regular.
        let inv_alpha = 1.0 / alpha;
        tanh_sinh(
            |u| inv_alpha * kernel(x + u.powf(inv_alpha)),
            0.0,
            1.0,
            cfg.rel_tol,
            cfg.abs_tol,
            cfg.max_refinements,
        )?
    } else {
        // (t−x) is clamped at 0 so endpoint rounding in the node map can
        // never feed a negative base into the fractional power.
        tanh_sinh(
            |t| (t - x).max(0.0).powf(alpha - 1.0) * kernel(t),
            x,
            x + 1.0,
            cfg.rel_tol,
            cfg.abs_tol,
            cfg.max_refinements,
        )?
    };

    // Far piece: ∫_{x+1}^{x+s_end} (t−x)^{α−1} K₀(t) dt.
    let far = tanh_sinh(
        |t| (t - x).powf(alpha - 1.0) * kernel(t),
        x + 1.0,
        x + s_end,
        cfg.rel_tol,
        cfg.abs_tol,
        cfg.max_refinements,
    )?;

    if let Some(e) = first_failure.into_inner() {
        return Err(e);
    }

    // Tail past s_end: K₀(t) ≤ √(π/(2t))·e^{−t}, and the remaining power
    // integral is controlled because s_end ≥ 2α + 10 > 2(α−1).
    let s = s_end;
    let ln_gamma_alpha = log_gamma(alpha)?;
    let ln_tail = -ln_gamma_alpha + 0.5 * (std::f64::consts::PI / (2.0 * (x + s))).ln()
        - (x + s)
        + (alpha - 1.0) * s.ln()
        - (1.0 - (alpha - 1.0).max(0.0) / s).ln();
    let tail = if ln_tail < -745.0 { 0.0 } else { ln_tail.exp() };

    let scale = (-ln_gamma_alpha).exp();
    let raw = near.value + far.value;
    let value = scale * raw;
    let abs_err_est = scale * (near.err_est + far.err_est + worst_rel.get() * raw.abs())
        + tail
        + 3e-13 * value.abs().max(ln_gamma_alpha.abs() * value.abs());
    Ok(KiValue { value, abs_err_est })
}

/// One `(α, x)` grid point with its evaluated value.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct KiPoint {
    /// Order.
    pub alpha: f64,
    /// Argument.
    pub x: f64,
    /// Computed `Ki_α(x)`.
    pub value: f64,
    /// Absolute-error estimate of `value`.
    pub abs_err_est: f64,
}

fn grid_tasks(alphas: &[f64], xs: &[f64]) -> Vec<(f64, f64)> {
    let mut tasks = Vec::with_capacity(alphas.len() * xs.len());
    for &a in alphas {
        for &x in xs {
            tasks.push((a, x));
        }
    }
    tasks
}

fn collect_grid(tasks: &[(f64, f64)], results: Vec<Result<KiValue>>) -> Result<Vec<KiPoint>> {
    tasks
        .iter()
        .zip(results)
        .map(|(&(alpha, x), r)| {
            r.map(|k| KiPoint {
                alpha,
                x,
                value: k.value,
                abs_err_est: k.abs_err_est,
            })
        })
        .collect()
}

/// Evaluate `Ki` over the Cartesian product `alphas × xs`, rows ordered
/// α-major then x-minor (i.e. sorted by `(α, x)` when the inputs are
/// sorted). Parallel when the `parallel` feature is enabled; the output
/// is bit-identical to [`ki_grid_serial`] either way.
pub fn ki_grid(alphas: &[f64], xs: &[f64], cfg: &EvalConfig) -> Result<Vec<KiPoint>> {
    let tasks = grid_tasks(alphas, xs);
    let results = exec::ordered_map(&tasks, |&(a, x)| ki(a, x, cfg));
    collect_grid(&tasks, results)
}

/// Always-sequential twin of [`ki_grid`].
pub fn ki_grid_serial(alphas: &[f64], xs: &[f64], cfg: &EvalConfig) -> Result<Vec<KiPoint>> {
    let tasks = grid_tasks(alphas, xs);
    let results = exec::ordered_map_serial(&tasks, |&(a, x)| ki(a, x, cfg));
    collect_grid(&tasks, results)
}
