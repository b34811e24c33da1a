//! Closed-form envelopes and brackets for the Bickley function.
//!
//! Everything here is an explicitly computable expression (log-space gamma
//! arithmetic, no quadrature), except where a bound is itself defined through
//! Bickley values — those take an [`EvalConfig`] and propagate the evaluation
//! error into the result.

use crate::error::{Error, Result};
use crate::eval::{ki, ki_at_zero, EvalConfig, KiValue, X_LIMIT};
use crate::gamma::log_gamma;
use serde::Serialize;
use std::f64::consts::{LN_2, PI};

/// A two-sided enclosure `[lower, upper]` with a shared absolute error
/// budget on its endpoints (zero only when both endpoints are exact).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bracket {
    /// Lower endpoint.
    pub lower: f64,
    /// Upper endpoint.
    pub upper: f64,
    /// Absolute error budget covering both endpoints.
    pub err_budget: f64,
}

impl Bracket {
    /// Whether `value` lies inside the enclosure, inflated by the budget.
    pub fn contains(&self, value: f64) -> bool {
        value >= self.lower - self.err_budget && value <= self.upper + self.err_budget
    }

    /// Whether `value` lies *strictly* inside: its distance to each endpoint
    /// exceeds the combined error budgets, so floating point cannot be
    /// blamed for the separation.
    pub fn strictly_contains(&self, value: f64, value_err: f64) -> bool {
        let slack = self.err_budget + value_err;
        value - slack > self.lower && value + slack < self.upper
    }

    /// `upper − lower`.
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

fn require_finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be finite, got {v}")))
    }
}

/// Upper envelope obtained by an arithmetic-geometric mean step inside the
/// integral: `√π · e^{−x} · Γ(α − 1/4) / (2 Γ(α) x^{1/4})`.
///
/// Dominates `Ki_α(x)` for all `α > 1/4`, `x > 0`.
pub fn upper_bound_amgm(alpha: f64, x: f64) -> Result<f64> {
    require_finite("alpha", alpha)?;
    require_finite("x", x)?;
    if alpha <= 0.25 {
        return Err(Error::Domain(format!(
            "mean-inequality envelope needs alpha > 1/4, got {alpha}"
        )));
    }
    if x <= 0.0 {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    let ln_val =
        0.5 * PI.ln() - x + log_gamma(alpha - 0.25)? - LN_2 - log_gamma(alpha)? - 0.25 * x.ln();
    Ok(ln_val.exp())
}

/// Upper envelope from the pointwise maximum of `y^α e^{−y}`:
/// `√π · α^α · Γ(α) / (2 (e x)^α Γ(α + 1/2))`.
///
/// Dominates `Ki_α(x)` for all `α > 0`, `x > 0`.
pub fn upper_bound_power_envelope(alpha: f64, x: f64) -> Result<f64> {
    require_finite("alpha", alpha)?;
    require_finite("x", x)?;
    if alpha <= 0.0 {
        return Err(Error::Domain(format!(
            "power envelope needs alpha > 0, got {alpha}"
        )));
    }
    if x <= 0.0 {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    let ln_val = 0.5 * PI.ln() + alpha * alpha.ln() + log_gamma(alpha)?
        - LN_2
        - alpha * (1.0 + x.ln())
        - log_gamma(alpha + 0.5)?;
    Ok(ln_val.exp())
}

/// Two-sided Hölder enclosure of `Ki_α(x)` with exponent `p > 1`
/// (conjugate `q = p/(p−1)`):
///
/// * lower: `max(Ki_α(0) − x·Ki_{α−1}(0), 0)`, clamped to `0` for
///   `α ≤ 1` where the subtrahend diverges and the bound is vacuous;
/// * upper: `√π / (2^{1/q + 1/(2p)} p^{1/(2p)}) ·
///   [Γ(αq/2)/Γ((αq+1)/2)]^{1/q} · e^{−x} / x^{1/(2p)}`.
///
/// The sandwiched mixed bound lives in [`holder_mixed_bound`].
pub fn holder_bracket(alpha: f64, x: f64, p: f64) -> Result<Bracket> {
    require_finite("alpha", alpha)?;
    require_finite("x", x)?;
    require_finite("p", p)?;
    if alpha <= 0.0 {
        return Err(Error::Domain(format!(
            "Hölder enclosure needs alpha > 0, got {alpha}"
        )));
    }
    if x <= 0.0 {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    if p <= 1.0 {
        return Err(Error::Domain(format!(
            "Hölder exponent must satisfy p > 1, got {p}"
        )));
    }
    let q = p / (p - 1.0);

    let (lower, lower_err) = if alpha > 1.0 {
        let head = ki_at_zero(alpha)?;
        let slope = ki_at_zero(alpha - 1.0)?;
        let raw = head - x * slope;
        (raw.max(0.0), 1e-12 * (head + x * slope))
    } else {
        (0.0, 0.0)
    };

    let lg_num = log_gamma(0.5 * alpha * q)?;
    let lg_den = log_gamma(0.5 * (alpha * q + 1.0))?;
    let ln_upper = 0.5 * PI.ln() - (1.0 / q + 0.5 / p) * LN_2 - (0.5 / p) * p.ln()
        + (lg_num - lg_den) / q
        - x
        - (0.5 / p) * x.ln();
    let upper = ln_upper.exp();
    // Exponent error: log_gamma carries ≤1e−13 relative error, the rest of
    // the exponent only rounding; a relative error in the exponent is an
    // absolute error on the value of the same size.
    let upper_err = upper * (1e-13 * (lg_num.abs() + lg_den.abs()) / q + 1e-14 * (1.0 + x.abs()));

    Ok(Bracket {
        lower,
        upper,
        err_budget: lower_err.max(upper_err),
    })
}

/// The mixed Hölder bound sandwiched between the two sides of
/// [`holder_bracket`]: `[K_0(p·x)]^{1/p} · [Ki_{αq}(0)]^{1/q}`.
///
/// Requires `p·x` within the evaluation range.
pub fn holder_mixed_bound(alpha: f64, x: f64, p: f64, cfg: &EvalConfig) -> Result<KiValue> {
    require_finite("alpha", alpha)?;
    require_finite("x", x)?;
    require_finite("p", p)?;
    if alpha <= 0.0 {
        return Err(Error::Domain(format!(
            "mixed Hölder bound needs alpha > 0, got {alpha}"
        )));
    }
    if p <= 1.0 {
        return Err(Error::Domain(format!(
            "Hölder exponent must satisfy p > 1, got {p}"
        )));
    }
    if !(x > 0.0) || p * x > X_LIMIT {
        return Err(Error::Domain(format!(
            "mixed Hölder bound needs 0 < p·x ≤ {X_LIMIT}, got p·x = {}",
            p * x
        )));
    }
    let q = p / (p - 1.0);
    let base = ki(0.0, p * x, cfg)?;
    let tail = ki_at_zero(alpha * q)?;
    let value = base.value.powf(1.0 / p) * tail.powf(1.0 / q);
    // d(a^{1/p})/a = value/(p·a); the closed-form factor adds only rounding.
    let abs_err_est = value * (base.abs_err_est / (p * base.value) + 1e-13);
    Ok(KiValue { value, abs_err_est })
}

/// Encloses the first order-derivative `∂Ki_α(x)/∂α` between two exact
/// order-shift differences:
///
/// `½[Ki_{α+1}(x) − Ki_{α−1}(x)]  ≤  ∂Ki_α/∂α  ≤  ½[Ki_{α+2}(x) − Ki_α(x)]`,
///
/// both sides strictly negative. The budget is the worse of the two
/// endpoints' propagated evaluation errors.
pub fn alpha_derivative_bracket(alpha: f64, x: f64, cfg: &EvalConfig) -> Result<Bracket> {
    let hi_in = ki(alpha + 1.0, x, cfg)?;
    let lo_in = ki(alpha - 1.0, x, cfg)?;
    let lower = 0.5 * (hi_in.value - lo_in.value);
    let lower_err = 0.5 * (hi_in.abs_err_est + lo_in.abs_err_est);

    let hi_out = ki(alpha + 2.0, x, cfg)?;
    let lo_out = ki(alpha, x, cfg)?;
    let upper = 0.5 * (hi_out.value - lo_out.value);
    let upper_err = 0.5 * (hi_out.abs_err_est + lo_out.abs_err_est);

    Ok(Bracket {
        lower,
        upper,
        err_budget: lower_err.max(upper_err),
    })
}

/// Fourth-power envelope from the half-line Carlson inequality
/// `(∫f)⁴ ≤ π² (∫f²)(∫t²f²)` with `t² ≤ cosh²t`:
///
/// returns `(π²/2)·Ki_{2α}(2x)·Ki_{2α−2}(2x)`, which dominates `[Ki_α(x)]⁴`.
///
/// Returned as a value-with-error since both factors are evaluated
/// numerically.
pub fn carlson_upper_bound(alpha: f64, x: f64, cfg: &EvalConfig) -> Result<KiValue> {
    let a = ki(2.0 * alpha, 2.0 * x, cfg)?;
    let b = ki(2.0 * alpha - 2.0, 2.0 * x, cfg)?;
    let scale = 0.5 * PI * PI;
    let value = scale * a.value * b.value;
    let abs_err_est = scale
        * (a.abs_err_est * b.value.abs()
            + b.abs_err_est * a.value.abs()
            + a.abs_err_est * b.abs_err_est);
    Ok(KiValue { value, abs_err_est })
}

/// The sharp constant `c_α = 2Γ((α+1)/2)/(√π Γ(α/2)) = 1/Ki_α(0)` in the
/// super-multiplicativity inequality
/// `c_α · Ki_α(x) Ki_α(y) ≤ Ki_α(x+y)`.
pub fn kimberling_constant(alpha: f64) -> Result<f64> {
    require_finite("alpha", alpha)?;
    if alpha <= 0.0 {
        return Err(Error::Domain(format!(
            "the sharp product constant needs alpha > 0, got {alpha}"
        )));
    }
    let ln_val =
        LN_2 + log_gamma(0.5 * (alpha + 1.0))? - 0.5 * PI.ln() - log_gamma(0.5 * alpha)?;
    Ok(ln_val.exp())
}
