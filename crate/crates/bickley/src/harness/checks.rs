//! The inequality checks: each takes a parameter point, evaluates both
//! sides through the quadrature engine, propagates error budgets, and
//! returns structured verdicts.
//!
//! Ratio-shaped claims are evaluated in product form (multiplying through
//! by the positive denominators) so the error budget never inherits
//! division noise. Each check's `asserted` flag is true exactly on the
//! domain the underlying statement claims; elsewhere the check still runs
//! and reports, but can never count as a failure.

use crate::bounds;
use crate::error::{Error, Result};
use crate::eval::{ki, ki_alpha_derivative, ki_at_zero, ki_x_derivative, EvalConfig};
use crate::harness::verdict::{compare, is_integer_at_least, InequalityVerdict, ParamList, Val};

fn val(alpha: f64, x: f64, cfg: &EvalConfig) -> Result<Val> {
    Ok(ki(alpha, x, cfg)?.into())
}

/// Log-convexity in the order: `[Ki_{(α₁+α₂)/2}(x)]² ≤ Ki_{α₁}(x)·Ki_{α₂}(x)`.
/// Symmetric under `α₁ ↔ α₂` (bit-identically so).
pub fn check_turan(
    alpha1: f64,
    alpha2: f64,
    x: f64,
    cfg: &EvalConfig,
) -> Result<InequalityVerdict> {
    let mid = val(0.5 * (alpha1 + alpha2), x, cfg)?;
    let a = val(alpha1, x, cfg)?;
    let b = val(alpha2, x, cfg)?;
    Ok(compare(
        "turan",
        vec![("alpha1", alpha1), ("alpha2", alpha2), ("x", x)],
        mid.sq(),
        a.mul(b),
        true,
    ))
}

/// The two-sided Turán chain around `Ki_{α−1}²`:
/// left `Ki_{α−1}² ≤ Ki_α·Ki_{α−2}` (all real α), right
/// `Ki_α·Ki_{α−2} ≤ Ki_{α−1}² + Ki_α·Ki_{α−1}/x` (stated for integer
/// α ≥ −1; reported elsewhere).
pub fn check_tura_chain(alpha: f64, x: f64, cfg: &EvalConfig) -> Result<[InequalityVerdict; 2]> {
    let a = val(alpha, x, cfg)?;
    let am1 = val(alpha - 1.0, x, cfg)?;
    let am2 = val(alpha - 2.0, x, cfg)?;
    let params = vec![("alpha", alpha), ("x", x)];
    let left = compare("tura_left", params.clone(), am1.sq(), a.mul(am2), true);
    let right = compare(
        "tura_right",
        params,
        a.mul(am2),
        am1.sq().add(a.mul(am1).scale(1.0 / x)),
        is_integer_at_least(alpha, -1.0),
    );
    Ok([left, right])
}

/// Geometric concavity in the argument, squared to avoid square roots:
/// left `Ki_α(x)·Ki_α(y) ≤ [Ki_α(√(xy))]²` (stated for integer α ≥ −1),
/// right `[Ki_α((x+y)/2)]² ≤ Ki_α(x)·Ki_α(y)` (all real α).
pub fn check_geom_concavity_chain(
    alpha: f64,
    x: f64,
    y: f64,
    cfg: &EvalConfig,
) -> Result<[InequalityVerdict; 2]> {
    let at_x = val(alpha, x, cfg)?;
    let at_y = val(alpha, y, cfg)?;
    let geo = val(alpha, (x * y).sqrt(), cfg)?;
    let ari = val(alpha, 0.5 * (x + y), cfg)?;
    let params = vec![("alpha", alpha), ("x", x), ("y", y)];
    let left = compare(
        "geom_mean_left",
        params.clone(),
        at_x.mul(at_y),
        geo.sq(),
        is_integer_at_least(alpha, -1.0),
    );
    let right = compare("geom_mean_right", params, ari.sq(), at_x.mul(at_y), true);
    Ok([left, right])
}

/// Product rearrangement driven by the monotonicity of `(cosh t)^β` and
/// `(cosh t)^{−(α+β)}`: when the two powers are monotone in opposite
/// directions (`β·(α+β) ≤ 0` with either factor nonzero) the forward form
/// `Ki_{−β}·Ki_{α+β} ≤ Ki_0·Ki_α` holds; monotone in the same direction
/// reverses it. The chosen orientation is recorded in `params` as
/// `direction` (+1 forward, −1 reversed, 0 equality — either power
/// constant).
pub fn check_chebyshev(
    alpha: f64,
    beta: f64,
    x: f64,
    cfg: &EvalConfig,
) -> Result<InequalityVerdict> {
    let mixed = val(-beta, x, cfg)?.mul(val(alpha + beta, x, cfg)?);
    let plain = val(0.0, x, cfg)?.mul(val(alpha, x, cfg)?);
    let discriminant = beta * -(alpha + beta);
    let direction = if discriminant > 0.0 {
        1.0
    } else if discriminant < 0.0 {
        -1.0
    } else {
        0.0
    };
    let params = vec![
        ("alpha", alpha),
        ("beta", beta),
        ("x", x),
        ("direction", direction),
    ];
    let (lhs, rhs) = if direction < 0.0 {
        (plain, mixed)
    } else {
        (mixed, plain)
    };
    Ok(compare("chebyshev", params, lhs, rhs, true))
}

/// Product-gap bound: `|Ki_0·Ki_α − Ki_{−β}·Ki_{α+β}| ≤ Ki_0²/4`,
/// on the stated domain `β ≤ 0 ≤ α + β`.
pub fn check_gruss(alpha: f64, beta: f64, x: f64, cfg: &EvalConfig) -> Result<InequalityVerdict> {
    if !(beta <= 0.0) || !(alpha + beta >= 0.0) {
        return Err(Error::Domain(format!(
            "product-gap bound needs beta ≤ 0 ≤ alpha+beta, got alpha={alpha}, beta={beta}"
        )));
    }
    let plain = val(0.0, x, cfg)?.mul(val(alpha, x, cfg)?);
    let mixed = val(-beta, x, cfg)?.mul(val(alpha + beta, x, cfg)?);
    let gap = plain.sub(mixed);
    let gap_abs = Val {
        v: gap.v.abs(),
        e: gap.e,
    };
    let quarter = val(0.0, x, cfg)?.sq().scale(0.25);
    Ok(compare(
        "gruss",
        vec![("alpha", alpha), ("beta", beta), ("x", x)],
        gap_abs,
        quarter,
        true,
    ))
}

/// The super/sub-additivity chain in the argument, for `α > 0`:
/// `c_α·Ki_α(x)·Ki_α(y) ≤ Ki_α(x+y) ≤ Ki_α(x) + Ki_α(y) ≤ Ki_α(x+y) + Ki_α(0)`
/// with the sharp constant `c_α = 1/Ki_α(0)`.
pub fn check_kimberling_chain(
    alpha: f64,
    x: f64,
    y: f64,
    cfg: &EvalConfig,
) -> Result<[InequalityVerdict; 3]> {
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!(
            "additivity chain needs alpha > 0, got {alpha}"
        )));
    }
    let c = bounds::kimberling_constant(alpha)?;
    let at_x = val(alpha, x, cfg)?;
    let at_y = val(alpha, y, cfg)?;
    let at_sum = val(alpha, x + y, cfg)?;
    let z = ki_at_zero(alpha)?;
    let at_zero = Val {
        v: z,
        e: 1e-13 * z.abs(),
    };
    let params = vec![("alpha", alpha), ("x", x), ("y", y)];
    let product = compare(
        "kimberling_product",
        params.clone(),
        at_x.mul(at_y).scale(c),
        at_sum,
        true,
    );
    let subadd = compare(
        "kimberling_subadditive",
        params.clone(),
        at_sum,
        at_x.add(at_y),
        true,
    );
    let petrovic = compare(
        "kimberling_petrovic",
        params,
        at_x.add(at_y),
        at_sum.add(at_zero),
        true,
    );
    Ok([product, subadd, petrovic])
}

/// Weighted extension of the additivity chain:
/// `r·Ki_α(x) + s·Ki_α(y) ≤ Ki_α(rx+sy) + (r+s−1)·Ki_α(0)`, `r, s ≥ 1`.
pub fn check_vasic(
    alpha: f64,
    x: f64,
    y: f64,
    r: f64,
    s: f64,
    cfg: &EvalConfig,
) -> Result<InequalityVerdict> {
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!(
            "weighted additivity needs alpha > 0, got {alpha}"
        )));
    }
    if !(r >= 1.0) || !(s >= 1.0) {
        return Err(Error::Domain(format!(
            "weights must satisfy r, s ≥ 1, got r={r}, s={s}"
        )));
    }
    let z = ki_at_zero(alpha)?;
    let at_zero = Val {
        v: z,
        e: 1e-13 * z.abs(),
    };
    let lhs = val(alpha, x, cfg)?
        .scale(r)
        .add(val(alpha, y, cfg)?.scale(s));
    let rhs = val(alpha, r * x + s * y, cfg)?.add(at_zero.scale(r + s - 1.0));
    Ok(compare(
        "vasic",
        vec![("alpha", alpha), ("x", x), ("y", y), ("r", r), ("s", s)],
        lhs,
        rhs,
        true,
    ))
}

/// The additivity chain in the *order*, for `α, β > 0`:
/// `Ki_α·Ki_β ≤ Ki_{α+β}·Ki_0` (product form of the first link),
/// `Ki_{α+β} ≤ Ki_α + Ki_β`, and `Ki_α + Ki_β ≤ Ki_0 + Ki_{α+β}`.
pub fn check_order_chain(
    alpha: f64,
    beta: f64,
    x: f64,
    cfg: &EvalConfig,
) -> Result<[InequalityVerdict; 3]> {
    if !(alpha > 0.0) || !(beta > 0.0) {
        return Err(Error::Domain(format!(
            "order-additivity chain needs alpha, beta > 0, got alpha={alpha}, beta={beta}"
        )));
    }
    let a = val(alpha, x, cfg)?;
    let b = val(beta, x, cfg)?;
    let sum_order = val(alpha + beta, x, cfg)?;
    let zero_order = val(0.0, x, cfg)?;
    let params = vec![("alpha", alpha), ("beta", beta), ("x", x)];
    let product = compare(
        "order_product",
        params.clone(),
        a.mul(b),
        sum_order.mul(zero_order),
        true,
    );
    let subadd = compare(
        "order_subadditive",
        params.clone(),
        sum_order,
        a.add(b),
        true,
    );
    let petrovic = compare(
        "order_petrovic",
        params,
        a.add(b),
        zero_order.add(sum_order),
        true,
    );
    Ok([product, subadd, petrovic])
}

/// Cosh-pairing mean inequality: `2·Ki_α ≤ Ki_{α+β} + Ki_{α−β}`.
pub fn check_pair_mean(
    alpha: f64,
    beta: f64,
    x: f64,
    cfg: &EvalConfig,
) -> Result<InequalityVerdict> {
    let center = val(alpha, x, cfg)?;
    let rhs = val(alpha + beta, x, cfg)?.add(val(alpha - beta, x, cfg)?);
    Ok(compare(
        "pair_mean",
        vec![("alpha", alpha), ("beta", beta), ("x", x)],
        center.scale(2.0),
        rhs,
        true,
    ))
}

/// Cosh-pairing product inequality:
/// `2·[Ki_α]² ≤ Ki_{α+ν}·Ki_{α−μ} + Ki_{α−ν}·Ki_{α+μ}`.
/// Symmetric under `ν ↔ μ` (bit-identically so).
pub fn check_pair_product(
    alpha: f64,
    nu: f64,
    mu: f64,
    x: f64,
    cfg: &EvalConfig,
) -> Result<InequalityVerdict> {
    let center = val(alpha, x, cfg)?;
    let first = val(alpha + nu, x, cfg)?.mul(val(alpha - mu, x, cfg)?);
    let second = val(alpha - nu, x, cfg)?.mul(val(alpha + mu, x, cfg)?);
    Ok(compare(
        "pair_product",
        vec![("alpha", alpha), ("nu", nu), ("mu", mu), ("x", x)],
        center.sq().scale(2.0),
        first.add(second),
        true,
    ))
}

/// Joint log-convexity in (order, argument):
/// `[Ki_α(x)]² ≤ Ki_{α(1+μ)}((1+ν)x)·Ki_{α(1−μ)}((1−ν)x)`, `|ν| < 1`.
pub fn check_joint_logconvex(
    alpha: f64,
    x: f64,
    nu: f64,
    mu: f64,
    cfg: &EvalConfig,
) -> Result<InequalityVerdict> {
    if !(nu.abs() < 1.0) {
        return Err(Error::Domain(format!(
            "joint log-convexity needs |nu| < 1 so both arguments stay positive, got nu={nu}"
        )));
    }
    let center = val(alpha, x, cfg)?;
    let up = val(alpha * (1.0 + mu), (1.0 + nu) * x, cfg)?;
    let down = val(alpha * (1.0 - mu), (1.0 - nu) * x, cfg)?;
    Ok(compare(
        "joint_logconvex",
        vec![("alpha", alpha), ("x", x), ("nu", nu), ("mu", mu)],
        center.sq(),
        up.mul(down),
        true,
    ))
}

/// Relative convexity consequence, `α ≥ 2`:
/// `Ki_{α−2}/Ki_{α−1} ≤ Ki_0/Ki_1`, evaluated as
/// `Ki_{α−2}·Ki_1 ≤ Ki_0·Ki_{α−1}`.
pub fn check_relative_convexity(
    alpha: f64,
    x: f64,
    cfg: &EvalConfig,
) -> Result<InequalityVerdict> {
    if !(alpha >= 2.0) {
        return Err(Error::Domain(format!(
            "relative convexity is stated for alpha ≥ 2, got {alpha}"
        )));
    }
    let lhs = val(alpha - 2.0, x, cfg)?.mul(val(1.0, x, cfg)?);
    let rhs = val(0.0, x, cfg)?.mul(val(alpha - 1.0, x, cfg)?);
    Ok(compare(
        "relative_convexity",
        vec![("alpha", alpha), ("x", x)],
        lhs,
        rhs,
        true,
    ))
}

/// One adjacent-pair step of the log-convexity probe: the logarithmic
/// derivative `r(x) = Ki′_α(x)/Ki_α(x) = −Ki_{α−1}(x)/Ki_α(x)` must be
/// non-decreasing, i.e. `r(x_lo) ≤ r(x_hi)`.
pub fn check_log_convexity_pair(
    alpha: f64,
    x_lo: f64,
    x_hi: f64,
    cfg: &EvalConfig,
) -> Result<InequalityVerdict> {
    if !(x_lo < x_hi) {
        return Err(Error::Config(format!(
            "pair must be ordered, got x_lo={x_lo}, x_hi={x_hi}"
        )));
    }
    let r = |x: f64| -> Result<Val> {
        let d: Val = ki_x_derivative(alpha, x, 1, cfg)?.into();
        Ok(d.div(val(alpha, x, cfg)?))
    };
    Ok(compare(
        "log_convex_ratio_x",
        vec![("alpha", alpha), ("x_lo", x_lo), ("x_hi", x_hi)],
        r(x_lo)?,
        r(x_hi)?,
        true,
    ))
}

/// One adjacent-pair step of the geometric-concavity probe: the log-log
/// slope `s(x) = x·Ki′_α(x)/Ki_α(x) = −x·Ki_{α−1}(x)/Ki_α(x)` must be
/// non-increasing, i.e. `s(x_hi) ≤ s(x_lo)`. Stated for integer `α ≥ −1`;
/// reported elsewhere.
pub fn check_geom_concavity_pair(
    alpha: f64,
    x_lo: f64,
    x_hi: f64,
    cfg: &EvalConfig,
) -> Result<InequalityVerdict> {
    if !(x_lo < x_hi) {
        return Err(Error::Config(format!(
            "pair must be ordered, got x_lo={x_lo}, x_hi={x_hi}"
        )));
    }
    let s = |x: f64| -> Result<Val> {
        let d: Val = ki_x_derivative(alpha, x, 1, cfg)?.into();
        Ok(d.scale(x).div(val(alpha, x, cfg)?))
    };
    Ok(compare(
        "geom_concave_ratio_x",
        vec![("alpha", alpha), ("x_lo", x_lo), ("x_hi", x_hi)],
        s(x_hi)?,
        s(x_lo)?,
        is_integer_at_least(alpha, -1.0),
    ))
}

/// Closed-form mean-inequality envelope dominates the value (`α > 1/4`).
pub fn check_upper_amgm(alpha: f64, x: f64, cfg: &EvalConfig) -> Result<InequalityVerdict> {
    let bound = bounds::upper_bound_amgm(alpha, x)?;
    let v = val(alpha, x, cfg)?;
    Ok(compare(
        "upper_amgm",
        vec![("alpha", alpha), ("x", x)],
        v,
        Val {
            v: bound,
            e: 1e-13 * bound,
        },
        true,
    ))
}

/// Closed-form power envelope dominates the value (`α > 0`).
pub fn check_upper_power_envelope(
    alpha: f64,
    x: f64,
    cfg: &EvalConfig,
) -> Result<InequalityVerdict> {
    let bound = bounds::upper_bound_power_envelope(alpha, x)?;
    let v = val(alpha, x, cfg)?;
    Ok(compare(
        "upper_power_envelope",
        vec![("alpha", alpha), ("x", x)],
        v,
        Val {
            v: bound,
            e: 1e-13 * bound,
        },
        true,
    ))
}

/// Fourth-power envelope: `[Ki_α(x)]⁴ ≤ (π²/2)·Ki_{2α}(2x)·Ki_{2α−2}(2x)`.
pub fn check_carlson(alpha: f64, x: f64, cfg: &EvalConfig) -> Result<InequalityVerdict> {
    let v = val(alpha, x, cfg)?;
    let bound: Val = bounds::carlson_upper_bound(alpha, x, cfg)?.into();
    Ok(compare(
        "carlson",
        vec![("alpha", alpha), ("x", x)],
        v.sq().sq(),
        bound,
        true,
    ))
}

/// The order-derivative enclosure holds: both
/// `lower ≤ ∂Ki/∂α` and `∂Ki/∂α ≤ upper`. The verdict's `lhs`/`rhs` are
/// the bracket endpoints, its margin the worse of the two link margins.
pub fn check_alpha_derivative_bracket(
    alpha: f64,
    x: f64,
    cfg: &EvalConfig,
) -> Result<InequalityVerdict> {
    let bracket = bounds::alpha_derivative_bracket(alpha, x, cfg)?;
    let d: Val = ki_alpha_derivative(alpha, x, 1, cfg)?.into();
    let low = Val {
        v: bracket.lower,
        e: bracket.err_budget,
    };
    let high = Val {
        v: bracket.upper,
        e: bracket.err_budget,
    };
    let params = vec![("alpha", alpha), ("x", x)];
    let lower_link = compare("alpha_derivative_bracket", params.clone(), low, d, true);
    let upper_link = compare("alpha_derivative_bracket", params.clone(), d, high, true);
    let worse = if lower_link.margin <= upper_link.margin {
        &lower_link
    } else {
        &upper_link
    };
    Ok(InequalityVerdict {
        name: "alpha_derivative_bracket",
        params: ParamList(params),
        lhs: bracket.lower,
        rhs: bracket.upper,
        margin: worse.margin,
        err_budget: worse.err_budget,
        holds: lower_link.holds && upper_link.holds,
        asserted: true,
    })
}

/// The two-sided Hölder chain holds end to end:
/// `lower ≤ Ki_α(x)`, `Ki_α(x) ≤ mixed`, `mixed ≤ upper`. The verdict's
/// `lhs`/`rhs` are the outer bracket endpoints, its margin the worst link.
pub fn check_bilateral_chain(
    alpha: f64,
    x: f64,
    p: f64,
    cfg: &EvalConfig,
) -> Result<InequalityVerdict> {
    let bracket = bounds::holder_bracket(alpha, x, p)?;
    let mixed: Val = bounds::holder_mixed_bound(alpha, x, p, cfg)?.into();
    let v = val(alpha, x, cfg)?;
    let low = Val {
        v: bracket.lower,
        e: bracket.err_budget,
    };
    let high = Val {
        v: bracket.upper,
        e: bracket.err_budget,
    };
    let params = vec![("alpha", alpha), ("x", x), ("p", p)];
    let links = [
        compare("bilateral_chain", params.clone(), low, v, true),
        compare("bilateral_chain", params.clone(), v, mixed, true),
        compare("bilateral_chain", params.clone(), mixed, high, true),
    ];
    let worst = links
        .iter()
        .min_by(|a, b| a.margin.total_cmp(&b.margin))
        .expect("non-empty links");
    Ok(InequalityVerdict {
        name: "bilateral_chain",
        params: ParamList(params),
        lhs: bracket.lower,
        rhs: bracket.upper,
        margin: worst.margin,
        err_budget: worst.err_budget,
        holds: links.iter().all(|l| l.holds),
        asserted: true,
    })
}
