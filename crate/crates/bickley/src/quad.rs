//! Tanh-sinh (double-exponential) quadrature on a finite interval.
//!
//! The substitution `x(u) = c + d·tanh((π/2)·sinh u)` (with `c` the
//! interval midpoint and `d` its half-width) maps `∫_a^b f(x) dx` to an
//! integral over the whole real line whose trapezoidal sums converge
//! double-exponentially for integrands analytic on the open interval —
//! including integrable endpoint singularities, which the transformed
//! weight crushes.
//!
//! Refinement halves the step `h` per level and reuses every previous
//! node: level `ℓ` adds only the odd multiples of `h_ℓ = h₀/2^ℓ`.
//! Convergence is declared when two successive levels agree to the
//! requested tolerance; the final inter-level difference is the error
//! estimate (a deliberately conservative one — the true error of the
//! finer level is typically its square).

use crate::error::{Error, Result};

/// Initial trapezoidal step at refinement level zero.
const H0: f64 = 0.5;
/// Never step past this |u|: the transformed weight there is far below
/// the smallest positive subnormal times any representable integrand.
const U_HARD_CAP: f64 = 6.9;
/// Minimum |u| before the outward-termination test may fire, so narrow
/// integrand features near the midpoint cannot truncate the sum early.
const U_MIN_BEFORE_STOP: f64 = 3.0;

/// Outcome of an adaptive tanh-sinh integration.
#[derive(Debug, Clone, Copy)]
pub(crate) struct QuadResult {
    /// The converged estimate of the integral.
    pub value: f64,
    /// Conservative absolute-error estimate (last inter-level difference).
    pub err_est: f64,
}

/// Abscissa and du-weight of the tanh-sinh map on `[a, b]` at parameter `u`:
/// `∫_a^b f(x) dx = ∫_ℝ f(x(u)) · w(u) du` with the returned `(x(u), w(u))`.
///
/// `sech²` is evaluated through decaying exponentials only, so the weight
/// underflows to zero gracefully instead of overflowing for large `|u|`.
/// The abscissa is formed as endpoint ± distance with the cancellation-free
/// identity `1 − |tanh v| = 2e^{−2|v|}/(1 + e^{−2|v|})`, so nodes keep
/// approaching an endpoint (instead of rounding onto it) down to the
/// subnormal range — which is what lets endpoint singularities integrate.
pub(crate) fn de_point(a: f64, b: f64, u: f64) -> (f64, f64) {
    let d = 0.5 * (b - a);
    let v = std::f64::consts::FRAC_PI_2 * u.sinh();
    let e = (-2.0 * v.abs()).exp();
    let den = 1.0 + e;
    let sech2 = 4.0 * e / (den * den);
    let delta = 2.0 * e / den; // = 1 − |tanh(v)| without cancellation
    let x = if u >= 0.0 { b - d * delta } else { a + d * delta };
    let w = d * std::f64::consts::FRAC_PI_2 * u.cosh() * sech2;
    (x, w)
}

/// The complete tanh-sinh node set of one refinement level on `[a, b]`:
/// all integer multiples of `h = H0/2^level` within the hard cap, as
/// `(abscissa, h·weight)` pairs ordered midpoint-outward (u = 0, +h, −h,
/// +2h, −2h, …). Nodes whose weight has underflowed to zero are dropped.
///
/// `Σ w·f(x)` over the returned pairs is the level-`level` trapezoidal
/// estimate of `∫_a^b f`; tensor products of the list give the matching
/// estimate of multi-dimensional integrals over `[a, b]^k`.
pub(crate) fn level_nodes(a: f64, b: f64, level: u32) -> Vec<(f64, f64)> {
    let h = H0 / f64::from(1u32 << level);
    let steps = (U_HARD_CAP / h).floor() as i64;
    let mut nodes = Vec::with_capacity(2 * steps as usize + 1);
    let (x0, w0) = de_point(a, b, 0.0);
    nodes.push((x0, h * w0));
    for k in 1..=steps {
        for dir in [1.0_f64, -1.0] {
            let (x, w) = de_point(a, b, dir * k as f64 * h);
            if w != 0.0 {
                nodes.push((x, h * w));
            }
        }
    }
    nodes
}

/// Kahan–Babuška compensated accumulator.
#[derive(Default, Clone, Copy)]
pub(crate) struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    pub(crate) fn add(&mut self, term: f64) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.comp += (self.sum - t) + term;
        } else {
            self.comp += (term - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Adaptively integrate `f` over `[a, b]`.
///
/// Stops once two successive refinement levels (from level 2 onward) agree
/// within `max(abs_tol, rel_tol·|value|)`. The per-term outward cutoff is
/// tied to `rel_tol` so tails are summed deep enough for the requested
/// accuracy but no further.
///
/// # Errors
/// * [`Error::Convergence`] if `max_refinements` levels do not reach the
///   tolerance (the partial value and its estimate are carried along);
/// * [`Error::Overflow`] if the sums stop being finite.
pub(crate) fn tanh_sinh<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
    max_refinements: u32,
) -> Result<QuadResult> {
    debug_assert!(b > a, "tanh_sinh requires b > a");
    let eps_stop = rel_tol * 1e-4;

    // Level 0: all integer multiples of H0, midpoint outward in both
    // directions. `raw` accumulates the h-free weighted sum Σ w(u_k)·f(x_k).
    let mut raw = Kahan::default();
    {
        let (x0, w0) = de_point(a, b, 0.0);
        raw.add(w0 * f(x0));
    }
    for dir in [1.0_f64, -1.0] {
        sum_direction(&f, a, b, H0, dir * H0, dir * H0, eps_stop, &mut raw)?;
    }
    let mut value = H0 * raw.total();
    let mut prev = value;
    let mut err_est = f64::INFINITY;

    for level in 1..=max_refinements {
        let h = H0 / f64::from(1u32 << level);
        // New nodes: odd multiples of h, i.e. u = ±h, ±3h, ±5h, …
        let mut odd = Kahan::default();
        for dir in [1.0_f64, -1.0] {
            sum_direction(&f, a, b, 2.0 * h, dir * h, dir * h, eps_stop, &mut odd)?;
        }
        value = 0.5 * prev + h * odd.total();
        if !value.is_finite() {
            return Err(Error::Overflow(
                "quadrature sum is not finite (integrand overflow)".into(),
            ));
        }
        let diff = (value - prev).abs();
        if level >= 2 {
            err_est = diff;
            if diff <= abs_tol.max(rel_tol * value.abs()) {
                return Ok(QuadResult { value, err_est });
            }
        }
        prev = value;
    }

    Err(Error::Convergence {
        partial: value,
        err_est: if err_est.is_finite() { err_est } else { value.abs() },
    })
}

/// Accumulate `w(u)·f(x(u))` over `u = start, start + step, …` (signed
/// `step`), stopping once terms are negligible or `|u|` passes the hard cap.
fn sum_direction<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    step_mag: f64,
    start: f64,
    step_signed_unit: f64,
    eps_stop: f64,
    acc: &mut Kahan,
) -> Result<()> {
    let step = step_mag * step_signed_unit.signum();
    let mut u = start;
    let mut negligible_streak = 0u32;
    // Generous iteration cap; the |u| cap fires long before this does.
    for _ in 0..200_000 {
        if u.abs() > U_HARD_CAP {
            break;
        }
        let (x, w) = de_point(a, b, u);
        let term = w * f(x);
        if !term.is_finite() {
            return Err(Error::Overflow(format!(
                "integrand not finite at x = {x:e}"
            )));
        }
        acc.add(term);
        if u.abs() >= U_MIN_BEFORE_STOP && term.abs() <= eps_stop * acc.total().abs() {
            negligible_streak += 1;
            if negligible_streak >= 2 {
                break;
            }
        } else {
            negligible_streak = 0;
        }
        u += step;
    }
    Ok(())
}
