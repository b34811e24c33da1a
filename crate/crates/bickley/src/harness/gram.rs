//! Positive-semidefiniteness checks for Gram matrices built from the
//! function's values. Two constructions are covered: shifting the
//! argument (`H[j][k] = Ki_α(x_j + x_k)`) and shifting the order
//! (`H[j][k] = Ki_{α_j+α_k}(x)`). Both matrices are Gram matrices of an
//! inner product weighted by the integrand, so every eigenvalue should be
//! nonnegative up to quadrature error.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::eval::{ki, EvalConfig, KiValue, ALPHA_LIMIT, X_LIMIT};
use crate::exec::ordered_map;
use crate::harness::verdict::PSD_TOL;
use crate::linalg::{symmetric_eigenvalues, MAX_DIM};

/// Outcome of a minimum-eigenvalue check on a symmetric matrix built from
/// evaluations. `margin` and `err_budget` are normalized by the trace so
/// verdicts are comparable across scales.
#[derive(Debug, Clone, Serialize)]
pub struct MinEigenVerdict {
    /// Which Gram construction produced the matrix.
    pub name: &'static str,
    /// Matrix dimension.
    pub size: usize,
    /// Smallest eigenvalue of the value matrix.
    pub min_eigenvalue: f64,
    /// Trace of the value matrix (positive: diagonal entries are values of
    /// a positive function).
    pub trace: f64,
    /// `min_eigenvalue / trace`.
    pub margin: f64,
    /// Infinity norm of the entrywise error matrix, divided by the trace.
    /// Bounds how far any eigenvalue can be displaced by evaluation error.
    pub err_budget: f64,
    /// Whether `margin ≥ −(PSD_TOL + err_budget)`.
    pub holds: bool,
    /// True when the parameters lie in the range the statement covers.
    pub asserted: bool,
}

impl MinEigenVerdict {
    /// Re-judges the verdict with a caller-chosen normalized tolerance in
    /// place of [`PSD_TOL`].
    pub fn holds_with(&self, tol: f64) -> bool {
        self.margin >= -(tol + self.err_budget)
    }
}

fn judge(name: &'static str, values: &[Vec<f64>], errs: &[Vec<f64>]) -> Result<MinEigenVerdict> {
    let n = values.len();
    let eigen = symmetric_eigenvalues(values)?;
    let min_eigenvalue = eigen[0];
    let trace: f64 = (0..n).map(|j| values[j][j]).sum();
    let err_inf_norm = errs
        .iter()
        .map(|row| row.iter().map(|e| e.abs()).sum::<f64>())
        .fold(0.0_f64, f64::max);
    let margin = min_eigenvalue / trace;
    let err_budget = err_inf_norm / trace;
    Ok(MinEigenVerdict {
        name,
        size: n,
        min_eigenvalue,
        trace,
        margin,
        err_budget,
        holds: margin >= -(PSD_TOL + err_budget),
        asserted: true,
    })
}

/// Evaluates the upper triangle (row-major) in one data-parallel pass and
/// mirrors it into full value and error matrices. Each task is
/// `(row, column, parameter)` with `row ≤ column`.
fn build_symmetric(
    n: usize,
    tasks: &[(usize, usize, f64)],
    entry: impl Fn(f64) -> Result<KiValue> + Sync + Send,
) -> Result<(Vec<Vec<f64>>, Vec<Vec<f64>>)> {
    let entries: Vec<Result<(usize, usize, KiValue)>> =
        ordered_map(tasks, |&(j, k, p)| entry(p).map(|v| (j, k, v)));
    let mut values = vec![vec![0.0; n]; n];
    let mut errs = vec![vec![0.0; n]; n];
    for item in entries {
        let (j, k, v) = item?;
        values[j][k] = v.value;
        values[k][j] = v.value;
        errs[j][k] = v.abs_err_est;
        errs[k][j] = v.abs_err_est;
    }
    Ok((values, errs))
}

fn validate_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::Config(format!(
            "Gram check handles 1..={MAX_DIM} points, got {n}"
        )));
    }
    Ok(())
}

/// Checks that `H[j][k] = Ki_α(x_j + x_k)` is positive semidefinite.
/// Requires `α > 0` and points with all pairwise sums inside the
/// evaluation domain.
pub fn gram_psd_in_x(alpha: f64, points: &[f64], cfg: &EvalConfig) -> Result<MinEigenVerdict> {
    validate_size(points.len())?;
    if !(alpha > 0.0) || alpha > ALPHA_LIMIT {
        return Err(Error::Domain(format!(
            "argument-shift Gram check needs 0 < alpha ≤ {ALPHA_LIMIT}, got {alpha}"
        )));
    }
    for &x in points {
        if !x.is_finite() || !(x > 0.0) {
            return Err(Error::Domain(format!(
                "points must be positive and finite, got {x}"
            )));
        }
        if 2.0 * x > X_LIMIT {
            return Err(Error::Domain(format!(
                "pairwise sums must stay ≤ {X_LIMIT}, got 2·{x}"
            )));
        }
    }
    let n = points.len();
    let tasks: Vec<(usize, usize, f64)> = (0..n)
        .flat_map(|j| (j..n).map(move |k| (j, k, points[j] + points[k])))
        .collect();
    let (values, errs) = build_symmetric(n, &tasks, |s| ki(alpha, s, cfg))?;
    judge("gram_psd_in_x", &values, &errs)
}

/// Checks that `H[j][k] = Ki_{α_j+α_k}(x)` is positive semidefinite.
/// Requires all pairwise order sums within the evaluation domain.
pub fn gram_psd_in_alpha(alphas: &[f64], x: f64, cfg: &EvalConfig) -> Result<MinEigenVerdict> {
    validate_size(alphas.len())?;
    if !x.is_finite() || !(x > 0.0) || x > X_LIMIT {
        return Err(Error::Domain(format!(
            "argument must lie in (0, {X_LIMIT}], got {x}"
        )));
    }
    for &a in alphas {
        if !a.is_finite() {
            return Err(Error::Domain(format!("orders must be finite, got {a}")));
        }
    }
    let n = alphas.len();
    for j in 0..n {
        for k in j..n {
            let sum = alphas[j] + alphas[k];
            if sum.abs() > ALPHA_LIMIT {
                return Err(Error::Domain(format!(
                    "pairwise order sums must satisfy |α_j+α_k| ≤ {ALPHA_LIMIT}, got {sum}"
                )));
            }
        }
    }
    let tasks: Vec<(usize, usize, f64)> = (0..n)
        .flat_map(|j| (j..n).map(move |k| (j, k, alphas[j] + alphas[k])))
        .collect();
    let (values, errs) = build_symmetric(n, &tasks, |a| ki(a, x, cfg))?;
    judge("gram_psd_in_alpha", &values, &errs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;

    #[test]
    fn leading_minors_agree_with_min_eigenvalue() {
        let cfg = EvalConfig::default();
        let points = [0.3, 0.9, 1.7];
        let verdict = gram_psd_in_x(1.5, &points, &cfg).unwrap();
        assert!(verdict.holds);
        assert!(verdict.min_eigenvalue > 0.0);

        // Positive definiteness is equivalent to all leading principal
        // minors being positive; rebuild the matrix and confirm.
        let n = points.len();
        let mut h = vec![vec![0.0; n]; n];
        for (j, &xj) in points.iter().enumerate() {
            for (k, &xk) in points.iter().enumerate() {
                h[j][k] = ki(1.5, xj + xk, &cfg).unwrap().value;
            }
        }
        for m in 1..=n {
            let leading: Vec<Vec<f64>> = (0..m).map(|j| h[j][..m].to_vec()).collect();
            assert!(
                linalg::det(&leading) > 0.0,
                "leading {m}x{m} minor should be positive"
            );
        }
    }

    #[test]
    fn order_shift_gram_is_psd_with_mixed_sign_orders() {
        let cfg = EvalConfig::default();
        let verdict = gram_psd_in_alpha(&[-1.0, 0.0, 0.5, 2.0], 1.2, &cfg).unwrap();
        assert!(verdict.holds, "margin = {}", verdict.margin);
        assert_eq!(verdict.size, 4);
        assert!(verdict.trace > 0.0);
    }

    #[test]
    fn duplicate_points_stay_within_tolerance_of_zero() {
        let cfg = EvalConfig::default();
        // A repeated point makes the Gram matrix exactly singular; the
        // verdict should still hold (eigenvalue ~0 up to roundoff).
        let verdict = gram_psd_in_x(2.0, &[0.7, 0.7], &cfg).unwrap();
        assert!(verdict.holds, "margin = {}", verdict.margin);
        assert!(verdict.min_eigenvalue.abs() <= verdict.err_budget * verdict.trace + 1e-12);
    }

    #[test]
    fn rejects_out_of_range_requests() {
        let cfg = EvalConfig::default();
        assert!(gram_psd_in_x(0.0, &[1.0], &cfg).is_err());
        assert!(gram_psd_in_x(1.0, &[], &cfg).is_err());
        assert!(gram_psd_in_x(1.0, &[-1.0], &cfg).is_err());
        assert!(gram_psd_in_x(1.0, &[400.0], &cfg).is_err());
        assert!(gram_psd_in_alpha(&[30.0, 30.0], 1.0, &cfg).is_err());
        assert!(gram_psd_in_alpha(&[0.5; 9], 1.0, &cfg).is_err());
        assert!(gram_psd_in_alpha(&[0.5], -2.0, &cfg).is_err());
    }
}
