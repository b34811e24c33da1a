//! Parameter grids for sweep runs: which orders, arguments, shifts, and
//! weights the checks are instantiated at. The default grid mixes
//! negative, fractional, and integer orders with arguments spanning three
//! decades, and deliberately includes the equality cases (zero shifts,
//! repeated orders) where margins collapse to zero.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::eval::{ALPHA_LIMIT, X_LIMIT};

/// The axes a sweep draws parameter points from. Each check uses only the
/// axes it needs, filtered to its stated preconditions.
#[derive(Debug, Clone, Serialize)]
pub struct GridSpec {
    /// Orders α.
    pub alphas: Vec<f64>,
    /// Arguments x (also the `x_lo`/`x_hi` pair source for ratio probes).
    pub xs: Vec<f64>,
    /// Order shifts β.
    pub betas: Vec<f64>,
    /// Second arguments y.
    pub ys: Vec<f64>,
    /// Argument-shift fractions ν (|ν| < 1 where required).
    pub nus: Vec<f64>,
    /// Order-shift fractions μ.
    pub mus: Vec<f64>,
    /// Hölder exponents p (> 1).
    pub ps: Vec<f64>,
    /// First superadditivity weights r (≥ 1).
    pub rs: Vec<f64>,
    /// Second superadditivity weights s (≥ 1).
    pub ss: Vec<f64>,
}

fn log_spaced(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
        .collect()
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            alphas: vec![
                -5.0, -4.0, -3.0, -2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0,
                5.0,
            ],
            xs: log_spaced(0.05, 20.0, 13),
            betas: vec![-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0],
            ys: vec![0.1, 0.5, 2.0, 8.0],
            nus: vec![-0.9, -0.5, 0.0, 0.5, 0.9],
            mus: vec![-1.0, -0.3, 0.0, 0.7, 2.0],
            ps: vec![1.25, 2.0, 4.0],
            rs: vec![1.0, 2.0, 3.5],
            ss: vec![1.0, 1.5],
        }
    }
}

impl GridSpec {
    /// A deliberately small grid (a few points per axis) for fast smoke
    /// runs; still covers negative, zero, fractional, and integer orders.
    pub fn tiny() -> Self {
        GridSpec {
            alphas: vec![-2.0, -0.5, 0.0, 1.0, 2.5],
            xs: vec![0.1, 1.0, 6.0],
            betas: vec![-1.0, 0.0, 0.5],
            ys: vec![0.5, 3.0],
            nus: vec![-0.5, 0.0, 0.5],
            mus: vec![0.0, 0.7],
            ps: vec![2.0],
            rs: vec![1.0, 2.0],
            ss: vec![1.5],
        }
    }

    /// A finer grid: orders on a 0.5-step lattice in `[−5, 5]` plus extra
    /// quarter-integer probes near the precondition boundaries, twice the
    /// argument resolution, and an extra second-argument decade.
    pub fn dense() -> Self {
        let mut alphas: Vec<f64> = (-10..=10).map(|i| f64::from(i) * 0.5).collect();
        alphas.extend([-0.25, 0.25, 0.75, 1.25, 2.25]);
        alphas.sort_by(f64::total_cmp);
        GridSpec {
            alphas,
            xs: log_spaced(0.05, 20.0, 25),
            ys: vec![0.1, 0.3, 0.5, 2.0, 5.0, 8.0],
            ..GridSpec::default()
        }
    }

    /// Checks every axis for the domain the evaluator accepts: finite
    /// values everywhere, arguments in `(0, X_LIMIT]`, orders within
    /// `±ALPHA_LIMIT`. Per-check preconditions (positivity, weight ranges,
    /// exponent ranges) are applied later as task filters, not here.
    pub fn validate(&self) -> Result<()> {
        let all_finite = |name: &str, v: &[f64]| -> Result<()> {
            if v.is_empty() {
                return Err(Error::Config(format!("grid axis `{name}` is empty")));
            }
            if let Some(bad) = v.iter().find(|t| !t.is_finite()) {
                return Err(Error::Config(format!(
                    "grid axis `{name}` contains non-finite value {bad}"
                )));
            }
            Ok(())
        };
        all_finite("alphas", &self.alphas)?;
        all_finite("xs", &self.xs)?;
        all_finite("betas", &self.betas)?;
        all_finite("ys", &self.ys)?;
        all_finite("nus", &self.nus)?;
        all_finite("mus", &self.mus)?;
        all_finite("ps", &self.ps)?;
        all_finite("rs", &self.rs)?;
        all_finite("ss", &self.ss)?;

        if let Some(a) = self.alphas.iter().find(|a| a.abs() > ALPHA_LIMIT) {
            return Err(Error::Config(format!(
                "grid order {a} outside |alpha| ≤ {ALPHA_LIMIT}"
            )));
        }
        for (name, axis) in [("xs", &self.xs), ("ys", &self.ys)] {
            if let Some(x) = axis.iter().find(|x| !(**x > 0.0) || **x > X_LIMIT) {
                return Err(Error::Config(format!(
                    "grid axis `{name}` value {x} outside (0, {X_LIMIT}]"
                )));
            }
        }
        if self.xs.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Config(
                "grid axis `xs` must be strictly increasing (ratio probes pair adjacent points)"
                    .into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_validates_and_spans_three_decades() {
        let g = GridSpec::default();
        g.validate().unwrap();
        assert_eq!(g.xs.len(), 13);
        assert!((g.xs[0] - 0.05).abs() < 1e-12);
        assert!((g.xs[12] - 20.0).abs() < 1e-9);
        // Log-spacing: constant ratio between neighbours.
        let r0 = g.xs[1] / g.xs[0];
        for w in g.xs.windows(2) {
            assert!((w[1] / w[0] / r0 - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn tiny_and_dense_grids_validate() {
        GridSpec::tiny().validate().unwrap();
        let dense = GridSpec::dense();
        dense.validate().unwrap();
        assert!(dense.alphas.len() > GridSpec::default().alphas.len());
        assert!(dense.xs.len() > GridSpec::default().xs.len());
    }

    #[test]
    fn validation_rejects_bad_axes() {
        let mut g = GridSpec::default();
        g.alphas.push(60.0);
        assert!(g.validate().is_err());

        let mut g = GridSpec::default();
        g.xs = vec![1.0, 0.5];
        assert!(g.validate().is_err());

        let mut g = GridSpec::default();
        g.ys.push(-1.0);
        assert!(g.validate().is_err());

        let mut g = GridSpec::default();
        g.betas.clear();
        assert!(g.validate().is_err());

        let mut g = GridSpec::default();
        g.mus.push(f64::NAN);
        assert!(g.validate().is_err());
    }
}
