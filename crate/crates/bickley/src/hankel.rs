//! Hankel-type Turán determinants of Bickley values, positivity /
//! complete-monotonicity probes, and two independent oracles (a tensorized
//! 2-D quadrature and a seeded Monte-Carlo estimate of the symmetrized
//! multi-dimensional representation).

use crate::error::{Error, Result};
use crate::eval::{self, ki, EvalConfig, KiValue, ALPHA_LIMIT, X_LIMIT};
use crate::exec::{ordered_map, ordered_map_serial};
use crate::linalg;
use crate::quad::{self, Kahan};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

/// Largest supported matrix-size parameter (matrix dimension `n + 1`):
/// the oracles' cost and variance grow steeply with `n`.
pub const MAX_HANKEL_ORDER: usize = 4;

/// Normalized tolerance for the complete-monotonicity sign probe.
pub const CM_PROBE_TOL: f64 = 1e-9;

/// The `(n+1)×(n+1)` moment matrix `M[j][k] = Ki_{α−j−k}(x)`,
/// `0 ≤ j,k ≤ n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HankelSpec {
    /// Order of the top-left entry; the orders decrease along rows/columns.
    pub alpha: f64,
    /// Matrix-size parameter: the matrix is `(n+1)×(n+1)`.
    pub n: usize,
    /// Common argument of every entry.
    pub x: f64,
}

impl HankelSpec {
    /// Validated constructor.
    pub fn new(alpha: f64, n: usize, x: f64) -> Result<Self> {
        let spec = HankelSpec { alpha, n, x };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks the size cap and that every entry order and the argument lie
    /// inside the evaluation contract.
    pub fn validate(&self) -> Result<()> {
        if self.n > MAX_HANKEL_ORDER {
            return Err(Error::Domain(format!(
                "matrix-size parameter n must be ≤ {MAX_HANKEL_ORDER}, got {}",
                self.n
            )));
        }
        if !self.alpha.is_finite() {
            return Err(Error::Domain(format!(
                "alpha must be finite, got {}",
                self.alpha
            )));
        }
        let lowest = self.alpha - 2.0 * self.n as f64;
        if self.alpha.abs() > ALPHA_LIMIT || lowest.abs() > ALPHA_LIMIT {
            return Err(Error::Domain(format!(
                "entry orders span [{lowest}, {}], outside |alpha| ≤ {ALPHA_LIMIT}",
                self.alpha
            )));
        }
        if !(self.x > 0.0) || !self.x.is_finite() || self.x > X_LIMIT {
            return Err(Error::Domain(format!(
                "x must lie in (0, {X_LIMIT}], got {}",
                self.x
            )));
        }
        Ok(())
    }

    fn dim(&self) -> usize {
        self.n + 1
    }
}

/// Determinant of the moment matrix `[Ki_{α−j−k}(x)]`, with the exact
/// first-order perturbation bound `Σ|cofactor|·entry_error` as its error
/// estimate. The `n = 0` case is bit-identical to [`ki`].
pub fn det_ki(spec: &HankelSpec, cfg: &EvalConfig) -> Result<KiValue> {
    spec.validate()?;
    let orders: Vec<f64> = (0..=2 * spec.n).map(|s| spec.alpha - s as f64).collect();
    let entries: Vec<KiValue> = ordered_map(&orders, |&order| ki(order, spec.x, cfg))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let dim = spec.dim();
    let matrix: Vec<Vec<f64>> = (0..dim)
        .map(|j| (0..dim).map(|k| entries[j + k].value).collect())
        .collect();
    let entry_err: Vec<Vec<f64>> = (0..dim)
        .map(|j| (0..dim).map(|k| entries[j + k].abs_err_est).collect())
        .collect();
    Ok(KiValue {
        value: linalg::det(&matrix),
        abs_err_est: linalg::det_perturbation_budget(&matrix, &entry_err),
    })
}

/// Relative tolerance floor for the 2-D quadrature oracle: tight enough
/// for every cross-check in the repository, loose enough to keep the
/// O(nodes²) summation affordable.
const ORACLE_2D_REL_FLOOR: f64 = 1e-10;

/// Independent oracle for the `n = 1` determinant: evaluates
/// `½ ∬ e^{−x(cosh t + cosh s)} (cosh t · cosh s)^{−α} (cosh t − cosh s)² dt ds`
/// over `(0,∞)²` by tensorized tanh-sinh quadrature, refining whole levels
/// until two successive levels agree. The summation never collapses the
/// double integral into one-dimensional moments, so it exercises a
/// genuinely different numerical path than [`det_ki`].
pub fn det_oracle_2x2(alpha: f64, x: f64, cfg: &EvalConfig) -> Result<KiValue> {
    HankelSpec::new(alpha, 1, x)?;
    // The heaviest tail factor per variable is (cosh)^{−(α−2)}.
    let t_cut = eval::cutoff_t(alpha - 2.0, x, cfg);
    let rel_tol = cfg.rel_tol().max(ORACLE_2D_REL_FLOOR);
    let max_level = 8u32.min(2 + cfg.max_refinements());

    let mut prev: Option<f64> = None;
    let mut last_diff = f64::INFINITY;
    for level in 0..=max_level {
        let nodes = quad::level_nodes(0.0, t_cut, level);
        // Per-node factor g = w·e^{−x·cosh t}(cosh t)^{−α}, paired with cosh t.
        let weighted: Vec<(f64, f64)> = nodes
            .iter()
            .map(|&(t, w)| {
                let c = t.cosh();
                (w * (-x * c - alpha * c.ln()).exp(), c)
            })
            .collect();
        // Row sums in parallel (each row is an index-ordered plain sum, so
        // the arithmetic is identical however rows are scheduled)…
        let rows: Vec<f64> = ordered_map(&weighted, |&(_, ci)| {
            weighted
                .iter()
                .map(|&(gj, cj)| gj * (ci - cj) * (ci - cj))
                .sum::<f64>()
        });
        // …then one sequential compensated reduction.
        let mut total = Kahan::default();
        for (&(gi, _), &row) in weighted.iter().zip(&rows) {
            total.add(gi * row);
        }
        let value = 0.5 * total.total();
        if !value.is_finite() {
            return Err(Error::Overflow(format!(
                "2-D oracle sum not finite at alpha={alpha}, x={x}"
            )));
        }

        if let Some(p) = prev {
            last_diff = (value - p).abs();
            if level >= 2 && last_diff <= f64::max(cfg.abs_tol(), rel_tol * value.abs()) {
                // Truncation slop: tails in either variable, bounded by the
                // one-dimensional tail envelopes times the computed moments.
                let (mut m0, mut m2) = (Kahan::default(), Kahan::default());
                for &(g, c) in &weighted {
                    m0.add(g);
                    m2.add(g * c * c);
                }
                let tail = 2.0
                    * (eval::tail_bound(alpha - 2.0, x, t_cut) * m0.total().abs()
                        + eval::tail_bound(alpha, x, t_cut) * m2.total().abs());
                return Ok(KiValue {
                    value,
                    abs_err_est: last_diff + tail,
                });
            }
        }
        prev = Some(value);
    }
    Err(Error::Convergence {
        partial: prev.unwrap_or(f64::NAN),
        err_est: last_diff,
    })
}

/// Sampling plan for the Monte-Carlo determinant oracle.
///
/// Estimates are bit-reproducible functions of `(samples, seed, batch)`:
/// each batch of draws runs on its own counter-derived RNG stream and the
/// batch results are combined in batch order, so parallel and serial
/// execution agree exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct McConfig {
    samples: u64,
    seed: u64,
    batch: u64,
}

impl McConfig {
    /// Plan with the default batch size (65 536 draws per RNG stream).
    ///
    /// Comparisons asserted in tests use ≥ 10⁴ samples; smaller counts are
    /// allowed for smoke runs.
    pub fn new(samples: u64, seed: u64) -> Result<Self> {
        if samples == 0 {
            return Err(Error::Config("sample count must be positive".into()));
        }
        Ok(McConfig {
            samples,
            seed,
            batch: 65_536,
        })
    }

    /// Overrides the batch size (draws per RNG stream). Changing it changes
    /// the exact estimate (different stream boundaries), never its
    /// distribution.
    pub fn with_batch(mut self, batch: u64) -> Result<Self> {
        if batch == 0 {
            return Err(Error::Config("batch size must be positive".into()));
        }
        self.batch = batch;
        Ok(self)
    }

    /// Total number of draws.
    pub fn samples(&self) -> u64 {
        self.samples
    }

    /// RNG seed.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Draws per RNG stream.
    pub fn batch(&self) -> u64 {
        self.batch
    }
}

impl Default for McConfig {
    fn default() -> Self {
        McConfig {
            samples: 1_000_000,
            seed: 42,
            batch: 65_536,
        }
    }
}

/// One batch's compensated tallies of the weight and its square.
struct BatchTally {
    sum_w: f64,
    sum_w2: f64,
}

/// Draws `count` weights on the batch's own RNG stream and tallies them.
///
/// Each coordinate is sampled from the density ∝ `e^{−x cosh t}` on (0,∞)
/// by rejection: propose `t = |z|/√x` with `z` standard normal and accept
/// with probability `e^{−x(cosh t − 1 − t²/2)} ≤ 1` (the exponent is ≤ 0
/// because `cosh t ≥ 1 + t²/2`). Acceptance stays above 95 % for every
/// admissible `x`.
fn mc_batch(alpha: f64, x: f64, dims: usize, seed: u64, stream: u64, count: u64) -> BatchTally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let sqrt_x = x.sqrt();
    let mut coshes = vec![0.0_f64; dims];
    let mut sum_w = Kahan::default();
    let mut sum_w2 = Kahan::default();
    for _ in 0..count {
        for c in coshes.iter_mut() {
            *c = loop {
                let z: f64 = rng.sample(StandardNormal);
                let t = z.abs() / sqrt_x;
                let cosh_t = t.cosh();
                let ln_accept = -x * (cosh_t - 1.0 - 0.5 * t * t);
                if rng.gen::<f64>() < ln_accept.exp() {
                    break cosh_t;
                }
            };
        }
        // ln W = Σ_{j<k} 2 ln|c_j − c_k| − α Σ_j ln c_j, exponentiated once;
        // coincident coordinates give ln 0 = −∞ and thus W = 0, as they must.
        let mut ln_w = 0.0;
        for j in 0..dims {
            ln_w -= alpha * coshes[j].ln();
            for k in j + 1..dims {
                ln_w += 2.0 * (coshes[j] - coshes[k]).abs().ln();
            }
        }
        let w = ln_w.exp();
        sum_w.add(w);
        sum_w2.add(w * w);
    }
    BatchTally {
        sum_w: sum_w.total(),
        sum_w2: sum_w2.total(),
    }
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

fn det_oracle_mc_impl(
    spec: &HankelSpec,
    mc: &McConfig,
    map: fn(&[u64], &(dyn Fn(&u64) -> BatchTally + Sync)) -> Vec<BatchTally>,
) -> Result<KiValue> {
    spec.validate()?;
    if spec.n == 0 || spec.n > MAX_HANKEL_ORDER {
        return Err(Error::Domain(format!(
            "Monte-Carlo oracle covers 1 ≤ n ≤ {MAX_HANKEL_ORDER}, got n = {}",
            spec.n
        )));
    }
    let dims = spec.dim();
    // Normalisation of the sampling density: ∫ e^{−x cosh t} dt = Ki_0(x),
    // evaluated once at the engine's default accuracy.
    let z = ki(0.0, spec.x, &EvalConfig::default())?;

    let batches: Vec<u64> = (0..mc.samples.div_ceil(mc.batch)).collect();
    let tallies = map(&batches, &|&b| {
        let start = b * mc.batch;
        let count = mc.batch.min(mc.samples - start);
        mc_batch(spec.alpha, spec.x, dims, mc.seed, b, count)
    });

    let mut total_w = Kahan::default();
    let mut total_w2 = Kahan::default();
    for tally in &tallies {
        total_w.add(tally.sum_w);
        total_w2.add(tally.sum_w2);
    }
    let n_f = mc.samples as f64;
    let mean = total_w.total() / n_f;
    let variance = ((total_w2.total() - n_f * mean * mean) / (n_f - 1.0)).max(0.0);
    let std_error = (variance / n_f).sqrt();

    let scale = z.value.powi(dims as i32) / factorial(dims);
    let estimate = scale * mean;
    let mc_err = scale * std_error;
    if !estimate.is_finite() || mc_err > 0.5 * estimate.abs() {
        return Err(Error::VarianceExplosion {
            estimate,
            std_error: mc_err,
        });
    }
    let z_err = dims as f64 * (z.abs_err_est / z.value) * estimate.abs();
    Ok(KiValue {
        value: estimate,
        abs_err_est: mc_err + z_err,
    })
}

/// Monte-Carlo estimate of the symmetrized representation
/// `(1/(n+1)!) ∫_{(0,∞)^{n+1}} e^{−x Σ cosh tⱼ} ∏_{j<k}(cosh tⱼ − cosh tₖ)²
/// ∏ⱼ (cosh tⱼ)^{−α} dt`, which equals the Hankel determinant.
///
/// `abs_err_est` carries one standard error plus the propagated
/// normalisation error. Deterministic for fixed `(samples, seed, batch)`;
/// batches may run in parallel. Requires `1 ≤ n ≤ 4`.
///
/// # Errors
/// [`Error::VarianceExplosion`] when the standard error exceeds half the
/// estimate — the sign of the result would be statistically meaningless.
pub fn det_oracle_mc(spec: &HankelSpec, mc: &McConfig) -> Result<KiValue> {
    det_oracle_mc_impl(spec, mc, |items, f| ordered_map(items, f))
}

/// Sequential twin of [`det_oracle_mc`]: same estimate, bit for bit.
pub fn det_oracle_mc_serial(spec: &HankelSpec, mc: &McConfig) -> Result<KiValue> {
    det_oracle_mc_impl(spec, mc, |items, f| ordered_map_serial(items, f))
}

/// Outcome of the finite-difference complete-monotonicity probe.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CmProbeVerdict {
    /// Top-left order of the probed determinant family.
    pub alpha: f64,
    /// Matrix-size parameter.
    pub n: usize,
    /// Highest difference order checked.
    pub order: u32,
    /// Number of grid points.
    pub points: usize,
    /// Grid spacing.
    pub step: f64,
    /// Whether every signed difference stayed above `−(tol + budget)`.
    pub holds: bool,
    /// Smallest normalized margin over all orders and windows.
    pub worst_margin: f64,
    /// Difference order attaining the worst margin.
    pub worst_order: u32,
    /// Window start abscissa attaining the worst margin.
    pub worst_x: f64,
}

/// Pascal-triangle rows for difference orders 0..=3.
const BINOMIAL: [[f64; 4]; 4] = [
    [1.0, 0.0, 0.0, 0.0],
    [1.0, 1.0, 0.0, 0.0],
    [1.0, 2.0, 1.0, 0.0],
    [1.0, 3.0, 3.0, 1.0],
];

/// Core sign test on a precomputed sequence of (value, error) pairs:
/// for every `m ≤ order` and window `i`, the alternating combination
/// `Σ_k (−1)^k C(m,k)·f_{i+k}` (which equals `(−1)^m Δ^m f_i`) must stay
/// above `−(tol·scale + error budget)`, `scale = Σ_k C(m,k)|f_{i+k}|`.
/// Returns (holds, worst normalized margin, worst order, worst window).
fn alternating_sign_margins(values: &[(f64, f64)], order: u32, tol: f64) -> (bool, f64, u32, usize) {
    let mut holds = true;
    let mut worst = f64::INFINITY;
    let mut worst_order = 0;
    let mut worst_window = 0;
    for m in 0..=order as usize {
        let coeff = &BINOMIAL[m];
        for i in 0..values.len() - m {
            let mut signed = 0.0;
            let mut scale = 0.0;
            let mut budget = 0.0;
            for (k, &c) in coeff[..=m].iter().enumerate() {
                let (v, e) = values[i + k];
                signed += if k % 2 == 0 { c * v } else { -c * v };
                scale += c * v.abs();
                budget += c * e;
            }
            let scale = scale.max(f64::MIN_POSITIVE);
            let margin = signed / scale;
            if margin < worst {
                worst = margin;
                worst_order = m as u32;
                worst_window = i;
            }
            if signed < -(tol * scale + budget) {
                holds = false;
            }
        }
    }
    (holds, worst, worst_order, worst_window)
}

/// Probes complete monotonicity of `x ↦ det` on a uniform grid: checks
/// that `(−1)^m Δ_h^m` of the determinant sequence is non-negative (within
/// [`CM_PROBE_TOL`] plus the propagated error budget) for every difference
/// order `m = 0..=order`.
///
/// The grid must be strictly increasing and uniformly spaced to within
/// 10⁻⁶ relative; `order ≤ 3` because higher differences amplify
/// quadrature noise beyond usefulness at double precision.
pub fn det_cm_probe(
    alpha: f64,
    n: usize,
    grid: &[f64],
    order: u32,
    cfg: &EvalConfig,
) -> Result<CmProbeVerdict> {
    if order > 3 {
        return Err(Error::Config(format!(
            "difference order must be ≤ 3, got {order}"
        )));
    }
    if grid.len() <= order as usize {
        return Err(Error::Config(format!(
            "grid needs more than {order} points for order-{order} differences, got {}",
            grid.len()
        )));
    }
    // A one-point grid is legal only for order 0 (a bare positivity
    // check); it has no spacing to validate.
    let step = if grid.len() > 1 {
        grid[1] - grid[0]
    } else {
        0.0
    };
    if grid.len() > 1 && !(step > 0.0) {
        return Err(Error::Config("grid must be strictly increasing".into()));
    }
    for pair in grid.windows(2) {
        if ((pair[1] - pair[0]) - step).abs() > 1e-6 * step {
            return Err(Error::Config(format!(
                "grid must be uniformly spaced (step {step}), found gap {}",
                pair[1] - pair[0]
            )));
        }
    }

    let dets: Vec<KiValue> = ordered_map(grid, |&x| det_ki(&HankelSpec::new(alpha, n, x)?, cfg))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(f64, f64)> = dets.iter().map(|d| (d.value, d.abs_err_est)).collect();
    let (holds, worst, worst_order, worst_window) =
        alternating_sign_margins(&pairs, order, CM_PROBE_TOL);
    Ok(CmProbeVerdict {
        alpha,
        n,
        order,
        points: grid.len(),
        step,
        holds,
        worst_margin: worst,
        worst_order,
        worst_x: grid[worst_window],
    })
}
