//! Verification-oriented numerics for the Bickley function
//! `Ki_α(x) = ∫₀^∞ e^{−x·cosh t} (cosh t)^{−α} dt`.
//!
//! The crate provides, in layers:
//!
//! * **Evaluation** ([`ki`] and friends): adaptive tanh-sinh quadrature
//!   of the defining integral, its x- and α-derivatives, the closed form
//!   at `x = 0`, and an independent fractional-integral representation
//!   for cross-checking.
//! * **Closed-form bounds** ([`bounds`]): every upper/lower bound and
//!   bracket the library knows for `Ki_α`, as standalone functions.
//! * **Inequality harness** ([`harness`]): each inequality satisfied by
//!   `Ki` as a named, parameterized check returning a structured
//!   [`harness::InequalityVerdict`]; grid sweeps; Gram-matrix positive
//!   semidefiniteness tests; monotone-ratio probes.
//! * **Hankel determinants** ([`hankel`]): Turán-type determinants
//!   `det [Ki_{α−j−k}(x)]` with two independent oracles (a tensorized
//!   quadrature for the 2×2 case and a seeded Monte-Carlo estimator) and
//!   a finite-difference complete-monotonicity probe.
//!
//! Everything is deterministic: parallel execution (the default
//! `parallel` feature) and the always-available sequential twins produce
//! bit-identical results.

mod error;
mod exec;
mod gamma;
mod quad;

pub mod bounds;
pub mod eval;
pub mod hankel;
pub mod harness;
mod linalg;

pub use bounds::{
    alpha_derivative_bracket, carlson_upper_bound, holder_bracket, holder_mixed_bound,
    kimberling_constant, upper_bound_amgm, upper_bound_power_envelope, Bracket,
};
pub use error::{Error, Result};
pub use eval::{
    ki, ki_alpha_derivative, ki_at_zero, ki_grid, ki_grid_serial, ki_via_fractional,
    ki_x_derivative, EvalConfig, KiPoint, KiValue, Params, ALPHA_LIMIT, MAX_REFINEMENT_LIMIT,
    REL_TOL_FLOOR, X_LIMIT,
};
pub use gamma::log_gamma;
pub use harness::{
    gram_psd_in_alpha, gram_psd_in_x, probe_geom_concavity_x, probe_log_convexity_x, suite, sweep,
    sweep_serial, CheckName, CheckSummary, GridSpec, InequalityVerdict, MinEigenVerdict,
    MonotonicityVerdict, ParamList, SweepReport, PSD_TOL, VERDICT_TOL,
};
pub use hankel::{
    det_cm_probe, det_ki, det_oracle_2x2, det_oracle_mc, det_oracle_mc_serial, CmProbeVerdict,
    HankelSpec, McConfig, CM_PROBE_TOL, MAX_HANKEL_ORDER,
};
