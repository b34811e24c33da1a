//! Inequality harness: named checks with structured verdicts, Gram-matrix
//! positive-semidefiniteness tests, monotone-ratio probes, and
//! deterministic grid sweeps.
//!
//! Every verdict carries a normalized `margin`, a propagated `err_budget`,
//! and an `asserted` flag; a check *holds* when
//! `margin ≥ −(tolerance + err_budget)`, and only asserted points can ever
//! count as failures.

pub mod checks;
pub mod grid;
pub mod gram;
pub mod probes;
pub mod sweep;
pub mod verdict;

pub use checks::{
    check_alpha_derivative_bracket, check_bilateral_chain, check_carlson, check_chebyshev,
    check_geom_concavity_chain, check_geom_concavity_pair, check_gruss, check_joint_logconvex,
    check_kimberling_chain, check_log_convexity_pair, check_order_chain, check_pair_mean,
    check_pair_product, check_relative_convexity, check_tura_chain, check_turan, check_upper_amgm,
    check_upper_power_envelope, check_vasic,
};
pub use gram::{gram_psd_in_alpha, gram_psd_in_x, MinEigenVerdict};
pub use grid::GridSpec;
pub use probes::{probe_geom_concavity_x, probe_log_convexity_x, MonotonicityVerdict};
pub use sweep::{suite, sweep, sweep_serial, CheckName, CheckSummary, SweepReport};
pub use verdict::{InequalityVerdict, ParamList, PSD_TOL, VERDICT_TOL};
