//! Acceptance gate: ten criteria with pinned tolerances and wall-clock
//! budgets. Each criterion is one test, so the harness prints one
//! pass/fail line per criterion; run with `--nocapture` for the timing
//! detail. Tests serialize on a global lock so the budgets measure the
//! work itself, not scheduler contention.

use std::process::{Command, Output};
use std::sync::{Mutex, MutexGuard, OnceLock};
use std::time::Instant;

use bickley::harness::{
    check_chebyshev, check_geom_concavity_chain, check_gruss, check_joint_logconvex,
    check_pair_mean, check_pair_product, check_relative_convexity, check_turan,
};
use bickley::{
    det_cm_probe, det_ki, det_oracle_2x2, det_oracle_mc, gram_psd_in_alpha, gram_psd_in_x, ki,
    ki_at_zero, ki_via_fractional, EvalConfig, HankelSpec, InequalityVerdict, McConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn lock() -> MutexGuard<'static, ()> {
    static GATE: OnceLock<Mutex<()>> = OnceLock::new();
    GATE.get_or_init(|| Mutex::new(()))
        .lock()
        .unwrap_or_else(|poisoned| poisoned.into_inner())
}

/// Asserts the wall-clock budget and prints the per-criterion line.
fn finish(name: &str, started: Instant, budget_secs: f64) {
    let elapsed = started.elapsed().as_secs_f64();
    println!("[PASS] {name}: {elapsed:.2}s (budget {budget_secs}s)");
    assert!(
        elapsed <= budget_secs,
        "{name} exceeded its budget: {elapsed:.2}s > {budget_secs}s"
    );
}

fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bickley"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

#[test]
fn criterion_01_integer_order_values_match_the_bessel_oracle() {
    let _gate = lock();
    let started = Instant::now();
    let cfg = EvalConfig::default();
    let v0 = ki(0.0, 1.0, &cfg).unwrap().value;
    let v1 = ki(-1.0, 1.0, &cfg).unwrap().value;
    assert!((v0 - bessel_ref::k0(1.0)).abs() <= 1e-10, "order 0: {v0}");
    assert!((v1 - bessel_ref::k1(1.0)).abs() <= 1e-10, "order -1: {v1}");
    finish("criterion 01 (Bessel anchor points)", started, 1.0);
}

#[test]
fn criterion_02_small_argument_values_approach_the_zero_argument_closed_form() {
    let _gate = lock();
    let started = Instant::now();
    let cfg = EvalConfig::default();
    for alpha in [1.0, 2.0, 3.0, 5.0] {
        let limit = ki_at_zero(alpha).unwrap();
        let near = ki(alpha, 1e-8, &cfg).unwrap().value;
        assert!(
            (near - limit).abs() <= 1e-5 * limit,
            "alpha {alpha}: {near} vs {limit}"
        );
    }
    // Closed-form spot values.
    assert!((ki_at_zero(1.0).unwrap() - std::f64::consts::FRAC_PI_2).abs() <= 1e-14);
    assert!((ki_at_zero(2.0).unwrap() - 1.0).abs() <= 1e-14);
    assert!((ki_at_zero(3.0).unwrap() - std::f64::consts::FRAC_PI_4).abs() <= 1e-14);
    finish("criterion 02 (zero-argument limits)", started, 1.0);
}

#[test]
fn criterion_03_fractional_integral_route_agrees_with_direct_evaluation() {
    let _gate = lock();
    let started = Instant::now();
    let cfg = EvalConfig::default();
    for alpha in [0.5, 1.0, 2.0, 3.0] {
        for x in [0.25, 1.0, 4.0] {
            let direct = ki(alpha, x, &cfg).unwrap().value;
            let routed = ki_via_fractional(alpha, x, &cfg).unwrap().value;
            assert!(
                (routed - direct).abs() <= 1e-8 * direct.abs(),
                "alpha {alpha}, x {x}: {routed} vs {direct}"
            );
        }
    }
    finish("criterion 03 (fractional-integral route)", started, 10.0);
}

#[test]
fn criterion_04_finite_differences_reproduce_the_derivative_recurrence() {
    let _gate = lock();
    let started = Instant::now();
    let cfg = EvalConfig::default();
    let alphas = [-1.0, 0.5, 1.0, 2.0, 4.0, 6.0];
    let xs = [0.3, 0.7, 1.5, 3.0, 6.0];
    for alpha in alphas {
        for x in xs {
            let h = 7e-6 * x;
            let up = ki(alpha, x + h, &cfg).unwrap().value;
            let down = ki(alpha, x - h, &cfg).unwrap().value;
            let fd = (up - down) / (2.0 * h);
            let analytic = -ki(alpha - 1.0, x, &cfg).unwrap().value;
            assert!(
                (fd - analytic).abs() <= 1e-6 * analytic.abs(),
                "alpha {alpha}, x {x}: fd {fd} vs {analytic}"
            );
        }
    }
    finish("criterion 04 (derivative recurrence, 30 points)", started, 5.0);
}

#[test]
fn criterion_05_full_default_sweep_has_zero_failures_via_the_cli() {
    let _gate = lock();
    let started = Instant::now();
    let out = run_cli(&["verify", "--suite", "all"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["total_failures"], 0);
    assert_eq!(doc["report"]["summaries"].as_array().unwrap().len(), 25);
    finish("criterion 05 (full default sweep)", started, 60.0);
}

#[test]
fn criterion_06_equality_degeneracies_sit_within_four_error_budgets() {
    let _gate = lock();
    let started = Instant::now();
    let cfg = EvalConfig::default();

    fn assert_equality(v: &InequalityVerdict) {
        let cap = 4.0 * v.err_budget.max(f64::EPSILON);
        assert!(
            v.margin.abs() <= cap,
            "{}: margin {:e} exceeds 4x budget {:e}",
            v.name,
            v.margin,
            cap
        );
    }

    assert_equality(&check_turan(1.5, 1.5, 0.7, &cfg).unwrap());
    for link in check_geom_concavity_chain(2.0, 1.3, 1.3, &cfg).unwrap() {
        assert_equality(&link);
    }
    assert_equality(&check_chebyshev(2.0, 0.0, 1.0, &cfg).unwrap());
    // At a zero shift the covariance gap degenerates to exactly zero
    // (the bound side stays strictly positive).
    let gruss = check_gruss(1.0, 0.0, 1.0, &cfg).unwrap();
    assert_eq!(gruss.lhs, 0.0);
    assert_equality(&check_pair_mean(1.5, 0.0, 1.0, &cfg).unwrap());
    assert_equality(&check_pair_product(1.5, 0.0, 0.0, 1.0, &cfg).unwrap());
    assert_equality(&check_joint_logconvex(2.0, 1.0, 0.0, 0.0, &cfg).unwrap());
    assert_equality(&check_relative_convexity(2.0, 1.3, &cfg).unwrap());
    finish("criterion 06 (equality degeneracies)", started, 5.0);
}

#[test]
fn criterion_07_seeded_random_gram_matrices_stay_positive_semidefinite() {
    let _gate = lock();
    let started = Instant::now();
    let cfg = EvalConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    for round in 0..200 {
        let size = rng.gen_range(1..=5usize);
        let alpha = rng.gen_range(0.25..5.0);
        let mut points: Vec<f64> = (0..size).map(|_| rng.gen_range(0.2..3.0)).collect();
        points.sort_by(f64::total_cmp);
        let v = gram_psd_in_x(alpha, &points, &cfg).unwrap();
        assert!(
            v.min_eigenvalue >= -1e-10 * v.trace,
            "argument mode round {round}: min eig {:e}, trace {:e}",
            v.min_eigenvalue,
            v.trace
        );
    }
    for round in 0..200 {
        let size = rng.gen_range(1..=5usize);
        let x = rng.gen_range(0.3..5.0);
        let mut orders: Vec<f64> = (0..size).map(|_| rng.gen_range(-3.0..3.0)).collect();
        orders.sort_by(f64::total_cmp);
        let v = gram_psd_in_alpha(&orders, x, &cfg).unwrap();
        assert!(
            v.min_eigenvalue >= -1e-10 * v.trace,
            "order mode round {round}: min eig {:e}, trace {:e}",
            v.min_eigenvalue,
            v.trace
        );
    }
    finish("criterion 07 (400 random Gram matrices)", started, 30.0);
}

#[test]
fn criterion_08_determinants_match_quadrature_and_monte_carlo_oracles() {
    let _gate = lock();
    let started = Instant::now();
    let cfg = EvalConfig::default();

    for alpha in [0.0, 2.0, 4.0] {
        for x in [0.5, 1.0, 2.0] {
            let spec = HankelSpec::new(alpha, 1, x).unwrap();
            let det = det_ki(&spec, &cfg).unwrap();
            let oracle = det_oracle_2x2(alpha, x, &cfg).unwrap();
            let scale = det.value.abs().max(oracle.value.abs());
            assert!(
                (det.value - oracle.value).abs()
                    <= 1e-8 * scale + det.abs_err_est + oracle.abs_err_est,
                "alpha {alpha}, x {x}: det {:e} vs oracle {:e}",
                det.value,
                oracle.value
            );
        }
    }

    let mc = McConfig::new(1_000_000, 42).unwrap();
    for n in [1usize, 2] {
        let spec = HankelSpec::new(2.0, n, 1.0).unwrap();
        let det = det_ki(&spec, &cfg).unwrap();
        let est = det_oracle_mc(&spec, &mc).unwrap();
        assert!(
            (det.value - est.value).abs() <= 3.0 * est.abs_err_est + det.abs_err_est,
            "n {n}: det {:e} vs mc {:e} (se-scaled budget {:e})",
            det.value,
            est.value,
            est.abs_err_est
        );
    }
    finish("criterion 08 (determinant oracles)", started, 120.0);
}

#[test]
fn criterion_09_determinant_monotonicity_probes_hold() {
    let _gate = lock();
    let started = Instant::now();
    let cfg = EvalConfig::default();
    let grid: Vec<f64> = (0..19).map(|i| 0.5 + 0.25 * i as f64).collect();
    for n in [1usize, 2] {
        for alpha in [-2.0, 0.0, 2.0] {
            let v = det_cm_probe(alpha, n, &grid, 2, &cfg).unwrap();
            assert!(
                v.holds,
                "n {n}, alpha {alpha}: worst margin {:e} at order {} x {}",
                v.worst_margin, v.worst_order, v.worst_x
            );
        }
    }
    finish("criterion 09 (complete-monotonicity probes)", started, 120.0);
}

#[test]
fn criterion_10_identical_cli_invocations_are_byte_identical() {
    let _gate = lock();
    let started = Instant::now();
    for args in [
        vec!["eval", "--alpha", "0", "--x", "1"],
        vec!["table", "--alpha-range", "0:2:1", "--x-log-range", "0.1:10:5"],
        vec!["verify", "--suite", "all", "--grid", "tiny"],
        vec![
            "det", "--alpha", "2", "--n", "1", "--x", "1", "--oracle", "mc", "--samples",
            "100000", "--seed", "42",
        ],
        vec!["report", "--grid", "tiny"],
    ] {
        let a = run_cli(&args);
        let b = run_cli(&args);
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(
            a.stdout, b.stdout,
            "stdout differs between identical runs of {args:?}"
        );
        assert_eq!(a.status.code(), Some(0), "args {args:?}");
    }
    finish("criterion 10 (byte-identical reruns)", started, 60.0);
}
