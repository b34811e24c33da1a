//! Integration tests for the inequality harness: named example points
//! cross-checked against the independent Bessel oracle, equality
//! degeneracies, assertion-scope flags, and sweep determinism.

use bickley::{
    gram_psd_in_alpha, gram_psd_in_x, ki, probe_log_convexity_x, suite, sweep, sweep_serial,
    CheckName, EvalConfig, GridSpec, VERDICT_TOL,
};
use bickley::harness::checks;

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

#[test]
fn chebyshev_forward_direction_against_bessel_oracle() {
    // (α=2, β=−1): both integrand factors decrease, so the forward product
    // bound Ki_1(x)² ≤ K_0(x)·Ki_2(x) applies.
    let v = checks::check_chebyshev(2.0, -1.0, 1.0, &cfg()).unwrap();
    assert!(v.holds, "margin = {}", v.margin);
    assert!(v.asserted);
    let direction = v
        .params
        .0
        .iter()
        .find(|(k, _)| *k == "direction")
        .map(|(_, d)| *d)
        .unwrap();
    assert_eq!(direction, 1.0);

    let ki1 = ki(1.0, 1.0, &cfg()).unwrap().value;
    let ki2 = ki(2.0, 1.0, &cfg()).unwrap().value;
    let k0 = bessel_ref::k0(1.0);
    assert!(rel_err(v.lhs, ki1 * ki1) < 1e-11);
    assert!(rel_err(v.rhs, k0 * ki2) < 1e-9);
}

#[test]
fn chebyshev_reversed_direction_holds() {
    // (α=−2, β=−1): the factors are monotone in opposite directions, so
    // the product bound reverses: K_0·Ki_{−2} ≤ Ki_1·Ki_{−3}.
    let v = checks::check_chebyshev(-2.0, -1.0, 1.0, &cfg()).unwrap();
    assert!(v.holds, "margin = {}", v.margin);
    let direction = v
        .params
        .0
        .iter()
        .find(|(k, _)| *k == "direction")
        .map(|(_, d)| *d)
        .unwrap();
    assert_eq!(direction, -1.0);
    // Reversed orientation really is required: the forward ordering fails.
    assert!(v.margin > 0.0);
    let k0 = bessel_ref::k0(1.0);
    let kim2 = ki(-2.0, 1.0, &cfg()).unwrap().value;
    assert!(rel_err(v.lhs, k0 * kim2) < 1e-9);
}

#[test]
fn turan_point_against_bessel_oracle() {
    // (α₁=−2, α₂=0, x=1): lhs = K_1(1)², rhs = Ki_{−2}(1)·K_0(1), with
    // Ki_{−2}(x) = K_0(x) + K_1(x)/x available in closed Bessel form.
    let v = checks::check_turan(-2.0, 0.0, 1.0, &cfg()).unwrap();
    assert!(v.holds);
    let k0 = bessel_ref::k0(1.0);
    let k1 = bessel_ref::k1(1.0);
    assert!(rel_err(v.lhs, k1 * k1) < 1e-9);
    assert!(rel_err(v.rhs, (k0 + k1) * k0) < 1e-9);

    let simple = checks::check_turan(0.0, 2.0, 1.0, &cfg()).unwrap();
    assert!(simple.holds && simple.asserted);
}

#[test]
fn equality_degeneracies_sit_within_four_error_budgets() {
    let cfg = cfg();
    let mut cases = Vec::new();
    // Identical orders collapse the order-convexity bound to an identity.
    cases.push(checks::check_turan(1.5, 1.5, 0.7, &cfg).unwrap());
    // Equal arguments make all three means coincide.
    let [gl, gr] = checks::check_geom_concavity_chain(2.0, 1.3, 1.3, &cfg).unwrap();
    cases.push(gl);
    cases.push(gr);
    // A zero shift makes one Chebyshev factor constant.
    cases.push(checks::check_chebyshev(2.0, 0.0, 1.0, &cfg).unwrap());
    // Zero β: both products in the gap bound are identical.
    let gruss = checks::check_gruss(2.0, 0.0, 1.0, &cfg).unwrap();
    assert_eq!(gruss.lhs, 0.0);
    assert!(gruss.holds);
    // Zero pairing shift.
    cases.push(checks::check_pair_mean(1.0, 0.0, 2.0, &cfg).unwrap());
    cases.push(checks::check_pair_product(1.0, 0.0, 0.0, 2.0, &cfg).unwrap());
    cases.push(checks::check_joint_logconvex(1.0, 2.0, 0.0, 0.0, &cfg).unwrap());
    // α = 2 makes both ratio sides identical.
    cases.push(checks::check_relative_convexity(2.0, 0.8, &cfg).unwrap());

    for v in cases {
        assert!(
            v.margin.abs() <= 4.0 * v.err_budget.max(f64::EPSILON),
            "{}: margin {} exceeds 4×budget {}",
            v.name,
            v.margin,
            v.err_budget
        );
        assert!(v.holds);
    }
}

#[test]
fn tura_right_margin_shrinks_but_stays_positive_at_large_x() {
    let [left, right] = checks::check_tura_chain(2.0, 50.0, &cfg()).unwrap();
    assert!(left.holds);
    assert!(right.holds && right.asserted);
    // The asymptotic gap is ~1/x: small but safely positive.
    assert!(right.margin > 0.0, "margin = {}", right.margin);
    assert!(right.margin < 0.05, "margin = {}", right.margin);
}

#[test]
fn tura_right_is_report_only_for_fractional_orders() {
    let [left, right] = checks::check_tura_chain(0.5, 1.0, &cfg()).unwrap();
    assert!(left.asserted && left.holds);
    assert!(!right.asserted);
}

#[test]
fn geom_mean_left_is_report_only_for_fractional_orders() {
    let [left, right] = checks::check_geom_concavity_chain(0.5, 0.5, 2.0, &cfg()).unwrap();
    assert!(!left.asserted);
    assert!(right.asserted && right.holds);

    let [left_int, right_int] = checks::check_geom_concavity_chain(1.0, 0.5, 2.0, &cfg()).unwrap();
    assert!(left_int.asserted && left_int.holds);
    assert!(right_int.asserted && right_int.holds);
}

#[test]
fn kimberling_chain_examples_hold() {
    let cfg = cfg();
    for v in checks::check_kimberling_chain(2.0, 1.0, 1.0, &cfg).unwrap() {
        assert!(v.holds, "{}: margin {}", v.name, v.margin);
    }
    for v in checks::check_kimberling_chain(1.0, 0.5, 2.0, &cfg).unwrap() {
        assert!(v.holds && v.margin > 0.0, "{}: margin {}", v.name, v.margin);
    }
    // Limit structure as x → 0⁺: the middle link's slack approaches
    // Ki_α(0) (normalized), the third link's margin collapses like O(x).
    let [_, middle, third] = checks::check_kimberling_chain(2.0, 1e-6, 1.0, &cfg).unwrap();
    assert!(middle.margin > 0.5);
    assert!(third.margin.abs() < 1e-5);
    assert!(third.holds);
}

#[test]
fn vasic_with_unit_weights_is_bitwise_the_petrovic_link() {
    let cfg = cfg();
    let vasic = checks::check_vasic(2.0, 0.5, 1.5, 1.0, 1.0, &cfg).unwrap();
    let [_, _, petrovic] = checks::check_kimberling_chain(2.0, 0.5, 1.5, &cfg).unwrap();
    assert_eq!(vasic.lhs.to_bits(), petrovic.lhs.to_bits());
    assert_eq!(vasic.rhs.to_bits(), petrovic.rhs.to_bits());
    assert_eq!(vasic.margin.to_bits(), petrovic.margin.to_bits());

    assert!(checks::check_vasic(2.0, 1.0, 1.0, 2.0, 1.0, &cfg).unwrap().holds);
    assert!(checks::check_vasic(1.0, 0.1, 0.2, 3.0, 2.0, &cfg).unwrap().holds);
}

#[test]
fn order_chain_examples_hold() {
    let cfg = cfg();
    for v in checks::check_order_chain(1.0, 1.0, 1.0, &cfg).unwrap() {
        assert!(v.holds, "{}: margin {}", v.name, v.margin);
    }
    for v in checks::check_order_chain(0.5, 2.5, 0.5, &cfg).unwrap() {
        assert!(v.holds, "{}: margin {}", v.name, v.margin);
    }
}

#[test]
fn order_subadditivity_cross_checked_by_decreasing_ratio() {
    // Independent route to sub-additivity in the order: α ↦ Ki_α(x)/α is
    // decreasing on α > 0, which implies Ki_{α+β} ≤ Ki_α + Ki_β.
    let cfg = cfg();
    for &x in &[0.5, 2.0] {
        let mut prev = f64::INFINITY;
        for i in 1..=10 {
            let alpha = 0.5 * f64::from(i);
            let ratio = ki(alpha, x, &cfg).unwrap().value / alpha;
            assert!(
                ratio < prev,
                "Ki_alpha(x)/alpha not decreasing at alpha={alpha}, x={x}"
            );
            prev = ratio;
        }
    }
}

#[test]
fn spot_points_hold_across_remaining_check_families() {
    let cfg = cfg();
    assert!(checks::check_gruss(2.0, -1.0, 1.0, &cfg).unwrap().holds);
    assert!(checks::check_gruss(5.0, -2.0, 0.1, &cfg).unwrap().holds);
    assert!(checks::check_pair_mean(1.0, 1.0, 1.0, &cfg).unwrap().holds);
    assert!(checks::check_pair_mean(0.0, 3.0, 2.0, &cfg).unwrap().holds);
    assert!(checks::check_pair_product(1.0, 1.0, 0.5, 1.0, &cfg).unwrap().holds);
    assert!(checks::check_pair_product(0.0, 2.0, 2.0, 0.5, &cfg).unwrap().holds);
    assert!(checks::check_joint_logconvex(1.0, 1.0, 0.5, 0.5, &cfg).unwrap().holds);
    assert!(checks::check_joint_logconvex(2.0, 2.0, 0.9, -0.3, &cfg).unwrap().holds);
    assert!(checks::check_relative_convexity(3.0, 1.0, &cfg).unwrap().holds);
    assert!(checks::check_relative_convexity(10.0, 0.5, &cfg).unwrap().holds);
}

#[test]
fn precondition_violations_are_rejected_not_failed() {
    let cfg = cfg();
    assert!(checks::check_gruss(2.0, 0.5, 1.0, &cfg).is_err());
    assert!(checks::check_gruss(-3.0, -1.0, 1.0, &cfg).is_err());
    assert!(checks::check_kimberling_chain(0.0, 1.0, 1.0, &cfg).is_err());
    assert!(checks::check_vasic(1.0, 1.0, 1.0, 0.5, 1.0, &cfg).is_err());
    assert!(checks::check_order_chain(1.0, -1.0, 1.0, &cfg).is_err());
    assert!(checks::check_joint_logconvex(1.0, 1.0, 1.0, 0.0, &cfg).is_err());
    assert!(checks::check_relative_convexity(1.5, 1.0, &cfg).is_err());
}

#[test]
fn gram_examples_are_psd() {
    let cfg = cfg();
    let v = gram_psd_in_x(1.0, &[0.5, 1.0, 1.5], &cfg).unwrap();
    assert!(v.holds && v.min_eigenvalue > 0.0);

    let v = gram_psd_in_alpha(&[-1.0, 0.0, 1.0], 1.0, &cfg).unwrap();
    assert!(v.holds && v.min_eigenvalue > 0.0);

    // 1×1 case: the "smallest eigenvalue" is the value itself.
    let v = gram_psd_in_x(2.0, &[0.7], &cfg).unwrap();
    let direct = ki(2.0, 1.4, &cfg).unwrap().value;
    assert_eq!(v.min_eigenvalue.to_bits(), direct.to_bits());
    assert!(v.holds);
}

#[test]
fn ratio_probes_hold_on_geometric_grids() {
    let cfg = cfg();
    let grid: Vec<f64> = (0..10)
        .map(|i| 0.1 * 100.0_f64.powf(f64::from(i) / 9.0))
        .collect();
    for &alpha in &[2.0, -1.0] {
        let v = probe_log_convexity_x(alpha, &grid, &cfg).unwrap();
        assert!(v.holds, "alpha={alpha}: worst={}", v.worst_margin);
    }
}

#[test]
fn tiny_sweep_has_zero_failures_and_covers_every_check() {
    let report = sweep(&GridSpec::tiny(), &suite("all").unwrap(), VERDICT_TOL, &cfg()).unwrap();
    assert_eq!(report.total_failures(), 0);
    assert_eq!(report.summaries.len(), CheckName::ALL.len());
    for s in &report.summaries {
        assert!(s.count > 0, "{} never ran", s.name);
        assert!(s.min_asserted_margin >= -(VERDICT_TOL + 1e-10));
        assert!(!s.failures_truncated);
        assert!(s.argmin.is_some());
    }
}

#[test]
fn parallel_and_serial_sweeps_are_bit_identical() {
    let grid = GridSpec::tiny();
    let names = suite("all").unwrap();
    let cfg = cfg();
    let par = sweep(&grid, &names, VERDICT_TOL, &cfg).unwrap();
    let ser = sweep_serial(&grid, &names, VERDICT_TOL, &cfg).unwrap();
    let par_json = serde_json::to_string(&par).unwrap();
    let ser_json = serde_json::to_string(&ser).unwrap();
    assert_eq!(par_json, ser_json);
}
