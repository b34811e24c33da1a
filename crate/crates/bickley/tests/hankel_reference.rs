//! The oracle triangle for the moment-matrix determinants: deterministic
//! determinant vs 2-D quadrature vs seeded Monte-Carlo, plus positivity
//! and the complete-monotonicity probe.

use bickley::{
    det_cm_probe, det_ki, det_oracle_2x2, det_oracle_mc, det_oracle_mc_serial, ki, EvalConfig,
    HankelSpec, McConfig,
};

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn rel_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

#[test]
fn quadrature_oracle_agrees_with_determinant() {
    let cfg = cfg();
    for &(alpha, x) in &[(2.0, 1.0), (0.0, 2.0), (-1.0, 0.5), (3.5, 4.0)] {
        let det = det_ki(&HankelSpec::new(alpha, 1, x).unwrap(), &cfg).unwrap();
        let oracle = det_oracle_2x2(alpha, x, &cfg).unwrap();
        assert!(
            rel_gap(det.value, oracle.value) <= 1e-8,
            "determinant {} vs 2-D oracle {} at alpha={alpha}, x={x} (rel {})",
            det.value,
            oracle.value,
            rel_gap(det.value, oracle.value)
        );
        assert!(
            (det.value - oracle.value).abs()
                <= (det.abs_err_est + oracle.abs_err_est).max(1e-10 * det.value.abs()),
            "oracle disagreement exceeds combined error estimates at alpha={alpha}, x={x}"
        );
    }
}

#[test]
fn determinant_entries_against_bessel_oracle() {
    // At alpha=0 the n=1 determinant is K_0(1)·Ki_{−2}(1) − K_1(1)².
    let cfg = cfg();
    let k0 = ki(0.0, 1.0, &cfg).unwrap();
    let k1 = ki(-1.0, 1.0, &cfg).unwrap();
    assert!(rel_gap(k0.value, bessel_ref::k0(1.0)) <= 1e-10);
    assert!(rel_gap(k1.value, bessel_ref::k1(1.0)) <= 1e-10);
    let det = det_ki(&HankelSpec::new(0.0, 1, 1.0).unwrap(), &cfg).unwrap();
    let km2 = ki(-2.0, 1.0, &cfg).unwrap();
    let explicit = bessel_ref::k0(1.0) * km2.value - bessel_ref::k1(1.0).powi(2);
    assert!(det.value > 0.0);
    assert!((det.value - explicit).abs() <= det.abs_err_est + 1e-12 * explicit.abs());
}

#[test]
fn mc_oracle_within_three_standard_errors() {
    let cfg = cfg();
    let mc = McConfig::new(1_000_000, 42).unwrap();
    for &(alpha, n) in &[(2.0, 1_usize), (3.0, 2)] {
        let spec = HankelSpec::new(alpha, n, 1.0).unwrap();
        let det = det_ki(&spec, &cfg).unwrap();
        let est = det_oracle_mc(&spec, &mc).unwrap();
        assert!(est.value > 0.0);
        let gap = (est.value - det.value).abs();
        assert!(
            gap <= 3.0 * est.abs_err_est + det.abs_err_est,
            "MC estimate {} vs determinant {} (gap {gap}, 3σ = {}) at alpha={alpha}, n={n}",
            est.value,
            det.value,
            3.0 * est.abs_err_est
        );
    }
}

#[test]
fn mc_seed_split_pooling_is_consistent() {
    let spec = HankelSpec::new(2.0, 1, 1.0).unwrap();
    let single = det_oracle_mc(&spec, &McConfig::new(1_000_000, 42).unwrap()).unwrap();
    let half_a = det_oracle_mc(&spec, &McConfig::new(500_000, 1).unwrap()).unwrap();
    let half_b = det_oracle_mc(&spec, &McConfig::new(500_000, 2).unwrap()).unwrap();
    let pooled = 0.5 * (half_a.value + half_b.value);
    let pooled_err = 0.5 * (half_a.abs_err_est.powi(2) + half_b.abs_err_est.powi(2)).sqrt();
    assert!(
        (pooled - single.value).abs() <= 3.0 * (pooled_err + single.abs_err_est),
        "pooled {} vs single {} beyond 3 pooled standard errors",
        pooled,
        single.value
    );
}

#[test]
fn mc_parallel_and_serial_are_bit_identical() {
    let spec = HankelSpec::new(1.0, 2, 0.8).unwrap();
    let mc = McConfig::new(300_000, 7).unwrap();
    let par = det_oracle_mc(&spec, &mc).unwrap();
    let ser = det_oracle_mc_serial(&spec, &mc).unwrap();
    assert_eq!(par.value.to_bits(), ser.value.to_bits());
    assert_eq!(par.abs_err_est.to_bits(), ser.abs_err_est.to_bits());
}

#[test]
fn mc_estimate_is_reproducible() {
    let spec = HankelSpec::new(2.0, 1, 1.0).unwrap();
    let mc = McConfig::new(200_000, 42).unwrap();
    let first = det_oracle_mc(&spec, &mc).unwrap();
    let second = det_oracle_mc(&spec, &mc).unwrap();
    assert_eq!(first.value.to_bits(), second.value.to_bits());
}

#[test]
fn determinants_positive_across_orders_and_sizes() {
    // Positivity beyond the error budget, including the leading principal
    // minors (which are precisely the smaller-n determinants at the same
    // top-left order).
    let cfg = cfg();
    for &alpha in &[-2.0, 0.0, 2.0, 4.0] {
        for &x in &[0.5, 1.0, 2.0, 5.0] {
            for n in 0..=2 {
                let det = det_ki(&HankelSpec::new(alpha, n, x).unwrap(), &cfg).unwrap();
                assert!(
                    det.value > det.abs_err_est,
                    "determinant not positive beyond budget at alpha={alpha}, x={x}, n={n}: {} ± {}",
                    det.value,
                    det.abs_err_est
                );
            }
            // Every entry of the 3×3 matrix is positive.
            for s in 0..=4 {
                let entry = ki(alpha - s as f64, x, &cfg).unwrap();
                assert!(entry.value > 0.0);
            }
        }
    }
}

#[test]
fn cm_probe_alternates_signs_on_grid() {
    let cfg = cfg();
    let grid: Vec<f64> = (0..=18).map(|i| 0.5 + 0.25 * i as f64).collect();
    let verdict = det_cm_probe(2.0, 1, &grid, 2, &cfg).unwrap();
    assert!(
        verdict.holds,
        "alternating-sign probe failed: worst margin {} at order {}, x={}",
        verdict.worst_margin, verdict.worst_order, verdict.worst_x
    );
    assert_eq!(verdict.points, 19);
    // Order 0 means plain positivity; must also hold for a negative order
    // family.
    let verdict = det_cm_probe(-2.0, 2, &grid, 0, &cfg).unwrap();
    assert!(verdict.holds);
}
