//! Cross-checks of the closed-form bounds against the quadrature engine
//! and the independent Bessel oracle.

use bickley::{
    alpha_derivative_bracket, carlson_upper_bound, holder_bracket, holder_mixed_bound, ki,
    ki_alpha_derivative, upper_bound_amgm, upper_bound_power_envelope, EvalConfig,
};

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

#[test]
fn upper_bounds_dominate_on_grid() {
    let cfg = cfg();
    for &alpha in &[0.5, 1.0, 2.0, 5.0] {
        for &x in &[0.5, 1.0, 5.0] {
            let v = ki(alpha, x, &cfg).unwrap();
            let amgm = upper_bound_amgm(alpha, x).unwrap();
            assert!(
                amgm >= v.value - v.abs_err_est - 1e-13 * amgm,
                "mean-inequality envelope fails at alpha={alpha}, x={x}: {amgm} < {}",
                v.value
            );
            let env = upper_bound_power_envelope(alpha, x).unwrap();
            assert!(
                env >= v.value - v.abs_err_est - 1e-13 * env,
                "power envelope fails at alpha={alpha}, x={x}: {env} < {}",
                v.value
            );
        }
    }
}

#[test]
fn holder_chain_ordering() {
    let cfg = cfg();
    for &alpha in &[0.5, 1.0, 2.0, 5.0] {
        for &x in &[0.5, 1.0, 5.0] {
            for &p in &[1.25, 2.0, 4.0] {
                let v = ki(alpha, x, &cfg).unwrap();
                let bracket = holder_bracket(alpha, x, p).unwrap();
                let mixed = holder_mixed_bound(alpha, x, p, &cfg).unwrap();
                let slack =
                    bracket.err_budget + mixed.abs_err_est + v.abs_err_est + 1e-13 * v.value;
                assert!(
                    bracket.lower <= v.value + slack,
                    "lower > value at alpha={alpha}, x={x}, p={p}"
                );
                assert!(
                    v.value <= mixed.value + slack,
                    "value > mixed at alpha={alpha}, x={x}, p={p}: {} vs {}",
                    v.value,
                    mixed.value
                );
                assert!(
                    mixed.value <= bracket.upper + slack,
                    "mixed > upper at alpha={alpha}, x={x}, p={p}: {} vs {}",
                    mixed.value,
                    bracket.upper
                );
            }
        }
    }
}

#[test]
fn order_derivative_bracket_is_strict_and_negative() {
    let cfg = cfg();
    for &alpha in &[-1.0, 0.0, 1.0, 2.0, 3.0] {
        for &x in &[0.5, 1.0, 2.0, 5.0] {
            let bracket = alpha_derivative_bracket(alpha, x, &cfg).unwrap();
            assert!(
                bracket.lower < 0.0 && bracket.upper < 0.0,
                "endpoints not negative at alpha={alpha}, x={x}"
            );
            assert!(bracket.lower < bracket.upper);
            let d = ki_alpha_derivative(alpha, x, 1, &cfg).unwrap();
            assert!(
                bracket.strictly_contains(d.value, d.abs_err_est),
                "derivative {} ± {} not strictly inside [{}, {}] at alpha={alpha}, x={x}",
                d.value,
                d.abs_err_est,
                bracket.lower,
                bracket.upper
            );
        }
    }
}

#[test]
fn order_derivative_bracket_width_exceeds_error() {
    let bracket = alpha_derivative_bracket(2.0, 5.0, &cfg()).unwrap();
    assert!(bracket.width() > 2.0 * bracket.err_budget);
}

#[test]
fn fourth_power_envelope_dominates() {
    let cfg = cfg();
    for &(alpha, x) in &[(1.0, 1.0), (0.0, 1.0), (2.0, 0.5), (-1.0, 2.0)] {
        let v = ki(alpha, x, &cfg).unwrap();
        let fourth = v.value.powi(4);
        let bound = carlson_upper_bound(alpha, x, &cfg).unwrap();
        assert!(bound.value > 0.0);
        assert!(
            fourth <= bound.value + bound.abs_err_est + 1e-12 * bound.value,
            "fourth power exceeds envelope at alpha={alpha}, x={x}: {fourth} vs {}",
            bound.value
        );
    }
}

#[test]
fn fourth_power_envelope_against_bessel_oracle() {
    // At alpha=0 the enclosed quantity is K_0(1)^4, available from the
    // independent Bessel implementation.
    let k0 = bessel_ref::k0(1.0);
    let bound = carlson_upper_bound(0.0, 1.0, &cfg()).unwrap();
    assert!(k0.powi(4) <= bound.value + bound.abs_err_est);
}
