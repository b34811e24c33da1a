//! Quick driver: full default-grid sweep, printing per-check aggregates.

use bickley::{sweep, suite, EvalConfig, GridSpec, VERDICT_TOL};

fn main() {
    let t0 = std::time::Instant::now();
    let report = sweep(
        &GridSpec::default(),
        &suite("all").unwrap(),
        VERDICT_TOL,
        &EvalConfig::default(),
    )
    .unwrap();
    println!(
        "total={} failures={} elapsed={:.2?}",
        report.total_checks,
        report.total_failures(),
        t0.elapsed()
    );
    for s in &report.summaries {
        println!(
            "{:28} n={:6} asserted={:6} min_margin={:+.3e} min_asserted={:+.3e} fail={} {}",
            s.name.as_str(),
            s.count,
            s.asserted_count,
            s.min_margin,
            s.min_asserted_margin,
            s.failure_count,
            if s.failures_truncated { "(truncated)" } else { "" }
        );
    }
}
