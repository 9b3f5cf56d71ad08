//! Acceptance runner: every criterion at its tolerance, one PASS/FAIL line
//! each. Lines go straight to stdout so they show without `--nocapture`.

use std::io::Write;

use cobip::bench::{fit_exponent, run_bench, DEFAULT_SIZES};
use cobip::sweep::{
    cco_equivalence, circle_permutation, gs_minimality, lc_fixtures, monotone_circular, oracle_equivalence,
    random_5x5, tucker, universe_4x4, witness_validity, word_fixture, SuiteReport, SAMPLE_SEED,
};

const EXPONENT_LIMIT: f64 = 1.5;

fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    writeln!(out, "{line}").unwrap();
    out.flush().unwrap();
}

fn report(r: &SuiteReport, failed: &mut Vec<String>) {
    for line in r.to_string().lines() {
        emit(line);
    }
    if !r.passed() {
        failed.push(format!("{} {}", r.id, r.name));
    }
}

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    let mut sweeps = Vec::new();

    let universe = universe_4x4();
    sweeps.push(oracle_equivalence(&universe));
    let mut cco_items = universe.clone();
    cco_items.extend(random_5x5(1000, SAMPLE_SEED));
    sweeps.push(cco_equivalence(&cco_items));
    sweeps.push(tucker(4, 5));
    sweeps.push(monotone_circular(4, 4));
    sweeps.push(gs_minimality(12));
    sweeps.push(word_fixture());
    sweeps.push(lc_fixtures());
    sweeps.push(circle_permutation(4, 4));
    for r in &sweeps {
        report(r, &mut failed);
    }
    report(&witness_validity(&sweeps), &mut failed);

    let rows = run_bench(&DEFAULT_SIZES, 3, 1);
    let exponent = fit_exponent(&rows).unwrap();
    let all_yes = rows.iter().all(|r| r.decision);
    let ok = exponent <= EXPONENT_LIMIT && all_yes;
    emit(&format!(
        "{} 10 {:<22} exponent={exponent:.3} limit={EXPONENT_LIMIT} yes-instances={all_yes}",
        if ok { "PASS" } else { "FAIL" },
        "decision-scaling"
    ));
    for r in &rows {
        emit(&format!("     size={} ns={}", r.size, r.ns));
    }
    if !ok {
        failed.push("10 decision-scaling".into());
    }

    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
