//! One test per acceptance criterion, each printing a single PASS/FAIL line.
//! Run with `cargo test -p confhom --release --test acceptance -- --nocapture --test-threads 1`.

use confhom::verify::{self, Outcome, Suite};

fn report(o: Outcome) {
    println!("{}", o.line());
    assert!(o.passed || !o.asserted, "{}", o.line());
}

#[test]
fn criterion_01_square_zero() {
    report(verify::square_zero(Suite::Full));
}

#[test]
fn criterion_02_shuffle_signs() {
    report(verify::shuffle_signs());
}

#[test]
fn criterion_03_bouquet_ranks() {
    report(verify::bouquet_ranks());
}

#[test]
fn criterion_04_cross_pipeline() {
    report(verify::cross_pipeline(Suite::Full));
}

#[test]
fn criterion_05_rational_cross_check() {
    report(verify::rational_cross_check(Suite::Full));
}

#[test]
fn criterion_06_poincare_identity() {
    report(verify::poincare_identity());
}

#[test]
fn criterion_07_oracle_equivalence() {
    report(verify::oracle_equivalence(Suite::Full));
}

#[test]
fn criterion_08_torsion_structure() {
    report(verify::torsion_structure(Suite::Full));
}

#[test]
fn criterion_09_stability() {
    report(verify::stability(Suite::Full));
}

#[test]
fn criterion_10_known_small_groups() {
    report(verify::known_small_groups());
}

#[test]
fn criterion_11_mapping_classes() {
    report(verify::mapping_classes(Suite::Full));
}

#[test]
fn criterion_12_bu_structure() {
    report(verify::bu_structure());
}

#[test]
fn criterion_13_generation() {
    report(verify::generation(Suite::Full));
}

#[test]
fn growth_report() {
    report(verify::growth_report());
}
