//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Every comparison is exact; there are no tolerances anywhere.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use hdiff::checks;
use hdiff::Parity;

fn report(criterion: &str, c: &checks::Check) {
    println!(
        "criterion {criterion}: {} — {} ({})",
        if c.pass { "PASS" } else { "FAIL" },
        c.name,
        c.detail
    );
    assert!(c.pass, "criterion {criterion} failed: {}", c.detail);
}

#[test]
fn criterion_1_closed_norms_even() {
    let c = checks::norm_theorem_check(Parity::Even, &[2, 3, 4], 5);
    report("1 (closed norms, even, degree <= 5, n in 2..4)", &c);
}

#[test]
fn criterion_2_closed_norms_odd() {
    let c = checks::norm_theorem_check(Parity::Odd, &[1, 2, 3, 4, 5], 0);
    report("2 (closed norms, odd, all binary indices, n <= 5)", &c);
}

#[test]
fn criterion_3_triple_route_agreement() {
    let c = checks::triple_route_check(Parity::Even, &[2, 3, 4], 5);
    report("3a (route agreement, even)", &c);
    let c = checks::triple_route_check(Parity::Odd, &[1, 2, 3, 4, 5], 0);
    report("3b (route agreement, odd)", &c);
}

#[test]
fn criterion_4_classical_oracle() {
    let c = checks::oracle_check(&[2, 3], 4, &[2, 3, 4], 3);
    report("4 (classical oracle at 3 generic weights)", &c);
}

#[test]
fn criterion_5_zhelobenko_suite() {
    let c = checks::zhelobenko_homomorphism_check(&[2, 3, 4]);
    report("5a (automorphism property on defining relations)", &c);
    let c = checks::zhelobenko_braid_check(&[3, 4]);
    report("5b (braid relations)", &c);
    let c = checks::zhelobenko_inversion_check(&[2, 3]);
    report("5c (inversion relation)", &c);
    let c = checks::zhelobenko_long_inverse_check(&[2, 3, 4], 3);
    report("5d (long composites mutually inverse, degree <= 3)", &c);
    let c = checks::zhelobenko_covariance_check(&[2, 3], 20, 1);
    report("5e (covariance of the form)", &c);
}

#[test]
fn criterion_6_pieri_equivalence() {
    let c = checks::pieri_equivalence_check(8, 5, 4);
    report("6 (Pieri equivalence and dimension sums)", &c);
}

#[test]
fn criterion_7_rank_two_module_table() {
    let c = checks::gl2_table_check(3);
    report("7 (rank-two module action table)", &c);
}

#[test]
fn criterion_8_structural_suite() {
    let c = checks::associativity_check(&[2, 3, 4], Parity::Even, 200, 1);
    report("8a (associativity, even, 200 triples per rank)", &c);
    let c = checks::associativity_check(&[2, 3, 4], Parity::Odd, 200, 1);
    report("8b (associativity, odd, 200 triples per rank)", &c);
    let c = checks::epsilon_check(&[2, 3, 4], Parity::Even, 50, 1);
    report("8c (anti-involution, even)", &c);
    let c = checks::epsilon_check(&[2, 3, 4], Parity::Odd, 50, 1);
    report("8d (anti-involution, odd)", &c);
    let c = checks::power_relation_check(4);
    report("8e (power exchange relation, a,b <= 3, n <= 4)", &c);
    let c = checks::ordering_identity_check(4);
    report("8f (normal ordering of descending words)", &c);
    let c = checks::unit_law_check(&[2, 3, 4], Parity::Even, 30, 1);
    report("8g (unit laws, even)", &c);
    let c = checks::unit_law_check(&[2, 3, 4], Parity::Odd, 30, 1);
    report("8h (unit laws, odd)", &c);
    let c = checks::weight_grading_check(&[2, 3, 4], Parity::Even, 30, 1);
    report("8i (weight grading, even)", &c);
    let c = checks::weight_grading_check(&[2, 3, 4], Parity::Odd, 30, 1);
    report("8j (weight grading, odd)", &c);
}
