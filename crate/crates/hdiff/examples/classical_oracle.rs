//! The classical verification layer: projector norms in the tensor product
//! with a Verma module agree with the closed formulas, and the rank-two
//! module action table holds.
//!
//! Run with `cargo run --release --example classical_oracle`.

use hdiff::forms::evaluate_norm;
use hdiff::oracle::{generic_weight, gl2_example_check, oracle_norm};
use hdiff::pieri::{binary_indices, compositions_up_to};
use hdiff::Parity;

fn main() {
    let n = 3;
    let mu = generic_weight(n, 4, 0);
    println!("generic weight mu = {mu}");
    println!("nu\toracle\tclosed");
    for nu in compositions_up_to(n, 3) {
        let a = oracle_norm(n, &nu, &mu, Parity::Even).unwrap();
        let b = evaluate_norm(n, &nu, &mu, Parity::Even).unwrap();
        assert_eq!(a, b);
        println!("({nu})\t{a}\t{b}");
    }
    println!();
    println!("odd case:");
    for nu in binary_indices(n) {
        let a = oracle_norm(n, &nu, &mu, Parity::Odd).unwrap();
        let b = evaluate_norm(n, &nu, &mu, Parity::Odd).unwrap();
        assert_eq!(a, b);
        println!("({nu})\t{a}\t{b}");
    }

    println!();
    let mu2 = generic_weight(2, 2, 1);
    let report = gl2_example_check(&mu2).unwrap();
    println!("rank-two module table at mu = {mu2}:");
    for (name, ok) in &report.checks {
        println!("  {name}: {}", if *ok { "ok" } else { "FAILED" });
    }
    assert!(report.all_passed());
}
