//! Norms of monomial classes: the contravariant form of a monomial with
//! itself, compared against the closed product formula, and evaluated at a
//! dominant weight.
//!
//! Run with `cargo run --release --example closed_norms`.

use hdiff::forms::{closed_norm, contravariant_form, evaluate_norm, PolyModuleElement};
use hdiff::pieri::{binary_indices, compositions_up_to};
use hdiff::{Parity, WeightPoint};

fn main() {
    let n = 3;

    println!("even monomials up to degree 3, n = {n}:");
    println!("nu\tclosed norm\tvalue at mu = (4,2,0)");
    let mu = WeightPoint::from_ints(&[4, 2, 0]);
    for nu in compositions_up_to(n, 3) {
        let m = PolyModuleElement::monomial(n, Parity::Even, &nu);
        let direct = contravariant_form(&m, &m);
        let closed = closed_norm(n, &nu, Parity::Even);
        assert_eq!(direct, closed, "the closed product is the form");
        let value = evaluate_norm(n, &nu, &mu, Parity::Even)
            .map(|v| v.to_string())
            .unwrap_or_else(|e| format!("[{e}]"));
        println!("({nu})\t{closed}\t{value}");
    }

    println!();
    println!("odd monomials, n = {n}:");
    println!("nu\tclosed norm");
    for nu in binary_indices(n) {
        let m = PolyModuleElement::monomial(n, Parity::Odd, &nu);
        let direct = contravariant_form(&m, &m);
        let closed = closed_norm(n, &nu, Parity::Odd);
        assert_eq!(direct, closed);
        println!("({nu})\t{closed}");
    }
}
