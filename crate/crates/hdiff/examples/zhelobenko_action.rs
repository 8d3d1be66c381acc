//! The Zhelobenko automorphisms in action: generator images, braid
//! relations, the inversion identity, and the mutually inverse long
//! composites.
//!
//! Run with `cargo run --release --example zhelobenko_action`.

use hdiff::diffh;
use hdiff::zhelobenko::{qcheck, qcheck_w0, qcheck_word, xicheck, xicheck_w0, WeylWord};
use hdiff::{Element, MultiIndex, Parity};

fn main() {
    let n = 3;

    println!("generator images under the first simple automorphism (n = {n}):");
    for g in [diffh::x(n, 1), diffh::x(n, 2), diffh::x(n, 3)] {
        println!("  q1({g}) = {}", qcheck(1, &g));
    }
    for g in [diffh::dbar(n, 1), diffh::dbar(n, 2)] {
        println!("  q1({g}) = {}", qcheck(1, &g));
    }

    println!();
    let u = diffh::x(n, 2).diamond(&diffh::x(n, 1));
    let w121 = WeylWord::new(vec![1, 2, 1], n);
    let w212 = WeylWord::new(vec![2, 1, 2], n);
    let a = qcheck_word(&w121, &u);
    let b = qcheck_word(&w212, &u);
    assert_eq!(a, b);
    println!("braid relation: both reduced words send {u} to {a}");

    println!();
    let sq = qcheck(1, &qcheck(1, &diffh::x(n, 1)));
    println!("inversion: q1(q1(x1)) = {sq}");

    println!();
    for nu in [
        MultiIndex::from_slice(&[1, 0, 0]),
        MultiIndex::from_slice(&[0, 1, 1]),
        MultiIndex::from_slice(&[2, 1, 0]),
    ] {
        let m = Element::x_monomial(n, Parity::Even, nu.clone());
        let roundtrip = qcheck_w0(&xicheck_w0(&m));
        assert_eq!(roundtrip, m);
        println!("long composites invert each other on x^({nu})");
        println!("  inverse image: {}", xicheck_w0(&m));
    }

    println!();
    let v = diffh::dbar(n, 2);
    assert_eq!(xicheck(2, &qcheck(2, &v)), v);
    println!("one-step inverse: xi2(q2({v})) = {v}");
}
