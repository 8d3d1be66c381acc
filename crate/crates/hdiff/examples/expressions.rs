//! The textual grammar: parse, multiply, normal-order and print elements of
//! both algebras.
//!
//! Run with `cargo run --release --example expressions`.

use hdiff::expr::{parse_expr, parse_ratfunc};
use hdiff::Parity;

fn main() {
    let n = 2;

    // the defining exchange picks up its fraction when normal-ordering
    let e = parse_expr("x1*x2", n, Parity::Even).unwrap();
    println!("x1*x2          = {e}");

    // plain derivatives convert to the modified basis
    let e = parse_expr("d2", n, Parity::Even).unwrap();
    println!("d2             = {e}");

    // products, powers, coefficients
    let u = parse_expr("x1^2*D2*((h12-1)/h12)", n, Parity::Even).unwrap();
    let v = parse_expr("x2*3", n, Parity::Even).unwrap();
    let w = u.diamond(&v);
    println!("u              = {u}");
    println!("v              = {v}");
    println!("u . v          = {w}");

    // the odd algebra: anticommuting variables square to zero
    let z = parse_expr("z1*z2", n, Parity::Odd).unwrap();
    println!("z1*z2          = {z}");
    assert!(parse_expr("z1*z1", n, Parity::Odd).unwrap().is_zero());

    // printing round-trips
    let back = parse_expr(&w.to_string(), n, Parity::Even).unwrap();
    assert_eq!(back, w);
    println!("round trip     = {back}");

    // bare coefficient expressions
    let f = parse_ratfunc("(h12^2-1)/(h12+1)", n).unwrap();
    println!("(h12^2-1)/(h12+1) reduces to {f}");
}
