//! Pieri and dual Pieri decompositions read off from the zeros of the
//! norms, with strip combinatorics and dimension accounting.
//!
//! Run with `cargo run --release --example pieri_rules`.

use hdiff::pieri::{
    dual_pieri_decompose, horizontal_strip, pieri_decompose, vertical_strip, weyl_dim, NuStatus,
    Partition,
};

fn main() {
    let n = 3;
    let mu = Partition::new(vec![2, 1]);

    println!("adding 2 boxes to mu = {mu} (symmetric power, n = {n}):");
    let d = pieri_decompose(&mu, 2, n);
    for (nu, status) in &d.entries {
        match status {
            NuStatus::Included { lambda, norm } => {
                assert!(horizontal_strip(&mu.padded(n), lambda));
                println!("  nu = ({nu}) -> {lambda}, norm {norm}");
            }
            NuStatus::ZeroNorm { lambda } => {
                assert!(!horizontal_strip(&mu.padded(n), lambda));
                println!("  nu = ({nu}) -> {lambda}, norm vanishes (not a strip)");
            }
            NuStatus::NonPartitionZero => println!("  nu = ({nu}) -> not a partition, norm 0"),
            NuStatus::ExcludedSingular => println!("  nu = ({nu}) -> not a partition, singular"),
        }
    }
    println!(
        "dimension sum {} = {} expected",
        d.dimension_sum(),
        d.expected_dimension()
    );

    println!();
    println!("adding 2 boxes to mu = {mu} (wedge power, n = {n}):");
    let d = dual_pieri_decompose(&mu, 2, n);
    for (nu, status) in &d.entries {
        if let NuStatus::Included { lambda, norm } = status {
            assert!(vertical_strip(&mu.padded(n), lambda));
            println!("  nu = ({nu}) -> {lambda}, norm {norm}");
        }
    }
    println!(
        "dimension sum {} = {} expected",
        d.dimension_sum(),
        d.expected_dimension()
    );

    println!();
    println!("dimensions of the summands for reference:");
    for lam in d.partitions() {
        println!("  dim {lam} = {}", weyl_dim(&lam, n));
    }
}
