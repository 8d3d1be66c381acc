//! Integration tests of the command-line binary: pinned outputs, exit
//! codes, and byte determinism across runs.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hdiff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn form_prints_the_reduced_fraction() {
    let out = run(&["form", "--n", "2", "--u", "x2*x1", "--v", "x2*x1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(h12-1)/(h12+1)\n");
}

#[test]
fn mul_normal_orders() {
    let out = run(&["mul", "--n", "2", "--u", "x1", "--v", "x2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x2*x1*((h12+1)/h12)\n");
}

#[test]
fn normal_order_validates_indices() {
    let out = run(&["normal-order", "--n", "2", "--expr", "x3*x1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("out of range"), "{err}");
}

#[test]
fn odd_exponent_is_rejected() {
    let out = run(&[
        "normal-order",
        "--n",
        "2",
        "--parity",
        "odd",
        "--expr",
        "z1^2",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn pieri_reports_the_partitions_and_dimensions() {
    let out = run(&["pieri", "--mu", "2,1", "--m", "2", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(3,2)"));
    assert!(text.contains("(4,1)"));
    assert!(text.contains("dimension sum: 6 expected: 6 -> ok"));
}

#[test]
fn pieri_json_schema() {
    let out = run(&["pieri", "--mu", "2,1", "--m", "2", "--n", "2", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["inputs"].is_object());
    assert!(v["result"].is_array());
    assert_eq!(v["checks"][0]["name"], "dimension sum");
    assert_eq!(v["checks"][0]["pass"], true);
}

#[test]
fn zhelobenko_apply_round_trips() {
    let out = run(&[
        "zhelobenko",
        "apply",
        "--n",
        "2",
        "--word",
        "1",
        "--expr",
        "x1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x2*(h12/(h12-1))\n");
    // applying the inverse word to the image recovers the input
    let image = stdout(&out);
    let back = run(&[
        "zhelobenko",
        "apply",
        "--n",
        "2",
        "--word",
        "1",
        "--inverse",
        "--expr",
        image.trim(),
    ]);
    assert!(back.status.success());
    assert_eq!(stdout(&back), "x1\n");
}

#[test]
fn norm_table_is_deterministic() {
    let args = [
        "norm-table",
        "--n",
        "3",
        "--deg",
        "2",
        "--parity",
        "even",
        "--mu",
        "3,1,0",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b), "output must be byte deterministic");
    assert!(stdout(&a).lines().count() > 5);
}

#[test]
fn oracle_check_passes() {
    let out = run(&[
        "oracle", "check", "--n", "2", "--deg", "2", "--parity", "even", "--weights", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().starts_with("nu\tmu"));
    assert!(text.contains("true"));
    assert!(!text.contains("false"));
}
