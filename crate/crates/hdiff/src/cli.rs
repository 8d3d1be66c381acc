//! Command-line surface: expression parsing, subcommands dispatching into
//! the library, and deterministic text/TSV/JSON output.
//!
//! Exit codes: 0 on success, 1 on validation errors (bad arguments or
//! unparsable expressions), 2 on internal assertion failures (a selftest
//! counterexample or a route disagreement).

use crate::algebra::Parity;
use crate::coeffs::WeightPoint;
use crate::expr;
use crate::forms;
use crate::oracle;
use crate::pieri::{self, Partition};
use crate::zhelobenko::{self, WeylWord};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hdiff",
    about = "Exact computation in the deformed differential operator algebras",
    version
)]
pub struct Command {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Normal-order an expression and print its canonical form.
    NormalOrder(ExprArgs),
    /// Multiply two expressions with the diamond product.
    Mul(BinaryArgs),
    /// Contravariant form of two expressions.
    Form(BinaryArgs),
    /// Closed norms of all monomials up to a degree, as TSV.
    NormTable(NormTableArgs),
    /// Zhelobenko automorphisms.
    #[command(subcommand)]
    Zhelobenko(ZhelobenkoVerb),
    /// Classical verification sweeps.
    #[command(subcommand)]
    Oracle(OracleVerb),
    /// Pieri or dual Pieri decomposition of a partition.
    Pieri(PieriArgs),
    /// Run the structural identity suites.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct ExprArgs {
    /// Rank of the algebra.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "even")]
    pub parity: ParityArg,
    /// The expression to normal-order.
    #[arg(long)]
    pub expr: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BinaryArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "even")]
    pub parity: ParityArg,
    /// Left operand.
    #[arg(long)]
    pub u: String,
    /// Right operand.
    #[arg(long)]
    pub v: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct NormTableArgs {
    #[arg(long)]
    pub n: usize,
    /// Maximum degree of the monomials (ignored for odd parity).
    #[arg(long, default_value = "3")]
    pub deg: u32,
    #[arg(long, value_enum, default_value = "even")]
    pub parity: ParityArg,
    /// Optional weight at which to evaluate, as comma-separated rationals.
    #[arg(long)]
    pub mu: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum ZhelobenkoVerb {
    /// Apply a word of automorphisms to an expression.
    Apply(ZhelobenkoArgs),
}

#[derive(Debug, Args)]
pub struct ZhelobenkoArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "even")]
    pub parity: ParityArg,
    /// Comma-separated simple reflection indices, applied left to right.
    #[arg(long)]
    pub word: String,
    #[arg(long)]
    pub expr: String,
    /// Apply the inverse automorphisms instead.
    #[arg(long)]
    pub inverse: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum OracleVerb {
    /// Compare classical norms with the closed formulas.
    Check(OracleArgs),
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub n: usize,
    /// Maximum degree (ignored for odd parity).
    #[arg(long, default_value = "3")]
    pub deg: u32,
    #[arg(long, value_enum, default_value = "even")]
    pub parity: ParityArg,
    /// Number of generic weights to test.
    #[arg(long, default_value = "3")]
    pub weights: u64,
}

#[derive(Debug, Args)]
pub struct PieriArgs {
    /// The base partition, comma-separated parts.
    #[arg(long)]
    pub mu: String,
    /// Number of boxes to add.
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: usize,
    /// Use the wedge power (vertical strips) instead.
    #[arg(long)]
    pub dual: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// quick or full.
    #[arg(long, default_value = "quick")]
    pub level: String,
    /// Seed for the randomized suites.
    #[arg(long, default_value = "1")]
    pub seed: u64,
}

fn fail(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    1
}

fn parse_weight(s: &str, n: usize) -> Result<WeightPoint, String> {
    let coords: Result<Vec<BigRational>, String> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<BigRational>()
                .map_err(|e| format!("bad weight entry '{t}': {e}"))
        })
        .collect();
    let coords = coords?;
    if coords.len() != n {
        return Err(format!("weight has {} entries, expected {n}", coords.len()));
    }
    Ok(WeightPoint::new(coords))
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    if s.trim().is_empty() {
        return Ok(Partition::new(vec![]));
    }
    let parts: Result<Vec<u32>, String> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad partition part '{t}': {e}"))
        })
        .collect();
    let parts = parts?;
    if !parts.windows(2).all(|w| w[0] >= w[1]) {
        return Err(format!("'{s}' is not weakly decreasing"));
    }
    Ok(Partition::new(parts))
}

fn configure_threads() {
    if let Ok(s) = std::env::var("HDIFF_THREADS") {
        if let Ok(k) = s.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build_global();
        }
    }
}

/// Run a parsed command; returns the process exit code.
pub fn run(cmd: Command) -> i32 {
    configure_threads();
    match cmd.verb {
        Verb::NormalOrder(a) => {
            if a.n == 0 {
                return fail("the rank must be at least 1");
            }
            match expr::parse_expr(&a.expr, a.n, a.parity.into()) {
                Ok(e) => {
                    if a.json {
                        println!(
                            "{}",
                            json!({
                                "inputs": {"n": a.n, "expr": a.expr},
                                "result": e.to_string(),
                                "checks": [],
                            })
                        );
                    } else {
                        println!("{e}");
                    }
                    0
                }
                Err(e) => fail(e),
            }
        }
        Verb::Mul(a) => {
            if a.n == 0 {
                return fail("the rank must be at least 1");
            }
            let parity = a.parity.into();
            let u = match expr::parse_expr(&a.u, a.n, parity) {
                Ok(u) => u,
                Err(e) => return fail(format!("in --u: {e}")),
            };
            let v = match expr::parse_expr(&a.v, a.n, parity) {
                Ok(v) => v,
                Err(e) => return fail(format!("in --v: {e}")),
            };
            let r = u.diamond(&v);
            if a.json {
                println!(
                    "{}",
                    json!({
                        "inputs": {"n": a.n, "u": a.u, "v": a.v},
                        "result": r.to_string(),
                        "checks": [],
                    })
                );
            } else {
                println!("{r}");
            }
            0
        }
        Verb::Form(a) => {
            if a.n == 0 {
                return fail("the rank must be at least 1");
            }
            let parity = a.parity.into();
            let u = match expr::parse_expr(&a.u, a.n, parity) {
                Ok(u) => u,
                Err(e) => return fail(format!("in --u: {e}")),
            };
            let v = match expr::parse_expr(&a.v, a.n, parity) {
                Ok(v) => v,
                Err(e) => return fail(format!("in --v: {e}")),
            };
            let r = u.epsilon().diamond(&v).hc_project();
            if a.json {
                println!(
                    "{}",
                    json!({
                        "inputs": {"n": a.n, "u": a.u, "v": a.v},
                        "result": r.to_string(),
                        "checks": [],
                    })
                );
            } else {
                println!("{r}");
            }
            0
        }
        Verb::NormTable(a) => {
            if a.n == 0 {
                return fail("the rank must be at least 1");
            }
            let parity: Parity = a.parity.into();
            let mu = match &a.mu {
                None => None,
                Some(s) => match parse_weight(s, a.n) {
                    Ok(w) => Some(w),
                    Err(e) => return fail(e),
                },
            };
            let mut nus = match parity {
                Parity::Even => pieri::compositions_up_to(a.n, a.deg),
                Parity::Odd => pieri::binary_indices(a.n),
            };
            nus.sort_by_key(|nu| (nu.degree(), nu.clone()));
            for nu in nus {
                let norm = forms::closed_norm(a.n, &nu, parity);
                match &mu {
                    None => println!("{nu}\t{norm}"),
                    Some(w) => {
                        let val = match forms::evaluate_norm(a.n, &nu, w, parity) {
                            Ok(v) => v.to_string(),
                            Err(e) => format!("[{e}]"),
                        };
                        println!("{nu}\t{norm}\t{val}");
                    }
                }
            }
            0
        }
        Verb::Zhelobenko(ZhelobenkoVerb::Apply(a)) => {
            if a.n == 0 {
                return fail("the rank must be at least 1");
            }
            let parity = a.parity.into();
            let indices: Result<Vec<usize>, _> =
                a.word.split(',').map(|t| t.trim().parse::<usize>()).collect();
            let indices = match indices {
                Ok(v) => v,
                Err(e) => return fail(format!("bad word: {e}")),
            };
            if indices.iter().any(|&c| c < 1 || c + 1 > a.n) {
                return fail("simple reflection index out of range");
            }
            let word = WeylWord::new(indices, a.n);
            let e = match expr::parse_expr(&a.expr, a.n, parity) {
                Ok(e) => e,
                Err(e) => return fail(e),
            };
            let image = if a.inverse {
                zhelobenko::xicheck_word(&word, &e)
            } else {
                zhelobenko::qcheck_word(&word, &e)
            };
            if a.json {
                println!(
                    "{}",
                    json!({
                        "inputs": {"n": a.n, "word": a.word, "expr": a.expr, "inverse": a.inverse},
                        "result": image.to_string(),
                        "checks": [],
                    })
                );
            } else {
                println!("{image}");
            }
            0
        }
        Verb::Oracle(OracleVerb::Check(a)) => {
            if a.n == 0 {
                return fail("the rank must be at least 1");
            }
            let parity: Parity = a.parity.into();
            let mut nus = match parity {
                Parity::Even => pieri::compositions_up_to(a.n, a.deg),
                Parity::Odd => pieri::binary_indices(a.n),
            };
            nus.sort_by_key(|nu| (nu.degree(), nu.clone()));
            let mut all_ok = true;
            println!("nu\tmu\toracle\tclosed\tok");
            for salt in 0..a.weights {
                let mu = oracle::generic_weight(a.n, a.deg + 1, salt);
                for nu in &nus {
                    let lhs = match oracle::oracle_norm(a.n, nu, &mu, parity) {
                        Ok(v) => v,
                        Err(e) => return fail(e),
                    };
                    let rhs = match forms::evaluate_norm(a.n, nu, &mu, parity) {
                        Ok(v) => v,
                        Err(e) => return fail(e),
                    };
                    let ok = lhs == rhs;
                    all_ok &= ok;
                    println!("{nu}\t{mu}\t{lhs}\t{rhs}\t{ok}");
                }
            }
            if all_ok {
                0
            } else {
                eprintln!("error: oracle disagreement");
                2
            }
        }
        Verb::Pieri(a) => {
            if a.n == 0 {
                return fail("the rank must be at least 1");
            }
            let mu = match parse_partition(&a.mu) {
                Ok(p) => p,
                Err(e) => return fail(e),
            };
            if mu.num_parts() > a.n {
                return fail("partition has more parts than the rank");
            }
            if a.dual && a.m as usize > a.n {
                return fail("wedge degree exceeds the rank");
            }
            let d = if a.dual {
                pieri::dual_pieri_decompose(&mu, a.m, a.n)
            } else {
                pieri::pieri_decompose(&mu, a.m, a.n)
            };
            let parts: Vec<String> = d.partitions().iter().map(|p| p.to_string()).collect();
            let dim_ok = d.dimension_sum() == d.expected_dimension();
            if a.json {
                println!(
                    "{}",
                    json!({
                        "inputs": {"mu": a.mu, "m": a.m, "n": a.n, "dual": a.dual},
                        "result": parts,
                        "checks": [{"name": "dimension sum", "pass": dim_ok}],
                    })
                );
            } else {
                for p in &parts {
                    println!("{p}");
                }
                println!(
                    "dimension sum: {} expected: {} -> {}",
                    d.dimension_sum(),
                    d.expected_dimension(),
                    if dim_ok { "ok" } else { "MISMATCH" }
                );
            }
            if dim_ok {
                0
            } else {
                2
            }
        }
        Verb::Selftest(a) => {
            let full = match a.level.as_str() {
                "quick" => false,
                "full" => true,
                other => return fail(format!("unknown level '{other}' (use quick or full)")),
            };
            let checks = crate::checks::run_suites(full, a.seed);
            let mut all_ok = true;
            for c in &checks {
                all_ok &= c.pass;
                println!("{c}");
            }
            if all_ok {
                println!("selftest: all {} suites passed", checks.len());
                0
            } else {
                eprintln!("error: selftest found a counterexample");
                2
            }
        }
    }
}

/// Parse the process arguments and run.
pub fn main_from_env() -> i32 {
    let cmd = Command::parse();
    run(cmd)
}
