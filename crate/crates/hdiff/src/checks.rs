//! Shared verification suites.
//!
//! Each function runs one family of exact identities and reports the first
//! counterexample if any. The command-line selftest and the acceptance
//! tests both drive these; everything is deterministic for a fixed seed.

use crate::algebra::{normal_order, Atom, Element, MultiIndex, Parity};
use crate::coeffs::{PochDirection, RatFunc};
use crate::forms::{
    act, closed_norm, contravariant_form, evaluate_norm, form_via_shifted_projector,
    PolyModuleElement,
};
use crate::oracle;
use crate::pieri;
use crate::zhelobenko;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt;

/// Outcome of one suite.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            pass: true,
            detail: detail.into(),
        }
    }

    fn from_result(name: impl Into<String>, r: Result<String, String>) -> Check {
        match r {
            Ok(detail) => Check {
                name: name.into(),
                pass: true,
                detail,
            },
            Err(detail) => Check {
                name: name.into(),
                pass: false,
                detail,
            },
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({})",
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}

/// A random coefficient built from integers and linear root factors, so
/// denominators stay within the localized family.
pub fn random_coeff(rng: &mut ChaCha8Rng, n: usize) -> RatFunc {
    let start = [1i64, 1, 2, -1, 3][rng.gen_range(0..5)];
    let mut c = RatFunc::from_int(n, start);
    if n < 2 {
        return c;
    }
    // a quarter of the coefficients carry a root factor or its inverse
    for _ in 0..(if rng.gen_ratio(1, 4) { 1 } else { 0 }) {
        let i = rng.gen_range(1..=n);
        let j = {
            let mut j = rng.gen_range(1..=n);
            while j == i {
                j = rng.gen_range(1..=n);
            }
            j
        };
        let k = rng.gen_range(-2i64..=2);
        let lin = RatFunc::hij(n, i, j).add(&RatFunc::from_int(n, k));
        if rng.gen_bool(0.5) {
            c = c.mul(&lin);
        } else {
            c = c.checked_div(&lin).expect("nonzero linear factor");
        }
    }
    c
}

/// A random element as a short sum of random generator words with random
/// coefficients.
pub fn random_element(
    rng: &mut ChaCha8Rng,
    n: usize,
    parity: Parity,
    max_letters: usize,
    max_terms: usize,
) -> Element {
    let t = rng.gen_range(1..=max_terms);
    let mut acc = Element::zero(n, parity);
    for _ in 0..t {
        let len = rng.gen_range(0..=max_letters);
        let mut atoms = Vec::new();
        for _ in 0..len {
            let idx = rng.gen_range(1..=n);
            if rng.gen_bool(0.5) {
                atoms.push(Atom::X(idx));
            } else {
                atoms.push(Atom::DBar(idx));
            }
        }
        atoms.push(Atom::Coeff(random_coeff(rng, n)));
        acc = acc.add(&normal_order(n, parity, &atoms));
    }
    acc
}

fn parity_name(parity: Parity) -> &'static str {
    match parity {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

/// Associativity of the diamond product on random triples.
pub fn associativity_check(
    ns: &[usize],
    parity: Parity,
    triples: usize,
    seed: u64,
) -> Check {
    let name = format!("associativity ({})", parity_name(parity));
    for &n in ns {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 8);
        let cases: Vec<(Element, Element, Element)> = (0..triples)
            .map(|_| {
                (
                    random_element(&mut rng, n, parity, 3, 2),
                    random_element(&mut rng, n, parity, 3, 2),
                    random_element(&mut rng, n, parity, 3, 2),
                )
            })
            .collect();
        let bad = cases.par_iter().enumerate().find_map_any(|(t, (u, v, w))| {
            let lhs = u.diamond(v).diamond(w);
            let rhs = u.diamond(&v.diamond(w));
            if lhs != rhs {
                Some(t)
            } else {
                None
            }
        });
        if let Some(t) = bad {
            return Check::from_result(
                name,
                Err(format!("triple {t} at n = {n} broke associativity")),
            );
        }
    }
    Check::pass(
        name,
        format!("{} random triples per n in {:?}", triples, ns),
    )
}

/// Unit laws of the diamond product.
pub fn unit_law_check(ns: &[usize], parity: Parity, count: usize, seed: u64) -> Check {
    let name = format!("unit laws ({})", parity_name(parity));
    for &n in ns {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1111 ^ (n as u64) << 8);
        let one = Element::unit(n, parity);
        for t in 0..count {
            let u = random_element(&mut rng, n, parity, 3, 2);
            if u.diamond(&one) != u || one.diamond(&u) != u {
                return Check::from_result(name, Err(format!("unit law failed at n={n}, {t}")));
            }
        }
    }
    Check::pass(name, format!("{count} random elements per rank"))
}

/// The contravariant anti-involution: involutive and product reversing.
pub fn epsilon_check(ns: &[usize], parity: Parity, count: usize, seed: u64) -> Check {
    let name = format!("epsilon anti-involution ({})", parity_name(parity));
    for &n in ns {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x2222 ^ (n as u64) << 8);
        for t in 0..count {
            let u = random_element(&mut rng, n, parity, 3, 2);
            if u.epsilon().epsilon() != u {
                return Check::from_result(name, Err(format!("double application at n={n}, {t}")));
            }
            let v = random_element(&mut rng, n, parity, 2, 2);
            if u.diamond(&v).epsilon() != v.epsilon().diamond(&u.epsilon()) {
                return Check::from_result(name, Err(format!("product reversal at n={n}, {t}")));
            }
        }
    }
    Check::pass(name, format!("{count} random elements per rank"))
}

/// The power-exchange identity between two raising generators.
pub fn power_relation_check(max_n: usize) -> Check {
    let name = "power exchange relation".to_string();
    for n in 2..=max_n {
        for i in 1..=n {
            for j in (i + 1)..=n {
                let h = RatFunc::hij(n, i, j);
                for a in 1u32..=3 {
                    for b in 1u32..=3 {
                        let mut lhs = Element::unit(n, Parity::Even);
                        for _ in 0..a {
                            lhs = lhs.diamond(&Element::x_gen(n, Parity::Even, i));
                        }
                        for _ in 0..b {
                            lhs = lhs.diamond(&Element::x_gen(n, Parity::Even, j));
                        }
                        let f = h
                            .add(&RatFunc::from_int(n, 1))
                            .pochhammer(a, PochDirection::Up)
                            .checked_div(
                                &h.sub(&RatFunc::from_int(n, b as i64 - 1))
                                    .pochhammer(a, PochDirection::Up),
                            )
                            .unwrap();
                        let mut word = vec![0u32; n];
                        word[i - 1] = a;
                        word[j - 1] = b;
                        let rhs =
                            Element::x_monomial(n, Parity::Even, MultiIndex::new(word)).scale(&f);
                        if lhs != rhs {
                            return Check::from_result(
                                name,
                                Err(format!("failed at n={n} i={i} j={j} a={a} b={b}")),
                            );
                        }
                    }
                }
            }
        }
    }
    Check::pass(name, format!("all i<j, a,b <= 3, n <= {max_n}"))
}

/// Ordering identities: a weakly descending raising word (strictly
/// descending in the odd case) is already normal with coefficient one.
pub fn ordering_identity_check(max_n: usize) -> Check {
    let name = "normal ordering of descending words".to_string();
    for n in 2..=max_n {
        for nu in pieri::compositions_up_to(n, 4) {
            let mut atoms = Vec::new();
            for i in (1..=n).rev() {
                for _ in 0..nu.get(i - 1) {
                    atoms.push(Atom::X(i));
                }
            }
            let e = normal_order(n, Parity::Even, &atoms);
            let expect = Element::x_monomial(n, Parity::Even, nu.clone());
            if e != expect {
                return Check::from_result(name, Err(format!("even word nu={nu} at n={n}")));
            }
        }
        for nu in pieri::binary_indices(n) {
            let mut atoms = Vec::new();
            for i in (1..=n).rev() {
                for _ in 0..nu.get(i - 1) {
                    atoms.push(Atom::X(i));
                }
            }
            let e = normal_order(n, Parity::Odd, &atoms);
            let expect = Element::x_monomial(n, Parity::Odd, nu.clone());
            if e != expect {
                return Check::from_result(name, Err(format!("odd word nu={nu} at n={n}")));
            }
        }
    }
    Check::pass(name, format!("all words up to degree 4, n <= {max_n}"))
}

/// Weight grading: products of homogeneous terms stay homogeneous.
pub fn weight_grading_check(ns: &[usize], parity: Parity, count: usize, seed: u64) -> Check {
    let name = format!("weight grading ({})", parity_name(parity));
    for &n in ns {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x3333 ^ (n as u64) << 8);
        for _ in 0..count {
            // single homogeneous words
            let u = random_element(&mut rng, n, parity, 2, 1);
            let v = random_element(&mut rng, n, parity, 2, 1);
            let wu = u.terms().next().map(|((a, b), _)| Element::term_weight(a, b));
            let wv = v.terms().next().map(|((a, b), _)| Element::term_weight(a, b));
            if let (Some(wu), Some(wv)) = (wu, wv) {
                let total: Vec<i64> = wu.iter().zip(&wv).map(|(a, b)| a + b).collect();
                for ((a, b), _) in u.diamond(&v).terms() {
                    if Element::term_weight(a, b) != total {
                        return Check::from_result(name, Err(format!("grading broken at n={n}")));
                    }
                }
            }
        }
    }
    Check::pass(name, format!("{count} random products per rank"))
}

/// Closed norm theorem: the contravariant form of a monomial with itself
/// equals the closed product, exactly.
pub fn norm_theorem_check(parity: Parity, ns: &[usize], max_deg: u32) -> Check {
    let name = format!("closed norms ({})", parity_name(parity));
    let mut cases = 0usize;
    for &n in ns {
        let nus = match parity {
            Parity::Even => pieri::compositions_up_to(n, max_deg),
            Parity::Odd => pieri::binary_indices(n),
        };
        cases += nus.len();
        let bad: Option<MultiIndex> = nus
            .par_iter()
            .find_map_any(|nu| {
                let m = PolyModuleElement::monomial(n, parity, nu);
                let direct = contravariant_form(&m, &m);
                if direct != closed_norm(n, nu, parity) {
                    Some(nu.clone())
                } else {
                    None
                }
            });
        if let Some(nu) = bad {
            return Check::from_result(name, Err(format!("mismatch at n={n}, nu={nu}")));
        }
    }
    Check::pass(name, format!("{cases} monomials over n in {ns:?}"))
}

/// Route agreement: the direct form, the long-composite route and the
/// shifted projector route coincide.
pub fn triple_route_check(parity: Parity, ns: &[usize], max_deg: u32) -> Check {
    let name = format!("triple route agreement ({})", parity_name(parity));
    let mut cases = 0usize;
    for &n in ns {
        let nus = match parity {
            Parity::Even => pieri::compositions_up_to(n, max_deg),
            Parity::Odd => pieri::binary_indices(n),
        };
        cases += nus.len();
        let bad: Option<(MultiIndex, &str)> = nus
            .par_iter()
            .find_map_any(|nu| {
                let m = PolyModuleElement::monomial(n, parity, nu);
                let direct = contravariant_form(&m, &m);
                let via_z = zhelobenko::form_via_zhelobenko(n, nu, nu, parity);
                if via_z != direct {
                    return Some((nu.clone(), "long composite"));
                }
                let via_p = form_via_shifted_projector(n, nu, nu, parity);
                if via_p != direct {
                    return Some((nu.clone(), "shifted projector"));
                }
                None
            });
        if let Some((nu, which)) = bad {
            return Check::from_result(name, Err(format!("{which} route at n={n}, nu={nu}")));
        }
    }
    Check::pass(name, format!("{cases} monomials, three routes each"))
}

/// Classical oracle agreement at generic rational weights.
pub fn oracle_check(
    even_ns: &[usize],
    even_deg: u32,
    odd_ns: &[usize],
    weights_per_case: u64,
) -> Check {
    let name = "classical oracle".to_string();
    let mut cases = 0usize;
    for &n in even_ns {
        let nus = pieri::compositions_up_to(n, even_deg);
        for salt in 0..weights_per_case {
            let mu = oracle::generic_weight(n, even_deg + 1, salt);
            cases += nus.len();
            let bad = nus.par_iter().find_map_any(|nu| {
                let a = oracle::oracle_norm(n, nu, &mu, Parity::Even).ok()?;
                let b = evaluate_norm(n, nu, &mu, Parity::Even).ok()?;
                if a != b {
                    Some(nu.clone())
                } else {
                    None
                }
            });
            if let Some(nu) = bad {
                return Check::from_result(
                    name,
                    Err(format!("even mismatch at n={n}, nu={nu}, mu={mu}")),
                );
            }
        }
    }
    for &n in odd_ns {
        let nus = pieri::binary_indices(n);
        for salt in 0..weights_per_case {
            let mu = oracle::generic_weight(n, 2, salt);
            cases += nus.len();
            let bad = nus.par_iter().find_map_any(|nu| {
                let a = oracle::oracle_norm(n, nu, &mu, Parity::Odd).ok()?;
                let b = evaluate_norm(n, nu, &mu, Parity::Odd).ok()?;
                if a != b {
                    Some(nu.clone())
                } else {
                    None
                }
            });
            if let Some(nu) = bad {
                return Check::from_result(
                    name,
                    Err(format!("odd mismatch at n={n}, nu={nu}, mu={mu}")),
                );
            }
        }
    }
    Check::pass(
        name,
        format!("{cases} norm comparisons at {weights_per_case} generic weights each"),
    )
}

/// The automorphism property on all defining relations: images of products
/// of generator pairs agree with products of images.
pub fn zhelobenko_homomorphism_check(ns: &[usize]) -> Check {
    let name = "automorphism property on defining relations".to_string();
    for &n in ns {
        for parity in [Parity::Even, Parity::Odd] {
            let mut gens = Vec::new();
            for i in 1..=n {
                gens.push(Element::x_gen(n, parity, i));
                gens.push(Element::dbar_gen(n, parity, i));
            }
            for c in 1..n {
                for u in &gens {
                    for v in &gens {
                        let lhs = zhelobenko::qcheck(c, &u.diamond(v));
                        let rhs = zhelobenko::qcheck(c, u).diamond(&zhelobenko::qcheck(c, v));
                        if lhs != rhs {
                            return Check::from_result(
                                name,
                                Err(format!(
                                    "failed at n={n} c={c} ({})",
                                    parity_name(parity)
                                )),
                            );
                        }
                    }
                }
            }
        }
    }
    Check::pass(name, format!("all generator pairs, n in {ns:?}"))
}

/// Braid relations on generators.
pub fn zhelobenko_braid_check(ns: &[usize]) -> Check {
    let name = "braid relations".to_string();
    for &n in ns {
        for parity in [Parity::Even, Parity::Odd] {
            let mut gens = Vec::new();
            for i in 1..=n {
                gens.push(Element::x_gen(n, parity, i));
                gens.push(Element::dbar_gen(n, parity, i));
            }
            for a in 1..n {
                for b in 1..n {
                    if a == b {
                        continue;
                    }
                    let adjacent = a.abs_diff(b) == 1;
                    for g in &gens {
                        let (lhs, rhs) = if adjacent {
                            (
                                zhelobenko::qcheck(a, &zhelobenko::qcheck(b, &zhelobenko::qcheck(a, g))),
                                zhelobenko::qcheck(b, &zhelobenko::qcheck(a, &zhelobenko::qcheck(b, g))),
                            )
                        } else {
                            (
                                zhelobenko::qcheck(a, &zhelobenko::qcheck(b, g)),
                                zhelobenko::qcheck(b, &zhelobenko::qcheck(a, g)),
                            )
                        };
                        if lhs != rhs {
                            return Check::from_result(
                                name,
                                Err(format!("braid failed at n={n}, a={a}, b={b}")),
                            );
                        }
                    }
                }
            }
        }
    }
    Check::pass(name, format!("generators for n in {ns:?}"))
}

/// The squared automorphism is conjugation by the root generator.
pub fn zhelobenko_inversion_check(ns: &[usize]) -> Check {
    let name = "inversion relation".to_string();
    for &n in ns {
        for i in 1..n {
            let h = RatFunc::hij(n, i, i + 1);
            let hinv = h.inverse().unwrap();
            for j in 1..=n {
                for u in [Element::x_gen(n, Parity::Even, j), Element::dbar_gen(n, Parity::Even, j)]
                {
                    let lhs = zhelobenko::qcheck(i, &zhelobenko::qcheck(i, &u));
                    let mut rhs = Element::zero(n, Parity::Even);
                    for ((a, b), c) in u.terms() {
                        let w = Element::term_weight(a, b);
                        rhs = rhs.add(&Element::term(
                            Parity::Even,
                            a.clone(),
                            b.clone(),
                            hinv.shift(&w).mul(&h).mul(c),
                        ));
                    }
                    if lhs != rhs {
                        return Check::from_result(
                            name,
                            Err(format!("conjugation identity failed at n={n}, i={i}, j={j}")),
                        );
                    }
                }
            }
        }
    }
    Check::pass(name, format!("all generators, n in {ns:?}"))
}

/// The two long composites are mutually inverse on monomials.
pub fn zhelobenko_long_inverse_check(ns: &[usize], max_deg: u32) -> Check {
    let name = "long composites are mutually inverse".to_string();
    let mut cases = 0usize;
    for &n in ns {
        let nus = pieri::compositions_up_to(n, max_deg);
        cases += nus.len();
        let bad = nus.par_iter().find_map_any(|nu| {
            let m = Element::x_monomial(n, Parity::Even, nu.clone());
            if zhelobenko::qcheck_w0(&zhelobenko::xicheck_w0(&m)) != m
                || zhelobenko::xicheck_w0(&zhelobenko::qcheck_w0(&m)) != m
            {
                Some(nu.clone())
            } else {
                None
            }
        });
        if let Some(nu) = bad {
            return Check::from_result(name, Err(format!("failed at n={n}, nu={nu}")));
        }
    }
    Check::pass(name, format!("{cases} monomials over n in {ns:?}"))
}

/// Covariance of the form under one automorphism step on random pairs.
pub fn zhelobenko_covariance_check(ns: &[usize], count: usize, seed: u64) -> Check {
    let name = "covariance of the form".to_string();
    for &n in ns {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4444 ^ (n as u64) << 8);
        for _ in 0..count {
            // random module elements as sums of monomial classes
            let mut u = PolyModuleElement::zero(n, Parity::Even);
            let mut v = PolyModuleElement::zero(n, Parity::Even);
            for _ in 0..2 {
                let nu = MultiIndex::new((0..n).map(|_| rng.gen_range(0..3u32)).collect());
                u = u.add(&PolyModuleElement::monomial(n, Parity::Even, &nu)
                    .scale(&random_coeff(&mut rng, n)));
                let nv = MultiIndex::new((0..n).map(|_| rng.gen_range(0..3u32)).collect());
                v = v.add(&PolyModuleElement::monomial(n, Parity::Even, &nv)
                    .scale(&random_coeff(&mut rng, n)));
            }
            let value = contravariant_form(&u, &v);
            for i in 1..n {
                let lhs = value.weyl_permute(&crate::coeffs::Perm::simple(i, n));
                let to_module = |e: &Element| {
                    let mut p = PolyModuleElement::zero(n, Parity::Even);
                    for ((a, b), c) in e.terms() {
                        assert!(b.is_zero());
                        p = p.add(&PolyModuleElement::monomial(n, Parity::Even, a).scale(c));
                    }
                    p
                };
                let xi_u = to_module(&zhelobenko::xicheck(i, &u.to_element()));
                let q_v = to_module(&zhelobenko::qcheck(i, &v.to_element()));
                let rhs = contravariant_form(&xi_u, &q_v);
                if lhs != rhs {
                    return Check::from_result(name, Err(format!("failed at n={n}, i={i}")));
                }
            }
        }
    }
    Check::pass(name, format!("{count} random pairs per rank"))
}

/// Norm-zero against strip combinatorics, with dimension accounting.
pub fn pieri_equivalence_check(max_mu: u32, max_n: usize, max_m: u32) -> Check {
    let name = "Pieri equivalence and dimensions".to_string();
    let mut cases = 0usize;
    for n in 1..=max_n {
        let mus = pieri::partitions_up_to(max_mu, n);
        for mu in &mus {
            for m in 0..=max_m {
                cases += 1;
                let d = pieri::pieri_decompose(mu, m, n);
                let mu_n = mu.padded(n);
                for (nu, status) in &d.entries {
                    match status {
                        pieri::NuStatus::Included { lambda, .. } => {
                            if !pieri::horizontal_strip(&mu_n, lambda) {
                                return Check::from_result(
                                    name,
                                    Err(format!(
                                        "nonzero norm without strip: mu={mu}, nu={nu}, n={n}"
                                    )),
                                );
                            }
                        }
                        pieri::NuStatus::ZeroNorm { lambda } => {
                            if pieri::horizontal_strip(&mu_n, lambda) {
                                return Check::from_result(
                                    name,
                                    Err(format!(
                                        "zero norm on a strip: mu={mu}, nu={nu}, n={n}"
                                    )),
                                );
                            }
                        }
                        _ => {}
                    }
                }
                if d.dimension_sum() != d.expected_dimension() {
                    return Check::from_result(
                        name,
                        Err(format!("dimension sum failed: mu={mu}, m={m}, n={n}")),
                    );
                }
                if m as usize <= n {
                    let d = pieri::dual_pieri_decompose(mu, m, n);
                    for (nu, status) in &d.entries {
                        match status {
                            pieri::NuStatus::Included { lambda, .. } => {
                                if !pieri::vertical_strip(&mu_n, lambda) {
                                    return Check::from_result(
                                        name,
                                        Err(format!(
                                            "dual: nonzero norm without strip: mu={mu}, nu={nu}"
                                        )),
                                    );
                                }
                            }
                            pieri::NuStatus::ZeroNorm { lambda } => {
                                if pieri::vertical_strip(&mu_n, lambda) {
                                    return Check::from_result(
                                        name,
                                        Err(format!(
                                            "dual: zero norm on a strip: mu={mu}, nu={nu}"
                                        )),
                                    );
                                }
                            }
                            _ => {}
                        }
                    }
                    if d.dimension_sum() != d.expected_dimension() {
                        return Check::from_result(
                            name,
                            Err(format!("dual dimension sum failed: mu={mu}, m={m}, n={n}")),
                        );
                    }
                }
            }
        }
    }
    Check::pass(
        name,
        format!("{cases} (mu, m) cases, |mu| <= {max_mu}, n <= {max_n}, m <= {max_m}"),
    )
}

/// The rank-two module action table at several generic weights.
pub fn gl2_table_check(weights: u64) -> Check {
    let name = "rank-two module action table".to_string();
    for salt in 0..weights {
        let mu = oracle::generic_weight(2, 2, salt);
        match oracle::gl2_example_check(&mu) {
            Ok(report) => {
                if !report.all_passed() {
                    let failed: Vec<_> = report
                        .checks
                        .iter()
                        .filter(|(_, ok)| !ok)
                        .map(|(name, _)| name.clone())
                        .collect();
                    return Check::from_result(
                        name,
                        Err(format!("failed at mu={mu}: {failed:?}")),
                    );
                }
            }
            Err(e) => return Check::from_result(name, Err(e.to_string())),
        }
    }
    Check::pass(name, format!("12 identities at {weights} generic weights"))
}

/// Module action axiom on random elements.
pub fn module_action_check(ns: &[usize], parity: Parity, count: usize, seed: u64) -> Check {
    let name = format!("module action axiom ({})", parity_name(parity));
    for &n in ns {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5555 ^ (n as u64) << 8);
        for _ in 0..count {
            let u = random_element(&mut rng, n, parity, 2, 2);
            let v = random_element(&mut rng, n, parity, 2, 2);
            let nu = match parity {
                Parity::Even => MultiIndex::new((0..n).map(|_| rng.gen_range(0..3u32)).collect()),
                Parity::Odd => MultiIndex::new((0..n).map(|_| rng.gen_range(0..2u32)).collect()),
            };
            let p = PolyModuleElement::monomial(n, parity, &nu);
            let lhs = act(&u.diamond(&v), &p);
            let rhs = act(&u, &act(&v, &p));
            if lhs != rhs {
                return Check::from_result(name, Err(format!("failed at n={n}, nu={nu}")));
            }
        }
    }
    Check::pass(name, format!("{count} random actions per rank"))
}

/// Print/parse round trip on random elements.
pub fn roundtrip_check(ns: &[usize], count: usize, seed: u64) -> Check {
    let name = "print/parse round trip".to_string();
    let mut total = 0usize;
    for &n in ns {
        for parity in [Parity::Even, Parity::Odd] {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6666 ^ (n as u64) << 8);
            for _ in 0..count {
                total += 1;
                let u = random_element(&mut rng, n, parity, 3, 3);
                let s = u.to_string();
                match crate::expr::parse_expr(&s, n, parity) {
                    Ok(back) => {
                        if back != u {
                            return Check::from_result(
                                name,
                                Err(format!("round trip changed value for '{s}'")),
                            );
                        }
                    }
                    Err(e) => {
                        return Check::from_result(
                            name,
                            Err(format!("printed form '{s}' failed to parse: {e}")),
                        )
                    }
                }
            }
        }
    }
    Check::pass(name, format!("{total} random elements"))
}

/// The structural suites behind the self test, at two sizes.
pub fn run_suites(full: bool, seed: u64) -> Vec<Check> {
    let ns: &[usize] = if full { &[2, 3, 4] } else { &[2, 3] };
    let triples = if full { 200 } else { 25 };
    let count = if full { 50 } else { 10 };
    let mut checks = vec![
        associativity_check(ns, Parity::Even, triples, seed),
        associativity_check(ns, Parity::Odd, triples, seed),
        unit_law_check(ns, Parity::Even, count, seed),
        unit_law_check(ns, Parity::Odd, count, seed),
        epsilon_check(ns, Parity::Even, count, seed),
        epsilon_check(ns, Parity::Odd, count, seed),
        power_relation_check(if full { 4 } else { 3 }),
        ordering_identity_check(if full { 4 } else { 3 }),
        weight_grading_check(ns, Parity::Even, count, seed),
        weight_grading_check(ns, Parity::Odd, count, seed),
        module_action_check(&[2, 3], Parity::Even, count, seed),
        module_action_check(&[2, 3], Parity::Odd, count, seed),
        zhelobenko_homomorphism_check(if full { &[2, 3, 4] } else { &[2, 3] }),
        zhelobenko_braid_check(if full { &[3, 4] } else { &[3] }),
        zhelobenko_inversion_check(&[2, 3]),
        zhelobenko_long_inverse_check(&[2, 3], 3),
        zhelobenko_covariance_check(&[2, 3], count.min(20), seed),
        roundtrip_check(&[2, 3], count, seed),
        gl2_table_check(3),
    ];
    if full {
        checks.push(norm_theorem_check(Parity::Even, &[2, 3, 4], 5));
        checks.push(norm_theorem_check(Parity::Odd, &[1, 2, 3, 4, 5], 0));
        checks.push(triple_route_check(Parity::Even, &[2, 3, 4], 5));
        checks.push(triple_route_check(Parity::Odd, &[1, 2, 3, 4, 5], 0));
        checks.push(oracle_check(&[2, 3], 4, &[2, 3, 4], 3));
        checks.push(pieri_equivalence_check(8, 5, 4));
    } else {
        checks.push(norm_theorem_check(Parity::Even, &[2, 3], 3));
        checks.push(norm_theorem_check(Parity::Odd, &[2, 3], 0));
        checks.push(triple_route_check(Parity::Even, &[2], 3));
        checks.push(oracle_check(&[2], 3, &[2, 3], 1));
        checks.push(pieri_equivalence_check(4, 3, 2));
    }
    checks
}
