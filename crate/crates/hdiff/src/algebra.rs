//! Normal-ordered elements of the deformed differential operator algebras
//! and the diamond product, realized by a terminating rewriting system on
//! generator words.
//!
//! A normal term is a word with the raising generators first (indices
//! descending), then the lowering generators (indices ascending), then a
//! coefficient from the Cartan field on the far right. The rewriting engine
//! repeatedly fixes the leftmost out-of-order adjacent pair using the
//! defining relations, transporting every coefficient it creates to the far
//! right through the weight shift.
//!
//! The same engine serves the even algebra (polynomial variables) and the
//! odd one (Grassmann variables); the relation coefficients differ by signs
//! and by nilpotence of repeated odd generators.

use crate::coeffs::{Poly, RatFunc};
use std::collections::BTreeMap;
use std::fmt;

/// Which of the two deformed algebras an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A single generator letter: `X(i)` raises, `D(i)` lowers (1-based).
///
/// In the even algebra these are the polynomial variable and the modified
/// derivative; in the odd algebra the Grassmann variable and its modified
/// derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Letter {
    X(usize),
    D(usize),
}

impl Letter {
    fn weight_into(&self, w: &mut [i64], sign: i64) {
        match self {
            Letter::X(i) => w[i - 1] += sign,
            Letter::D(i) => w[i - 1] -= sign,
        }
    }
}

/// An exponent vector; the weight datum of monomials and norms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn from_slice(entries: &[u32]) -> Self {
        MultiIndex(entries.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn weight(&self) -> Vec<i64> {
        self.0.iter().map(|&e| e as i64).collect()
    }

    /// Apply a permutation of positions: entry `j` moves to `perm(j)`.
    pub fn permute(&self, perm: &crate::coeffs::Perm) -> MultiIndex {
        let mut out = vec![0u32; self.0.len()];
        for (j, &e) in self.0.iter().enumerate() {
            out[perm.apply(j)] = e;
        }
        MultiIndex(out)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        Ok(())
    }
}

/// One item of an input word: a generator or an interleaved coefficient.
///
/// `DPlain` is the unmodified derivative; it is rewritten into the modified
/// one on entry to the engine.
#[derive(Debug, Clone)]
pub enum Atom {
    X(usize),
    DPlain(usize),
    DBar(usize),
    Coeff(RatFunc),
}

/// A finite sum of normal-ordered terms with coefficients on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    n: usize,
    parity: Parity,
    terms: BTreeMap<(MultiIndex, MultiIndex), RatFunc>,
}

impl Element {
    pub fn zero(n: usize, parity: Parity) -> Self {
        Element {
            n,
            parity,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(n: usize, parity: Parity) -> Self {
        Element::term(
            parity,
            MultiIndex::zero(n),
            MultiIndex::zero(n),
            RatFunc::one(n),
        )
    }

    pub fn term(parity: Parity, a: MultiIndex, b: MultiIndex, c: RatFunc) -> Self {
        let n = a.len();
        assert_eq!(b.len(), n);
        assert_eq!(c.n(), n);
        if parity == Parity::Odd {
            assert!(a.is_binary() && b.is_binary(), "odd exponents must be 0/1");
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Element { n, parity, terms }
    }

    /// The raising generator as an element.
    pub fn x_gen(n: usize, parity: Parity, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "generator index out of range");
        let mut a = vec![0u32; n];
        a[i - 1] = 1;
        Element::term(
            parity,
            MultiIndex::new(a),
            MultiIndex::zero(n),
            RatFunc::one(n),
        )
    }

    /// The modified lowering generator as an element.
    pub fn dbar_gen(n: usize, parity: Parity, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "generator index out of range");
        let mut b = vec![0u32; n];
        b[i - 1] = 1;
        Element::term(
            parity,
            MultiIndex::zero(n),
            MultiIndex::new(b),
            RatFunc::one(n),
        )
    }

    /// The plain lowering generator, expressed in the modified basis.
    pub fn d_plain_gen(n: usize, parity: Parity, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "generator index out of range");
        let mut b = vec![0u32; n];
        b[i - 1] = 1;
        Element::term(
            parity,
            MultiIndex::zero(n),
            MultiIndex::new(b),
            phi_prime(n, i),
        )
    }

    /// The normal monomial with raising exponents `a` (coefficient one).
    pub fn x_monomial(n: usize, parity: Parity, a: MultiIndex) -> Self {
        Element::term(parity, a, MultiIndex::zero(n), RatFunc::one(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(MultiIndex, MultiIndex), &RatFunc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, a: &MultiIndex, b: &MultiIndex) -> RatFunc {
        self.terms
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(self.n))
    }

    pub(crate) fn add_term(&mut self, key: (MultiIndex, MultiIndex), c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.n, other.n);
        assert_eq!(self.parity, other.parity);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            n: self.n,
            parity: self.parity,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.neg()))
                .collect(),
        }
    }

    /// Right multiplication by a Cartan coefficient.
    pub fn scale(&self, f: &RatFunc) -> Element {
        let mut out = Element::zero(self.n, self.parity);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.mul(f));
        }
        out
    }

    /// The word of one normal term, without its coefficient.
    pub(crate) fn term_letters(a: &MultiIndex, b: &MultiIndex) -> Vec<Letter> {
        let n = a.len();
        let mut letters = Vec::new();
        for i in (1..=n).rev() {
            for _ in 0..a.get(i - 1) {
                letters.push(Letter::X(i));
            }
        }
        for i in 1..=n {
            for _ in 0..b.get(i - 1) {
                letters.push(Letter::D(i));
            }
        }
        letters
    }

    /// Right multiplication by a single generator letter, collecting the
    /// result in normal form.
    pub(crate) fn mul_letter(&self, l: Letter, opts: RewriteOpts) -> Element {
        let mut out = Element::zero(self.n, self.parity);
        let mut wl = vec![0i64; self.n];
        l.weight_into(&mut wl, 1);
        for ((a, b), c) in &self.terms {
            let mut word = Element::term_letters(a, b);
            word.push(l);
            rewrite(self.n, self.parity, word, c.shift(&wl), opts, &mut out);
        }
        out
    }

    /// Keep only the terms whose lowering degree is at most `bound`.
    pub(crate) fn retain_lowering_degree(&self, bound: u32) -> Element {
        Element {
            n: self.n,
            parity: self.parity,
            terms: self
                .terms
                .iter()
                .filter(|((_, b), _)| b.degree() <= bound)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keep only the terms that can still reach the Harish-Chandra
    /// component after `remaining` more raising letters: the raising part
    /// must be empty (settled raising letters are permanent) and the
    /// lowering degree must not exceed the budget.
    pub(crate) fn retain_hc_reachable(&self, remaining: u32) -> Element {
        Element {
            n: self.n,
            parity: self.parity,
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| a.is_zero() && b.degree() <= remaining)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// The diamond product. Letters of the right factor are multiplied in
    /// one at a time so that like terms collect as early as possible.
    pub fn diamond(&self, other: &Element) -> Element {
        assert_eq!(self.n, other.n);
        assert_eq!(self.parity, other.parity);
        let mut out = Element::zero(self.n, self.parity);
        for ((a2, b2), c2) in &other.terms {
            let mut cur = self.clone();
            for l in Element::term_letters(a2, b2) {
                cur = cur.mul_letter(l, RewriteOpts::default());
                if cur.is_zero() {
                    break;
                }
            }
            out = out.add(&cur.scale(c2));
        }
        out
    }

    /// The contravariant anti-involution: swaps raising and lowering
    /// generators, fixes the Cartan field pointwise, reverses products.
    pub fn epsilon(&self) -> Element {
        let mut out = Element::zero(self.n, self.parity);
        for ((a, b), c) in &self.terms {
            let mut atoms: Vec<Atom> = vec![Atom::Coeff(c.clone())];
            for j in (1..=self.n).rev() {
                for _ in 0..b.get(j - 1) {
                    atoms.push(Atom::Coeff(phi_prime_inv(self.n, j)));
                    atoms.push(Atom::X(j));
                }
            }
            for i in 1..=self.n {
                for _ in 0..a.get(i - 1) {
                    atoms.push(Atom::DPlain(i));
                }
            }
            out = out.add(&normal_order(self.n, self.parity, &atoms));
        }
        out
    }

    /// Harish-Chandra projection: the coefficient of the empty word. In the
    /// normal basis every term with lowering letters lies in the left ideal
    /// they generate, and every remaining term with raising letters lies in
    /// the corresponding right ideal, so the projection is this extraction.
    pub fn hc_project(&self) -> RatFunc {
        self.coeff(&MultiIndex::zero(self.n), &MultiIndex::zero(self.n))
    }

    /// Reinterpret lowering exponents as plain derivatives and convert to
    /// the modified basis.
    pub fn to_dbar(&self) -> Element {
        let mut out = Element::zero(self.n, self.parity);
        for ((a, b), c) in &self.terms {
            let mut atoms: Vec<Atom> = Vec::new();
            for i in (1..=self.n).rev() {
                for _ in 0..a.get(i - 1) {
                    atoms.push(Atom::X(i));
                }
            }
            for i in 1..=self.n {
                for _ in 0..b.get(i - 1) {
                    atoms.push(Atom::DPlain(i));
                }
            }
            atoms.push(Atom::Coeff(c.clone()));
            out = out.add(&normal_order(self.n, self.parity, &atoms));
        }
        out
    }

    /// Convert the modified lowering basis back to plain derivatives; the
    /// result's lowering exponents denote plain derivatives.
    pub fn from_dbar(&self) -> Element {
        let mut out = Element::zero(self.n, self.parity);
        for ((a, b), c) in &self.terms {
            let mut acc = RatFunc::one(self.n);
            let mut w = vec![0i64; self.n];
            for j in (1..=self.n).rev() {
                for _ in 0..b.get(j - 1) {
                    acc = acc.mul(&phi_prime_inv(self.n, j).shift(&w));
                    w[j - 1] -= 1;
                }
            }
            out.add_term((a.clone(), b.clone()), acc.mul(c));
        }
        out
    }

    /// The weight of a term: raising letters count positive, lowering
    /// letters negative.
    pub fn term_weight(a: &MultiIndex, b: &MultiIndex) -> Vec<i64> {
        a.entries()
            .iter()
            .zip(b.entries())
            .map(|(&x, &d)| x as i64 - d as i64)
            .collect()
    }
}

/// Normal-order a word of generators with optional interleaved coefficients.
pub fn normal_order(n: usize, parity: Parity, atoms: &[Atom]) -> Element {
    // First pass: expand plain derivatives and push all coefficients to the
    // far right, shifting each by the weight of the letters it crosses.
    let mut flat: Vec<Atom> = Vec::new();
    for atom in atoms {
        match atom {
            Atom::DPlain(i) => {
                assert!(*i >= 1 && *i <= n, "generator index out of range");
                flat.push(Atom::DBar(*i));
                flat.push(Atom::Coeff(phi_prime(n, *i)));
            }
            other => flat.push(other.clone()),
        }
    }
    let mut w = vec![0i64; n];
    let mut coeff = RatFunc::one(n);
    let mut letters_rev: Vec<Letter> = Vec::new();
    for atom in flat.iter().rev() {
        match atom {
            Atom::X(i) => {
                assert!(*i >= 1 && *i <= n, "generator index out of range");
                letters_rev.push(Letter::X(*i));
                Letter::X(*i).weight_into(&mut w, 1);
            }
            Atom::DBar(i) => {
                assert!(*i >= 1 && *i <= n, "generator index out of range");
                letters_rev.push(Letter::D(*i));
                Letter::D(*i).weight_into(&mut w, 1);
            }
            Atom::Coeff(c) => {
                coeff = coeff.mul(&c.shift(&w));
            }
            Atom::DPlain(_) => unreachable!(),
        }
    }
    letters_rev.reverse();
    let mut out = Element::zero(n, parity);
    rewrite(n, parity, letters_rev, coeff, RewriteOpts::default(), &mut out);
    out
}

/// Pruning switches for the rewriting engine. `drop_trailing_lowering`
/// discards words ending in a lowering letter (valid when nothing will be
/// appended after them); `drop_leading_raising` discards words starting
/// with a raising letter (valid when only the empty word matters in the
/// end, since a raising letter with nothing to its left is permanent).
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct RewriteOpts {
    pub drop_trailing_lowering: bool,
    pub drop_leading_raising: bool,
}

type Worklist = BTreeMap<(u64, Vec<Letter>), RatFunc>;

/// The strictly decreasing rewrite measure: lowering-before-raising pairs
/// count quadratically more than the ordering inversions they dominate.
fn word_measure(word: &[Letter]) -> u64 {
    let mut disorder = 0u64;
    let mut inversions = 0u64;
    for i in 0..word.len() {
        for j in (i + 1)..word.len() {
            match (word[i], word[j]) {
                (Letter::D(_), Letter::X(_)) => disorder += 1,
                (Letter::X(a), Letter::X(b)) if a < b => inversions += 1,
                (Letter::D(a), Letter::D(b)) if a > b => inversions += 1,
                _ => {}
            }
        }
    }
    disorder * 1_000_000 + inversions
}

fn merge_word(worklist: &mut Worklist, word: Vec<Letter>, acc: RatFunc) {
    if acc.is_zero() {
        return;
    }
    let key = (word_measure(&word), word);
    match worklist.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(acc);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(&acc);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

fn suffix_weight(n: usize, word: &[Letter], from: usize) -> Vec<i64> {
    let mut w = vec![0i64; n];
    for l in &word[from..] {
        l.weight_into(&mut w, 1);
    }
    w
}

fn find_descent(word: &[Letter], parity: Parity) -> Option<usize> {
    for p in 0..word.len().saturating_sub(1) {
        match (word[p], word[p + 1]) {
            (Letter::X(i), Letter::X(j)) => {
                if i < j || (parity == Parity::Odd && i == j) {
                    return Some(p);
                }
            }
            (Letter::D(i), Letter::D(j)) => {
                if i > j || (parity == Parity::Odd && i == j) {
                    return Some(p);
                }
            }
            (Letter::D(_), Letter::X(_)) => return Some(p),
            (Letter::X(_), Letter::D(_)) => {}
        }
    }
    None
}

fn ratio(num: Poly, den: Poly) -> RatFunc {
    RatFunc::from_ratio(num, den).expect("relation denominator is nonzero")
}

fn hij(n: usize, i: usize, j: usize) -> Poly {
    Poly::var(n, i - 1).sub(&Poly::var(n, j - 1))
}

/// Kinds of local rule coefficients, cached per `(n, parity, i, j)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Rule {
    /// swap of two raising letters `X(i) X(j)`, `i < j`
    XxSwap,
    /// swap of two lowering letters `D(i) D(j)`, `i > j`
    DdSwap,
    /// crossing `D(d) X(x)` with `d > x` (stored as `(x, d)`)
    DxCross,
    /// contraction branch `D(d) X(d) -> X(j) D(j)` (stored as `(d, j)`)
    Contract,
}

fn rule_coeff(n: usize, parity: Parity, rule: Rule, i: usize, j: usize) -> RatFunc {
    thread_local! {
        static CACHE: std::cell::RefCell<
            std::collections::HashMap<(usize, Parity, Rule, usize, usize), RatFunc>,
        > = std::cell::RefCell::new(std::collections::HashMap::new());
    }
    CACHE.with(|cache| {
        if let Some(f) = cache.borrow().get(&(n, parity, rule, i, j)) {
            return f.clone();
        }
        let odd = parity == Parity::Odd;
        let f = match rule {
            Rule::XxSwap => {
                let h = hij(n, i, j);
                match parity {
                    Parity::Even => ratio(h.add(&Poly::one(n)), h),
                    Parity::Odd => ratio(h.sub(&Poly::one(n)).neg(), h),
                }
            }
            Rule::DdSwap => {
                let h = hij(n, j, i);
                match parity {
                    Parity::Even => ratio(h.clone(), h.sub(&Poly::one(n))),
                    Parity::Odd => ratio(h.neg(), h.add(&Poly::one(n))),
                }
            }
            Rule::DxCross => {
                let h = hij(n, i, j);
                let num = h.add(&Poly::from_int(n, 2)).mul(&h);
                let den = h.add(&Poly::one(n)).pow(2);
                let r = ratio(num, den);
                if odd {
                    r.neg()
                } else {
                    r
                }
            }
            Rule::Contract => {
                let r = if i == j {
                    RatFunc::one(n)
                } else {
                    ratio(Poly::one(n), Poly::one(n).add(&hij(n, i, j)))
                };
                if odd {
                    r.neg()
                } else {
                    r
                }
            }
        };
        cache
            .borrow_mut()
            .insert((n, parity, rule, i, j), f.clone());
        f
    })
}

fn rewrite(
    n: usize,
    parity: Parity,
    word: Vec<Letter>,
    base: RatFunc,
    opts: RewriteOpts,
    out: &mut Element,
) {
    if base.is_zero() {
        return;
    }
    let odd = parity == Parity::Odd;
    // The worklist carries only the accumulated rule factors, which stay
    // small; the base coefficient multiplies in once per emitted word.
    // Identical intermediate words from different rewrite paths merge, and
    // since every rewrite strictly decreases the disorder measure, popping
    // the largest measure first guarantees each distinct word is processed
    // exactly once, after all contributions to it have arrived.
    let mut worklist: Worklist = BTreeMap::new();
    merge_word(&mut worklist, word, RatFunc::one(n));
    while let Some(((_, word), acc)) = worklist.pop_last() {
        if acc.is_zero() {
            continue;
        }
        if opts.drop_trailing_lowering {
            if let Some(Letter::D(_)) = word.last() {
                // a trailing lowering letter can never be eliminated
                continue;
            }
        }
        if opts.drop_leading_raising {
            if let Some(Letter::X(_)) = word.first() {
                // a raising letter with nothing to its left is permanent
                continue;
            }
        }
        let p = match find_descent(&word, parity) {
            None => {
                // split the normal word into exponent vectors
                let mut a = vec![0u32; n];
                let mut b = vec![0u32; n];
                for l in &word {
                    match l {
                        Letter::X(i) => a[i - 1] += 1,
                        Letter::D(i) => b[i - 1] += 1,
                    }
                }
                out.add_term((MultiIndex::new(a), MultiIndex::new(b)), base.mul(&acc));
                continue;
            }
            Some(p) => p,
        };
        let wsuf = suffix_weight(n, &word, p + 2);
        match (word[p], word[p + 1]) {
            (Letter::X(i), Letter::X(j)) => {
                if i == j {
                    // odd square is zero
                    continue;
                }
                // swap with the relation coefficient; the fraction is
                // invariant under the weight of the pair, so the local right
                // coefficient equals the printed one
                let f = rule_coeff(n, parity, Rule::XxSwap, i, j);
                let mut w2 = word.clone();
                w2.swap(p, p + 1);
                merge_word(&mut worklist, w2, acc.mul(&f.shift(&wsuf)));
            }
            (Letter::D(i), Letter::D(j)) => {
                if i == j {
                    continue;
                }
                // i > j here; the defining relation solved for the swapped pair
                let f = rule_coeff(n, parity, Rule::DdSwap, i, j);
                let mut w2 = word.clone();
                w2.swap(p, p + 1);
                merge_word(&mut worklist, w2, acc.mul(&f.shift(&wsuf)));
            }
            (Letter::D(d), Letter::X(x)) => {
                if d != x {
                    let f = if d > x {
                        rule_coeff(n, parity, Rule::DxCross, x, d)
                    } else if odd {
                        RatFunc::from_int(n, -1)
                    } else {
                        RatFunc::one(n)
                    };
                    let mut w2 = word.clone();
                    w2.swap(p, p + 1);
                    merge_word(&mut worklist, w2, acc.mul(&f.shift(&wsuf)));
                } else {
                    // contraction: a sum over all indices plus the unit term
                    for j in 1..=n {
                        let f = rule_coeff(n, parity, Rule::Contract, d, j);
                        let mut w2 = Vec::with_capacity(word.len());
                        w2.extend_from_slice(&word[..p]);
                        w2.push(Letter::X(j));
                        w2.push(Letter::D(j));
                        w2.extend_from_slice(&word[p + 2..]);
                        merge_word(&mut worklist, w2, acc.mul(&f.shift(&wsuf)));
                    }
                    let mut w2 = Vec::with_capacity(word.len() - 2);
                    w2.extend_from_slice(&word[..p]);
                    w2.extend_from_slice(&word[p + 2..]);
                    merge_word(&mut worklist, w2, acc.clone());
                }
            }
            (Letter::X(_), Letter::D(_)) => unreachable!("not a descent"),
        }
    }
}

/// The triangular change-of-basis factor between plain and modified
/// lowering generators.
pub fn phi_prime(n: usize, j: usize) -> RatFunc {
    let mut num = Poly::one(n);
    let mut den = Poly::one(n);
    for k in 1..j {
        let h = hij(n, j, k);
        num = num.mul(&h);
        den = den.mul(&h.sub(&Poly::one(n)));
    }
    ratio(num, den)
}

pub fn phi_prime_inv(n: usize, j: usize) -> RatFunc {
    phi_prime(n, j)
        .inverse()
        .expect("phi_prime is invertible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::RatFunc;

    fn x(n: usize, i: usize) -> Element {
        Element::x_gen(n, Parity::Even, i)
    }

    fn dbar(n: usize, i: usize) -> Element {
        Element::dbar_gen(n, Parity::Even, i)
    }

    fn h12f(n: usize) -> RatFunc {
        RatFunc::hij(n, 1, 2)
    }

    fn int(n: usize, c: i64) -> RatFunc {
        RatFunc::from_int(n, c)
    }

    #[test]
    fn defining_relation_xx() {
        // x1 . x2 = x2 . x1 * (h12+1)/h12
        let n = 2;
        let lhs = x(n, 1).diamond(&x(n, 2));
        let f = h12f(n)
            .add(&int(n, 1))
            .checked_div(&h12f(n))
            .unwrap();
        let rhs = x(n, 2).diamond(&x(n, 1)).scale(&f);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn defining_relation_contraction_n1() {
        // dbar1 . x1 = 1 + x1 . dbar1 for n = 1
        let n = 1;
        let lhs = dbar(n, 1).diamond(&x(n, 1));
        let rhs = Element::unit(n, Parity::Even).add(&x(n, 1).diamond(&dbar(n, 1)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn defining_relation_cross_n2() {
        // dbar2 . x1 = h12(h12-2)/(h12-1)^2 * x1 . dbar2, coefficient on the
        // left as in the defining relation
        let n = 2;
        let lhs = dbar(n, 2).diamond(&x(n, 1));
        let num = h12f(n).mul(&h12f(n).sub(&int(n, 2)));
        let den = h12f(n).sub(&int(n, 1)).powi(2);
        let f = num.checked_div(&den).unwrap();
        let rhs = normal_order(
            n,
            Parity::Even,
            &[Atom::Coeff(f), Atom::X(1), Atom::DBar(2)],
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_relation() {
        // x1^2 . x2 = x2 . x1^2 * (h12+1)^{up 2} / h12^{up 2}
        use crate::coeffs::PochDirection;
        let n = 2;
        let lhs = x(n, 1).diamond(&x(n, 1)).diamond(&x(n, 2));
        let f = h12f(n)
            .add(&int(n, 1))
            .pochhammer(2, PochDirection::Up)
            .checked_div(&h12f(n).pochhammer(2, PochDirection::Up))
            .unwrap();
        let rhs = x(n, 2)
            .diamond(&x(n, 1))
            .diamond(&x(n, 1))
            .scale(&f);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_order_examples() {
        let n = 2;
        // descending word stays put with coefficient one
        let e = normal_order(n, Parity::Even, &[Atom::X(2), Atom::X(1)]);
        assert_eq!(
            e,
            Element::term(
                Parity::Even,
                MultiIndex::new(vec![1, 1]),
                MultiIndex::zero(n),
                RatFunc::one(n)
            )
        );
        // ascending word picks up the relation coefficient
        let e = normal_order(n, Parity::Even, &[Atom::X(1), Atom::X(2)]);
        let f = h12f(n).add(&int(n, 1)).checked_div(&h12f(n)).unwrap();
        assert_eq!(
            e,
            Element::term(
                Parity::Even,
                MultiIndex::new(vec![1, 1]),
                MultiIndex::zero(n),
                f
            )
        );
        // the empty word is the unit
        let e = normal_order(n, Parity::Even, &[]);
        assert_eq!(e, Element::unit(n, Parity::Even));
    }

    #[test]
    fn epsilon_on_generators() {
        // eps(x1) = d1 = dbar1 (the change-of-basis factor is empty at 1)
        let n = 2;
        let e = x(n, 1).epsilon();
        assert_eq!(e, dbar(n, 1));
        // eps(dbar2) = x2 * h21/(h21+1)
        let e = dbar(n, 2).epsilon();
        let h21 = RatFunc::hij(n, 2, 1);
        let f = h21.checked_div(&h21.add(&int(n, 1))).unwrap();
        assert_eq!(e, x(n, 2).scale(&f));
    }

    #[test]
    fn epsilon_involution_small() {
        let n = 2;
        let u = x(n, 1)
            .diamond(&dbar(n, 2))
            .add(&x(n, 2).scale(&h12f(n)));
        assert_eq!(u.epsilon().epsilon(), u);
    }

    #[test]
    fn epsilon_antihomomorphism() {
        let n = 2;
        let u = x(n, 1).add(&dbar(n, 2));
        let v = x(n, 2).diamond(&x(n, 1));
        let lhs = u.diamond(&v).epsilon();
        let rhs = v.epsilon().diamond(&u.epsilon());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dbar_conversion_roundtrip() {
        let n = 3;
        // d2 -> dbar2 * phi'_2 with phi'_2 = h21/(h21-1)
        let d2 = Element::d_plain_gen(n, Parity::Even, 2);
        let h21 = RatFunc::hij(n, 2, 1);
        let f = h21.checked_div(&h21.sub(&int(n, 1))).unwrap();
        assert_eq!(d2, dbar(n, 2).scale(&f));
        // round-trip through the plain basis
        let u = x(n, 2)
            .diamond(&dbar(n, 3))
            .add(&dbar(n, 1).scale(&RatFunc::hij(n, 1, 3)));
        assert_eq!(u.from_dbar().to_dbar(), u);
    }

    #[test]
    fn hc_projection_examples() {
        let n = 1;
        assert!(x(n, 1).diamond(&dbar(n, 1)).hc_project().is_zero());
        assert!(dbar(n, 1).diamond(&x(n, 1)).hc_project().is_one());
        let f = RatFunc::hvar(n, 1);
        let c = Element::term(
            Parity::Even,
            MultiIndex::zero(n),
            MultiIndex::zero(n),
            f.clone(),
        );
        assert_eq!(c.hc_project(), f);
    }

    #[test]
    fn odd_nilpotence() {
        let n = 2;
        let z1 = Element::x_gen(n, Parity::Odd, 1);
        assert!(z1.diamond(&z1).is_zero());
        let g1 = Element::dbar_gen(n, Parity::Odd, 1);
        assert!(g1.diamond(&g1).is_zero());
    }

    #[test]
    fn odd_defining_relations() {
        let n = 2;
        let z1 = Element::x_gen(n, Parity::Odd, 1);
        let z2 = Element::x_gen(n, Parity::Odd, 2);
        // z1 . z2 = -z2 . z1 * (h12-1)/h12
        let lhs = z1.diamond(&z2);
        let f = h12f(n).sub(&int(n, 1)).checked_div(&h12f(n)).unwrap();
        let rhs = z2.diamond(&z1).scale(&f).neg();
        assert_eq!(lhs, rhs);
        // gd1 . z1 = 1 - z1 . gd1 for n = 1
        let m = 1;
        let g1 = Element::dbar_gen(m, Parity::Odd, 1);
        let w1 = Element::x_gen(m, Parity::Odd, 1);
        let lhs = g1.diamond(&w1);
        let rhs = Element::unit(m, Parity::Odd).sub(&w1.diamond(&g1));
        assert_eq!(lhs, rhs);
        // gd2 . z1 = -h12(h12-2)/(h12-1)^2 * z1 . gd2, left coefficient
        let g2 = Element::dbar_gen(n, Parity::Odd, 2);
        let lhs = g2.diamond(&z1);
        let num = h12f(n).mul(&h12f(n).sub(&int(n, 2)));
        let den = h12f(n).sub(&int(n, 1)).powi(2);
        let f = num.checked_div(&den).unwrap().neg();
        let rhs = normal_order(
            n,
            Parity::Odd,
            &[Atom::Coeff(f), Atom::X(1), Atom::DBar(2)],
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn weight_grading_preserved() {
        let n = 3;
        let u = dbar(n, 2).diamond(&x(n, 2));
        // every term of dbar2 . x2 has weight zero
        for ((a, b), _) in u.terms() {
            assert_eq!(Element::term_weight(a, b), vec![0, 0, 0]);
        }
    }
}
