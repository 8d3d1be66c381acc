//! Multivariate polynomials over exact rationals.
//!
//! These are the raw material for the coefficient field [`super::RatFunc`].
//! Variables are indexed `0..n_vars` and stand for the shifted Cartan
//! generators `h1, ..., hn`. The monomial order is graded lexicographic;
//! the leading coefficient under that order is what normalization makes
//! equal to one in denominators.
//!
//! Exponent vectors are packed into a single word: one lane for the total
//! degree followed by one lane per variable, so the integer order of the
//! packed word is exactly the graded-lexicographic order. This caps the
//! rank at seven and single-variable degrees at 127, which is far beyond
//! the desk scale the library targets.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Hard cap on the number of variables imposed by the packed monomials.
pub const MAX_VARS: usize = 7;

const LANE_BITS: u32 = 8;
const LANE_MASK: u64 = 0xff;
const MAX_EXP: u32 = 127;

/// Exponent vector of a single monomial, packed degree-first so that the
/// natural integer order is graded-lexicographic.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(u64);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(0)
    }

    pub fn var(n_vars: usize, i: usize) -> Self {
        assert!(i < n_vars && n_vars <= MAX_VARS);
        let mut m = Monomial(0);
        m = m.with_exp(i, 1);
        m
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Monomial(0);
        for (i, &e) in exps.iter().enumerate() {
            m = m.with_exp(i, e);
        }
        m
    }

    fn lane_shift(i: usize) -> u32 {
        // the most significant byte is the degree, then one byte per variable
        ((MAX_VARS - 1 - i) as u32) * LANE_BITS
    }

    pub fn exp(&self, i: usize) -> u32 {
        ((self.0 >> Self::lane_shift(i)) & LANE_MASK) as u32
    }

    fn with_exp(self, i: usize, e: u32) -> Monomial {
        assert!(e <= MAX_EXP, "exponent overflow in packed monomial");
        let old = self.exp(i);
        let deg = self.degree() - old + e;
        assert!(deg <= LANE_MASK as u32, "degree overflow in packed monomial");
        let sh = Self::lane_shift(i);
        let mut v = self.0 & !(LANE_MASK << sh) & 0x00ff_ffff_ffff_ffff;
        v |= (e as u64) << sh;
        v |= (deg as u64) << 56;
        Monomial(v)
    }

    pub fn exps(&self, n_vars: usize) -> Vec<u32> {
        (0..n_vars).map(|i| self.exp(i)).collect()
    }

    pub fn degree(&self) -> u32 {
        (self.0 >> 56) as u32
    }

    pub fn is_unit(&self) -> bool {
        self.0 == 0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert!(
            self.degree() + other.degree() <= LANE_MASK as u32
                && (0..MAX_VARS).all(|i| self.exp(i) + other.exp(i) <= MAX_EXP),
            "exponent overflow in monomial product"
        );
        Monomial(self.0 + other.0)
    }

    /// Componentwise division; `None` if any exponent would go negative.
    fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        for i in 0..MAX_VARS {
            if self.exp(i) < other.exp(i) {
                return None;
            }
        }
        Some(Monomial(self.0 - other.0))
    }
}

/// A multivariate polynomial with exact rational coefficients.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    n_vars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n_vars.hash(state);
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n_vars.cmp(&other.n_vars).then_with(|| {
            let a: Vec<_> = self.terms.iter().collect();
            let b: Vec<_> = other.terms.iter().collect();
            a.cmp(&b)
        })
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Poly {
    pub fn zero(n_vars: usize) -> Self {
        assert!(n_vars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Poly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n_vars: usize) -> Self {
        Poly::constant(n_vars, BigRational::one())
    }

    pub fn constant(n_vars: usize, c: BigRational) -> Self {
        let mut p = Poly::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(), c);
        }
        p
    }

    pub fn from_int(n_vars: usize, c: i64) -> Self {
        Poly::constant(n_vars, BigRational::from_integer(BigInt::from(c)))
    }

    /// The variable `h(i+1)` (0-based index).
    pub fn var(n_vars: usize, i: usize) -> Self {
        assert!(i < n_vars, "variable index out of range");
        let mut p = Poly::zero(n_vars);
        p.terms.insert(Monomial::var(n_vars, i), BigRational::one());
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_unit())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    /// Total degree one: a prime polynomial.
    pub fn is_linear(&self) -> bool {
        self.total_degree() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, |m| m.degree())
    }

    /// Degree in one variable.
    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn insert_term(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let new = e.get() + &c;
                if new.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = new;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.n_vars, other.n_vars);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_term(&mut terms, *m, c.clone());
        }
        Poly {
            n_vars: self.n_vars,
            terms,
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.n_vars, other.n_vars);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_term(&mut terms, *m, -c.clone());
        }
        Poly {
            n_vars: self.n_vars,
            terms,
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.n_vars, other.n_vars);
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                Self::insert_term(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        Poly {
            n_vars: self.n_vars,
            terms,
        }
    }

    pub fn mul_scalar(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n_vars);
        }
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.n_vars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Add the integer `k` to the variable `v`: `h_v -> h_v + k`.
    pub fn shift_var(&self, v: usize, k: i64) -> Poly {
        if k == 0 {
            return self.clone();
        }
        let kq = BigRational::from_integer(BigInt::from(k));
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                Self::insert_term(&mut terms, *m, c.clone());
                continue;
            }
            // (h + k)^e expanded with binomial coefficients
            let mut binom = BigRational::one();
            let mut kpow = BigRational::one();
            for j in (0..=e).rev() {
                let mj = m.with_exp(v, j);
                Self::insert_term(&mut terms, mj, c * &binom * &kpow);
                if j > 0 {
                    binom = binom * BigRational::from_integer(BigInt::from(j))
                        / BigRational::from_integer(BigInt::from(e - j + 1));
                    kpow *= &kq;
                }
            }
        }
        Poly {
            n_vars: self.n_vars,
            terms,
        }
    }

    /// Apply `h_j -> h_j + delta_j` for all variables.
    pub fn shift(&self, delta: &[i64]) -> Poly {
        assert_eq!(delta.len(), self.n_vars);
        let mut p = self.clone();
        for (v, &k) in delta.iter().enumerate() {
            p = p.shift_var(v, k);
        }
        p
    }

    /// Rename variables: `h_j -> h_perm(j)` (0-based permutation).
    pub fn permute_vars(&self, perm: &[usize]) -> Poly {
        assert_eq!(perm.len(), self.n_vars);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut out = Monomial::unit();
            for j in 0..self.n_vars {
                out = out.with_exp(perm[j], m.exp(j));
            }
            Self::insert_term(&mut terms, out, c.clone());
        }
        Poly {
            n_vars: self.n_vars,
            terms,
        }
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.n_vars);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, pv) in point.iter().enumerate() {
                for _ in 0..m.exp(v) {
                    t *= pv;
                }
            }
            acc += t;
        }
        acc
    }

    /// Sum of the partial derivatives in all variables. Vanishes identically
    /// exactly when the polynomial is invariant under the simultaneous shift
    /// of all variables by a common constant.
    pub fn directional_derivative_sum(&self) -> Poly {
        let mut acc = Poly::zero(self.n_vars);
        for v in 0..self.n_vars {
            acc = acc.add(&self.derivative(v));
        }
        acc
    }

    pub fn derivative(&self, v: usize) -> Poly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            Self::insert_term(
                &mut terms,
                m.with_exp(v, e - 1),
                c * BigRational::from_integer(BigInt::from(e)),
            );
        }
        Poly {
            n_vars: self.n_vars,
            terms,
        }
    }

    /// Substitute zero for variable `v`.
    pub fn set_var_zero(&self, v: usize) -> Poly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exp(v) == 0 {
                Self::insert_term(&mut terms, *m, c.clone());
            }
        }
        Poly {
            n_vars: self.n_vars,
            terms,
        }
    }

    /// Divide by the leading coefficient, making the polynomial monic in the
    /// graded-lex sense. Returns the removed scalar.
    pub fn make_monic(&mut self) -> BigRational {
        let lc = self.leading_coeff();
        if lc.is_zero() || lc.is_one() {
            return lc;
        }
        for c in self.terms.values_mut() {
            *c /= &lc;
        }
        lc
    }

    /// Exact multivariate division: `self = q * d` with no remainder.
    pub fn try_div(&self, d: &Poly) -> Option<Poly> {
        assert_eq!(self.n_vars, d.n_vars);
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero(self.n_vars));
        }
        if let Some(c) = d.as_constant() {
            return Some(self.mul_scalar(&(BigRational::one() / c)));
        }
        // degree screens
        if self.total_degree() < d.total_degree() {
            return None;
        }
        for v in 0..self.n_vars {
            if self.degree_in(v) < d.degree_in(v) {
                return None;
            }
        }
        let dlm = *d.leading_monomial().unwrap();
        let dlc = d.leading_coeff();
        let mut rem = self.clone();
        let mut quo = BTreeMap::new();
        while !rem.is_zero() {
            let rlm = *rem.leading_monomial().unwrap();
            let rlc = rem.leading_coeff();
            let qm = rlm.try_div(&dlm)?;
            let qc = rlc / &dlc;
            // rem -= (qc * qm) * d
            let mut newterms = rem.terms;
            for (m, c) in &d.terms {
                Self::insert_term(&mut newterms, qm.mul(m), -(c * &qc));
            }
            rem = Poly {
                n_vars: self.n_vars,
                terms: newterms,
            };
            Self::insert_term(&mut quo, qm, qc);
        }
        Some(Poly {
            n_vars: self.n_vars,
            terms: quo,
        })
    }

    fn vars_present(&self) -> Vec<usize> {
        let mut present = vec![false; self.n_vars];
        for m in self.terms.keys() {
            for (flag, v) in present.iter_mut().zip(0..self.n_vars) {
                if m.exp(v) > 0 {
                    *flag = true;
                }
            }
        }
        (0..self.n_vars).filter(|&v| present[v]).collect()
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `v`,
    /// lowest degree first. The coefficients do not involve `v`.
    fn univar_coeffs(&self, v: usize) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![Poly::zero(self.n_vars); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            Self::insert_term(&mut out[e].terms, m.with_exp(v, 0), c.clone());
        }
        out
    }

    fn from_univar(coeffs: Vec<Poly>, v: usize, n_vars: usize) -> Poly {
        let mut acc = Poly::zero(n_vars);
        for (e, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut shifted = Poly::zero(n_vars);
            for (m, k) in &c.terms {
                shifted.terms.insert(m.with_exp(v, e as u32), k.clone());
            }
            acc = acc.add(&shifted);
        }
        acc
    }
}

/// Greatest common divisor of two polynomials, up to a scalar.
///
/// Subresultant pseudo-remainder sequences with recursive content removal,
/// with trial-division fast paths for the factor-structured inputs that
/// dominate the workloads here. The result is monic.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    assert_eq!(a.n_vars(), b.n_vars());
    let n_vars = a.n_vars();
    if a.is_zero() {
        let mut g = b.clone();
        g.make_monic();
        return g;
    }
    if b.is_zero() {
        let mut g = a.clone();
        g.make_monic();
        return g;
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(n_vars);
    }
    // fast paths: one side divides the other
    if a.total_degree() <= b.total_degree() {
        if b.try_div(a).is_some() {
            let mut g = a.clone();
            g.make_monic();
            return g;
        }
    } else if a.try_div(b).is_some() {
        let mut g = b.clone();
        g.make_monic();
        return g;
    }
    if a.is_linear() || b.is_linear() {
        // a linear polynomial is prime: no divisibility means coprime
        return Poly::one(n_vars);
    }
    let va = a.vars_present();
    let vb = b.vars_present();
    let common: Vec<usize> = va.iter().copied().filter(|v| vb.contains(v)).collect();
    if common.is_empty() {
        return Poly::one(n_vars);
    }
    let v = *common.last().unwrap();

    let ca = a.univar_coeffs(v);
    let cb = b.univar_coeffs(v);
    let cont_a = poly_list_gcd(&ca);
    let cont_b = poly_list_gcd(&cb);
    let pp_a = divide_coeffs(&ca, &cont_a);
    let pp_b = divide_coeffs(&cb, &cont_b);
    let cont_g = gcd(&cont_a, &cont_b);

    let prim = subresultant_prs(pp_a, pp_b, v, n_vars);
    let mut g = cont_g.mul(&prim);
    g.make_monic();
    g
}

fn poly_list_gcd(list: &[Poly]) -> Poly {
    let n_vars = list[0].n_vars();
    let mut acc = Poly::zero(n_vars);
    for p in list {
        if p.is_zero() {
            continue;
        }
        acc = gcd(&acc, p);
        if acc.is_one() {
            return acc;
        }
    }
    if acc.is_zero() {
        Poly::one(n_vars)
    } else {
        acc
    }
}

fn divide_coeffs(coeffs: &[Poly], d: &Poly) -> Vec<Poly> {
    coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                c.clone()
            } else {
                c.try_div(d).expect("content must divide exactly")
            }
        })
        .collect()
}

fn uni_degree(c: &[Poly]) -> usize {
    c.iter().rposition(|p| !p.is_zero()).unwrap_or(0)
}

fn uni_is_zero(c: &[Poly]) -> bool {
    c.iter().all(|p| p.is_zero())
}

/// Pseudo-remainder of `a` by `b` as univariate polynomials in `v` with
/// polynomial coefficients: `lc(b)^(deg a - deg b + 1) * a  mod  b`.
fn pseudo_rem(a: &[Poly], b: &[Poly], n_vars: usize) -> Vec<Poly> {
    let da = uni_degree(a);
    let db = uni_degree(b);
    let lcb = b[db].clone();
    let full = da - db + 1;
    let mut steps = 0usize;
    let mut r: Vec<Poly> = a.to_vec();
    loop {
        if uni_is_zero(&r) {
            break;
        }
        let dr = uni_degree(&r);
        if dr < db {
            break;
        }
        steps += 1;
        let lcr = r[dr].clone();
        // r = lcb * r - lcr * x^(dr-db) * b
        let mut new_r = vec![Poly::zero(n_vars); dr + 1];
        for (i, c) in r.iter().enumerate() {
            new_r[i] = c.mul(&lcb);
        }
        for (i, c) in b.iter().enumerate() {
            if !c.is_zero() {
                new_r[i + dr - db] = new_r[i + dr - db].sub(&c.mul(&lcr));
            }
        }
        while new_r.len() > 1 && new_r.last().map_or(false, |p| p.is_zero()) {
            new_r.pop();
        }
        r = new_r;
    }
    // pad up to the textbook premultiplier so that the exact divisions in
    // the subresultant sequence stay exact
    for _ in steps..full {
        for c in r.iter_mut() {
            *c = c.mul(&lcb);
        }
    }
    r
}

fn subresultant_prs(a: Vec<Poly>, b: Vec<Poly>, v: usize, n_vars: usize) -> Poly {
    let (mut f, mut g) = if uni_degree(&a) >= uni_degree(&b) {
        (a, b)
    } else {
        (b, a)
    };
    let mut h = Poly::one(n_vars);
    let mut s = Poly::one(n_vars);
    loop {
        let d = uni_degree(&f) - uni_degree(&g);
        let r = pseudo_rem(&f, &g, n_vars);
        if uni_is_zero(&r) {
            // g is the gcd of the primitive parts, up to content
            let cont = poly_list_gcd(&g);
            let pp = divide_coeffs(&g, &cont);
            return Poly::from_univar(pp, v, n_vars);
        }
        if uni_degree(&r) == 0 && !r[0].is_zero() {
            return Poly::one(n_vars);
        }
        // divisor = s * h^d
        let mut divisor = s.clone();
        for _ in 0..d {
            divisor = divisor.mul(&h);
        }
        let new_g: Vec<Poly> = r
            .iter()
            .map(|c| {
                if c.is_zero() {
                    c.clone()
                } else {
                    c.try_div(&divisor)
                        .expect("subresultant division must be exact")
                }
            })
            .collect();
        s = g[uni_degree(&g)].clone();
        // h = s^d * h^(1-d)
        h = if d == 0 {
            h
        } else {
            let mut num = s.pow(d as u32);
            for _ in 1..d {
                num = num
                    .try_div(&h)
                    .expect("subresultant h-update must be exact");
            }
            num
        };
        f = g;
        g = new_g;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn h(n_vars: usize, i: usize) -> Poly {
        Poly::var(n_vars, i)
    }

    #[test]
    fn packed_monomial_order_is_graded_lex() {
        let a = Monomial::from_exps(&[2, 0, 0]);
        let b = Monomial::from_exps(&[1, 1, 0]);
        let c = Monomial::from_exps(&[0, 0, 1]);
        assert!(a > b); // same degree, lex on the first variable
        assert!(b > c); // higher total degree wins
        assert_eq!(a.degree(), 2);
        assert_eq!(a.exp(0), 2);
        assert_eq!(b.exp(1), 1);
    }

    #[test]
    fn arithmetic_basics() {
        let h1 = h(2, 0);
        let h2 = h(2, 1);
        let d = h1.sub(&h2); // h1 - h2
        let p = d.mul(&d).sub(&Poly::one(2)); // d^2 - 1
        let f1 = d.add(&Poly::one(2));
        let f2 = d.sub(&Poly::one(2));
        assert_eq!(p, f1.mul(&f2));
        assert_eq!(p.try_div(&f1), Some(f2));
    }

    #[test]
    fn shift_and_permute() {
        let h1 = h(2, 0);
        let h2 = h(2, 1);
        let d = h1.sub(&h2);
        assert_eq!(d.shift(&[1, 0]), d.add(&Poly::one(2)));
        assert_eq!(d.shift(&[1, 1]), d);
        // swap the two variables
        assert_eq!(d.permute_vars(&[1, 0]), d.neg());
    }

    #[test]
    fn eval_points() {
        let p = h(2, 0).mul(&h(2, 1)).add(&Poly::from_int(2, 3));
        let v = p.eval(&[q(2), q(5)]);
        assert_eq!(v, q(13));
    }

    #[test]
    fn gcd_with_common_factor() {
        let h1 = h(3, 0);
        let h2 = h(3, 1);
        let h3 = h(3, 2);
        let a = h1.sub(&h2);
        let b = h1.sub(&h3).add(&Poly::one(3));
        let c = h2.sub(&h3);
        let p = a.mul(&b);
        let r = a.mul(&c);
        let g = gcd(&p, &r);
        assert_eq!(g, a);
        let coprime = gcd(&b, &c);
        assert!(coprime.is_one());
    }

    #[test]
    fn gcd_multiplicity() {
        let h1 = h(2, 0);
        let a = h1.add(&Poly::one(2));
        let p = a.pow(3).mul(&h1);
        let r = a.pow(2).mul(&h1.sub(&Poly::one(2)));
        let g = gcd(&p, &r);
        assert_eq!(g, a.pow(2));
    }

    #[test]
    fn shift_invariance_detector() {
        let h1 = h(2, 0);
        let h2 = h(2, 1);
        let d = h1.sub(&h2);
        assert!(d.directional_derivative_sum().is_zero());
        assert!(!h1.directional_derivative_sum().is_zero());
        let p = d.pow(3).add(&d.mul(&Poly::from_int(2, 7)));
        assert!(p.directional_derivative_sum().is_zero());
    }
}
