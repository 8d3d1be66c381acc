//! Independent classical verification layer.
//!
//! Everything here is ordinary exact linear algebra over the rationals in
//! the tensor product of the polynomial (or Grassmann) representation with
//! a Verma module at an explicit rational highest weight: PBW
//! straightening, the Shapovalov form, and the truncated extremal
//! projector. None of the deformed-algebra machinery is used, so agreement
//! with the closed norm formulas is a genuine cross-check.

use crate::algebra::{MultiIndex, Parity};
use crate::coeffs::WeightPoint;
use crate::forms::{classical_move, projector_application_order};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(
        "singular weight for the projector: h{i}{j} evaluates to the negative integer {value}"
    )]
    SingularWeight { i: usize, j: usize, value: String },
}

/// The fixed list of lowering generators `e_(j,i)`, `j > i`, ordered
/// lexicographically by `(j, i)`. PBW monomials are exponent vectors over
/// this list, applied left to right to the highest weight vector.
pub fn negative_roots(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            out.push((j, i));
        }
    }
    out
}

/// Exponents over [`negative_roots`]; the empty monomial is the highest
/// weight vector itself.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PBWMonomial(Vec<u32>);

impl PBWMonomial {
    pub fn unit(n: usize) -> Self {
        PBWMonomial(vec![0; negative_roots(n).len()])
    }

    pub fn single(n: usize, j: usize, i: usize) -> Self {
        let mut m = PBWMonomial::unit(n);
        let pos = negative_roots(n)
            .iter()
            .position(|&r| r == (j, i))
            .expect("not a lowering pair");
        m.0[pos] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        PBWMonomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn set_exponent(&mut self, pos: usize, e: u32) {
        self.0[pos] = e;
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn first_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    /// Weight contribution of the monomial (sum of root weights).
    fn weight(&self, n: usize) -> Vec<i64> {
        let mut w = vec![0i64; n];
        for (pos, &(j, i)) in negative_roots(n).iter().enumerate() {
            w[j - 1] += self.0[pos] as i64;
            w[i - 1] -= self.0[pos] as i64;
        }
        w
    }
}

impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        // decode (j, i) from the position without knowing the rank
        let mut j = 2usize;
        let mut i = 1usize;
        let mut first = true;
        for &e in &self.0 {
            if e > 0 {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "e{}{}", j, i)?;
                } else {
                    write!(f, "e{}{}^{}", j, i, e)?;
                }
            }
            i += 1;
            if i == j {
                j += 1;
                i = 1;
            }
        }
        Ok(())
    }
}

/// A vector of a Verma module: rational combination of PBW monomials.
pub type VermaVector = BTreeMap<PBWMonomial, BigRational>;

fn add_into(v: &mut VermaVector, key: PBWMonomial, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match v.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Straighten `e_ab` applied to a PBW monomial acting on the highest
/// weight vector of weight `mu`.
pub fn verma_apply(
    n: usize,
    a: usize,
    b: usize,
    mono: &PBWMonomial,
    mu: &WeightPoint,
) -> VermaVector {
    let mut out = VermaVector::new();
    if a == b {
        // Cartan action: the weight of the vector
        let w = mono.weight(n);
        let scale = &mu.coords()[a - 1] + BigRational::from_integer(BigInt::from(w[a - 1]));
        add_into(&mut out, mono.clone(), scale);
        return out;
    }
    let roots = negative_roots(n);
    match mono.first_nonzero() {
        None => {
            if a > b {
                add_into(&mut out, PBWMonomial::single(n, a, b), BigRational::one());
            }
            // raising generators annihilate the highest weight vector
            out
        }
        Some(head) => {
            if a > b {
                let pos_ab = roots
                    .iter()
                    .position(|&r| r == (a, b))
                    .expect("lowering pair");
                if pos_ab <= head {
                    // already in PBW order: prepend directly
                    let mut m = mono.clone();
                    m.0[pos_ab] += 1;
                    add_into(&mut out, m, BigRational::one());
                    return out;
                }
            }
            // peel the head letter: e_ab e_r tail = e_r (e_ab tail) + [e_ab, e_r] tail
            let (rj, ri) = roots[head];
            let mut tail = mono.clone();
            tail.0[head] -= 1;
            for (m, c) in verma_apply(n, a, b, &tail, mu) {
                for (m2, c2) in verma_apply(n, rj, ri, &m, mu) {
                    add_into(&mut out, m2, &c * &c2);
                }
            }
            // [e_ab, e_cd] = delta(b,c) e_ad - delta(d,a) e_cb
            if b == rj {
                for (m, c) in verma_apply(n, a, ri, &tail, mu) {
                    add_into(&mut out, m, c);
                }
            }
            if ri == a {
                for (m, c) in verma_apply(n, rj, b, &tail, mu) {
                    add_into(&mut out, m, -c);
                }
            }
            out
        }
    }
}

fn verma_apply_vec(
    n: usize,
    a: usize,
    b: usize,
    v: &VermaVector,
    mu: &WeightPoint,
) -> VermaVector {
    let mut out = VermaVector::new();
    for (m, c) in v {
        for (m2, c2) in verma_apply(n, a, b, m, mu) {
            add_into(&mut out, m2, c * &c2);
        }
    }
    out
}

/// The Shapovalov pairing of two PBW monomials at highest weight `mu`,
/// computed by moving the left monomial's factors across one at a time.
pub fn shapovalov(n: usize, f: &PBWMonomial, g: &PBWMonomial, mu: &WeightPoint) -> BigRational {
    let mut gv = VermaVector::new();
    gv.insert(g.clone(), BigRational::one());
    shapovalov_vec(n, f, &gv, mu)
}

fn shapovalov_vec(n: usize, f: &PBWMonomial, g: &VermaVector, mu: &WeightPoint) -> BigRational {
    match f.first_nonzero() {
        None => g
            .get(&PBWMonomial::unit(n))
            .cloned()
            .unwrap_or_else(BigRational::zero),
        Some(head) => {
            let (j, i) = negative_roots(n)[head];
            let mut rest = f.clone();
            rest.0[head] -= 1;
            // moving one lowering factor across transposes it
            let g2 = verma_apply_vec(n, i, j, g, mu);
            shapovalov_vec(n, &rest, &g2, mu)
        }
    }
}

/// A vector of the tensor product of the polynomial (or Grassmann) module
/// with the Verma module of highest weight `mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorVector {
    n: usize,
    parity: Parity,
    mu: WeightPoint,
    terms: BTreeMap<(MultiIndex, PBWMonomial), BigRational>,
}

impl TensorVector {
    pub fn zero(n: usize, parity: Parity, mu: &WeightPoint) -> Self {
        TensorVector {
            n,
            parity,
            mu: mu.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The vector `x^nu (tensor) 1_mu`.
    pub fn monomial(n: usize, parity: Parity, nu: &MultiIndex, mu: &WeightPoint) -> Self {
        assert_eq!(nu.len(), n);
        if parity == Parity::Odd {
            assert!(nu.is_binary());
        }
        let mut v = TensorVector::zero(n, parity, mu);
        v.terms
            .insert((nu.clone(), PBWMonomial::unit(n)), BigRational::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(MultiIndex, PBWMonomial), &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: (MultiIndex, PBWMonomial), c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &TensorVector) -> TensorVector {
        assert_eq!(self.mu, other.mu);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorVector) -> TensorVector {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> TensorVector {
        if c.is_zero() {
            return TensorVector::zero(self.n, self.parity, &self.mu);
        }
        TensorVector {
            n: self.n,
            parity: self.parity,
            mu: self.mu.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// The common weight of all terms.
    pub fn weight(&self) -> Option<WeightPoint> {
        let (kappa, m) = self.terms.keys().next()?;
        let mut w: Vec<BigRational> = self.mu.coords().to_vec();
        for k in 0..self.n {
            w[k] += BigRational::from_integer(BigInt::from(kappa.get(k) as i64));
        }
        for (k, d) in m.weight(self.n).iter().enumerate() {
            w[k] += BigRational::from_integer(BigInt::from(*d));
        }
        Some(WeightPoint::new(w))
    }
}

/// The diagonal action of `e_ij` on the tensor product.
pub fn gl_act(i: usize, j: usize, v: &TensorVector) -> TensorVector {
    let n = v.n;
    let mut out = TensorVector::zero(n, v.parity, &v.mu);
    for ((kappa, m), c) in &v.terms {
        // first factor
        if let Some((target, sign)) = classical_move(v.parity, i, j, kappa) {
            out.add_term(
                (target, m.clone()),
                c * BigRational::from_integer(BigInt::from(sign)),
            );
        }
        // second factor
        for (m2, c2) in verma_apply(n, i, j, m, &v.mu) {
            out.add_term((kappa.clone(), m2), c * &c2);
        }
    }
    out
}

/// Action of `e_ij` on the first tensor factor only.
pub fn first_factor_act(i: usize, j: usize, v: &TensorVector) -> TensorVector {
    let mut out = TensorVector::zero(v.n, v.parity, &v.mu);
    for ((kappa, m), c) in &v.terms {
        if let Some((target, sign)) = classical_move(v.parity, i, j, kappa) {
            out.add_term(
                (target, m.clone()),
                c * BigRational::from_integer(BigInt::from(sign)),
            );
        }
    }
    out
}

/// The contravariant form on the tensor product: the factorial pairing on
/// the first factor times the Shapovalov form on the second.
pub fn tensor_form(v: &TensorVector, w: &TensorVector) -> BigRational {
    assert_eq!(v.mu, w.mu);
    assert_eq!(v.parity, w.parity);
    let n = v.n;
    let mut acc = BigRational::zero();
    for ((kv, mv), cv) in &v.terms {
        for ((kw, mw), cw) in &w.terms {
            if kv != kw {
                continue;
            }
            let poly_factor = match v.parity {
                Parity::Even => {
                    let mut f = BigRational::one();
                    for k in 0..n {
                        for t in 1..=kv.get(k) {
                            f *= BigRational::from_integer(BigInt::from(t));
                        }
                    }
                    f
                }
                Parity::Odd => BigRational::one(),
            };
            let s = shapovalov(n, mv, mw, &v.mu);
            acc += cv * cw * poly_factor * s;
        }
    }
    acc
}

/// The truncated extremal projector applied to a weight vector: every
/// one-root factor is a terminating series because the raising action is
/// nilpotent on the bounded support.
pub fn extremal_projector(v: &TensorVector) -> Result<TensorVector, OracleError> {
    if v.is_zero() {
        return Ok(v.clone());
    }
    let n = v.n;
    let lambda = v.weight().expect("nonzero vector");
    for i in 1..=n {
        for j in (i + 1)..=n {
            let val = lambda.hij_value(i, j);
            if val.is_integer() && val.is_negative() {
                return Err(OracleError::SingularWeight {
                    i,
                    j,
                    value: val.to_string(),
                });
            }
        }
    }
    let mut cur = v.clone();
    for (i, j) in projector_application_order(n) {
        // h_ij + 1 on this weight: the base of the rising denominators
        let d0 = lambda.hij_value(i, j) + BigRational::one();
        let mut out = cur.clone();
        let mut raised = cur.clone();
        let mut k = 0u32;
        let mut kfact = BigRational::one();
        loop {
            k += 1;
            kfact *= BigRational::from_integer(BigInt::from(k));
            raised = gl_act(i, j, &raised);
            if raised.is_zero() {
                break;
            }
            let mut lowered = raised.clone();
            for _ in 0..k {
                lowered = gl_act(j, i, &lowered);
            }
            let mut denom = BigRational::one();
            for t in 0..k {
                denom *= &d0 + BigRational::from_integer(BigInt::from(t));
            }
            let sign = if k % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            out = out.add(&lowered.scale(&(sign / (&kfact * denom))));
        }
        cur = out;
    }
    Ok(cur)
}

/// The norm of the projected monomial vector, computed classically.
pub fn oracle_norm(
    n: usize,
    nu: &MultiIndex,
    mu: &WeightPoint,
    parity: Parity,
) -> Result<BigRational, OracleError> {
    let v = TensorVector::monomial(n, parity, nu, mu);
    let pv = extremal_projector(&v)?;
    // (Pv, Pv) = (v, Pv) by idempotence and self-adjointness
    Ok(tensor_form(&v, &pv))
}

/// A generic rational weight: small integer parts plus distinct prime
/// reciprocals, chosen so that no root difference within the tested shift
/// window is an integer.
pub fn generic_weight(n: usize, max_shift: u32, salt: u64) -> WeightPoint {
    let min_p = 2 * max_shift as u64 + n as u64 + 2;
    let mut primes = Vec::new();
    let mut cand = min_p.max(3);
    while primes.len() < n + salt as usize {
        cand += 1;
        if (2..cand).take_while(|d| d * d <= cand).all(|d| cand % d != 0) {
            primes.push(cand);
        }
    }
    let picked = &primes[salt as usize..salt as usize + n];
    let coords: Vec<BigRational> = picked
        .iter()
        .enumerate()
        .map(|(k, &p)| {
            BigRational::from_integer(BigInt::from((k as i64 % 3) - 1))
                + BigRational::new(BigInt::one(), BigInt::from(p))
        })
        .collect();
    let mu = WeightPoint::new(coords);
    debug_assert!(mu.is_nonsingular());
    mu
}

/// Report of the rank-two module checks: each displayed action formula of
/// the two-dimensional tautological factor, verified classically.
#[derive(Debug, Clone)]
pub struct Gl2Report {
    pub checks: Vec<(String, bool)>,
}

impl Gl2Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Verify the rank-two module action table at a concrete weight: the
/// projected degree-one vectors transform under the projected first-factor
/// generators with the stated Cartan-field coefficients, evaluated at the
/// highest weight.
pub fn gl2_example_check(mu: &WeightPoint) -> Result<Gl2Report, OracleError> {
    assert_eq!(mu.n(), 2);
    let n = 2;
    let mu12 = &mu.coords()[0] - &mu.coords()[1];
    let v1 = extremal_projector(&TensorVector::monomial(
        n,
        Parity::Even,
        &MultiIndex::from_slice(&[1, 0]),
        mu,
    ))?;
    let v2 = extremal_projector(&TensorVector::monomial(
        n,
        Parity::Even,
        &MultiIndex::from_slice(&[0, 1]),
        mu,
    ))?;
    let s = |i: usize, j: usize, v: &TensorVector| -> Result<TensorVector, OracleError> {
        extremal_projector(&first_factor_act(i, j, v))
    };
    let one = BigRational::one();
    let ratio = &mu12 / (&mu12 + &one); // h12/(h12+1) at mu
    let inv = &one / (&mu12 + &one); // 1/(h12+1) at mu

    let mut checks = Vec::new();
    checks.push(("s12 v1 = 0".to_string(), s(1, 2, &v1)?.is_zero()));
    checks.push((
        "s12 v2 = v1 h12/(h12+1)".to_string(),
        s(1, 2, &v2)? == v1.scale(&ratio),
    ));
    checks.push(("s21 v1 = v2".to_string(), s(2, 1, &v1)? == v2));
    checks.push(("s21 v2 = 0".to_string(), s(2, 1, &v2)?.is_zero()));
    checks.push(("s11 v1 = v1".to_string(), s(1, 1, &v1)? == v1));
    checks.push((
        "s11 v2 = v2 1/(h12+1)".to_string(),
        s(1, 1, &v2)? == v2.scale(&inv),
    ));
    checks.push(("s22 v1 = 0".to_string(), s(2, 2, &v1)?.is_zero()));
    checks.push((
        "s22 v2 = v2 h12/(h12+1)".to_string(),
        s(2, 2, &v2)? == v2.scale(&ratio),
    ));
    // the shifted Cartan generators act by the shifted evaluation
    for i in 1..=2usize {
        for (jname, vj, delta) in [("v1", &v1, i == 1), ("v2", &v2, i == 2)] {
            let lhs = gl_act(i, i, vj)
                .add(&vj.scale(&-BigRational::from_integer(BigInt::from(i as i64))));
            let hval = &mu.coords()[i - 1] - BigRational::from_integer(BigInt::from(i as i64))
                + if delta { one.clone() } else { BigRational::zero() };
            checks.push((
                format!("h{i} {jname} = {jname} (h{i}+delta)"),
                lhs == vj.scale(&hval),
            ));
        }
    }
    Ok(Gl2Report { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms;

    fn mi(e: &[u32]) -> MultiIndex {
        MultiIndex::from_slice(e)
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn verma_basics() {
        let n = 2;
        let mu = WeightPoint::from_ints(&[3, 1]);
        // raising kills the highest weight vector
        assert!(verma_apply(n, 1, 2, &PBWMonomial::unit(n), &mu).is_empty());
        // Cartan acts by the weight
        let v = verma_apply(n, 1, 1, &PBWMonomial::unit(n), &mu);
        assert_eq!(v.get(&PBWMonomial::unit(n)), Some(&q(3, 1)));
        // raising one lowering generator gives the root value
        let e21 = PBWMonomial::single(n, 2, 1);
        let v = verma_apply(n, 1, 2, &e21, &mu);
        assert_eq!(v.get(&PBWMonomial::unit(n)), Some(&q(2, 1)));
    }

    #[test]
    fn shapovalov_examples() {
        let n = 2;
        let mu = WeightPoint::from_ints(&[3, 1]);
        let unit = PBWMonomial::unit(n);
        assert_eq!(shapovalov(n, &unit, &unit, &mu), q(1, 1));
        let e21 = PBWMonomial::single(n, 2, 1);
        // (e21 1, e21 1) = mu1 - mu2
        assert_eq!(shapovalov(n, &e21, &e21, &mu), q(2, 1));
        // (e21^2 1, e21^2 1) = 2 (mu1-mu2)(mu1-mu2-1)
        let e21sq = PBWMonomial::from_exponents(vec![2]);
        assert_eq!(shapovalov(n, &e21sq, &e21sq, &mu), q(4, 1));
        // different weights pair to zero
        assert_eq!(shapovalov(n, &unit, &e21, &mu), q(0, 1));
    }

    #[test]
    fn shapovalov_symmetric_rank3() {
        let n = 3;
        let mu = WeightPoint::new(vec![q(1, 3), q(-1, 5), q(2, 7)]);
        let monos = [
            PBWMonomial::single(n, 2, 1),
            PBWMonomial::single(n, 3, 1),
            PBWMonomial::single(n, 3, 2),
            PBWMonomial::from_exponents(vec![1, 1, 0]),
            PBWMonomial::from_exponents(vec![0, 0, 2]),
        ];
        for f in &monos {
            for g in &monos {
                assert_eq!(shapovalov(n, f, g, &mu), shapovalov(n, g, f, &mu));
            }
        }
    }

    #[test]
    fn gl_act_examples() {
        let n = 2;
        let mu = WeightPoint::from_ints(&[3, 1]);
        // e12 moves the second variable down to the first
        let v = TensorVector::monomial(n, Parity::Even, &mi(&[0, 1]), &mu);
        let r = gl_act(1, 2, &v);
        assert_eq!(
            r,
            TensorVector::monomial(n, Parity::Even, &mi(&[1, 0]), &mu)
        );
        // e21 hits both factors
        let v = TensorVector::monomial(n, Parity::Even, &mi(&[1, 0]), &mu);
        let r = gl_act(2, 1, &v);
        assert_eq!(r.terms.len(), 2);
        // the commutator value on the pure Verma term
        let mut w = TensorVector::zero(n, Parity::Even, &mu);
        w.add_term(
            (mi(&[0, 0]), PBWMonomial::single(n, 2, 1)),
            BigRational::one(),
        );
        let r = gl_act(1, 2, &w);
        let expect = TensorVector::monomial(n, Parity::Even, &mi(&[0, 0]), &mu).scale(&q(2, 1));
        assert_eq!(r, expect);
    }

    #[test]
    fn tensor_form_examples() {
        let n = 2;
        let mu = WeightPoint::from_ints(&[3, 1]);
        let v = TensorVector::monomial(n, Parity::Even, &mi(&[1, 0]), &mu);
        assert_eq!(tensor_form(&v, &v), q(1, 1));
        let mut w = TensorVector::zero(n, Parity::Even, &mu);
        w.add_term(
            (mi(&[1, 0]), PBWMonomial::single(n, 2, 1)),
            BigRational::one(),
        );
        assert_eq!(tensor_form(&w, &w), q(2, 1));
        let u = TensorVector::monomial(n, Parity::Even, &mi(&[0, 1]), &mu);
        assert_eq!(tensor_form(&v, &u), q(0, 1));
    }

    #[test]
    fn tensor_form_contravariance() {
        let n = 2;
        let mu = WeightPoint::new(vec![q(1, 3), q(-1, 5)]);
        let v = TensorVector::monomial(n, Parity::Even, &mi(&[1, 1]), &mu);
        let w = gl_act(
            2,
            1,
            &TensorVector::monomial(n, Parity::Even, &mi(&[2, 0]), &mu),
        );
        let lhs = tensor_form(&gl_act(1, 2, &v), &w);
        let rhs = tensor_form(&v, &gl_act(2, 1, &w));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn projector_examples() {
        let n = 2;
        let mu = WeightPoint::from_ints(&[3, 1]);
        // already a highest weight vector
        let v = TensorVector::monomial(n, Parity::Even, &mi(&[1, 0]), &mu);
        assert_eq!(extremal_projector(&v).unwrap(), v);
        // the one-step series on the second variable
        let v = TensorVector::monomial(n, Parity::Even, &mi(&[0, 1]), &mu);
        let pv = extremal_projector(&v).unwrap();
        // denominator is the shifted root value at mu: here 3
        let c = q(-1, 3);
        let mut expect = v.scale(&(BigRational::one() + &c));
        expect.add_term((mi(&[1, 0]), PBWMonomial::single(n, 2, 1)), c);
        assert_eq!(pv, expect);
        // the image is an invariant
        assert!(gl_act(1, 2, &pv).is_zero());
    }

    #[test]
    fn projector_idempotent_and_invariant() {
        let n = 3;
        let mu = WeightPoint::new(vec![q(1, 3), q(-1, 5), q(2, 7)]);
        for nu in [mi(&[0, 1, 1]), mi(&[0, 0, 2]), mi(&[1, 0, 1])] {
            let v = TensorVector::monomial(n, Parity::Even, &nu, &mu);
            let pv = extremal_projector(&v).unwrap();
            let ppv = extremal_projector(&pv).unwrap();
            assert_eq!(pv, ppv, "idempotence at nu = {nu}");
            for i in 1..=n {
                for j in (i + 1)..=n {
                    assert!(gl_act(i, j, &pv).is_zero(), "invariance e{i}{j}");
                }
            }
            assert_eq!(tensor_form(&v, &pv), tensor_form(&pv, &pv));
        }
    }

    #[test]
    fn projector_rejects_singular_weights() {
        let n = 2;
        let mu = WeightPoint::from_ints(&[0, 0]);
        let v = TensorVector::monomial(n, Parity::Even, &mi(&[0, 2]), &mu);
        match extremal_projector(&v) {
            Err(OracleError::SingularWeight { i: 1, j: 2, value }) => {
                assert_eq!(value, "-1")
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn oracle_norm_examples() {
        let n = 2;
        let v = oracle_norm(
            n,
            &mi(&[0, 1]),
            &WeightPoint::from_ints(&[1, 0]),
            Parity::Even,
        )
        .unwrap();
        assert_eq!(v, q(1, 2));
        let v = oracle_norm(n, &mi(&[1, 0]), &generic_weight(n, 4, 0), Parity::Even).unwrap();
        assert_eq!(v, q(1, 1));
        let v = oracle_norm(
            n,
            &mi(&[0, 1]),
            &WeightPoint::from_ints(&[2, 0]),
            Parity::Odd,
        )
        .unwrap();
        assert_eq!(v, q(2, 3));
    }

    #[test]
    fn oracle_matches_closed_norms_small() {
        for n in 2..=3usize {
            for salt in [0u64, 1] {
                let mu = generic_weight(n, 3, salt);
                for nu in crate::pieri::compositions_up_to(n, 2) {
                    let a = oracle_norm(n, &nu, &mu, Parity::Even).unwrap();
                    let b = forms::evaluate_norm(n, &nu, &mu, Parity::Even).unwrap();
                    assert_eq!(a, b, "even nu = {nu}");
                }
                for nu in crate::pieri::binary_indices(n) {
                    let a = oracle_norm(n, &nu, &mu, Parity::Odd).unwrap();
                    let b = forms::evaluate_norm(n, &nu, &mu, Parity::Odd).unwrap();
                    assert_eq!(a, b, "odd nu = {nu}");
                }
            }
        }
    }

    #[test]
    fn gl2_module_table() {
        let mu = WeightPoint::new(vec![q(1, 3), q(-1, 5)]);
        let report = gl2_example_check(&mu).unwrap();
        assert!(
            report.all_passed(),
            "failed checks: {:?}",
            report
                .checks
                .iter()
                .filter(|(_, ok)| !ok)
                .collect::<Vec<_>>()
        );
        assert_eq!(report.checks.len(), 12);
    }

    #[test]
    fn invariant_space_spanned_by_projected_monomials_rank2() {
        // the solution space of the invariance equations at each weight is
        // one-dimensional and contains the projected monomial
        let n = 2;
        let mu = WeightPoint::new(vec![q(1, 3), q(-1, 5)]);
        for nu in crate::pieri::compositions_up_to(n, 3) {
            // basis of the weight space: kappa = nu + (k, -k), k <= nu_2
            let mut basis: Vec<(MultiIndex, PBWMonomial)> = Vec::new();
            for k in 0..=nu.get(1) {
                let kappa = mi(&[nu.get(0) + k, nu.get(1) - k]);
                basis.push((kappa, PBWMonomial::from_exponents(vec![k])));
            }
            // matrix of the raising operator in that basis
            let mut image_keys: Vec<(MultiIndex, PBWMonomial)> = Vec::new();
            let mut cols: Vec<Vec<BigRational>> = Vec::new();
            for (kappa, m) in &basis {
                let mut v = TensorVector::zero(n, Parity::Even, &mu);
                v.add_term((kappa.clone(), m.clone()), BigRational::one());
                let img = gl_act(1, 2, &v);
                let mut col = Vec::new();
                for (key, c) in img.terms() {
                    let pos = match image_keys.iter().position(|k2| k2 == key) {
                        Some(p) => p,
                        None => {
                            image_keys.push(key.clone());
                            image_keys.len() - 1
                        }
                    };
                    while col.len() <= pos {
                        col.push(BigRational::zero());
                    }
                    col[pos] = c.clone();
                }
                cols.push(col);
            }
            let nrows = image_keys.len();
            let ncols = basis.len();
            let mut mat: Vec<Vec<BigRational>> = (0..nrows)
                .map(|r| {
                    cols.iter()
                        .map(|col| col.get(r).cloned().unwrap_or_else(BigRational::zero))
                        .collect()
                })
                .collect();
            // kernel dimension by Gaussian elimination
            let mut rank = 0usize;
            for c in 0..ncols {
                if let Some(p) = (rank..mat.len()).find(|&r| !mat[r][c].is_zero()) {
                    mat.swap(rank, p);
                    let pivot = mat[rank][c].clone();
                    for r in 0..mat.len() {
                        if r != rank && !mat[r][c].is_zero() {
                            let factor = &mat[r][c] / &pivot;
                            for cc in 0..ncols {
                                let sub = &mat[rank][cc] * &factor;
                                mat[r][cc] -= sub;
                            }
                        }
                    }
                    rank += 1;
                }
            }
            assert_eq!(ncols - rank, 1, "kernel dimension at nu = {nu}");
            // and the projected monomial is a nonzero invariant
            let pv =
                extremal_projector(&TensorVector::monomial(n, Parity::Even, &nu, &mu)).unwrap();
            assert!(!pv.is_zero());
            assert!(gl_act(1, 2, &pv).is_zero());
        }
    }
}
