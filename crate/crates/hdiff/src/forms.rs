//! Contravariant forms on the polynomial modules of the deformed algebras.
//!
//! The module of either parity is the quotient of the algebra by the left
//! ideal of lowering generators; its elements are sums of monomial classes
//! with Cartan coefficients on the right. The contravariant form pairs two
//! classes through the Harish-Chandra projection, and closed product
//! formulas give the norms of monomials. A second, independent route
//! computes the same form by applying the shifted extremal projector inside
//! the classical polynomial model.

use crate::algebra::{Element, MultiIndex, Parity, RewriteOpts};
use crate::coeffs::{CoeffError, PochDirection, Poly, RatFunc, WeightPoint};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("singular weight: h{i}{j} evaluates to the negative integer {value}")]
    SingularWeight { i: usize, j: usize, value: String },
    #[error("coefficient error: {0}")]
    Coeff(#[from] CoeffError),
}

/// A class in the polynomial module: a finite sum of monomial classes with
/// right Cartan coefficients. Odd parity forces binary exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyModuleElement {
    n: usize,
    parity: Parity,
    terms: BTreeMap<MultiIndex, RatFunc>,
}

impl PolyModuleElement {
    pub fn zero(n: usize, parity: Parity) -> Self {
        PolyModuleElement {
            n,
            parity,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(n: usize, parity: Parity) -> Self {
        PolyModuleElement::monomial(n, parity, &MultiIndex::zero(n))
    }

    /// The class of a single monomial with coefficient one.
    pub fn monomial(n: usize, parity: Parity, nu: &MultiIndex) -> Self {
        assert_eq!(nu.len(), n);
        if parity == Parity::Odd {
            assert!(nu.is_binary(), "odd exponents must be 0/1");
        }
        let mut terms = BTreeMap::new();
        terms.insert(nu.clone(), RatFunc::one(n));
        PolyModuleElement { n, parity, terms }
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

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, nu: &MultiIndex) -> RatFunc {
        self.terms
            .get(nu)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(self.n))
    }

    fn add_term(&mut self, nu: MultiIndex, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(nu) {
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

    pub fn add(&self, other: &PolyModuleElement) -> PolyModuleElement {
        assert_eq!(self.n, other.n);
        assert_eq!(self.parity, other.parity);
        let mut out = self.clone();
        for (nu, c) in &other.terms {
            out.add_term(nu.clone(), c.clone());
        }
        out
    }

    /// Right multiplication by a Cartan coefficient.
    pub fn scale(&self, f: &RatFunc) -> PolyModuleElement {
        let mut out = PolyModuleElement::zero(self.n, self.parity);
        for (nu, c) in &self.terms {
            out.add_term(nu.clone(), c.mul(f));
        }
        out
    }

    /// Lift back to the algebra (all lowering exponents zero).
    pub fn to_element(&self) -> Element {
        let mut out = Element::zero(self.n, self.parity);
        for (nu, c) in &self.terms {
            out = out.add(&Element::term(
                self.parity,
                nu.clone(),
                MultiIndex::zero(self.n),
                c.clone(),
            ));
        }
        out
    }
}

/// Left action of the algebra on the module: multiply and discard every
/// term that still carries a lowering letter. Letters of the monomial are
/// multiplied in one at a time; a term whose lowering degree exceeds the
/// number of letters still to come can never contribute and is pruned,
/// since one raising letter cancels at most one lowering letter.
pub fn act(u: &Element, p: &PolyModuleElement) -> PolyModuleElement {
    assert_eq!(u.n(), p.n);
    assert_eq!(u.parity(), p.parity);
    let n = p.n;
    let zero = MultiIndex::zero(n);
    let mut out = PolyModuleElement::zero(n, p.parity);
    for (nu, f) in &p.terms {
        let letters = Element::term_letters(nu, &zero);
        let total = letters.len();
        let mut cur = u.retain_lowering_degree(total as u32);
        for (idx, l) in letters.into_iter().enumerate() {
            let remaining = (total - idx - 1) as u32;
            let opts = RewriteOpts {
                drop_trailing_lowering: remaining == 0,
                drop_leading_raising: false,
            };
            cur = cur.mul_letter(l, opts).retain_lowering_degree(remaining);
            if cur.is_zero() {
                break;
            }
        }
        for ((a, b), c) in cur.terms() {
            if *b == zero {
                out.add_term(a.clone(), c.mul(f));
            }
        }
    }
    out
}

/// The contravariant form: the Harish-Chandra component of
/// `epsilon(u) . v`.
///
/// Only the coefficient of the empty word survives at the end, and a
/// raising letter that has come to rest can never be removed again, so
/// terms with a nonempty raising part are dropped as soon as they collect;
/// what remains between letters is a small set of pure-lowering terms.
pub fn contravariant_form(u: &PolyModuleElement, v: &PolyModuleElement) -> RatFunc {
    assert_eq!(u.n, v.n);
    assert_eq!(u.parity, v.parity);
    let n = u.n;
    let zero = MultiIndex::zero(n);
    let eps = u.to_element().epsilon();
    let mut out = RatFunc::zero(n);
    for (nu, f) in &v.terms {
        let letters = Element::term_letters(nu, &zero);
        let total = letters.len();
        let mut cur = eps.retain_hc_reachable(total as u32);
        for (idx, l) in letters.into_iter().enumerate() {
            if cur.is_zero() {
                break;
            }
            let remaining = (total - idx - 1) as u32;
            let opts = RewriteOpts {
                drop_trailing_lowering: remaining == 0,
                drop_leading_raising: true,
            };
            cur = cur.mul_letter(l, opts).retain_hc_reachable(remaining);
        }
        out = out.add(&cur.coeff(&zero, &zero).mul(f));
    }
    out
}

fn factorial_product(n: usize, nu: &MultiIndex) -> BigRational {
    let mut fact = BigRational::one();
    for k in 0..n {
        for t in 1..=nu.get(k) {
            fact *= BigRational::from_integer(BigInt::from(t));
        }
    }
    fact
}

/// Closed norm of an even monomial class.
pub fn closed_norm_even(n: usize, nu: &MultiIndex) -> RatFunc {
    assert_eq!(nu.len(), n);
    let mut acc = RatFunc::from_rational(n, factorial_product(n, nu));
    for i in 1..=n {
        for j in (i + 1)..=n {
            let h = RatFunc::hij(n, i, j);
            // one linear factor at a time keeps the reduction to trial
            // divisions by prime factors
            for t in 0..=nu.get(i - 1) as i64 {
                let num = h.add(&RatFunc::from_int(n, t - nu.get(j - 1) as i64));
                let den = h.add(&RatFunc::from_int(n, t));
                acc = acc.mul(&num);
                acc = acc.checked_div(&den).expect("denominator nonzero");
            }
        }
    }
    acc
}

/// Closed norm of an odd monomial class (binary exponents).
pub fn closed_norm_odd(n: usize, nu: &MultiIndex) -> RatFunc {
    assert_eq!(nu.len(), n);
    assert!(nu.is_binary(), "odd exponents must be 0/1");
    let mut acc = RatFunc::one(n);
    for i in 1..=n {
        if nu.get(i - 1) == 1 {
            continue; // exponent 1 - nu_i vanishes
        }
        for j in (i + 1)..=n {
            let h = RatFunc::hij(n, i, j);
            let num = h.sub(&RatFunc::from_int(n, nu.get(j - 1) as i64));
            acc = acc.mul(&num.checked_div(&h).expect("denominator nonzero"));
        }
    }
    acc
}

pub fn closed_norm(n: usize, nu: &MultiIndex, parity: Parity) -> RatFunc {
    match parity {
        Parity::Even => closed_norm_even(n, nu),
        Parity::Odd => closed_norm_odd(n, nu),
    }
}

/// The free diagonal pairing on the module: monomials pair to the product
/// of factorials (even) or to one (odd), with both coefficients multiplied
/// through.
pub fn free_pairing(u: &PolyModuleElement, v: &PolyModuleElement) -> RatFunc {
    assert_eq!(u.n, v.n);
    assert_eq!(u.parity, v.parity);
    let mut acc = RatFunc::zero(u.n);
    for (nu, cu) in &u.terms {
        if let Some(cv) = v.terms.get(nu) {
            let scale = match u.parity {
                Parity::Even => factorial_product(u.n, nu),
                Parity::Odd => BigRational::one(),
            };
            acc = acc.add(&cu.mul(cv).mul_scalar(&scale));
        }
    }
    acc
}

/// Positive roots in the order in which the projector factors are applied
/// to a vector (first entry acts first).
pub fn projector_application_order(n: usize) -> Vec<(usize, usize)> {
    let mut order = Vec::new();
    for m in (2..=n).rev() {
        for i in (1..m).rev() {
            order.push((i, m));
        }
    }
    order
}

/// A vector of the classical model: monomials with Cartan-field scalars.
type ClassicalVec = BTreeMap<MultiIndex, RatFunc>;

/// Index and sign transform of one classical basis monomial under the
/// operator with matrix indices `(i, j)`: the polynomial operator
/// `x^i d_j` (even) or the Grassmann one `zeta^i delta_j` (odd). Returns
/// `None` when the monomial is annihilated.
pub(crate) fn classical_move(
    parity: Parity,
    i: usize,
    j: usize,
    kappa: &MultiIndex,
) -> Option<(MultiIndex, i64)> {
    match parity {
        Parity::Even => {
            let kj = kappa.get(j - 1);
            if kj == 0 {
                return None;
            }
            let mut e = kappa.entries().to_vec();
            e[j - 1] -= 1;
            e[i - 1] += 1;
            Some((MultiIndex::new(e), kj as i64))
        }
        Parity::Odd => {
            if kappa.get(j - 1) == 0 {
                return None;
            }
            // the derivative removes the j-th letter of the ascending word
            let before_j = (0..j - 1).filter(|&k| kappa.get(k) == 1).count();
            let mut sign = if before_j % 2 == 0 { 1i64 } else { -1 };
            let mut e = kappa.entries().to_vec();
            e[j - 1] = 0;
            if i != j {
                if e[i - 1] == 1 {
                    return None; // repeated odd letter
                }
                let before_i = (0..i - 1).filter(|&k| e[k] == 1).count();
                if before_i % 2 != 0 {
                    sign = -sign;
                }
            }
            e[i - 1] = 1;
            Some((MultiIndex::new(e), sign))
        }
    }
}

/// The image of `e_ij` realized as a polynomial operator (even) or a
/// Grassmann one (odd), term by term.
fn classical_act(parity: Parity, i: usize, j: usize, v: &ClassicalVec) -> ClassicalVec {
    let mut out: ClassicalVec = BTreeMap::new();
    for (kappa, c) in v {
        if let Some((target, sign)) = classical_move(parity, i, j, kappa) {
            let scaled = c.mul_scalar(&BigRational::from_integer(BigInt::from(sign)));
            add_classical(&mut out, target, scaled);
        }
    }
    out
}

fn add_classical(v: &mut ClassicalVec, key: MultiIndex, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match v.entry(key) {
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

/// One projector factor with symbolically shifted Cartan part, applied to a
/// classical vector. The series terminates because raising operators are
/// nilpotent on fixed-degree polynomials.
fn shifted_projector_factor(
    parity: Parity,
    i: usize,
    j: usize,
    v: &ClassicalVec,
    n: usize,
) -> ClassicalVec {
    let mut out = v.clone();
    let mut raised = v.clone();
    let mut k = 0u32;
    let mut kfact = BigRational::one();
    loop {
        k += 1;
        kfact *= BigRational::from_integer(BigInt::from(k));
        raised = classical_act(parity, i, j, &raised);
        if raised.is_empty() {
            break;
        }
        let mut lowered = raised.clone();
        for _ in 0..k {
            lowered = classical_act(parity, j, i, &lowered);
        }
        let sign = if k % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        for (kappa, c) in lowered {
            // (h_ij + kappa_i - kappa_j + 1)^{rising k} on this monomial
            let base = kappa.get(i - 1) as i64 - kappa.get(j - 1) as i64;
            let mut den = Poly::one(n);
            let hij = Poly::var(n, i - 1).sub(&Poly::var(n, j - 1));
            for t in 1..=k {
                den = den.mul(&hij.add(&Poly::from_int(n, base + t as i64)));
            }
            let factor = RatFunc::from_ratio(Poly::constant(n, &sign / &kfact), den)
                .expect("nonzero denominator");
            add_classical(&mut out, kappa, c.mul(&factor));
        }
    }
    out
}

/// The contravariant form computed through the shifted extremal projector
/// in the classical model.
pub fn form_via_shifted_projector(
    n: usize,
    nu: &MultiIndex,
    nu_prime: &MultiIndex,
    parity: Parity,
) -> RatFunc {
    assert_eq!(nu.len(), n);
    assert_eq!(nu_prime.len(), n);
    if parity == Parity::Odd {
        assert!(nu.is_binary() && nu_prime.is_binary());
    }
    let mut v: ClassicalVec = BTreeMap::new();
    v.insert(nu_prime.clone(), RatFunc::one(n));
    for (i, j) in projector_application_order(n) {
        v = shifted_projector_factor(parity, i, j, &v, n);
    }
    let coeff = v.remove(nu).unwrap_or_else(|| RatFunc::zero(n));
    match parity {
        Parity::Even => coeff.mul_scalar(&factorial_product(n, nu)),
        Parity::Odd => coeff,
    }
}

/// Locate a root where the weight is singular in the sense that blocks the
/// extremal projector and the norm formula: a negative integer value.
pub(crate) fn singular_root(lambda: &WeightPoint) -> Option<(usize, usize, BigRational)> {
    for i in 1..=lambda.n() {
        for j in (i + 1)..=lambda.n() {
            let v = lambda.hij_value(i, j);
            if v.is_integer() && v.is_negative() {
                return Some((i, j, v));
            }
        }
    }
    None
}

/// Exact value of the closed norm at a weight; requires the shifted weight
/// to avoid negative integer values on the positive roots. The canonical
/// form is evaluated as a whole, so no spurious vanishing of an individual
/// factor can occur.
pub fn evaluate_norm(
    n: usize,
    nu: &MultiIndex,
    mu: &WeightPoint,
    parity: Parity,
) -> Result<BigRational, FormError> {
    assert_eq!(nu.len(), n);
    assert_eq!(mu.n(), n);
    let lambda = mu.add_shift(&nu.weight());
    if let Some((i, j, value)) = singular_root(&lambda) {
        return Err(FormError::SingularWeight {
            i,
            j,
            value: value.to_string(),
        });
    }
    let norm = closed_norm(n, nu, parity);
    match norm.evaluate(mu) {
        Ok(v) => Ok(v),
        Err(e) => {
            // the closed form is finite at every non-singular weight
            panic!("norm evaluation hit a singular factor at a non-singular weight: {e}");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffh;

    fn mi(entries: &[u32]) -> MultiIndex {
        MultiIndex::from_slice(entries)
    }

    fn h12(n: usize) -> RatFunc {
        RatFunc::hij(n, 1, 2)
    }

    fn int(n: usize, c: i64) -> RatFunc {
        RatFunc::from_int(n, c)
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn act_examples() {
        // dbar1 acting on x1 gives the unit class (n = 1)
        let p = PolyModuleElement::monomial(1, Parity::Even, &mi(&[1]));
        let r = act(&diffh::dbar(1, 1), &p);
        assert_eq!(r, PolyModuleElement::unit(1, Parity::Even));
        // x1 acting on the unit class gives x1
        let one = PolyModuleElement::unit(2, Parity::Even);
        let r = act(&diffh::x(2, 1), &one);
        assert_eq!(
            r,
            PolyModuleElement::monomial(2, Parity::Even, &mi(&[1, 0]))
        );
    }

    #[test]
    fn act_derivative_counts_degree() {
        // dbar1 . x1^k = k x1^(k-1) in the rank-one module
        for k in 1u32..=5 {
            let p = PolyModuleElement::monomial(1, Parity::Even, &mi(&[k]));
            let r = act(&diffh::dbar(1, 1), &p);
            let expect = PolyModuleElement::monomial(1, Parity::Even, &mi(&[k - 1]))
                .scale(&int(1, k as i64));
            assert_eq!(r, expect);
        }
    }

    #[test]
    fn act_is_module_action() {
        let n = 2;
        let u = diffh::dbar(n, 1);
        let v = diffh::x(n, 2).diamond(&diffh::dbar(n, 2));
        let p = PolyModuleElement::monomial(n, Parity::Even, &mi(&[1, 1]));
        let lhs = act(&u.diamond(&v), &p);
        let rhs = act(&u, &act(&v, &p));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn form_examples() {
        let n = 2;
        let x1 = PolyModuleElement::monomial(n, Parity::Even, &mi(&[1, 0]));
        let x2 = PolyModuleElement::monomial(n, Parity::Even, &mi(&[0, 1]));
        assert!(contravariant_form(&x1, &x1).is_one());
        assert!(contravariant_form(&x1, &x2).is_zero());
        let x21 = PolyModuleElement::monomial(n, Parity::Even, &mi(&[1, 1]));
        let f = contravariant_form(&x21, &x21);
        let expect = h12(n)
            .sub(&int(n, 1))
            .checked_div(&h12(n).add(&int(n, 1)))
            .unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn closed_norm_even_examples() {
        let n = 2;
        assert!(closed_norm_even(n, &mi(&[1, 0])).is_one());
        let f = closed_norm_even(n, &mi(&[0, 1]));
        assert_eq!(f, h12(n).sub(&int(n, 1)).checked_div(&h12(n)).unwrap());
        let f = closed_norm_even(n, &mi(&[1, 1]));
        assert_eq!(
            f,
            h12(n)
                .sub(&int(n, 1))
                .checked_div(&h12(n).add(&int(n, 1)))
                .unwrap()
        );
    }

    #[test]
    fn closed_norm_odd_examples() {
        let n = 2;
        let f = closed_norm_odd(n, &mi(&[0, 1]));
        assert_eq!(f, h12(n).sub(&int(n, 1)).checked_div(&h12(n)).unwrap());
        assert!(closed_norm_odd(n, &mi(&[1, 1])).is_one());
        assert!(closed_norm_odd(n, &mi(&[1, 0])).is_one());
    }

    #[test]
    fn free_pairing_examples() {
        // the squared monomial pairs to 2! = 2
        let p = PolyModuleElement::monomial(1, Parity::Even, &mi(&[2]));
        assert_eq!(free_pairing(&p, &p), int(1, 2));
        let x1 = PolyModuleElement::monomial(2, Parity::Even, &mi(&[1, 0]));
        let x2 = PolyModuleElement::monomial(2, Parity::Even, &mi(&[0, 1]));
        assert!(free_pairing(&x1, &x2).is_zero());
        // odd pairing carries coefficients through with factor one
        let z1 = PolyModuleElement::monomial(2, Parity::Odd, &mi(&[1, 0]));
        let z1h = z1.scale(&h12(2));
        assert_eq!(free_pairing(&z1h, &z1), h12(2));
    }

    #[test]
    fn shifted_projector_examples() {
        let n = 2;
        let f = form_via_shifted_projector(n, &mi(&[0, 1]), &mi(&[0, 1]), Parity::Even);
        assert_eq!(f, closed_norm_even(n, &mi(&[0, 1])));
        let f = form_via_shifted_projector(n, &mi(&[1, 0]), &mi(&[1, 0]), Parity::Even);
        assert!(f.is_one());
        let f = form_via_shifted_projector(n, &mi(&[1, 0]), &mi(&[0, 1]), Parity::Even);
        assert!(f.is_zero());
    }

    #[test]
    fn norm_theorem_small_range() {
        // the closed product equals the contravariant form, both parities
        for n in 1..=3usize {
            for nu in crate::pieri::compositions_up_to(n, 3) {
                let m = PolyModuleElement::monomial(n, Parity::Even, &nu);
                let direct = contravariant_form(&m, &m);
                assert_eq!(direct, closed_norm_even(n, &nu), "even nu = {nu}");
            }
            for nu in crate::pieri::binary_indices(n) {
                let m = PolyModuleElement::monomial(n, Parity::Odd, &nu);
                let direct = contravariant_form(&m, &m);
                assert_eq!(direct, closed_norm_odd(n, &nu), "odd nu = {nu}");
            }
        }
    }

    #[test]
    fn off_diagonal_weights_are_orthogonal() {
        let n = 2;
        let a = PolyModuleElement::monomial(n, Parity::Even, &mi(&[2, 0]));
        let b = PolyModuleElement::monomial(n, Parity::Even, &mi(&[1, 1]));
        assert!(contravariant_form(&a, &b).is_zero());
    }

    #[test]
    fn form_is_symmetric() {
        let n = 2;
        let a = PolyModuleElement::monomial(n, Parity::Even, &mi(&[1, 1])).scale(&h12(n));
        let b = PolyModuleElement::monomial(n, Parity::Even, &mi(&[1, 1]));
        assert_eq!(contravariant_form(&a, &b), contravariant_form(&b, &a));
    }

    #[test]
    fn contravariance_transfer() {
        // (g u, v) = (u, eps(g) v)
        let n = 2;
        let g = diffh::x(n, 1);
        let u = PolyModuleElement::monomial(n, Parity::Even, &mi(&[0, 1]));
        let v = PolyModuleElement::monomial(n, Parity::Even, &mi(&[1, 1]));
        let lhs = contravariant_form(&act(&g, &u), &v);
        let rhs = contravariant_form(&u, &act(&g.epsilon(), &v));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluate_norm_examples() {
        let n = 2;
        let v = evaluate_norm(
            n,
            &mi(&[0, 1]),
            &WeightPoint::from_ints(&[1, 0]),
            Parity::Even,
        )
        .unwrap();
        assert_eq!(v, q(1, 2));
        let v = evaluate_norm(
            n,
            &mi(&[0, 1]),
            &WeightPoint::from_ints(&[1, 1]),
            Parity::Even,
        )
        .unwrap();
        use num_traits::Zero;
        assert!(v.is_zero());
        let v = evaluate_norm(
            n,
            &mi(&[1, 1]),
            &WeightPoint::from_ints(&[5, 2]),
            Parity::Odd,
        )
        .unwrap();
        assert!(v.is_one());
    }

    #[test]
    fn evaluate_norm_rejects_singular_weights() {
        let n = 2;
        // mu + nu = (0, 2) has a singular root
        let err = evaluate_norm(
            n,
            &mi(&[0, 2]),
            &WeightPoint::from_ints(&[0, 0]),
            Parity::Even,
        )
        .unwrap_err();
        match err {
            FormError::SingularWeight { i: 1, j: 2, value } => assert_eq!(value, "-1"),
            other => panic!("unexpected: {other:?}"),
        }
    }
}

/// Diagnostic variant of [`contravariant_form`] printing intermediate
/// sizes; used by performance investigations only.
#[doc(hidden)]
pub fn contravariant_form_trace(u: &PolyModuleElement, v: &PolyModuleElement) -> RatFunc {
    let n = u.n;
    let zero = MultiIndex::zero(n);
    let eps = u.to_element().epsilon();
    let mut out = RatFunc::zero(n);
    for (nu, f) in &v.terms {
        let letters = Element::term_letters(nu, &zero);
        let total = letters.len();
        let mut cur = eps.retain_hc_reachable(total as u32);
        for (idx, l) in letters.into_iter().enumerate() {
            let remaining = (total - idx - 1) as u32;
            let t0 = std::time::Instant::now();
            let opts = RewriteOpts {
                drop_trailing_lowering: remaining == 0,
                drop_leading_raising: true,
            };
            cur = cur.mul_letter(l, opts).retain_hc_reachable(remaining);
            let dt = t0.elapsed();
            let mut max_num = 0usize;
            let mut max_den = 0u32;
            let mut max_bits = 0u64;
            for (_, c) in cur.terms() {
                max_num = max_num.max(c.num().num_terms());
                max_den = max_den.max(c.den().total_degree());
                for (_, q) in c.num().terms() {
                    use num_traits::Signed;
                    max_bits = max_bits
                        .max((q.numer().abs().bits() + q.denom().bits()) as u64);
                }
            }
            eprintln!(
                "letter {idx}: {dt:?}, {} terms, max num terms {max_num}, max den deg {max_den}, max coeff bits {max_bits}",
                cur.num_terms()
            );
        }
        out = out.add(&cur.coeff(&zero, &zero).mul(f));
    }
    out
}
