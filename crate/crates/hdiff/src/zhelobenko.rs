//! Zhelobenko automorphisms of the deformed algebras, their inverses, long
//! element composites, and the route from them to the contravariant form.
//!
//! Each simple index gives an algebra automorphism acting on generators by
//! an explicit table and on coefficients by the shifted Weyl action. The
//! inverse automorphism is solved on generators once and extended the same
//! way. Composites over reduced words do not depend on the word; the crate
//! fixes one canonical word for the longest element.

use crate::algebra::{normal_order, Atom, Element, Letter, MultiIndex, Parity};
use crate::coeffs::{Perm, RatFunc};
use crate::forms;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// A word in the simple reflections `1..n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(indices: Vec<usize>, n: usize) -> Self {
        assert!(
            indices.iter().all(|&c| c >= 1 && c + 1 <= n),
            "simple reflection index out of range"
        );
        WeylWord(indices)
    }

    /// The canonical reduced word for the longest element:
    /// `1, 21, 321, ...` read block by block.
    pub fn longest(n: usize) -> Self {
        let mut w = Vec::new();
        for t in 1..n {
            for c in (1..=t).rev() {
                w.push(c);
            }
        }
        WeylWord(w)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn reversed(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The permutation realized by the word (applied left to right).
    pub fn permutation(&self, n: usize) -> Perm {
        let mut p = Perm::identity(n);
        for &c in &self.0 {
            p = Perm::compose(&Perm::simple(c, n), &p);
        }
        p
    }
}

fn hi(n: usize, i: usize) -> RatFunc {
    RatFunc::hij(n, i, i + 1)
}

/// Generator images of the automorphism at simple index `i`, with local
/// coefficients already written on the right of their letter.
fn q_image(n: usize, i: usize, l: Letter) -> Vec<Atom> {
    let h = hi(n, i);
    let one = RatFunc::one(n);
    match l {
        Letter::X(j) if j == i => vec![
            Atom::X(i + 1),
            Atom::Coeff(h.checked_div(&h.sub(&one)).unwrap()),
        ],
        Letter::X(j) if j == i + 1 => vec![Atom::X(i)],
        Letter::X(j) => vec![Atom::X(j)],
        Letter::D(j) if j == i => vec![
            Atom::DBar(i + 1),
            Atom::Coeff(h.checked_div(&h.add(&one)).unwrap()),
        ],
        Letter::D(j) if j == i + 1 => vec![Atom::DBar(i)],
        Letter::D(j) => vec![Atom::DBar(j)],
    }
}

/// Generator images of the inverse automorphism.
fn xi_image(n: usize, i: usize, l: Letter) -> Vec<Atom> {
    let h = hi(n, i);
    let one = RatFunc::one(n);
    match l {
        Letter::X(j) if j == i => vec![Atom::X(i + 1)],
        Letter::X(j) if j == i + 1 => vec![
            Atom::X(i),
            Atom::Coeff(h.add(&one).checked_div(&h).unwrap()),
        ],
        Letter::X(j) => vec![Atom::X(j)],
        Letter::D(j) if j == i => vec![Atom::DBar(i + 1)],
        Letter::D(j) if j == i + 1 => vec![
            Atom::DBar(i),
            Atom::Coeff(h.sub(&one).checked_div(&h).unwrap()),
        ],
        Letter::D(j) => vec![Atom::DBar(j)],
    }
}

fn apply_generator_map<F>(i: usize, u: &Element, images: F) -> Element
where
    F: Fn(Letter) -> Vec<Atom>,
{
    let n = u.n();
    assert!(i >= 1 && i + 1 <= n, "simple reflection index out of range");
    let s = Perm::simple(i, n);
    let mut out = Element::zero(n, u.parity());
    for ((a, b), c) in u.terms() {
        let mut atoms: Vec<Atom> = Vec::new();
        for l in Element::term_letters(a, b) {
            atoms.extend(images(l));
        }
        atoms.push(Atom::Coeff(c.weyl_permute(&s)));
        out = out.add(&normal_order(n, u.parity(), &atoms));
    }
    out
}

/// The Zhelobenko automorphism at simple index `i`.
pub fn qcheck(i: usize, u: &Element) -> Element {
    apply_generator_map(i, u, |l| q_image(u.n(), i, l))
}

/// The inverse automorphism at simple index `i`.
pub fn xicheck(i: usize, u: &Element) -> Element {
    apply_generator_map(i, u, |l| xi_image(u.n(), i, l))
}

/// Apply the automorphisms of a word in order (first index acts first).
pub fn qcheck_word(word: &WeylWord, u: &Element) -> Element {
    let mut acc = u.clone();
    for &c in word.indices() {
        acc = qcheck(c, &acc);
    }
    acc
}

pub fn xicheck_word(word: &WeylWord, u: &Element) -> Element {
    let mut acc = u.clone();
    for &c in word.indices() {
        acc = xicheck(c, &acc);
    }
    acc
}

/// The long-element composite over the canonical word.
pub fn qcheck_w0(u: &Element) -> Element {
    qcheck_word(&WeylWord::longest(u.n()), u)
}

/// The long-element composite of inverses, over the reversed canonical
/// word, so that it is the two-sided inverse of [`qcheck_w0`] by
/// construction; by the braid relations it equals the composite over any
/// reduced word.
pub fn xicheck_w0(u: &Element) -> Element {
    xicheck_word(&WeylWord::longest(u.n()).reversed(), u)
}

/// Index reversal by the longest element.
pub fn w0_index(nu: &MultiIndex) -> MultiIndex {
    nu.permute(&Perm::longest(nu.len()))
}

/// Sign of the longest element acting on an odd monomial with `k` letters:
/// reversing the word costs `k(k-1)/2` transpositions.
pub fn odd_w0_sign(nu: &MultiIndex) -> i64 {
    let k = nu.degree() as u64;
    if (k * (k - 1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Closed form of the long inverse composite on an even monomial: the
/// reversed monomial times the Weyl-permuted norm product.
pub fn xi_w0_closed(n: usize, nu: &MultiIndex) -> (MultiIndex, RatFunc) {
    assert_eq!(nu.len(), n);
    let mut fact = BigRational::one();
    for k in 0..n {
        for t in 1..=nu.get(k) {
            fact *= BigRational::from_integer(BigInt::from(t));
        }
    }
    let gamma = forms::closed_norm_even(n, nu).mul_scalar(&(BigRational::one() / fact));
    let w0 = Perm::longest(n);
    (w0_index(nu), gamma.weyl_permute(&w0))
}

/// The contravariant form computed through the long Zhelobenko composite:
/// pair the reversed first monomial with the inverse-composite image of the
/// second under the free pairing, then permute the result.
pub fn form_via_zhelobenko(
    n: usize,
    nu: &MultiIndex,
    nu_prime: &MultiIndex,
    parity: Parity,
) -> RatFunc {
    assert_eq!(nu.len(), n);
    assert_eq!(nu_prime.len(), n);
    let image = xicheck_w0(&Element::x_monomial(n, parity, nu_prime.clone()));
    let target = (w0_index(nu), MultiIndex::zero(n));
    let mut c = image.coeff(&target.0, &target.1);
    match parity {
        Parity::Even => {
            let mut fact = BigRational::one();
            for k in 0..n {
                for t in 1..=nu.get(k) {
                    fact *= BigRational::from_integer(BigInt::from(t));
                }
            }
            c = c.mul_scalar(&fact);
        }
        Parity::Odd => {
            c = c.mul_scalar(&BigRational::from_integer(BigInt::from(odd_w0_sign(nu))));
        }
    }
    c.weyl_permute(&Perm::longest(n))
}
