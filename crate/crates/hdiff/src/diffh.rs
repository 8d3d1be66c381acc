//! The even deformed algebra: polynomial variables `x^i` and the modified
//! derivatives, with the diamond product and its contravariant structure.
//!
//! Elements are [`Element`] values with even parity; this module fixes the
//! parity and names the operations. The normal form keeps raising letters
//! with descending indices, lowering letters with ascending indices, and
//! the coefficient on the right.

use crate::algebra::{self, Atom, Element, MultiIndex, Parity};
use crate::coeffs::RatFunc;

pub type AlgebraElement = Element;

pub fn zero(n: usize) -> Element {
    Element::zero(n, Parity::Even)
}

pub fn unit(n: usize) -> Element {
    Element::unit(n, Parity::Even)
}

/// The variable `x^i`.
pub fn x(n: usize, i: usize) -> Element {
    Element::x_gen(n, Parity::Even, i)
}

/// The modified derivative.
pub fn dbar(n: usize, i: usize) -> Element {
    Element::dbar_gen(n, Parity::Even, i)
}

/// The plain derivative, expressed in the modified basis.
pub fn d_plain(n: usize, i: usize) -> Element {
    Element::d_plain_gen(n, Parity::Even, i)
}

/// The normal monomial `x^nu` with coefficient one.
pub fn x_monomial(n: usize, nu: &MultiIndex) -> Element {
    Element::x_monomial(n, Parity::Even, nu.clone())
}

pub fn diamond_mul(u: &Element, v: &Element) -> Element {
    assert_eq!(u.parity(), Parity::Even);
    u.diamond(v)
}

pub fn normal_order(n: usize, atoms: &[Atom]) -> Element {
    algebra::normal_order(n, Parity::Even, atoms)
}

pub fn epsilon(u: &Element) -> Element {
    assert_eq!(u.parity(), Parity::Even);
    u.epsilon()
}

pub fn from_dbar(u: &Element) -> Element {
    u.from_dbar()
}

pub fn to_dbar(u: &Element) -> Element {
    u.to_dbar()
}

pub fn hc_project(u: &Element) -> RatFunc {
    u.hc_project()
}
