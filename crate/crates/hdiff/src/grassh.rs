//! The odd (Grassmann) deformed algebra: anticommuting variables and their
//! modified derivatives, sharing the rewriting engine with the even case.
//!
//! Exponents are 0 or 1; all signs live in the coefficients, the stored word
//! is always the canonical descending/ascending one.

use crate::algebra::{self, Atom, Element, MultiIndex, Parity};
use crate::coeffs::RatFunc;

pub type GAlgebraElement = Element;

pub fn zero(n: usize) -> Element {
    Element::zero(n, Parity::Odd)
}

pub fn unit(n: usize) -> Element {
    Element::unit(n, Parity::Odd)
}

/// The Grassmann variable `zeta^i`.
pub fn zeta(n: usize, i: usize) -> Element {
    Element::x_gen(n, Parity::Odd, i)
}

/// The modified Grassmann derivative.
pub fn gdbar(n: usize, i: usize) -> Element {
    Element::dbar_gen(n, Parity::Odd, i)
}

/// The plain Grassmann derivative, in the modified basis.
pub fn gd_plain(n: usize, i: usize) -> Element {
    Element::d_plain_gen(n, Parity::Odd, i)
}

/// The normal monomial `zeta^nu` (binary exponents) with coefficient one.
pub fn zeta_monomial(n: usize, nu: &MultiIndex) -> Element {
    assert!(nu.is_binary(), "odd exponents must be 0/1");
    Element::x_monomial(n, Parity::Odd, nu.clone())
}

pub fn g_diamond_mul(u: &Element, v: &Element) -> Element {
    assert_eq!(u.parity(), Parity::Odd);
    u.diamond(v)
}

pub fn g_normal_order(n: usize, atoms: &[Atom]) -> Element {
    algebra::normal_order(n, Parity::Odd, atoms)
}

pub fn g_epsilon(u: &Element) -> Element {
    assert_eq!(u.parity(), Parity::Odd);
    u.epsilon()
}

pub fn g_from_dbar(u: &Element) -> Element {
    u.from_dbar()
}

pub fn g_to_dbar(u: &Element) -> Element {
    u.to_dbar()
}

pub fn g_hc_project(u: &Element) -> RatFunc {
    u.hc_project()
}
