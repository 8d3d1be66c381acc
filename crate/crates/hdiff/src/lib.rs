//! Exact symbolic computation in the h-deformed differential operator
//! algebras `Diff_h(n)` and `GDiff_h(n)`.
//!
//! The crate provides:
//!
//! - [`coeffs`]: the coefficient field of exact rational functions in the
//!   shifted Cartan generators, with weight shifts, the shifted Weyl action,
//!   Pochhammer symbols and evaluation at weights;
//! - [`diffh`] and [`grassh`]: normal-ordered elements of the even and odd
//!   deformed algebras, the diamond product by terminating rewriting, the
//!   contravariant anti-involution and the Harish-Chandra projection;
//! - [`forms`]: contravariant forms on the polynomial modules, closed-form
//!   norms of monomials and their evaluation at weights;
//! - [`zhelobenko`]: the Zhelobenko automorphisms, long-word composites and
//!   the route from them to the contravariant form;
//! - [`oracle`]: an independent classical `gl_n` verification layer built
//!   from Verma modules, the Shapovalov form and the extremal projector;
//! - [`pieri`]: Pieri and dual Pieri decompositions derived from the zeros
//!   of the norms, cross-checked against strip combinatorics;
//! - [`expr`]: the textual grammar for algebra elements and coefficients;
//! - [`cli`]: the command-line surface used by the `hdiff` binary.
//!
//! Everything is exact: arbitrary-precision rationals throughout, no
//! floating point anywhere.

pub mod algebra;
pub mod checks;
pub mod cli;
pub mod coeffs;
pub mod diffh;
pub mod expr;
pub mod forms;
pub mod grassh;
pub mod oracle;
pub mod pieri;
pub mod zhelobenko;

pub use algebra::{Element, Letter, MultiIndex, Parity};
pub use coeffs::{CoeffError, Perm, PochDirection, RatFunc, WeightPoint};
