//! Exact arithmetic in the localized Cartan coefficient field.
//!
//! A [`RatFunc`] is a rational function in the shifted Cartan generators
//! `h1, ..., hn` with exact rational coefficients, kept in a canonical
//! reduced form: numerator and denominator share no factor and the
//! denominator is monic under the graded-lexicographic order. Weight
//! shifts, the shifted Weyl action, Pochhammer symbols and evaluation at
//! weights all live here.
//!
//! Evaluation sends `h_i` to `mu_i - i`, which absorbs the rho-shift once
//! and for all; every formula in the crate is stated in these shifted
//! generators.

pub mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

pub use poly::{gcd, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("singular evaluation: factor {factor} vanishes at the given weight")]
    SingularEvaluation { factor: String },
}

/// Direction of a Pochhammer product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochDirection {
    /// `x(x+1)...(x+a-1)`
    Up,
    /// `x(x-1)...(x-a+1)`
    Down,
}

/// A permutation of `{1, ..., n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// The simple reflection swapping `i` and `i+1` (1-based `i`).
    pub fn simple(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i < n, "simple reflection index out of range");
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// The longest element, reversing the indices.
    pub fn longest(n: usize) -> Self {
        Perm((0..n).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Image of the 0-based index `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.0[j]
    }

    /// `(w . v)(j) = w(v(j))`.
    pub fn compose(w: &Perm, v: &Perm) -> Perm {
        assert_eq!(w.n(), v.n());
        Perm(v.0.iter().map(|&j| w.0[j]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (j, &im) in self.0.iter().enumerate() {
            v[im] = j;
        }
        Perm(v)
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }
}

/// An exact rational function in the shifted Cartan generators.
///
/// The denominator is carried as a sorted list of monic factors: every
/// denominator produced by the algebra relations is a product of linear
/// polynomials, and linear polynomials are prime, so reduction is factor
/// matching and trial division instead of general gcd computation. The
/// expanded denominator that defines the canonical form is computed
/// lazily; equality, ordering and hashing see the canonical pair
/// `(num, den)`.
#[derive(Debug)]
pub struct RatFunc {
    n: usize,
    num: Poly,
    den_factors: Vec<(Poly, u32)>,
    den_cache: std::sync::OnceLock<Poly>,
}

impl Clone for RatFunc {
    fn clone(&self) -> Self {
        RatFunc {
            n: self.n,
            num: self.num.clone(),
            den_factors: self.den_factors.clone(),
            den_cache: self.den_cache.clone(),
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.num == other.num && self.den() == other.den()
    }
}

impl Eq for RatFunc {}

impl std::hash::Hash for RatFunc {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.num.hash(state);
        self.den().hash(state);
    }
}

impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.num.cmp(&other.num))
            .then_with(|| self.den().cmp(other.den()))
    }
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl RatFunc {
    fn normalized(n: usize, mut num: Poly, den_factors: Vec<(Poly, u32)>) -> RatFunc {
        if num.is_zero() {
            return RatFunc::assemble(n, num, Vec::new());
        }
        let mut copies: Vec<Poly> = Vec::new();
        for (f, m) in den_factors {
            assert!(!f.is_zero(), "zero denominator factor");
            for _ in 0..m {
                copies.push(f.clone());
            }
        }
        let mut kept: Vec<Poly> = Vec::new();
        for mut f in copies {
            let sc = f.make_monic();
            if !sc.is_one() {
                num = num.mul_scalar(&(BigRational::one() / sc));
            }
            if f.is_one() {
                continue;
            }
            if let Some(q) = num.try_div(&f) {
                num = q;
                continue;
            }
            if f.total_degree() > 1 {
                let g = gcd(&num, &f);
                if !g.is_constant() {
                    num = num.try_div(&g).expect("gcd divides numerator");
                    f = f.try_div(&g).expect("gcd divides factor");
                    let sc = f.make_monic();
                    if !sc.is_one() {
                        num = num.mul_scalar(&(BigRational::one() / sc));
                    }
                    if f.is_one() {
                        continue;
                    }
                }
            }
            kept.push(f);
        }
        kept.sort();
        let mut den_factors: Vec<(Poly, u32)> = Vec::new();
        for f in kept {
            match den_factors.last_mut() {
                Some((g, m)) if *g == f => *m += 1,
                _ => den_factors.push((f, 1)),
            }
        }
        RatFunc::assemble(n, num, den_factors)
    }

    /// Build a value whose parts are already reduced and sorted.
    fn assemble(n: usize, num: Poly, den_factors: Vec<(Poly, u32)>) -> RatFunc {
        RatFunc {
            n,
            num,
            den_factors,
            den_cache: std::sync::OnceLock::new(),
        }
    }

    pub fn zero(n: usize) -> Self {
        RatFunc::assemble(n, Poly::zero(n), Vec::new())
    }

    pub fn one(n: usize) -> Self {
        RatFunc::from_poly(Poly::one(n))
    }

    pub fn from_poly(p: Poly) -> Self {
        let n = p.n_vars();
        RatFunc::assemble(n, p, Vec::new())
    }

    pub fn from_int(n: usize, c: i64) -> Self {
        RatFunc::from_poly(Poly::from_int(n, c))
    }

    pub fn from_rational(n: usize, c: BigRational) -> Self {
        RatFunc::from_poly(Poly::constant(n, c))
    }

    /// The generator `h_i` (1-based).
    pub fn hvar(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "generator index out of range");
        RatFunc::from_poly(Poly::var(n, i - 1))
    }

    /// The difference `h_ij = h_i - h_j` (1-based, i != j).
    pub fn hij(n: usize, i: usize, j: usize) -> Self {
        RatFunc::from_poly(hij_poly(n, i, j))
    }

    /// A ratio of two explicit polynomials; errors when `den` is zero.
    pub fn from_ratio(num: Poly, den: Poly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        let n = num.n_vars();
        Ok(RatFunc::normalized(n, num, vec![(den, 1)]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    /// The expanded denominator of the canonical form (computed lazily).
    pub fn den(&self) -> &Poly {
        self.den_cache.get_or_init(|| {
            let mut den = Poly::one(self.n);
            for (f, m) in &self.den_factors {
                for _ in 0..*m {
                    den = den.mul(f);
                }
            }
            den
        })
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den_factors.is_empty()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den_factors.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        assert_eq!(self.n, other.n);
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // lcm of the factored denominators; unmatched factors multiply the
        // opposite numerator.
        let (self_extra, other_extra, lcm) = merge_factors(&self.den_factors, &other.den_factors);
        let mut a = self.num.clone();
        for (f, m) in &other_extra {
            for _ in 0..*m {
                a = a.mul(f);
            }
        }
        let mut b = other.num.clone();
        for (f, m) in &self_extra {
            for _ in 0..*m {
                b = b.mul(f);
            }
        }
        RatFunc::normalized(self.n, a.add(&b), lcm)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            n: self.n,
            num: self.num.neg(),
            den_factors: self.den_factors.clone(),
            den_cache: self.den_cache.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        assert_eq!(self.n, other.n);
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero(self.n);
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        // Each side is reduced against its own denominator. When every
        // factor is linear (hence prime), a factor divides the product of
        // the numerators only if it divides the opposite one, so reduction
        // is trial division against the small side only.
        let all_linear = self
            .den_factors
            .iter()
            .chain(other.den_factors.iter())
            .all(|(f, _)| f.is_linear());
        if !all_linear {
            let mut den_factors = self.den_factors.clone();
            den_factors.extend(other.den_factors.iter().cloned());
            return RatFunc::normalized(self.n, self.num.mul(&other.num), den_factors);
        }
        let mut a = self.num.clone();
        let mut c = other.num.clone();
        let mut kept: Vec<(Poly, u32)> = Vec::new();
        let mut push = |kept: &mut Vec<(Poly, u32)>, f: &Poly, m: u32| {
            if m == 0 {
                return;
            }
            match kept.iter_mut().find(|(g, _)| g == f) {
                Some((_, mm)) => *mm += m,
                None => kept.push((f.clone(), m)),
            }
        };
        for (f, m) in &self.den_factors {
            let mut m = *m;
            while m > 0 {
                if let Some(q) = c.try_div(f) {
                    c = q;
                    m -= 1;
                } else {
                    break;
                }
            }
            push(&mut kept, f, m);
        }
        for (f, m) in &other.den_factors {
            let mut m = *m;
            while m > 0 {
                if let Some(q) = a.try_div(f) {
                    a = q;
                    m -= 1;
                } else {
                    break;
                }
            }
            push(&mut kept, f, m);
        }
        kept.sort_by(|x, y| x.0.cmp(&y.0));
        RatFunc::assemble(self.n, a.mul(&c), kept)
    }

    pub fn mul_scalar(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.n);
        }
        RatFunc {
            n: self.n,
            num: self.num.mul_scalar(c),
            den_factors: self.den_factors.clone(),
            den_cache: self.den_cache.clone(),
        }
    }

    pub fn inverse(&self) -> Result<RatFunc, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(RatFunc::normalized(
            self.n,
            self.den().clone(),
            vec![(self.num.clone(), 1)],
        ))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc, CoeffError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Integer power; negative exponents invert (panics on inverting zero).
    pub fn powi(&self, e: i64) -> RatFunc {
        let base = if e < 0 {
            self.inverse().expect("inverting zero rational function")
        } else {
            self.clone()
        };
        let mut acc = RatFunc::one(self.n);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Replace `h_j` by `h_j + delta_j` throughout.
    pub fn shift(&self, delta: &[i64]) -> RatFunc {
        assert_eq!(delta.len(), self.n);
        if delta.iter().all(|&d| d == 0) {
            return self.clone();
        }
        // Shifting preserves leading terms, so factors stay monic and the
        // reduced form stays reduced; no renormalization needed.
        let mut den_factors: Vec<(Poly, u32)> = self
            .den_factors
            .iter()
            .map(|(f, m)| (f.shift(delta), *m))
            .collect();
        den_factors.sort_by(|x, y| x.0.cmp(&y.0));
        RatFunc::assemble(self.n, self.num.shift(delta), den_factors)
    }

    /// The shifted Weyl action: `h_j -> h_w(j)` throughout.
    pub fn weyl_permute(&self, w: &Perm) -> RatFunc {
        assert_eq!(w.n(), self.n);
        let den_factors = self
            .den_factors
            .iter()
            .map(|(f, m)| (f.permute_vars(w.images()), *m))
            .collect();
        RatFunc::normalized(self.n, self.num.permute_vars(w.images()), den_factors)
    }

    /// Pochhammer product of `a` shifted copies: rising or falling.
    pub fn pochhammer(&self, a: u32, dir: PochDirection) -> RatFunc {
        let mut acc = RatFunc::one(self.n);
        for k in 0..a {
            let step = match dir {
                PochDirection::Up => k as i64,
                PochDirection::Down => -(k as i64),
            };
            acc = acc.mul(&self.add(&RatFunc::from_int(self.n, step)));
        }
        acc
    }

    /// Exact value at a weight, substituting `h_i -> mu_i - i`.
    pub fn evaluate(&self, mu: &WeightPoint) -> Result<BigRational, CoeffError> {
        assert_eq!(mu.n(), self.n);
        let point = mu.shifted_coords();
        let dval = self.den().eval(&point);
        if dval.is_zero() {
            // name the factor that vanishes
            for (f, _) in &self.den_factors {
                if f.eval(&point).is_zero() {
                    return Err(CoeffError::SingularEvaluation {
                        factor: poly_string(f, self.n, false),
                    });
                }
            }
            return Err(CoeffError::SingularEvaluation {
                factor: poly_string(self.den(), self.n, false),
            });
        }
        Ok(self.num.eval(&point) / dval)
    }

    /// True when numerator and denominator only depend on differences of the
    /// generators, i.e. the function is invariant under the simultaneous
    /// shift of all `h_j` by a common constant.
    pub fn is_shift_invariant(&self) -> bool {
        self.num.directional_derivative_sum().is_zero()
            && self.den().directional_derivative_sum().is_zero()
    }
}

fn hij_poly(n: usize, i: usize, j: usize) -> Poly {
    assert!(i >= 1 && i <= n && j >= 1 && j <= n && i != j);
    Poly::var(n, i - 1).sub(&Poly::var(n, j - 1))
}

/// Splits two factored denominators into (extra of a, extra of b, lcm).
#[allow(clippy::type_complexity)]
fn merge_factors(
    a: &[(Poly, u32)],
    b: &[(Poly, u32)],
) -> (Vec<(Poly, u32)>, Vec<(Poly, u32)>, Vec<(Poly, u32)>) {
    let mut a_extra = Vec::new();
    let mut b_extra = Vec::new();
    let mut lcm = Vec::new();
    let mut ia = 0;
    let mut ib = 0;
    while ia < a.len() || ib < b.len() {
        if ia == a.len() {
            b_extra.push(b[ib].clone());
            lcm.push(b[ib].clone());
            ib += 1;
        } else if ib == b.len() {
            a_extra.push(a[ia].clone());
            lcm.push(a[ia].clone());
            ia += 1;
        } else {
            match a[ia].0.cmp(&b[ib].0) {
                Ordering::Less => {
                    a_extra.push(a[ia].clone());
                    lcm.push(a[ia].clone());
                    ia += 1;
                }
                Ordering::Greater => {
                    b_extra.push(b[ib].clone());
                    lcm.push(b[ib].clone());
                    ib += 1;
                }
                Ordering::Equal => {
                    let (f, ma) = a[ia].clone();
                    let mb = b[ib].1;
                    let m = ma.max(mb);
                    lcm.push((f.clone(), m));
                    if ma > mb {
                        a_extra.push((f.clone(), ma - mb));
                    } else if mb > ma {
                        b_extra.push((f.clone(), mb - ma));
                    }
                    ia += 1;
                    ib += 1;
                }
            }
        }
    }
    (a_extra, b_extra, lcm)
}

/// A weight, i.e. a point of the dual Cartan space, as exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightPoint {
    coords: Vec<BigRational>,
}

impl WeightPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        WeightPoint { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        WeightPoint {
            coords: coords
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Coordinates of the point where the generators evaluate:
    /// `h_i -> mu_i - i`.
    pub fn shifted_coords(&self) -> Vec<BigRational> {
        self.coords
            .iter()
            .enumerate()
            .map(|(k, c)| c - BigRational::from_integer(BigInt::from(k as i64 + 1)))
            .collect()
    }

    /// Value of `h_ij` at this weight (1-based indices).
    pub fn hij_value(&self, i: usize, j: usize) -> BigRational {
        let s = self.shifted_coords();
        &s[i - 1] - &s[j - 1]
    }

    /// No `h_ij`, `i < j`, evaluates to a nonpositive integer.
    pub fn is_nonsingular(&self) -> bool {
        for i in 1..=self.n() {
            for j in (i + 1)..=self.n() {
                let v = self.hij_value(i, j);
                if v.is_integer() && !v.is_positive() {
                    return false;
                }
            }
        }
        true
    }

    /// All differences `mu_i - mu_j`, `i < j`, are nonnegative integers.
    pub fn is_dominant(&self) -> bool {
        for i in 0..self.n().saturating_sub(1) {
            let d = &self.coords[i] - &self.coords[i + 1];
            if !d.is_integer() || d.is_negative() {
                return false;
            }
        }
        true
    }

    pub fn add_shift(&self, delta: &[i64]) -> WeightPoint {
        assert_eq!(delta.len(), self.n());
        WeightPoint {
            coords: self
                .coords
                .iter()
                .zip(delta)
                .map(|(c, &d)| c + BigRational::from_integer(BigInt::from(d)))
                .collect(),
        }
    }
}

impl fmt::Display for WeightPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// Renders a polynomial with `h{i}` tokens, or difference tokens `h{i}{n}`
/// when `diff` is set (the polynomial must then not involve the last
/// variable).
pub(crate) fn poly_string(p: &Poly, n: usize, diff: bool) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let token = |v: usize| -> String {
        if diff {
            format!("h{}{}", v + 1, n)
        } else {
            format!("h{}", v + 1)
        }
    };
    let mut out = String::new();
    let terms: Vec<_> = p.terms().collect();
    for (m, c) in terms.into_iter().rev() {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push('-');
        } else {
            out.push('+');
        }
        let mut factors: Vec<String> = Vec::new();
        if m.is_unit() || !mag.is_one() {
            factors.push(format!("{}", mag));
        }
        for v in 0..n {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            if e == 1 {
                factors.push(token(v));
            } else {
                factors.push(format!("{}^{}", token(v), e));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let diff = self.n >= 2 && self.n <= 9 && self.is_shift_invariant();
        let (num, den) = if diff {
            (
                self.num.set_var_zero(self.n - 1),
                self.den().set_var_zero(self.n - 1),
            )
        } else {
            (self.num.clone(), self.den().clone())
        };
        let ns = poly_string(&num, self.n, diff);
        if den.is_one() {
            return write!(f, "{}", ns);
        }
        let ds = poly_string(&den, self.n, diff);
        let num_wrapped = if num.num_terms() > 1 {
            format!("({})", ns)
        } else {
            ns
        };
        let den_needs_parens = den.num_terms() > 1 || {
            // a single monomial still needs parens when it is a product
            let m = den.leading_monomial().expect("nonzero");
            (0..self.n).filter(|&v| m.exp(v) > 0).count() > 1
        };
        let den_wrapped = if den_needs_parens {
            format!("({})", ds)
        } else {
            ds
        };
        write!(f, "{}/{}", num_wrapped, den_wrapped)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h12(n: usize) -> RatFunc {
        RatFunc::hij(n, 1, 2)
    }

    fn int(n: usize, c: i64) -> RatFunc {
        RatFunc::from_int(n, c)
    }

    #[test]
    fn field_ops_cancellation() {
        // h12 + (1 - h12) = 1
        let lhs = h12(2).add(&int(2, 1).sub(&h12(2)));
        assert!(lhs.is_one());
    }

    #[test]
    fn field_ops_factor_cancellation() {
        // (h12^2 - 1) / (h12 + 1) = h12 - 1
        let num = h12(2).mul(&h12(2)).sub(&int(2, 1));
        let den = h12(2).add(&int(2, 1));
        let r = num.checked_div(&den).unwrap();
        assert_eq!(r, h12(2).sub(&int(2, 1)));
    }

    #[test]
    fn field_ops_fraction_product() {
        // ((h12-1)/h12) * (h12/(h12+1)) = (h12-1)/(h12+1),
        // cross-checked by expanding both sides over a common denominator.
        let a = h12(2).sub(&int(2, 1)).checked_div(&h12(2)).unwrap();
        let b = h12(2).checked_div(&h12(2).add(&int(2, 1))).unwrap();
        let prod = a.mul(&b);
        let expect = h12(2)
            .sub(&int(2, 1))
            .checked_div(&h12(2).add(&int(2, 1)))
            .unwrap();
        assert_eq!(prod, expect);
        // independent expansion: num/den cross-multiplied agree
        assert_eq!(
            prod.num().mul(expect.den()),
            expect.num().mul(prod.den())
        );
    }

    #[test]
    fn shift_examples() {
        let d = h12(2);
        assert_eq!(d.shift(&[1, 0]), d.add(&int(2, 1)));
        assert_eq!(d.shift(&[1, 1]), d);
        let r = int(2, 1)
            .checked_div(&d.sub(&int(2, 1)))
            .unwrap()
            .shift(&[0, 1]);
        let expect = int(2, 1).checked_div(&d.sub(&int(2, 2))).unwrap();
        assert_eq!(r, expect);
    }

    #[test]
    fn weyl_examples() {
        let s1 = Perm::simple(1, 2);
        assert_eq!(h12(2).weyl_permute(&s1), h12(2).neg());
        let s2 = Perm::simple(2, 3);
        let h13 = RatFunc::hij(3, 1, 3);
        assert_eq!(h13.weyl_permute(&s2), RatFunc::hij(3, 1, 2));
        let f = h12(2).add(&int(2, 5));
        assert_eq!(f.weyl_permute(&Perm::identity(2)), f);
    }

    #[test]
    fn weyl_group_action_law() {
        let n = 3;
        let f = RatFunc::hij(n, 1, 2)
            .mul(&RatFunc::hvar(n, 3))
            .add(&RatFunc::hvar(n, 1));
        let v = Perm::simple(1, n);
        let w = Perm::simple(2, n);
        let lhs = f.weyl_permute(&v).weyl_permute(&w);
        let rhs = f.weyl_permute(&Perm::compose(&w, &v));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn weyl_commutes_with_field_ops() {
        let n = 3;
        let w = Perm::simple(2, n);
        let a = RatFunc::hij(n, 1, 3)
            .checked_div(&RatFunc::hij(n, 2, 3).add(&int(n, 1)))
            .unwrap();
        let b = RatFunc::hvar(n, 2).sub(&int(n, 4));
        assert_eq!(
            a.mul(&b).weyl_permute(&w),
            a.weyl_permute(&w).mul(&b.weyl_permute(&w))
        );
        assert_eq!(
            a.add(&b).weyl_permute(&w),
            a.weyl_permute(&w).add(&b.weyl_permute(&w))
        );
    }

    #[test]
    fn pochhammer_examples() {
        let d = h12(2);
        let up3 = d.pochhammer(3, PochDirection::Up);
        let expect = d.mul(&d.add(&int(2, 1))).mul(&d.add(&int(2, 2)));
        assert_eq!(up3, expect);
        assert!(d.pochhammer(0, PochDirection::Up).is_one());
        let dn2 = d.pochhammer(2, PochDirection::Down);
        assert_eq!(dn2, d.mul(&d.sub(&int(2, 1))));
    }

    #[test]
    fn evaluate_examples() {
        let mu = WeightPoint::from_ints(&[3, 1]);
        let v = h12(2).evaluate(&mu).unwrap();
        assert_eq!(v, BigRational::from_integer(BigInt::from(3)));

        let f = h12(2).sub(&int(2, 1)).checked_div(&h12(2)).unwrap();
        let v = f.evaluate(&WeightPoint::from_ints(&[1, 0])).unwrap();
        assert_eq!(v, BigRational::new(BigInt::from(1), BigInt::from(2)));

        let g = int(2, 1).checked_div(&h12(2)).unwrap();
        let err = g.evaluate(&WeightPoint::from_ints(&[1, 2])).unwrap_err();
        match err {
            CoeffError::SingularEvaluation { factor } => {
                assert_eq!(factor, "h1-h2");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn evaluate_commutes_with_shift() {
        let f = h12(2)
            .sub(&int(2, 3))
            .checked_div(&h12(2).add(&int(2, 2)))
            .unwrap();
        let delta = [2i64, -1];
        let mu = WeightPoint::from_ints(&[5, 1]);
        let via_shift = f.shift(&delta).evaluate(&mu).unwrap();
        let shifted_mu = mu.add_shift(&delta);
        let direct = f.evaluate(&shifted_mu).unwrap();
        assert_eq!(via_shift, direct);
    }

    #[test]
    fn dominance_and_singularity() {
        assert!(WeightPoint::from_ints(&[2, 1, 0]).is_dominant());
        assert!(!WeightPoint::from_ints(&[1, 2]).is_nonsingular());
        let half = WeightPoint::new(vec![
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::zero(),
        ]);
        assert!(half.is_nonsingular());
        assert!(!half.is_dominant());
    }

    #[test]
    fn canonical_display() {
        let f = h12(2)
            .sub(&int(2, 1))
            .checked_div(&h12(2).add(&int(2, 1)))
            .unwrap();
        assert_eq!(f.to_string(), "(h12-1)/(h12+1)");
        let g = h12(2).sub(&int(2, 1)).checked_div(&h12(2)).unwrap();
        assert_eq!(g.to_string(), "(h12-1)/h12");
        assert_eq!(int(2, 0).to_string(), "0");
        assert_eq!(RatFunc::hvar(2, 1).to_string(), "h1");
    }

    #[test]
    fn canonical_idempotence() {
        // normalizing an already canonical value changes nothing
        let f = h12(2)
            .sub(&int(2, 1))
            .checked_div(&h12(2).add(&int(2, 1)))
            .unwrap();
        let renorm = RatFunc::normalized(
            f.n(),
            f.num().clone(),
            vec![(f.den().clone(), 1)],
        );
        assert_eq!(f, renorm);
    }

    #[test]
    fn split_vs_composite_denominators_agree() {
        // one route builds the denominator as a single composite factor,
        // the other as split linear factors; canonical forms must agree
        let composite = int(2, 1)
            .checked_div(&h12(2).mul(&h12(2)).sub(&int(2, 1)))
            .unwrap();
        let split = int(2, 1)
            .checked_div(&h12(2).sub(&int(2, 1)))
            .unwrap()
            .checked_div(&h12(2).add(&int(2, 1)))
            .unwrap();
        assert_eq!(composite, split);
        let diff = composite.sub(&split);
        assert!(diff.is_zero());
    }

    #[test]
    fn division_by_zero_detected() {
        let z = RatFunc::zero(2);
        assert_eq!(
            h12(2).checked_div(&z).unwrap_err(),
            CoeffError::DivisionByZero
        );
    }
}
