//! Pieri and dual Pieri decompositions from the zeros of the norms,
//! cross-checked against horizontal/vertical strip combinatorics and the
//! Weyl dimension formula.

use crate::algebra::{MultiIndex, Parity};
use crate::forms::{self, FormError};
use crate::coeffs::WeightPoint;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// A partition: weakly decreasing nonnegative parts, trailing zeros allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The part at `i` (0-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    /// Pad with trailing zeros to length `n`.
    pub fn padded(&self, n: usize) -> Partition {
        assert!(self.num_parts() <= n, "partition has more than n parts");
        let mut parts = self.parts.clone();
        parts.truncate(parts.iter().rposition(|&p| p > 0).map_or(0, |k| k + 1));
        parts.resize(n, 0);
        Partition { parts }
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.parts.len().max(self.parts.len())).all(|i| self.part(i) >= other.part(i))
    }

    pub fn to_weight(&self, n: usize) -> WeightPoint {
        let p = self.padded(n);
        WeightPoint::from_ints(&p.parts.iter().map(|&x| x as i64).collect::<Vec<_>>())
    }

    /// A partition from integer entries, if they are weakly decreasing and
    /// nonnegative.
    pub fn try_from_entries(entries: &[i64]) -> Option<Partition> {
        if entries.iter().any(|&e| e < 0) {
            return None;
        }
        if !entries.windows(2).all(|w| w[0] >= w[1]) {
            return None;
        }
        Some(Partition {
            parts: entries.iter().map(|&e| e as u32).collect(),
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// `lambda \ mu` has at most one box per column.
pub fn horizontal_strip(mu: &Partition, lambda: &Partition) -> bool {
    if !lambda.contains(mu) {
        return false;
    }
    let rows = lambda.parts.len().max(mu.parts.len());
    (0..rows).all(|i| lambda.part(i + 1) <= mu.part(i))
}

/// `lambda \ mu` has at most one box per row.
pub fn vertical_strip(mu: &Partition, lambda: &Partition) -> bool {
    if !lambda.contains(mu) {
        return false;
    }
    let rows = lambda.parts.len().max(mu.parts.len());
    (0..rows).all(|i| lambda.part(i) - mu.part(i) <= 1)
}

/// All exponent vectors of length `n` with entry sum `m`.
pub fn compositions(n: usize, m: u32) -> Vec<MultiIndex> {
    fn rec(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<MultiIndex>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(MultiIndex::from_slice(cur));
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            rec(cur, pos + 1, left - v, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if m == 0 {
            out.push(MultiIndex::zero(0));
        }
        return out;
    }
    let mut cur = vec![0u32; n];
    rec(&mut cur, 0, m, &mut out);
    out
}

/// All exponent vectors of length `n` with entry sum at most `d`.
pub fn compositions_up_to(n: usize, d: u32) -> Vec<MultiIndex> {
    (0..=d).flat_map(|m| compositions(n, m)).collect()
}

/// All binary exponent vectors of length `n`.
pub fn binary_indices(n: usize) -> Vec<MultiIndex> {
    (0..(1u64 << n))
        .map(|mask| MultiIndex::new((0..n).map(|k| ((mask >> k) & 1) as u32).collect()))
        .collect()
}

/// Binary exponent vectors of length `n` with exactly `m` ones.
pub fn binary_with_weight(n: usize, m: u32) -> Vec<MultiIndex> {
    binary_indices(n)
        .into_iter()
        .filter(|nu| nu.degree() == m)
        .collect()
}

/// What happened to one candidate shift in a decomposition sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NuStatus {
    /// The shifted weight is a partition with nonvanishing norm.
    Included { lambda: Partition, norm: BigRational },
    /// The shifted weight is a partition but the norm vanishes.
    ZeroNorm { lambda: Partition },
    /// Not a partition, but the norm formula still applies and vanishes.
    NonPartitionZero,
    /// Not a partition and singular: the norm formula does not apply.
    ExcludedSingular,
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub mu: Partition,
    pub m: u32,
    pub n: usize,
    pub dual: bool,
    pub entries: Vec<(MultiIndex, NuStatus)>,
}

impl Decomposition {
    pub fn partitions(&self) -> BTreeSet<Partition> {
        self.entries
            .iter()
            .filter_map(|(_, s)| match s {
                NuStatus::Included { lambda, .. } => Some(lambda.clone()),
                _ => None,
            })
            .collect()
    }

    /// Sum of dimensions over the included partitions.
    pub fn dimension_sum(&self) -> BigInt {
        self.partitions()
            .iter()
            .map(|lam| weyl_dim(lam, self.n))
            .sum()
    }

    /// The dimension the sum must reproduce.
    pub fn expected_dimension(&self) -> BigInt {
        let factor = if self.dual {
            wedge_dim(self.n, self.m)
        } else {
            sym_dim(self.n, self.m)
        };
        factor * weyl_dim(&self.mu, self.n)
    }
}

fn classify(n: usize, mu: &Partition, nu: &MultiIndex, parity: Parity) -> NuStatus {
    let mu_w = mu.to_weight(n);
    let lam_entries: Vec<i64> = (0..n)
        .map(|k| mu.part(k) as i64 + nu.get(k) as i64)
        .collect();
    match Partition::try_from_entries(&lam_entries) {
        Some(lambda) => {
            let norm = forms::evaluate_norm(n, nu, &mu_w, parity)
                .expect("a partition weight is non-singular");
            if norm.is_zero() {
                NuStatus::ZeroNorm { lambda }
            } else {
                NuStatus::Included { lambda, norm }
            }
        }
        None => match forms::evaluate_norm(n, nu, &mu_w, parity) {
            Err(FormError::SingularWeight { .. }) => NuStatus::ExcludedSingular,
            Ok(v) => {
                // a non-partition weight never carries an invariant vector
                assert!(
                    v.is_zero(),
                    "non-partition weight {lam_entries:?} had nonzero norm {v}"
                );
                NuStatus::NonPartitionZero
            }
            Err(e) => panic!("unexpected error {e}"),
        },
    }
}

/// The decomposition of the product with the degree-`m` symmetric power:
/// partitions reachable by an `m`-box shift with nonvanishing even norm.
pub fn pieri_decompose(mu: &Partition, m: u32, n: usize) -> Decomposition {
    let mu = mu.padded(n);
    let entries = compositions(n, m)
        .into_iter()
        .map(|nu| {
            let s = classify(n, &mu, &nu, Parity::Even);
            (nu, s)
        })
        .collect();
    Decomposition {
        mu,
        m,
        n,
        dual: false,
        entries,
    }
}

/// The decomposition of the product with the degree-`m` wedge power:
/// partitions reachable by a binary `m`-box shift with nonvanishing odd
/// norm.
pub fn dual_pieri_decompose(mu: &Partition, m: u32, n: usize) -> Decomposition {
    assert!(m as usize <= n, "wedge degree exceeds the rank");
    let mu = mu.padded(n);
    let entries = binary_with_weight(n, m)
        .into_iter()
        .map(|nu| {
            let s = classify(n, &mu, &nu, Parity::Odd);
            (nu, s)
        })
        .collect();
    Decomposition {
        mu,
        m,
        n,
        dual: true,
        entries,
    }
}

/// Dimension of the irreducible representation with highest weight
/// `lambda`, by the product formula over positive roots.
pub fn weyl_dim(lambda: &Partition, n: usize) -> BigInt {
    let lam = lambda.padded(n);
    let tilde: Vec<i64> = (0..n)
        .map(|i| lam.part(i) as i64 - (i as i64 + 1))
        .collect();
    let mut acc = BigRational::one();
    for i in 0..n {
        for j in (i + 1)..n {
            acc *= BigRational::new(
                BigInt::from(tilde[i] - tilde[j]),
                BigInt::from((j - i) as i64),
            );
        }
    }
    assert!(acc.is_integer(), "dimension must be an integer");
    assert!(acc.is_positive(), "dimension must be positive");
    acc.to_integer()
}

/// `dim S^m(C^n) = C(n+m-1, m)`.
pub fn sym_dim(n: usize, m: u32) -> BigInt {
    binomial(n as u64 + m as u64 - 1, m as u64)
}

/// `dim Wedge^m(C^n) = C(n, m)`.
pub fn wedge_dim(n: usize, m: u32) -> BigInt {
    binomial(n as u64, m as u64)
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigRational::one();
    for t in 0..k {
        acc *= BigRational::new(BigInt::from(n - t), BigInt::from(t + 1));
    }
    acc.to_integer()
}

/// Partitions of size at most `max_size` with at most `n` parts.
pub fn partitions_up_to(max_size: u32, n: usize) -> Vec<Partition> {
    fn rec(cur: &mut Vec<u32>, left: u32, maxpart: u32, n: usize, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()));
        if cur.len() == n {
            return;
        }
        let lim = maxpart.min(left);
        for p in (1..=lim).rev() {
            cur.push(p);
            rec(cur, left - p, p, n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    rec(&mut cur, max_size, max_size, n, &mut out);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn strip_predicates() {
        assert!(horizontal_strip(&pt(&[2, 1]), &pt(&[4, 1])));
        assert!(!horizontal_strip(&pt(&[2, 1]), &pt(&[3, 3])));
        assert!(vertical_strip(&pt(&[2, 1, 0]), &pt(&[3, 2, 0])));
        assert!(!vertical_strip(&pt(&[2, 1]), &pt(&[4, 1])));
    }

    #[test]
    fn pieri_examples() {
        let d = pieri_decompose(&pt(&[2, 1]), 2, 2);
        let expect: BTreeSet<_> = [pt(&[4, 1]), pt(&[3, 2])].into_iter().collect();
        assert_eq!(d.partitions(), expect);

        let d = pieri_decompose(&pt(&[]), 1, 3);
        let expect: BTreeSet<_> = [pt(&[1, 0, 0])].into_iter().collect();
        assert_eq!(d.partitions(), expect);

        // (1,1) + one box: only the first row can grow
        let d = pieri_decompose(&pt(&[1, 1]), 1, 2);
        let expect: BTreeSet<_> = [pt(&[2, 1])].into_iter().collect();
        assert_eq!(d.partitions(), expect);
    }

    #[test]
    fn dual_pieri_examples() {
        let d = dual_pieri_decompose(&pt(&[2, 1]), 2, 3);
        let expect: BTreeSet<_> = [pt(&[3, 2, 0]), pt(&[3, 1, 1]), pt(&[2, 2, 1])]
            .into_iter()
            .collect();
        assert_eq!(d.partitions(), expect);

        let d = dual_pieri_decompose(&pt(&[1]), 1, 1);
        let expect: BTreeSet<_> = [pt(&[2])].into_iter().collect();
        assert_eq!(d.partitions(), expect);

        let d = dual_pieri_decompose(&pt(&[2, 2]), 1, 2);
        let expect: BTreeSet<_> = [pt(&[3, 2])].into_iter().collect();
        assert_eq!(d.partitions(), expect);
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&pt(&[1, 0, 0]), 3), BigInt::from(3));
        assert_eq!(weyl_dim(&pt(&[2, 1, 0]), 3), BigInt::from(8));
        assert_eq!(weyl_dim(&pt(&[7]), 1), BigInt::from(1));
    }

    #[test]
    fn norm_zero_matches_strips_small() {
        for mu in partitions_up_to(4, 3) {
            for m in 0..=2u32 {
                let d = pieri_decompose(&mu, m, 3);
                let mu3 = mu.padded(3);
                for (_, status) in &d.entries {
                    match status {
                        NuStatus::Included { lambda, .. } => {
                            assert!(horizontal_strip(&mu3, lambda))
                        }
                        NuStatus::ZeroNorm { lambda } => {
                            assert!(!horizontal_strip(&mu3, lambda))
                        }
                        NuStatus::NonPartitionZero | NuStatus::ExcludedSingular => {}
                    }
                }
                let d = dual_pieri_decompose(&mu, m, 3);
                for (_, status) in &d.entries {
                    match status {
                        NuStatus::Included { lambda, .. } => {
                            assert!(vertical_strip(&mu3, lambda))
                        }
                        NuStatus::ZeroNorm { lambda } => {
                            assert!(!vertical_strip(&mu3, lambda))
                        }
                        NuStatus::NonPartitionZero | NuStatus::ExcludedSingular => {}
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_accounting_small() {
        for mu in partitions_up_to(4, 3) {
            for m in 0..=2u32 {
                let d = pieri_decompose(&mu, m, 3);
                assert_eq!(d.dimension_sum(), d.expected_dimension());
                let d = dual_pieri_decompose(&mu, m, 3);
                assert_eq!(d.dimension_sum(), d.expected_dimension());
            }
        }
    }
}
