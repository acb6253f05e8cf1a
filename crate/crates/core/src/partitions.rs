//! Integer partitions and the bits of Young-diagram combinatorics the
//! determinant formulas need: conjugation, diagonal rank, Frobenius
//! coordinates and the partial-sum order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive parts, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates `parts`; trailing zeros are stripped, interior zeros rejected.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// Single row `(i)`; `(0)` is the empty partition.
    pub fn row(i: u32) -> Self {
        if i == 0 {
            Self::empty()
        } else {
            Partition(vec![i])
        }
    }

    /// The hook `(u+1, 1^v)`.
    pub fn hook(u: u32, v: u32) -> Self {
        let mut parts = vec![u + 1];
        parts.extend(std::iter::repeat_n(1, v as usize));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ_k` with 1-based `k`; zero beyond the length.
    pub fn part(&self, k: usize) -> u32 {
        if k == 0 {
            panic!("partition parts are 1-indexed");
        }
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        if self.len() > n {
            return Err(Error::Shape { len: self.len(), n });
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(v)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Number of boxes on the main diagonal: `max { k : λ_k ≥ k }`.
    pub fn diagonal_rank(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|(k, &p)| p as usize > *k)
            .count()
    }

    /// Frobenius coordinates `(λ_k − k, λ'_k − k)` for `k = 1..=r`.
    pub fn frobenius(&self) -> Vec<(u32, u32)> {
        let conj = self.conjugate();
        (1..=self.diagonal_rank())
            .map(|k| (self.part(k) - k as u32, conj.part(k) - k as u32))
            .collect()
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All partitions whose diagrams fit inside this one.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(outer: &[u32], cap: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(current.clone()));
            let k = current.len();
            if k == outer.len() {
                return;
            }
            for p in (1..=cap.min(outer[k])).rev() {
                current.push(p);
                rec(outer, p, current, out);
                current.pop();
            }
        }
        rec(&self.0, u32::MAX, &mut current, &mut out);
        out.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| b.cmp(a)));
        out
    }

    /// Comma-separated parts, the CLI syntax (empty for ∅).
    pub fn to_cli(&self) -> String {
        self.0
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_cli())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// `μ ⪯ λ`: every prefix sum of `μ` (zero padded) is at most the matching
/// prefix sum of `λ`, for prefixes of length `1..=n`.
pub fn dominated_partial_sums(mu: &Partition, lambda: &Partition, n: usize) -> bool {
    let (mut sm, mut sl) = (0u64, 0u64);
    for k in 1..=n {
        sm += u64::from(mu.part(k));
        sl += u64::from(lambda.part(k));
        if sm > sl {
            return false;
        }
    }
    true
}

/// Checks that `{k − λ_k − 1 : r < k ≤ l}` and `{λ'_j − j : j ≤ r}` are
/// disjoint and together give `{0, …, l − 1}`.
pub fn index_set_identity(p: &Partition) -> bool {
    let l = p.len() as i64;
    let r = p.diagonal_rank() as i64;
    let conj = p.conjugate();
    let lower: Vec<i64> = (r + 1..=l)
        .map(|k| k - i64::from(p.part(k as usize)) - 1)
        .collect();
    let upper: Vec<i64> = (1..=r)
        .map(|j| i64::from(conj.part(j as usize)) - j)
        .collect();
    let union: BTreeSet<i64> = lower.iter().chain(&upper).copied().collect();
    union.len() == lower.len() + upper.len() && union == (0..l).collect()
}

/// Partitions of exactly `weight`, in reverse-lexicographic order.
pub fn partitions_of(weight: u32) -> Vec<Partition> {
    fn rec(rest: u32, cap: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for p in (1..=rest.min(cap)).rev() {
            current.push(p);
            rec(rest - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, weight, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight `≤ max_weight` with at most `max_len` parts,
/// ordered by weight and then reverse-lexicographically.
pub fn partitions_up_to(max_weight: u32, max_len: usize) -> Vec<Partition> {
    (0..=max_weight)
        .flat_map(partitions_of)
        .filter(|p| p.len() <= max_len)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
    }

    #[test]
    fn diagonal_ranks() {
        assert_eq!(p(&[3, 3, 2]).diagonal_rank(), 2);
        assert_eq!(p(&[1, 1, 1]).diagonal_rank(), 1);
        assert_eq!(p(&[5, 4, 4, 2, 1]).diagonal_rank(), 3);
        assert_eq!(Partition::empty().diagonal_rank(), 0);
    }

    #[test]
    fn partial_sum_order() {
        assert!(dominated_partial_sums(&p(&[1, 1, 1]), &p(&[2, 1]), 3));
        assert!(!dominated_partial_sums(&p(&[3]), &p(&[2, 1]), 2));
        assert!(dominated_partial_sums(&p(&[2, 1]), &p(&[2, 1]), 2));
        assert!(dominated_partial_sums(&Partition::empty(), &p(&[1]), 1));
    }

    #[test]
    fn index_set_examples() {
        assert!(index_set_identity(&p(&[2, 2, 1])));
        assert!(index_set_identity(&p(&[1])));
        assert!(index_set_identity(&Partition::empty()));
    }

    #[test]
    fn parsing() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("2,0,1".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_order_and_counts() {
        let five: Vec<String> = partitions_of(5).iter().map(|q| q.to_cli()).collect();
        assert_eq!(five, ["5", "4,1", "3,2", "3,1,1", "2,2,1", "2,1,1,1", "1,1,1,1,1"]);
        // p(n) for n = 0..=10
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions_up_to(3, 2).len(), 1 + 1 + 2 + 2);
    }

    #[test]
    fn sub_partitions_of_21() {
        let subs = p(&[2, 1]).sub_partitions();
        let want = [p(&[]), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])];
        assert_eq!(subs, want);
        assert!(subs.iter().all(|s| s.is_contained_in(&p(&[2, 1]))));
    }

    #[test]
    fn frobenius_of_hook() {
        assert_eq!(Partition::hook(2, 3).frobenius(), vec![(2, 3)]);
        assert_eq!(p(&[4, 3, 1]).frobenius(), vec![(3, 2), (1, 0)]);
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        (0u32..=20).prop_flat_map(|w| {
            let all = partitions_of(w);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    /// Laurent form of the generating identity behind `index_set_identity`:
    /// `Σ_i t^i (1 − t^{−λ_i}) = Σ_j (t^{λ'_j − j + 1} − t^{j − λ_j})`.
    fn generating_identity(p: &Partition) -> bool {
        use std::collections::BTreeMap;
        let mut acc: BTreeMap<i64, i64> = BTreeMap::new();
        let mut bump = |e: i64, c: i64| *acc.entry(e).or_default() += c;
        for i in 1..=p.len() as i64 {
            bump(i, 1);
            bump(i - i64::from(p.part(i as usize)), -1);
        }
        let conj = p.conjugate();
        for j in 1..=p.diagonal_rank() as i64 {
            bump(i64::from(conj.part(j as usize)) - j + 1, -1);
            bump(j - i64::from(p.part(j as usize)), 1);
        }
        acc.values().all(|&c| c == 0)
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(q in arb_partition()) {
            prop_assert_eq!(q.conjugate().conjugate(), q);
        }

        #[test]
        fn diagonal_rank_is_conjugation_invariant(q in arb_partition()) {
            prop_assert_eq!(q.diagonal_rank(), q.conjugate().diagonal_rank());
        }

        #[test]
        fn frobenius_coordinates_are_nonnegative(q in arb_partition()) {
            let conj = q.conjugate();
            for k in 1..=q.diagonal_rank() {
                prop_assert!(q.part(k) >= k as u32);
                prop_assert!(conj.part(k) >= k as u32);
            }
        }

        #[test]
        fn laurent_identity_holds(q in arb_partition()) {
            prop_assert!(generating_identity(&q));
        }
    }

    #[test]
    fn index_set_identity_exhaustive_to_weight_20() {
        for w in 0..=20 {
            for q in partitions_of(w) {
                assert!(index_set_identity(&q), "fails for {q}");
            }
        }
    }
}
