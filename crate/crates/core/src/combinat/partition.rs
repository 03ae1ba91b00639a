use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition stored as its weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates that `parts` is weakly decreasing; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts an arbitrary multiset of parts, discarding zeros.
    pub fn from_multiset(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The hook `(k, 1^(n-k))`.
    pub fn hook(n: usize, k: usize) -> Self {
        let mut v = vec![k];
        v.extend(std::iter::repeat(1).take(n - k));
        Partition::from_multiset(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Cellwise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    /// Multiplicities `m_i(λ)` for each distinct part.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let j = self.0[i..].iter().take_while(|&&p| p == self.0[i]).count();
            out.push(j);
            i += j;
        }
        out
    }

    /// Multiset union of parts (the index of `e_λ e_μ`).
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_multiset(self.0.iter().chain(&other.0).copied())
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Ordered sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `co(D)`: the composition of `n` whose partial sums are the elements of `set`.
    pub fn from_descent_set(n: usize, set: &BTreeSet<usize>) -> Self {
        let mut parts = Vec::new();
        let mut prev = 0;
        for &d in set.iter().filter(|&&d| d > 0 && d < n) {
            parts.push(d - prev);
            prev = d;
        }
        if n > prev {
            parts.push(n - prev);
        }
        Composition(parts)
    }

    /// Partial sums except the total; inverse of [`Composition::from_descent_set`].
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.insert(acc);
        }
        out
    }

    pub fn sorted(&self) -> Partition {
        Partition::from_multiset(self.0.iter().copied())
    }

    /// `self` is finer than `other` (equality included): every partial sum
    /// of `other` is a partial sum of `self`.
    pub fn refines(&self, other: &Composition) -> bool {
        self.size() == other.size() && other.descent_set().is_subset(&self.descent_set())
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All partitions of `n` in decreasing lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` in lexicographic order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // Euler's pentagonal recurrence, independent of the enumerator.
    fn partition_count(n: usize) -> i64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p[n]
    }

    #[test]
    fn counts() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(compositions_of(4).len(), 8);
        for n in 0..=15 {
            let ps = partitions_of(n);
            assert_eq!(ps.len() as i64, partition_count(n));
            let set: BTreeSet<_> = ps.iter().collect();
            assert_eq!(set.len(), ps.len());
        }
        for n in 1..=10 {
            assert_eq!(compositions_of(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn conjugate_involution() {
        for n in 0..=10 {
            for p in partitions_of(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), n);
            }
        }
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap().parts(), &[2, 1]);
        assert!(Composition::new(vec![1, 0]).is_err());
        let p: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(p.parts(), &[3, 1]);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn descent_set_bijection() {
        for n in 1..=8 {
            for c in compositions_of(n) {
                assert_eq!(Composition::from_descent_set(n, &c.descent_set()), c);
            }
        }
        let c = Composition::from_descent_set(5, &BTreeSet::from([2, 3, 4]));
        assert_eq!(c.parts(), &[2, 1, 1, 1]);
    }

    #[test]
    fn refinement_includes_self() {
        let a = Composition::new(vec![2, 2]).unwrap();
        let b = Composition::new(vec![1, 1, 2]).unwrap();
        assert!(a.refines(&a));
        assert!(b.refines(&a));
        assert!(!a.refines(&b));
    }

    #[test]
    fn dominance_and_hooks() {
        let a = Partition::new(vec![3, 1]).unwrap();
        let b = Partition::new(vec![2, 2]).unwrap();
        assert!(a.dominates(&b));
        assert!(!b.dominates(&a));
        assert!(a.is_hook());
        assert!(!b.is_hook());
        assert_eq!(Partition::hook(5, 2).parts(), &[2, 1, 1, 1]);
    }
}
