//! Natural unit interval orders and their incomparability graphs.
//!
//! A graph on vertices `1..=n` is stored by its m-sequence
//! `(m_1, …, m_{n-1})` with `i ≤ m_i ≤ n` nondecreasing; its edges are the
//! pairs `{i, j}` with `i < j ≤ m_i`. The area sequence `a_i = m_i - i`
//! (with `a_n = 0`) counts the higher neighbours of each vertex and is the
//! row-length data of the associated Dyck diagram.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnitIntervalGraph {
    n: usize,
    mseq: Vec<usize>,
}

/// Area sequence `(a_1, …, a_n)` of a Dyck diagram, `a_n = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DyckDiagram {
    area: Vec<usize>,
}

impl DyckDiagram {
    /// Checks `a_n = 0`, `a_i ≤ n - i` and `a_{i+1} ≥ a_i - 1`.
    pub fn new(area: Vec<usize>) -> Result<Self> {
        let n = area.len();
        if let Some(&last) = area.last() {
            if last != 0 {
                return Err(Error::InvalidArea { index: n, reason: "last entry must be 0".into() });
            }
        }
        for (i, &a) in area.iter().enumerate() {
            if a > n - 1 - i {
                return Err(Error::InvalidArea { index: i + 1, reason: format!("a_{} = {a} exceeds {}", i + 1, n - 1 - i) });
            }
            if i + 1 < n && area[i + 1] + 1 < a {
                return Err(Error::InvalidArea {
                    index: i + 2,
                    reason: format!("a_{} = {} is less than a_{} - 1 = {}", i + 2, area[i + 1], i + 1, a - 1),
                });
            }
        }
        Ok(DyckDiagram { area })
    }

    pub fn area(&self) -> &[usize] {
        &self.area
    }

    pub fn n(&self) -> usize {
        self.area.len()
    }

    /// Number of cells, `Σ a_i`.
    pub fn size(&self) -> usize {
        self.area.iter().sum()
    }

    /// Vertices `u < v` are adjacent (1-based), i.e. the diagram has that cell.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        u >= 1 && u < v && v <= u + self.area[u - 1]
    }

    /// Neighbours of `v` with a smaller label.
    pub fn lower_degree(&self, v: usize) -> usize {
        (1..v).filter(|&u| self.adjacent(u, v)).count()
    }

    pub fn graph(&self) -> UnitIntervalGraph {
        UnitIntervalGraph::from_area(&self.area).expect("validated area sequence")
    }
}

impl TryFrom<Vec<usize>> for DyckDiagram {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        DyckDiagram::new(v)
    }
}

impl From<DyckDiagram> for Vec<usize> {
    fn from(d: DyckDiagram) -> Self {
        d.area
    }
}

impl UnitIntervalGraph {
    /// Graph on `mseq.len() + 1` vertices.
    pub fn from_mseq(mseq: Vec<usize>) -> Result<Self> {
        let n = mseq.len() + 1;
        for (k, &m) in mseq.iter().enumerate() {
            let i = k + 1;
            if m < i || m > n {
                return Err(Error::InvalidMSeq { index: i, reason: format!("m_{i} = {m} is outside [{i}, {n}]") });
            }
            if k > 0 && m < mseq[k - 1] {
                return Err(Error::InvalidMSeq { index: i, reason: format!("m_{i} = {m} < m_{} = {}", i - 1, mseq[k - 1]) });
            }
        }
        Ok(UnitIntervalGraph { n, mseq })
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        UnitIntervalGraph { n: 0, mseq: Vec::new() }
    }

    pub fn from_area(area: &[usize]) -> Result<Self> {
        let d = DyckDiagram::new(area.to_vec())?;
        let n = d.n();
        if n == 0 {
            return Ok(Self::empty());
        }
        let mseq = (0..n - 1).map(|k| k + 1 + d.area[k]).collect();
        Ok(UnitIntervalGraph { n, mseq })
    }

    /// Reads an edge set on `1..=n` back into an m-sequence, failing with
    /// [`Error::NotUnitInterval`] if it is not of the form `{i < j ≤ m_i}`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let set: BTreeSet<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        if let Some(&(a, b)) = set.iter().find(|&&(a, b)| a == b || a == 0 || b > n) {
            return Err(Error::NotUnitInterval(format!("edge {{{a},{b}}} is not on distinct vertices of 1..={n}")));
        }
        if n == 0 {
            return Ok(Self::empty());
        }
        let mseq: Vec<usize> = (1..n)
            .map(|i| set.iter().filter(|e| e.0 == i).map(|e| e.1).max().unwrap_or(i))
            .collect();
        let g = UnitIntervalGraph::from_mseq(mseq).map_err(|e| Error::NotUnitInterval(e.to_string()))?;
        let rebuilt: BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
        if rebuilt != set {
            let missing = rebuilt.difference(&set).next().expect("edge sets differ");
            return Err(Error::NotUnitInterval(format!("missing edge {{{},{}}}", missing.0, missing.1)));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mseq(&self) -> &[usize] {
        &self.mseq
    }

    pub fn area(&self) -> Vec<usize> {
        let mut a: Vec<usize> = self.mseq.iter().enumerate().map(|(k, &m)| m - (k + 1)).collect();
        if self.n > 0 {
            a.push(0);
        }
        a
    }

    pub fn dyck(&self) -> DyckDiagram {
        DyckDiagram { area: self.area() }
    }

    /// Edges `(i, j)`, `i < j`, 1-based, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mseq
            .iter()
            .enumerate()
            .flat_map(|(k, &m)| (k + 2..=m).map(move |j| (k + 1, j)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.mseq.iter().enumerate().map(|(k, &m)| m - (k + 1)).sum()
    }

    pub fn edgeless(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        UnitIntervalGraph { n, mseq: (1..n).collect() }
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        UnitIntervalGraph { n, mseq: vec![n; n - 1] }
    }

    /// `P_n`, the path on `n` vertices.
    pub fn path(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        UnitIntervalGraph { n, mseq: (2..=n).collect() }
    }

    /// `L_{m,n} = P_{n+1} + K_m` on `m + n` vertices; `m = 0` gives `P_n`.
    pub fn lollipop(m: usize, n: usize) -> Result<Self> {
        if m == 0 {
            return Ok(Self::path(n));
        }
        if m < 2 {
            return Err(Error::RangeViolation(format!("lollipop needs m >= 2 (or m = 0), got m = {m}")));
        }
        Ok(Self::lollipop_unchecked(m, n))
    }

    /// Same m-sequence for any `m ≥ 1`; `L_{1,n}` is `P_{n+1}`.
    pub(crate) fn lollipop_unchecked(m: usize, n: usize) -> Self {
        let total = m + n;
        let mseq = (1..total).map(|i| if i <= n { i + 1 } else { total }).collect();
        UnitIntervalGraph { n: total, mseq }
    }

    /// `L^{(k)}_{m,n}`: the lollipop with `m_{n+1}` lowered to `m + n - k`.
    pub fn melting_lollipop(m: usize, n: usize, k: usize) -> Result<Self> {
        if m < 2 || k > m - 1 {
            return Err(Error::RangeViolation(format!("melting lollipop needs m >= 2 and 0 <= k <= m-1, got m = {m}, k = {k}")));
        }
        let mut g = Self::lollipop_unchecked(m, n);
        g.mseq[n] = m + n - k;
        Ok(g)
    }

    /// `K_n^{(k)}`: `K_n` with the edges `{1, j}`, `j > n - k`, removed.
    pub fn complete_deleted(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k > n - 1 {
            return Err(Error::RangeViolation(format!("complete_deleted needs n >= 1 and 0 <= k <= n-1, got n = {n}, k = {k}")));
        }
        let mut g = Self::complete(n);
        if n > 1 {
            g.mseq[0] = n - k;
        }
        Ok(g)
    }

    /// `G + H`: the last vertex of `g` is identified with the first of `h`.
    pub fn glue_sum(g: &Self, h: &Self) -> Result<Self> {
        if g.n == 0 || h.n == 0 {
            return Err(Error::RangeViolation("glue sum needs two nonempty graphs".into()));
        }
        let shift = g.n - 1;
        let mut edges = g.edges();
        edges.extend(h.edges().into_iter().map(|(a, b)| (a + shift, b + shift)));
        Self::from_edges(g.n + h.n - 1, &edges)
    }

    /// `G ∪ H` with `h`'s vertices placed after `g`'s.
    pub fn disjoint_union(g: &Self, h: &Self) -> Self {
        let mut area = g.area();
        area.extend(h.area());
        Self::from_area(&area).expect("concatenated areas stay valid")
    }

    /// Removes edges, keeping the vertex labels (result need not be a unit
    /// interval graph, hence the raw edge list).
    pub fn edges_without(&self, removed: &[(usize, usize)]) -> Vec<(usize, usize)> {
        let r: BTreeSet<(usize, usize)> = removed.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        self.edges().into_iter().filter(|e| !r.contains(e)).collect()
    }
}

impl fmt::Debug for UnitIntervalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NUIO(n={}, m={:?})", self.n, self.mseq)
    }
}

/// All natural unit interval graphs on `n` vertices (Catalan many), in
/// lexicographic order of area sequences.
pub fn enumerate_nuio(n: usize) -> Vec<UnitIntervalGraph> {
    fn rec(i: usize, n: usize, area: &mut Vec<usize>, out: &mut Vec<UnitIntervalGraph>) {
        if i == n {
            out.push(UnitIntervalGraph::from_area(area).expect("generated valid"));
            return;
        }
        let hi = n - 1 - i;
        let lo = area.last().map_or(0, |&a| a.saturating_sub(1));
        for a in lo..=hi {
            area.push(a);
            rec(i + 1, n, area, out);
            area.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(m: &[usize]) -> UnitIntervalGraph {
        UnitIntervalGraph::from_mseq(m.to_vec()).unwrap()
    }

    fn catalan(n: usize) -> usize {
        let mut c = 1usize;
        for i in 0..n {
            c = c * 2 * (2 * i + 1) / (i + 2);
        }
        c
    }

    #[test]
    fn families() {
        assert_eq!(UnitIntervalGraph::lollipop(6, 5).unwrap(), g(&[2, 3, 4, 5, 6, 11, 11, 11, 11, 11]));
        assert_eq!(UnitIntervalGraph::melting_lollipop(6, 5, 2).unwrap(), g(&[2, 3, 4, 5, 6, 9, 11, 11, 11, 11]));
        assert_eq!(UnitIntervalGraph::lollipop(4, 0).unwrap(), UnitIntervalGraph::complete(4));
        assert_eq!(UnitIntervalGraph::lollipop(0, 4).unwrap(), UnitIntervalGraph::path(4));
        assert!(UnitIntervalGraph::lollipop(1, 1).is_err());
        assert_eq!(UnitIntervalGraph::complete_deleted(5, 0).unwrap(), UnitIntervalGraph::complete(5));
        assert_eq!(UnitIntervalGraph::complete_deleted(5, 2).unwrap().area(), vec![2, 3, 2, 1, 0]);
        assert!(UnitIntervalGraph::melting_lollipop(3, 1, 3).is_err());
    }

    #[test]
    fn melting_degenerations() {
        for m in 2..=6 {
            for n in 0..=4 {
                let l = UnitIntervalGraph::lollipop(m, n).unwrap();
                assert_eq!(UnitIntervalGraph::melting_lollipop(m, n, 0).unwrap(), l);
                assert_eq!(l.edge_count(), m * (m - 1) / 2 + n);
                for k in 0..m {
                    assert_eq!(UnitIntervalGraph::melting_lollipop(m, n, k).unwrap().edge_count(), l.edge_count() - k);
                }
                if m >= 3 {
                    assert_eq!(
                        UnitIntervalGraph::melting_lollipop(m, n, m - 2).unwrap(),
                        UnitIntervalGraph::lollipop(m - 1, n + 1).unwrap()
                    );
                }
                assert_eq!(
                    UnitIntervalGraph::melting_lollipop(m, n, m - 1).unwrap(),
                    UnitIntervalGraph::disjoint_union(&UnitIntervalGraph::path(n + 1), &UnitIntervalGraph::complete(m - 1))
                );
            }
        }
    }

    #[test]
    fn encodings() {
        let running = UnitIntervalGraph::from_area(&[2, 2, 2, 1, 1, 1, 0]).unwrap();
        assert_eq!(running.mseq(), &[3, 4, 5, 5, 6, 7]);
        assert_eq!(running.edge_count(), 9);
        let e = g(&[1, 2, 3]);
        assert_eq!(e.area(), vec![0, 0, 0, 0]);
        assert!(e.edges().is_empty());
        assert!(UnitIntervalGraph::from_area(&[1, 1]).is_err());
        assert!(matches!(UnitIntervalGraph::from_area(&[2, 0, 0]), Err(Error::InvalidArea { index: 2, .. })));
        assert!(matches!(UnitIntervalGraph::from_mseq(vec![3, 2, 4]), Err(Error::InvalidMSeq { index: 2, .. })));
        assert!(matches!(UnitIntervalGraph::from_mseq(vec![0]), Err(Error::InvalidMSeq { index: 1, .. })));
    }

    #[test]
    fn enumeration_and_round_trips() {
        for n in 0..=8 {
            let all = enumerate_nuio(n);
            assert_eq!(all.len(), catalan(n));
            for x in &all {
                assert_eq!(&UnitIntervalGraph::from_area(&x.area()).unwrap(), x);
                assert_eq!(&UnitIntervalGraph::from_edges(n, &x.edges()).unwrap(), x);
                assert_eq!(x.edges().len(), x.area().iter().sum::<usize>());
                assert_eq!(&x.dyck().graph(), x);
            }
        }
        assert_eq!(enumerate_nuio(4).len(), 14);
    }

    #[test]
    fn glue_and_union() {
        let k2 = UnitIntervalGraph::complete(2);
        assert_eq!(UnitIntervalGraph::glue_sum(&k2, &k2).unwrap(), UnitIntervalGraph::path(3));
        for m in 2..=5 {
            for n in 0..=4 {
                let l = UnitIntervalGraph::glue_sum(&UnitIntervalGraph::path(n + 1), &UnitIntervalGraph::complete(m)).unwrap();
                assert_eq!(l, UnitIntervalGraph::lollipop(m, n).unwrap());
            }
        }
        let j = UnitIntervalGraph::glue_sum(&UnitIntervalGraph::complete(3), &UnitIntervalGraph::lollipop(4, 2).unwrap()).unwrap();
        assert_eq!(j.n(), 2 + 4 + 3 - 1);
        let u = UnitIntervalGraph::disjoint_union(&UnitIntervalGraph::path(2), &k2);
        assert_eq!(u.area(), vec![1, 0, 1, 0]);
        let x = UnitIntervalGraph::lollipop(3, 1).unwrap();
        assert_eq!(UnitIntervalGraph::disjoint_union(&x, &UnitIntervalGraph::empty()), x);
        assert_eq!(UnitIntervalGraph::disjoint_union(&UnitIntervalGraph::empty(), &x), x);
        // associativity
        let a = UnitIntervalGraph::complete(3);
        let b = UnitIntervalGraph::path(3);
        let c = UnitIntervalGraph::complete(4);
        let l = UnitIntervalGraph::glue_sum(&UnitIntervalGraph::glue_sum(&a, &b).unwrap(), &c).unwrap();
        let r = UnitIntervalGraph::glue_sum(&a, &UnitIntervalGraph::glue_sum(&b, &c).unwrap()).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn non_unit_interval_edge_sets() {
        // a 4-cycle is not a natural unit interval graph
        assert!(matches!(
            UnitIntervalGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]),
            Err(Error::NotUnitInterval(_))
        ));
        assert!(UnitIntervalGraph::from_edges(3, &[(1, 3)]).is_err());
    }
}
