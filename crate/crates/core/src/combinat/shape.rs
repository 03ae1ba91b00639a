use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// Skew shape `outer / inner`. Rows and columns are 0-based; row 0 has
/// length `outer[0]`, the longest row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeMismatch(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        self.inner.part(i) <= j && j < self.outer.part(i)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|i| (self.inner.part(i)..self.outer.part(i)).map(move |j| (i, j)))
            .collect()
    }

    /// Content `c(u) = i - j` of the cell in row `i`, column `j`.
    pub fn content(i: usize, j: usize) -> isize {
        i as isize - j as isize
    }

    /// Cells of the inner shape that can start a jeu de taquin slide.
    pub fn inner_corners(&self) -> Vec<(usize, usize)> {
        (0..self.inner.len())
            .filter(|&i| self.inner.part(i) > self.inner.part(i + 1))
            .map(|i| (i, self.inner.part(i) - 1))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn cells_and_corners() {
        let s = SkewShape::new(p(&[3, 2, 1]), p(&[2, 1])).unwrap();
        assert_eq!(s.size(), 3);
        assert_eq!(s.cells(), vec![(0, 2), (1, 1), (2, 0)]);
        assert_eq!(s.inner_corners(), vec![(0, 1), (1, 0)]);
        assert!(SkewShape::new(p(&[1]), p(&[2])).is_err());
    }
}
