use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::shape::SkewShape;
use crate::error::{Error, Result};

/// Filling of a skew shape. Row `i` holds `None` in the inner-shape columns
/// followed by its entries. Rows weakly increase left to right and columns
/// strictly increase with the row index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    rows: Vec<Vec<Option<usize>>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;
    fn try_from(r: TableauRepr) -> Result<Self> {
        Tableau::skew(&r.inner, r.rows)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr {
            inner: t.inner().parts().to_vec(),
            rows: t.rows.iter().map(|r| r.iter().flatten().copied().collect()).collect(),
        }
    }
}

impl Tableau {
    /// Straight-shape tableau from its rows, validated as semistandard.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::skew(&[], rows)
    }

    /// Skew tableau: row `i` is offset by `inner[i]` empty cells.
    pub fn skew(inner: &[usize], rows: Vec<Vec<usize>>) -> Result<Self> {
        let nrows = rows.len().max(inner.len());
        let grid = (0..nrows)
            .map(|i| {
                let off = inner.get(i).copied().unwrap_or(0);
                let mut r = vec![None; off];
                r.extend(rows.get(i).into_iter().flatten().map(|&v| Some(v)));
                r
            })
            .collect();
        let t = Tableau::from_grid(grid);
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_grid(mut rows: Vec<Vec<Option<usize>>>) -> Self {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        Tableau { rows }
    }

    pub(crate) fn grid(&self) -> &[Vec<Option<usize>>] {
        &self.rows
    }

    fn validate(&self) -> Result<()> {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
            .map_err(|e| Error::InvalidTableau(format!("outer shape: {e}")))?;
        let inner: Vec<usize> = self.rows.iter().map(|r| r.iter().take_while(|c| c.is_none()).count()).collect();
        Partition::new(inner).map_err(|e| Error::InvalidTableau(format!("inner shape: {e}")))?;
        for (i, row) in self.rows.iter().enumerate() {
            let start = row.iter().take_while(|c| c.is_none()).count();
            for j in start..row.len() {
                let v = row[j].ok_or_else(|| Error::InvalidTableau(format!("hole at ({i},{j})")))?;
                if v == 0 {
                    return Err(Error::InvalidTableau("entries must be positive".into()));
                }
                if j > start && row[j - 1].is_some_and(|u| u > v) {
                    return Err(Error::InvalidTableau(format!("row {i} decreases at column {j}")));
                }
                if i > 0 {
                    if let Some(Some(u)) = self.rows[i - 1].get(j) {
                        if *u >= v {
                            return Err(Error::InvalidTableau(format!("column {j} not strict at row {i}")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn outer(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("validated outer shape")
    }

    pub fn inner(&self) -> Partition {
        Partition::new(
            self.rows
                .iter()
                .map(|r| r.iter().take_while(|c| c.is_none()).count())
                .collect(),
        )
        .expect("validated inner shape")
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape { outer: self.outer(), inner: self.inner() }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().flatten().filter(|c| c.is_some()).count()
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<usize> {
        self.rows.get(i).and_then(|r| r.get(j)).copied().flatten()
    }

    /// Entries of each row (inner offsets dropped).
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(|r| r.iter().flatten().copied().collect()).collect()
    }

    /// `(row, column, entry)` triples in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().filter_map(move |(j, c)| c.map(|v| (i, j, v))))
    }

    /// Row-major word, rows from index 0 down.
    pub fn row_word(&self) -> Vec<usize> {
        self.cells().map(|(_, _, v)| v).collect()
    }

    /// Reading word: rows from the last (shortest) to row 0, each left to
    /// right. Two tableaux are Knuth equivalent iff these words are.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flat_map(|r| r.iter().flatten().copied()).collect()
    }

    /// Multiplicity of each value `1..=max`.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.cells().map(|c| c.2).max().unwrap_or(0);
        let mut w = vec![0; max];
        for (_, _, v) in self.cells() {
            w[v - 1] += 1;
        }
        w
    }

    pub fn is_standard(&self) -> bool {
        let mut w = self.row_word();
        w.sort_unstable();
        w.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Row index of every value of a standard tableau; `rows[v-1]`.
    pub fn row_positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.size()];
        for (i, _, v) in self.cells() {
            pos[v - 1] = i;
        }
        pos
    }

    /// `D(T)`: values `i` with `i + 1` in a strictly later row. Requires a
    /// standard tableau.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let pos = self.row_positions();
        (1..pos.len()).filter(|&i| pos[i] > pos[i - 1]).collect()
    }

    /// Tableau with every entry shifted by `by`.
    pub fn shifted(&self, by: usize) -> Tableau {
        Tableau {
            rows: self.rows.iter().map(|r| r.iter().map(|c| c.map(|v| v + by)).collect()).collect(),
        }
    }

    /// Cells holding entries in `lo..=hi`, as a (possibly skew) tableau of
    /// the same values whose inner shape is formed by the entries below
    /// `lo`. Only meaningful when those entries form a skew shape.
    pub fn restrict(&self, lo: usize, hi: usize) -> Result<Tableau> {
        let grid: Vec<Vec<Option<usize>>> = self
            .rows
            .iter()
            .map(|r| {
                let keep: Vec<Option<usize>> = r.iter().map(|c| c.filter(|v| (lo..=hi).contains(v))).collect();
                // entries below `lo` become inner cells, entries above `hi` are dropped
                let end = r.iter().rposition(|c| c.is_some_and(|v| v <= hi)).map_or(0, |p| p + 1);
                keep[..end].to_vec()
            })
            .collect();
        let t = Tableau::from_grid(grid);
        t.validate()?;
        Ok(t)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|c| c.map_or("_".to_string(), |v| v.to_string())).collect();
                format!("[{}]", cells.join(" "))
            })
            .collect();
        write!(f, "{}", rows.join(""))
    }
}

/// Row tableau `R_λ`: row `i` filled consecutively after rows `0..i`.
pub fn row_tableau(lambda: &Partition) -> Tableau {
    let mut next = 1;
    let rows = lambda
        .parts()
        .iter()
        .map(|&len| {
            let r: Vec<Option<usize>> = (next..next + len).map(Some).collect();
            next += len;
            r
        })
        .collect();
    Tableau::from_grid(rows)
}

/// Every semistandard filling of `shape` with entries in `1..=max_entry`,
/// in lexicographic order of row-major words.
pub fn ssyt_enumerate(shape: &SkewShape, max_entry: usize) -> Vec<Tableau> {
    let cells = shape.cells();
    let mut grid: Vec<Vec<Option<usize>>> = (0..shape.outer.len()).map(|i| vec![None; shape.outer.part(i)]).collect();
    let mut out = Vec::new();

    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        shape: &SkewShape,
        max: usize,
        grid: &mut Vec<Vec<Option<usize>>>,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau::from_grid(grid.clone()));
            return;
        }
        let (i, j) = cells[k];
        let mut lo = 1;
        if j > shape.inner.part(i) {
            lo = lo.max(grid[i][j - 1].expect("filled"));
        }
        if i > 0 && shape.contains_cell(i - 1, j) {
            lo = lo.max(grid[i - 1][j].expect("filled") + 1);
        }
        for v in lo..=max {
            grid[i][j] = Some(v);
            rec(k + 1, cells, shape, max, grid, out);
        }
        grid[i][j] = None;
    }

    rec(0, &cells, shape, max_entry, &mut grid, &mut out);
    out
}

/// Every standard filling of `shape`, in lexicographic order of row-major words.
pub fn syt_enumerate(shape: &SkewShape) -> Vec<Tableau> {
    let n = shape.size();
    let mut grid: Vec<Vec<Option<usize>>> = (0..shape.outer.len()).map(|i| vec![None; shape.outer.part(i)]).collect();
    let mut out = Vec::new();

    // Place 1, 2, ... into cells whose left and upper neighbours are filled.
    fn rec(v: usize, n: usize, shape: &SkewShape, grid: &mut Vec<Vec<Option<usize>>>, out: &mut Vec<Tableau>) {
        if v > n {
            out.push(Tableau::from_grid(grid.clone()));
            return;
        }
        for i in 0..shape.outer.len() {
            let j = match (shape.inner.part(i)..shape.outer.part(i)).find(|&j| grid[i][j].is_none()) {
                Some(j) => j,
                None => continue,
            };
            if i > 0 && shape.contains_cell(i - 1, j) && grid[i - 1][j].is_none() {
                continue;
            }
            grid[i][j] = Some(v);
            rec(v + 1, n, shape, grid, out);
            grid[i][j] = None;
        }
    }

    rec(1, n, shape, &mut grid, &mut out);
    out.sort_by_key(|t| t.row_word());
    out
}

/// Number of standard tableaux of straight shape via the hook-length formula.
pub fn hook_length_count(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let n = lambda.size() as u128;
    let mut num: u128 = (1..=n).product();
    let mut den: u128 = 1;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            den *= (row - j - 1 + conj.part(j) - i - 1 + 1) as u128;
        }
    }
    num /= den;
    num
}
