//! Digraphs as square 0/1 adjacency matrices.
//!
//! Loops are ordinary cells: nothing in this crate treats the diagonal
//! specially. Indices are 0-based in the API; the text formats are
//! matrix-shaped and carry no indices at all.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A cell `(row, column)` of an `n x n` grid.
pub type Cell = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>,
}

impl Digraph {
    /// Builds a digraph on `n >= 1` vertices with `edge(u, v)` deciding `u -> v`.
    pub fn from_fn(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        assert!(n >= 1, "a digraph needs at least one vertex");
        let mut adj = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                adj.push(edge(u, v));
            }
        }
        Digraph { n, adj }
    }

    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "empty matrix".into(),
            });
        }
        if let Some(row) = rows.iter().find(|r| r.as_ref().len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.as_ref().len(),
            });
        }
        Ok(Self::from_fn(n, |u, v| rows[u].as_ref()[v]))
    }

    /// The digraph with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_fn(n, |_, _| false)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[bool] {
        &self.adj[u * self.n..(u + 1) * self.n]
    }

    pub fn successors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    pub fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(u, v))
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.successors(u).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.predecessors(v).count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count()
    }

    /// Entrywise negation, diagonal included.
    pub fn complement(&self) -> Self {
        Digraph {
            n: self.n,
            adj: self.adj.iter().map(|&b| !b).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |u, v| self.has_edge(v, u))
    }

    /// The zero cells of the adjacency matrix, i.e. the edges of the complement.
    pub fn zeros(&self) -> CellSet {
        let mut cells = CellSet::new(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if !self.has_edge(u, v) {
                    cells.insert((u, v));
                }
            }
        }
        cells
    }

    pub fn zero_count(&self) -> usize {
        self.n * self.n - self.edge_count()
    }

    /// Ferrers test by nestedness: successor sets, sorted by size, must
    /// each contain the previous one.
    pub fn is_ferrers(&self) -> bool {
        let mut rows: Vec<&[bool]> = (0..self.n).map(|u| self.row(u)).collect();
        rows.sort_by_key(|r| r.iter().filter(|&&b| b).count());
        rows.windows(2).all(|w| {
            w[0].iter()
                .zip(w[1].iter())
                .all(|(&small, &big)| !small || big)
        })
    }

    /// Ferrers test by scanning every 2x2 submatrix for a permutation pattern.
    pub fn is_ferrers_by_scan(&self) -> bool {
        self.permutation_submatrix().is_none()
    }

    /// First 2x2 permutation submatrix `(i, j), (k, l)` with ones at those
    /// cells and zeros at `(i, l)` and `(k, j)`.
    pub fn permutation_submatrix(&self) -> Option<(Cell, Cell)> {
        let n = self.n;
        for i in 0..n {
            for k in 0..n {
                if i == k {
                    continue;
                }
                for j in 0..n {
                    if !self.has_edge(i, j) || self.has_edge(k, j) {
                        continue;
                    }
                    for l in 0..n {
                        if l != j && self.has_edge(k, l) && !self.has_edge(i, l) {
                            return Some(((i, j), (k, l)));
                        }
                    }
                }
            }
        }
        None
    }

    /// Parses the matrix text format, ignoring spaces, tabs and blank lines.
    pub fn from_matrix_text(text: &str) -> Result<Self> {
        parse_matrix(text, false)
    }

    /// Parses the matrix text format, rejecting any whitespace inside lines
    /// and any blank line other than a single trailing newline.
    pub fn from_matrix_text_strict(text: &str) -> Result<Self> {
        parse_matrix(text, true)
    }

    /// One line per row, characters `0`/`1`, trailing newline.
    pub fn to_matrix_text(&self) -> String {
        let mut out = String::with_capacity(self.n * (self.n + 1));
        for u in 0..self.n {
            for &b in self.row(u) {
                out.push(if b { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Row-major bit index, least significant bit = cell (0, 0). Only
    /// meaningful for `n * n <= 64`.
    pub fn to_bits(&self) -> u64 {
        debug_assert!(self.n * self.n <= 64);
        self.adj
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &b)| acc | (u64::from(b) << i))
    }

    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(n * n <= 64);
        Self::from_fn(n, |u, v| bits >> (u * n + v) & 1 == 1)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|u| {
                self.row(u)
                    .iter()
                    .map(|&b| if b { '1' } else { '0' })
                    .collect()
            })
            .collect();
        write!(f, "Digraph[{}]", rows.join("/"))
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_matrix_text())
    }
}

fn parse_matrix(text: &str, strict: bool) -> Result<Digraph> {
    let mut rows: Vec<(usize, Vec<bool>)> = Vec::new();
    let lines: Vec<&str> = text.lines().collect();
    for (idx, raw) in lines.iter().enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() {
            if strict {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: "blank line".into(),
                });
            }
            continue;
        }
        let mut row = Vec::with_capacity(line.len());
        for (col, ch) in line.chars().enumerate() {
            match ch {
                '0' => row.push(false),
                '1' => row.push(true),
                ' ' | '\t' if !strict => {}
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        column: col + 1,
                        message: format!("unexpected character {ch:?}"),
                    })
                }
            }
        }
        rows.push((line_no, row));
    }
    let Some((_, first)) = rows.first() else {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "empty matrix".into(),
        });
    };
    let n = first.len();
    for (line_no, row) in &rows {
        if row.len() != n {
            return Err(Error::Parse {
                line: *line_no,
                column: row.len().min(n) + 1,
                message: format!("row has {} entries, expected {n}", row.len()),
            });
        }
    }
    if rows.len() != n {
        let line = rows.last().map_or(1, |(l, _)| *l);
        return Err(Error::Parse {
            line,
            column: 1,
            message: format!("matrix is not square: {} rows of length {n}", rows.len()),
        });
    }
    Ok(Digraph::from_fn(n, |u, v| rows[u].1[v]))
}

/// A set of cells of an `n x n` grid, viewed as a relation on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CellSet {
    n: usize,
    cells: BTreeSet<Cell>,
}

impl CellSet {
    pub fn new(n: usize) -> Self {
        CellSet {
            n,
            cells: BTreeSet::new(),
        }
    }

    pub fn from_cells(n: usize, cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let mut set = CellSet::new(n);
        for (r, c) in cells {
            if r >= n || c >= n {
                return Err(Error::Precondition(format!(
                    "cell ({r}, {c}) outside a {n}x{n} grid"
                )));
            }
            set.cells.insert((r, c));
        }
        Ok(set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Panics when the cell lies outside the grid.
    pub fn insert(&mut self, cell: Cell) -> bool {
        assert!(cell.0 < self.n && cell.1 < self.n, "cell outside grid");
        self.cells.insert(cell)
    }

    pub fn remove(&mut self, cell: &Cell) -> bool {
        self.cells.remove(cell)
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.cells.contains(cell)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    /// True iff no two cells `(i, j), (k, l)` with `i != k`, `j != l` lack
    /// both corners `(i, l)` and `(k, j)`.
    pub fn is_ferrers(&self) -> bool {
        self.permutation_pattern().is_none()
    }

    /// The first pair of cells forming a 2x2 permutation pattern, if any.
    pub fn permutation_pattern(&self) -> Option<(Cell, Cell)> {
        for &(i, j) in &self.cells {
            for &(k, l) in &self.cells {
                if i != k
                    && j != l
                    && !self.cells.contains(&(i, l))
                    && !self.cells.contains(&(k, j))
                {
                    return Some(((i, j), (k, l)));
                }
            }
        }
        None
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_fn(self.n.max(1), |u, v| self.cells.contains(&(u, v)))
    }
}

impl FromIterator<Cell> for CellSet {
    /// Grid order is one more than the largest index seen.
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        let cells: BTreeSet<Cell> = iter.into_iter().collect();
        let n = cells.iter().map(|&(r, c)| r.max(c) + 1).max().unwrap_or(0);
        CellSet { n, cells }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(text: &str) -> Digraph {
        Digraph::from_matrix_text(text).unwrap()
    }

    #[test]
    fn parses_identity_and_j_minus_i() {
        let i2 = d("10\n01");
        assert_eq!(i2, Digraph::from_fn(2, |u, v| u == v));
        let d3 = d("011\n101\n110");
        assert_eq!(d3, Digraph::from_fn(3, |u, v| u != v));
    }

    #[test]
    fn parses_single_loop_with_trailing_newline() {
        let g = d("1\n");
        assert_eq!(g.n(), 1);
        assert!(g.has_edge(0, 0));
    }

    #[test]
    fn lenient_mode_ignores_spaces_and_blank_lines() {
        let g = d("1 0 1\n\n0 1 0\n1 1 1\n");
        assert_eq!(g.to_matrix_text(), "101\n010\n111\n");
        assert!(Digraph::from_matrix_text_strict("1 0 1\n010\n111\n").is_err());
        assert!(Digraph::from_matrix_text_strict("101\n\n010\n111\n").is_err());
        assert!(Digraph::from_matrix_text_strict("101\n010\n111\n").is_ok());
    }

    #[test]
    fn parse_errors_name_position() {
        match Digraph::from_matrix_text("10\n0x") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 2)),
            other => panic!("unexpected {other:?}"),
        }
        match Digraph::from_matrix_text("10\n011") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Digraph::from_matrix_text("101\n010"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Digraph::from_matrix_text("\n  \n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn complement_examples() {
        let d3 = d("011\n101\n110");
        assert_eq!(d3.complement(), d("100\n010\n001"));
        assert_eq!(d("11\n11").complement(), d("00\n00"));
    }

    #[test]
    fn ferrers_examples() {
        let stair = d("111\n011\n001");
        assert!(stair.is_ferrers() && stair.is_ferrers_by_scan());
        let i2 = d("10\n01");
        assert!(!i2.is_ferrers() && !i2.is_ferrers_by_scan());
        let d3 = d("011\n101\n110");
        assert!(!d3.is_ferrers() && !d3.is_ferrers_by_scan());
    }

    #[test]
    fn ferrers_tests_agree_on_all_3x3() {
        for bits in 0u64..(1 << 9) {
            let g = Digraph::from_bits(3, bits);
            assert_eq!(g.is_ferrers(), g.is_ferrers_by_scan(), "{g:?}");
        }
        for bits in 0u64..(1 << 4) {
            let g = Digraph::from_bits(2, bits);
            assert_eq!(g.is_ferrers(), g.is_ferrers_by_scan(), "{g:?}");
        }
    }

    #[test]
    fn cellset_ferrers_examples() {
        assert!(CellSet::new(3).is_ferrers());
        let perm = CellSet::from_cells(2, [(0, 0), (1, 1)]).unwrap();
        assert!(!perm.is_ferrers());
        assert_eq!(perm.permutation_pattern(), Some(((0, 0), (1, 1))));
        assert!(CellSet::from_cells(2, [(2, 0)]).is_err());
    }

    #[test]
    fn bits_round_trip() {
        let g = d("011\n100\n110");
        assert_eq!(Digraph::from_bits(3, g.to_bits()), g);
    }
}
