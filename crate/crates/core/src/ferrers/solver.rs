//! Exact Ferrers dimension `f` and disjoint Ferrers dimension `f*` by
//! backtracking over colorings of the zero cells.
//!
//! Both searches color the zeros in row-major order with canonical color
//! numbering (color `i` is opened only after `0..i` are in use). A color
//! class of a cover only has to sit inside *some* Ferrers relation contained
//! in the zero set; that is a biorder sandwich condition checked by
//! reachability in a small constraint graph on row and column nodes. A class
//! of a partition must itself be Ferrers, which adds a 2x2 pattern check
//! whenever the pattern's corners are already decided.

use crate::budget::Meter;
use crate::digraph::{Cell, CellSet, Digraph};
use crate::ferrers::cover::{FerrersCover, ZeroColoring};

/// Result of an exact dimension search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dimension {
    Exact {
        value: usize,
        cover: FerrersCover,
    },
    /// No witness with fewer than `lower_bound` parts exists; the search
    /// stopped because of `reason`.
    Exhausted {
        lower_bound: usize,
        reason: Exhaustion,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exhaustion {
    /// Every part count up to the caller's `k_max` was refuted.
    PartLimit,
    /// The node or time budget ran out.
    Budget,
}

impl Dimension {
    pub fn value(&self) -> Option<usize> {
        match self {
            Dimension::Exact { value, .. } => Some(*value),
            Dimension::Exhausted { .. } => None,
        }
    }

    pub fn cover(&self) -> Option<&FerrersCover> {
        match self {
            Dimension::Exact { cover, .. } => Some(cover),
            Dimension::Exhausted { .. } => None,
        }
    }

    /// Largest value proven to be a lower bound.
    pub fn lower_bound(&self) -> usize {
        match self {
            Dimension::Exact { value, .. } => *value,
            Dimension::Exhausted { lower_bound, .. } => *lower_bound,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ClassRule {
    /// Each class must extend to a Ferrers relation inside the zero set.
    Extendable,
    /// Each class must be Ferrers on its own.
    Ferrers,
}

pub(crate) struct ColoringSearch<'m> {
    n: usize,
    ones: Vec<u64>,
    cells: Vec<Cell>,
    k: usize,
    rule: ClassRule,
    crossed_free: bool,
    cls_row: Vec<Vec<u64>>,
    cls_col: Vec<Vec<u64>>,
    assigned_row: Vec<u64>,
    color: Vec<usize>,
    used: usize,
    row_count: Vec<Vec<u16>>,
    col_count: Vec<Vec<u16>>,
    row_pair: Vec<Vec<u16>>,
    col_pair: Vec<Vec<u16>>,
    meter: &'m mut Meter,
}

impl<'m> ColoringSearch<'m> {
    pub(crate) fn new(
        d: &Digraph,
        k: usize,
        rule: ClassRule,
        crossed_free: bool,
        meter: &'m mut Meter,
    ) -> Self {
        let n = d.n();
        assert!(
            n <= 64,
            "exact Ferrers searches support at most 64 vertices"
        );
        assert!(k <= 32);
        let ones = (0..n)
            .map(|r| d.successors(r).fold(0u64, |m, c| m | 1 << c))
            .collect();
        let cells = d.zeros().iter().collect();
        ColoringSearch {
            n,
            ones,
            cells,
            k,
            rule,
            crossed_free,
            cls_row: vec![vec![0; n]; k],
            cls_col: vec![vec![0; n]; k],
            assigned_row: vec![0; n],
            color: Vec::new(),
            used: 0,
            row_count: vec![vec![0; k]; n],
            col_count: vec![vec![0; k]; n],
            row_pair: vec![vec![0; k]; k],
            col_pair: vec![vec![0; k]; k],
            meter,
        }
    }

    /// Runs the search; `Some` holds the color of every zero in row-major order.
    pub(crate) fn run(mut self) -> Option<ZeroColoring> {
        if self.search(0) {
            let mut coloring = ZeroColoring::new(self.n);
            for (&cell, &c) in self.cells.iter().zip(&self.color) {
                coloring.set(cell, c);
            }
            Some(coloring)
        } else {
            None
        }
    }

    fn search(&mut self, idx: usize) -> bool {
        if !self.meter.tick() {
            return false;
        }
        if idx == self.cells.len() {
            return true;
        }
        let cell = self.cells[idx];
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if !self.admissible(cell, c) {
                continue;
            }
            let opened = c == self.used;
            self.apply(cell, c);
            if opened {
                self.used += 1;
            }
            self.color.push(c);
            if self.search(idx + 1) {
                return true;
            }
            self.color.pop();
            if opened {
                self.used -= 1;
            }
            self.undo(cell, c);
            if self.meter.exhausted() {
                return false;
            }
        }
        false
    }

    /// Would row `r` reach column `s` in class `c`'s constraint graph?
    /// Rows step to their one-columns, columns step to the rows where the
    /// class has a cell in that column.
    fn reaches(&self, c: usize, r: usize, s: usize) -> bool {
        let mut rows = 1u64 << r;
        let mut cols = 0u64;
        let mut frontier_rows = rows;
        loop {
            let mut new_cols = 0u64;
            let mut fr = frontier_rows;
            while fr != 0 {
                let i = fr.trailing_zeros() as usize;
                fr &= fr - 1;
                new_cols |= self.ones[i];
            }
            new_cols &= !cols;
            if new_cols >> s & 1 == 1 {
                return true;
            }
            if new_cols == 0 {
                return false;
            }
            cols |= new_cols;
            let mut new_rows = 0u64;
            let mut fc = new_cols;
            while fc != 0 {
                let j = fc.trailing_zeros() as usize;
                fc &= fc - 1;
                new_rows |= self.cls_col[c][j];
            }
            new_rows &= !rows;
            if new_rows == 0 {
                return false;
            }
            rows |= new_rows;
            frontier_rows = new_rows;
        }
    }

    fn admissible(&self, (r, s): Cell, c: usize) -> bool {
        if self.reaches(c, r, s) {
            return false;
        }
        if self.rule == ClassRule::Ferrers && !self.patterns_ok(r, s, c) {
            return false;
        }
        if self.crossed_free && !self.crossed_ok(r, s, c) {
            return false;
        }
        true
    }

    /// Decided cells of row `i` that are not in class `c`.
    #[inline]
    fn decided_outside(&self, i: usize, c: usize, extra: Cell) -> u64 {
        let mut decided = self.ones[i] | self.assigned_row[i];
        if extra.0 == i {
            decided |= 1 << extra.1;
        }
        decided & !self.cls_row[c][i]
    }

    fn patterns_ok(&self, r: usize, s: usize, c: usize) -> bool {
        let z = (r, s);
        let sbit = 1u64 << s;
        // Patterns in class c with the new cell as a member: (r,s),(i,j) in
        // c with corners (r,j), (i,s) decided and outside c.
        let row_r_out = self.decided_outside(r, c, z) & !sbit;
        for i in 0..self.n {
            if i == r {
                continue;
            }
            let m = self.cls_row[c][i] & !sbit;
            if m == 0 {
                continue;
            }
            if self.cls_row[c][i] & sbit != 0 {
                continue;
            }
            let is_decided = (self.ones[i] | self.assigned_row[i]) & sbit != 0;
            if !is_decided {
                continue;
            }
            if m & row_r_out != 0 {
                return false;
            }
        }
        // Patterns in other classes with the new cell as a corner:
        // (r,j),(i,s) in c2, other corner (i,j) decided and outside c2.
        for c2 in 0..self.used {
            if c2 == c {
                continue;
            }
            let mask_r = self.cls_row[c2][r] & !sbit;
            if mask_r == 0 {
                continue;
            }
            let mut col_s = self.cls_col[c2][s] & !(1u64 << r);
            while col_s != 0 {
                let i = col_s.trailing_zeros() as usize;
                col_s &= col_s - 1;
                if mask_r & self.decided_outside(i, c2, z) != 0 {
                    return false;
                }
            }
        }
        true
    }

    fn crossed_ok(&self, r: usize, s: usize, c: usize) -> bool {
        let mut row_mates = 0u32;
        let mut col_mates = 0u32;
        for b in 0..self.k {
            if b == c {
                continue;
            }
            if self.row_pair[c][b] > 0 || (self.row_count[r][c] == 0 && self.row_count[r][b] > 0) {
                row_mates |= 1 << b;
            }
            if self.col_pair[c][b] > 0 || (self.col_count[s][c] == 0 && self.col_count[s][b] > 0) {
                col_mates |= 1 << b;
            }
        }
        row_mates & col_mates == 0
    }

    fn apply(&mut self, (r, s): Cell, c: usize) {
        self.cls_row[c][r] |= 1 << s;
        self.cls_col[c][s] |= 1 << r;
        self.assigned_row[r] |= 1 << s;
        if self.crossed_free {
            if self.row_count[r][c] == 0 {
                for b in 0..self.k {
                    if b != c && self.row_count[r][b] > 0 {
                        self.row_pair[c][b] += 1;
                        self.row_pair[b][c] += 1;
                    }
                }
            }
            self.row_count[r][c] += 1;
            if self.col_count[s][c] == 0 {
                for b in 0..self.k {
                    if b != c && self.col_count[s][b] > 0 {
                        self.col_pair[c][b] += 1;
                        self.col_pair[b][c] += 1;
                    }
                }
            }
            self.col_count[s][c] += 1;
        }
    }

    fn undo(&mut self, (r, s): Cell, c: usize) {
        self.cls_row[c][r] &= !(1 << s);
        self.cls_col[c][s] &= !(1 << r);
        self.assigned_row[r] &= !(1 << s);
        if self.crossed_free {
            self.row_count[r][c] -= 1;
            if self.row_count[r][c] == 0 {
                for b in 0..self.k {
                    if b != c && self.row_count[r][b] > 0 {
                        self.row_pair[c][b] -= 1;
                        self.row_pair[b][c] -= 1;
                    }
                }
            }
            self.col_count[s][c] -= 1;
            if self.col_count[s][c] == 0 {
                for b in 0..self.k {
                    if b != c && self.col_count[s][b] > 0 {
                        self.col_pair[c][b] -= 1;
                        self.col_pair[b][c] -= 1;
                    }
                }
            }
        }
    }
}

/// Smallest Ferrers relation-by-levels containing `class` and avoiding the
/// ones of `d`: rows and columns get integer levels with `row > col` on the
/// class cells and `row <= col` on the ones; the relation is `row > col`.
/// `None` when the class is not contained in any such relation.
pub fn ferrers_extension(d: &Digraph, class: &CellSet) -> Option<CellSet> {
    let n = d.n();
    let mut row_level = vec![0i64; n];
    let mut col_level = vec![0i64; n];
    for _round in 0..=(2 * n + 1) {
        let mut changed = false;
        for (i, row) in row_level.iter().enumerate() {
            for (j, col) in col_level.iter_mut().enumerate() {
                if d.has_edge(i, j) && *col < *row {
                    *col = *row;
                    changed = true;
                }
            }
        }
        for (i, j) in class.iter() {
            if row_level[i] < col_level[j] + 1 {
                row_level[i] = col_level[j] + 1;
                changed = true;
            }
        }
        if !changed {
            let mut part = CellSet::new(n);
            for (i, &ri) in row_level.iter().enumerate() {
                for (j, &cj) in col_level.iter().enumerate() {
                    if ri > cj {
                        part.insert((i, j));
                    }
                }
            }
            return Some(part);
        }
    }
    None
}

fn run_levels(
    d: &Digraph,
    k_max: usize,
    rule: ClassRule,
    meter: &mut Meter,
) -> Result<(usize, ZeroColoring), Dimension> {
    assert!(k_max >= 1, "k_max must be positive");
    for k in 1..=k_max {
        let found = ColoringSearch::new(d, k, rule, false, meter).run();
        if let Some(coloring) = found {
            return Ok((k, coloring));
        }
        if meter.exhausted() {
            return Err(Dimension::Exhausted {
                lower_bound: k,
                reason: Exhaustion::Budget,
            });
        }
    }
    Err(Dimension::Exhausted {
        lower_bound: k_max + 1,
        reason: Exhaustion::PartLimit,
    })
}

/// Ferrers dimension: fewest Ferrers relations whose union is the zero set
/// of `d` (overlaps allowed). Zero when `d` has no zeros.
pub fn exact_ferrers_dimension(d: &Digraph, k_max: usize) -> Dimension {
    exact_ferrers_dimension_with(d, k_max, &mut Meter::unlimited())
}

pub fn exact_ferrers_dimension_with(d: &Digraph, k_max: usize, meter: &mut Meter) -> Dimension {
    if d.zero_count() == 0 {
        return Dimension::Exact {
            value: 0,
            cover: FerrersCover::new(d.n(), false, Vec::new()),
        };
    }
    match run_levels(d, k_max, ClassRule::Extendable, meter) {
        Ok((k, coloring)) => {
            let parts = coloring
                .classes()
                .iter()
                .map(|class| {
                    ferrers_extension(d, class).expect("search only accepts extendable classes")
                })
                .collect();
            Dimension::Exact {
                value: k,
                cover: FerrersCover::new(d.n(), false, parts),
            }
        }
        Err(exhausted) => exhausted,
    }
}

/// Disjoint Ferrers dimension: fewest pairwise disjoint Ferrers relations
/// whose union is the zero set of `d`. Zero when `d` has no zeros.
pub fn exact_disjoint_ferrers_dimension(d: &Digraph, k_max: usize) -> Dimension {
    exact_disjoint_ferrers_dimension_with(d, k_max, &mut Meter::unlimited())
}

pub fn exact_disjoint_ferrers_dimension_with(
    d: &Digraph,
    k_max: usize,
    meter: &mut Meter,
) -> Dimension {
    if d.zero_count() == 0 {
        return Dimension::Exact {
            value: 0,
            cover: FerrersCover::new(d.n(), true, Vec::new()),
        };
    }
    match run_levels(d, k_max, ClassRule::Ferrers, meter) {
        Ok((k, coloring)) => Dimension::Exact {
            value: k,
            cover: coloring.to_cover(),
        },
        Err(exhausted) => exhausted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;
    use crate::ferrers::conflict::ferrers_dim_le2;
    use crate::ferrers::cover::verify_ferrers_cover;

    fn f(d: &Digraph) -> usize {
        let dim = exact_ferrers_dimension(d, d.n() + 1);
        let cover = dim.cover().unwrap();
        assert!(verify_ferrers_cover(d, cover).unwrap().is_accept());
        dim.value().unwrap()
    }

    fn fstar(d: &Digraph) -> usize {
        let dim = exact_disjoint_ferrers_dimension(d, d.n() + 1);
        let cover = dim.cover().unwrap();
        assert!(cover.disjoint);
        assert!(verify_ferrers_cover(d, cover).unwrap().is_accept());
        dim.value().unwrap()
    }

    #[test]
    fn all_ones_has_dimension_zero() {
        let d = Digraph::from_fn(3, |_, _| true);
        assert_eq!(f(&d), 0);
        assert_eq!(fstar(&d), 0);
    }

    #[test]
    fn ferrers_digraphs_have_dimension_one() {
        let stair = Digraph::from_matrix_text("111\n011\n001").unwrap();
        assert_eq!(f(&stair), 1);
        assert_eq!(fstar(&stair), 1);
    }

    #[test]
    fn d_n_needs_n_parts() {
        for n in 2..6 {
            let d = Family::Dn(n).digraph();
            assert_eq!(f(&d), n);
            assert_eq!(fstar(&d), n);
        }
    }

    #[test]
    fn named_values() {
        assert_eq!(f(&Family::En(5).digraph()), 3);
        assert_eq!(fstar(&Family::Cn(6).digraph()), 3);
        assert_eq!(fstar(&Family::Mkm(2, 3).digraph()), 3);
        assert_eq!(f(&Family::Mkm(2, 3).digraph()), 2);
        assert_eq!(fstar(&Family::Fn(5).digraph()), 2);
    }

    #[test]
    fn part_limit_is_reported() {
        let d = Family::Dn(4).digraph();
        assert_eq!(
            exact_disjoint_ferrers_dimension(&d, 2),
            Dimension::Exhausted {
                lower_bound: 3,
                reason: Exhaustion::PartLimit
            }
        );
    }

    #[test]
    fn budget_is_reported() {
        let d = Family::Cn(7).digraph();
        let mut meter = Meter::new(10, None);
        match exact_disjoint_ferrers_dimension_with(&d, 5, &mut meter) {
            Dimension::Exhausted { reason, .. } => assert_eq!(reason, Exhaustion::Budget),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn agrees_with_bipartite_test_on_all_3x3() {
        for bits in 0u64..(1 << 9) {
            let d = Digraph::from_bits(3, bits);
            let le2 = exact_ferrers_dimension(&d, 2).value().is_some();
            assert_eq!(le2, ferrers_dim_le2(&d).bipartite, "{d:?}");
            let fv = f(&d);
            let fs = fstar(&d);
            assert!(fv <= fs, "{d:?}");
        }
    }

    #[test]
    fn extension_contains_class_and_avoids_ones() {
        let d = Family::En(5).digraph();
        let dim = exact_ferrers_dimension(&d, 4);
        for part in &dim.cover().unwrap().parts {
            assert!(part.is_ferrers());
            assert!(part.iter().all(|(r, c)| !d.has_edge(r, c)));
        }
    }
}
