use std::collections::BTreeMap;
use std::fmt;

use crate::digraph::{Cell, CellSet, Digraph};
use crate::error::{Error, Result, Verdict};

/// A list of Ferrers cell sets whose union is meant to be the zero set of
/// some digraph. `disjoint` records whether the certificate claims a
/// partition (a bound on `f*`) or only a cover (a bound on `f`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FerrersCover {
    pub n: usize,
    pub disjoint: bool,
    pub parts: Vec<CellSet>,
}

impl FerrersCover {
    pub fn new(n: usize, disjoint: bool, parts: Vec<CellSet>) -> Self {
        FerrersCover { n, disjoint, parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Drops empty parts, keeping the order of the others.
    pub fn without_empty_parts(mut self) -> Self {
        self.parts.retain(|p| !p.is_empty());
        self
    }
}

/// First failed condition found by [`verify_ferrers_cover`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverViolation {
    /// Part `part` contains the permutation pattern `cells`.
    NotFerrers { part: usize, cells: (Cell, Cell) },
    /// Part `part` contains `cell`, which is an edge of the digraph.
    NotAZero { part: usize, cell: Cell },
    /// The zero `cell` lies in no part.
    Uncovered { cell: Cell },
    /// `cell` lies in both parts although the cover claims disjointness.
    Overlap { parts: (usize, usize), cell: Cell },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |(r, c): Cell| format!("({},{})", r + 1, c + 1);
        match *self {
            CoverViolation::NotFerrers { part, cells } => write!(
                f,
                "part {} is not Ferrers: cells {} and {} form a permutation pattern",
                part + 1,
                c(cells.0),
                c(cells.1)
            ),
            CoverViolation::NotAZero { part, cell } => {
                write!(f, "part {} contains {}, which is a 1", part + 1, c(cell))
            }
            CoverViolation::Uncovered { cell } => write!(f, "zero {} is not covered", c(cell)),
            CoverViolation::Overlap { parts, cell } => write!(
                f,
                "cell {} lies in parts {} and {}",
                c(cell),
                parts.0 + 1,
                parts.1 + 1
            ),
        }
    }
}

/// Checks that every part is Ferrers, that the parts cover exactly the
/// zeros of `d`, and, for disjoint covers, that no cell is repeated.
pub fn verify_ferrers_cover(d: &Digraph, cover: &FerrersCover) -> Result<Verdict<CoverViolation>> {
    if cover.n != d.n() {
        return Err(Error::DimensionMismatch {
            expected: d.n(),
            found: cover.n,
        });
    }
    if let Some(part) = cover.parts.iter().find(|p| p.n() != d.n()) {
        return Err(Error::DimensionMismatch {
            expected: d.n(),
            found: part.n(),
        });
    }
    for (i, part) in cover.parts.iter().enumerate() {
        if let Some(cells) = part.permutation_pattern() {
            return Ok(Verdict::Reject(CoverViolation::NotFerrers {
                part: i,
                cells,
            }));
        }
        if let Some(cell) = part.iter().find(|&(r, c)| d.has_edge(r, c)) {
            return Ok(Verdict::Reject(CoverViolation::NotAZero { part: i, cell }));
        }
    }
    let mut owner: BTreeMap<Cell, usize> = BTreeMap::new();
    for (i, part) in cover.parts.iter().enumerate() {
        for cell in part.iter() {
            if let Some(&first) = owner.get(&cell) {
                if cover.disjoint {
                    return Ok(Verdict::Reject(CoverViolation::Overlap {
                        parts: (first, i),
                        cell,
                    }));
                }
            } else {
                owner.insert(cell, i);
            }
        }
    }
    if let Some(cell) = d.zeros().iter().find(|c| !owner.contains_key(c)) {
        return Ok(Verdict::Reject(CoverViolation::Uncovered { cell }));
    }
    Ok(Verdict::Accept)
}

/// An assignment of colors `0..` to zero cells of an `n x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZeroColoring {
    pub n: usize,
    pub colors: BTreeMap<Cell, usize>,
}

impl ZeroColoring {
    pub fn new(n: usize) -> Self {
        ZeroColoring {
            n,
            colors: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, cell: Cell, color: usize) {
        self.colors.insert(cell, color);
    }

    pub fn color(&self, cell: Cell) -> Option<usize> {
        self.colors.get(&cell).copied()
    }

    /// One more than the largest color used.
    pub fn color_count(&self) -> usize {
        self.colors.values().max().map_or(0, |&c| c + 1)
    }

    pub fn classes(&self) -> Vec<CellSet> {
        let mut classes = vec![CellSet::new(self.n); self.color_count()];
        for (&cell, &c) in &self.colors {
            classes[c].insert(cell);
        }
        classes
    }

    /// The color classes as a disjoint cover, one part per color.
    pub fn to_cover(&self) -> FerrersCover {
        FerrersCover::new(self.n, true, self.classes())
    }

    /// Colors each cell by the index of the first part containing it.
    pub fn from_cover(cover: &FerrersCover) -> Self {
        let mut coloring = ZeroColoring::new(cover.n);
        for (i, part) in cover.parts.iter().enumerate() {
            for cell in part.iter() {
                coloring.colors.entry(cell).or_insert(i);
            }
        }
        coloring
    }

    /// True iff the colored cells are exactly the zeros of `d`.
    pub fn is_total_on(&self, d: &Digraph) -> bool {
        self.n == d.n() && self.colors.keys().copied().eq(d.zeros().iter())
    }
}
