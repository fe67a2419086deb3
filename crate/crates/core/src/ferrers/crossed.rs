//! Crossed pairs of colors in partitions of the zeros of an identity matrix,
//! and the block colorings of `M_{k,m}` that avoid repeating a crossed pair.

use crate::budget::Meter;
use crate::error::{Error, Result};
use crate::families::Family;
use crate::ferrers::cover::{FerrersCover, ZeroColoring};
use crate::ferrers::solver::{ClassRule, ColoringSearch};

/// Two colors that share a row and share a column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossedPair {
    pub a: usize,
    pub b: usize,
    pub row: usize,
    pub column: usize,
}

/// Lexicographically first crossed pair `(a, b)`, `a < b`, with the first
/// row and first column where both colors occur.
pub fn crossed_pair(coloring: &ZeroColoring) -> Option<CrossedPair> {
    let n = coloring.n;
    let k = coloring.color_count();
    if k < 2 {
        return None;
    }
    // rows[r] / cols[c]: bitmask of colors present
    let mut rows = vec![0u64; n];
    let mut cols = vec![0u64; n];
    for (&(r, c), &color) in &coloring.colors {
        rows[r] |= 1 << color;
        cols[c] |= 1 << color;
    }
    for a in 0..k {
        for b in a + 1..k {
            let both = (1u64 << a) | (1u64 << b);
            let row = rows.iter().position(|&m| m & both == both);
            let column = cols.iter().position(|&m| m & both == both);
            if let (Some(row), Some(column)) = (row, column) {
                return Some(CrossedPair { a, b, row, column });
            }
        }
    }
    None
}

/// Outcome of [`min_n_forcing_crossed_pair`].
#[derive(Clone, Debug)]
pub struct CrossedPairMinimum {
    /// Smallest order forcing a crossed pair, when found within `n_max`.
    pub answer: Option<usize>,
    /// True when the budget ran out before a decision.
    pub exhausted: bool,
    /// For every order tried below the answer, a crossed-pair-free
    /// partition of the zeros of the identity into Ferrers classes.
    pub free_partitions: Vec<(usize, ZeroColoring)>,
}

/// Smallest `n <= n_max` such that every partition of the zeros of `I_n`
/// into at most `colors` Ferrers classes has a crossed pair.
pub fn min_n_forcing_crossed_pair(
    colors: usize,
    n_max: usize,
    meter: &mut Meter,
) -> CrossedPairMinimum {
    assert!(colors >= 2, "need at least two colors");
    let mut free_partitions = Vec::new();
    for n in 2..=n_max {
        match crossed_free_partition(colors, n, meter) {
            Some(coloring) => free_partitions.push((n, coloring)),
            None if meter.exhausted() => {
                return CrossedPairMinimum {
                    answer: None,
                    exhausted: true,
                    free_partitions,
                }
            }
            None => {
                return CrossedPairMinimum {
                    answer: Some(n),
                    exhausted: false,
                    free_partitions,
                }
            }
        }
    }
    CrossedPairMinimum {
        answer: None,
        exhausted: false,
        free_partitions,
    }
}

/// A partition of the zeros of `I_n` into at most `colors` Ferrers classes
/// with no crossed pair, if one exists (and the budget allows finding it).
pub fn crossed_free_partition(colors: usize, n: usize, meter: &mut Meter) -> Option<ZeroColoring> {
    let identity = Family::In(n).digraph();
    ColoringSearch::new(&identity, colors, ClassRule::Ferrers, true, meter).run()
}

/// Pairs `{x, y}`, `x < y`, ordered by `y` then `x`: (0,1), (0,2), (1,2), (0,3), ...
fn color_pairs(colors: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..colors).flat_map(|y| (0..y).map(move |x| (x, y)))
}

/// Colors the zeros of `M_{k,m}` with `colors` colors so that every class
/// is Ferrers.
///
/// Diagonal block `p` gets the `p`-th color pair `{x, y}`: zeros above its
/// diagonal take `x`, zeros below take `y`. A block below the diagonal in
/// block row `p` and block column `q` takes `x_p` when `y_q < y_p` and
/// `y_p` when the two pairs share their larger color.
pub fn block_coloring_labels(colors: usize, k: usize, m: usize) -> Result<ZeroColoring> {
    let bad = |message: String| Error::BadParameter {
        family: "block coloring".into(),
        message,
    };
    if colors < 2 {
        return Err(bad("need at least two colors".into()));
    }
    if k == 0 || m == 0 {
        return Err(bad("k and m must be positive".into()));
    }
    let pairs: Vec<(usize, usize)> = color_pairs(colors).take(k).collect();
    if pairs.len() < k {
        return Err(bad(format!(
            "k = {k} exceeds the {} color pairs available with {colors} colors",
            pairs.len()
        )));
    }
    let n = k * m;
    let mut coloring = ZeroColoring::new(n);
    for p in 0..k {
        let (xp, yp) = pairs[p];
        for a in 0..m {
            for b in 0..m {
                if a != b {
                    coloring.set((p * m + a, p * m + b), if a < b { xp } else { yp });
                }
            }
        }
        for (q, pair) in pairs.iter().enumerate().take(p) {
            let color = if pair.1 < yp { xp } else { yp };
            for a in 0..m {
                for b in 0..m {
                    coloring.set((p * m + a, q * m + b), color);
                }
            }
        }
    }
    Ok(coloring)
}

/// [`block_coloring_labels`] as a disjoint cover with empty classes dropped.
pub fn block_coloring_mkm(colors: usize, k: usize, m: usize) -> Result<FerrersCover> {
    Ok(block_coloring_labels(colors, k, m)?
        .to_cover()
        .without_empty_parts())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ferrers::cover::verify_ferrers_cover;

    fn identity_coloring(n: usize, color: impl Fn(usize, usize) -> usize) -> ZeroColoring {
        let mut z = ZeroColoring::new(n);
        for r in 0..n {
            for c in 0..n {
                if r != c {
                    z.set((r, c), color(r, c));
                }
            }
        }
        z
    }

    #[test]
    fn single_color_has_no_pair_of_distinct_colors() {
        assert_eq!(crossed_pair(&identity_coloring(3, |_, _| 0)), None);
    }

    #[test]
    fn rows_in_distinct_colors_do_not_cross() {
        let n = 4;
        assert_eq!(crossed_pair(&identity_coloring(n, |r, _| r)), None);
    }

    #[test]
    fn lexicographically_first_pair_is_reported() {
        // colors 0 and 2 cross in row 0 / column 1; 1 and 2 share rows only
        let z = identity_coloring(3, |r, c| match (r, c) {
            (0, 1) => 0,
            (0, 2) => 2,
            (2, 1) => 2,
            (1, 0) => 1,
            (1, 2) => 2,
            _ => 1,
        });
        assert_eq!(
            crossed_pair(&z),
            Some(CrossedPair {
                a: 0,
                b: 2,
                row: 0,
                column: 1
            })
        );
    }

    #[test]
    fn two_colors_force_a_cross_at_three() {
        let mut meter = Meter::unlimited();
        let result = min_n_forcing_crossed_pair(2, 6, &mut meter);
        assert_eq!(result.answer, Some(3));
        assert_eq!(result.free_partitions.len(), 1);
        let (n, coloring) = &result.free_partitions[0];
        assert_eq!(*n, 2);
        assert_eq!(crossed_pair(coloring), None);
    }

    #[test]
    fn block_coloring_small_cases_verify() {
        for colors in 2..=5 {
            let max_k = colors * (colors - 1) / 2;
            for k in 1..=max_k {
                for m in 1..=3 {
                    let d = Family::Mkm(k, m).digraph();
                    let cover = block_coloring_mkm(colors, k, m).unwrap();
                    assert!(cover.len() <= colors);
                    let verdict = verify_ferrers_cover(&d, &cover).unwrap();
                    assert!(verdict.is_accept(), "c={colors} k={k} m={m}: {verdict:?}");
                }
            }
        }
    }

    #[test]
    fn five_colors_ten_blocks_layout() {
        // Off-diagonal blocks, then the above/below colors of each diagonal block.
        let below = [
            "",
            "A",
            "BC",
            "AAA",
            "BBBD",
            "CCCDD",
            "AAAAAA",
            "BBBBBBE",
            "CCCCCCEE",
            "DDDDDDEEE",
        ];
        let diagonal = ["AB", "AC", "BC", "AD", "BD", "CD", "AE", "BE", "CE", "DE"];
        let letter = |c: usize| (b'A' + c as u8) as char;
        let m = 2;
        let z = block_coloring_labels(5, 10, m).unwrap();
        for p in 0..10 {
            let row: String = (0..p)
                .map(|q| letter(z.color((p * m, q * m)).unwrap()))
                .collect();
            assert_eq!(row, below[p]);
            let pair: String = [(0, 1), (1, 0)]
                .iter()
                .map(|&(a, b)| letter(z.color((p * m + a, p * m + b)).unwrap()))
                .collect();
            assert_eq!(pair, diagonal[p]);
            for q in 0..p {
                let color = z.color((p * m, q * m));
                assert!((0..m).all(|a| (0..m).all(|b| z.color((p * m + a, q * m + b)) == color)));
            }
        }
    }

    #[test]
    fn too_many_blocks_is_an_error() {
        assert!(block_coloring_mkm(3, 4, 2).is_err());
        assert!(block_coloring_mkm(1, 1, 2).is_err());
    }

    #[test]
    fn two_colors_split_identity_above_and_below() {
        let z = block_coloring_labels(2, 1, 4).unwrap();
        for (&(r, c), &color) in &z.colors {
            assert_eq!(color, usize::from(r > c));
        }
    }
}
