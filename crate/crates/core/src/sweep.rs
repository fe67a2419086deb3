//! Regression sweeps over all digraphs of a small order or a seeded random
//! sample, one CSV row per digraph.

use std::fmt;

use rayon::prelude::*;

use crate::budget::SearchBudget;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::rng::random_digraphs;
use crate::search::{parameter_chain, ChainReport};

/// Largest order swept exhaustively.
pub const MAX_EXHAUSTIVE_ORDER: usize = 4;

pub const CSV_HEADER: &str = "n,f,f_star,l_lo,l_hi,l_exact,lstar_lo,lstar_hi,lstar_exact,w";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    Random { count: usize, seed: u64 },
}

/// The digraphs a sweep visits, in output order.
pub fn sweep_inputs(n: usize, mode: SweepMode) -> Result<Vec<Digraph>> {
    match mode {
        SweepMode::Exhaustive if n > MAX_EXHAUSTIVE_ORDER => Err(Error::Precondition(format!(
            "exhaustive sweeps stop at order {MAX_EXHAUSTIVE_ORDER}, got {n}"
        ))),
        SweepMode::Exhaustive => Ok((0..1u64 << (n * n))
            .map(|bits| Digraph::from_bits(n, bits))
            .collect()),
        SweepMode::Random { count, seed } => Ok(random_digraphs(n, count, seed)),
    }
}

/// One CSV row. `f` and `f_star` are `None` when the solver ran out of
/// budget; the row then shows the lower bound as `>=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub n: usize,
    pub f: Option<usize>,
    pub f_lower: usize,
    pub f_star: Option<usize>,
    pub f_star_lower: usize,
    pub l: (usize, usize),
    pub l_star: (usize, usize),
    pub w: usize,
}

impl From<&ChainReport> for SweepRow {
    fn from(r: &ChainReport) -> Self {
        SweepRow {
            n: r.n,
            f: r.f.value(),
            f_lower: r.f.lower_bound(),
            f_star: r.f_star.value(),
            f_star_lower: r.f_star.lower_bound(),
            l: (r.l.lo, r.l.hi),
            l_star: (r.l_star.lo, r.l_star.hi),
            w: r.w,
        }
    }
}

impl SweepRow {
    pub fn is_budget_limited(&self) -> bool {
        self.f.is_none()
            || self.f_star.is_none()
            || self.l.0 != self.l.1
            || self.l_star.0 != self.l_star.1
    }
}

fn show(value: Option<usize>, lower: usize) -> String {
    value.map_or_else(|| format!(">={lower}"), |v| v.to_string())
}

impl fmt::Display for SweepRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            show(self.f, self.f_lower),
            show(self.f_star, self.f_star_lower),
            self.l.0,
            self.l.1,
            self.l.0 == self.l.1,
            self.l_star.0,
            self.l_star.1,
            self.l_star.0 == self.l_star.1,
            self.w
        )
    }
}

/// Runs the parameter chain on every input in parallel. Rows come back in
/// input order; a broken chain on any input is an error.
pub fn sweep(n: usize, mode: SweepMode, budget: &SearchBudget) -> Result<Vec<SweepRow>> {
    sweep_inputs(n, mode)?
        .par_iter()
        .map(|d| parameter_chain(d, budget).map(|r| SweepRow::from(&r)))
        .collect()
}

/// Header plus rows, newline-terminated.
pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_has_sixteen_rows() {
        let rows = sweep(2, SweepMode::Exhaustive, &SearchBudget::default()).unwrap();
        assert_eq!(rows.len(), 16);
        let csv = to_csv(&rows);
        assert_eq!(csv.lines().count(), 17);
        assert!(csv.starts_with(CSV_HEADER));
        // the all-ones matrix has no zeros
        assert_eq!(rows[15].to_string(), "2,0,0,2,2,true,2,2,true,1");
    }

    #[test]
    fn exhaustive_limit() {
        assert!(sweep_inputs(5, SweepMode::Exhaustive).is_err());
        assert_eq!(sweep_inputs(3, SweepMode::Exhaustive).unwrap().len(), 512);
    }

    #[test]
    fn random_sweeps_are_reproducible() {
        let mode = SweepMode::Random { count: 12, seed: 7 };
        let a = sweep(4, mode, &SearchBudget::default()).unwrap();
        let b = sweep(4, mode, &SearchBudget::default()).unwrap();
        assert_eq!(to_csv(&a), to_csv(&b));
        assert_eq!(a.len(), 12);
    }
}
