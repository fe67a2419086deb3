use std::fmt;

use crate::budget::SearchBudget;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::ferrers::{
    exact_disjoint_ferrers_dimension_with, exact_ferrers_dimension_with, Dimension,
};
use crate::poset::{incidence_poset, width_and_chains};
use crate::search::{exact_catch_leafage_with, exact_leafage_from, LeafageResult};

/// All six parameters of one digraph, `f <= f* <= l <= l* <= w <= n`
/// (the `l* <= w` link only when `w >= 2`).
#[derive(Clone, Debug)]
pub struct ChainReport {
    pub n: usize,
    pub f: Dimension,
    pub f_star: Dimension,
    pub l: LeafageResult,
    pub l_star: LeafageResult,
    pub w: usize,
    pub unique_maximal: bool,
}

impl ChainReport {
    /// A unique maximal predecessor set with width at least 2 pins the
    /// catch leafage to the width without any search.
    pub fn width_certifies_catch(&self) -> bool {
        self.unique_maximal && self.w >= 2
    }

    fn upper(&self, dim: &Dimension) -> usize {
        dim.value().unwrap_or(self.n)
    }

    /// Every inequality of the chain that the computed values can decide
    /// and that fails, described in words. Empty when consistent.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut check = |ok: bool, what: String| {
            if !ok {
                out.push(what);
            }
        };
        check(
            self.f.lower_bound() <= self.upper(&self.f_star),
            format!(
                "f >= {} exceeds f* <= {}",
                self.f.lower_bound(),
                self.upper(&self.f_star)
            ),
        );
        check(
            self.f_star.lower_bound() <= self.l.hi,
            format!(
                "f* >= {} exceeds l <= {}",
                self.f_star.lower_bound(),
                self.l.hi
            ),
        );
        check(
            self.l.lo <= self.l.hi,
            format!("l interval [{}, {}] is empty", self.l.lo, self.l.hi),
        );
        check(
            self.l_star.lo <= self.l_star.hi,
            format!(
                "l* interval [{}, {}] is empty",
                self.l_star.lo, self.l_star.hi
            ),
        );
        check(
            self.l.lo <= self.l_star.hi,
            format!("l >= {} exceeds l* <= {}", self.l.lo, self.l_star.hi),
        );
        if self.w >= 2 {
            check(
                self.l_star.lo <= self.w,
                format!("l* >= {} exceeds w = {}", self.l_star.lo, self.w),
            );
        }
        check(
            self.w <= self.n,
            format!("w = {} exceeds n = {}", self.w, self.n),
        );
        if self.width_certifies_catch() && self.l_star.exact() {
            check(
                self.l_star.hi == self.w,
                format!(
                    "unique maximal element but l* = {} differs from w = {}",
                    self.l_star.hi, self.w
                ),
            );
        }
        out
    }

    /// Some parameter is only known as an interval.
    pub fn is_budget_limited(&self) -> bool {
        self.f.value().is_none()
            || self.f_star.value().is_none()
            || !self.l.exact()
            || !self.l_star.exact()
    }
}

fn show_dimension(d: &Dimension) -> String {
    match d.value() {
        Some(v) => v.to_string(),
        None => format!(">={}", d.lower_bound()),
    }
}

impl fmt::Display for ChainReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "f={} f*={} l={} l*={} w={} n={}",
            show_dimension(&self.f),
            show_dimension(&self.f_star),
            self.l,
            self.l_star,
            self.w,
            self.n
        )
    }
}

/// Computes the whole chain and checks it. Each parameter gets its own
/// meter from `budget`.
pub fn parameter_chain(d: &Digraph, budget: &SearchBudget) -> Result<ChainReport> {
    let n = d.n();
    let f = exact_ferrers_dimension_with(d, n.max(1), &mut budget.meter());
    let f_star = exact_disjoint_ferrers_dimension_with(d, n.max(1), &mut budget.meter());
    let l_star = exact_catch_leafage_with(d, budget, &mut budget.meter());
    let l = exact_leafage_from(d, budget, &f_star, &l_star, &mut budget.meter());
    let p = incidence_poset(d);
    let report = ChainReport {
        n,
        f,
        f_star,
        l,
        l_star,
        w: width_and_chains(&p).width,
        unique_maximal: p.has_unique_maximal(),
    };
    let violations = report.violations();
    if violations.is_empty() {
        Ok(report)
    } else {
        Err(Error::Invariant(format!(
            "parameter chain broken: {}",
            violations.join("; ")
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    #[test]
    fn d_4_has_equality_throughout() {
        let r = parameter_chain(&Family::Dn(4).digraph(), &SearchBudget::default()).unwrap();
        assert_eq!(r.to_string(), "f=4 f*=4 l=4 l*=4 w=4 n=4");
    }

    #[test]
    fn f_6_chain() {
        let r = parameter_chain(&Family::Fn(6).digraph(), &SearchBudget::default()).unwrap();
        assert_eq!(r.to_string(), "f=2 f*=2 l=2 l*=5 w=5 n=6");
        assert!(r.width_certifies_catch());
    }

    #[test]
    fn two_block_family() {
        let r = parameter_chain(&Family::Mkm(2, 3).digraph(), &SearchBudget::default()).unwrap();
        assert_eq!(
            (r.f.value(), r.f_star.value(), r.l.value(), r.n),
            (Some(2), Some(3), Some(3), 6)
        );
    }

    #[test]
    fn broken_chain_is_reported() {
        let mut r = parameter_chain(&Family::Dn(3).digraph(), &SearchBudget::default()).unwrap();
        r.w = 2;
        assert!(!r.violations().is_empty());
    }
}
