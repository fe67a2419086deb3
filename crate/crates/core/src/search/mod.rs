//! Exact leafage and catch leafage at desk scale, and the parameter chain
//! that ties them to the Ferrers dimensions and the poset width.

mod catch;
mod chain;
mod general;
mod masks;
mod trees;

use std::fmt;

pub use catch::{
    exact_catch_leafage, exact_catch_leafage_with, min_branch_points_and_vertices,
    BranchPointMinimum,
};
pub use chain::{parameter_chain, ChainReport};
pub use general::{exact_leafage, exact_leafage_from};
pub use trees::enumerate_host_trees;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::tree::{extract_ferrers_partition, verify_representation, Representation};

/// Why the reported lower bound holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LowerBoundSource {
    /// Every host tree with at least two vertices has two leaves.
    Trivial,
    /// A representation with `k` leaves yields `k` disjoint Ferrers parts.
    DisjointFerrers,
    /// Every smaller leaf count was refuted by exhaustive search.
    SearchExhaustion,
}

impl fmt::Display for LowerBoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowerBoundSource::Trivial => "trivial",
            LowerBoundSource::DisjointFerrers => "disjoint-ferrers",
            LowerBoundSource::SearchExhaustion => "search-exhaustion",
        })
    }
}

/// Value or interval for a leafage parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafageResult {
    pub lo: usize,
    pub hi: usize,
    /// Verified representation with `hi` leaves.
    pub certificate: Option<Representation>,
    pub lower_bound_source: LowerBoundSource,
    /// Largest host order searched when refuting leaf counts.
    pub host_bound: Option<usize>,
    /// Whether the host bound provably loses nothing; false when a caller
    /// capped it below the size the normal-form argument needs.
    pub bound_firm: bool,
    pub nodes: u64,
    pub budget_exhausted: bool,
}

impl LeafageResult {
    pub fn exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn value(&self) -> Option<usize> {
        self.exact().then_some(self.hi)
    }
}

impl fmt::Display for LeafageResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact() {
            write!(f, "{}", self.hi)
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

/// Simplifies, verifies and leaf-checks a search certificate, and makes
/// sure Ferrers extraction from it stays within its leaf count.
pub(crate) fn checked_certificate(
    d: &Digraph,
    rep: Representation,
    leaves: usize,
) -> Result<Representation> {
    let rep = rep.simplified();
    if let Some(violation) = verify_representation(d, &rep)?.violation() {
        return Err(Error::Invariant(format!(
            "search certificate fails: {violation}"
        )));
    }
    if rep.leaf_count() != leaves {
        return Err(Error::Invariant(format!(
            "certificate has {} leaves, expected {leaves}",
            rep.leaf_count()
        )));
    }
    if let Some(parts) = extracted_parts(d, &rep) {
        if parts > leaves {
            return Err(Error::Invariant(format!(
                "{parts} Ferrers parts extracted from a {leaves}-leaf representation"
            )));
        }
    }
    Ok(rep)
}

/// Number of parts extracted from `rep` (with empty subtrees filled in).
pub(crate) fn extracted_parts(d: &Digraph, rep: &Representation) -> Option<usize> {
    if rep.leaf_count() < 2 || d.zero_count() == 0 {
        return None;
    }
    let cover = extract_ferrers_partition(d, &rep.with_nonempty_subtrees())
        .expect("extraction from a verified representation succeeds");
    Some(cover.len())
}
