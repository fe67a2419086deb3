//! Ferrers dimension, disjoint Ferrers dimension and the conflict graph.

mod conflict;
mod cover;
mod crossed;
mod solver;

pub use conflict::{conflict_graph, ferrers_dim_le2, BipartiteTest, ConflictGraph, Le2Witness};
pub use cover::{verify_ferrers_cover, CoverViolation, FerrersCover, ZeroColoring};
pub use crossed::{
    block_coloring_labels, block_coloring_mkm, crossed_free_partition, crossed_pair,
    min_n_forcing_crossed_pair, CrossedPair, CrossedPairMinimum,
};
pub use solver::{
    exact_disjoint_ferrers_dimension, exact_disjoint_ferrers_dimension_with,
    exact_ferrers_dimension, exact_ferrers_dimension_with, ferrers_extension, Dimension,
    Exhaustion,
};
