//! Host trees, subtree representations and the tools that reason about them.

mod betweenness;
mod dot;
mod extract;
mod host;
mod rep;

pub use betweenness::{
    check_asteroidal_leaf_bound, helly_point, is_asteroidal_collection, is_between,
    path_between_subtrees, HellyOutcome, LeafShortfall,
};
pub use dot::export_dot;
pub use extract::extract_ferrers_partition;
pub use host::HostTree;
pub use rep::{
    star_representation, two_block_spider, verify_representation, CatchRepresentation,
    RepViolation, Representation, Side, Subtree,
};
