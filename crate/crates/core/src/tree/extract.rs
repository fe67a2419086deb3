use std::collections::HashMap;

use crate::digraph::{CellSet, Digraph};
use crate::error::{Error, Result};
use crate::ferrers::{verify_ferrers_cover, FerrersCover};
use crate::tree::betweenness::path_between_subtrees;
use crate::tree::rep::{verify_representation, Representation};

/// Splits the zeros of `d` into at most `leaves(host)` disjoint Ferrers parts.
///
/// Leaves `x_0..x_{k-1}` are taken in depth-first order and `P_i` is the
/// path from `x_i` to `x_{i+1}` (cyclically). Every directed host edge lies
/// on exactly one `P_i`; a zero `(u, v)` joins part `i` when the first edge
/// of the path from `S_u` to `T_v` lies on `P_i` in that direction.
pub fn extract_ferrers_partition(d: &Digraph, rep: &Representation) -> Result<FerrersCover> {
    let verdict = verify_representation(d, rep)?;
    if let Some(violation) = verdict.violation() {
        return Err(Error::InvalidRepresentation(violation.to_string()));
    }
    if let Some(v) = rep.sources.iter().position(|s| s.is_empty()) {
        return Err(Error::Precondition(format!(
            "source of vertex {} is empty",
            v + 1
        )));
    }
    if let Some(v) = rep.sinks.iter().position(|s| s.is_empty()) {
        return Err(Error::Precondition(format!(
            "sink of vertex {} is empty",
            v + 1
        )));
    }
    let n = d.n();
    if d.zero_count() == 0 {
        return Ok(FerrersCover::new(n, true, Vec::new()));
    }
    let leaves = rep.host.dfs_leaf_order();
    let k = leaves.len();
    if k < 2 {
        return Err(Error::Precondition("host needs at least two leaves".into()));
    }
    let mut part_of_edge: HashMap<(usize, usize), usize> = HashMap::new();
    for i in 0..k {
        let path = rep.host.path_between(leaves[i], leaves[(i + 1) % k]);
        for step in path.windows(2) {
            if part_of_edge.insert((step[0], step[1]), i).is_some() {
                return Err(Error::Invariant(format!(
                    "host edge ({}, {}) traversed twice in the same direction",
                    step[0] + 1,
                    step[1] + 1
                )));
            }
        }
    }
    let mut parts = vec![CellSet::new(n); k];
    for (u, v) in d.zeros().iter() {
        let path = path_between_subtrees(&rep.host, &rep.sources[u], &rep.sinks[v])?;
        let part = part_of_edge[&(path[0], path[1])];
        parts[part].insert((u, v));
    }
    let cover = FerrersCover::new(n, true, parts).without_empty_parts();
    if let Some(violation) = verify_ferrers_cover(d, &cover)?.violation() {
        return Err(Error::Invariant(format!(
            "extracted partition fails: {violation}"
        )));
    }
    Ok(cover)
}
