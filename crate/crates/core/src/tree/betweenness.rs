use std::fmt;

use crate::error::{Error, Result, Verdict};
use crate::tree::host::HostTree;
use crate::tree::rep::Subtree;

/// The unique path from `a` to `b`: first vertex in `a`, last in `b`,
/// interior in neither.
pub fn path_between_subtrees(host: &HostTree, a: &Subtree, b: &Subtree) -> Result<Vec<usize>> {
    let (Some(x), Some(y)) = (a.first(), b.first()) else {
        return Err(Error::Precondition(
            "path between subtrees needs nonempty subtrees".into(),
        ));
    };
    if let Some(v) = a.common_vertex(b) {
        return Err(Error::Precondition(format!(
            "subtrees share host vertex {}, no path between them",
            v + 1
        )));
    }
    // both subtrees are convex, so each meets the x-y path in one segment
    let full = host.path_between(x, y);
    let start = full
        .iter()
        .rposition(|&v| a.contains(v))
        .expect("x is in a");
    let len = full[start..]
        .iter()
        .position(|&v| b.contains(v))
        .expect("y is in b");
    Ok(full[start..=start + len].to_vec())
}

/// `between` lies between `a` and `b`: `a` and `b` are disjoint and the path
/// joining them, endpoints included, meets `between`.
pub fn is_between(host: &HostTree, a: &Subtree, b: &Subtree, between: &Subtree) -> bool {
    match path_between_subtrees(host, a, b) {
        Ok(path) => path.iter().any(|&v| between.contains(v)),
        Err(_) => false,
    }
}

/// Pairwise disjoint, and no member lies between two others.
pub fn is_asteroidal_collection(host: &HostTree, subtrees: &[Subtree]) -> bool {
    let m = subtrees.len();
    for i in 0..m {
        for j in i + 1..m {
            if subtrees[i].intersects(&subtrees[j]) {
                return false;
            }
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            let Ok(path) = path_between_subtrees(host, &subtrees[i], &subtrees[j]) else {
                // an empty member never lies on a path and never spans one
                continue;
            };
            let hit = (0..m)
                .filter(|&k| k != i && k != j)
                .any(|k| path.iter().any(|&v| subtrees[k].contains(v)));
            if hit {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HellyOutcome {
    /// A host vertex in every member.
    Common(usize),
    /// Indices of two disjoint members (equal when that member is empty).
    Disjoint(usize, usize),
}

/// A vertex common to all subtrees when they pairwise intersect.
///
/// Rooting the host at vertex 0, the top (shallowest vertex) of each member
/// is unique; in a pairwise intersecting family the deepest top lies in
/// every member.
pub fn helly_point(host: &HostTree, subtrees: &[Subtree]) -> Result<HellyOutcome> {
    if subtrees.is_empty() {
        return Err(Error::Precondition("helly point of an empty family".into()));
    }
    if let Some(i) = subtrees.iter().position(Subtree::is_empty) {
        return Ok(HellyOutcome::Disjoint(i, i));
    }
    let depth = depths(host);
    let top = |s: &Subtree| s.iter().min_by_key(|&v| (depth[v], v)).expect("nonempty");
    let candidate = subtrees
        .iter()
        .map(top)
        .max_by_key(|&v| (depth[v], v))
        .expect("nonempty family");
    if subtrees.iter().all(|s| s.contains(candidate)) {
        return Ok(HellyOutcome::Common(candidate));
    }
    for i in 0..subtrees.len() {
        for j in i + 1..subtrees.len() {
            if !subtrees[i].intersects(&subtrees[j]) {
                return Ok(HellyOutcome::Disjoint(i, j));
            }
        }
    }
    Err(Error::Invariant(
        "pairwise intersecting subtrees without a common vertex; some member is not connected"
            .into(),
    ))
}

fn depths(host: &HostTree) -> Vec<usize> {
    let mut depth = vec![usize::MAX; host.vertex_count()];
    depth[0] = 0;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &w in host.neighbors(v) {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    depth
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeafShortfall {
    pub leaves: usize,
    pub collection: usize,
}

impl fmt::Display for LeafShortfall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "host has {} leaves but carries an asteroidal collection of {}",
            self.leaves, self.collection
        )
    }
}

/// A host carrying an asteroidal collection of `m` subtrees has at least
/// `m` leaves. Errors when the collection is not asteroidal.
pub fn check_asteroidal_leaf_bound(
    host: &HostTree,
    subtrees: &[Subtree],
) -> Result<Verdict<LeafShortfall>> {
    if !is_asteroidal_collection(host, subtrees) {
        return Err(Error::Precondition(
            "subtrees do not form an asteroidal collection".into(),
        ));
    }
    let leaves = host.leaf_count();
    Ok(if leaves >= subtrees.len() {
        Verdict::Accept
    } else {
        Verdict::Reject(LeafShortfall {
            leaves,
            collection: subtrees.len(),
        })
    })
}
