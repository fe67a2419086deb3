use std::collections::BTreeSet;
use std::fmt;

use crate::digraph::Digraph;
use crate::error::{Error, Result, Verdict};
use crate::tree::host::HostTree;

/// A set of host vertices. Valid subtrees are connected or empty; the set
/// itself does not know its host, so connectivity is checked against one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subtree(BTreeSet<usize>);

impl Subtree {
    pub fn empty() -> Self {
        Subtree(BTreeSet::new())
    }

    pub fn single(v: usize) -> Self {
        Subtree(BTreeSet::from([v]))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn intersects(&self, other: &Subtree) -> bool {
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().any(|v| big.contains(v))
    }

    pub fn common_vertex(&self, other: &Subtree) -> Option<usize> {
        self.iter().find(|&v| other.contains(v))
    }

    /// Connected in `host` (the empty set counts as connected).
    pub fn is_connected_in(&self, host: &HostTree) -> bool {
        match self.first() {
            None => true,
            Some(start) => {
                self.iter().all(|v| v < host.vertex_count())
                    && host.component_of(start, |v| self.contains(v)).len() == self.len()
            }
        }
    }

    pub fn from_mask(mask: u64) -> Self {
        Subtree((0..64).filter(|&v| mask >> v & 1 == 1).collect())
    }
}

impl FromIterator<usize> for Subtree {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subtree(iter.into_iter().collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Source,
    Sink,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Source => "source",
            Side::Sink => "sink",
        })
    }
}

/// Host tree plus one source subtree `S_v` and one sink subtree `T_v` per
/// digraph vertex; `u -> v` is represented by `S_u` meeting `T_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub host: HostTree,
    pub sources: Vec<Subtree>,
    pub sinks: Vec<Subtree>,
}

impl Representation {
    pub fn n(&self) -> usize {
        self.sources.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.host.leaf_count()
    }

    /// Every sink subtree is a single vertex.
    pub fn is_catch(&self) -> bool {
        self.sinks.iter().all(|t| t.len() == 1)
    }

    pub fn has_empty_subtree(&self) -> bool {
        self.sources
            .iter()
            .chain(&self.sinks)
            .any(Subtree::is_empty)
    }

    /// The digraph this representation encodes.
    pub fn digraph(&self) -> Digraph {
        Digraph::from_fn(self.n().max(1), |u, v| {
            self.sources[u].intersects(&self.sinks[v])
        })
    }

    /// Replaces empty subtrees by pendant vertices without changing the
    /// leaf count: a two-vertex tail `x - a - b` hangs off a leaf `x`, empty
    /// sources become `{a}` and empty sinks become `{b}`. Subtrees that
    /// contained `x` are left alone, so neither tail vertex meets them.
    pub fn with_nonempty_subtrees(&self) -> Representation {
        if !self.has_empty_subtree() {
            return self.clone();
        }
        let anchor = self.host.leaves()[0];
        let a = self.host.vertex_count();
        let b = a + 1;
        let mut edges = self.host.edges();
        edges.push((anchor, a));
        edges.push((a, b));
        let host = HostTree::from_edges(b + 1, &edges).expect("pendant tail keeps a tree");
        let fill = |list: &[Subtree], v: usize| -> Vec<Subtree> {
            list.iter()
                .map(|s| {
                    if s.is_empty() {
                        Subtree::single(v)
                    } else {
                        s.clone()
                    }
                })
                .collect()
        };
        Representation {
            sources: fill(&self.sources, a),
            sinks: fill(&self.sinks, b),
            host,
        }
    }

    /// Removes host vertices that carry no information: a degree-2 vertex
    /// whose every containing subtree also contains both neighbours is
    /// suppressed, and a leaf whose every containing subtree also contains
    /// its neighbour is deleted when that keeps the leaf count. Repeats
    /// until nothing changes.
    pub fn simplified(&self) -> Representation {
        let mut rep = self.clone();
        while let Some(next) = rep.simplify_once() {
            rep = next;
        }
        rep
    }

    fn simplify_once(&self) -> Option<Representation> {
        let host = &self.host;
        if host.vertex_count() <= 2 {
            return None;
        }
        let all = || self.sources.iter().chain(&self.sinks);
        for x in 0..host.vertex_count() {
            let nb = host.neighbors(x);
            let removable = match nb.len() {
                1 => {
                    let y = nb[0];
                    // deleting x must not lower the leaf count
                    host.degree(y) == 2 && all().all(|s| !s.contains(x) || s.contains(y))
                }
                2 => all().all(|s| !s.contains(x) || (s.contains(nb[0]) && s.contains(nb[1]))),
                _ => false,
            };
            if removable {
                return Some(self.without_vertex(x));
            }
        }
        None
    }

    fn without_vertex(&self, x: usize) -> Representation {
        let relabel = |v: usize| if v > x { v - 1 } else { v };
        let nb = self.host.neighbors(x).to_vec();
        let mut edges: Vec<(usize, usize)> = self
            .host
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != x && b != x)
            .map(|(a, b)| (relabel(a), relabel(b)))
            .collect();
        if nb.len() == 2 {
            edges.push((relabel(nb[0]), relabel(nb[1])));
        }
        let host = HostTree::from_edges(self.host.vertex_count() - 1, &edges)
            .expect("suppressing a vertex keeps a tree");
        let map = |list: &[Subtree]| -> Vec<Subtree> {
            list.iter()
                .map(|s| s.iter().filter(|&v| v != x).map(relabel).collect())
                .collect()
        };
        Representation {
            host,
            sources: map(&self.sources),
            sinks: map(&self.sinks),
        }
    }
}

/// A representation whose sinks are single host vertices ("sink points").
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatchRepresentation(Representation);

impl CatchRepresentation {
    pub fn new(rep: Representation) -> Result<Self> {
        if let Some(v) = rep.sinks.iter().position(|t| t.len() != 1) {
            return Err(Error::InvalidRepresentation(format!(
                "sink of vertex {} has {} vertices, expected a single point",
                v + 1,
                rep.sinks[v].len()
            )));
        }
        Ok(CatchRepresentation(rep))
    }

    pub fn sink_point(&self, v: usize) -> usize {
        self.0.sinks[v]
            .first()
            .expect("catch sinks are single points")
    }

    /// No host vertex holds two sink points.
    pub fn is_normal_form(&self) -> bool {
        let mut seen = BTreeSet::new();
        (0..self.0.n()).all(|v| seen.insert(self.sink_point(v)))
    }

    pub fn representation(&self) -> &Representation {
        &self.0
    }

    pub fn into_representation(self) -> Representation {
        self.0
    }
}

impl AsRef<Representation> for CatchRepresentation {
    fn as_ref(&self) -> &Representation {
        &self.0
    }
}

/// First failed condition found by [`verify_representation`]. Vertices are 0-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepViolation {
    OutOfRange {
        side: Side,
        vertex: usize,
        host_vertex: usize,
    },
    Disconnected {
        side: Side,
        vertex: usize,
    },
    /// `adj[u][v]` is `expected` but `S_u` and `T_v` disagree.
    EdgeMismatch {
        u: usize,
        v: usize,
        expected: bool,
    },
}

impl fmt::Display for RepViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RepViolation::OutOfRange {
                side,
                vertex,
                host_vertex,
            } => write!(
                f,
                "{side} subtree of vertex {} uses host vertex {} outside the host",
                vertex + 1,
                host_vertex + 1
            ),
            RepViolation::Disconnected { side, vertex } => {
                write!(
                    f,
                    "{side} subtree of vertex {} is not connected",
                    vertex + 1
                )
            }
            RepViolation::EdgeMismatch {
                u,
                v,
                expected: true,
            } => write!(
                f,
                "pair ({}, {}): edge present but S_{} and T_{} are disjoint",
                u + 1,
                v + 1,
                u + 1,
                v + 1
            ),
            RepViolation::EdgeMismatch {
                u,
                v,
                expected: false,
            } => write!(
                f,
                "pair ({}, {}): no edge but S_{} meets T_{}",
                u + 1,
                v + 1,
                u + 1,
                v + 1
            ),
        }
    }
}

/// Accepts iff every subtree is connected (or empty) and `S_u` meets `T_v`
/// exactly when `u -> v`, loops included.
pub fn verify_representation(d: &Digraph, rep: &Representation) -> Result<Verdict<RepViolation>> {
    let n = d.n();
    for list in [&rep.sources, &rep.sinks] {
        if list.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: list.len(),
            });
        }
    }
    let size = rep.host.vertex_count();
    for (side, list) in [(Side::Source, &rep.sources), (Side::Sink, &rep.sinks)] {
        for (vertex, s) in list.iter().enumerate() {
            if let Some(host_vertex) = s.iter().find(|&x| x >= size) {
                return Ok(Verdict::Reject(RepViolation::OutOfRange {
                    side,
                    vertex,
                    host_vertex,
                }));
            }
            if !s.is_connected_in(&rep.host) {
                return Ok(Verdict::Reject(RepViolation::Disconnected { side, vertex }));
            }
        }
    }
    for u in 0..n {
        for v in 0..n {
            let expected = d.has_edge(u, v);
            if rep.sources[u].intersects(&rep.sinks[v]) != expected {
                return Ok(Verdict::Reject(RepViolation::EdgeMismatch {
                    u,
                    v,
                    expected,
                }));
            }
        }
    }
    Ok(Verdict::Accept)
}

/// Catch representation in a star: center `0`, sink of `v` at leaf `v + 1`,
/// source of `v` the center plus the leaves of its successors.
pub fn star_representation(d: &Digraph) -> CatchRepresentation {
    let n = d.n();
    let host = HostTree::star(n);
    let sinks = (0..n).map(|v| Subtree::single(v + 1)).collect();
    let sources = (0..n)
        .map(|u| {
            std::iter::once(0)
                .chain(d.successors(u).map(|v| v + 1))
                .collect()
        })
        .collect();
    CatchRepresentation(Representation {
        host,
        sources,
        sinks,
    })
}

/// Representation of `M_{2,m}` in a spider with `m` legs of length two:
/// center `0`, leg `i` is `0 - 2i+1 - 2i+2`. The sources of the first block
/// and the sinks of the second are whole legs with the center; the second
/// block sources sit on the inner leg vertices and the first block sinks at
/// the leg tips.
pub fn two_block_spider(m: usize) -> Representation {
    let host = HostTree::spider(&vec![2; m]);
    let leg = |i: usize| -> Subtree { [0, 2 * i + 1, 2 * i + 2].into_iter().collect() };
    let mut sources: Vec<Subtree> = (0..m).map(leg).collect();
    sources.extend((0..m).map(|i| Subtree::single(2 * i + 1)));
    let mut sinks: Vec<Subtree> = (0..m).map(|i| Subtree::single(2 * i + 2)).collect();
    sinks.extend((0..m).map(leg));
    Representation {
        host,
        sources,
        sinks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    #[test]
    fn star_of_edgeless_digraph() {
        let d = Digraph::empty(3);
        let rep = star_representation(&d);
        assert!(rep
            .representation()
            .sources
            .iter()
            .all(|s| *s == Subtree::single(0)));
        assert!(rep.is_normal_form());
        assert!(verify_representation(&d, rep.as_ref()).unwrap().is_accept());
    }

    #[test]
    fn star_of_d3() {
        let d = Family::Dn(3).digraph();
        let rep = star_representation(&d);
        assert_eq!(rep.as_ref().sources[0], [0, 2, 3].into_iter().collect());
        assert!(verify_representation(&d, rep.as_ref()).unwrap().is_accept());
    }

    #[test]
    fn star_of_all_ones_uses_whole_star() {
        let d = Digraph::from_fn(2, |_, _| true);
        let rep = star_representation(&d);
        for s in &rep.as_ref().sources {
            assert_eq!(s.len(), 3);
        }
    }

    #[test]
    fn single_vertex_star_is_an_edge() {
        let d = Digraph::from_fn(1, |_, _| true);
        let rep = star_representation(&d);
        assert_eq!(rep.as_ref().host.vertex_count(), 2);
        assert_eq!(rep.as_ref().leaf_count(), 2);
        assert!(verify_representation(&d, rep.as_ref()).unwrap().is_accept());
    }

    #[test]
    fn swapped_sinks_are_rejected() {
        let d = Family::Dn(3).digraph();
        let mut rep = star_representation(&d).into_representation();
        rep.sinks.swap(0, 1);
        match verify_representation(&d, &rep).unwrap() {
            Verdict::Reject(RepViolation::EdgeMismatch { u, v, .. }) => assert_eq!((u, v), (0, 0)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn disconnected_subtree_is_rejected() {
        let d = Digraph::from_fn(1, |_, _| true);
        let rep = Representation {
            host: HostTree::path(3),
            sources: vec![[0, 2].into_iter().collect()],
            sinks: vec![Subtree::single(0)],
        };
        assert_eq!(
            verify_representation(&d, &rep).unwrap(),
            Verdict::Reject(RepViolation::Disconnected {
                side: Side::Source,
                vertex: 0
            })
        );
    }

    #[test]
    fn vertex_count_mismatch_is_an_error() {
        let rep = star_representation(&Digraph::empty(2)).into_representation();
        assert!(verify_representation(&Digraph::empty(3), &rep).is_err());
    }

    #[test]
    fn empty_subtrees_are_filled_without_new_leaves() {
        let d = Digraph::from_matrix_text("10\n00").unwrap();
        let rep = Representation {
            host: HostTree::path(2),
            sources: vec![Subtree::single(0), Subtree::empty()],
            sinks: vec![Subtree::single(0), Subtree::empty()],
        };
        assert!(verify_representation(&d, &rep).unwrap().is_accept());
        let filled = rep.with_nonempty_subtrees();
        assert!(!filled.has_empty_subtree());
        assert_eq!(filled.leaf_count(), 2);
        assert!(verify_representation(&d, &filled).unwrap().is_accept());
    }

    #[test]
    fn simplification_keeps_validity() {
        let d = Family::PathLoops(4).digraph();
        // sinks spread along a long path, sources spanning consecutive pairs
        let host = HostTree::path(9);
        let sinks = (0..4).map(|v| Subtree::single(2 * v)).collect();
        let sources = (0..4)
            .map(|u| (2 * u..=(2 * u + 2).min(6)).collect())
            .collect();
        let rep = Representation {
            host,
            sources,
            sinks,
        };
        assert!(verify_representation(&d, &rep).unwrap().is_accept());
        let simple = rep.simplified();
        assert!(simple.host.vertex_count() < rep.host.vertex_count());
        assert!(verify_representation(&d, &simple).unwrap().is_accept());
    }
}
