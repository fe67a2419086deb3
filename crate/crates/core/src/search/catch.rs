//! Catch leafage: sink points placed injectively, one per distinct column.

use crate::budget::{Meter, SearchBudget};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::poset::{incidence_poset, spider_from_chains, width_and_chains, IncidencePoset};
use crate::search::masks::{bits, MaskHost};
use crate::search::trees::TreeCatalog;
use crate::search::{checked_certificate, LeafageResult, LowerBoundSource};
use crate::tree::{verify_representation, HostTree, Representation, Subtree};

/// Sources as bitmasks over column classes.
struct Classes {
    /// Per source vertex with successors: the classes it reaches.
    reach: Vec<u64>,
    /// Placement order of classes, most predecessors first.
    order: Vec<usize>,
    count: usize,
}

impl Classes {
    fn new(d: &Digraph, p: &IncidencePoset) -> Self {
        let count = p.len();
        assert!(
            count <= 64,
            "catch search supports at most 64 distinct columns"
        );
        let reach = (0..d.n())
            .map(|u| {
                p.elements()
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.set.contains(&u))
                    .fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .filter(|&m| m != 0)
            .collect();
        let mut order: Vec<usize> = (0..count).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(p.elements()[i].set.len()), i));
        Classes {
            reach,
            order,
            count,
        }
    }
}

/// Placement search on one host tree.
struct Placement<'a> {
    host: MaskHost,
    classes: &'a Classes,
    /// Host vertices that must hold a sink point.
    must_fill: u64,
    point: Vec<usize>,
    placed: u64,
    used: u64,
}

impl<'a> Placement<'a> {
    fn new(tree: &HostTree, classes: &'a Classes) -> Self {
        let must_fill = if tree.vertex_count() > 2 {
            (0..tree.vertex_count())
                .filter(|&v| tree.degree(v) <= 2)
                .fold(0u64, |m, v| m | 1 << v)
        } else {
            0
        };
        Placement {
            host: MaskHost::new(tree),
            classes,
            must_fill,
            point: vec![usize::MAX; classes.count],
            placed: 0,
            used: 0,
        }
    }

    fn consistent(&self) -> bool {
        self.classes.reach.iter().all(|&reach| {
            let mut required = 0u64;
            let mut blocked = 0u64;
            for c in bits(self.placed) {
                if reach >> c & 1 == 1 {
                    required |= 1 << self.point[c];
                } else {
                    blocked |= 1 << self.point[c];
                }
            }
            if required == 0 {
                return true;
            }
            let comp = self.host.component(
                required.trailing_zeros() as usize,
                self.host.full() & !blocked,
            );
            required & !comp == 0
        })
    }

    fn search(&mut self, depth: usize, meter: &mut Meter) -> bool {
        if depth == self.classes.count {
            return true;
        }
        let remaining = self.classes.count - depth;
        if ((self.must_fill & !self.used).count_ones() as usize) > remaining {
            return false;
        }
        let class = self.classes.order[depth];
        for x in bits(self.host.full() & !self.used) {
            if !meter.tick() {
                return false;
            }
            self.point[class] = x;
            self.placed |= 1 << class;
            self.used |= 1 << x;
            if self.consistent() && self.search(depth + 1, meter) {
                return true;
            }
            self.placed &= !(1 << class);
            self.used &= !(1 << x);
        }
        false
    }

    /// Sources as Steiner hulls of their successors' sink points inside
    /// the component that avoids every other sink point.
    fn representation(&self, tree: &HostTree, d: &Digraph, p: &IncidencePoset) -> Representation {
        let all_points: u64 = self.point.iter().fold(0, |m, &x| m | 1 << x);
        let sources = (0..d.n())
            .map(|u| {
                let required = p
                    .elements()
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.set.contains(&u))
                    .fold(0u64, |m, (c, _)| m | 1 << self.point[c]);
                if required == 0 {
                    return Subtree::empty();
                }
                let allowed = self.host.full() & !(all_points & !required);
                let comp = self
                    .host
                    .component(required.trailing_zeros() as usize, allowed);
                Subtree::from_mask(self.host.hull(required, comp))
            })
            .collect();
        let sinks = (0..d.n())
            .map(|v| Subtree::single(self.point[p.element_of(v)]))
            .collect();
        split_shared_points(Representation {
            host: tree.clone(),
            sources,
            sinks,
        })
    }
}

/// Gives every vertex its own sink point. A vertex sharing a point `x` with
/// an earlier one gets a new vertex subdividing an edge at `x`, placed in
/// every source that contains `x`; degrees elsewhere and the leaf count do
/// not change.
pub(crate) fn split_shared_points(mut rep: Representation) -> Representation {
    let n = rep.n();
    let mut seen = std::collections::BTreeSet::new();
    for v in 0..n {
        let Some(x) = rep.sinks[v].first() else {
            continue;
        };
        if rep.sinks[v].len() != 1 || seen.insert(x) {
            continue;
        }
        let y = rep.host.neighbors(x)[0];
        let new = rep.host.vertex_count();
        let mut edges: Vec<(usize, usize)> = rep
            .host
            .edges()
            .into_iter()
            .filter(|&e| e != (x.min(y), x.max(y)))
            .collect();
        edges.push((x, new));
        edges.push((new, y));
        rep.host = HostTree::from_edges(new + 1, &edges).expect("subdividing keeps a tree");
        for s in rep.sources.iter_mut() {
            if s.contains(x) {
                s.insert(new);
            }
        }
        rep.sinks[v] = Subtree::single(new);
        seen.insert(new);
    }
    rep
}

/// Smallest host-tree order needed for `classes` sink points and `leaves`
/// leaves: every vertex of degree at most two holds a sink point once
/// sources are Steiner hulls, and branch points number at most
/// `leaves - 2`.
pub(crate) fn catch_host_bound(classes: usize, leaves: usize) -> usize {
    (classes + leaves).saturating_sub(2).max(2)
}

/// Searches `k`-leaf host trees with at most `bound` vertices for a catch
/// representation; each feasible tree is passed to `visit`, which returns
/// false to stop.
pub(crate) fn for_each_feasible_tree(
    d: &Digraph,
    p: &IncidencePoset,
    k: usize,
    bound: usize,
    catalog: &mut TreeCatalog,
    meter: &mut Meter,
    mut visit: impl FnMut(&HostTree, Representation) -> bool,
) {
    let classes = Classes::new(d, p);
    for vertices in 2..=bound.min(64) {
        for tree in catalog.trees(vertices, k) {
            let low_degree = (0..vertices).filter(|&v| tree.degree(v) <= 2).count();
            if vertices > 2 && low_degree > classes.count {
                continue;
            }
            let mut placement = Placement::new(&tree, &classes);
            if placement.search(0, meter) {
                let rep = placement.representation(&tree, d, p);
                if !visit(&tree, rep) {
                    return;
                }
            }
            if meter.exhausted() {
                return;
            }
        }
    }
}

/// Catch leafage `l*`. The spider built from a minimum chain partition of
/// the incidence poset bounds it from above by the width (or 2); smaller
/// leaf counts are refuted by exhaustive placement over normal-form hosts.
pub fn exact_catch_leafage(d: &Digraph, budget: &SearchBudget) -> LeafageResult {
    let mut meter = budget.meter();
    exact_catch_leafage_with(d, budget, &mut meter)
}

pub fn exact_catch_leafage_with(
    d: &Digraph,
    budget: &SearchBudget,
    meter: &mut Meter,
) -> LeafageResult {
    let p = incidence_poset(d);
    let width = width_and_chains(&p);
    let spider = spider_from_chains(d, &p, &width.chains).into_representation();
    let hi = spider.leaf_count();
    let mut result = LeafageResult {
        lo: 2,
        hi,
        certificate: Some(spider),
        lower_bound_source: LowerBoundSource::Trivial,
        host_bound: None,
        bound_firm: true,
        nodes: 0,
        budget_exhausted: false,
    };
    let start = meter.nodes();
    for k in 2..hi {
        if k > budget.max_leaves {
            break;
        }
        let firm = catch_host_bound(p.len(), k);
        let bound = budget.max_host_vertices.map_or(firm, |b| b.min(firm));
        result.bound_firm &= bound >= firm;
        result.host_bound = Some(bound);
        let mut catalog = TreeCatalog::new(k);
        let mut found = None;
        for_each_feasible_tree(d, &p, k, bound, &mut catalog, meter, |_, rep| {
            found = Some(rep);
            false
        });
        if let Some(rep) = found {
            result.hi = k;
            result.certificate = Some(rep);
            break;
        }
        if meter.exhausted() {
            result.budget_exhausted = true;
            break;
        }
        result.lo = k + 1;
        result.lower_bound_source = LowerBoundSource::SearchExhaustion;
    }
    result.nodes = meter.nodes() - start;
    result.certificate = result
        .certificate
        .take()
        .map(|rep| checked_certificate(d, rep, result.hi).expect("catch certificate verifies"));
    result
}

/// Fewest branch points and fewest host vertices over `k`-leaf catch
/// representations whose hosts are in normal form (every vertex of degree
/// at most two holds a sink point; identical columns may share one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchPointMinimum {
    pub branch_points: usize,
    pub vertices: usize,
    /// A representation attaining the branch-point minimum.
    pub witness: Representation,
    /// Every feasible host shape as (vertices, branch points).
    pub feasible_hosts: Vec<(usize, usize)>,
}

pub fn min_branch_points_and_vertices(
    d: &Digraph,
    k: usize,
    budget: &SearchBudget,
) -> Result<BranchPointMinimum> {
    let p = incidence_poset(d);
    let mut meter = budget.meter();
    let bound = catch_host_bound(p.len(), k);
    let bound = budget.max_host_vertices.map_or(bound, |b| b.min(bound));
    let mut catalog = TreeCatalog::new(k.max(2));
    let mut best: Option<BranchPointMinimum> = None;
    let mut feasible_hosts = Vec::new();
    for_each_feasible_tree(d, &p, k, bound, &mut catalog, &mut meter, |tree, rep| {
        let shape = (tree.vertex_count(), tree.branch_points().len());
        feasible_hosts.push(shape);
        match &mut best {
            None => {
                best = Some(BranchPointMinimum {
                    branch_points: shape.1,
                    vertices: shape.0,
                    witness: rep,
                    feasible_hosts: Vec::new(),
                })
            }
            Some(b) => {
                b.vertices = b.vertices.min(shape.0);
                if shape.1 < b.branch_points {
                    b.branch_points = shape.1;
                    b.witness = rep;
                }
            }
        }
        true
    });
    if meter.exhausted() {
        return Err(Error::Infeasible(format!(
            "budget ran out while enumerating {k}-leaf catch representations"
        )));
    }
    let mut best =
        best.ok_or_else(|| Error::Infeasible(format!("no catch representation with {k} leaves")))?;
    if let Some(violation) = verify_representation(d, &best.witness)?.violation() {
        return Err(Error::Invariant(format!(
            "branch-point witness fails: {violation}"
        )));
    }
    if best.witness.leaf_count() != k
        || best.witness.host.branch_points().len() != best.branch_points
    {
        return Err(Error::Invariant(
            "branch-point witness has the wrong shape".into(),
        ));
    }
    best.feasible_hosts = feasible_hosts;
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn catch(d: &Digraph) -> LeafageResult {
        exact_catch_leafage(d, &SearchBudget::default())
    }

    #[test]
    fn path_with_loops_is_an_interval_catch_digraph() {
        for n in 2..=6 {
            let r = catch(&Family::PathLoops(n).digraph());
            assert_eq!((r.lo, r.hi), (2, 2), "n = {n}");
        }
    }

    #[test]
    fn small_families() {
        assert_eq!(catch(&Family::Dn(3).digraph()).value(), Some(3));
        assert_eq!(catch(&Family::Cn(4).digraph()).value(), Some(4));
        assert_eq!(catch(&Family::Fn(4).digraph()).value(), Some(3));
    }

    #[test]
    fn every_certificate_is_a_catch_representation() {
        for d in [
            Family::Closing5.digraph(),
            Family::En(4).digraph(),
            Family::Mkm(2, 2).digraph(),
        ] {
            let r = catch(&d);
            let cert = r.certificate.as_ref().unwrap();
            assert!(cert.is_catch());
            assert_eq!(cert.leaf_count(), r.hi);
            assert!(verify_representation(&d, cert).unwrap().is_accept());
        }
    }

    #[test]
    fn shared_columns_are_split() {
        let d = Digraph::from_matrix_text("111\n011\n011").unwrap();
        let r = catch(&d);
        let cert = r.certificate.unwrap();
        let points: std::collections::BTreeSet<_> = cert.sinks.iter().map(|t| t.first()).collect();
        assert_eq!(points.len(), 3);
    }

    #[test]
    fn host_bound_formula() {
        assert_eq!(catch_host_bound(1, 2), 2);
        assert_eq!(catch_host_bound(5, 4), 7);
    }

    #[test]
    fn interval_catch_has_no_branch_points() {
        let d = Family::PathLoops(4).digraph();
        let m = min_branch_points_and_vertices(&d, 2, &SearchBudget::default()).unwrap();
        assert_eq!(m.branch_points, 0);
        assert_eq!(m.vertices, 4);
    }

    #[test]
    fn infeasible_leaf_count_is_an_error() {
        let d = Family::Dn(3).digraph();
        assert!(min_branch_points_and_vertices(&d, 2, &SearchBudget::default()).is_err());
    }
}
