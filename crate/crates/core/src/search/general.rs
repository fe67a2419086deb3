//! Leafage `l`: full subtree representations by backtracking over sink
//! subtrees, with sources derived from the sinks.
//!
//! Shrinking a sink `T_v` to the Steiner hull of one point from each
//! `S_u ∩ T_v` keeps a representation valid, so `T_v` may be taken with at
//! most `indeg(v)` leaves (and empty when `v` has no predecessors). Given
//! all sinks, a source `S_u` exists exactly when some component of the
//! host minus the sinks of `u`'s non-successors meets every successor sink.
//! The test only gets harder as sinks are added, so it prunes partial
//! assignments.

use crate::budget::{Meter, SearchBudget};
use crate::digraph::Digraph;
use crate::ferrers::{exact_disjoint_ferrers_dimension_with, Dimension};
use crate::search::catch::exact_catch_leafage_with;
use crate::search::masks::{bits, MaskHost};
use crate::search::trees::TreeCatalog;
use crate::search::{checked_certificate, LeafageResult, LowerBoundSource};
use crate::tree::{star_representation, HostTree, Representation, Subtree};

struct SinkSearch {
    host: MaskHost,
    /// Tie-break rank for variable choice: higher total degree first.
    rank: Vec<usize>,
    domains: Vec<Vec<u64>>,
    /// Sources with at least one successor, with their successor masks.
    sources: Vec<(usize, u64)>,
    sink: Vec<u64>,
    assigned: u64,
    blocked: Vec<u64>,
}

/// Per-source view of the current partial assignment.
struct SourceState {
    succ: u64,
    /// Components of the unblocked host meeting every assigned successor sink.
    comps: Vec<u64>,
    union: u64,
    has_required: bool,
}

impl SinkSearch {
    fn new(d: &Digraph, tree: &HostTree, subtrees: &[(u64, usize)]) -> Self {
        let n = d.n();
        let host = MaskHost::new(tree);
        let domains: Vec<Vec<u64>> = (0..n)
            .map(|v| match d.in_degree(v) {
                0 => vec![0],
                indeg => subtrees
                    .iter()
                    .filter(|&&(_, leaves)| leaves <= indeg)
                    .map(|&(m, _)| m)
                    .collect(),
            })
            .collect();
        let mut by_degree: Vec<usize> = (0..n).collect();
        by_degree.sort_by_key(|&v| (std::cmp::Reverse(d.in_degree(v) + d.out_degree(v)), v));
        let mut rank = vec![0; n];
        for (r, &v) in by_degree.iter().enumerate() {
            rank[v] = r;
        }
        let sources = (0..n)
            .map(|u| (u, d.successors(u).fold(0u64, |m, v| m | 1 << v)))
            .filter(|&(_, s)| s != 0)
            .collect();
        SinkSearch {
            host,
            rank,
            domains,
            sources,
            sink: vec![0; n],
            assigned: 0,
            blocked: vec![0; n],
        }
    }

    fn log_size(&self) -> f64 {
        self.domains.iter().map(|dom| (dom.len() as f64).ln()).sum()
    }

    fn source_states(&self) -> Vec<SourceState> {
        self.sources
            .iter()
            .map(|&(u, succ)| {
                let allowed = self.host.full() & !self.blocked[u];
                let required: Vec<u64> = bits(succ & self.assigned).map(|w| self.sink[w]).collect();
                let mut comps = Vec::new();
                let mut left = allowed;
                while left != 0 {
                    let comp = self.host.component(left.trailing_zeros() as usize, allowed);
                    if required.iter().all(|&r| r & comp != 0) {
                        comps.push(comp);
                    }
                    left &= !comp;
                }
                let union = comps.iter().fold(0, |m, c| m | c);
                SourceState {
                    succ,
                    comps,
                    union,
                    has_required: !required.is_empty(),
                }
            })
            .collect()
    }

    /// Whether giving sink `w` the subtree `t` keeps every source feasible.
    fn value_ok(&self, states: &[SourceState], w: usize, t: u64) -> bool {
        if t == 0 {
            return true;
        }
        self.sources.iter().zip(states).all(|(&(u, _), st)| {
            if st.succ >> w & 1 == 1 {
                t & st.union != 0
            } else if !st.has_required || st.comps.iter().any(|&c| c & t == 0) {
                true
            } else {
                let required: Vec<u64> = bits(st.succ & self.assigned)
                    .map(|x| self.sink[x])
                    .collect();
                self.host
                    .component_meeting(self.host.full() & !(self.blocked[u] | t), &required)
                    .is_some()
            }
        })
    }

    /// Forward checking with smallest-domain-first variable choice.
    fn search(&mut self, live: &[Vec<u64>], meter: &mut Meter) -> bool {
        let n = self.sink.len();
        let Some(w) = (0..n)
            .filter(|&v| self.assigned >> v & 1 == 0)
            .min_by_key(|&v| (live[v].len(), self.rank[v]))
        else {
            return true;
        };
        for &t in &live[w] {
            if !meter.tick() {
                return false;
            }
            self.sink[w] = t;
            self.assigned |= 1 << w;
            let saved: Vec<u64> = self.sources.iter().map(|&(u, _)| self.blocked[u]).collect();
            for &(u, succ) in &self.sources {
                if succ >> w & 1 == 0 {
                    self.blocked[u] |= t;
                }
            }
            let states = self.source_states();
            let mut next: Vec<Vec<u64>> = vec![Vec::new(); n];
            let mut wiped = false;
            for v in (0..n).filter(|&v| self.assigned >> v & 1 == 0) {
                next[v] = live[v]
                    .iter()
                    .copied()
                    .filter(|&x| self.value_ok(&states, v, x))
                    .collect();
                if next[v].is_empty() {
                    wiped = true;
                    break;
                }
            }
            if !wiped && self.search(&next, meter) {
                return true;
            }
            for (&(u, _), &b) in self.sources.iter().zip(&saved) {
                self.blocked[u] = b;
            }
            self.assigned &= !(1 << w);
        }
        false
    }

    fn run(&mut self, meter: &mut Meter) -> bool {
        let states = self.source_states();
        let live: Vec<Vec<u64>> = (0..self.sink.len())
            .map(|v| {
                self.domains[v]
                    .iter()
                    .copied()
                    .filter(|&x| self.value_ok(&states, v, x))
                    .collect()
            })
            .collect();
        if live.iter().any(Vec::is_empty) {
            return false;
        }
        self.search(&live, meter)
    }

    /// Sources as the first component meeting all successor sinks.
    fn representation(&self, tree: &HostTree, n: usize) -> Representation {
        let mut sources = vec![Subtree::empty(); n];
        for &(u, succ) in &self.sources {
            let required: Vec<u64> = bits(succ).map(|w| self.sink[w]).collect();
            let comp = self
                .host
                .component_meeting(self.host.full() & !self.blocked[u], &required)
                .expect("complete assignment satisfies every source");
            sources[u] = Subtree::from_mask(comp);
        }
        Representation {
            host: tree.clone(),
            sources,
            sinks: self.sink.iter().map(|&m| Subtree::from_mask(m)).collect(),
        }
    }
}

/// Searches one host tree, trying whichever of `d` and its transpose has
/// the smaller sink search space.
fn representation_on(
    d: &Digraph,
    dt: &Digraph,
    tree: &HostTree,
    meter: &mut Meter,
) -> Option<Representation> {
    let host = MaskHost::new(tree);
    let subtrees: Vec<(u64, usize)> = host
        .subtrees()
        .into_iter()
        .map(|m| (m, host.leaf_count(m)))
        .collect();
    let direct = SinkSearch::new(d, tree, &subtrees);
    let flipped = SinkSearch::new(dt, tree, &subtrees);
    if direct.log_size() <= flipped.log_size() {
        let mut s = direct;
        s.run(meter).then(|| s.representation(tree, d.n()))
    } else {
        let mut s = flipped;
        s.run(meter).then(|| {
            let rep = s.representation(tree, d.n());
            Representation {
                host: rep.host,
                sources: rep.sinks,
                sinks: rep.sources,
            }
        })
    }
}

/// Host order beyond which no new `k`-leaf representations appear, given
/// that smaller leaf counts are already refuted: with every source and sink
/// the hull of one point per edge, host vertices of degree at most two are
/// such points and branch points number at most `k - 2`.
pub(crate) fn general_host_bound(edges: usize, leaves: usize) -> usize {
    (edges + leaves).saturating_sub(2).max(2)
}

/// Leafage `l`, bracketed below by `max(2, f*)` and above by the catch
/// leafage certificate and the star.
pub fn exact_leafage(d: &Digraph, budget: &SearchBudget) -> LeafageResult {
    let mut meter = budget.meter();
    let f_star = exact_disjoint_ferrers_dimension_with(d, d.n().max(1), &mut meter);
    let mut catch_meter = budget.meter();
    let catch = exact_catch_leafage_with(d, budget, &mut catch_meter);
    let mut meter = budget.meter();
    exact_leafage_from(d, budget, &f_star, &catch, &mut meter)
}

/// [`exact_leafage`] from an already computed `f*` and catch leafage.
pub fn exact_leafage_from(
    d: &Digraph,
    budget: &SearchBudget,
    f_star: &Dimension,
    catch: &LeafageResult,
    meter: &mut Meter,
) -> LeafageResult {
    let n = d.n();
    let (lo, lower_bound_source) = if f_star.lower_bound() > 2 {
        (f_star.lower_bound(), LowerBoundSource::DisjointFerrers)
    } else {
        (2, LowerBoundSource::Trivial)
    };
    let star = star_representation(d).into_representation();
    let (hi, certificate) = match &catch.certificate {
        Some(cert) if catch.hi <= star.leaf_count() => (catch.hi, cert.clone()),
        _ => (star.leaf_count(), star),
    };
    let mut result = LeafageResult {
        lo: lo.min(hi),
        hi,
        certificate: Some(certificate),
        lower_bound_source,
        host_bound: None,
        bound_firm: true,
        nodes: 0,
        budget_exhausted: false,
    };
    assert!(
        lo <= hi,
        "f* = {lo} exceeds a verified {hi}-leaf representation"
    );
    let dt = d.transpose();
    let edges = d.edge_count();
    let start = meter.nodes();
    for k in lo..hi {
        if k > budget.max_leaves {
            break;
        }
        let firm = general_host_bound(edges, k);
        let limit = budget.host_bound(n, k);
        let bound = firm.min(limit).min(64);
        result.bound_firm &= bound >= firm;
        result.host_bound = Some(bound);
        let mut catalog = TreeCatalog::new(k);
        let mut found = None;
        // a smaller host with k leaves subdivides to one with `bound` vertices
        for tree in catalog.trees(bound, k) {
            if let Some(rep) = representation_on(d, &dt, &tree, meter) {
                found = Some(rep);
                break;
            }
            if meter.exhausted() {
                break;
            }
        }
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
    let cert = result
        .certificate
        .take()
        .expect("an upper certificate is always present");
    let cert = checked_certificate(d, cert, result.hi).expect("leafage certificate verifies");
    if let Some(parts) = crate::search::extracted_parts(d, &cert) {
        assert!(
            parts >= f_star.value().unwrap_or(0),
            "a {}-leaf representation yielded {parts} Ferrers parts, below f*",
            result.hi
        );
    }
    result.certificate = Some(cert);
    result
}
