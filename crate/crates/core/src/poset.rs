//! The incidence poset of a digraph: its distinct predecessor sets ordered
//! by inclusion, with width, chain partitions and the spider catch
//! representation built from them.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::tree::{CatchRepresentation, HostTree, Representation, Subtree};

/// A distinct predecessor set and the digraph vertices whose column it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetElement {
    pub set: Vec<usize>,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct IncidencePoset {
    n: usize,
    elements: Vec<PosetElement>,
    /// `below[i][j]`: element `i` is a proper subset of element `j`.
    below: Vec<Vec<bool>>,
}

impl IncidencePoset {
    pub fn new(d: &Digraph) -> Self {
        let n = d.n();
        let mut elements: Vec<PosetElement> = Vec::new();
        for v in 0..n {
            let set: Vec<usize> = d.predecessors(v).collect();
            match elements.iter_mut().find(|e| e.set == set) {
                Some(e) => e.vertices.push(v),
                None => elements.push(PosetElement {
                    set,
                    vertices: vec![v],
                }),
            }
        }
        let member: Vec<Vec<bool>> = elements
            .iter()
            .map(|e| {
                let mut row = vec![false; n];
                e.set.iter().for_each(|&u| row[u] = true);
                row
            })
            .collect();
        let below = (0..elements.len())
            .map(|i| {
                (0..elements.len())
                    .map(|j| {
                        elements[i].set.len() < elements[j].set.len()
                            && elements[i].set.iter().all(|&u| member[j][u])
                    })
                    .collect()
            })
            .collect();
        IncidencePoset { n, elements, below }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PosetElement] {
        &self.elements
    }

    /// Element `a` is a proper subset of element `b`.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.below[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.below[a][b] || self.below[b][a]
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !(0..self.len()).any(|j| self.below[i][j]))
            .collect()
    }

    pub fn has_unique_maximal(&self) -> bool {
        self.maximal_elements().len() == 1
    }

    /// Index of the element holding the predecessor set of vertex `v`.
    pub fn element_of(&self, v: usize) -> usize {
        self.elements
            .iter()
            .position(|e| e.vertices.contains(&v))
            .expect("every vertex has a column")
    }
}

pub fn incidence_poset(d: &Digraph) -> IncidencePoset {
    IncidencePoset::new(d)
}

/// Minimum chain partition and maximum antichain, by element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Width {
    pub width: usize,
    /// Each chain listed from largest set to smallest; chains sorted by
    /// their top set.
    pub chains: Vec<Vec<usize>>,
    pub antichain: Vec<usize>,
}

/// Width via maximum matching in the split comparability graph: a left
/// copy of each element is joined to the right copy of each proper subset.
pub fn width_and_chains(p: &IncidencePoset) -> Width {
    let m = p.len();
    let graph: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).filter(|&j| p.less(j, i)).collect())
        .collect();
    let mut match_right: Vec<Option<usize>> = vec![None; m];
    for left in 0..m {
        let mut seen = vec![false; m];
        augment(left, &graph, &mut match_right, &mut seen);
    }
    let mut next = vec![None; m];
    for (right, left) in match_right.iter().enumerate() {
        if let Some(left) = *left {
            next[left] = Some(right);
        }
    }
    let mut chains: Vec<Vec<usize>> = (0..m)
        .filter(|&x| match_right[x].is_none())
        .map(|top| {
            let mut chain = vec![top];
            while let Some(x) = next[*chain.last().unwrap()] {
                chain.push(x);
            }
            chain
        })
        .collect();
    chains.sort_by(|a, b| p.elements[a[0]].set.cmp(&p.elements[b[0]].set));

    // König: from unmatched left vertices, alternate along non-matching
    // then matching edges. The cover is unreached left plus reached right.
    let matched_left: Vec<bool> = (0..m).map(|l| next[l].is_some()).collect();
    let mut reach_left = vec![false; m];
    let mut reach_right = vec![false; m];
    let mut stack: Vec<usize> = (0..m).filter(|&l| !matched_left[l]).collect();
    stack.iter().for_each(|&l| reach_left[l] = true);
    while let Some(l) = stack.pop() {
        for &r in &graph[l] {
            if !reach_right[r] && next[l] != Some(r) {
                reach_right[r] = true;
                if let Some(l2) = match_right[r] {
                    if !reach_left[l2] {
                        reach_left[l2] = true;
                        stack.push(l2);
                    }
                }
            }
        }
    }
    let antichain: Vec<usize> = (0..m)
        .filter(|&x| reach_left[x] && !reach_right[x])
        .collect();

    let width = chains.len();
    assert_eq!(
        width,
        antichain.len(),
        "chain partition and antichain sizes differ"
    );
    debug_assert!(antichain
        .iter()
        .all(|&a| antichain.iter().all(|&b| a == b || !p.comparable(a, b))));
    Width {
        width,
        chains,
        antichain,
    }
}

fn augment(
    left: usize,
    graph: &[Vec<usize>],
    match_right: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &r in &graph[left] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if match_right[r].is_none_or(|l| augment(l, graph, match_right, seen)) {
            match_right[r] = Some(left);
            return true;
        }
    }
    false
}

/// Catch representation in a subdivided star with one leg per chain of a
/// minimum chain partition. Requires width at least 2.
pub fn catch_rep_from_chains(d: &Digraph) -> Result<CatchRepresentation> {
    let p = incidence_poset(d);
    let w = width_and_chains(&p);
    if w.width < 2 {
        return Err(Error::Precondition(format!(
            "incidence poset has width {}, the spider construction needs at least 2",
            w.width
        )));
    }
    Ok(spider_from_chains(d, &p, &w.chains))
}

/// The spider construction for any chain partition; with a single chain the
/// host is a path and has two leaves.
///
/// The center (host vertex 0) carries every source. Each leg lists its
/// chain from the largest set outward, one host vertex per digraph vertex
/// realizing the set; that vertex is the sink point and carries the sources
/// of the set's members.
pub(crate) fn spider_from_chains(
    d: &Digraph,
    p: &IncidencePoset,
    chains: &[Vec<usize>],
) -> CatchRepresentation {
    let n = d.n();
    let mut legs = Vec::with_capacity(chains.len());
    let mut sinks = vec![Subtree::empty(); n];
    let mut sources: Vec<Subtree> = vec![Subtree::single(0); n];
    let mut next = 1;
    for chain in chains {
        let mut len = 0;
        for &e in chain {
            let element = &p.elements()[e];
            for &v in &element.vertices {
                sinks[v] = Subtree::single(next);
                for &u in &element.set {
                    sources[u].insert(next);
                }
                next += 1;
                len += 1;
            }
        }
        legs.push(len);
    }
    let host = HostTree::spider(&legs);
    CatchRepresentation::new(Representation {
        host,
        sources,
        sinks,
    })
    .expect("every vertex receives one sink point")
}
