use std::collections::{HashMap, VecDeque};

use crate::digraph::{Cell, Digraph};
use crate::ferrers::cover::ZeroColoring;

/// The graph on the zeros of an adjacency matrix in which two zeros are
/// adjacent when they complete a 2x2 permutation submatrix with two ones.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    n: usize,
    zeros: Vec<Cell>,
    index: HashMap<Cell, usize>,
    adj: Vec<Vec<usize>>,
}

impl ConflictGraph {
    pub fn new(d: &Digraph) -> Self {
        let zeros: Vec<Cell> = d.zeros().iter().collect();
        let index = zeros.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut adj = vec![Vec::new(); zeros.len()];
        for (a, &(i, j)) in zeros.iter().enumerate() {
            for (b, &(k, l)) in zeros.iter().enumerate().skip(a + 1) {
                if i != k && j != l && d.has_edge(i, l) && d.has_edge(k, j) {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        ConflictGraph {
            n: d.n(),
            zeros,
            index,
            adj,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.zeros.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn zeros(&self) -> &[Cell] {
        &self.zeros
    }

    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        self.index.get(&cell).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn cells_adjacent(&self, a: Cell, b: Cell) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(x), Some(y)) => self.has_edge(x, y),
            _ => false,
        }
    }

    /// BFS 2-coloring per component; on failure returns an odd cycle as a
    /// closed list of zero cells (first cell not repeated).
    pub fn two_coloring(&self) -> Result<Vec<u8>, Vec<Cell>> {
        let m = self.zeros.len();
        let mut side = vec![u8::MAX; m];
        let mut parent = vec![usize::MAX; m];
        for start in 0..m {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        parent[w] = v;
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return Err(self.odd_cycle(&parent, v, w));
                    }
                }
            }
        }
        Ok(side)
    }

    fn odd_cycle(&self, parent: &[usize], v: usize, w: usize) -> Vec<Cell> {
        let path_to_root = |mut x: usize| {
            let mut path = vec![x];
            while parent[x] != usize::MAX {
                x = parent[x];
                path.push(x);
            }
            path
        };
        let pv = path_to_root(v);
        let pw = path_to_root(w);
        // Strip the common suffix down to the lowest common ancestor.
        let mut i = pv.len();
        let mut j = pw.len();
        while i > 1 && j > 1 && pv[i - 2] == pw[j - 2] {
            i -= 1;
            j -= 1;
        }
        let mut cycle: Vec<usize> = pv[..i].to_vec();
        cycle.extend(pw[..j - 1].iter().rev());
        cycle.into_iter().map(|x| self.zeros[x]).collect()
    }
}

pub fn conflict_graph(d: &Digraph) -> ConflictGraph {
    ConflictGraph::new(d)
}

/// Witness returned by [`ferrers_dim_le2`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Le2Witness {
    /// Proper 2-coloring of the conflict graph; each color class extends
    /// to a Ferrers relation inside the zero set.
    TwoColoring(ZeroColoring),
    /// An odd cycle of zero cells in the conflict graph.
    OddCycle(Vec<Cell>),
}

#[derive(Clone, Debug)]
pub struct BipartiteTest {
    pub bipartite: bool,
    pub witness: Le2Witness,
}

/// Ferrers dimension at most 2, decided by bipartiteness of the conflict graph.
pub fn ferrers_dim_le2(d: &Digraph) -> BipartiteTest {
    let h = ConflictGraph::new(d);
    match h.two_coloring() {
        Ok(side) => {
            let mut coloring = ZeroColoring::new(d.n());
            for (i, &cell) in h.zeros().iter().enumerate() {
                coloring.set(cell, side[i] as usize);
            }
            BipartiteTest {
                bipartite: true,
                witness: Le2Witness::TwoColoring(coloring),
            }
        }
        Err(cycle) => BipartiteTest {
            bipartite: false,
            witness: Le2Witness::OddCycle(cycle),
        },
    }
}
