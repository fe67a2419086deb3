use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An undirected tree on vertices `0..vertex_count()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HostTree {
    adj: Vec<Vec<usize>>,
}

impl HostTree {
    /// Validates that `edges` form a spanning tree on `vertices` vertices.
    pub fn from_edges(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::InvalidTree(
                "a tree needs at least one vertex".into(),
            ));
        }
        if edges.len() + 1 != vertices {
            return Err(Error::InvalidTree(format!(
                "{vertices} vertices need {} edges, got {}",
                vertices - 1,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); vertices];
        for &(a, b) in edges {
            if a >= vertices || b >= vertices {
                return Err(Error::InvalidTree(format!("edge ({a}, {b}) out of range")));
            }
            if a == b || adj[a].contains(&b) {
                return Err(Error::InvalidTree(format!(
                    "repeated or loop edge ({a}, {b})"
                )));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let tree = HostTree { adj };
        if tree.component_of(0, |_| true).len() != vertices {
            return Err(Error::InvalidTree(
                "edges do not connect all vertices".into(),
            ));
        }
        Ok(tree)
    }

    pub fn single_vertex() -> Self {
        HostTree {
            adj: vec![Vec::new()],
        }
    }

    /// Path `0 - 1 - ... - (vertices-1)`.
    pub fn path(vertices: usize) -> Self {
        let edges: Vec<_> = (1..vertices).map(|v| (v - 1, v)).collect();
        Self::from_edges(vertices, &edges).expect("paths are trees")
    }

    /// Center `0` joined to leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges).expect("stars are trees")
    }

    /// Center `0` with one path per entry of `legs`, numbered leg by leg
    /// outward from the center.
    pub fn spider(legs: &[usize]) -> Self {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Self::from_edges(next, &edges).expect("spiders are trees")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = (0..self.adj.len())
            .flat_map(|a| {
                self.adj[a]
                    .iter()
                    .filter(move |&&b| a < b)
                    .map(move |&b| (a, b))
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Vertices of degree at most one. A single vertex is a leaf; so are
    /// both ends of a single edge.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.adj.len())
            .filter(|&v| self.degree(v) <= 1)
            .collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.adj.iter().filter(|l| l.len() <= 1).count()
    }

    /// Vertices of degree at least three.
    pub fn branch_points(&self) -> Vec<usize> {
        (0..self.adj.len())
            .filter(|&v| self.degree(v) >= 3)
            .collect()
    }

    /// The unique path from `a` to `b`, both included.
    pub fn path_between(&self, a: usize, b: usize) -> Vec<usize> {
        let parent = self.bfs_parents(a);
        let mut path = vec![b];
        let mut x = b;
        while x != a {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        path
    }

    /// BFS parent pointers from `root` (the root points to itself).
    pub fn bfs_parents(&self, root: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.adj.len()];
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// Vertices reachable from `start` through vertices accepted by `keep`.
    pub fn component_of(&self, start: usize, keep: impl Fn(usize) -> bool) -> Vec<usize> {
        if !keep(start) {
            return Vec::new();
        }
        let mut seen = vec![false; self.adj.len()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut out = Vec::new();
        while let Some(v) = stack.pop() {
            out.push(v);
            for &w in &self.adj[v] {
                if !seen[w] && keep(w) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Leaves in depth-first preorder from vertex 0, neighbors visited in
    /// index order. This is the cyclic leaf order of the plane embedding
    /// whose rotation at every vertex is the index order.
    pub fn dfs_leaf_order(&self) -> Vec<usize> {
        let mut order = Vec::new();
        let mut stack = vec![(0usize, usize::MAX)];
        while let Some((v, parent)) = stack.pop() {
            if self.degree(v) <= 1 {
                order.push(v);
            }
            for &w in self.adj[v].iter().rev() {
                if w != parent {
                    stack.push((w, v));
                }
            }
        }
        order
    }

    /// Neighbor bitmasks; only for hosts with at most 64 vertices.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        assert!(
            self.adj.len() <= 64,
            "bitmask searches need at most 64 host vertices"
        );
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | 1 << w))
            .collect()
    }
}
