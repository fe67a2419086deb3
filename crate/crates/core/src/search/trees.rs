//! Unlabeled trees up to isomorphism, grown one leaf at a time and
//! deduplicated by a canonical encoding.

use std::collections::BTreeMap;

use crate::tree::HostTree;

/// Canonical encoding of a free tree together with the tree relabeled so
/// that vertex 0 is the chosen center and the rest follow in canonical
/// preorder.
pub(crate) fn canonical_form(tree: &HostTree) -> (Vec<u8>, HostTree) {
    let mut best: Option<(Vec<u8>, usize)> = None;
    for root in centers(tree) {
        let code = encode(tree, root, usize::MAX);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            best = Some((code, root));
        }
    }
    let (code, root) = best.expect("a tree has a center");
    (code, relabel(tree, root))
}

fn centers(tree: &HostTree) -> Vec<usize> {
    let n = tree.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in tree.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn encode(tree: &HostTree, v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = tree
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(tree, w, v))
        .collect();
    children.sort();
    let mut out = vec![b'('];
    children.iter().for_each(|c| out.extend_from_slice(c));
    out.push(b')');
    out
}

fn relabel(tree: &HostTree, root: usize) -> HostTree {
    fn visit(
        tree: &HostTree,
        v: usize,
        parent: usize,
        label: &mut Vec<usize>,
        order: &mut Vec<(usize, usize)>,
    ) {
        let me = order.len();
        label[v] = me;
        order.push((v, parent));
        let mut children: Vec<(Vec<u8>, usize)> = tree
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| (encode(tree, w, v), w))
            .collect();
        children.sort();
        for (_, w) in children {
            visit(tree, w, v, label, order);
        }
    }
    let mut label = vec![usize::MAX; tree.vertex_count()];
    let mut order = Vec::new();
    visit(tree, root, usize::MAX, &mut label, &mut order);
    let edges: Vec<(usize, usize)> = order
        .iter()
        .filter(|&&(_, p)| p != usize::MAX)
        .map(|&(v, p)| (label[p], label[v]))
        .collect();
    HostTree::from_edges(tree.vertex_count(), &edges).expect("relabeling keeps a tree")
}

/// Trees by vertex count, restricted to at most `max_leaves` leaves. Adding
/// a leaf never lowers the leaf count, so every tree in the class is grown
/// from a smaller one in the class.
#[derive(Debug)]
pub(crate) struct TreeCatalog {
    max_leaves: usize,
    /// `levels[v]`: trees on `v + 1` vertices, keyed by canonical encoding.
    levels: Vec<BTreeMap<Vec<u8>, HostTree>>,
}

impl TreeCatalog {
    pub fn new(max_leaves: usize) -> Self {
        let mut first = BTreeMap::new();
        first.insert(b"()".to_vec(), HostTree::single_vertex());
        TreeCatalog {
            max_leaves: max_leaves.max(2),
            levels: vec![first],
        }
    }

    fn grow_to(&mut self, vertices: usize) {
        while self.levels.len() < vertices {
            let prev = self.levels.last().expect("level one exists");
            let mut next = BTreeMap::new();
            for tree in prev.values() {
                let size = tree.vertex_count();
                let mut edges = tree.edges();
                for v in 0..size {
                    edges.push((v, size));
                    let bigger =
                        HostTree::from_edges(size + 1, &edges).expect("adding a leaf keeps a tree");
                    edges.pop();
                    if bigger.leaf_count() > self.max_leaves {
                        continue;
                    }
                    let (code, canon) = canonical_form(&bigger);
                    next.entry(code).or_insert(canon);
                }
            }
            self.levels.push(next);
        }
    }

    /// Trees with exactly `vertices` vertices and `leaves` leaves, in
    /// canonical-encoding order.
    pub fn trees(&mut self, vertices: usize, leaves: usize) -> Vec<HostTree> {
        assert!(leaves <= self.max_leaves, "catalog built for fewer leaves");
        if vertices == 0 {
            return Vec::new();
        }
        self.grow_to(vertices);
        self.levels[vertices - 1]
            .values()
            .filter(|t| t.leaf_count() == leaves)
            .cloned()
            .collect()
    }
}

/// One tree per isomorphism class with at most `max_leaves` leaves and
/// between 2 and `max_vertices` vertices, ordered by vertex count and then
/// canonical encoding.
pub fn enumerate_host_trees(
    max_leaves: usize,
    max_vertices: usize,
) -> impl Iterator<Item = HostTree> {
    let mut catalog = TreeCatalog::new(max_leaves);
    let mut out = Vec::new();
    for vertices in 2..=max_vertices {
        for leaves in 2..=max_leaves.max(2) {
            out.extend(
                catalog
                    .trees(vertices, leaves)
                    .into_iter()
                    .map(|t| (vertices, t)),
            );
        }
    }
    // within a vertex count, sort by encoding regardless of leaf count
    let mut keyed: Vec<(usize, Vec<u8>, HostTree)> = out
        .into_iter()
        .map(|(v, t)| {
            let (code, _) = canonical_form(&t);
            (v, code, t)
        })
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed.into_iter().map(|(_, _, t)| t)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every labeled tree on `n` vertices, from Prüfer sequences.
    fn labeled_trees(n: usize) -> Vec<HostTree> {
        if n == 1 {
            return vec![HostTree::single_vertex()];
        }
        if n == 2 {
            return vec![HostTree::path(2)];
        }
        let mut out = Vec::new();
        let total = n.pow((n - 2) as u32);
        for mut code in 0..total {
            let mut seq = Vec::with_capacity(n - 2);
            for _ in 0..n - 2 {
                seq.push(code % n);
                code /= n;
            }
            let mut degree = vec![1; n];
            seq.iter().for_each(|&x| degree[x] += 1);
            let mut edges = Vec::new();
            for &x in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, x));
                degree[leaf] -= 1;
                degree[x] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            out.push(HostTree::from_edges(n, &edges).unwrap());
        }
        out
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn degrees(t: &HostTree) -> Vec<usize> {
        let mut d: Vec<usize> = (0..t.vertex_count()).map(|v| t.degree(v)).collect();
        d.sort_unstable();
        d
    }

    fn isomorphic(a: &HostTree, b: &HostTree, perms: &[Vec<usize>]) -> bool {
        if degrees(a) != degrees(b) {
            return false;
        }
        let eb = b.edges();
        perms.iter().any(|p| {
            let mut mapped: Vec<(usize, usize)> = a
                .edges()
                .iter()
                .map(|&(x, y)| (p[x].min(p[y]), p[x].max(p[y])))
                .collect();
            mapped.sort_unstable();
            mapped == eb
        })
    }

    /// Isomorphism classes by brute force over vertex permutations.
    fn brute_force_classes(n: usize, max_leaves: usize) -> usize {
        let perms = permutations(n);
        let mut reps: Vec<HostTree> = Vec::new();
        for t in labeled_trees(n) {
            if t.leaf_count() > max_leaves {
                continue;
            }
            if !reps.iter().any(|r| isomorphic(&t, r, &perms)) {
                reps.push(t);
            }
        }
        reps.len()
    }

    #[test]
    fn two_leaf_trees_are_paths() {
        let trees: Vec<_> = enumerate_host_trees(2, 4).collect();
        assert_eq!(trees.len(), 3);
        assert!(trees.iter().all(|t| t.leaf_count() == 2));
    }

    #[test]
    fn three_leaves_up_to_five_vertices() {
        let trees: Vec<_> = enumerate_host_trees(3, 5).collect();
        let expected: usize = (2..=5).map(|n| brute_force_classes(n, 3)).sum();
        assert_eq!(trees.len(), expected);
        assert_eq!(expected, 6);
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 2..=6 {
            for leaves in 2..=n.max(2) {
                let ours = enumerate_host_trees(leaves, n)
                    .filter(|t| t.vertex_count() == n)
                    .count();
                assert_eq!(
                    ours,
                    brute_force_classes(n, leaves),
                    "n={n} leaves<={leaves}"
                );
            }
        }
    }

    #[test]
    fn free_tree_totals() {
        // numbers of unlabeled trees on 2..=12 vertices
        let known = [1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        let mut catalog = TreeCatalog::new(12);
        for (i, &count) in known.iter().enumerate() {
            let n = i + 2;
            let total: usize = (2..=n.max(2)).map(|k| catalog.trees(n, k).len()).sum();
            assert_eq!(total, count, "n={n}");
        }
    }

    #[test]
    fn star_is_included() {
        for n in 3..=6 {
            assert!(
                enumerate_host_trees(n, n + 1).any(|t| t.vertex_count() == n + 1
                    && t.branch_points().len() == 1
                    && t.leaf_count() == n)
            );
        }
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let a = HostTree::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let b = HostTree::from_edges(5, &[(4, 3), (3, 2), (3, 0), (0, 1)]).unwrap();
        assert_eq!(canonical_form(&a).0, canonical_form(&b).0);
        assert_eq!(canonical_form(&a).1, canonical_form(&b).1);
    }
}
