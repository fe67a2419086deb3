//! Bitmask views of small host trees used by the backtracking searches.

use crate::tree::HostTree;

#[derive(Clone, Debug)]
pub(crate) struct MaskHost {
    nbr: Vec<u64>,
    full: u64,
}

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

impl MaskHost {
    pub fn new(host: &HostTree) -> Self {
        let nbr = host.neighbor_masks();
        let full = if nbr.len() == 64 {
            u64::MAX
        } else {
            (1u64 << nbr.len()) - 1
        };
        MaskHost { nbr, full }
    }

    pub fn full(&self) -> u64 {
        self.full
    }

    fn neighborhood(&self, mask: u64) -> u64 {
        bits(mask).fold(0, |acc, v| acc | self.nbr[v])
    }

    /// Vertices of `allowed` reachable from `seed` inside `allowed`.
    pub fn component(&self, seed: usize, allowed: u64) -> u64 {
        let mut comp = 1u64 << seed;
        let mut frontier = comp;
        while frontier != 0 {
            let grown = self.neighborhood(frontier) & allowed & !comp;
            comp |= grown;
            frontier = grown;
        }
        comp
    }

    /// A component of `allowed` meeting every mask in `required`, if any.
    /// An empty requirement list is met by the empty set.
    pub fn component_meeting(&self, allowed: u64, required: &[u64]) -> Option<u64> {
        let Some(&first) = required.first() else {
            return Some(0);
        };
        let mut left = first & allowed;
        while left != 0 {
            let comp = self.component(left.trailing_zeros() as usize, allowed);
            if required.iter().all(|&r| r & comp != 0) {
                return Some(comp);
            }
            left &= !comp;
        }
        None
    }

    /// Smallest subtree of the subtree `within` containing `points`.
    pub fn hull(&self, points: u64, within: u64) -> u64 {
        let mut hull = within;
        loop {
            let prune = bits(hull & !points)
                .find(|&v| (self.nbr[v] & hull).count_ones() <= 1)
                .map(|v| 1u64 << v);
            match prune {
                Some(bit) if hull != bit => hull &= !bit,
                _ => return hull,
            }
        }
    }

    /// Leaves of the subtree `mask` as a tree in its own right.
    pub fn leaf_count(&self, mask: u64) -> usize {
        bits(mask)
            .filter(|&v| (self.nbr[v] & mask).count_ones() <= 1)
            .count()
    }

    /// Every nonempty subtree, as masks.
    pub fn subtrees(&self) -> Vec<u64> {
        let n = self.nbr.len();
        // root at 0; children lists from BFS parents
        let mut parent = vec![usize::MAX; n];
        let mut order = vec![0usize];
        parent[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for w in bits(self.nbr[v]) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    order.push(w);
                }
            }
            i += 1;
        }
        // rooted[v]: subtrees whose shallowest vertex is v
        let mut rooted: Vec<Vec<u64>> = vec![Vec::new(); n];
        for &v in order.iter().rev() {
            let mut sets = vec![1u64 << v];
            for w in bits(self.nbr[v]).filter(|&w| parent[w] == v && w != 0) {
                let mut grown = sets.clone();
                for &s in &sets {
                    grown.extend(rooted[w].iter().map(|&c| s | c));
                }
                sets = grown;
            }
            rooted[v] = sets;
        }
        let mut all: Vec<u64> = rooted.into_iter().flatten().collect();
        all.sort_by_key(|&m| (m.count_ones(), m));
        all
    }
}
