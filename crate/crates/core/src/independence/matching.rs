use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Whether some matching of `A`–`B` edges saturates `A`.
pub fn can_match_into(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    g.check_set(a)?;
    g.check_set(b)?;
    if a.intersects(b) {
        return Err(Error::arg(format!("{a} and {b} overlap")));
    }
    if a.len() > b.len() {
        return Ok(false);
    }
    let mut mate_of = [usize::MAX; 64];
    for u in a {
        let mut visited = VertexSet::EMPTY;
        if !augment(g, u, b, &mut visited, &mut mate_of) {
            return Ok(false);
        }
    }
    Ok(true)
}

// Kuhn's augmenting search from `u` into `b`.
fn augment(g: &Graph, u: usize, b: VertexSet, visited: &mut VertexSet, mate_of: &mut [usize; 64]) -> bool {
    for w in g.neighbors(u) & b {
        if visited.contains(w) {
            continue;
        }
        visited.insert(w);
        if mate_of[w] == usize::MAX || augment(g, mate_of[w], b, visited, mate_of) {
            mate_of[w] = u;
            return true;
        }
    }
    false
}

/// `μ(G)`.
pub fn maximum_matching_size(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// A maximum matching as edges `(u, v)` with `u < v`, sorted; computed with
/// Edmonds' blossom algorithm.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut mate = vec![usize::MAX; n];
    // greedy start
    for u in 0..n {
        if mate[u] == usize::MAX {
            if let Some(v) = g.neighbors(u).iter().find(|&v| mate[v] == usize::MAX) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }
    let mut blossom = Blossom::new(n);
    for root in 0..n {
        if mate[root] == usize::MAX {
            if let Some(end) = blossom.find_path(g, root, &mate) {
                // flip the alternating path ending at `end`
                let mut v = end;
                while v != usize::MAX {
                    let pv = blossom.parent[v];
                    let next = mate[pv];
                    mate[v] = pv;
                    mate[pv] = v;
                    v = next;
                }
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = (0..n)
        .filter(|&u| mate[u] != usize::MAX && u < mate[u])
        .map(|u| (u, mate[u]))
        .collect();
    edges.sort_unstable();
    edges
}

struct Blossom {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom {
    fn new(n: usize) -> Self {
        Blossom {
            parent: vec![usize::MAX; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if mate[a] == usize::MAX {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// Searches for an augmenting path from `root`; returns its free end.
    fn find_path(&mut self, g: &Graph, root: usize, mate: &[usize]) -> Option<usize> {
        let n = mate.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = usize::MAX);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != usize::MAX && self.parent[mate[to]] != usize::MAX) {
                    let cur = self.lca(mate, v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == usize::MAX {
                    self.parent[to] = v;
                    if mate[to] == usize::MAX {
                        return Some(to);
                    }
                    self.used[mate[to]] = true;
                    self.queue.push_back(mate[to]);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::testing::arb_graph;
    use proptest::prelude::*;

    fn brute_mu(g: &Graph) -> usize {
        let edges: Vec<_> = g.edges().collect();
        let mut best = 0;
        for mask in 0u32..1 << edges.len() {
            if mask.count_ones() as usize <= best {
                continue;
            }
            let mut used = VertexSet::EMPTY;
            let ok = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .all(|(_, &(u, v))| {
                    let fresh = !used.contains(u) && !used.contains(v);
                    used.insert(u);
                    used.insert(v);
                    fresh
                });
            if ok {
                best = mask.count_ones() as usize;
            }
        }
        best
    }

    #[test]
    fn matching_examples() {
        assert_eq!(maximum_matching_size(&cycle(5).unwrap()), 2);
        assert_eq!(maximum_matching_size(&complete(4).unwrap()), 2);
        let c3k2 = disjoint_union(&[complete(3).unwrap(), complete(2).unwrap()]).unwrap();
        assert_eq!(maximum_matching_size(&c3k2), 2);
        assert_eq!(maximum_matching_size(&Graph::empty(0).unwrap()), 0);
        // Petersen graph has a perfect matching
        let petersen = Graph::from_edges(
            10,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
        )
        .unwrap();
        assert_eq!(maximum_matching_size(&petersen), 5);
    }

    #[test]
    fn match_into_examples() {
        let c4 = cycle(4).unwrap();
        assert!(can_match_into(&c4, VertexSet::from([1]), VertexSet::from([0, 2])).unwrap());
        assert!(can_match_into(&c4, VertexSet::EMPTY, VertexSet::from([0])).unwrap());
        let star = complete_bipartite(1, 3).unwrap();
        assert!(!can_match_into(&star, VertexSet::from([1, 2]), VertexSet::from([0])).unwrap());
        assert!(can_match_into(&c4, VertexSet::from([1]), VertexSet::from([1])).is_err());
    }

    proptest! {
        #[test]
        fn mu_matches_edge_subsets(g in arb_graph(8)) {
            prop_assume!(g.edge_count() <= 16);
            let m = maximum_matching(&g);
            prop_assert!(m.iter().all(|&(u, v)| g.has_edge(u, v)));
            let covered: VertexSet = m.iter().flat_map(|&(u, v)| [u, v]).collect();
            prop_assert_eq!(covered.len(), 2 * m.len());
            prop_assert_eq!(m.len(), brute_mu(&g));
        }

        #[test]
        fn mu_bounded_by_greedy_and_order(g in arb_graph(14)) {
            let m = maximum_matching_size(&g);
            let mut used = VertexSet::EMPTY;
            let mut greedy = 0;
            for (u, v) in g.edges() {
                if !used.contains(u) && !used.contains(v) {
                    used.insert(u);
                    used.insert(v);
                    greedy += 1;
                }
            }
            prop_assert!(m >= greedy && 2 * m <= g.order());
        }
    }
}
