//! Shared strategies and brute-force oracles for unit tests.

use proptest::prelude::*;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Random labelled graphs with up to `max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Every labelled graph on `n` vertices (`n ≤ 5` keeps this under 1024 graphs).
pub fn all_labelled(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// All subsets of `V(g)` that induce no edge, by direct pair test.
pub fn brute_independent_sets(g: &Graph) -> Vec<VertexSet> {
    g.vertices()
        .subsets()
        .filter(|s| {
            let vs = s.to_vec();
            vs.iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
        })
        .collect()
}

/// Inclusion-maximal independent sets by filtering the full power set.
pub fn brute_maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let ind = brute_independent_sets(g);
    let mut out: Vec<VertexSet> = ind
        .iter()
        .copied()
        .filter(|s| !ind.iter().any(|t| t != s && s.is_subset(*t)))
        .collect();
    out.sort();
    out
}
