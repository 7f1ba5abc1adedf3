//! Standard labelled families.
//!
//! Labelling: `path` and `cycle` run `0-1-…-(n−1)` (the cycle closes with
//! `(n−1)-0`); `complete_bipartite(p, q)` puts the `p` side first.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

use super::Graph;

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::arg("complete graph needs n >= 1"));
    }
    let g = Graph::empty(n)?;
    let all = g.vertices();
    Ok(Graph::from_adjacency_unchecked(
        (0..n).map(|v| all.without(v)).collect(),
    ))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::arg("path needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::arg("cycle needs n >= 3"));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < 1 {
        return Err(Error::arg("complete bipartite graph needs p, q >= 1"));
    }
    let n = p + q;
    Graph::empty(n)?;
    let left = VertexSet::full(p);
    let right = VertexSet::full(n) - left;
    Ok(Graph::from_adjacency_unchecked(
        (0..n).map(|v| if v < p { right } else { left }).collect(),
    ))
}

/// Blocks are relabelled consecutively in list order.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
    let n: usize = gs.iter().map(Graph::order).sum();
    Graph::empty(n)?;
    let mut adj = Vec::with_capacity(n);
    let mut offset = 0;
    for g in gs {
        adj.extend(g.adjacency().iter().map(|s| VertexSet::from_bits(s.bits() << offset)));
        offset += g.order();
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// `k` disjoint copies of `g`.
pub fn copies(g: &Graph, k: usize) -> Result<Graph> {
    disjoint_union(&vec![g.clone(); k])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.order(), c5.edge_count()), (5, 5));
        assert!((0..5).all(|v| c5.degree(v) == 2));

        let two_k2 = disjoint_union(&[complete(2).unwrap(), complete(2).unwrap()]).unwrap();
        assert_eq!((two_k2.order(), two_k2.edge_count()), (4, 2));
        assert_eq!(two_k2.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);

        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert!(k23.is_bipartite().is_some());

        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(disjoint_union(&[]).unwrap().order(), 0);
    }

    #[test]
    fn parameter_minimums() {
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(path(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
        assert!(complete(65).is_err());
    }
}
