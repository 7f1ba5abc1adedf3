//! Immutable simple graphs on at most 64 vertices, stored as per-vertex
//! neighbourhood bitsets.
//!
//! Graphs larger than the bitset tier are handled by [`SparseGraph`], which
//! supports I/O, generators and the structural primitives at reduced speed.

mod canonical;
pub mod generators;
mod graph6;
mod sparse;
mod structure;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, CAPACITY};

pub use canonical::{canonical_form, canonical_order, CANONICAL_MAX_ORDER};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_HEADER};
pub use sparse::SparseGraph;
pub use structure::Girth;

/// Vertex cap of the dense representation.
pub const MAX_ORDER: usize = CAPACITY;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// An induced subgraph together with the map from its vertices back to the
/// host's vertex labels: `labels[new] = old`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subgraph {
    #[serde(skip)]
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl Subgraph {
    /// Host label of a subgraph vertex.
    pub fn host(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Maps a set of subgraph vertices back to host labels.
    pub fn lift(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.labels[v]).collect()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::arg(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::arg(format!("loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from neighbourhood sets, checking symmetry,
    /// irreflexivity and range.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if !nb.is_subset(all) {
                return Err(Error::arg(format!("neighbour of {v} out of range")));
            }
            if nb.contains(v) {
                return Err(Error::arg(format!("loop at vertex {v}")));
            }
            for u in nb {
                if !adj[u].contains(v) {
                    return Err(Error::arg(format!("asymmetric adjacency {v}->{u}")));
                }
            }
        }
        Ok(Graph { adj })
    }

    /// Internal constructor for adjacency known to be valid.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Self {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn is_null(&self) -> bool {
        self.adj.is_empty()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `N(A) = {v : N(v) ∩ A ≠ ∅}`; may intersect `A`.
    #[inline]
    pub fn neighborhood(&self, a: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in a {
            out |= self.adj[v];
        }
        out
    }

    /// `N[A] = N(A) ∪ A`.
    #[inline]
    pub fn closed_neighborhood(&self, a: VertexSet) -> VertexSet {
        self.neighborhood(a) | a
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|s| s.is_empty())
    }

    /// Rejects sets with members outside `0..n`.
    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::arg(format!(
                "vertex set {s} not contained in a graph of order {}",
                self.order()
            )))
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::arg(format!(
                "vertex {v} out of range for a graph of order {}",
                self.order()
            )))
        }
    }

    /// `G[X]`, relabelled to `0..|X|` preserving relative order.
    pub fn induced(&self, x: VertexSet) -> Result<Subgraph> {
        self.check_set(x)?;
        Ok(self.induced_unchecked(x))
    }

    pub(crate) fn induced_unchecked(&self, x: VertexSet) -> Subgraph {
        let labels: Vec<usize> = x.to_vec();
        let mut index = [usize::MAX; CAPACITY];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let adj = labels
            .iter()
            .map(|&v| (self.adj[v] & x).iter().map(|u| index[u]).collect())
            .collect();
        Subgraph {
            graph: Graph { adj },
            labels,
        }
    }

    /// `G − U`.
    pub fn delete_vertices(&self, u: VertexSet) -> Result<Subgraph> {
        self.check_set(u)?;
        Ok(self.induced_unchecked(self.vertices() - u))
    }

    /// `G − v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Subgraph> {
        self.check_vertex(v)?;
        Ok(self.induced_unchecked(self.vertices().without(v)))
    }

    /// `G_ab = G[V − (N(a) ∪ N(b))]` for an edge `ab`.
    pub fn g_ab(&self, a: usize, b: usize) -> Result<Subgraph> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if !self.has_edge(a, b) {
            return Err(Error::arg(format!("{a}{b} is not an edge")));
        }
        Ok(self.induced_unchecked(self.vertices() - (self.adj[a] | self.adj[b])))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            adj: (0..self.order())
                .map(|v| (all - self.adj[v]).without(v))
                .collect(),
        }
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n || perm.iter().collect::<VertexSet>() != self.vertices() {
            return Err(Error::arg("relabelling is not a permutation of the vertices"));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Ok(Graph { adj })
    }

    pub fn to_graph6(&self) -> String {
        write_graph6(self)
    }

    pub fn from_graph6(line: &str) -> Result<Graph> {
        parse_graph6(line)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::unsupported(format!(
            "{n} vertices exceed the dense tier limit of {MAX_ORDER}; use SparseGraph"
        )))
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.to_graph6(), self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;
    use crate::testing::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn neighborhoods() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.neighborhood(VertexSet::from([0])).to_vec(), vec![1, 4]);
        assert!(c5.neighborhood(VertexSet::EMPTY).is_empty());
        let k3k1 = disjoint_union(&[complete(3).unwrap(), complete(1).unwrap()]).unwrap();
        assert!(k3k1.neighborhood(VertexSet::from([3])).is_empty());
        assert_eq!(
            c5.closed_neighborhood(VertexSet::from([0])).to_vec(),
            vec![0, 1, 4]
        );
        // open neighbourhood can meet A
        assert_eq!(
            c5.neighborhood(VertexSet::from([0, 1])).to_vec(),
            vec![0, 1, 2, 4]
        );
    }

    #[test]
    fn deletion_and_induced() {
        let c4 = cycle(4).unwrap();
        let p3 = c4.delete_vertex(0).unwrap();
        assert_eq!(p3.labels, vec![1, 2, 3]);
        assert_eq!(canonical_form(&p3.graph).unwrap(), canonical_form(&path(3).unwrap()).unwrap());

        let p = path(3).unwrap();
        let two_k1 = p.delete_vertex(1).unwrap();
        assert_eq!(two_k1.graph.order(), 2);
        assert_eq!(two_k1.graph.edge_count(), 0);

        let whole = c4.induced(c4.vertices()).unwrap();
        assert_eq!(whole.graph, c4);
        assert_eq!(whole.labels, vec![0, 1, 2, 3]);

        assert!(c4.delete_vertex(4).is_err());
        assert!(c4.induced(VertexSet::from([7])).is_err());
    }

    #[test]
    fn g_ab_examples() {
        let c5 = cycle(5).unwrap();
        for (a, b) in c5.edges().collect::<Vec<_>>() {
            let sub = c5.g_ab(a, b).unwrap();
            assert_eq!(sub.graph.order(), 1);
        }
        let k2 = complete(2).unwrap();
        assert_eq!(k2.g_ab(0, 1).unwrap().graph.order(), 0);
        assert!(c5.g_ab(0, 2).is_err());

        // C7 edge 01: N(0) ∪ N(1) = {6,1,0,2}; survivors 3,4,5 induce P3.
        let c7 = cycle(7).unwrap();
        let sub = c7.g_ab(0, 1).unwrap();
        assert_eq!(sub.labels, vec![3, 4, 5]);
        assert_eq!(
            canonical_form(&sub.graph).unwrap(),
            canonical_form(&path(3).unwrap()).unwrap()
        );
    }

    #[test]
    fn construction_validates() {
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::empty(65).is_err());
        let bad = vec![VertexSet::from([1]), VertexSet::EMPTY];
        assert!(Graph::from_adjacency(bad).is_err());
        let looped = vec![VertexSet::from([0])];
        assert!(Graph::from_adjacency(looped).is_err());
    }

    proptest! {
        #[test]
        fn delete_vertex_degrees(g in arb_graph(12), pick in any::<prop::sample::Index>()) {
            prop_assume!(g.order() > 0);
            let v = pick.index(g.order());
            let sub = g.delete_vertex(v).unwrap();
            prop_assert_eq!(sub.graph.order(), g.order() - 1);
            for (new, &old) in sub.labels.iter().enumerate() {
                let expected = g.degree(old) - usize::from(g.has_edge(old, v));
                prop_assert_eq!(sub.graph.degree(new), expected);
            }
        }

        #[test]
        fn adjacency_invariants(g in arb_graph(16)) {
            prop_assert!(Graph::from_adjacency(g.adjacency().to_vec()).is_ok());
        }

        #[test]
        fn complement_is_involution(g in arb_graph(12)) {
            prop_assert_eq!(g.complement().complement(), g.clone());
            let n = g.order();
            prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * n.saturating_sub(1) / 2);
        }
    }

}
