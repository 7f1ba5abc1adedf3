//! Adjacency-list graphs for orders beyond the bitset tier.
//!
//! Only I/O, the standard generators and structural primitives are provided;
//! the hierarchy predicates need [`Graph`]. Convert with
//! [`SparseGraph::to_dense`] when the order allows it.

use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::graph6::{decode, encode, MAX_G6_ORDER};
use super::structure::Girth;
use super::{Graph, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseGraph {
    adj: Vec<Vec<usize>>,
}

impl SparseGraph {
    pub fn empty(n: usize) -> Self {
        SparseGraph { adj: vec![Vec::new(); n] }
    }

    /// Duplicate edges are merged; loops and out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::arg(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::arg(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(SparseGraph { adj })
    }

    pub fn from_graph6(line: &str) -> Result<Self> {
        let (n, edges) = decode(line)?;
        SparseGraph::from_edges(n, &edges)
    }

    pub fn to_graph6(&self) -> Result<String> {
        if self.order() > MAX_G6_ORDER {
            return Err(Error::unsupported(format!(
                "graph6 short forms stop at {MAX_G6_ORDER} vertices"
            )));
        }
        Ok(encode(self.order(), |i, j| self.has_edge(i, j)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::arg("cycle needs n >= 3"));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SparseGraph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::arg("path needs n >= 1"));
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SparseGraph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::arg("complete graph needs n >= 1"));
        }
        Ok(SparseGraph {
            adj: (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect(),
        })
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Result<Self> {
        if p < 1 || q < 1 {
            return Err(Error::arg("complete bipartite graph needs p, q >= 1"));
        }
        let n = p + q;
        Ok(SparseGraph {
            adj: (0..n)
                .map(|v| if v < p { (p..n).collect() } else { (0..p).collect() })
                .collect(),
        })
    }

    pub fn disjoint_union(gs: &[SparseGraph]) -> Self {
        let mut adj = Vec::new();
        let mut offset = 0;
        for g in gs {
            adj.extend(g.adj.iter().map(|l| l.iter().map(|&u| u + offset).collect()));
            offset += g.order();
        }
        SparseGraph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Induced subgraph on the vertices with `keep[v]`, plus `labels[new] = old`.
    pub fn induced(&self, keep: &[bool]) -> Result<(SparseGraph, Vec<usize>)> {
        if keep.len() != self.order() {
            return Err(Error::arg("vertex mask length differs from the order"));
        }
        let labels: Vec<usize> = (0..self.order()).filter(|&v| keep[v]).collect();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let adj = labels
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&u| keep[u]).map(|&u| index[u]).collect())
            .collect();
        Ok((SparseGraph { adj }, labels))
    }

    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(SparseGraph, Vec<usize>)> {
        let mut keep = vec![true; self.order()];
        for &v in removed {
            if v >= self.order() {
                return Err(Error::arg(format!("vertex {v} out of range")));
            }
            keep[v] = false;
        }
        self.induced(&keep)
    }

    /// Components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Colour classes `(X, Y)` with each component's smallest vertex in `X`.
    pub fn is_bipartite(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut colour = vec![u8::MAX; self.order()];
        for s in 0..self.order() {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if colour[w] == u8::MAX {
                        colour[w] = colour[u] ^ 1;
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
        }
        let (x, y): (Vec<usize>, Vec<usize>) = (0..self.order()).partition(|&v| colour[v] == 0);
        Some((x, y))
    }

    pub fn girth(&self) -> Girth {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            queue.clear();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    pub fn to_dense(&self) -> Result<Graph> {
        if self.order() > MAX_ORDER {
            return Err(Error::unsupported(format!(
                "{} vertices exceed the dense tier limit of {MAX_ORDER}",
                self.order()
            )));
        }
        Graph::from_edges(self.order(), &self.edges().collect::<Vec<_>>())
    }
}

impl From<&Graph> for SparseGraph {
    fn from(g: &Graph) -> Self {
        SparseGraph {
            adj: (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;
    use crate::testing::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn large_cycle() {
        let c = SparseGraph::cycle(200).unwrap();
        assert_eq!(c.girth(), Girth::Finite(200));
        assert!(c.is_bipartite().is_some());
        assert!(c.to_dense().is_err());
        let s = c.to_graph6().unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(SparseGraph::from_graph6(&s).unwrap(), c);
        let (p, labels) = c.delete_vertices(&[0]).unwrap();
        assert_eq!(p.girth(), Girth::Infinite);
        assert_eq!(labels[0], 1);
        assert!(p.is_connected());
        let (two, _) = c.delete_vertices(&[0, 100]).unwrap();
        assert_eq!(two.components().len(), 2);
    }

    #[test]
    fn generators_match_dense() {
        let pairs = [
            (SparseGraph::cycle(7).unwrap(), generators::cycle(7).unwrap()),
            (SparseGraph::path(4).unwrap(), generators::path(4).unwrap()),
            (SparseGraph::complete(5).unwrap(), generators::complete(5).unwrap()),
            (
                SparseGraph::complete_bipartite(2, 3).unwrap(),
                generators::complete_bipartite(2, 3).unwrap(),
            ),
        ];
        for (s, d) in pairs {
            assert_eq!(s.to_dense().unwrap(), d);
        }
    }

    proptest! {
        #[test]
        fn agrees_with_dense(g in arb_graph(12)) {
            let s = SparseGraph::from(&g);
            prop_assert_eq!(s.to_dense().unwrap(), g.clone());
            prop_assert_eq!(s.girth(), g.girth());
            prop_assert_eq!(s.is_bipartite().is_some(), g.is_bipartite().is_some());
            prop_assert_eq!(s.components().len(), g.components().len());
            prop_assert_eq!(s.to_graph6().unwrap(), g.to_graph6());
        }
    }
}
