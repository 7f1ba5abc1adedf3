use std::fmt;

use serde::{Serialize, Serializer};

use crate::vertex_set::VertexSet;

use super::Graph;

/// Length of a shortest cycle; `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }

    /// `girth ≥ k`, with forests satisfying every bound.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl Graph {
    pub fn girth(&self) -> Girth {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = Vec::with_capacity(n);
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            queue.clear();
            dist[root] = 0;
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push(w);
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

    /// A bipartition `(X, Y)` with `0 ∈ X` when one exists; each component's
    /// smallest vertex goes to `X`.
    pub fn is_bipartite(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = [VertexSet::EMPTY; 2];
        let mut seen = VertexSet::EMPTY;
        for start in 0..self.order() {
            if seen.contains(start) {
                continue;
            }
            let mut frontier = VertexSet::singleton(start);
            let mut colour = 0;
            while !frontier.is_empty() {
                side[colour] |= frontier;
                seen |= frontier;
                let next = self.neighborhood(frontier);
                if next.intersects(side[colour]) {
                    return None;
                }
                frontier = next - seen;
                colour ^= 1;
            }
        }
        Some((side[0], side[1]))
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = self.vertices();
        while let Some(v) = rest.first() {
            let comp = self.component_of(v, rest);
            rest -= comp;
            out.push(comp);
        }
        out
    }

    /// The component containing `v` inside the induced subgraph on `within`.
    pub(crate) fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let next = (self.neighborhood(frontier) & within) - comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.component_of(0, self.vertices()) == self.vertices()
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.order()
    }

    /// Whether the induced subgraph on `within` contains a triangle.
    pub fn has_triangle_within(&self, within: VertexSet) -> bool {
        within
            .iter()
            .any(|u| (self.neighbors(u) & within).iter().any(|v| v > u && (self.neighbors(u) & self.neighbors(v) & within).last().is_some_and(|w| w > v)))
    }

    pub fn is_triangle_free(&self) -> bool {
        !self.has_triangle_within(self.vertices())
    }

    /// Whether some 4-cycle (not necessarily induced) is present.
    pub fn has_four_cycle(&self) -> bool {
        let n = self.order();
        (0..n).any(|u| (u + 1..n).any(|v| (self.neighbors(u) & self.neighbors(v)).len() >= 2))
    }
}
