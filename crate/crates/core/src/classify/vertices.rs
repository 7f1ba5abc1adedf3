//! Shedding and simplicial vertices.

use std::ops::ControlFlow;

use crate::error::Result;
use crate::graph::Graph;
use crate::independence::for_each_maximal_within;
use crate::vertex_set::VertexSet;

/// Every independent `S` of `G − N[v]` leaves some neighbour of `v` free,
/// i.e. `N(v) ⊄ N(S)`.
///
/// `N(S)` only grows with `S`, so the maximal independent sets of `G − N[v]`
/// are the only ones that need checking.
pub fn is_shedding(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(shedding_unchecked(g, v))
}

pub(crate) fn shedding_unchecked(g: &Graph, v: usize) -> bool {
    let nv = g.neighbors(v);
    if nv.is_empty() {
        return false;
    }
    let rest = g.vertices() - g.closed_neighbors(v);
    for_each_maximal_within(g, rest, None, &mut |s| {
        if nv.is_subset(g.neighborhood(s)) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_continue()
}

/// `Shed(G)`.
pub fn shedding_vertices(g: &Graph) -> VertexSet {
    g.vertices().iter().filter(|&v| shedding_unchecked(g, v)).collect()
}

fn is_clique(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|u| (s - g.closed_neighbors(u)).is_empty())
}

/// `N[v]` induces a complete graph.
pub fn is_simplicial(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(is_clique(g, g.neighbors(v)))
}

/// `Simp(G)`.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    g.vertices().iter().filter(|&v| is_clique(g, g.neighbors(v))).collect()
}

/// The distinct simplexes `N[v]`, `v ∈ Simp(G)`, in lexicographic order.
pub fn simplexes(g: &Graph) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = simplicial_vertices(g).iter().map(|v| g.closed_neighbors(v)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Every vertex lies in some simplex.
pub fn is_simplicial_graph(g: &Graph) -> bool {
    simplexes(g).into_iter().fold(VertexSet::EMPTY, |acc, s| acc | s) == g.vertices()
}

/// The simplexes, when they partition `V(G)`.
pub fn simplex_partition(g: &Graph) -> Option<Vec<VertexSet>> {
    let simplexes = simplexes(g);
    let mut covered = VertexSet::EMPTY;
    for &s in &simplexes {
        if covered.intersects(s) {
            return None;
        }
        covered |= s;
    }
    (covered == g.vertices()).then_some(simplexes)
}
