use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Order cap of the exhaustive scan in [`differential_of_graph`].
pub const DIFFERENTIAL_MAX_ORDER: usize = 24;

/// `∂(A) = |N(A) − A| − |A|`; `A` need not be independent.
pub fn differential_of_set(g: &Graph, a: VertexSet) -> Result<isize> {
    g.check_set(a)?;
    Ok(differential_unchecked(g, a))
}

#[inline]
pub(crate) fn differential_unchecked(g: &Graph, a: VertexSet) -> isize {
    (g.neighborhood(a) - a).len() as isize - a.len() as isize
}

/// `∂(G)`, the maximum of `∂(A)` over all `A ⊆ V(G)` including `∅`.
pub fn differential_of_graph(g: &Graph) -> Result<isize> {
    let n = g.order();
    if n > DIFFERENTIAL_MAX_ORDER {
        return Err(Error::unsupported(format!(
            "differential scan limited to {DIFFERENTIAL_MAX_ORDER} vertices (got {n})"
        )));
    }
    let mut best = 0isize;
    scan(g, 0, VertexSet::EMPTY, VertexSet::EMPTY, &mut best);
    Ok(best)
}

// ∂(A) = |N[A]| − 2|A|; include/exclude each vertex in turn.
fn scan(g: &Graph, v: usize, a: VertexSet, closed: VertexSet, best: &mut isize) {
    let value = closed.len() as isize - 2 * a.len() as isize;
    if v == g.order() {
        *best = (*best).max(value);
        return;
    }
    // adding vertices can raise |N[A]| to at most n
    if g.order() as isize - 2 * a.len() as isize <= *best {
        *best = (*best).max(value);
        return;
    }
    scan(g, v + 1, a, closed, best);
    scan(g, v + 1, a.with(v), closed | g.closed_neighbors(v), best);
}
