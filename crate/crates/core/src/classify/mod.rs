//! Hierarchy predicates: well-covered and its refinements, the `W_k` classes,
//! shedding and simplicial vertices, and the regularity criteria.

mod criteria;
mod report;
mod vertices;
mod wclass;

use std::ops::ControlFlow;

use serde::Serialize;

use crate::graph::Graph;
use crate::independence::{independence_number_within, small_maximal_within};
use crate::vertex_set::VertexSet;

pub use criteria::*;
pub use report::{class_report, ClassReport};
pub use vertices::{
    is_shedding, is_simplicial, is_simplicial_graph, shedding_vertices, simplex_partition,
    simplexes, simplicial_vertices,
};
pub use wclass::{is_in_w, is_in_w_generic, is_in_w_staples, w_extension_failure, WReading};

/// All maximal independent sets have one size; true for the null graph.
pub fn is_well_covered(g: &Graph) -> bool {
    is_well_covered_within(g, g.vertices())
}

/// Well-coveredness of `G[mask]`.
pub fn is_well_covered_within(g: &Graph, mask: VertexSet) -> bool {
    small_maximal_within(g, mask).is_none()
}

pub fn is_very_well_covered(g: &Graph) -> bool {
    !g.has_isolated_vertex()
        && 2 * independence_number_within(g, g.vertices()) == g.order()
        && is_well_covered(g)
}

/// Well-covered with at least two vertices, and every `G − v` well-covered.
pub fn is_one_well_covered(g: &Graph) -> bool {
    g.order() >= 2
        && is_well_covered(g)
        && g.vertices().iter().all(|v| is_well_covered_within(g, g.vertices().without(v)))
}

/// Visits every independent set of `G` (including `∅`) until `visit` breaks.
pub(crate) fn for_each_independent<B>(
    g: &Graph,
    visit: &mut impl FnMut(VertexSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    fn go<B>(
        g: &Graph,
        s: VertexSet,
        free: VertexSet,
        visit: &mut impl FnMut(VertexSet) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        visit(s)?;
        let mut rest = free;
        for v in free {
            rest.remove(v);
            go(g, s.with(v), rest - g.neighbors(v), visit)?;
        }
        ControlFlow::Continue(())
    }
    go(g, VertexSet::EMPTY, g.vertices(), visit)
}

/// `|S| ≤ |N(S)|` for every independent `S`.
pub fn is_quasi_regularizable(g: &Graph) -> bool {
    for_each_independent(g, &mut |s| {
        if s.len() > g.neighborhood(s).len() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_continue()
}

/// `|N(S)| ≥ |S|` for every independent `S`, with `N(N(S)) = S` whenever
/// equality holds.
pub fn is_regularizable(g: &Graph) -> bool {
    for_each_independent(g, &mut |s| {
        let ns = g.neighborhood(s);
        if ns.len() < s.len() || (ns.len() == s.len() && g.neighborhood(ns) != s) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_continue()
}

/// `G − N[v]` is triangle-free for every `v`.
pub fn is_locally_triangle_free(g: &Graph) -> bool {
    g.vertices()
        .iter()
        .all(|v| !g.has_triangle_within(g.vertices() - g.closed_neighbors(v)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Monotonicity {
    Holds,
    /// `a ⊂ b` independent with `b = a ∪ {v}` and the inequality failing.
    Violated { a: VertexSet, b: VertexSet },
}

impl Monotonicity {
    pub fn holds(self) -> bool {
        self == Monotonicity::Holds
    }
}

/// Checks `|N(A)| − (k−1)|A| ≤ |N(B)| − (k−1)|B|` for all independent `A ⊆ B`.
///
/// Adding one vertex at a time, it is enough to look at `B = A ∪ {v}`, where
/// the condition reads `|N(v) − N(A)| ≥ k − 1`.
pub fn check_wk_monotonicity(g: &Graph, k: usize) -> Monotonicity {
    let need = k.saturating_sub(1);
    let mut out = Monotonicity::Holds;
    let _ = for_each_independent(g, &mut |a| {
        let na = g.neighborhood(a);
        for v in g.vertices() - a - na {
            if (g.neighbors(v) - na).len() < need {
                out = Monotonicity::Violated { a, b: a.with(v) };
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    out
}

/// `∂` is monotone over `Ind(G)`: the `k = 2` case of [`check_wk_monotonicity`].
pub fn differential_monotone(g: &Graph) -> bool {
    check_wk_monotonicity(g, 2).holds()
}
