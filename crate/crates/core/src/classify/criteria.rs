//! Alternative characterisations of `W_2` and of shedding vertices, each
//! evaluated literally so that they can be compared against one another.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::graph::Graph;
use crate::independence::{
    independence_number_within, is_independent, maximum_independent_sets,
};
use crate::vertex_set::VertexSet;

use super::vertices::shedding_unchecked;
use super::wclass::{is_in_w_generic, is_in_w_staples, WReading};
use super::{for_each_independent, is_one_well_covered, is_well_covered_within, differential_monotone};

/// The seven conditions equivalent to `G ∈ W_2` for graphs without isolated
/// vertices. "Non-maximum" means `|A| < α(G)`, so `∅` is included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct W2Conditions {
    /// `G ≠ P3` and `G − v` well-covered for every `v`.
    pub deletions_well_covered: bool,
    pub one_well_covered: bool,
    pub in_w2: bool,
    /// Every non-maximum independent `A` is the intersection of two members of `Ω`.
    pub two_disjoint_completions: bool,
    /// Every non-maximum independent `A` lies in two distinct members of `Ω`.
    pub two_distinct_completions: bool,
    /// Disjoint non-maximum independent `A, B` admit `S ∈ Ω` with `A ⊆ S`, `B ∩ S = ∅`.
    pub avoid_set: bool,
    /// A non-maximum independent `A` and `v ∉ A` admit `S ∈ Ω` with `A ⊆ S`, `v ∉ S`.
    pub avoid_vertex: bool,
}

impl W2Conditions {
    pub fn as_array(&self) -> [bool; 7] {
        [
            self.deletions_well_covered,
            self.one_well_covered,
            self.in_w2,
            self.two_disjoint_completions,
            self.two_distinct_completions,
            self.avoid_set,
            self.avoid_vertex,
        ]
    }

    pub fn agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&x| x == a[0])
    }
}

pub fn is_p3(g: &Graph) -> bool {
    g.order() == 3 && g.edge_count() == 2
}

fn non_maximum_independent_sets(g: &Graph, alpha: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let _ = for_each_independent(g, &mut |s| {
        if s.len() < alpha {
            out.push(s);
        }
        ControlFlow::<()>::Continue(())
    });
    out
}

pub fn w2_conditions(g: &Graph) -> W2Conditions {
    let all = g.vertices();
    let omega = maximum_independent_sets(g);
    let alpha = omega[0].len();
    let small = non_maximum_independent_sets(g, alpha);
    let over = |a: VertexSet| omega.iter().copied().filter(move |s| a.is_subset(*s));
    W2Conditions {
        deletions_well_covered: !is_p3(g) && all.iter().all(|v| is_well_covered_within(g, all.without(v))),
        one_well_covered: is_one_well_covered(g),
        in_w2: is_in_w_generic(g, 2, WReading::EmptyAllowed).expect("k = 2"),
        two_disjoint_completions: small
            .iter()
            .all(|&a| over(a).any(|s| over(a).any(|t| s & t == a))),
        two_distinct_completions: small.iter().all(|&a| over(a).nth(1).is_some()),
        avoid_set: small.iter().all(|&a| {
            small
                .iter()
                .filter(|b| b.is_disjoint(a))
                .all(|&b| over(a).any(|s| s.is_disjoint(b)))
        }),
        avoid_vertex: small
            .iter()
            .all(|&a| (all - a).iter().all(|v| over(a).any(|s| !s.contains(v)))),
    }
}

/// The four equivalent forms of "`v` is shedding" for a non-isolated vertex of
/// a well-covered graph, in order: `G − v` well-covered; `|N(v) − N(S)| ≥ 1`
/// for every independent `S` of `G − N[v]`; no independent `S ⊆ V − N[v]`
/// isolates `v` in `G − N[S]`; `v ∈ Shed(G)`.
pub fn shedding_conditions(g: &Graph, v: usize) -> [bool; 4] {
    let nv = g.neighbors(v);
    let outside = g.vertices() - g.closed_neighbors(v);
    let mut free_neighbour = true;
    let mut never_isolated = true;
    let _ = for_each_independent(g, &mut |s| {
        if s.is_subset(outside) {
            if (nv - g.neighborhood(s)).is_empty() {
                free_neighbour = false;
            }
            let left = g.vertices() - g.closed_neighborhood(s);
            if left.contains(v) && !g.neighbors(v).intersects(left) {
                never_isolated = false;
            }
        }
        ControlFlow::<()>::Continue(())
    });
    [
        is_well_covered_within(g, g.vertices().without(v)),
        free_neighbour,
        never_isolated,
        shedding_unchecked(g, v),
    ]
}

/// The five equivalent forms of `G ∈ W_2` for a well-covered graph without
/// isolated vertices: membership; `∂` monotone over `Ind(G)`;
/// `Shed(G) = V(G)`; no independent `S` leaves an isolated vertex in
/// `G − N[S]`; `G − N[v] ∈ W_2` for every `v`.
pub fn w2_five_way(g: &Graph) -> [bool; 5] {
    let all = g.vertices();
    let mut no_isolated_left = true;
    let _ = for_each_independent(g, &mut |s| {
        let left = all - g.closed_neighborhood(s);
        if left.iter().any(|w| !g.neighbors(w).intersects(left)) {
            no_isolated_left = false;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    [
        is_in_w_staples(g),
        differential_monotone(g),
        all.iter().all(|v| shedding_unchecked(g, v)),
        no_isolated_left,
        all.iter()
            .all(|v| is_in_w_staples(&g.induced_unchecked(all - g.closed_neighbors(v)).graph)),
    ]
}

/// `G_ab` is well-covered with `α(G_ab) = α(G) − 1` for every edge `ab`.
pub fn edge_residue_condition(g: &Graph) -> bool {
    let alpha = independence_number_within(g, g.vertices());
    g.edges().all(|(a, b)| {
        let rest = g.vertices() - (g.neighbors(a) | g.neighbors(b));
        independence_number_within(g, rest) + 1 == alpha && is_well_covered_within(g, rest)
    })
}

/// Some maximal independent set `I` of `G − A` admits a matching of `A` into `I`.
pub fn matched_into_independent(g: &Graph, a: VertexSet) -> bool {
    debug_assert!(is_independent(g, a));
    let rest = g.vertices() - a;
    let mut found = false;
    let _ = crate::independence::for_each_maximal_within(g, rest, None, &mut |i| {
        if crate::independence::can_match_into(g, a, i).expect("disjoint") {
            found = true;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}
