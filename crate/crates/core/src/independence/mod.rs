//! Exact independent-set machinery.
//!
//! Most routines come in two forms: one over the whole graph and a `_within`
//! form over the induced subgraph on a vertex mask, which lets callers work on
//! `G − U` or `G − N[A]` without relabelling.

mod differential;
mod matching;

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use differential::{differential_of_graph, differential_of_set, DIFFERENTIAL_MAX_ORDER};
pub use matching::{can_match_into, maximum_matching, maximum_matching_size};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceProfile {
    pub alpha: usize,
    /// Sizes of all maximal independent sets, ascending, with multiplicity.
    pub maximal_sizes: Vec<usize>,
    /// Every maximum independent set, in lexicographic order.
    pub omega: Vec<VertexSet>,
    pub maximal_count: usize,
}

/// True iff `s` lies inside `V(g)` and induces no edge.
pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.is_subset(g.vertices()) && !g.neighborhood(s).intersects(s)
}

pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    maximal_independent_sets_within(g, g.vertices())
}

/// Maximal independent sets of `G[mask]`, in lexicographic order.
pub fn maximal_independent_sets_within(g: &Graph, mask: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let _ = for_each_maximal_within(g, mask, None, &mut |s| {
        out.push(s);
        ControlFlow::<()>::Continue(())
    });
    out.sort_unstable();
    out
}

/// Visits every maximal independent set of `G[mask]` (in search order, not
/// sorted) until `visit` breaks. With `min_size`, branches that cannot reach
/// that size are skipped, so only the large sets are visited.
pub fn for_each_maximal_within<B>(
    g: &Graph,
    mask: VertexSet,
    min_size: Option<usize>,
    visit: &mut impl FnMut(VertexSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    bron_kerbosch(g, VertexSet::EMPTY, mask, VertexSet::EMPTY, min_size.unwrap_or(0), visit)
}

/// Pivoted Bron–Kerbosch on the complement: `r` is the current set, `p` the
/// vertices that may still join it, `x` those already explored as extensions.
fn bron_kerbosch<B>(
    g: &Graph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    min_size: usize,
    visit: &mut impl FnMut(VertexSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if p.is_empty() {
        if x.is_empty() {
            return visit(r);
        }
        return ControlFlow::Continue(());
    }
    if r.len() + p.len() < min_size {
        return ControlFlow::Continue(());
    }
    // pivot minimising the branching set P ∩ N[u]
    let mut branch = p;
    for u in p | x {
        let b = p & g.closed_neighbors(u);
        if b.len() < branch.len() {
            branch = b;
            if b.len() <= 1 {
                break;
            }
        }
    }
    for v in branch {
        let nv = g.closed_neighbors(v);
        bron_kerbosch(g, r.with(v), p - nv, x - nv, min_size, visit)?;
        p.remove(v);
        x.insert(v);
        if r.len() + p.len() < min_size {
            break;
        }
    }
    ControlFlow::Continue(())
}

pub fn independence_number(g: &Graph) -> usize {
    independence_number_within(g, g.vertices())
}

/// `α(G[mask])`.
pub fn independence_number_within(g: &Graph, mask: VertexSet) -> usize {
    if mask.is_empty() {
        return 0;
    }
    let mut pick = None;
    let mut max_deg = 0;
    for v in mask {
        let d = (g.neighbors(v) & mask).len();
        if d <= 1 {
            // some maximum set contains a vertex of degree at most one
            return 1 + independence_number_within(g, mask - g.closed_neighbors(v));
        }
        if pick.is_none() || d > max_deg {
            pick = Some(v);
            max_deg = d;
        }
    }
    let v = pick.expect("nonempty mask");
    let with = 1 + independence_number_within(g, mask - g.closed_neighbors(v));
    with.max(independence_number_within(g, mask.without(v)))
}

pub fn maximum_independent_sets(g: &Graph) -> Vec<VertexSet> {
    maximum_independent_sets_within(g, g.vertices())
}

/// `Ω(G[mask])` in lexicographic order; `{∅}` for an empty mask.
pub fn maximum_independent_sets_within(g: &Graph, mask: VertexSet) -> Vec<VertexSet> {
    let alpha = independence_number_within(g, mask);
    let mut out = Vec::new();
    let _ = for_each_maximal_within(g, mask, Some(alpha), &mut |s| {
        if s.len() == alpha {
            out.push(s);
        }
        ControlFlow::<()>::Continue(())
    });
    out.sort_unstable();
    out
}

pub fn profile(g: &Graph) -> IndependenceProfile {
    let maximal = maximal_independent_sets(g);
    let mut maximal_sizes: Vec<usize> = maximal.iter().map(|s| s.len()).collect();
    maximal_sizes.sort_unstable();
    let alpha = maximal_sizes.last().copied().unwrap_or(0);
    IndependenceProfile {
        alpha,
        omega: maximal.iter().copied().filter(|s| s.len() == alpha).collect(),
        maximal_count: maximal.len(),
        maximal_sizes,
    }
}

/// A maximal independent set of `G[mask]` smaller than `alpha(G[mask])`,
/// which exists iff `G[mask]` is not well-covered.
pub fn small_maximal_within(g: &Graph, mask: VertexSet) -> Option<VertexSet> {
    let alpha = independence_number_within(g, mask);
    small_maximal_below(g, VertexSet::EMPTY, mask, VertexSet::EMPTY, alpha)
}

/// Search for a maximal independent set below `bound`; branches whose current
/// set already has `bound` members are cut.
fn small_maximal_below(
    g: &Graph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    bound: usize,
) -> Option<VertexSet> {
    if r.len() >= bound {
        return None;
    }
    if p.is_empty() {
        return x.is_empty().then_some(r);
    }
    let mut branch = p;
    for u in p | x {
        let b = p & g.closed_neighbors(u);
        if b.len() < branch.len() {
            branch = b;
        }
    }
    for v in branch {
        let nv = g.closed_neighbors(v);
        if let Some(s) = small_maximal_below(g, r.with(v), p - nv, x - nv, bound) {
            return Some(s);
        }
        p.remove(v);
        x.insert(v);
    }
    None
}

/// `ε_G(A)`: size of a largest independent superset of `A`.
pub fn epsilon(g: &Graph, a: VertexSet) -> Result<usize> {
    g.check_set(a)?;
    if !is_independent(g, a) {
        return Err(Error::arg(format!("{a} is not independent")));
    }
    Ok(epsilon_within(g, g.vertices(), a))
}

/// `ε_{G[mask]}(A)` for an independent `A ⊆ mask`.
pub(crate) fn epsilon_within(g: &Graph, mask: VertexSet, a: VertexSet) -> usize {
    a.len() + independence_number_within(g, mask - g.closed_neighborhood(a))
}

/// `k` pairwise disjoint maximum independent sets, found by backtracking
/// over `Ω(G)`. In the null graph `Ω = {∅}` and the answer is `k` copies of `∅`.
pub fn disjoint_maximum_independent_sets(g: &Graph, k: usize) -> Option<Vec<VertexSet>> {
    let omega = maximum_independent_sets(g);
    disjoint_from_family(&omega, k, g.order())
}

pub fn has_k_disjoint_maximum_independent_sets(g: &Graph, k: usize) -> bool {
    disjoint_maximum_independent_sets(g, k).is_some()
}

/// Largest `k ≤ cap` such that `k` disjoint maximum independent sets exist.
pub fn max_disjoint_maximum_independent_sets(g: &Graph, cap: usize) -> usize {
    let omega = maximum_independent_sets(g);
    (1..=cap)
        .take_while(|&k| disjoint_from_family(&omega, k, g.order()).is_some())
        .last()
        .unwrap_or(0)
}

pub(crate) fn disjoint_from_family(omega: &[VertexSet], k: usize, n: usize) -> Option<Vec<VertexSet>> {
    let alpha = omega.first().map_or(0, |s| s.len());
    if alpha == 0 {
        return Some(vec![VertexSet::EMPTY; k]);
    }
    if k * alpha > n {
        return None;
    }
    fn go(omega: &[VertexSet], from: usize, used: VertexSet, k: usize, acc: &mut Vec<VertexSet>) -> bool {
        if acc.len() == k {
            return true;
        }
        for (i, &s) in omega.iter().enumerate().skip(from) {
            if s.is_disjoint(used) {
                acc.push(s);
                if go(omega, i + 1, used | s, k, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::with_capacity(k);
    go(omega, 0, VertexSet::EMPTY, k, &mut acc).then_some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::testing::{arb_graph, brute_independent_sets, brute_maximal_independent_sets};
    use proptest::prelude::*;

    #[test]
    fn named_examples() {
        let c5 = cycle(5).unwrap();
        let mis = maximal_independent_sets(&c5);
        assert_eq!(mis.len(), 5);
        assert!(mis.iter().all(|s| s.len() == 2));
        let k3 = complete(3).unwrap();
        assert_eq!(
            maximal_independent_sets(&k3),
            vec![VertexSet::from([0]), VertexSet::from([1]), VertexSet::from([2])]
        );
        let sizes: Vec<usize> = maximal_independent_sets(&path(6).unwrap()).iter().map(|s| s.len()).collect();
        assert!(sizes.contains(&2) && sizes.contains(&3));

        assert_eq!(independence_number(&cycle(7).unwrap()), 3);
        assert_eq!(independence_number(&complete_bipartite(2, 3).unwrap()), 3);
        let null = Graph::empty(0).unwrap();
        assert_eq!(maximum_independent_sets(&null), vec![VertexSet::EMPTY]);
        assert_eq!(profile(&null).omega, vec![VertexSet::EMPTY]);
    }

    #[test]
    fn independence_test() {
        let c5 = cycle(5).unwrap();
        assert!(is_independent(&c5, VertexSet::EMPTY));
        assert!(is_independent(&c5, VertexSet::from([0, 2])));
        assert!(!is_independent(&c5, VertexSet::from([0, 1])));
        assert!(!is_independent(&c5, VertexSet::from([9])));
    }

    #[test]
    fn epsilon_examples() {
        let c5 = cycle(5).unwrap();
        assert_eq!(epsilon(&c5, VertexSet::EMPTY).unwrap(), 2);
        assert_eq!(epsilon(&c5, VertexSet::from([0])).unwrap(), 2);
        assert_eq!(epsilon(&path(4).unwrap(), VertexSet::from([1])).unwrap(), 2);
        assert!(epsilon(&c5, VertexSet::from([0, 1])).is_err());
        for s in maximal_independent_sets(&path(6).unwrap()) {
            assert_eq!(epsilon(&path(6).unwrap(), s).unwrap(), s.len());
        }
    }

    #[test]
    fn disjoint_maximum_sets() {
        assert!(has_k_disjoint_maximum_independent_sets(&cycle(7).unwrap(), 2));
        assert!(!has_k_disjoint_maximum_independent_sets(&cycle(5).unwrap(), 3));
        assert!(has_k_disjoint_maximum_independent_sets(&Graph::empty(0).unwrap(), 3));
        // P2 ∘ K2: two triangles joined by an edge between their base vertices
        let p2k2 = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (2, 3), (1, 4), (1, 5), (4, 5)]).unwrap();
        let w = disjoint_maximum_independent_sets(&p2k2, 3).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(max_disjoint_maximum_independent_sets(&cycle(5).unwrap(), 3), 2);
    }

    fn brute_alpha(g: &Graph) -> usize {
        brute_independent_sets(g).iter().map(|s| s.len()).max().unwrap_or(0)
    }

    proptest! {
        #[test]
        fn maximal_sets_match_power_set_filter(g in arb_graph(9)) {
            prop_assert_eq!(maximal_independent_sets(&g), brute_maximal_independent_sets(&g));
        }

        #[test]
        fn alpha_and_omega_match_brute_force(g in arb_graph(10)) {
            let alpha = brute_alpha(&g);
            prop_assert_eq!(independence_number(&g), alpha);
            let mut omega: Vec<VertexSet> = brute_independent_sets(&g).into_iter().filter(|s| s.len() == alpha).collect();
            omega.sort();
            prop_assert_eq!(maximum_independent_sets(&g), omega.clone());
            let p = profile(&g);
            prop_assert_eq!(p.omega, omega);
            prop_assert_eq!(p.alpha, alpha);
        }

        #[test]
        fn small_maximal_iff_not_well_covered(g in arb_graph(10)) {
            let sizes: Vec<usize> = brute_maximal_independent_sets(&g).iter().map(|s| s.len()).collect();
            let uniform = sizes.windows(2).all(|w| w[0] == w[1]);
            let found = small_maximal_within(&g, g.vertices());
            prop_assert_eq!(found.is_none(), uniform);
            if let Some(s) = found {
                prop_assert!(brute_maximal_independent_sets(&g).contains(&s));
            }
        }

        #[test]
        fn epsilon_is_largest_superset(g in arb_graph(8)) {
            let ind = brute_independent_sets(&g);
            let alpha = brute_alpha(&g);
            for &a in &ind {
                let e = ind.iter().filter(|s| a.is_subset(**s)).map(|s| s.len()).max().unwrap();
                prop_assert_eq!(epsilon(&g, a).unwrap(), e);
                prop_assert!(a.len() <= e && e <= alpha);
            }
        }
    }
}
