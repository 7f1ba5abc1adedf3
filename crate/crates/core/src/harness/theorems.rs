//! Statement bodies for the per-graph registry.

use std::ops::ControlFlow;

use serde_json::json;

use crate::classify::{
    check_wk_monotonicity, edge_residue_condition, for_each_independent,
    is_in_w, is_in_w_generic, is_in_w_staples, is_locally_triangle_free, is_regularizable,
    is_simplicial_graph, is_very_well_covered, is_well_covered_within, matched_into_independent,
    shedding_conditions, shedding_vertices, simplexes, simplicial_vertices, w2_conditions,
    w2_five_way, Monotonicity, WReading,
};
use crate::constructions::clique_corona_base;
use crate::graph::Graph;
use crate::independence::{
    can_match_into, differential_of_graph, disjoint_from_family, epsilon_within,
    independence_number_within, maximal_independent_sets, maximum_matching_size,
};
use crate::vertex_set::VertexSet;

use super::{Ctx, Kind, Outcome, Theorem};

/// Largest `k` probed by the `W_k` statements.
const K_PROBE: usize = 3;

pub(super) static REGISTRY: &[Theorem] = &[
    Theorem {
        id: "lem.alpha-deletion",
        hypotheses: "G well-covered, v not isolated",
        conclusion: "α(G−v) = α(G)",
        kind: Kind::Proven,
        max_order: 64,
        check: alpha_deletion,
    },
    Theorem {
        id: "thm.w2-equivalence",
        hypotheses: "G has no isolated vertices, |V| ≥ 1",
        conclusion: "the seven W2 characterisations agree",
        kind: Kind::Proven,
        max_order: 10,
        check: w2_equivalence,
    },
    Theorem {
        id: "cor.w2-minus-closed-neighborhood-of-set",
        hypotheses: "G ∈ W2",
        conclusion: "G−N[S] ∈ W2 for every non-maximum independent S",
        kind: Kind::Proven,
        max_order: 14,
        check: w2_minus_closed_neighborhood,
    },
    Theorem {
        id: "cor.w2-no-leaf",
        hypotheses: "G connected, G ∈ W2, G ≠ K2",
        conclusion: "G has no leaf",
        kind: Kind::Proven,
        max_order: 64,
        check: w2_no_leaf,
    },
    Theorem {
        id: "thm.w2-connected-properties",
        hypotheses: "G connected, G ∈ W2, G ≠ K2",
        conclusion: "items (i)–(ix): disjoint maximum sets avoiding v, |V| ≥ 2α+1, maximum sets avoiding u,v, α ≤ μ and α+μ ≤ |V|−1, α(G−S) = α, ∂ monotone, regularizable with |B| < |N(B)|, |A| ≤ α(G[N(A)]), A matched into an independent set",
        kind: Kind::Proven,
        max_order: 12,
        check: w2_connected_properties,
    },
    Theorem {
        id: "cor.degree-bound",
        hypotheses: "G connected, G ∈ W2, S independent, v ∈ S",
        conclusion: "deg(v) ≤ |N(S)| − |S| + 1",
        kind: Kind::Proven,
        max_order: 14,
        check: degree_bound,
    },
    Theorem {
        id: "cor.differential-bound",
        hypotheses: "G ∈ W2",
        conclusion: "∂(G) ≥ |V| − 2α(G) ≥ Δ(G) − 1",
        kind: Kind::Proven,
        max_order: 24,
        check: differential_bound,
    },
    Theorem {
        id: "thm.shedding-epsilon",
        hypotheses: "v ∈ V(G)",
        conclusion: "v ∈ Shed(G) ⇔ ε_{G−v}(A) = ε_G(A) for every A ∈ Ind(G−v)",
        kind: Kind::Proven,
        max_order: 12,
        check: shedding_epsilon,
    },
    Theorem {
        id: "cor.shedding-wc",
        hypotheses: "G well-covered, v not isolated",
        conclusion: "v ∈ Shed(G) ⇔ G−v well-covered",
        kind: Kind::Proven,
        max_order: 64,
        check: shedding_wc,
    },
    Theorem {
        id: "cor.shedding-four-way",
        hypotheses: "G well-covered, v not isolated",
        conclusion: "G−v well-covered ⇔ |N(v)−N(S)| ≥ 1 for independent S of G−N[v] ⇔ no such S isolates v in G−N[S] ⇔ v shedding",
        kind: Kind::Proven,
        max_order: 12,
        check: shedding_four_way,
    },
    Theorem {
        id: "prop.simplicial-neighbors-shed",
        hypotheses: "v ∈ Simp(G)",
        conclusion: "N(v) ⊆ Shed(G)",
        kind: Kind::Proven,
        max_order: 64,
        check: simplicial_neighbors_shed,
    },
    Theorem {
        id: "prop.simplex-sufficiency",
        hypotheses: "every vertex lies in exactly one simplex, every simplex has two simplicial vertices",
        conclusion: "G ∈ W2",
        kind: Kind::Proven,
        max_order: 64,
        check: simplex_sufficiency,
    },
    Theorem {
        id: "thm.simplicial-wc",
        hypotheses: "none",
        conclusion: "G simplicial and well-covered ⇔ every vertex lies in exactly one simplex",
        kind: Kind::Proven,
        max_order: 64,
        check: simplicial_wc,
    },
    Theorem {
        id: "thm.w2-five-way",
        hypotheses: "G well-covered without isolated vertices",
        conclusion: "G ∈ W2 ⇔ ∂ monotone on Ind(G) ⇔ Shed(G) = V ⇔ no independent S leaves an isolated vertex in G−N[S] ⇔ G−N[v] ∈ W2 for all v",
        kind: Kind::Proven,
        max_order: 12,
        check: w2_five_way_check,
    },
    Theorem {
        id: "cor.order-extremal",
        hypotheses: "G connected, G ∈ W2",
        conclusion: "|V| = 2α ⇒ G ≅ K2; |V| = 2α+1 ⇒ G ≅ C3 or C5; bipartite ⇒ G ≅ K2",
        kind: Kind::Proven,
        max_order: 64,
        check: order_extremal,
    },
    Theorem {
        id: "thm.triangle-free-w2",
        hypotheses: "G triangle-free without isolated vertices",
        conclusion: "G ∈ W2 ⇔ G_ab well-covered with α(G_ab) = α(G)−1 for every edge ab",
        kind: Kind::Proven,
        max_order: 64,
        check: triangle_free_w2,
    },
    Theorem {
        id: "prop.locally-triangle-free",
        hypotheses: "G locally triangle-free, G ∈ W2, α(G) ≤ 2",
        conclusion: "α = 1 ⇒ G = K_n with n ≥ 2; α = 2 ⇒ G is the complement of C_n with n ≥ 4",
        kind: Kind::Proven,
        max_order: 64,
        check: locally_triangle_free,
    },
    Theorem {
        id: "prop.w2-alpha2-disconnected",
        hypotheses: "G disconnected, G ∈ W2, α(G) = 2",
        conclusion: "G = K_n ∪ K_m with n, m ≥ 2",
        kind: Kind::Proven,
        max_order: 64,
        check: w2_alpha2_disconnected,
    },
    Theorem {
        id: "rem.alpha-plus-mu-components",
        hypotheses: "G disconnected, G ∈ W2, α(G) + μ(G) = |V| − 1",
        conclusion: "all components but one are K2",
        kind: Kind::Proven,
        max_order: 64,
        check: alpha_plus_mu_components,
    },
    Theorem {
        id: "thm.wk-monotonicity",
        hypotheses: "G ∈ W_k (k ≤ 3 probed), A ⊆ B independent",
        conclusion: "|N(A)| − (k−1)|A| ≤ |N(B)| − (k−1)|B|",
        kind: Kind::Proven,
        max_order: 12,
        check: wk_monotonicity,
    },
    Theorem {
        id: "thm.w-chain",
        hypotheses: "none (k ≤ 4, generic check)",
        conclusion: "G ∈ W_k ⇒ G ∈ W_{k−1}",
        kind: Kind::Proven,
        max_order: 8,
        check: w_chain,
    },
    Theorem {
        id: "thm.staples-w2",
        hypotheses: "none",
        conclusion: "G ∈ W2 ⇔ α(G−v) = α(G) and G−v well-covered for every v",
        kind: Kind::Proven,
        max_order: 10,
        check: staples_w2,
    },
    Theorem {
        id: "lem.epsilon-basic",
        hypotheses: "A ∈ Ind(G)",
        conclusion: "|A| ≤ ε(A) ≤ α; ε antitone; ε_H(A) ≤ ε_G(A) for induced H; G well-covered ⇔ ε ≡ α",
        kind: Kind::Proven,
        max_order: 12,
        check: epsilon_basic,
    },
    Theorem {
        id: "thm.berge",
        hypotheses: "S ∈ Ind(G)",
        conclusion: "S maximum ⇔ every independent set disjoint from S can be matched into S",
        kind: Kind::Proven,
        max_order: 9,
        check: berge,
    },
    Theorem {
        id: "thm.girth-corona",
        hypotheses: "G connected; (i) girth ≥ 6, G ≇ C7, K1; (ii) girth ≥ 5",
        conclusion: "(i) well-covered ⇔ G = H∘K1; (ii) very well-covered ⇔ G = H∘K1",
        kind: Kind::Proven,
        max_order: 16,
        check: girth_corona,
    },
    Theorem {
        id: "thm.hartnell",
        hypotheses: "G connected without 4-cycles",
        conclusion: "G ∈ W2 ⇔ G ≅ K2, C5 or G = H∘K2",
        kind: Kind::Proven,
        max_order: 16,
        check: hartnell,
    },
    Theorem {
        id: "wk.reading-agreement",
        hypotheses: "none (k = 2, 3)",
        conclusion: "empty-allowed and nonempty-only readings of W_k agree",
        kind: Kind::Diagnostic,
        max_order: 8,
        check: reading_agreement,
    },
];

fn independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let _ = for_each_independent(g, &mut |s| {
        out.push(s);
        ControlFlow::<()>::Continue(())
    });
    out
}

fn non_isolated(g: &Graph) -> VertexSet {
    g.vertices() - g.isolated_vertices()
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, ok: impl Fn(&T) -> bool) -> Option<T> {
    items.into_iter().find(|x| !ok(x))
}

fn is_complete(g: &Graph) -> bool {
    g.edge_count() * 2 == g.order() * g.order().saturating_sub(1)
}

/// Connected and 2-regular.
fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && g.vertices().iter().all(|v| g.degree(v) == 2)
}

fn alpha_deletion(c: &Ctx) -> Outcome {
    if !c.well_covered {
        return Outcome::Inapplicable;
    }
    let all = c.g.vertices();
    let bad = first_failure(non_isolated(c.g), |&v| independence_number_within(c.g, all.without(v)) == c.alpha);
    Outcome::check(bad.is_none(), || json!({ "vertex": bad }))
}

fn w2_equivalence(c: &Ctx) -> Outcome {
    if c.n == 0 || !c.isolated_free {
        return Outcome::Inapplicable;
    }
    let conditions = w2_conditions(c.g);
    Outcome::check(conditions.agree(), || json!(conditions))
}

fn w2_minus_closed_neighborhood(c: &Ctx) -> Outcome {
    if !c.in_w2 {
        return Outcome::Inapplicable;
    }
    let g = c.g;
    let bad = first_failure(independent_sets(g).into_iter().filter(|s| s.len() < c.alpha), |&s| {
        is_in_w_staples(&g.induced_unchecked(g.vertices() - g.closed_neighborhood(s)).graph)
    });
    Outcome::check(bad.is_none(), || json!({ "set": bad }))
}

fn connected_w2_not_k2(c: &Ctx) -> bool {
    c.connected && c.in_w2 && c.n != 2
}

fn w2_no_leaf(c: &Ctx) -> Outcome {
    if !connected_w2_not_k2(c) {
        return Outcome::Inapplicable;
    }
    let leaf = c.g.vertices().iter().find(|&v| c.g.degree(v) == 1);
    Outcome::check(leaf.is_none(), || json!({ "leaf": leaf }))
}

fn w2_connected_properties(c: &Ctx) -> Outcome {
    if !connected_w2_not_k2(c) {
        return Outcome::Inapplicable;
    }
    let g = c.g;
    let all = g.vertices();
    let n = c.n;
    let fail = |item: &str, data: serde_json::Value| Outcome::Fails(json!({ "item": item, "data": data }));
    for v in all {
        let avoiding: Vec<VertexSet> = c.omega.iter().copied().filter(|s| !s.contains(v)).collect();
        if avoiding.is_empty() || disjoint_from_family(&avoiding, 2, n).is_none() {
            return fail("i", json!({ "vertex": v }));
        }
    }
    if n < 2 * c.alpha + 1 {
        return fail("ii", json!({ "n": n, "alpha": c.alpha }));
    }
    for u in all {
        for v in all {
            let pair = VertexSet::from([u, v]);
            if !c.omega.iter().any(|s| s.is_disjoint(pair)) {
                return fail("iii", json!({ "u": u, "v": v }));
            }
        }
    }
    let mu = maximum_matching_size(g);
    if !(c.alpha <= mu && c.alpha + mu < n) {
        return fail("iv", json!({ "alpha": c.alpha, "mu": mu, "n": n }));
    }
    // α(G − S) only drops as S grows, so maximal S suffice
    if let Some(s) = maximal_independent_sets(g)
        .into_iter()
        .find(|&s| independence_number_within(g, all - s) != c.alpha)
    {
        return fail("v", json!({ "set": s }));
    }
    if let Monotonicity::Violated { a, b } = check_wk_monotonicity(g, 2) {
        return fail("vi", json!({ "a": a, "b": b }));
    }
    if !is_regularizable(g) {
        return fail("vii", json!({ "regularizable": false }));
    }
    let ind = independent_sets(g);
    if let Some(b) = ind.iter().find(|b| !b.is_empty() && b.len() >= g.neighborhood(**b).len()) {
        return fail("vii", json!({ "set": b }));
    }
    if let Some(a) = ind.iter().find(|&&a| a.len() > independence_number_within(g, g.neighborhood(a))) {
        return fail("viii", json!({ "set": a }));
    }
    if let Some(a) = ind.iter().find(|&&a| !matched_into_independent(g, a)) {
        return fail("ix", json!({ "set": a }));
    }
    Outcome::Holds
}

fn degree_bound(c: &Ctx) -> Outcome {
    if !(c.connected && c.in_w2) {
        return Outcome::Inapplicable;
    }
    let g = c.g;
    let bad = first_failure(independent_sets(g), |&s| {
        let ns = g.neighborhood(s).len();
        s.iter().all(|v| g.degree(v) + s.len() <= ns + 1)
    });
    Outcome::check(bad.is_none(), || json!({ "set": bad }))
}

fn differential_bound(c: &Ctx) -> Outcome {
    if !c.in_w2 {
        return Outcome::Inapplicable;
    }
    let d = differential_of_graph(c.g).expect("within the differential cap");
    let mid = c.n as isize - 2 * c.alpha as isize;
    let low = c.g.max_degree() as isize - 1;
    Outcome::check(d >= mid && mid >= low, || json!({ "differential": d, "n_minus_2alpha": mid, "max_degree_minus_1": low }))
}

fn shedding_epsilon(c: &Ctx) -> Outcome {
    let g = c.g;
    let all = g.vertices();
    let ind = independent_sets(g);
    let shed = shedding_vertices(g);
    for v in all {
        let rest = all.without(v);
        let agree = ind
            .iter()
            .filter(|a| !a.contains(v))
            .all(|&a| epsilon_within(g, rest, a) == epsilon_within(g, all, a));
        if agree != shed.contains(v) {
            return Outcome::Fails(json!({ "vertex": v, "shedding": shed.contains(v) }));
        }
    }
    Outcome::Holds
}

fn shedding_wc(c: &Ctx) -> Outcome {
    if !c.well_covered || non_isolated(c.g).is_empty() {
        return Outcome::Inapplicable;
    }
    let g = c.g;
    let shed = shedding_vertices(g);
    let bad = first_failure(non_isolated(g), |&v| shed.contains(v) == is_well_covered_within(g, g.vertices().without(v)));
    Outcome::check(bad.is_none(), || json!({ "vertex": bad }))
}

fn shedding_four_way(c: &Ctx) -> Outcome {
    if !c.well_covered || non_isolated(c.g).is_empty() {
        return Outcome::Inapplicable;
    }
    for v in non_isolated(c.g) {
        let forms = shedding_conditions(c.g, v);
        if forms.iter().any(|&x| x != forms[0]) {
            return Outcome::Fails(json!({ "vertex": v, "forms": forms }));
        }
    }
    Outcome::Holds
}

fn simplicial_neighbors_shed(c: &Ctx) -> Outcome {
    let simp = simplicial_vertices(c.g);
    if simp.is_empty() {
        return Outcome::Inapplicable;
    }
    let shed = shedding_vertices(c.g);
    let bad = first_failure(simp, |&v| c.g.neighbors(v).is_subset(shed));
    Outcome::check(bad.is_none(), || json!({ "vertex": bad, "shed": shed }))
}

/// Number of simplexes containing each vertex.
fn simplex_multiplicity(g: &Graph, simplexes: &[VertexSet]) -> Vec<usize> {
    (0..g.order()).map(|v| simplexes.iter().filter(|s| s.contains(v)).count()).collect()
}

fn simplex_sufficiency(c: &Ctx) -> Outcome {
    let g = c.g;
    let sx = simplexes(g);
    let simp = simplicial_vertices(g);
    let exactly_one = simplex_multiplicity(g, &sx).iter().all(|&m| m == 1);
    if !(exactly_one && sx.iter().all(|s| (*s & simp).len() >= 2)) {
        return Outcome::Inapplicable;
    }
    Outcome::check(c.in_w2, || json!({ "simplexes": sx }))
}

fn simplicial_wc(c: &Ctx) -> Outcome {
    let sx = simplexes(c.g);
    let exactly_one = simplex_multiplicity(c.g, &sx).iter().all(|&m| m == 1);
    let lhs = is_simplicial_graph(c.g) && c.well_covered;
    Outcome::check(lhs == exactly_one, || json!({ "simplicial_and_well_covered": lhs, "simplexes": sx }))
}

fn w2_five_way_check(c: &Ctx) -> Outcome {
    if !(c.well_covered && c.isolated_free) {
        return Outcome::Inapplicable;
    }
    let forms = w2_five_way(c.g);
    Outcome::check(forms.iter().all(|&x| x == forms[0]), || json!({ "forms": forms }))
}

fn order_extremal(c: &Ctx) -> Outcome {
    if !(c.connected && c.in_w2) {
        return Outcome::Inapplicable;
    }
    let g = c.g;
    let k2 = c.n == 2;
    let c3_or_c5 = is_cycle(g) && (c.n == 3 || c.n == 5);
    let ok = (c.n != 2 * c.alpha || k2)
        && (c.n != 2 * c.alpha + 1 || c3_or_c5)
        && (g.is_bipartite().is_none() || k2);
    Outcome::check(ok, || json!({ "n": c.n, "alpha": c.alpha, "bipartite": g.is_bipartite().is_some() }))
}

fn triangle_free_w2(c: &Ctx) -> Outcome {
    if c.n == 0 || !c.isolated_free || !c.g.is_triangle_free() {
        return Outcome::Inapplicable;
    }
    let residue = edge_residue_condition(c.g);
    Outcome::check(residue == c.in_w2, || json!({ "in_w2": c.in_w2, "edge_condition": residue }))
}

fn locally_triangle_free(c: &Ctx) -> Outcome {
    if !(c.n > 0 && c.in_w2 && c.alpha <= 2 && is_locally_triangle_free(c.g)) {
        return Outcome::Inapplicable;
    }
    let ok = match c.alpha {
        1 => is_complete(c.g) && c.n >= 2,
        _ => c.n >= 4 && is_cycle(&c.g.complement()),
    };
    Outcome::check(ok, || json!({ "alpha": c.alpha }))
}

fn w2_alpha2_disconnected(c: &Ctx) -> Outcome {
    if c.connected || !c.in_w2 || c.alpha != 2 {
        return Outcome::Inapplicable;
    }
    let comps = c.g.components();
    let ok = comps.len() == 2
        && comps.iter().all(|&k| k.len() >= 2 && is_complete(&c.g.induced_unchecked(k).graph));
    Outcome::check(ok, || json!({ "components": comps }))
}

fn alpha_plus_mu_components(c: &Ctx) -> Outcome {
    if c.connected || !c.in_w2 || c.alpha + maximum_matching_size(c.g) + 1 != c.n {
        return Outcome::Inapplicable;
    }
    let comps = c.g.components();
    let others = comps.iter().filter(|k| k.len() != 2).count();
    Outcome::check(others <= 1, || json!({ "components": comps }))
}

fn wk_monotonicity(c: &Ctx) -> Outcome {
    if !c.well_covered {
        return Outcome::Inapplicable;
    }
    for k in 1..=K_PROBE {
        if !is_in_w(c.g, k).expect("k >= 1") {
            break;
        }
        if let Monotonicity::Violated { a, b } = check_wk_monotonicity(c.g, k) {
            return Outcome::Fails(json!({ "k": k, "a": a, "b": b }));
        }
    }
    Outcome::Holds
}

fn w_chain(c: &Ctx) -> Outcome {
    let levels: Vec<bool> = (1..=4)
        .map(|k| is_in_w_generic(c.g, k, WReading::EmptyAllowed).expect("k >= 1"))
        .collect();
    let ok = levels.windows(2).all(|w| w[0] || !w[1]);
    Outcome::check(ok, || json!({ "levels": levels }))
}

fn staples_w2(c: &Ctx) -> Outcome {
    let generic = is_in_w_generic(c.g, 2, WReading::EmptyAllowed).expect("k = 2");
    Outcome::check(generic == c.in_w2, || json!({ "generic": generic, "criterion": c.in_w2 }))
}

fn epsilon_basic(c: &Ctx) -> Outcome {
    let g = c.g;
    let all = g.vertices();
    let ind = independent_sets(g);
    let mut everywhere_alpha = true;
    for &a in &ind {
        let e = epsilon_within(g, all, a);
        everywhere_alpha &= e == c.alpha;
        if !(a.len() <= e && e <= c.alpha) {
            return Outcome::Fails(json!({ "part": "bounds", "set": a, "epsilon": e }));
        }
        for v in all - g.closed_neighborhood(a) {
            if epsilon_within(g, all, a.with(v)) > e {
                return Outcome::Fails(json!({ "part": "antitone", "set": a, "added": v }));
            }
        }
        for u in all - a {
            if epsilon_within(g, all.without(u), a) > e {
                return Outcome::Fails(json!({ "part": "induced", "set": a, "deleted": u }));
            }
        }
    }
    Outcome::check(everywhere_alpha == c.well_covered, || json!({ "part": "well-covered", "epsilon_constant": everywhere_alpha }))
}

fn berge(c: &Ctx) -> Outcome {
    let g = c.g;
    let ind = independent_sets(g);
    for &s in &ind {
        let matched = ind
            .iter()
            .filter(|a| a.is_disjoint(s))
            .all(|&a| can_match_into(g, a, s).expect("disjoint sets"));
        if matched != (s.len() == c.alpha) {
            return Outcome::Fails(json!({ "set": s, "maximum": s.len() == c.alpha }));
        }
    }
    Outcome::Holds
}

fn girth_corona(c: &Ctx) -> Outcome {
    let girth = c.g.girth();
    if !c.connected || c.n == 0 || !girth.at_least(5) {
        return Outcome::Inapplicable;
    }
    let corona = clique_corona_base(c.g, 1).expect("within the certificate cap").is_some();
    let vwc = is_very_well_covered(c.g);
    if vwc != corona {
        return Outcome::Fails(json!({ "part": "ii", "very_well_covered": vwc, "corona": corona }));
    }
    let c7 = c.n == 7 && is_cycle(c.g);
    if girth.at_least(6) && !c7 && c.n != 1 && c.well_covered != corona {
        return Outcome::Fails(json!({ "part": "i", "well_covered": c.well_covered, "corona": corona }));
    }
    Outcome::Holds
}

fn hartnell(c: &Ctx) -> Outcome {
    if !c.connected || c.n == 0 || c.g.has_four_cycle() {
        return Outcome::Inapplicable;
    }
    let named = c.n == 2 || (c.n == 5 && is_cycle(c.g));
    let corona = clique_corona_base(c.g, 2).expect("within the certificate cap").is_some();
    Outcome::check(c.in_w2 == (named || corona), || json!({ "in_w2": c.in_w2, "named": named, "corona": corona }))
}

fn reading_agreement(c: &Ctx) -> Outcome {
    for k in 2..=K_PROBE {
        let empty = is_in_w_generic(c.g, k, WReading::EmptyAllowed).expect("k >= 1");
        let nonempty = is_in_w_generic(c.g, k, WReading::NonemptyOnly).expect("k >= 1");
        if empty != nonempty {
            return Outcome::Fails(json!({ "k": k, "empty_allowed": empty, "nonempty_only": nonempty }));
        }
    }
    Outcome::Holds
}
