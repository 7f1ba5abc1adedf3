use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::independence::{
    differential_of_graph, independence_number, max_disjoint_maximum_independent_sets,
    maximum_matching_size,
};
use crate::vertex_set::VertexSet;

use super::{
    is_in_w, is_locally_triangle_free, is_one_well_covered, is_quasi_regularizable,
    is_regularizable, is_very_well_covered, is_well_covered, shedding_vertices,
    simplicial_vertices,
};

/// Every hierarchy verdict for one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    /// graph6 of the graph as given.
    pub graph_id: String,
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub girth: Girth,
    pub alpha: usize,
    pub mu: usize,
    pub delta_graph: isize,
    pub well_covered: bool,
    pub very_well_covered: bool,
    pub one_well_covered: bool,
    pub quasi_regularizable: bool,
    pub regularizable: bool,
    pub locally_triangle_free: bool,
    /// Largest `k ≤ k_max` with `G ∈ W_k`, or 0.
    pub w_level: usize,
    pub k_max: usize,
    pub shed: VertexSet,
    pub simp: VertexSet,
    /// Largest `k ≤ k_max` with `k` pairwise disjoint maximum independent sets.
    pub disjoint_mis_max: usize,
}

pub fn class_report(g: &Graph, k_max: usize) -> Result<ClassReport> {
    if k_max == 0 {
        return Err(Error::arg("k_max must be at least 1"));
    }
    let delta_graph = differential_of_graph(g)?;
    let well_covered = is_well_covered(g);
    let mut w_level = 0;
    if well_covered {
        w_level = 1;
        while w_level < k_max && is_in_w(g, w_level + 1)? {
            w_level += 1;
        }
    }
    Ok(ClassReport {
        graph_id: g.to_graph6(),
        n: g.order(),
        edges: g.edge_count(),
        connected: g.is_connected(),
        girth: g.girth(),
        alpha: independence_number(g),
        mu: maximum_matching_size(g),
        delta_graph,
        well_covered,
        very_well_covered: is_very_well_covered(g),
        one_well_covered: is_one_well_covered(g),
        quasi_regularizable: is_quasi_regularizable(g),
        regularizable: is_regularizable(g),
        locally_triangle_free: is_locally_triangle_free(g),
        w_level,
        k_max,
        shed: shedding_vertices(g),
        simp: simplicial_vertices(g),
        disjoint_mis_max: max_disjoint_maximum_independent_sets(g, k_max),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::testing::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn named_reports() {
        let c5 = class_report(&cycle(5).unwrap(), 3).unwrap();
        assert_eq!(c5.w_level, 2);
        assert_eq!(c5.shed, VertexSet::full(5));
        assert_eq!(c5.simp, VertexSet::EMPTY);
        assert_eq!(c5.disjoint_mis_max, 2);
        let k2 = class_report(&complete(2).unwrap(), 3).unwrap();
        assert!(k2.w_level >= 2 && k2.very_well_covered);
        let p6 = class_report(&path(6).unwrap(), 3).unwrap();
        assert!(!p6.well_covered);
        assert_eq!(p6.w_level, 0);
        let c7 = class_report(&cycle(7).unwrap(), 3).unwrap();
        assert_eq!((c7.w_level, c7.shed), (1, VertexSet::EMPTY));
        assert!(class_report(&cycle(5).unwrap(), 0).is_err());
    }

    #[test]
    fn serializes_sets_as_arrays() {
        let r = class_report(&path(4).unwrap(), 2).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["shed"], serde_json::json!([1, 2]));
        assert_eq!(v["girth"], serde_json::json!("infinite"));
    }

    proptest! {
        #[test]
        fn report_invariants(g in arb_graph(8)) {
            let r = class_report(&g, 3).unwrap();
            prop_assert!(!r.one_well_covered || r.well_covered);
            if r.w_level >= 2 && r.n > 0 {
                prop_assert!(r.one_well_covered && !g.has_isolated_vertex());
            }
            prop_assert_eq!(r.w_level >= 1, r.well_covered);
            prop_assert!(r.w_level <= r.disjoint_mis_max || r.w_level == 0);
        }
    }
}
