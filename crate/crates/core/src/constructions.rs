//! Corona, join and concatenation.
//!
//! Each operator has a plain form returning the graph and a `_labelled` form
//! that also records where every vertex came from. The labelling conventions
//! are fixed:
//!
//! * corona: base vertices first, then the block of `H_v` for each base `v`
//!   in order; part 0 is the base and part `v + 1` is `H_v`.
//! * join: the blocks of the operands in order; part `i` is operand `i`.
//! * concatenation `G(H, v)`: vertex `i < |V(G)|` is base vertex `i`, fused
//!   with `v` of copy `i`; then the remaining vertices of copy 0, copy 1, …
//!   in the order of `H`. Part `i` is copy `i`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::catalog::certificate;
use crate::graph::{Graph, MAX_ORDER};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoronaFamily {
    base: Graph,
    attachments: Vec<Graph>,
}

impl CoronaFamily {
    /// One nonempty attachment per base vertex.
    pub fn new(base: Graph, attachments: Vec<Graph>) -> Result<Self> {
        if attachments.len() != base.order() {
            return Err(Error::arg(format!(
                "{} attachments for {} base vertices",
                attachments.len(),
                base.order()
            )));
        }
        if attachments.iter().any(Graph::is_null) {
            return Err(Error::arg("corona attachments must have at least one vertex"));
        }
        Ok(CoronaFamily { base, attachments })
    }

    pub fn uniform(base: Graph, h: Graph) -> Result<Self> {
        let attachments = vec![h; base.order()];
        CoronaFamily::new(base, attachments)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn attachments(&self) -> &[Graph] {
        &self.attachments
    }
}

/// Source of a constructed vertex: operand block and its vertex there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Origin {
    pub part: usize,
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    /// `origin[u]` for each vertex `u` of `graph`.
    pub origin: Vec<Origin>,
}

fn check_total(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::unsupported(format!(
            "construction has {n} vertices, above the limit of {MAX_ORDER}"
        )))
    } else {
        Ok(())
    }
}

pub fn corona(fam: &CoronaFamily) -> Result<Graph> {
    Ok(corona_labelled(fam)?.graph)
}

pub fn corona_labelled(fam: &CoronaFamily) -> Result<Construction> {
    let n = fam.base.order();
    let total = n + fam.attachments.iter().map(Graph::order).sum::<usize>();
    check_total(total)?;
    let mut edges: Vec<(usize, usize)> = fam.base.edges().collect();
    let mut origin: Vec<Origin> = (0..n).map(|v| Origin { part: 0, vertex: v }).collect();
    let mut offset = n;
    for (v, h) in fam.attachments.iter().enumerate() {
        edges.extend(h.edges().map(|(a, b)| (a + offset, b + offset)));
        edges.extend((0..h.order()).map(|a| (v, a + offset)));
        origin.extend((0..h.order()).map(|a| Origin { part: v + 1, vertex: a }));
        offset += h.order();
    }
    Ok(Construction {
        graph: Graph::from_edges(total, &edges)?,
        origin,
    })
}

/// `G ∘ H`: every base vertex gets its own copy of `h`.
pub fn corona_uniform(g: &Graph, h: &Graph) -> Result<Graph> {
    corona(&CoronaFamily::uniform(g.clone(), h.clone())?)
}

/// Zykov sum `G_1 + ⋯ + G_p`.
pub fn join(gs: &[Graph]) -> Result<Graph> {
    Ok(join_labelled(gs)?.graph)
}

pub fn join_labelled(gs: &[Graph]) -> Result<Construction> {
    if gs.is_empty() {
        return Err(Error::arg("join needs at least one graph"));
    }
    let total = gs.iter().map(Graph::order).sum::<usize>();
    check_total(total)?;
    let mut edges = Vec::new();
    let mut origin = Vec::with_capacity(total);
    let mut offset = 0;
    for (i, g) in gs.iter().enumerate() {
        edges.extend(g.edges().map(|(a, b)| (a + offset, b + offset)));
        for a in 0..g.order() {
            // every earlier vertex is in another block
            edges.extend((0..offset).map(|u| (u, a + offset)));
            origin.push(Origin { part: i, vertex: a });
        }
        offset += g.order();
    }
    Ok(Construction {
        graph: Graph::from_edges(total, &edges)?,
        origin,
    })
}

/// `G(H, v)`: each base vertex identified with `v` in its own copy of `h`.
/// With `|V(H)| = 1` this is `G` itself.
pub fn concatenate(g: &Graph, h: &Graph, v: usize) -> Result<Graph> {
    Ok(concatenate_labelled(g, h, v)?.graph)
}

pub fn concatenate_labelled(g: &Graph, h: &Graph, v: usize) -> Result<Construction> {
    h.check_vertex(v)?;
    let n = g.order();
    let m = h.order();
    let total = n * m;
    check_total(total)?;
    let mut origin: Vec<Origin> = (0..n).map(|i| Origin { part: i, vertex: v }).collect();
    for i in 0..n {
        origin.extend((0..m).filter(|&a| a != v).map(|a| Origin { part: i, vertex: a }));
    }
    // position of vertex a of copy i
    let place = |i: usize, a: usize| -> usize {
        if a == v {
            i
        } else {
            n + i * (m - 1) + if a < v { a } else { a - 1 }
        }
    };
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..n {
        edges.extend(h.edges().map(|(a, b)| (place(i, a), place(i, b))));
    }
    Ok(Construction {
        graph: Graph::from_edges(total, &edges)?,
        origin,
    })
}

/// Base vertex set `B` such that `G ≅ G[B] ∘ K_p`, if `G` is such a corona.
///
/// Attachment vertices are exactly the simplicial vertices of degree `p`,
/// except in components that are themselves `K_{p+1}`, where one vertex is
/// taken as the base. The candidate is confirmed by an isomorphism check.
pub fn clique_corona_base(g: &Graph, p: usize) -> Result<Option<VertexSet>> {
    if p == 0 {
        return Err(Error::arg("corona attachments need at least one vertex"));
    }
    if !g.order().is_multiple_of(p + 1) {
        return Ok(None);
    }
    let mut base = VertexSet::EMPTY;
    for comp in g.components() {
        let clique = comp.iter().all(|v| (comp - g.closed_neighbors(v)).is_empty());
        if clique && comp.len() == p + 1 {
            base.insert(comp.first().expect("nonempty component"));
            continue;
        }
        for v in comp {
            let nv = g.neighbors(v);
            let simplicial = nv.iter().all(|u| (nv - g.closed_neighbors(u)).is_empty());
            if !(simplicial && nv.len() == p) {
                base.insert(v);
            }
        }
    }
    if base.len() * (p + 1) != g.order() {
        return Ok(None);
    }
    let h = g.induced(base)?.graph;
    let rebuilt = corona_uniform(&h, &crate::graph::generators::complete(p)?)?;
    Ok((certificate(&rebuilt)? == certificate(g)?).then_some(base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{is_in_w, is_one_well_covered, is_well_covered};
    use crate::graph::generators::*;
    use crate::independence::{has_k_disjoint_maximum_independent_sets, independence_number};

    fn k(n: usize) -> Graph {
        complete(n).unwrap()
    }

    #[test]
    fn corona_examples() {
        let g1 = corona(&CoronaFamily::new(path(2).unwrap(), vec![k(1), Graph::empty(2).unwrap()]).unwrap()).unwrap();
        assert_eq!(g1.order(), 5);
        assert!(!is_well_covered(&g1));
        let g3 = corona(&CoronaFamily::new(path(2).unwrap(), vec![k(2), k(3)]).unwrap()).unwrap();
        assert_eq!(g3.order(), 7);
        assert!(is_one_well_covered(&g3));
        let p3k1 = corona_uniform(&path(3).unwrap(), &k(1)).unwrap();
        assert!(has_k_disjoint_maximum_independent_sets(&p3k1, 2));
        assert!(CoronaFamily::new(path(2).unwrap(), vec![k(1)]).is_err());
        assert!(CoronaFamily::new(path(2).unwrap(), vec![k(1), Graph::empty(0).unwrap()]).is_err());
    }

    #[test]
    fn corona_labels() {
        let c = corona_labelled(&CoronaFamily::new(path(2).unwrap(), vec![k(1), k(2)]).unwrap()).unwrap();
        assert_eq!(c.origin[3], Origin { part: 2, vertex: 0 });
        assert!(c.graph.has_edge(1, 3) && c.graph.has_edge(1, 4) && c.graph.has_edge(3, 4));
        assert!(c.graph.has_edge(0, 2) && !c.graph.has_edge(0, 3));
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&[k(2), k(2)]).unwrap(), k(4));
        assert_eq!(join(&[Graph::empty(2).unwrap(), Graph::empty(3).unwrap()]).unwrap(), complete_bipartite(2, 3).unwrap());
        let c4c4 = join(&[cycle(4).unwrap(), cycle(4).unwrap()]).unwrap();
        assert!(is_well_covered(&c4c4) && !is_in_w(&c4c4, 2).unwrap());
        assert!(!is_well_covered(&join(&[cycle(4).unwrap(), k(2)]).unwrap()));
        assert!(join(&[]).is_err());
    }

    #[test]
    fn concatenation_examples() {
        let c4 = concatenate(&k(2), &cycle(4).unwrap(), 0).unwrap();
        assert_eq!(c4.order(), 8);
        assert_eq!(independence_number(&c4), 4);
        assert!(!is_well_covered(&c4));
        let c5 = concatenate(&k(2), &cycle(5).unwrap(), 0).unwrap();
        assert_eq!(c5.order(), 10);
        assert!(is_in_w(&c5, 1).unwrap() && !is_in_w(&c5, 2).unwrap());
        // fusing onto a clique vertex attaches the other p − 1 clique vertices
        for p in 2..=4 {
            for v in 0..p {
                let fused = concatenate(&path(3).unwrap(), &k(p), v).unwrap();
                assert_eq!(fused, corona_uniform(&path(3).unwrap(), &k(p - 1)).unwrap());
            }
        }
        assert_eq!(concatenate(&cycle(5).unwrap(), &k(1), 0).unwrap(), cycle(5).unwrap());
        assert!(concatenate(&k(2), &k(2), 2).is_err());
    }

    #[test]
    fn recognises_coronas() {
        let p4 = path(4).unwrap();
        assert_eq!(clique_corona_base(&p4, 1).unwrap(), Some(VertexSet::from([1, 2])));
        assert_eq!(clique_corona_base(&k(2), 1).unwrap(), Some(VertexSet::from([0])));
        assert_eq!(clique_corona_base(&k(3), 2).unwrap(), Some(VertexSet::from([0])));
        assert_eq!(clique_corona_base(&cycle(4).unwrap(), 1).unwrap(), None);
        assert_eq!(clique_corona_base(&path(6).unwrap(), 1).unwrap(), None);
        let c5k2 = corona_uniform(&cycle(5).unwrap(), &k(2)).unwrap();
        let relabelled = c5k2.relabel(&(0..15).map(|v| (v * 7) % 15).collect::<Vec<_>>()).unwrap();
        assert_eq!(clique_corona_base(&relabelled, 2).unwrap().map(|b| b.len()), Some(5));
        assert_eq!(clique_corona_base(&relabelled, 1).unwrap(), None);
    }

    #[test]
    fn too_large() {
        assert!(matches!(corona_uniform(&cycle(40).unwrap(), &k(1)), Err(Error::Unsupported(_))));
    }
}
