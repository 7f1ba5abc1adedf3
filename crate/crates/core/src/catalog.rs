//! Exhaustive catalogs of graphs up to isomorphism.
//!
//! Graphs on `n` vertices are generated by adding a vertex to every graph on
//! `n − 1` vertices in every possible way and keeping one representative per
//! isomorphism class. Classes are told apart by [`certificate`], an
//! individualisation-refinement canonical code that is much faster than
//! [`crate::graph::canonical_form`] on the millions of candidates involved.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Order cap of [`all_graphs`] and [`connected_graphs`].
pub const CATALOG_MAX_ORDER: usize = 9;

/// Order cap of [`connected_graphs_where`], whose filter keeps levels small.
pub const FILTERED_MAX_ORDER: usize = 12;

/// Largest order accepted by [`certificate`].
pub const CERTIFICATE_MAX_ORDER: usize = 16;

/// One representative of every isomorphism class on `n` vertices.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    check(n, CATALOG_MAX_ORDER)?;
    Ok(levels(n, false, &|_| true).pop().unwrap_or_default())
}

/// Connected graphs on `n` vertices up to isomorphism (`n ≥ 1`).
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    check(n, CATALOG_MAX_ORDER)?;
    Ok(levels(n, true, &|_| true).pop().unwrap_or_default())
}

/// Connected graphs on orders `1..=max_n`, indexed by `order − 1`.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    check(max_n, CATALOG_MAX_ORDER)?;
    Ok(levels(max_n, true, &|_| true))
}

/// All graphs on orders `0..=max_n`, indexed by order.
pub fn all_graphs_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    check(max_n, CATALOG_MAX_ORDER)?;
    let mut out = vec![vec![Graph::empty(0).expect("null graph")]];
    out.extend(levels(max_n, false, &|_| true));
    Ok(out)
}

/// Connected graphs on `n` vertices satisfying `keep`, which must be
/// hereditary: closed under taking induced subgraphs (girth bounds,
/// triangle-freeness and C4-freeness all are). Every connected graph has a
/// vertex whose deletion leaves it connected, so filtering each level loses
/// nothing.
pub fn connected_graphs_where(n: usize, keep: impl Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
    check(n, FILTERED_MAX_ORDER)?;
    Ok(levels(n, true, &keep).pop().unwrap_or_default())
}

fn check(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::unsupported(format!(
            "exhaustive catalog limited to {cap} vertices (got {n})"
        )));
    }
    Ok(())
}

fn levels(max_n: usize, connected: bool, keep: &dyn Fn(&Graph) -> bool) -> Vec<Vec<Graph>> {
    let mut out: Vec<Vec<Graph>> = Vec::new();
    if max_n == 0 {
        return out;
    }
    let k1 = Graph::empty(1).expect("K1");
    out.push(if keep(&k1) { vec![k1] } else { vec![] });
    for n in 2..=max_n {
        let prev = out.last().expect("previous level");
        let mut seen = HashSet::new();
        let mut level = Vec::new();
        let mut adj = [0u64; CERTIFICATE_MAX_ORDER];
        for g in prev {
            for (v, s) in g.adjacency().iter().enumerate() {
                adj[v] = s.bits();
            }
            let first = if connected { 1 } else { 0 };
            for nb in first..(1u64 << (n - 1)) {
                for (v, a) in adj.iter_mut().enumerate().take(n - 1) {
                    *a = g.neighbors(v).bits() | ((nb >> v) & 1) << (n - 1);
                }
                adj[n - 1] = nb;
                let cert = certificate_bits(&adj[..n]);
                if seen.contains(&cert) {
                    continue;
                }
                let h = Graph::from_adjacency_unchecked(
                    adj[..n].iter().map(|&b| VertexSet::from_bits(b)).collect(),
                );
                seen.insert(cert);
                if keep(&h) {
                    level.push(h);
                }
            }
        }
        out.push(level);
    }
    out
}

/// Isomorphism certificate: equal exactly for isomorphic graphs of equal
/// order. Orders above [`CERTIFICATE_MAX_ORDER`] are unsupported.
pub fn certificate(g: &Graph) -> Result<u128> {
    check(g.order(), CERTIFICATE_MAX_ORDER)?;
    let adj: Vec<u64> = g.adjacency().iter().map(|s| s.bits()).collect();
    Ok(certificate_bits(&adj))
}

/// Ordered partition of the vertex set, one bitmask per cell.
#[derive(Clone, Copy)]
struct Partition {
    cells: [u64; CERTIFICATE_MAX_ORDER],
    len: usize,
}

fn certificate_bits(adj: &[u64]) -> u128 {
    let n = adj.len();
    if n <= 1 {
        return 0;
    }
    // initial cells by degree
    let mut p = Partition {
        cells: [0; CERTIFICATE_MAX_ORDER],
        len: 0,
    };
    for d in 0..n as u32 {
        let cell = (0..n)
            .filter(|&v| adj[v].count_ones() == d)
            .fold(0u64, |m, v| m | 1 << v);
        if cell != 0 {
            p.cells[p.len] = cell;
            p.len += 1;
        }
    }
    refine(adj, &mut p);
    let mut best = u128::MAX;
    search(adj, p, &mut best);
    best
}

/// Splits cells by neighbour counts into earlier cells until the partition is
/// equitable. Sub-cells are ordered by their count vectors, so the result
/// depends only on the graph and the input partition.
fn refine(adj: &[u64], p: &mut Partition) {
    let mut i = 0;
    while i < p.len {
        let cell = p.cells[i];
        if cell.count_ones() == 1 {
            i += 1;
            continue;
        }
        let mut keyed = [(0u64, 0usize); CERTIFICATE_MAX_ORDER];
        let mut m = 0;
        let mut c = cell;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            let mut key = 0u64;
            for k in 0..p.len {
                key = (key << 4) | u64::from((adj[v] & p.cells[k]).count_ones());
            }
            keyed[m] = (key, v);
            m += 1;
        }
        let keyed = &mut keyed[..m];
        keyed.sort_unstable();
        if keyed[0].0 == keyed[m - 1].0 {
            i += 1;
            continue;
        }
        let mut parts = [0u64; CERTIFICATE_MAX_ORDER];
        let mut np = 0;
        let mut j = 0;
        while j < m {
            let key = keyed[j].0;
            let mut mask = 0u64;
            while j < m && keyed[j].0 == key {
                mask |= 1 << keyed[j].1;
                j += 1;
            }
            parts[np] = mask;
            np += 1;
        }
        // replace cell i by the parts, shifting the tail right
        let tail = p.len - i - 1;
        p.cells.copy_within(i + 1..i + 1 + tail, i + np);
        p.cells[i..i + np].copy_from_slice(&parts[..np]);
        p.len += np - 1;
        // a split can unbalance any cell, so start again
        i = 0;
    }
}

fn search(adj: &[u64], p: Partition, best: &mut u128) {
    let n = adj.len();
    let Some(target) = (0..p.len).find(|&i| p.cells[i].count_ones() > 1) else {
        let mut order = [0usize; CERTIFICATE_MAX_ORDER];
        for (o, cell) in order.iter_mut().zip(&p.cells[..n]) {
            *o = cell.trailing_zeros() as usize;
        }
        let mut code = 0u128;
        for j in 1..n {
            let row = adj[order[j]];
            for &o in &order[..j] {
                code = (code << 1) | u128::from((row >> o) & 1);
            }
        }
        *best = (*best).min(code);
        return;
    };
    let cell = p.cells[target];
    let mut tried = 0u64;
    let mut c = cell;
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        let twin = {
            let mut t = tried;
            let mut found = false;
            while t != 0 {
                let u = t.trailing_zeros() as usize;
                t &= t - 1;
                if adj[u] & !(1 << v) == adj[v] & !(1 << u) {
                    found = true;
                    break;
                }
            }
            found
        };
        if twin {
            continue;
        }
        tried |= 1 << v;
        let mut q = p;
        q.cells.copy_within(target + 1..p.len, target + 2);
        q.cells[target] = 1 << v;
        q.cells[target + 1] = cell & !(1 << v);
        q.len += 1;
        refine(adj, &mut q);
        search(adj, q, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;
    use crate::graph::generators::*;
    use crate::testing::{all_labelled, arb_graph};
    use proptest::prelude::*;

    // OEIS A000088 and A001349
    const ALL: [usize; 8] = [1, 2, 4, 11, 34, 156, 1044, 12346];
    const CONNECTED: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

    #[test]
    fn level_counts() {
        let all = all_graphs_up_to(8).unwrap();
        for n in 1..=8 {
            assert_eq!(all[n].len(), ALL[n - 1], "all graphs on {n}");
        }
        let conn = connected_graphs_up_to(8).unwrap();
        for n in 1..=8 {
            assert_eq!(conn[n - 1].len(), CONNECTED[n - 1], "connected graphs on {n}");
            assert!(conn[n - 1].iter().all(Graph::is_connected));
        }
    }

    #[test]
    fn certificate_separates_classes_like_canonical_form() {
        for g_list in all_graphs_up_to(7).unwrap() {
            let mut keys = HashSet::new();
            for g in &g_list {
                assert!(keys.insert(canonical_form(g).unwrap()));
            }
        }
        for n in 0..=5 {
            let labelled = all_labelled(n);
            let mut by_cert = std::collections::HashMap::new();
            for g in &labelled {
                let key = canonical_form(g).unwrap();
                let cert = certificate(g).unwrap();
                let prev = by_cert.entry(cert).or_insert_with(|| key.clone());
                assert_eq!(*prev, key);
            }
            let classes = labelled.iter().map(|g| canonical_form(g).unwrap()).collect::<HashSet<_>>();
            assert_eq!(by_cert.len(), classes.len());
        }
    }

    #[test]
    fn filtered_levels() {
        // connected triangle-free graphs, OEIS A024607
        let counts: Vec<usize> = (1..=7)
            .map(|n| connected_graphs_where(n, Graph::is_triangle_free).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 6, 19, 59]);
        let trees: Vec<usize> = (1..=9)
            .map(|n| connected_graphs_where(n, Graph::is_forest).unwrap().len())
            .collect();
        // OEIS A000055
        assert_eq!(trees, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
        assert!(connected_graphs(10).is_err());
        assert!(connected_graphs_where(13, |_| true).is_err());
    }

    #[test]
    fn symmetric_examples() {
        let c9 = cycle(9).unwrap();
        let perm: Vec<usize> = (0..9).map(|v| (v * 2) % 9).collect();
        assert_eq!(certificate(&c9).unwrap(), certificate(&c9.relabel(&perm).unwrap()).unwrap());
        let k33 = complete_bipartite(3, 3).unwrap();
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_ne!(certificate(&k33).unwrap(), certificate(&prism).unwrap());
    }

    proptest! {
        #[test]
        fn invariant_under_relabelling(g in arb_graph(14), seed in any::<u64>()) {
            let n = g.order();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.relabel(&perm).unwrap();
            prop_assert_eq!(certificate(&g).unwrap(), certificate(&h).unwrap());
        }
    }
}
