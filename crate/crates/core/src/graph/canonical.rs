//! Brute-force canonical form: the lexicographically least graph6 string over
//! all vertex orderings.
//!
//! The search places vertices one position at a time. Placing a vertex at
//! position `j` fixes the next `j` bits of the graph6 bit string, so only
//! candidates producing the least column survive, and a branch is cut as soon
//! as its prefix exceeds the best complete string found so far. Two unplaced
//! vertices that are twins give isomorphic subtrees, so only one is explored.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

use super::graph6::encode;
use super::Graph;

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_MAX_ORDER: usize = 10;

pub fn canonical_form(g: &Graph) -> Result<String> {
    let perm = canonical_order(g)?;
    Ok(encode(g.order(), |i, j| g.has_edge(perm[i], perm[j])))
}

/// Ordering `perm` (new position → old vertex) realising [`canonical_form`].
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    if n > CANONICAL_MAX_ORDER {
        return Err(Error::unsupported(format!(
            "canonical form is limited to {CANONICAL_MAX_ORDER} vertices (got {n}); \
             deduplicate larger catalogs before loading them"
        )));
    }
    let mut search = Search {
        g,
        n,
        perm: Vec::with_capacity(n),
        best_perm: Vec::new(),
        best_prefix: [u64::MAX; CANONICAL_MAX_ORDER + 1],
    };
    search.run(g.vertices(), 0);
    Ok(search.best_perm)
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    perm: Vec<usize>,
    best_perm: Vec<usize>,
    // prefix code of the best ordering after each depth
    best_prefix: [u64; CANONICAL_MAX_ORDER + 1],
}

impl Search<'_> {
    fn column(&self, c: usize) -> u64 {
        let mut col = 0u64;
        for &p in &self.perm {
            col = (col << 1) | u64::from(self.g.has_edge(p, c));
        }
        col
    }

    fn run(&mut self, rest: VertexSet, prefix: u64) {
        let depth = self.perm.len();
        if depth == self.n {
            if prefix < self.best_prefix[depth] || self.best_perm.is_empty() {
                self.best_perm = self.perm.clone();
                let mut code = prefix;
                for d in (0..=depth).rev() {
                    self.best_prefix[d] = code;
                    if d > 0 {
                        code >>= d - 1;
                    }
                }
            }
            return;
        }
        let mut min_col = u64::MAX;
        let mut cands = VertexSet::EMPTY;
        for c in rest {
            let col = self.column(c);
            if col < min_col {
                min_col = col;
                cands = VertexSet::singleton(c);
            } else if col == min_col {
                cands.insert(c);
            }
        }
        let next = (prefix << depth) | min_col;
        if next > self.best_prefix[depth + 1] {
            return;
        }
        let mut kept = VertexSet::EMPTY;
        for c in cands {
            let twin = kept.iter().any(|k| {
                self.g.neighbors(k).without(c) == self.g.neighbors(c).without(k)
            });
            if twin {
                continue;
            }
            kept.insert(c);
            // the bound may have tightened inside a sibling
            if next > self.best_prefix[depth + 1] {
                return;
            }
            self.perm.push(c);
            self.run(rest.without(c), next);
            self.perm.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::testing::{all_labelled, arb_graph};
    use proptest::prelude::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_canonical(g: &Graph) -> String {
        permutations(g.order())
            .into_iter()
            .map(|p| encode(g.order(), |i, j| g.has_edge(p[i], p[j])))
            .min()
            .unwrap()
    }

    #[test]
    fn p3_labellings_share_a_key() {
        let p3 = path(3).unwrap();
        let key = canonical_form(&p3).unwrap();
        for perm in permutations(3) {
            assert_eq!(canonical_form(&p3.relabel(&perm).unwrap()).unwrap(), key);
        }
        assert_ne!(key, canonical_form(&complete(3).unwrap()).unwrap());
    }

    #[test]
    fn exhaustive_against_permutation_minimum() {
        for n in 0..=5 {
            for g in all_labelled(n) {
                assert_eq!(canonical_form(&g).unwrap(), brute_canonical(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn order_cap() {
        assert!(canonical_form(&cycle(10).unwrap()).is_ok());
        assert!(matches!(
            canonical_form(&cycle(11).unwrap()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn canonical_order_realises_the_form() {
        let g = disjoint_union(&[cycle(5).unwrap(), path(3).unwrap()]).unwrap();
        let perm = canonical_order(&g).unwrap();
        let mut inverse = vec![0; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let relabelled = g.relabel(&inverse).unwrap();
        assert_eq!(relabelled.to_graph6(), canonical_form(&g).unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn matches_brute_force(g in arb_graph(7)) {
            prop_assert_eq!(canonical_form(&g).unwrap(), brute_canonical(&g));
        }

        #[test]
        fn invariant_under_relabelling(g in arb_graph(10), seed in any::<u64>()) {
            let n = g.order();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.relabel(&perm).unwrap();
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        }
    }
}
