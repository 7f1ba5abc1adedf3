//! Membership in `W_k`.
//!
//! `G ∈ W_k` when every `k` pairwise disjoint independent sets extend to `k`
//! pairwise disjoint maximum independent sets. Shrinking one of the sets keeps
//! an extension valid, so only *family-maximal* families need checking: those
//! where no vertex can join any of the sets. The search enumerates these as
//! unordered families (sets are opened in order of their smallest vertex) and
//! tries to extend each by backtracking over `Ω(G)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{
    disjoint_from_family, independence_number_within, maximum_independent_sets,
};
use crate::vertex_set::VertexSet;

use super::{is_well_covered, is_well_covered_within};

/// Whether the `k` sets of the definition may be empty.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WReading {
    /// Empty sets are admitted; `G ∈ W_k` then forces `k` disjoint members of
    /// `Ω(G)` whenever `V(G) ≠ ∅`.
    #[default]
    EmptyAllowed,
    /// All `k` sets are nonempty; graphs with fewer than `k` vertices are
    /// vacuously members.
    NonemptyOnly,
}

/// `G ∈ W_k` under the default reading.
///
/// `k = 1` is well-coveredness and `k = 2` uses the criterion
/// `α(G − v) = α(G)` and `G − v` well-covered for every `v`. Larger `k` first
/// requires `W_2` and then runs the generic search.
pub fn is_in_w(g: &Graph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::arg("W_k needs k >= 1"));
    }
    Ok(match k {
        _ if g.is_null() => true,
        1 => is_well_covered(g),
        2 => is_in_w_staples(g),
        _ => is_in_w_staples(g) && w_extension_failure(g, k, WReading::EmptyAllowed)?.is_none(),
    })
}

/// `∀v: α(G − v) = α(G)` and `G − v` is well-covered.
pub fn is_in_w_staples(g: &Graph) -> bool {
    let all = g.vertices();
    let alpha = independence_number_within(g, all);
    all.iter().all(|v| {
        let rest = all.without(v);
        independence_number_within(g, rest) == alpha && is_well_covered_within(g, rest)
    })
}

/// Reference check by family enumeration, under either reading.
pub fn is_in_w_generic(g: &Graph, k: usize, reading: WReading) -> Result<bool> {
    Ok(w_extension_failure(g, k, reading)?.is_none())
}

/// A family of `k` pairwise disjoint independent sets with no extension to
/// `k` pairwise disjoint maximum independent sets, if one exists.
pub fn w_extension_failure(g: &Graph, k: usize, reading: WReading) -> Result<Option<Vec<VertexSet>>> {
    if k == 0 {
        return Err(Error::arg("W_k needs k >= 1"));
    }
    if g.is_null() {
        return Ok(None);
    }
    let mut search = Search {
        g,
        k,
        n: g.order(),
        omega: maximum_independent_sets(g),
        reading,
        classes: vec![VertexSet::EMPTY; k],
        opened: 0,
        uncovered: VertexSet::EMPTY,
    };
    Ok(search.assign(0))
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    n: usize,
    omega: Vec<VertexSet>,
    reading: WReading,
    classes: Vec<VertexSet>,
    opened: usize,
    uncovered: VertexSet,
}

impl Search<'_> {
    fn extendable(&self, a: VertexSet) -> bool {
        self.omega.iter().any(|s| a.is_subset(*s))
    }

    /// Places vertex `v` and recurses; returns a failing family.
    fn assign(&mut self, v: usize) -> Option<Vec<VertexSet>> {
        if v == self.n {
            return self.leaf();
        }
        let nv = self.g.neighbors(v);
        // leave v uncovered
        self.uncovered.insert(v);
        if self.viable(v) {
            if let Some(f) = self.assign(v + 1) {
                return Some(f);
            }
        }
        self.uncovered.remove(v);
        let top = (self.opened + 1).min(self.k);
        for j in 0..top {
            let opening = j == self.opened;
            if self.classes[j].intersects(nv) {
                continue;
            }
            self.classes[j].insert(v);
            if opening {
                self.opened += 1;
            }
            let result = if !self.extendable(self.classes[j]) {
                self.stuck(j)
            } else if self.viable(v) {
                self.assign(v + 1)
            } else {
                None
            };
            if opening {
                self.opened -= 1;
            }
            self.classes[j].remove(v);
            if result.is_some() {
                return result;
            }
        }
        None
    }

    /// Class `j` fits in no maximum independent set; it is a counterexample
    /// as soon as it can be padded to a valid family.
    fn stuck(&self, j: usize) -> Option<Vec<VertexSet>> {
        let a = self.classes[j];
        let mut family = vec![a];
        match self.reading {
            WReading::EmptyAllowed => family.resize(self.k, VertexSet::EMPTY),
            WReading::NonemptyOnly => {
                let others = self.g.vertices() - a;
                if others.len() < self.k - 1 {
                    return None;
                }
                family.extend(others.iter().take(self.k - 1).map(VertexSet::singleton));
            }
        }
        Some(family)
    }

    /// Every uncovered vertex still needs a neighbour in each class; only its
    /// neighbours after `v` can supply the missing ones.
    fn viable(&self, v: usize) -> bool {
        let later = VertexSet::full(self.n) - VertexSet::full(v + 1);
        self.uncovered.iter().all(|u| {
            let nu = self.g.neighbors(u);
            let missing = self.classes.iter().filter(|c| !c.intersects(nu)).count();
            missing <= (nu & later).len()
        })
    }

    fn leaf(&self) -> Option<Vec<VertexSet>> {
        if self.reading == WReading::NonemptyOnly && self.opened < self.k {
            return None;
        }
        let ok = self.uncovered.iter().all(|u| {
            let nu = self.g.neighbors(u);
            self.classes.iter().all(|c| c.intersects(nu))
        });
        if !ok {
            return None;
        }
        let nonempty = &self.classes[..self.opened];
        if self.extend(nonempty, VertexSet::EMPTY) {
            None
        } else {
            Some(self.classes.clone())
        }
    }

    // Assigns distinct disjoint members of Ω to the nonempty classes, then
    // looks for the remaining ones among the sets avoiding everything used.
    fn extend(&self, classes: &[VertexSet], used: VertexSet) -> bool {
        match classes.split_first() {
            None => {
                let rest = self.k - self.opened;
                if rest == 0 {
                    return true;
                }
                let free: Vec<VertexSet> =
                    self.omega.iter().copied().filter(|s| s.is_disjoint(used)).collect();
                !free.is_empty() && disjoint_from_family(&free, rest, self.n).is_some()
            }
            Some((&a, tail)) => self
                .omega
                .iter()
                .filter(|&&s| a.is_subset(s) && s.is_disjoint(used))
                .any(|&s| self.extend(tail, used | s)),
        }
    }
}
