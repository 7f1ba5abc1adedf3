//! Brute-force oracles on raw adjacency masks, sharing nothing with the
//! library beyond reading the edge relation.

#![allow(dead_code)]

use wellcover::Graph;

pub struct Oracle {
    pub n: usize,
    pub adj: Vec<u64>,
    /// Every independent set, as a mask, in increasing numeric order.
    pub ind: Vec<u64>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        assert!(n <= 16, "oracle is exponential");
        let adj: Vec<u64> = (0..n)
            .map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0, |m, v| m | 1 << v))
            .collect();
        let ind = (0u64..1 << n).filter(|&s| independent(&adj, s)).collect();
        Oracle { n, adj, ind }
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn nbhd(&self, s: u64) -> u64 {
        (0..self.n).filter(|&v| s >> v & 1 == 1).fold(0, |m, v| m | self.adj[v])
    }

    /// Independent sets inside `universe`.
    pub fn ind_within(&self, universe: u64) -> impl Iterator<Item = u64> + '_ {
        self.ind.iter().copied().filter(move |s| s & !universe == 0)
    }

    pub fn alpha_within(&self, universe: u64) -> u32 {
        self.ind_within(universe).map(u64::count_ones).max().unwrap_or(0)
    }

    pub fn alpha(&self) -> u32 {
        self.alpha_within(self.full())
    }

    /// Inclusion-maximal independent sets inside `universe`.
    pub fn maximal_within(&self, universe: u64) -> Vec<u64> {
        let sets: Vec<u64> = self.ind_within(universe).collect();
        sets.iter()
            .copied()
            .filter(|&s| !sets.iter().any(|&t| t != s && s & t == s))
            .collect()
    }

    pub fn maximum(&self) -> Vec<u64> {
        let a = self.alpha();
        self.ind.iter().copied().filter(|s| s.count_ones() == a).collect()
    }

    pub fn well_covered_within(&self, universe: u64) -> bool {
        let a = self.alpha_within(universe);
        self.maximal_within(universe).iter().all(|s| s.count_ones() == a)
    }

    pub fn well_covered(&self) -> bool {
        self.well_covered_within(self.full())
    }

    /// `ε(A)` inside `universe`: the largest independent superset of `a`.
    pub fn epsilon_within(&self, universe: u64, a: u64) -> u32 {
        self.ind_within(universe)
            .filter(|s| s & a == a)
            .map(u64::count_ones)
            .max()
            .expect("a is independent inside universe")
    }

    /// Shedding by definition: every independent set of `G − N[v]` extends by
    /// some neighbour of `v`.
    pub fn shedding(&self, v: usize) -> bool {
        let closed = self.adj[v] | 1 << v;
        self.ind_within(self.full() & !closed).all(|s| {
            (0..self.n)
                .filter(|&u| self.adj[v] >> u & 1 == 1)
                .any(|u| self.adj[u] & s == 0)
        })
    }

    pub fn shed(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.shedding(v)).collect()
    }

    /// `max |N(A) − A| − |A|` over all subsets.
    pub fn differential(&self) -> i64 {
        (0u64..1 << self.n)
            .map(|a| (self.nbhd(a) & !a).count_ones() as i64 - a.count_ones() as i64)
            .max()
            .unwrap()
    }

    /// Largest matching, over every set of pairwise disjoint edges.
    pub fn matching_number(&self) -> u32 {
        fn go(adj: &[u64], free: u64) -> u32 {
            if free == 0 {
                return 0;
            }
            let v = free.trailing_zeros() as usize;
            let rest = free & !(1 << v);
            let mut best = go(adj, rest);
            let mut nbrs = adj[v] & rest;
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                best = best.max(1 + go(adj, rest & !(1 << u)));
            }
            best
        }
        go(&self.adj, self.full())
    }

    /// `W_2` by its definition: any two disjoint independent sets lie in two
    /// disjoint maximum independent sets.
    pub fn in_w2(&self) -> bool {
        let omega = self.maximum();
        self.ind.iter().all(|&a| {
            self.ind.iter().filter(|&&b| a & b == 0).all(|&b| {
                omega
                    .iter()
                    .any(|&s| s & a == a && omega.iter().any(|&t| t & b == b && s & t == 0))
            })
        })
    }

    pub fn connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        loop {
            let next = seen | self.nbhd(seen);
            if next == seen {
                return seen == self.full();
            }
            seen = next;
        }
    }
}

pub fn independent(adj: &[u64], s: u64) -> bool {
    (0..adj.len()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0)
}

pub fn mask_to_vec(s: u64) -> Vec<usize> {
    (0..64).filter(|&v| s >> v & 1 == 1).collect()
}
