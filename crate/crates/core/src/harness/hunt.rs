//! Counterexample hunting for the concatenation conjecture and exhaustive
//! censuses for the open problems.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{all_graphs, certificate, connected_graphs, CATALOG_MAX_ORDER, CERTIFICATE_MAX_ORDER};
use crate::classify::{is_in_w, is_in_w_staples, is_well_covered, shedding_vertices};
use crate::constructions::concatenate;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::independence::{has_k_disjoint_maximum_independent_sets, independence_number, maximum_matching_size};

use super::survey::with_jobs;
use super::SCHEMA_VERSION;

/// Largest `k` accepted by [`HuntTarget`].
pub const HUNT_MAX_K: usize = 4;
/// Largest base order for the concatenation hunt.
pub const HUNT_MAX_BASE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HuntTargetId {
    #[serde(rename = "conjecture.wk-concat")]
    WkConcat,
    #[serde(rename = "problem.no-shedding")]
    NoShedding,
    #[serde(rename = "problem.two-disjoint-mis-girth5")]
    TwoDisjointMisGirth5,
    #[serde(rename = "problem.w2-alpha2")]
    W2Alpha2,
    #[serde(rename = "problem.alpha-plus-mu")]
    AlphaPlusMu,
}

impl HuntTargetId {
    pub const ALL: [HuntTargetId; 5] = [
        HuntTargetId::WkConcat,
        HuntTargetId::NoShedding,
        HuntTargetId::TwoDisjointMisGirth5,
        HuntTargetId::W2Alpha2,
        HuntTargetId::AlphaPlusMu,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            HuntTargetId::WkConcat => "conjecture.wk-concat",
            HuntTargetId::NoShedding => "problem.no-shedding",
            HuntTargetId::TwoDisjointMisGirth5 => "problem.two-disjoint-mis-girth5",
            HuntTargetId::W2Alpha2 => "problem.w2-alpha2",
            HuntTargetId::AlphaPlusMu => "problem.alpha-plus-mu",
        }
    }

    /// The predicate a census graph must satisfy.
    pub fn predicate(self) -> &'static str {
        match self {
            HuntTargetId::WkConcat => "H ∈ W_k, v ∈ V(H), G connected with G(H,v) ∉ W_{k−1}",
            HuntTargetId::NoShedding => "well-covered, Shed(G) = ∅",
            HuntTargetId::TwoDisjointMisGirth5 => "well-covered, girth ≤ 5, two disjoint maximum independent sets",
            HuntTargetId::W2Alpha2 => "connected, G ∈ W2, α(G) = 2",
            HuntTargetId::AlphaPlusMu => "connected, G ∈ W2, α(G) + μ(G) = |V(G)| − 1",
        }
    }

    fn matches(self, g: &Graph) -> bool {
        match self {
            HuntTargetId::WkConcat => unreachable!("not a census"),
            HuntTargetId::NoShedding => is_well_covered(g) && shedding_vertices(g).is_empty(),
            HuntTargetId::TwoDisjointMisGirth5 => {
                g.girth().is_finite()
                    && !g.girth().at_least(6)
                    && is_well_covered(g)
                    && has_k_disjoint_maximum_independent_sets(g, 2)
            }
            HuntTargetId::W2Alpha2 => g.is_connected() && independence_number(g) == 2 && is_in_w_staples(g),
            HuntTargetId::AlphaPlusMu => {
                g.is_connected()
                    && independence_number(g) + maximum_matching_size(g) + 1 == g.order()
                    && is_in_w_staples(g)
            }
        }
    }
}

impl fmt::Display for HuntTargetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HuntTargetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HuntTargetId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::arg(format!("unknown hunt target {s:?}")))
    }
}

/// A hunt with its bounds. `max_n` bounds generated catalogs only; a
/// supplied stream is taken whole.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HuntTarget {
    pub id: HuntTargetId,
    pub max_n: usize,
    /// `W_k` level of the concatenated part.
    pub k: usize,
    /// Largest connected base of a concatenation.
    pub base_max_n: usize,
}

impl HuntTarget {
    pub fn new(id: HuntTargetId) -> Self {
        let max_n = if id == HuntTargetId::WkConcat { 6 } else { 8 };
        HuntTarget { id, max_n, k: 3, base_max_n: 3 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.max_n > CATALOG_MAX_ORDER {
            return Err(Error::arg(format!("max_n must be in 1..={CATALOG_MAX_ORDER}")));
        }
        if self.id == HuntTargetId::WkConcat {
            if !(2..=HUNT_MAX_K).contains(&self.k) {
                return Err(Error::arg(format!("k must be in 2..={HUNT_MAX_K}")));
            }
            if self.base_max_n == 0 || self.base_max_n > HUNT_MAX_BASE {
                return Err(Error::arg(format!("base_max_n must be in 1..={HUNT_MAX_BASE}")));
            }
        }
        Ok(())
    }
}

pub enum HuntSource {
    /// Graphs from a stream, in order.
    Stream(Vec<Graph>),
    /// The catalog up to `max_n`: all graphs for the girth census and the
    /// concatenated parts, connected graphs otherwise.
    Generated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntEntry {
    pub graph_id: String,
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub alpha: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HuntReport {
    pub schema_version: u32,
    pub target: HuntTarget,
    pub predicate: &'static str,
    /// Candidate graphs examined (parts, for the conjecture).
    pub examined: usize,
    /// Census members, one per isomorphism class, in first-seen order.
    pub entries: Vec<HuntEntry>,
    /// Census members that are connected.
    pub connected_count: usize,
    /// Concatenations checked, for the conjecture.
    pub concatenations: usize,
    /// Concatenations above the representation limit, not checked.
    pub skipped: usize,
    pub counterexamples: Vec<Value>,
    pub summary: String,
}

fn catalog(max_n: usize, connected: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(if connected { connected_graphs(n)? } else { all_graphs(n)? });
    }
    Ok(out)
}

/// Isomorphism key: the certificate where available, else graph6.
fn iso_key(g: &Graph) -> Result<(usize, u128, String)> {
    if g.order() <= CERTIFICATE_MAX_ORDER {
        Ok((g.order(), certificate(g)?, String::new()))
    } else {
        Ok((g.order(), 0, g.to_graph6()))
    }
}

pub fn hunt(target: &HuntTarget, source: HuntSource, jobs: usize) -> Result<HuntReport> {
    target.validate()?;
    let graphs = match source {
        HuntSource::Stream(gs) => gs,
        HuntSource::Generated => catalog(
            target.max_n,
            !matches!(target.id, HuntTargetId::WkConcat | HuntTargetId::TwoDisjointMisGirth5),
        )?,
    };
    let mut report = HuntReport {
        schema_version: SCHEMA_VERSION,
        target: *target,
        predicate: target.id.predicate(),
        examined: graphs.len(),
        entries: Vec::new(),
        connected_count: 0,
        concatenations: 0,
        skipped: 0,
        counterexamples: Vec::new(),
        summary: String::new(),
    };
    if target.id == HuntTargetId::WkConcat {
        concat_hunt(target, &graphs, jobs, &mut report)?;
        report.summary = if report.counterexamples.is_empty() {
            "no counterexample within bounds".to_string()
        } else {
            format!("{} counterexamples", report.counterexamples.len())
        };
        return Ok(report);
    }

    let hits: Vec<bool> = with_jobs(jobs, || graphs.par_iter().map(|g| target.id.matches(g)).collect())?;
    let mut seen = HashSet::new();
    for (g, _) in graphs.iter().zip(hits).filter(|(_, hit)| *hit) {
        if !seen.insert(iso_key(g)?) {
            continue;
        }
        let connected = g.is_connected();
        report.connected_count += connected as usize;
        report.entries.push(HuntEntry {
            graph_id: g.to_graph6(),
            n: g.order(),
            edges: g.edge_count(),
            connected,
            alpha: independence_number(g),
        });
    }
    report.summary = format!(
        "{} graphs satisfy the predicate, {} connected",
        report.entries.len(),
        report.connected_count
    );
    Ok(report)
}

fn concat_hunt(target: &HuntTarget, parts: &[Graph], jobs: usize, report: &mut HuntReport) -> Result<()> {
    let bases = catalog(target.base_max_n, true)?;
    let k = target.k;
    // (checked, skipped, counterexamples) per part
    let per_part: Vec<Result<(usize, usize, Vec<Value>)>> = with_jobs(jobs, || {
        parts
            .par_iter()
            .map(|h| {
                let mut out = (0, 0, Vec::new());
                if !is_in_w(h, k)? {
                    return Ok(out);
                }
                for g in &bases {
                    for v in h.vertices() {
                        if g.order() * h.order() > MAX_ORDER {
                            out.1 += 1;
                            continue;
                        }
                        let l = concatenate(g, h, v)?;
                        out.0 += 1;
                        if !is_in_w(&l, k - 1)? {
                            out.2.push(json!({
                                "base": g.to_graph6(),
                                "part": h.to_graph6(),
                                "v": v,
                                "graph": l.to_graph6(),
                            }));
                        }
                    }
                }
                Ok(out)
            })
            .collect()
    })?;
    for r in per_part {
        let (checked, skipped, found) = r?;
        report.concatenations += checked;
        report.skipped += skipped;
        report.counterexamples.extend(found);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle, path};
    use crate::constructions::corona_uniform;

    fn has(r: &HuntReport, g: &Graph) -> bool {
        let key = iso_key(g).unwrap();
        r.entries.iter().any(|e| iso_key(&Graph::from_graph6(&e.graph_id).unwrap()).unwrap() == key)
    }

    #[test]
    fn no_shedding_cycles() {
        let cs: Vec<Graph> = (3..=12).map(|n| cycle(n).unwrap()).collect();
        let r = hunt(&HuntTarget::new(HuntTargetId::NoShedding), HuntSource::Stream(cs), 1).unwrap();
        let orders: Vec<usize> = r.entries.iter().map(|e| e.n).collect();
        assert_eq!(orders, vec![4, 7]);
    }

    #[test]
    fn alpha_plus_mu() {
        let t = HuntTarget { max_n: 6, ..HuntTarget::new(HuntTargetId::AlphaPlusMu) };
        let r = hunt(&t, HuntSource::Generated, 1).unwrap();
        let p2k2 = corona_uniform(&path(2).unwrap(), &complete(2).unwrap()).unwrap();
        for g in [complete(3).unwrap(), cycle(5).unwrap(), p2k2] {
            assert!(has(&r, &g), "{g}");
        }
        assert_eq!(r.connected_count, r.entries.len());
    }

    #[test]
    fn concat_small() {
        let t = HuntTarget { max_n: 5, k: 3, base_max_n: 2, id: HuntTargetId::WkConcat };
        let r = hunt(&t, HuntSource::Generated, 2).unwrap();
        assert!(r.counterexamples.is_empty());
        assert!(r.concatenations > 0);
        assert_eq!(r.summary, "no counterexample within bounds");
    }

    #[test]
    fn dedups_isomorphic_copies() {
        let c5 = cycle(5).unwrap();
        let twisted = c5.relabel(&[0, 2, 4, 1, 3]).unwrap();
        let t = HuntTarget::new(HuntTargetId::TwoDisjointMisGirth5);
        let r = hunt(&t, HuntSource::Stream(vec![c5, twisted]), 1).unwrap();
        assert_eq!(r.entries.len(), 1);
    }

    #[test]
    fn bounds() {
        for bad in [
            HuntTarget { max_n: 0, ..HuntTarget::new(HuntTargetId::NoShedding) },
            HuntTarget { max_n: 10, ..HuntTarget::new(HuntTargetId::NoShedding) },
            HuntTarget { k: 5, ..HuntTarget::new(HuntTargetId::WkConcat) },
            HuntTarget { k: 1, ..HuntTarget::new(HuntTargetId::WkConcat) },
            HuntTarget { base_max_n: 5, ..HuntTarget::new(HuntTargetId::WkConcat) },
        ] {
            assert!(hunt(&bad, HuntSource::Stream(Vec::new()), 1).is_err());
        }
        assert_eq!("problem.w2-alpha2".parse::<HuntTargetId>().unwrap(), HuntTargetId::W2Alpha2);
        assert!("problem.none".parse::<HuntTargetId>().is_err());
    }
}
