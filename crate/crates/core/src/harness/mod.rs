//! Executable theorem registry, construction grids, catalog surveys and the
//! counterexample hunter.
//!
//! A registered statement is evaluated on one graph at a time: its
//! hypotheses are checked first and only then its conclusion. Statements
//! about constructions live in [`grid`] and quantify over fixed operand grids.

pub mod grid;
pub mod hunt;
pub mod survey;
mod theorems;

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::classify::is_in_w_staples;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::maximum_independent_sets;
use crate::vertex_set::VertexSet;

pub use grid::{run_grid, GridBounds, GridReport, GRID_THEOREMS};
pub use hunt::{hunt, HuntEntry, HuntReport, HuntSource, HuntTarget, HuntTargetId};
pub use survey::{
    read_graph6_stream, read_graph6_stream_strict, survey_catalog, survey_graphs, OrderCounts, ParseFailure,
    SurveyEntry, SurveyOptions, SurveyReport,
};

/// Version of every JSON document the harness and the CLI emit.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// A proven statement; a failure is an implementation bug.
    Proven,
    /// A consistency probe whose failure is informative, not a bug.
    Diagnostic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub theorem_id: &'static str,
    pub graph_id: String,
    pub applicable: bool,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Why an otherwise applicable check was not run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub severity: Option<Severity>,
    /// Microseconds, recorded only when timing is requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

impl TheoremVerdict {
    pub fn is_failure(&self) -> bool {
        self.applicable && !self.holds
    }

    pub fn is_error(&self) -> bool {
        self.severity == Some(Severity::Error)
    }
}

/// Result of evaluating a statement on one graph.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Inapplicable,
    /// Hypotheses hold but the graph is above the statement's exhaustive cap.
    Skipped(String),
    Holds,
    Fails(Value),
}

impl Outcome {
    pub(crate) fn check(ok: bool, witness: impl FnOnce() -> Value) -> Outcome {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Fails(witness())
        }
    }
}

/// Per-graph facts shared by the statement bodies.
pub struct Ctx<'a> {
    pub g: &'a Graph,
    pub n: usize,
    pub alpha: usize,
    pub omega: Vec<VertexSet>,
    pub well_covered: bool,
    pub in_w2: bool,
    /// Connected and nonnull.
    pub connected: bool,
    pub isolated_free: bool,
}

impl<'a> Ctx<'a> {
    pub fn new(g: &'a Graph) -> Self {
        let omega = maximum_independent_sets(g);
        Ctx {
            g,
            n: g.order(),
            alpha: omega[0].len(),
            well_covered: crate::classify::is_well_covered(g),
            in_w2: is_in_w_staples(g),
            // connected-graph statements are about nonnull graphs
            connected: !g.is_null() && g.is_connected(),
            isolated_free: !g.has_isolated_vertex(),
            omega,
        }
    }
}

pub struct Theorem {
    pub id: &'static str,
    /// The statement's hypotheses, as gated by `check`.
    pub hypotheses: &'static str,
    pub conclusion: &'static str,
    pub kind: Kind,
    /// Largest order on which the exhaustive check runs.
    pub max_order: usize,
    pub check: fn(&Ctx) -> Outcome,
}

/// Every per-graph statement, in a fixed order.
pub fn registry() -> &'static [Theorem] {
    theorems::REGISTRY
}

pub fn theorem(id: &str) -> Result<&'static Theorem> {
    registry()
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::arg(format!("unknown theorem id {id:?}")))
}

fn evaluate(t: &Theorem, ctx: &Ctx, timing: bool) -> TheoremVerdict {
    let start = Instant::now();
    let outcome = if ctx.n > t.max_order {
        Outcome::Skipped(format!("order above the exhaustive cap of {}", t.max_order))
    } else {
        (t.check)(ctx)
    };
    let elapsed_us = timing.then(|| start.elapsed().as_micros() as u64);
    let mut v = TheoremVerdict {
        theorem_id: t.id,
        graph_id: ctx.g.to_graph6(),
        applicable: false,
        holds: true,
        witness: None,
        note: None,
        severity: None,
        elapsed_us,
    };
    match outcome {
        Outcome::Inapplicable => {}
        Outcome::Skipped(why) => v.note = Some(why),
        Outcome::Holds => v.applicable = true,
        Outcome::Fails(w) => {
            v.applicable = true;
            v.holds = false;
            v.witness = Some(w);
            v.severity = Some(match t.kind {
                Kind::Proven => Severity::Error,
                Kind::Diagnostic => Severity::Warning,
            });
        }
    }
    v
}

/// One verdict per selected statement (all of them by default), in registry
/// order.
pub fn run_suite(g: &Graph, ids: Option<&[&str]>) -> Result<Vec<TheoremVerdict>> {
    run_suite_timed(g, ids, false)
}

pub fn run_suite_timed(g: &Graph, ids: Option<&[&str]>, timing: bool) -> Result<Vec<TheoremVerdict>> {
    let selected: Vec<&Theorem> = match ids {
        None => registry().iter().collect(),
        Some(ids) => {
            let mut out = Vec::new();
            for id in ids {
                out.push(theorem(id)?);
            }
            out
        }
    };
    let ctx = Ctx::new(g);
    Ok(selected.into_iter().map(|t| evaluate(t, &ctx, timing)).collect())
}

/// [`run_suite_timed`] over many graphs on `jobs` threads, in input order.
pub fn run_suite_many(
    graphs: &[Graph],
    ids: Option<&[&str]>,
    jobs: usize,
    timing: bool,
) -> Result<Vec<Vec<TheoremVerdict>>> {
    use rayon::prelude::*;
    if let Some(ids) = ids {
        for id in ids {
            theorem(id)?;
        }
    }
    survey::with_jobs(jobs, || graphs.par_iter().map(|g| run_suite_timed(g, ids, timing)).collect())?
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::concatenate;
    use crate::graph::generators::*;

    fn verdict<'a>(vs: &'a [TheoremVerdict], id: &str) -> &'a TheoremVerdict {
        vs.iter().find(|v| v.theorem_id == id).unwrap()
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|t| t.id).chain(GRID_THEOREMS.iter().map(|t| t.0)).collect();
        let n = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn every_statement_runs() {
        for g in [cycle(5).unwrap(), path(4).unwrap(), complete(3).unwrap(), Graph::empty(0).unwrap(), Graph::empty(2).unwrap()] {
            let vs = run_suite(&g, None).unwrap();
            assert_eq!(vs.len(), registry().len());
            assert!(vs.iter().all(|v| !v.is_error()), "{g}: {vs:?}");
        }
    }

    #[test]
    fn examples() {
        let c5 = run_suite(&cycle(5).unwrap(), None).unwrap();
        let eq = verdict(&c5, "thm.w2-equivalence");
        assert!(eq.applicable && eq.holds);
        let p6 = run_suite(&path(6).unwrap(), None).unwrap();
        for id in ["cor.w2-no-leaf", "thm.w2-connected-properties", "thm.w2-five-way"] {
            assert!(!verdict(&p6, id).applicable);
        }
        let k2c5 = concatenate(&complete(2).unwrap(), &cycle(5).unwrap(), 0).unwrap();
        let vs = run_suite(&k2c5, Some(&["thm.w2-equivalence"])).unwrap();
        assert!(vs[0].applicable && vs[0].holds);
        let c = crate::classify::w2_conditions(&k2c5);
        assert!(c.as_array().iter().all(|&x| !x));
        assert!(run_suite(&k2c5, Some(&["no.such-theorem"])).is_err());
    }

    #[test]
    fn many_matches_one_by_one() {
        let gs: Vec<Graph> = (3..=8).map(|n| cycle(n).unwrap()).collect();
        let many = run_suite_many(&gs, None, 2, false).unwrap();
        for (g, vs) in gs.iter().zip(&many) {
            assert_eq!(&run_suite(g, None).unwrap(), vs);
        }
        assert!(run_suite_many(&gs, Some(&["nope"]), 1, false).is_err());
    }

    #[test]
    fn skips_above_cap() {
        let big = cycle(30).unwrap();
        let vs = run_suite(&big, Some(&["thm.berge"])).unwrap();
        assert!(!vs[0].applicable && vs[0].note.is_some());
    }
}
