//! Human-readable tables.

use std::fmt::Write;

use wellcover::classify::ClassReport;
use wellcover::harness::{GridReport, HuntReport, Kind, SurveyReport, TheoremVerdict};

use crate::TheoremTally;

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn class_report(r: &ClassReport) -> String {
    let rows: [(&str, String); 18] = [
        ("graph6", r.graph_id.clone()),
        ("order", r.n.to_string()),
        ("edges", r.edges.to_string()),
        ("connected", yn(r.connected).into()),
        ("girth", r.girth.to_string()),
        ("alpha", r.alpha.to_string()),
        ("mu", r.mu.to_string()),
        ("differential", r.delta_graph.to_string()),
        ("well-covered", yn(r.well_covered).into()),
        ("very well-covered", yn(r.very_well_covered).into()),
        ("1-well-covered", yn(r.one_well_covered).into()),
        ("quasi-regularizable", yn(r.quasi_regularizable).into()),
        ("regularizable", yn(r.regularizable).into()),
        ("locally triangle-free", yn(r.locally_triangle_free).into()),
        ("W level", format!("{} (tested up to {})", r.w_level, r.k_max)),
        ("disjoint maximum sets", format!("{} (capped at {})", r.disjoint_mis_max, r.k_max)),
        ("Shed", r.shed.to_string()),
        ("Simp", r.simp.to_string()),
    ];
    let mut s = String::new();
    for (k, v) in &rows {
        let _ = writeln!(s, "{k:<22} {v}");
    }
    s.pop();
    s
}

pub fn survey(r: &SurveyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>5} {:<12} {:>3} {:>4} {:>4} {:>3} {:>4} {:>4} {:>2} {:>3} {:>3} shed",
        "line", "graph6", "n", "m", "conn", "wc", "vwc", "1wc", "W", "a", "mu"
    );
    for e in &r.entries {
        let c = &e.report;
        let _ = writeln!(
            s,
            "{:>5} {:<12} {:>3} {:>4} {:>4} {:>3} {:>4} {:>4} {:>2} {:>3} {:>3} {}",
            e.line,
            c.graph_id,
            c.n,
            c.edges,
            yn(c.connected),
            yn(c.well_covered),
            yn(c.very_well_covered),
            yn(c.one_well_covered),
            c.w_level,
            c.alpha,
            c.mu,
            c.shed
        );
    }
    let _ = writeln!(s);
    let levels: String = (1..=r.k_max).map(|k| format!(" {:>5}", format!("W{k}"))).collect();
    let _ = writeln!(s, "{:>3} {:>6} {:>6} {:>6} {:>6} {:>6}{levels} {:>8}", "n", "graphs", "conn", "wc", "vwc", "1wc", "no-shed");
    for c in &r.counts {
        let levels: String = c.w_at_least.iter().map(|x| format!(" {x:>5}")).collect();
        let _ = writeln!(
            s,
            "{:>3} {:>6} {:>6} {:>6} {:>6} {:>6}{levels} {:>8}",
            c.n, c.graphs, c.connected, c.well_covered, c.very_well_covered, c.one_well_covered, c.no_shedding_well_covered
        );
    }
    let _ = write!(
        s,
        "\n{} graphs, {} filtered out, {} parse errors, {} theorem failures",
        r.entries.len(),
        r.filtered_out,
        r.parse_errors.len(),
        r.failures.len()
    );
    s
}

fn verdict_line(v: &TheoremVerdict) -> String {
    let level = if v.is_error() { "ERROR" } else { "warning" };
    let w = v.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
    format!("{level} {} on {}: {w}", v.theorem_id, v.graph_id)
}

pub fn verify(
    graphs: usize,
    tallies: &[TheoremTally],
    failures: &[&TheoremVerdict],
    grids: &[GridReport],
    errors: usize,
    warnings: usize,
) -> String {
    let mut s = String::new();
    if graphs > 0 {
        let _ = writeln!(s, "{:<42} {:>10} {:>10} {:>8} {:>8}", "theorem", "kind", "applicable", "skipped", "failures");
        for t in tallies {
            let kind = match t.kind {
                Kind::Proven => "proven",
                Kind::Diagnostic => "diagnostic",
            };
            let _ = writeln!(s, "{:<42} {kind:>10} {:>10} {:>8} {:>8}", t.id, t.applicable, t.skipped, t.failures);
        }
    }
    for r in grids {
        let _ = writeln!(s, "{:<42} {:>10} {:>10} {:>8} {:>8}", r.theorem_id, "grid", r.applicable, r.cases - r.applicable, r.failures.len());
    }
    for v in failures.iter().copied().chain(grids.iter().flat_map(|r| &r.failures)) {
        let _ = writeln!(s, "{}", verdict_line(v));
    }
    let _ = write!(s, "{graphs} graphs, {errors} errors, {warnings} warnings");
    s
}

pub fn hunt(r: &HuntReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}: {}", r.target.id, r.predicate);
    for e in &r.entries {
        let _ = writeln!(s, "{:<16} n={:<3} m={:<4} alpha={:<3} {}", e.graph_id, e.n, e.edges, e.alpha, if e.connected { "connected" } else { "disconnected" });
    }
    for c in &r.counterexamples {
        let _ = writeln!(s, "counterexample {c}");
    }
    let _ = write!(s, "examined {}; {}", r.examined, r.summary);
    s
}
