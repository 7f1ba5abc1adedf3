//! Catalog surveys: a class report and optionally every registry verdict for
//! each graph of a graph6 stream.

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{class_report, ClassReport};
use crate::error::{Error, Result};
use crate::graph::GRAPH6_HEADER;
use crate::graph::Graph;

use super::{run_suite_timed, TheoremVerdict, SCHEMA_VERSION};

/// A line of a graph6 stream that did not decode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParseFailure {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

/// Decodes a graph6 stream, one graph per line. Blank lines and bare
/// `>>graph6<<` headers are skipped. Returns each graph with its 1-based line
/// number, plus the lines that failed.
pub fn read_graph6_stream(text: &str) -> (Vec<(usize, Graph)>, Vec<ParseFailure>) {
    let mut graphs = Vec::new();
    let mut failures = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line == GRAPH6_HEADER {
            continue;
        }
        match Graph::from_graph6(line) {
            Ok(g) => graphs.push((i + 1, g)),
            Err(e) => failures.push(ParseFailure {
                line: i + 1,
                message: e.to_string(),
            }),
        }
    }
    (graphs, failures)
}

/// Like [`read_graph6_stream`] but fails on the first bad line.
pub fn read_graph6_stream_strict(text: &str) -> Result<Vec<(usize, Graph)>> {
    let (graphs, failures) = read_graph6_stream(text);
    match failures.into_iter().next() {
        None => Ok(graphs),
        Some(f) => Err(Error::arg(format!("line {}: {}", f.line, f.message))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyOptions {
    pub k_max: usize,
    /// Evaluate the theorem registry on every graph.
    pub run_theorems: bool,
    /// Parse errors abort the survey.
    pub strict: bool,
    /// Keep connected graphs only.
    pub connected_only: bool,
    /// Keep graphs of at most this order.
    pub max_order: Option<usize>,
    pub jobs: usize,
    /// Record per-verdict timings.
    pub timing: bool,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            k_max: 3,
            run_theorems: false,
            strict: false,
            connected_only: false,
            max_order: None,
            jobs: 1,
            timing: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurveyEntry {
    pub line: usize,
    pub report: ClassReport,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<TheoremVerdict>,
}

/// Counts for one order. `w_at_least[k − 1]` counts members of `W_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrderCounts {
    pub n: usize,
    pub graphs: usize,
    pub connected: usize,
    pub well_covered: usize,
    pub very_well_covered: usize,
    pub one_well_covered: usize,
    pub w_at_least: Vec<usize>,
    pub no_shedding_well_covered: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurveyReport {
    pub schema_version: u32,
    pub k_max: usize,
    pub entries: Vec<SurveyEntry>,
    pub filtered_out: usize,
    pub parse_errors: Vec<ParseFailure>,
    pub counts: Vec<OrderCounts>,
    /// Every applicable verdict that does not hold.
    pub failures: Vec<TheoremVerdict>,
}

impl SurveyReport {
    /// A proven statement failed.
    pub fn has_errors(&self) -> bool {
        self.failures.iter().any(TheoremVerdict::is_error)
    }
}

/// Runs `f` on a pool of `jobs` threads. Output order never depends on it.
pub(crate) fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs == 0 {
        return Err(Error::arg("jobs must be at least 1"));
    }
    if jobs == 1 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::arg(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

pub fn survey_catalog(text: &str, opts: &SurveyOptions) -> Result<SurveyReport> {
    let (graphs, parse_errors) = if opts.strict {
        (read_graph6_stream_strict(text)?, Vec::new())
    } else {
        read_graph6_stream(text)
    };
    survey_graphs(graphs, parse_errors, opts)
}

/// Survey over already decoded graphs, tagged with their line numbers.
pub fn survey_graphs(
    graphs: Vec<(usize, Graph)>,
    parse_errors: Vec<ParseFailure>,
    opts: &SurveyOptions,
) -> Result<SurveyReport> {
    if opts.k_max == 0 {
        return Err(Error::arg("k_max must be at least 1"));
    }
    let total = graphs.len();
    let kept: Vec<(usize, Graph)> = graphs
        .into_iter()
        .filter(|(_, g)| (!opts.connected_only || g.is_connected()) && opts.max_order.is_none_or(|m| g.order() <= m))
        .collect();
    let filtered_out = total - kept.len();

    let entries: Vec<Result<SurveyEntry>> = with_jobs(opts.jobs, || {
        kept.par_iter()
            .map(|(line, g)| {
                let report = class_report(g, opts.k_max)?;
                let verdicts = if opts.run_theorems {
                    run_suite_timed(g, None, opts.timing)?
                } else {
                    Vec::new()
                };
                Ok(SurveyEntry { line: *line, report, verdicts })
            })
            .collect()
    })?;
    let entries = entries.into_iter().collect::<Result<Vec<_>>>()?;

    let mut counts: Vec<OrderCounts> = Vec::new();
    let mut failures = Vec::new();
    for e in &entries {
        let r = &e.report;
        let c = match counts.iter_mut().position(|c| c.n == r.n) {
            Some(i) => &mut counts[i],
            None => {
                counts.push(OrderCounts {
                    n: r.n,
                    w_at_least: vec![0; opts.k_max],
                    ..OrderCounts::default()
                });
                counts.last_mut().unwrap()
            }
        };
        c.graphs += 1;
        c.connected += r.connected as usize;
        c.well_covered += r.well_covered as usize;
        c.very_well_covered += r.very_well_covered as usize;
        c.one_well_covered += r.one_well_covered as usize;
        c.no_shedding_well_covered += (r.well_covered && r.shed.is_empty()) as usize;
        for k in 0..r.w_level {
            c.w_at_least[k] += 1;
        }
        failures.extend(e.verdicts.iter().filter(|v| v.is_failure()).cloned());
    }
    counts.sort_by_key(|c| c.n);

    Ok(SurveyReport {
        schema_version: SCHEMA_VERSION,
        k_max: opts.k_max,
        entries,
        filtered_out,
        parse_errors,
        counts,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::connected_graphs;
    use crate::graph::generators::cycle;

    fn stream(gs: &[Graph]) -> String {
        gs.iter().map(|g| g.to_graph6() + "\n").collect()
    }

    #[test]
    fn cycles() {
        let cs: Vec<Graph> = (3..=12).map(|n| cycle(n).unwrap()).collect();
        let r = survey_catalog(&stream(&cs), &SurveyOptions::default()).unwrap();
        let wc: Vec<usize> = r.entries.iter().filter(|e| e.report.well_covered).map(|e| e.report.n).collect();
        assert_eq!(wc, vec![3, 4, 5, 7]);
    }

    #[test]
    fn order_three() {
        let text = format!("{GRAPH6_HEADER}\n\n{}", stream(&connected_graphs(3).unwrap()));
        let r = survey_catalog(&text, &SurveyOptions::default()).unwrap();
        assert_eq!(r.entries.len(), 2);
        assert_eq!(r.counts[0].well_covered, 1);
        assert_eq!(r.entries[0].line, 3);
    }

    #[test]
    fn order_five_has_no_failures_and_is_deterministic() {
        let text = stream(&connected_graphs(5).unwrap());
        let mut opts = SurveyOptions { run_theorems: true, ..SurveyOptions::default() };
        let a = survey_catalog(&text, &opts).unwrap();
        assert_eq!(a.entries.len(), 21);
        assert!(a.failures.is_empty(), "{:?}", a.failures);
        opts.jobs = 2;
        let b = survey_catalog(&text, &opts).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn parse_errors() {
        let text = "D?{\nnot graph6 !\nBw\n";
        let r = survey_catalog(text, &SurveyOptions::default()).unwrap();
        assert_eq!(r.entries.len(), 2);
        assert_eq!(r.parse_errors.len(), 1);
        assert_eq!(r.parse_errors[0].line, 2);
        let strict = SurveyOptions { strict: true, ..SurveyOptions::default() };
        let err = survey_catalog(text, &strict).unwrap_err();
        assert!(err.to_string().contains("line 2"));
        let zero = SurveyOptions { jobs: 0, ..SurveyOptions::default() };
        assert!(survey_catalog(text, &zero).is_err());
    }

    #[test]
    fn filters() {
        let mut gs = connected_graphs(4).unwrap();
        gs.push(Graph::empty(3).unwrap());
        let opts = SurveyOptions { connected_only: true, max_order: Some(4), ..SurveyOptions::default() };
        let r = survey_catalog(&stream(&gs), &opts).unwrap();
        assert_eq!((r.entries.len(), r.filtered_out), (6, 1));
    }
}
