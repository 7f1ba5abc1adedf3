//! `wellcover`: analysis, constructions, catalog surveys, theorem
//! verification and counterexample hunts from the command line.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 data error (unreadable
//! input, strict-mode stream errors, sizes above a cap), 4 a proven statement
//! failed.

mod render;
mod spec;

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use wellcover::classify::class_report;
use wellcover::constructions::{concatenate_labelled, corona_labelled, join_labelled, CoronaFamily, Construction};
use wellcover::harness::{
    hunt, read_graph6_stream, registry, run_grid, run_suite_many, survey_graphs, GridBounds, HuntSource,
    HuntTarget, HuntTargetId, Kind, ParseFailure, SurveyOptions, TheoremVerdict, GRID_THEOREMS,
    SCHEMA_VERSION,
};
use wellcover::Graph;

use spec::{parse_catalog, parse_one, parse_specs, split_list};

/// An error with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    pub fn data(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

impl From<wellcover::Error> for Failure {
    fn from(e: wellcover::Error) -> Self {
        match e {
            wellcover::Error::Unsupported(_) => Failure::data(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::data(format!("i/o: {e}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Args, Debug)]
struct Common {
    /// graph6 stream to read; `-` is standard input.
    #[arg(short, long, global = true)]
    input: Option<String>,
    /// Write output here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Highest W_k level to test.
    #[arg(long, global = true, default_value_t = 3, value_parser = positive)]
    kmax: usize,
    /// Treat stream parse errors as fatal.
    #[arg(long, global = true)]
    strict: bool,
    /// Worker threads for survey, verify and hunt.
    #[arg(long, global = true, env = "WELLCOVER_JOBS", default_value_t = 1, value_parser = positive)]
    jobs: usize,
    /// Record per-verdict timings (output is then no longer reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Parser, Debug)]
#[command(name = "wellcover", version, about = "Well-covered graphs and the W_k hierarchy")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Source {
    /// Graph specs (cycle:7, path:3..6, biclique:2x3, union(..), join(..), graph6).
    specs: Vec<String>,
    /// Generated catalog: connected:N, all:N or a range such as connected:5..7.
    #[arg(long)]
    catalog: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Class report for each graph.
    Analyze {
        /// Graph specs; without any, graph6 lines are read from the input.
        specs: Vec<String>,
    },
    /// Build a corona, join or concatenation.
    Construct {
        #[command(subcommand)]
        op: ConstructOp,
    },
    /// Class reports and aggregate counts over a stream or catalog.
    Survey {
        #[command(flatten)]
        source: Source,
        /// Also evaluate the theorem registry.
        #[arg(long)]
        theorems: bool,
        /// Drop disconnected graphs before analysis.
        #[arg(long)]
        connected_only: bool,
        /// Drop graphs with more vertices than this.
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Evaluate the theorem registry; exits 4 if a proven statement fails.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Comma-separated theorem ids (default: all).
        #[arg(long)]
        theorems: Option<String>,
        /// Also run the construction grids.
        #[arg(long)]
        grids: bool,
    },
    /// Search for counterexamples or list the graphs of an open problem.
    Hunt {
        /// conjecture.wk-concat, problem.no-shedding, problem.two-disjoint-mis-girth5,
        /// problem.w2-alpha2 or problem.alpha-plus-mu.
        target: String,
        /// Graph specs to search instead of the generated catalog.
        specs: Vec<String>,
        /// Largest order searched, at most 9 (default 6 for the concatenation target, else 8).
        #[arg(long)]
        max_n: Option<usize>,
        /// Hierarchy level for the concatenation target (default 3).
        #[arg(long)]
        k: Option<usize>,
        /// Largest base order for the concatenation target (default 3).
        #[arg(long)]
        base_max_n: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum ConstructOp {
    /// Corona of a base with one attachment per vertex, or a uniform one.
    Corona {
        #[arg(long)]
        base: String,
        /// Comma-separated attachments, one per base vertex.
        #[arg(long, conflicts_with = "part", required_unless_present = "part")]
        parts: Option<String>,
        /// The same attachment at every base vertex.
        #[arg(long)]
        part: Option<String>,
    },
    /// Join of the listed graphs.
    Join {
        #[arg(long)]
        parts: String,
    },
    /// Concatenation G(H, v).
    Concat {
        /// G, whose vertices each receive a copy of the part.
        #[arg(long)]
        base: String,
        /// H.
        #[arg(long)]
        part: String,
        /// The vertex v of H identified with each base vertex.
        #[arg(long)]
        at: usize,
    },
}

struct Out {
    w: Box<dyn Write>,
    format: Format,
}

impl Out {
    fn json(&mut self, kind: &str, value: impl Serialize) -> Result<(), Failure> {
        let mut v = serde_json::to_value(value).map_err(|e| Failure::data(e.to_string()))?;
        if let Value::Object(m) = &mut v {
            m.insert("schema_version".into(), json!(SCHEMA_VERSION));
            m.insert("type".into(), json!(kind));
        }
        writeln!(self.w, "{v}")?;
        Ok(())
    }

    fn line(&mut self, s: impl AsRef<str>) -> Result<(), Failure> {
        writeln!(self.w, "{}", s.as_ref())?;
        Ok(())
    }
}

fn read_input(path: Option<&str>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        None | Some("-") => {
            io::stdin().read_to_string(&mut text)?;
        }
        Some(p) => {
            File::open(p)
                .and_then(|mut f| f.read_to_string(&mut text))
                .map_err(|e| Failure::data(format!("{p}: {e}")))?;
        }
    }
    Ok(text)
}

/// Graphs from specs, a catalog, or the input stream, tagged with a
/// 1-based position (the line number for streams).
/// Numbered graphs plus the stream lines that failed to parse.
type Gathered = (Vec<(usize, Graph)>, Vec<ParseFailure>);

fn gather(
    specs: &[String],
    catalog: Option<&str>,
    common: &Common,
) -> Result<Gathered, Failure> {
    let mut graphs = Vec::new();
    for s in specs {
        graphs.extend(parse_specs(s)?);
    }
    if let Some(c) = catalog {
        graphs.extend(parse_catalog(c)?);
    }
    if !graphs.is_empty() || catalog.is_some() {
        return Ok((graphs.into_iter().enumerate().map(|(i, g)| (i + 1, g)).collect(), Vec::new()));
    }
    let text = read_input(common.input.as_deref())?;
    let (graphs, errors) = read_graph6_stream(&text);
    if common.strict {
        if let Some(e) = errors.first() {
            return Err(Failure::data(format!("line {}: {}", e.line, e.message)));
        }
    }
    for e in &errors {
        eprintln!("warning: line {}: {}", e.line, e.message);
    }
    Ok((graphs, errors))
}

fn analyze(specs: &[String], common: &Common, out: &mut Out) -> Result<(), Failure> {
    let graphs: Vec<Graph> = if specs.is_empty() {
        let text = read_input(common.input.as_deref())?;
        let (graphs, errors) = read_graph6_stream(&text);
        if let Some(e) = errors.first() {
            return Err(Failure::usage(format!("line {}: {}", e.line, e.message)));
        }
        graphs.into_iter().map(|(_, g)| g).collect()
    } else {
        let mut gs = Vec::new();
        for s in specs {
            gs.extend(parse_specs(s)?);
        }
        gs
    };
    for (i, g) in graphs.iter().enumerate() {
        let r = class_report(g, common.kmax)?;
        match out.format {
            Format::Json => out.json("class_report", &r)?,
            Format::Table => {
                if i > 0 {
                    out.line("")?;
                }
                out.line(render::class_report(&r))?;
            }
        }
    }
    Ok(())
}

fn construct(op: &ConstructOp, out: &mut Out) -> Result<(), Failure> {
    let (name, operands, c): (&str, Value, Construction) = match op {
        ConstructOp::Corona { base, parts, part } => {
            let b = parse_one(base)?;
            let attachments = match (parts, part) {
                (Some(ps), _) => split_list(ps)?.into_iter().map(parse_one).collect::<Result<Vec<_>, _>>()?,
                (None, Some(h)) => vec![parse_one(h)?; b.order()],
                (None, None) => unreachable!("clap requires one of them"),
            };
            let ids: Vec<String> = attachments.iter().map(Graph::to_graph6).collect();
            let c = corona_labelled(&CoronaFamily::new(b.clone(), attachments)?)?;
            ("corona", json!({ "base": b.to_graph6(), "attachments": ids }), c)
        }
        ConstructOp::Join { parts } => {
            let gs = split_list(parts)?.into_iter().map(parse_one).collect::<Result<Vec<_>, _>>()?;
            let ids: Vec<String> = gs.iter().map(Graph::to_graph6).collect();
            ("join", json!({ "parts": ids }), join_labelled(&gs)?)
        }
        ConstructOp::Concat { base, part, at } => {
            let (g, h) = (parse_one(base)?, parse_one(part)?);
            let c = concatenate_labelled(&g, &h, *at)?;
            ("concat", json!({ "base": g.to_graph6(), "part": h.to_graph6(), "at": at }), c)
        }
    };
    match out.format {
        Format::Table => out.line(c.graph.to_graph6()),
        Format::Json => out.json(
            "construction",
            json!({
                "operation": name,
                "operands": operands,
                "graph6": c.graph.to_graph6(),
                "n": c.graph.order(),
                "edges": c.graph.edge_count(),
                "origin": c.origin,
            }),
        ),
    }
}

fn survey(
    source: &Source,
    theorems: bool,
    connected_only: bool,
    max_order: Option<usize>,
    common: &Common,
    out: &mut Out,
) -> Result<(), Failure> {
    let (graphs, errors) = gather(&source.specs, source.catalog.as_deref(), common)?;
    let opts = SurveyOptions {
        k_max: common.kmax,
        run_theorems: theorems,
        strict: common.strict,
        connected_only,
        max_order,
        jobs: common.jobs,
        timing: common.timing,
    };
    let report = survey_graphs(graphs, errors, &opts)?;
    match out.format {
        Format::Json => {
            for e in &report.entries {
                out.json("survey_entry", e)?;
            }
            out.json(
                "survey_summary",
                json!({
                    "k_max": report.k_max,
                    "graphs": report.entries.len(),
                    "filtered_out": report.filtered_out,
                    "counts": report.counts,
                    "parse_errors": report.parse_errors,
                    "failures": report.failures,
                }),
            )
        }
        Format::Table => out.line(render::survey(&report)),
    }
}

#[derive(Serialize)]
struct TheoremTally {
    id: &'static str,
    kind: Kind,
    applicable: usize,
    /// Above the statement's exhaustive cap.
    skipped: usize,
    failures: usize,
}

fn verify(source: &Source, theorems: Option<&str>, grids: bool, common: &Common, out: &mut Out) -> Result<u8, Failure> {
    let ids: Option<Vec<&str>> = theorems.map(split_list).transpose()?;
    let use_graphs = !(grids && source.specs.is_empty() && source.catalog.is_none() && common.input.is_none());
    let (graphs, errors) = if use_graphs {
        gather(&source.specs, source.catalog.as_deref(), common)?
    } else {
        (Vec::new(), Vec::new())
    };
    let plain: Vec<Graph> = graphs.into_iter().map(|(_, g)| g).collect();
    let verdicts = run_suite_many(&plain, ids.as_deref(), common.jobs, common.timing)?;

    let mut tallies: Vec<TheoremTally> = registry()
        .iter()
        .filter(|t| ids.as_ref().is_none_or(|ids| ids.contains(&t.id)))
        .map(|t| TheoremTally { id: t.id, kind: t.kind, applicable: 0, skipped: 0, failures: 0 })
        .collect();
    let mut failures: Vec<&TheoremVerdict> = Vec::new();
    for v in verdicts.iter().flatten() {
        let t = tallies.iter_mut().find(|t| t.id == v.theorem_id).expect("selected theorem");
        t.applicable += v.applicable as usize;
        t.skipped += v.note.is_some() as usize;
        if v.is_failure() {
            t.failures += 1;
            failures.push(v);
        }
    }
    let mut grid_reports = Vec::new();
    if grids {
        for (id, _, _) in GRID_THEOREMS {
            grid_reports.push(run_grid(id, &GridBounds::default())?);
        }
    }
    let errors_n = failures.iter().filter(|v| v.is_error()).count()
        + grid_reports.iter().flat_map(|r| &r.failures).filter(|v| v.is_error()).count();
    let warnings_n = failures.iter().filter(|v| !v.is_error()).count()
        + grid_reports.iter().flat_map(|r| &r.failures).filter(|v| !v.is_error()).count();

    match out.format {
        Format::Json => {
            for v in &failures {
                out.json("verdict", v)?;
            }
            for r in &grid_reports {
                out.json("grid_report", r)?;
            }
            out.json(
                "verify_summary",
                json!({
                    "graphs": plain.len(),
                    "theorems": tallies,
                    "errors": errors_n,
                    "warnings": warnings_n,
                    "parse_errors": errors,
                }),
            )?;
        }
        Format::Table => out.line(render::verify(plain.len(), &tallies, &failures, &grid_reports, errors_n, warnings_n))?,
    }
    Ok(if errors_n > 0 { 4 } else { 0 })
}

fn hunt_cmd(
    target: &str,
    specs: &[String],
    bounds: (Option<usize>, Option<usize>, Option<usize>),
    common: &Common,
    out: &mut Out,
) -> Result<(), Failure> {
    let id: HuntTargetId = target.parse()?;
    let mut t = HuntTarget::new(id);
    t.max_n = bounds.0.unwrap_or(t.max_n);
    t.k = bounds.1.unwrap_or(t.k);
    t.base_max_n = bounds.2.unwrap_or(t.base_max_n);
    let source = if specs.is_empty() && common.input.is_none() {
        HuntSource::Generated
    } else {
        let (graphs, _) = gather(specs, None, common)?;
        HuntSource::Stream(graphs.into_iter().map(|(_, g)| g).collect())
    };
    let report = hunt(&t, source, common.jobs)?;
    match out.format {
        Format::Json => out.json("hunt_report", &report),
        Format::Table => out.line(render::hunt(&report)),
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let common = &cli.common;
    let w: Box<dyn Write> = match &common.output {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure::data(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut out = Out { w, format: common.format };
    let code = match &cli.command {
        Command::Analyze { specs } => analyze(specs, common, &mut out).map(|_| 0)?,
        Command::Construct { op } => construct(op, &mut out).map(|_| 0)?,
        Command::Survey { source, theorems, connected_only, max_order } => {
            survey(source, *theorems, *connected_only, *max_order, common, &mut out).map(|_| 0)?
        }
        Command::Verify { source, theorems, grids } => verify(source, theorems.as_deref(), *grids, common, &mut out)?,
        Command::Hunt { target, specs, max_n, k, base_max_n } => {
            hunt_cmd(target, specs, (*max_n, *k, *base_max_n), common, &mut out).map(|_| 0)?
        }
    };
    out.w.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
