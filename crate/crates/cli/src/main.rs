use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use graphreg::enumerate::{enumerate_types, GraphFilter, TypeFilter};
use graphreg::geometry::{self, cameron_characterization, cameron_inequality, elliptic_quadric_gq, srg_parameters, IncidenceStructure};
use graphreg::io::{from_edge_list, from_graph6, to_graph6};
use graphreg::regularity::{is_mn_regular, is_type_regular, k_isoregular, t_vertex_condition};
use graphreg::{Graph, GraphType, Mode, RegularityReport};
use serde_json::{json, Value};

mod selftest;

#[derive(Parser)]
#[command(name = "graphreg", version, about = "Regularity of graphs with respect to graph-types")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
    /// File holding a graph6 line or an edge list (`n m` header, then `u v` lines).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Built-in graph, one of petersen, clebsch, c5, rook3x3, gq24, schlafli_complement.
    #[arg(long)]
    catalog: Option<String>,
}

/// Same as [`Input`] but optional, for commands that also accept `--q`.
#[derive(Args)]
#[group(multiple = false)]
struct MaybeInput {
    #[arg(long)]
    g6: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    catalog: Option<String>,
    /// Elliptic quadric generalized quadrangle over GF(q), q in 2..=4.
    #[arg(long)]
    q: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// The t-vertex condition.
    CheckTvc {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        t: usize,
    },
    /// k-isoregularity.
    CheckIsoregular {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// (m,n)-regularity.
    CheckMnRegular {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "reduced", value_parser = ["naive", "reduced"])]
        mode: String,
    },
    /// Regularity for a single type, given as `<graph6> <base vertices>`.
    CheckType {
        #[command(flatten)]
        input: Input,
        #[arg(long = "type")]
        type_text: String,
    },
    /// Types of order (m,n) up to isomorphism.
    EnumerateTypes {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Keep only types whose graph has no induced K4 minus an edge.
        #[arg(long)]
        theta_k4e_free: bool,
        /// Keep only (m,n)-irreducible types.
        #[arg(long)]
        irreducible: bool,
        /// Keep only types whose closure is k-connected.
        #[arg(long)]
        closure_connected: Option<usize>,
    },
    /// Builds a catalog graph or the quadric quadrangle and prints it.
    Construct {
        #[command(flatten)]
        input: MaybeInput,
    },
    /// Strongly regular parameters, partial quadrangle characterisation and incidence axioms.
    AnalyzeGeometry {
        #[command(flatten)]
        input: MaybeInput,
    },
    /// Histogram of centre counts over triads.
    Triads {
        #[command(flatten)]
        input: MaybeInput,
    },
    /// Small-order oracle suites.
    Selftest {
        /// Largest graph order to sweep.
        #[arg(long, default_value_t = 5)]
        max_order: usize,
    },
}

/// What a command produced: a verdict and a report.
struct Outcome {
    holds: bool,
    report: Value,
    /// Lines printed before the report in text mode.
    text: Vec<String>,
}

impl Outcome {
    fn from_report(r: &RegularityReport) -> anyhow::Result<Self> {
        let mut text = vec![format!("{}: {}", r.subject, if r.holds { "holds" } else { "fails" })];
        if let Some(c) = r.constant {
            text.push(format!("constant: {c}"));
        }
        if let Some(w) = &r.witness {
            text.push(format!("witness: {} {:?} -> {}, {:?} -> {}", w.type_repr.as_deref().unwrap_or(""), w.kappa1, w.counts[0], w.kappa2, w.counts[1]));
        }
        Ok(Outcome { holds: r.holds, report: serde_json::to_value(r)?, text })
    }
}

fn read_graph(g6: &Option<String>, file: &Option<PathBuf>, catalog: &Option<String>) -> anyhow::Result<Option<Graph>> {
    if let Some(s) = g6 {
        return Ok(Some(from_graph6(s.trim())?));
    }
    if let Some(path) = file {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        let g = if first.split_whitespace().count() == 1 { from_graph6(first)? } else { from_edge_list(&text)? };
        return Ok(Some(g));
    }
    if let Some(name) = catalog {
        return Ok(Some(geometry::catalog(name)?));
    }
    Ok(None)
}

impl Input {
    fn graph(&self) -> anyhow::Result<Graph> {
        read_graph(&self.g6, &self.file, &self.catalog)?.context("no input graph")
    }
}

enum Subject {
    Graph(Graph),
    Quadrangle(usize, IncidenceStructure),
}

impl MaybeInput {
    fn subject(&self) -> anyhow::Result<Subject> {
        if let Some(q) = self.q {
            return Ok(Subject::Quadrangle(q, elliptic_quadric_gq(q)?));
        }
        match read_graph(&self.g6, &self.file, &self.catalog)? {
            Some(g) => Ok(Subject::Graph(g)),
            None => bail!("one of --g6, --file, --catalog or --q is required"),
        }
    }
}

fn graph_summary(g: &Graph) -> Value {
    json!({ "order": g.order(), "edges": g.edge_count(), "g6": to_graph6(g), "srg": srg_parameters(g) })
}

fn run(command: Command) -> anyhow::Result<Outcome> {
    match command {
        Command::CheckTvc { input, t } => Outcome::from_report(&t_vertex_condition(&input.graph()?, t)?),
        Command::CheckIsoregular { input, k } => {
            if k == 0 {
                bail!("k must be at least 1");
            }
            Outcome::from_report(&k_isoregular(&input.graph()?, k))
        }
        Command::CheckMnRegular { input, m, n, mode } => {
            let mode: Mode = mode.parse()?;
            Outcome::from_report(&is_mn_regular(&input.graph()?, m, n, mode)?)
        }
        Command::CheckType { input, type_text } => {
            let t = GraphType::from_text(&type_text)?;
            Outcome::from_report(&is_type_regular(&input.graph()?, &t))
        }
        Command::EnumerateTypes { m, n, theta_k4e_free, irreducible, closure_connected } => {
            let theta_filters: Vec<GraphFilter> = if theta_k4e_free { vec![GraphFilter::k4e_free()] } else { Vec::new() };
            let mut type_filters = Vec::new();
            if irreducible {
                type_filters.push(TypeFilter::irreducible(m, n));
            }
            if let Some(k) = closure_connected {
                type_filters.push(TypeFilter::closure_connected(k));
            }
            let tr = enumerate_types(m, n, &theta_filters, &type_filters)?;
            let lines: Vec<String> = tr.members.iter().map(GraphType::to_text).collect();
            let mut text = lines.clone();
            text.push(tr.summary().to_string());
            Ok(Outcome { holds: true, report: json!({ "summary": tr.summary(), "types": lines }), text })
        }
        Command::Construct { input } => match input.subject()? {
            Subject::Graph(g) => Ok(Outcome { holds: true, text: vec![to_graph6(&g)], report: graph_summary(&g) }),
            Subject::Quadrangle(q, inc) => {
                let g = inc.point_graph()?;
                let report = json!({
                    "q": q,
                    "points": inc.point_count(),
                    "lines": inc.lines(),
                    "point_graph": graph_summary(&g),
                });
                Ok(Outcome { holds: true, text: vec![inc.to_text().trim_end().to_string(), to_graph6(&g)], report })
            }
        },
        Command::AnalyzeGeometry { input } => {
            let (g, axioms) = match input.subject()? {
                Subject::Graph(g) => (g, None),
                Subject::Quadrangle(_, inc) => (inc.point_graph()?, Some(inc.axioms_report()?)),
            };
            let ch = cameron_characterization(&g)?;
            let cameron = match ch.expected {
                Some(p) if p.mu > 0 => Some(cameron_inequality(p)?),
                _ => None,
            };
            let mut text = vec![format!("srg: {}", ch.srg.map_or("no".into(), |p| format!("({},{},{},{})", p.v, p.k, p.lambda, p.mu)))];
            text.push(format!("K4-e-free: {}", ch.k4e_free));
            text.push(format!("partial quadrangle: {}", ch.expected.map_or("no".into(), |p| format!("PQ({},{},{})", p.s, p.t, p.mu))));
            if let Some(c) = &cameron {
                text.push(format!("cameron: lhs {} rhs {} holds {} c {}", c.lhs, c.rhs, c.holds, c.c.map_or("undefined".into(), |c| c.to_string())));
            }
            let report = json!({ "graph": graph_summary(&g), "characterization": ch, "incidence_axioms": axioms, "cameron": cameron });
            Ok(Outcome { holds: ch.holds, report, text })
        }
        Command::Triads { input } => {
            let hist = match input.subject()? {
                Subject::Graph(g) => geometry::triad_histogram(&g),
                Subject::Quadrangle(_, inc) => geometry::triad_center_distribution(&inc)?,
            };
            let holds = hist.len() <= 1;
            let text = hist.iter().map(|(c, n)| format!("{c} centres: {n} triads")).collect();
            let report = json!({ "constant": holds, "histogram": hist.iter().map(|(c, n)| (c.to_string(), json!(n))).collect::<serde_json::Map<_, _>>() });
            Ok(Outcome { holds, report, text })
        }
        Command::Selftest { max_order } => {
            if !(1..=7).contains(&max_order) {
                bail!("--max-order must be between 1 and 7");
            }
            let results = selftest::run(max_order)?;
            let holds = results.iter().all(|r| r.violations == 0);
            let text = results.iter().map(|r| format!("{}: {} cases, {} violations", r.name, r.cases, r.violations)).collect();
            let suites: Vec<Value> = results.iter().map(|r| json!({ "name": r.name, "cases": r.cases, "violations": r.violations })).collect();
            Ok(Outcome { holds, report: json!({ "max_order": max_order, "suites": suites }), text })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).format_timestamp(None).init();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            log::warn!("could not size the thread pool: {e}");
        }
    }
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.report).expect("json")),
                Format::Text => out.text.iter().for_each(|l| println!("{l}")),
            }
            ExitCode::from(if out.holds { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
