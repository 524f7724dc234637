use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use induced_trees::coloring::{
    check_outtree_coloring, check_parity_coloring, greedy_refinement, level_coloring,
    natural_orientation, parity_coloring,
};
use induced_trees::embed::{
    bikernel_tree_embedding, br_tree_embedding, dag_tree_embedding, good_tree_search,
    rainbow_paths_harness, stuck_state_diagnostic, Orderings,
};
use induced_trees::experiment::{run_suite, Suite, SuiteConfig};
use induced_trees::generators::{
    complete_ary_tree, named_graph, random_dag, random_graph, random_tree, rng,
    synth_outtree_colored, triangle_free_process, Constraint, GraphFilter, NamedGraph, SynthConfig,
};
use induced_trees::graph::{
    br_witness, exact_chromatic, girth, is_proper, k2r_witness, verify_embedding, Coloring,
    OrientedGraph, RootedOrientedTree, UndirectedGraph,
};
use induced_trees::guards::Guards;
use induced_trees::io::{
    parse_coloring, parse_digraph, parse_graph, parse_tree, parse_undirected, parse_vertex_list,
    serialize_coloring, serialize_digraph, serialize_graph, serialize_tree, ParsedGraph,
};
use induced_trees::oracle::{
    aravind_scan, contains_induced_copy, enumerate_induced_rainbow_paths, mu,
};
use induced_trees::{Error, Result};

#[derive(Parser)]
#[command(
    name = "induced-trees",
    version,
    about = "Induced rainbow paths and oriented trees in colored graphs"
)]
struct Cli {
    /// Base seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Overrides every vertex-count guard of the exhaustive procedures.
    #[arg(long, global = true)]
    guard_n: Option<usize>,
    /// Writes a JSON report of the command's result here.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate graphs, digraphs and trees.
    #[command(subcommand)]
    Gen(Gen),
    /// Greedy refinement of a proper coloring.
    Refine {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Natural orientation of a colored graph, or a level or parity coloring of a DAG.
    Orient {
        #[arg(long)]
        input: PathBuf,
        /// Orient the graph from larger to smaller color.
        #[arg(long, conflicts_with_all = ["levels", "parity"])]
        coloring: Option<PathBuf>,
        /// Level coloring of the input DAG by peeling sinks.
        #[arg(long, conflicts_with = "parity")]
        levels: bool,
        /// Parity coloring of the input DAG.
        #[arg(long)]
        parity: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Property checkers.
    Verify(Verify),
    /// Rainbow induced paths through the decreasing tree search over color orderings.
    FindRainbowPath {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        s: usize,
        /// `all` or `sample:N`.
        #[arg(long, default_value = "all")]
        orderings: String,
    },
    /// Induced oriented tree search.
    FindTree {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        tree: PathBuf,
        /// Supplied coloring (dag: out-tree coloring; girth: required).
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Girth bound used to diagnose a stuck girth search.
        #[arg(long, default_value_t = 5)]
        girth: usize,
    },
    /// Brute-force oracles.
    #[command(subcommand)]
    Oracle(Oracle),
    /// Named experiment suites.
    Experiment(Experiment),
}

#[derive(Subcommand)]
enum Gen {
    /// A named graph: petersen, grotzsch, brinkmann, cycle:N, path:N, complete:N, kneser:N:K.
    Named {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// G(n, p), optionally filtered.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        /// `none`, `triangle-free` or `girth:G`.
        #[arg(long, default_value = "none")]
        filter: String,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random triangle-free process.
    TriangleFree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random DAG.
    Dag {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Digraph built around a k-color out-tree coloring.
    Synth {
        #[arg(long)]
        k: usize,
        /// `none`, `br:R` or `girth:G`.
        #[arg(long, default_value = "br:2")]
        constraint: String,
        /// The reversed color order is an out-tree coloring of the reverse too.
        #[arg(long)]
        two_sided: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
    /// A tree.
    Tree {
        #[arg(long, value_enum)]
        kind: TreeShape,
        /// Vertices (levels for `ary`).
        #[arg(long)]
        s: usize,
        /// Branching for `ary`.
        #[arg(long, default_value_t = 2)]
        branching: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeShape {
    Path,
    OutStar,
    InStar,
    Random,
    RandomOut,
    Ary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Dag,
    Parity,
    Br,
    Girth,
}

#[derive(Args)]
struct Verify {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    girth: bool,
    #[arg(long)]
    acyclic: bool,
    #[arg(long)]
    chromatic: bool,
    /// Coloring to check for properness.
    #[arg(long)]
    proper: Option<PathBuf>,
    /// Coloring to check as an out-tree coloring.
    #[arg(long)]
    outtree: Option<PathBuf>,
    /// Coloring to check as a parity coloring.
    #[arg(long)]
    parity: Option<PathBuf>,
    /// `k2r:R` or `br:R`.
    #[arg(long)]
    forbidden: Option<String>,
    /// Image file (one host vertex per tree vertex); needs `--tree`.
    #[arg(long, requires = "tree")]
    embedding: Option<PathBuf>,
    #[arg(long)]
    tree: Option<PathBuf>,
    /// Coloring for the rainbow and decreasing flags of `--embedding`.
    #[arg(long)]
    coloring: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Oracle {
    /// All induced rainbow paths on `s` vertices.
    Paths {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        s: usize,
    },
    /// Longest induced rainbow path.
    Mu {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Induced copy of a tree.
    Contains {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        tree: PathBuf,
    },
    /// Induced rainbow chromatic-number paths under sampled optimal colorings.
    Aravind {
        /// Graph files to scan.
        inputs: Vec<PathBuf>,
        #[arg(long, default_value_t = 10)]
        per_graph: usize,
    },
}

#[derive(Args)]
struct Experiment {
    suite: Suite,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    seeds: Option<usize>,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    girth: Option<usize>,
    #[arg(long)]
    csv_out: Option<PathBuf>,
}

/// What a command produced: text for stdout, a JSON value for `--json-out`,
/// and whether every checked property or claimed guarantee held.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn new(text: impl Into<String>, json: impl Serialize, ok: bool) -> Result<Self> {
        let json = serde_json::to_value(json).map_err(|e| Error::Io(e.to_string()))?;
        Ok(Report {
            text: text.into(),
            json,
            ok,
        })
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Writes to `out` when given and returns a confirmation, else returns the text itself.
fn emit(out: &Option<PathBuf>, text: String) -> Result<String> {
    match out {
        Some(p) => {
            write(p, &text)?;
            Ok(format!("wrote {}", p.display()))
        }
        None => Ok(text.trim_end().to_string()),
    }
}

fn load_coloring(path: &Path, n: usize) -> Result<Coloring> {
    parse_coloring(&read(path)?, n)
}

fn parse_tagged(s: &str, tag: &str) -> Option<usize> {
    s.strip_prefix(tag)?.strip_prefix(':')?.parse().ok()
}

fn parse_filter(s: &str) -> Result<GraphFilter> {
    match s {
        "none" => Ok(GraphFilter::None),
        "triangle-free" => Ok(GraphFilter::TriangleFree),
        _ => parse_tagged(s, "girth")
            .map(GraphFilter::GirthAtLeast)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown filter `{s}`"))),
    }
}

fn parse_constraint(s: &str) -> Result<Constraint> {
    if s == "none" {
        return Ok(Constraint::None);
    }
    parse_tagged(s, "br")
        .map(Constraint::BrFree)
        .or_else(|| parse_tagged(s, "girth").map(Constraint::GirthAtLeast))
        .ok_or_else(|| Error::InvalidParameter(format!("unknown constraint `{s}`")))
}

fn parse_orderings(s: &str, seed: u64) -> Result<Orderings> {
    if s == "all" {
        return Ok(Orderings::All);
    }
    parse_tagged(s, "sample")
        .map(|count| Orderings::Sample { count, seed })
        .ok_or_else(|| {
            Error::InvalidParameter(format!("orderings must be `all` or `sample:N`, got `{s}`"))
        })
}

fn run(cli: &Cli) -> Result<Report> {
    let guards = match cli.guard_n {
        Some(n) => Guards::from_env().with_vertex_guard(n),
        None => Guards::from_env(),
    };
    let seed = cli.seed;
    match &cli.command {
        Command::Gen(g) => generate(g, seed),
        Command::Refine {
            input,
            coloring,
            out,
        } => {
            let g = parse_graph(&read(input)?)?;
            let beta = load_coloring(coloring, g.vertex_count())?;
            let res = greedy_refinement(g.view(), &beta)?;
            let text = emit(out, serialize_coloring(&res.alpha))?;
            Report::new(text, &res, true)
        }
        Command::Orient {
            input,
            coloring,
            levels,
            parity,
            out,
        } => {
            if let Some(c) = coloring {
                let g = parse_undirected(&read(input)?)?;
                let c = load_coloring(c, g.vertex_count())?;
                let d = natural_orientation(&g, &c)?;
                let text = emit(out, serialize_digraph(&d))?;
                return Report::new(text, json!({ "arcs": d.arcs().collect::<Vec<_>>() }), true);
            }
            let d = parse_digraph(&read(input)?)?;
            let c = if *parity {
                parity_coloring(&d, guards.kernel_n)?.0
            } else if *levels {
                level_coloring(&d)?
            } else {
                return Err(Error::InvalidParameter(
                    "orient needs --coloring, --levels or --parity".into(),
                ));
            };
            let text = emit(out, serialize_coloring(&c))?;
            Report::new(text, &c, true)
        }
        Command::Verify(v) => verify(v, &guards),
        Command::FindRainbowPath {
            input,
            coloring,
            s,
            orderings,
        } => {
            let g = parse_undirected(&read(input)?)?;
            let beta = load_coloring(coloring, g.vertex_count())?;
            let orderings = parse_orderings(orderings, seed)?;
            let res = rainbow_paths_harness(&g, &beta, *s, orderings, &guards)?;
            let mut text = format!(
                "{} distinct paths from {} runs ({} successes)",
                res.distinct(),
                res.runs,
                res.successes
            );
            for p in &res.paths {
                text.push_str(&format!("\n{:?}", p.vertices()));
            }
            let ok = res.distinct() > 0 && res.unverified == 0;
            Report::new(text, &res, ok)
        }
        Command::FindTree {
            variant,
            input,
            tree,
            coloring,
            r,
            girth: g,
        } => {
            let d = parse_digraph(&read(input)?)?;
            let t = parse_tree(&read(tree)?)?;
            let c = coloring
                .as_ref()
                .map(|p| load_coloring(p, d.vertex_count()))
                .transpose()?;
            find_tree(*variant, &d, &t, c.as_ref(), *r, *g, &guards)
        }
        Command::Oracle(o) => oracle(o, seed, &guards),
        Command::Experiment(e) => {
            let mut cfg = SuiteConfig::new(e.suite);
            cfg.seed = seed;
            cfg.guards = guards;
            if let Some(r) = e.r {
                cfg.r = r;
            }
            if let Some(s) = e.s {
                cfg.s = s;
            }
            if let Some(n) = e.seeds {
                cfg.seeds = n;
            }
            if let Some(n) = e.count {
                cfg.count = n;
            }
            if let Some(g) = e.girth {
                cfg.girth = g;
            }
            let report = run_suite(&cfg)?;
            if let Some(p) = &e.csv_out {
                let f = fs::File::create(p)
                    .map_err(|err| Error::Io(format!("{}: {err}", p.display())))?;
                report.write_csv(f)?;
            }
            let s = &report.summary;
            let mut text = format!(
                "{}: {}/{} records succeeded",
                e.suite, s.successes, s.records
            );
            for id in s.failed.iter().take(20) {
                text.push_str(&format!("\nfailed: {id}"));
            }
            let ok = report.passed();
            Report::new(text, &report, ok)
        }
    }
}

fn generate(g: &Gen, seed: u64) -> Result<Report> {
    let (text, out) = match g {
        Gen::Named { name, out } => {
            let name: NamedGraph = name.parse()?;
            (serialize_graph(&named_graph(name)?), out)
        }
        Gen::Random {
            n,
            p,
            filter,
            budget,
            out,
        } => {
            let g = random_graph(*n, *p, seed, parse_filter(filter)?, *budget)?;
            (serialize_graph(&g), out)
        }
        Gen::TriangleFree { n, out } => (serialize_graph(&triangle_free_process(*n, seed)), out),
        Gen::Dag { n, p, out } => (serialize_digraph(&random_dag(*n, *p, seed)?), out),
        Gen::Synth {
            k,
            constraint,
            two_sided,
            out,
            coloring_out,
        } => {
            let mut cfg = SynthConfig::new(*k, parse_constraint(constraint)?, seed);
            cfg.two_sided = *two_sided;
            let inst = synth_outtree_colored(&cfg)?;
            let c = serialize_coloring(&inst.alpha);
            match coloring_out {
                Some(p) => write(p, &c)?,
                None if out.is_none() => {
                    let text = format!("{}{}", serialize_digraph(&inst.digraph), c);
                    return Report::new(
                        text.trim_end(),
                        json!({ "vertices": inst.digraph.vertex_count() }),
                        true,
                    );
                }
                None => {}
            }
            (serialize_digraph(&inst.digraph), out)
        }
        Gen::Tree {
            kind,
            s,
            branching,
            out,
        } => {
            let mut rng = rng(seed);
            let t = match kind {
                TreeShape::Path => RootedOrientedTree::path(*s)?,
                TreeShape::OutStar => RootedOrientedTree::out_star(*s)?,
                TreeShape::InStar => RootedOrientedTree::in_star(*s)?,
                TreeShape::Random => random_tree(*s, false, &mut rng)?,
                TreeShape::RandomOut => random_tree(*s, true, &mut rng)?,
                TreeShape::Ary => complete_ary_tree(*branching, *s)?,
            };
            (serialize_tree(&t), out)
        }
    };
    let text = emit(out, text)?;
    Report::new(text, json!({ "seed": seed }), true)
}

fn verify(v: &Verify, guards: &Guards) -> Result<Report> {
    let host = parse_graph(&read(&v.input)?)?;
    let n = host.vertex_count();
    let view = host.view();
    let mut lines = Vec::new();
    let mut json = serde_json::Map::new();
    let mut ok = true;
    let mut record = |key: &str, shown: String, value: Value, holds: bool| {
        lines.push(if key == "girth" {
            shown
        } else {
            format!("{key}: {shown}")
        });
        json.insert(key.to_string(), value);
        ok &= holds;
    };

    if v.girth {
        let g = girth(view);
        record("girth", g.to_string(), json!(g), true);
    }
    if v.acyclic {
        let holds = match &host {
            ParsedGraph::Digraph(d) => d.is_acyclic(),
            ParsedGraph::Graph(_) => {
                return Err(Error::InvalidParameter("--acyclic needs a digraph".into()))
            }
        };
        record("acyclic", holds.to_string(), json!(holds), holds);
    }
    if v.chromatic {
        let c = exact_chromatic(view, guards.chromatic_n)?;
        record(
            "chromatic",
            c.num_colors().to_string(),
            json!(c.num_colors()),
            true,
        );
    }
    if let Some(p) = &v.proper {
        let holds = is_proper(view, &load_coloring(p, n)?)?;
        record("proper", holds.to_string(), json!(holds), holds);
    }
    let digraph = || match &host {
        ParsedGraph::Digraph(d) => Ok(d),
        ParsedGraph::Graph(_) => Err(Error::InvalidParameter("this check needs a digraph".into())),
    };
    if let Some(p) = &v.outtree {
        let bad = check_outtree_coloring(digraph()?, &load_coloring(p, n)?)?;
        let shown = bad.map_or("true".to_string(), |b| {
            format!("false (vertex {} lacks color {})", b.vertex, b.color)
        });
        record("outtree", shown, json!(bad), bad.is_none());
    }
    if let Some(p) = &v.parity {
        let bad = check_parity_coloring(digraph()?, &load_coloring(p, n)?)?;
        let shown = bad.map_or("true".to_string(), |b| {
            format!("false (vertex {} lacks color {})", b.vertex, b.color)
        });
        record("parity", shown, json!(bad), bad.is_none());
    }
    if let Some(f) = &v.forbidden {
        let w = if let Some(r) = parse_tagged(f, "k2r") {
            k2r_witness(view, r)?
        } else if let Some(r) = parse_tagged(f, "br") {
            br_witness(digraph()?, r)?
        } else {
            return Err(Error::InvalidParameter(format!("unknown pattern `{f}`")));
        };
        let shown = match &w {
            None => "free".to_string(),
            Some(w) => format!("pair {:?} common {:?}", w.pair, w.common),
        };
        record("forbidden", shown, json!(w), w.is_none());
    }
    if let (Some(e), Some(t)) = (&v.embedding, &v.tree) {
        let image = parse_vertex_list(&read(e)?)?;
        let t = parse_tree(&read(t)?)?;
        let c = v
            .coloring
            .as_ref()
            .map(|p| load_coloring(p, n))
            .transpose()?;
        let verdict = verify_embedding(view, &t, &image, c.as_ref())?;
        record(
            "embedding",
            format!("{verdict:?}"),
            json!(verdict),
            verdict.holds(),
        );
    }
    if lines.is_empty() {
        return Err(Error::InvalidParameter(
            "verify needs at least one check".into(),
        ));
    }
    Report::new(lines.join("\n"), Value::Object(json), ok)
}

fn find_tree(
    variant: Variant,
    d: &OrientedGraph,
    t: &RootedOrientedTree,
    coloring: Option<&Coloring>,
    r: usize,
    g: usize,
    guards: &Guards,
) -> Result<Report> {
    let (embedding, json) = match variant {
        Variant::Dag => {
            let out = dag_tree_embedding(d, t, coloring)?;
            (out.embedding().cloned(), serde_json::to_value(&out))
        }
        Variant::Parity => {
            let out = bikernel_tree_embedding(d, t, guards.kernel_n)?;
            (out.outcome.embedding().cloned(), serde_json::to_value(&out))
        }
        Variant::Br => {
            let out = br_tree_embedding(d, t, r)?;
            (out.embedding().cloned(), serde_json::to_value(&out))
        }
        Variant::Girth => {
            let alpha = coloring.ok_or_else(|| {
                Error::InvalidParameter("the girth variant needs --coloring".into())
            })?;
            let out = good_tree_search(d, d, alpha, t)?;
            let diagnostic = match &out {
                o if o.is_embedded() => None,
                o if o.trace().placed.len() >= g && g >= 5 => {
                    Some(stuck_state_diagnostic(o.trace(), d, g)?)
                }
                _ => None,
            };
            let json = json!({ "outcome": out, "diagnostic": diagnostic });
            (out.embedding().cloned(), Ok(json))
        }
    };
    let json = json.map_err(|e| Error::Io(e.to_string()))?;
    match embedding {
        Some(e) => {
            let text = format!("embedded {:?}", e.image);
            Report::new(text, json, e.verdict.holds())
        }
        None => Report::new("stuck", json, false),
    }
}

fn oracle(o: &Oracle, seed: u64, guards: &Guards) -> Result<Report> {
    match o {
        Oracle::Paths { input, coloring, s } => {
            let g = parse_graph(&read(input)?)?;
            let c = load_coloring(coloring, g.vertex_count())?;
            let paths = enumerate_induced_rainbow_paths(g.view(), &c, *s, guards)?;
            let mut text = format!("{} paths", paths.len());
            for p in &paths {
                text.push_str(&format!("\n{:?}", p.vertices()));
            }
            Report::new(text, &paths, true)
        }
        Oracle::Mu { input, coloring } => {
            let g = parse_graph(&read(input)?)?;
            let c = load_coloring(coloring, g.vertex_count())?;
            let m = mu(g.view(), &c, guards)?;
            Report::new(m.to_string(), m, true)
        }
        Oracle::Contains { input, tree } => {
            let g = parse_graph(&read(input)?)?;
            let t = parse_tree(&read(tree)?)?;
            let found = contains_induced_copy(g.view(), &t, guards.contains_n)?;
            let text = match &found {
                Some(image) => format!("found {image:?}"),
                None => "none".to_string(),
            };
            Report::new(text, &found, true)
        }
        Oracle::Aravind { inputs, per_graph } => {
            let corpus = inputs
                .iter()
                .map(|p| parse_undirected(&read(p)?))
                .collect::<Result<Vec<UndirectedGraph>>>()?;
            let report = aravind_scan(&corpus, *per_graph, seed, guards)?;
            let mut text = format!(
                "{} graphs, {} colorings checked, {} skipped, {} counterexamples",
                report.graphs_scanned,
                report.instances_checked,
                report.skipped.len(),
                report.counterexamples.len()
            );
            for c in &report.counterexamples {
                text.push_str(&format!(
                    "\ncounterexample: {} coloring {:?}",
                    inputs[c.graph_index].display(),
                    c.colors
                ));
            }
            let ok = report.counterexamples.is_empty();
            Report::new(text, &report, ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if !report.text.is_empty() {
                use std::io::Write;
                // a closed pipe downstream is not an error
                let _ = writeln!(std::io::stdout(), "{}", report.text);
            }
            if let Some(p) = &cli.json_out {
                let text =
                    serde_json::to_string_pretty(&report.json).expect("json values serialize");
                if let Err(e) = write(p, &text) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
