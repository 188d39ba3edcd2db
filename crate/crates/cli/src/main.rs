use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;
use vertex_visibility::bounds::{
    bounds_report, closed_form, family_bounds_report, BoundsOptions, BoundsReport,
};
use vertex_visibility::generators::{
    generate, np_gadget, random_block_graph, random_connected, random_tree,
};
use vertex_visibility::io::{parse_graph, parse_id_list, write_graph};
use vertex_visibility::solvers::{
    max_leaf_spanning_tree, mu_brute, vv_exact, vx_brute, vx_exact, vx_greedy, Method, SolveResult,
};
use vertex_visibility::visibility::is_visible_from;
use vertex_visibility::witnesses::{witness, SquareFamily};
use vertex_visibility::{Error, FamilySpec, Graph, Settings, VertexSet};

#[derive(Parser)]
#[command(name = "vvis", version, about = "Vertex visibility numbers of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Time limit in seconds for exact solvers.
    #[arg(long, global = true)]
    timeout: Option<f64>,
    /// Worker threads for vv.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Seed for random graph inputs.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, default_value_t = Settings::default().brute_cap)]
    brute_cap: usize,
    #[arg(long, global = true, default_value_t = Settings::default().mu_cap)]
    mu_cap: usize,
    #[arg(long, global = true, default_value_t = Settings::default().alpha_cap)]
    alpha_cap: usize,
    #[arg(long, global = true, default_value_t = Settings::default().maxleaf_cap)]
    maxleaf_cap: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Cover,
    Brute,
    Greedy,
}

/// INPUT is a graph file or a family spec such as `grid:5`, `kxk:3,2`,
/// `random-connected:8,0.4` (random inputs need --seed).
#[derive(Subcommand)]
enum Command {
    /// Write a graph file.
    Gen {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// v_x for one root, with a witness set and shortest-path tree.
    Vx {
        input: String,
        #[arg(long)]
        root: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Cover)]
        method: MethodArg,
    },
    /// vv and a root attaining it.
    Vv { input: String },
    /// Check whether a set of vertices is an x-visibility set.
    Verify {
        input: String,
        #[arg(long)]
        root: usize,
        /// File of 1-based vertex ids.
        #[arg(long)]
        set: PathBuf,
    },
    /// Every known bound for the graph.
    Bounds {
        input: String,
        #[arg(long)]
        root: Option<usize>,
        /// Compute the mutual-visibility number (exponential).
        #[arg(long)]
        mu: bool,
        /// Solve vv exactly.
        #[arg(long)]
        exact: bool,
    },
    /// Build the independent-set gadget.
    Reduce {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Explicit large set for grid:N, prism:N or torus:N.
    Witness { spec: String },
    /// Formula, construction and exact value over a range of n.
    Table {
        family: String,
        #[arg(long, default_value = "4..8")]
        range: String,
        /// Largest n solved exactly.
        #[arg(long, default_value_t = 0)]
        exact_max: usize,
    },
    /// Maximum number of leaves in a spanning tree.
    Maxleaf { input: String },
    /// Mutual-visibility number.
    Mu { input: String },
}

enum Failure {
    Compute(Error),
    Usage(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::WitnessRejected { .. } => Failure::Verify(e.to_string()),
            e => Failure::Compute(e),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}

fn settings(cli: &Cli) -> Result<Settings, Failure> {
    let timeout = match cli.timeout {
        Some(t) if !(t.is_finite() && t >= 0.0) => {
            return Err(Failure::Usage(format!("bad timeout {t}")));
        }
        t => t.map(Duration::from_secs_f64),
    };
    if cli.jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    Ok(Settings {
        brute_cap: cli.brute_cap,
        mu_cap: cli.mu_cap,
        alpha_cap: cli.alpha_cap,
        maxleaf_cap: cli.maxleaf_cap,
        timeout,
        jobs: cli.jobs,
    })
}

const FAMILIES: [&str; 11] = [
    "path",
    "cycle",
    "complete",
    "star",
    "double_star",
    "cocktail",
    "grid",
    "prism",
    "torus",
    "kxk",
    "figure1",
];
const RANDOM: [&str; 3] = ["random-connected", "random-tree", "random-block"];

struct Input {
    graph: Graph,
    spec: Option<FamilySpec>,
}

fn load(input: &str, seed: Option<u64>) -> Result<Input, Failure> {
    if let Some((name, args)) = input.split_once(':') {
        if !Path::new(input).exists() {
            if FAMILIES.contains(&name) {
                let spec: FamilySpec = input
                    .parse()
                    .map_err(|e: Error| Failure::Usage(e.to_string()))?;
                return Ok(Input {
                    graph: generate(&spec)?,
                    spec: Some(spec),
                });
            }
            if RANDOM.contains(&name) {
                return Ok(Input {
                    graph: random_input(name, args, seed)?,
                    spec: None,
                });
            }
        }
    }
    let text = fs::read_to_string(input)
        .map_err(|e| Failure::Usage(format!("cannot read {input}: {e}")))?;
    let graph = parse_graph(&text).map_err(|e| Failure::Usage(format!("{input}: {e}")))?;
    Ok(Input { graph, spec: None })
}

fn random_input(name: &str, args: &str, seed: Option<u64>) -> Result<Graph, Failure> {
    let seed = seed.ok_or_else(|| Failure::Usage(format!("{name} needs --seed")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts: Vec<&str> = args.split(',').map(str::trim).collect();
    let bad = || Failure::Usage(format!("cannot parse {name}:{args}"));
    let int = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let g = match (name, parts.as_slice()) {
        ("random-connected", [n, p]) => {
            random_connected(int(n)?, p.parse::<f64>().map_err(|_| bad())?, &mut rng)?
        }
        ("random-tree", [n]) if int(n)? >= 1 => random_tree(int(n)?, &mut rng)?,
        ("random-block", [n, k]) => random_block_graph(int(n)?, int(k)?, &mut rng)?,
        _ => return Err(bad()),
    };
    Ok(g)
}

fn root_id(g: &Graph, root: usize) -> Result<usize, Failure> {
    if root == 0 || root > g.n() {
        return Err(Failure::Usage(format!(
            "root {root} is not a vertex of a graph on {} vertices",
            g.n()
        )));
    }
    Ok(root - 1)
}

fn ids(s: &VertexSet) -> String {
    s.to_one_based()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        ),
        Format::Text => print!("{}", text()),
    }
}

fn write_or_print(path: &Option<PathBuf>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let s = settings(cli)?;
    let fmt = cli.format;
    match &cli.command {
        Command::Gen { input, output } => {
            let g = load(input, cli.seed)?.graph;
            write_or_print(output, &write_graph(&g))
        }
        Command::Vx {
            input,
            root,
            method,
        } => {
            let g = load(input, cli.seed)?.graph;
            let x = root_id(&g, *root)?;
            let r = match method {
                MethodArg::Cover => vx_exact(&g, x, &s)?,
                MethodArg::Brute => vx_brute(&g, x, &s)?,
                MethodArg::Greedy => vx_greedy(&g, x)?,
            };
            emit(fmt, &r, || solve_text("v_x", &r));
            Ok(())
        }
        Command::Vv { input } => {
            let g = load(input, cli.seed)?.graph;
            let r = vv_exact(&g, &s)?;
            emit(fmt, &r, || solve_text("vv", &r.best));
            Ok(())
        }
        Command::Verify { input, root, set } => verify(cli, input, *root, set),
        Command::Bounds {
            input,
            root,
            mu,
            exact,
        } => {
            let inp = load(input, cli.seed)?;
            let opts = BoundsOptions {
                root: root.map(|r| root_id(&inp.graph, r)).transpose()?,
                compute_mu: *mu,
                compute_exact: *exact,
            };
            let report = match &inp.spec {
                Some(spec) => family_bounds_report(spec, &inp.graph, &opts, &s)?,
                None => bounds_report(&inp.graph, &opts, &s)?,
            };
            emit(fmt, &report, || bounds_text(&report));
            Ok(())
        }
        Command::Reduce { input, output } => {
            let g = load(input, cli.seed)?.graph;
            let r = np_gadget(&g)?;
            let mut text = format!("c apex {}\nc k_offset {}\n", r.apex + 1, r.k_offset);
            text.push_str(&write_graph(&r.gprime));
            let summary = json!({
                "n": r.gprime.n(),
                "m": r.gprime.m(),
                "apex": r.apex + 1,
                "k_offset": r.k_offset,
                "edge_vertices": r.edge_vertex_map.iter()
                    .map(|&((u, v), e)| json!({"edge": [u + 1, v + 1], "vertex": e + 1}))
                    .collect::<Vec<_>>(),
                "graph": write_graph(&r.gprime),
            });
            match (output, fmt) {
                (Some(_), _) => {
                    write_or_print(output, &text)?;
                    emit(fmt, &summary, || {
                        format!(
                            "apex {} k_offset {} n {} m {}\n",
                            r.apex + 1,
                            r.k_offset,
                            r.gprime.n(),
                            r.gprime.m()
                        )
                    });
                    Ok(())
                }
                (None, Format::Json) => {
                    emit(fmt, &summary, String::new);
                    Ok(())
                }
                (None, Format::Text) => write_or_print(&None, &text),
            }
        }
        Command::Witness { spec } => {
            let (family, n) = square_spec(spec)?;
            let w = witness(family, n)?;
            emit(fmt, &w, || {
                format!(
                    "{}:{} root ({}, {}) id {} size {} formula {} verified\nset: {}\n",
                    family.name(),
                    n,
                    w.root_coords.0,
                    w.root_coords.1,
                    w.root + 1,
                    w.set.len(),
                    w.claimed_size,
                    ids(&w.set)
                )
            });
            Ok(())
        }
        Command::Table {
            family,
            range,
            exact_max,
        } => table(fmt, family, range, *exact_max, &s),
        Command::Maxleaf { input } => {
            let g = load(input, cli.seed)?.graph;
            let r = max_leaf_spanning_tree(&g, &s)?;
            emit(fmt, &r, || {
                format!(
                    "leaves = {}\nconnected dominating set: {}\n",
                    r.value,
                    ids(&r.cds)
                )
            });
            Ok(())
        }
        Command::Mu { input } => {
            let g = load(input, cli.seed)?.graph;
            let set = mu_brute(&g, &s)?;
            let value = set.len();
            emit(fmt, &json!({"value": value, "set": set}), || {
                format!("mu = {value}\nset: {}\n", ids(&set))
            });
            Ok(())
        }
    }
}

fn solve_text(label: &str, r: &SolveResult) -> String {
    let method = match r.method {
        Method::CoverBnb => "exact",
        Method::Brute => "brute force",
        Method::Greedy => "greedy lower bound",
    };
    let mut out = format!(
        "{label} = {} (root {}, {method})\nwitness: {}\n",
        r.value,
        r.root + 1,
        ids(&r.witness_set)
    );
    if let Some(t) = &r.tree {
        let parents: Vec<String> =
            t.0.iter()
                .map(|p| p.map_or("-".into(), |p| (p + 1).to_string()))
                .collect();
        writeln!(out, "parents: {}", parents.join(" ")).unwrap();
    }
    out
}

fn verify(cli: &Cli, input: &str, root: usize, set: &Path) -> Outcome {
    let g = load(input, cli.seed)?.graph;
    let x = root_id(&g, root)?;
    let text = fs::read_to_string(set)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", set.display())))?;
    let members = parse_id_list(&text, g.n())
        .map_err(|e| Failure::Usage(format!("{}: {e}", set.display())))?;
    let s = VertexSet::from_ids(g.n(), members.iter().copied())?;
    let (valid, unseen) = if s.contains(x) {
        (false, VertexSet::new(g.n()))
    } else {
        let mut unseen = VertexSet::new(g.n());
        for y in s.iter() {
            if !is_visible_from(&g, x, &s, y)? {
                unseen.insert(y);
            }
        }
        (unseen.is_empty(), unseen)
    };
    let reason = if s.contains(x) {
        format!("the root {root} is in the set")
    } else {
        format!("not visible from {root}: {}", ids(&unseen))
    };
    let verdict = json!({
        "root": root,
        "size": s.len(),
        "valid": valid,
        "unseen": unseen,
    });
    emit(cli.format, &verdict, || {
        if valid {
            format!("valid: {} vertices visible from root {root}\n", s.len())
        } else {
            format!("invalid: {reason}\n")
        }
    });
    if valid {
        Ok(())
    } else {
        Err(Failure::Verify(reason))
    }
}

fn bounds_text(r: &BoundsReport) -> String {
    let mut out = format!(
        "n = {}, m = {}, max degree = {}\n",
        r.graph.n, r.graph.m, r.graph.delta
    );
    for b in &r.bounds {
        let kind = format!("{:?}", b.kind).to_lowercase();
        let value = if b.applicable {
            b.value.to_string()
        } else {
            "n/a".into()
        };
        writeln!(
            out,
            "{:<22} {:<6} {:>6}  {}",
            b.name, kind, value, b.provenance
        )
        .unwrap();
    }
    if let Some(e) = r.exact {
        writeln!(out, "exact vv = {} at root {}", e.value, e.root + 1).unwrap();
    }
    for note in &r.notes {
        writeln!(out, "note: {note}").unwrap();
    }
    out
}

fn square_spec(spec: &str) -> Result<(SquareFamily, usize), Failure> {
    let usage = || Failure::Usage(format!("expected grid:N, prism:N or torus:N, got {spec:?}"));
    let (name, n) = spec.split_once(':').ok_or_else(usage)?;
    let family = SquareFamily::parse(name).map_err(|_| usage())?;
    let n = n.trim().parse().map_err(|_| usage())?;
    Ok((family, n))
}

fn parse_range(range: &str) -> Result<(usize, usize), Failure> {
    let usage = || Failure::Usage(format!("expected a range like 4..8, got {range:?}"));
    let (a, b) = range.split_once("..").ok_or_else(usage)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b): (usize, usize) = (
        a.trim().parse().map_err(|_| usage())?,
        b.trim().parse().map_err(|_| usage())?,
    );
    if a > b {
        return Err(usage());
    }
    Ok((a, b))
}

#[derive(Serialize)]
struct Row {
    n: usize,
    closed_form: usize,
    witness: usize,
    exact: Option<usize>,
}

fn table(fmt: Format, family: &str, range: &str, exact_max: usize, s: &Settings) -> Outcome {
    let family = SquareFamily::parse(family)
        .map_err(|_| Failure::Usage(format!("table needs grid, prism or torus, got {family:?}")))?;
    let (lo, hi) = parse_range(range)?;
    let mut rows = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    for n in lo..=hi {
        let spec: FamilySpec = format!("{}:{n}", family.name()).parse()?;
        let cf = closed_form(&spec)?;
        if let Some(note) = cf.note {
            if !notes.contains(&note) {
                notes.push(note);
            }
        }
        let w = witness(family, n)?;
        let exact = if n <= exact_max {
            Some(vv_exact(&generate(&spec)?, s)?.value)
        } else {
            None
        };
        rows.push(Row {
            n,
            closed_form: cf.value,
            witness: w.set.len(),
            exact,
        });
    }
    emit(
        fmt,
        &json!({"family": family.name(), "rows": rows, "notes": notes}),
        || {
            let mut out = format!(
                "{:>4} {:>12} {:>8} {:>6}\n",
                "n", "closed_form", "witness", "exact"
            );
            for r in &rows {
                let exact = r.exact.map_or("-".into(), |v| v.to_string());
                writeln!(
                    out,
                    "{:>4} {:>12} {:>8} {:>6}",
                    r.n, r.closed_form, r.witness, exact
                )
                .unwrap();
            }
            for note in &notes {
                writeln!(out, "note: {note}").unwrap();
            }
            out
        },
    );
    Ok(())
}
