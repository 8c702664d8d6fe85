mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixedcolor::bounds::chromatic_bounds;
use mixedcolor::expr::{evaluate_with, ndm_expression, parse_expr, tc_expression, EvalPolicy, TC_DEFAULT_CAP};
use mixedcolor::graph::io::{load_coloring, load_graph, save_coloring, save_graph};
use mixedcolor::params::parameter_report;
use mixedcolor::random::{random_mixed_graph, rng};
use mixedcolor::reductions::{
    reduce_list_coloring, reduce_multicolored_clique, reduce_scheduling, reduce_superstring,
    split_superstring_expression, Family, ListColoringInstance, SchedulingInstance, SuperstringInstance,
    FAMILY_NAMES,
};
use mixedcolor::solvers::ndm::{build_program, preorders_for, TypeModel};
use mixedcolor::solvers::{chi_exact, decide, Method, SolveOptions, SolveStats, SolverError, TreeDecomposition};
use mixedcolor::{check_proper, Budget, Coloring, MixedGraph, Violation};
use serde::Deserialize;

use report::Report;

#[derive(Parser)]
#[command(name = "mixedcolor", version, about = "Coloring mixed graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Search-node budget for solvers and exact parameters.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_LIMIT)]
    budget: u64,
    /// Seed for random generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Decide k-colorability, or compute χ when --k is absent.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "twdp")]
        method: Method,
        /// PACE `.td` decomposition for twdp.
        #[arg(long)]
        td: Option<PathBuf>,
        /// Write the witness coloring here.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Write the feasibility program of every proper preorder here.
        #[arg(long)]
        dump_ilp: Option<PathBuf>,
    },
    /// Lower and upper bounds on χ.
    Bounds {
        graph: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Structural parameters.
    Params { graph: PathBuf },
    /// Generate a family member, a reduction output or a random graph.
    Gen {
        /// A family name, `random`, or one of `superstring`, `scheduling`,
        /// `list-coloring`, `multicolored-clique`.
        name: String,
        /// Family parameters, the vertex count for `random`, or a JSON
        /// instance file for reductions.
        params: Vec<String>,
        #[arg(long)]
        out: PathBuf,
        /// Split superstring construction.
        #[arg(long)]
        split: bool,
        /// With --split, also write the width-6 expression here.
        #[arg(long)]
        expr_out: Option<PathBuf>,
        #[arg(long, default_value_t = 0.3)]
        edge_p: f64,
        #[arg(long, default_value_t = 0.3)]
        arc_p: f64,
    },
    /// Expression tools.
    Expr {
        #[command(subcommand)]
        op: ExprOp,
    },
    /// Check a coloring certificate against a graph.
    Verify { graph: PathBuf, cert: PathBuf },
}

#[derive(Subcommand)]
enum ExprOp {
    /// Evaluate an expression into a graph.
    Eval {
        expr: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Policy::Strict)]
        policy: Policy,
    },
    /// Expression with one label per mixed type.
    FromNdm {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expression for the transitive closure.
    Tc {
        expr: PathBuf,
        #[arg(long, default_value_t = TC_DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Strict,
    Closure,
}

/// Exit status carried through command handlers.
enum Outcome {
    Yes,
    No,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Run = Result<Outcome, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path, report: &mut Report) -> Result<MixedGraph, Failure> {
    let text = read(path)?;
    report.digest(&text);
    let g = load_graph(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    report.set("n", g.n());
    Ok(g)
}

fn write_cert(path: &Path, c: &Coloring, report: &mut Report) -> Result<(), Failure> {
    write(path, &save_coloring(c))?;
    report.set("cert", path.display().to_string());
    Ok(())
}

fn put_stats(report: &mut Report, s: &SolveStats) {
    report.set("nodes", s.nodes);
    report.set("preorders", s.preorders);
    report.set("max_table", s.max_table);
}

fn solver_failure(e: SolverError) -> Failure {
    match e {
        SolverError::Budget(b) => Failure(format!("budget exhausted: {b}")),
        other => Failure(other.to_string()),
    }
}

fn dump_programs(g: &MixedGraph, k: usize, opts: &SolveOptions, path: &Path) -> Result<(), Failure> {
    let model = TypeModel::new(g);
    let mut out = String::new();
    for (i, p) in preorders_for(&model, k, opts.ndm.mode).iter().enumerate() {
        out.push_str(&format!("# preorder {} ell={} k={k}\n", i + 1, p.ell));
        out.push_str(&build_program(&model, p, k, opts.ndm.encoding).program.dump());
    }
    write(path, &out)
}

#[allow(clippy::too_many_arguments)]
fn solve(
    global: &Global,
    path: &Path,
    k: Option<usize>,
    method: Method,
    td: Option<&Path>,
    cert: Option<&Path>,
    dump_ilp: Option<&Path>,
    report: &mut Report,
) -> Run {
    let g = read_graph(path, report)?;
    let mut opts = SolveOptions {
        budget: global.budget,
        ..SolveOptions::default()
    };
    if let Some(td_path) = td {
        let td = TreeDecomposition::from_pace(&read(td_path)?)?;
        td.validate(&g)?;
        report.set("td_width", td.width());
        opts.td = Some(td);
    }
    report.set("method", method.name());
    match k {
        Some(k) => {
            report.set("k", k);
            if let Some(p) = dump_ilp {
                dump_programs(&g, k, &opts, p)?;
            }
            let res = decide(&g, k, method, &opts).map_err(solver_failure)?;
            report.set("decision", if res.colorable { "yes" } else { "no" });
            put_stats(report, &res.stats);
            if let (Some(c), Some(w)) = (cert, &res.witness) {
                write_cert(c, w, report)?;
            }
            Ok(if res.colorable { Outcome::Yes } else { Outcome::No })
        }
        None => {
            let res = chi_exact(&g, method, &opts).map_err(solver_failure)?;
            report.set("chi", res.chi);
            put_stats(report, &res.stats);
            if let Some(p) = dump_ilp {
                dump_programs(&g, res.chi, &opts, p)?;
            }
            if let Some(c) = cert {
                write_cert(c, &res.witness, report)?;
            }
            Ok(Outcome::Yes)
        }
    }
}

fn bounds(global: &Global, path: &Path, cert: Option<&Path>, report: &mut Report) -> Run {
    let g = read_graph(path, report)?;
    let b = chromatic_bounds(&g, &Budget::new(global.budget));
    report.set("lower", b.lower.combined);
    report.set("upper", b.upper);
    report.set("chi_u", b.lower.chi_u);
    report.set("chi_u_exact", b.lower.chi_u_exact);
    report.set("maxrank", b.lower.maxrank);
    if let Some(c) = cert {
        write_cert(c, &b.upper_witness, report)?;
    }
    Ok(Outcome::Yes)
}

fn params(global: &Global, path: &Path, report: &mut Report) -> Run {
    let g = read_graph(path, report)?;
    let p = parameter_report(&g, &Budget::new(global.budget))?;
    report.set("edges", p.edges);
    report.set("arcs", p.arcs);
    report.set("ndm", p.ndm);
    report.set("ndu", p.ndu);
    report.set("vc", p.vc);
    report.set("omega", p.omega);
    report.set("maxrank", p.maxrank);
    report.set("layers", p.layers);
    Ok(Outcome::Yes)
}

/// List-coloring input; vertices and colors are 1-based.
#[derive(Deserialize)]
struct ListColoringFile {
    n: usize,
    edges: Vec<(usize, usize)>,
    lists: Vec<Vec<usize>>,
    ell: usize,
}

/// Multicolored-clique input; vertices and classes are 1-based.
#[derive(Deserialize)]
struct CliqueFile {
    n: usize,
    edges: Vec<(usize, usize)>,
    classes: Vec<usize>,
}

fn zero_based(n: usize, edges: &[(usize, usize)]) -> Result<MixedGraph, Failure> {
    if edges.iter().any(|&(u, v)| u == 0 || v == 0) {
        return Err(Failure("vertices are 1-based".into()));
    }
    Ok(MixedGraph::new(n, edges.iter().map(|&(u, v)| (u - 1, v - 1)), [])?)
}

fn json_input<T: for<'de> Deserialize<'de>>(params: &[String], report: &mut Report) -> Result<T, Failure> {
    let [path] = params else {
        return Err(Failure("expected one JSON instance file".into()));
    };
    let text = read(Path::new(path))?;
    report.digest(&text);
    serde_json::from_str(&text).map_err(|e| Failure(format!("{path}: {e}")))
}

#[allow(clippy::too_many_arguments)]
fn gen(
    global: &Global,
    name: &str,
    params: &[String],
    out: &Path,
    split: bool,
    expr_out: Option<&Path>,
    edge_p: f64,
    arc_p: f64,
    report: &mut Report,
) -> Run {
    report.set("name", name);
    let (g, k) = match name {
        "superstring" => {
            let inst: SuperstringInstance = json_input(params, report)?;
            let (g, k) = reduce_superstring(&inst, split)?;
            if let Some(p) = expr_out {
                if !split {
                    return Err(Failure("--expr-out needs --split".into()));
                }
                let e = split_superstring_expression(&inst)?;
                write(p, &format!("{e}\n"))?;
                report.set("expr_width", e.width());
            }
            (g, Some(k))
        }
        "scheduling" => {
            let inst: SchedulingInstance = json_input(params, report)?;
            let (g, k) = reduce_scheduling(&inst)?;
            (g, Some(k))
        }
        "list-coloring" => {
            let f: ListColoringFile = json_input(params, report)?;
            let inst = ListColoringInstance {
                graph: zero_based(f.n, &f.edges)?,
                lists: f.lists,
                ell: f.ell,
            };
            let (g, k) = reduce_list_coloring(&inst)?;
            (g, Some(k))
        }
        "multicolored-clique" => {
            let f: CliqueFile = json_input(params, report)?;
            if f.classes.contains(&0) {
                return Err(Failure("classes are 1-based".into()));
            }
            let class_of: Vec<usize> = f.classes.iter().map(|c| c - 1).collect();
            let inst = reduce_multicolored_clique(&zero_based(f.n, &f.edges)?, &class_of)?;
            // the list instance becomes a mixed graph in one more step
            let (g, k) = reduce_list_coloring(&inst)?;
            (g, Some(k))
        }
        "random" => {
            let [n] = params else {
                return Err(Failure("random takes the vertex count".into()));
            };
            let n: usize = n.parse().map_err(|_| Failure(format!("bad vertex count '{n}'")))?;
            if !(0.0..=1.0).contains(&edge_p) || !(0.0..=1.0).contains(&arc_p) {
                return Err(Failure("densities must lie in [0, 1]".into()));
            }
            let mut r = rng(global.seed);
            let g = random_mixed_graph(&mut r, n, edge_p, arc_p);
            report.set("seed", global.seed);
            (g, None)
        }
        family => {
            let f: Family = family.parse().map_err(|_| {
                Failure(format!(
                    "unknown generator '{family}' (families: {}; reductions: superstring, scheduling, list-coloring, multicolored-clique; random)",
                    FAMILY_NAMES.join(", ")
                ))
            })?;
            let nums = params
                .iter()
                .map(|p| p.parse::<usize>().map_err(|_| Failure(format!("bad parameter '{p}'"))))
                .collect::<Result<Vec<_>, _>>()?;
            (f.build(&nums)?, None)
        }
    };
    write(out, &save_graph(&g))?;
    report.set("n", g.n());
    report.set("edges", g.edges().len());
    report.set("arcs", g.arcs().len());
    if let Some(k) = k {
        report.set("k", k);
    }
    report.set("out", out.display().to_string());
    Ok(Outcome::Yes)
}

fn expr(op: &ExprOp, report: &mut Report) -> Run {
    match op {
        ExprOp::Eval { expr, out, policy } => {
            let text = read(expr)?;
            report.digest(&text);
            let e = parse_expr(&text)?;
            let policy = match policy {
                Policy::Strict => EvalPolicy::Strict,
                Policy::Closure => EvalPolicy::Closure,
            };
            let ev = evaluate_with(&e, policy)?;
            let g = &ev.labeled.graph;
            report.set("width", e.width());
            report.set("n", g.n());
            report.set("edges", g.edges().len());
            report.set("arcs", g.arcs().len());
            if policy == EvalPolicy::Closure {
                report.set("skipped_edges", ev.skipped_edges);
                report.set("replaced_edges", ev.replaced_edges);
            }
            match out {
                Some(p) => {
                    write(p, &save_graph(g))?;
                    report.set("out", p.display().to_string());
                }
                None => report.set("graph", save_graph(g).lines().collect::<Vec<_>>().join("; ")),
            }
        }
        ExprOp::FromNdm { graph, out } => {
            let g = read_graph(graph, report)?;
            let ne = ndm_expression(&g).ok_or_else(|| Failure("empty graph has no expression".into()))?;
            report.set("width", ne.expr.width());
            let order: Vec<String> = ne.vertex_of.iter().map(|v| (v + 1).to_string()).collect();
            report.set("vertex_order", order.join(" "));
            emit_expr(&ne.expr.to_string(), out.as_deref(), report)?;
        }
        ExprOp::Tc { expr, cap, out } => {
            let text = read(expr)?;
            report.digest(&text);
            let e = parse_expr(&text)?;
            let t = tc_expression(&e, *cap)?;
            report.set("input_width", e.width());
            report.set("width", t.width());
            emit_expr(&t.to_string(), out.as_deref(), report)?;
        }
    }
    Ok(Outcome::Yes)
}

fn emit_expr(text: &str, out: Option<&Path>, report: &mut Report) -> Result<(), Failure> {
    match out {
        Some(p) => {
            write(p, &format!("{text}\n"))?;
            report.set("out", p.display().to_string());
        }
        None => report.set("expr", text),
    }
    Ok(())
}

fn verify(graph: &Path, cert: &Path, report: &mut Report) -> Run {
    let g = read_graph(graph, report)?;
    let c = load_coloring(&read(cert)?, g.n())?;
    report.set("colors", c.distinct_colors());
    report.set("max_color", c.max_color());
    match check_proper(&g, &c)? {
        None => {
            report.set("proper", "yes");
            Ok(Outcome::Yes)
        }
        Some(v) => {
            report.set("proper", "no");
            let (kind, u, w) = match v {
                Violation::Edge(u, w) => ("edge", u, w),
                Violation::Arc(u, w) => ("arc", u, w),
            };
            report.set("violation", format!("{kind} {} {}", u + 1, w + 1));
            Ok(Outcome::No)
        }
    }
}

fn configure_threads(threads: usize) -> Result<(), Failure> {
    #[cfg(feature = "parallel")]
    if threads > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn run(cli: &Cli, report: &mut Report) -> Run {
    configure_threads(cli.global.threads)?;
    let g = &cli.global;
    match &cli.command {
        Command::Solve {
            graph,
            k,
            method,
            td,
            cert,
            dump_ilp,
        } => solve(g, graph, *k, *method, td.as_deref(), cert.as_deref(), dump_ilp.as_deref(), report),
        Command::Bounds { graph, cert } => bounds(g, graph, cert.as_deref(), report),
        Command::Params { graph } => params(g, graph, report),
        Command::Gen {
            name,
            params,
            out,
            split,
            expr_out,
            edge_p,
            arc_p,
        } => gen(g, name, params, out, *split, expr_out.as_deref(), *edge_p, *arc_p, report),
        Command::Expr { op } => expr(op, report),
        Command::Verify { graph, cert } => verify(graph, cert, report),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Solve { .. } => "solve",
        Command::Bounds { .. } => "bounds",
        Command::Params { .. } => "params",
        Command::Gen { .. } => "gen",
        Command::Expr { op: ExprOp::Eval { .. } } => "expr eval",
        Command::Expr { op: ExprOp::FromNdm { .. } } => "expr from-ndm",
        Command::Expr { op: ExprOp::Tc { .. } } => "expr tc",
        Command::Verify { .. } => "verify",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let mut report = Report::new(command_name(&cli.command));
    let outcome = run(&cli, &mut report);
    report.set("wall_ms", start.elapsed().as_millis() as u64);
    match outcome {
        Ok(o) => {
            print!("{}", report.render(cli.global.json));
            ExitCode::from(match o {
                Outcome::Yes => 0,
                Outcome::No => 1,
            })
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
