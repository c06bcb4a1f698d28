//! Command-line front end: loads edge-list graphs, runs the core algorithms,
//! and prints deterministic JSON (or plain-table) reports.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use deltakit_core::cuts::{certify_cut_family, disjoint_cut_family};
use deltakit_core::flow::{max_flow, CapacityMap};
use deltakit_core::generate::{generate, Family};
use deltakit_core::graph::Graph;
use deltakit_core::hyperbolicity::{
    default_delta, delta_exact_capped, delta_two_approx, HyperbolicityResult,
};
use deltakit_core::num::{ratio, ratio_display, HalfInt, Ratio};
use deltakit_core::oracle;
use deltakit_core::overlap::{overlap_families, verify_all_pairs, Handedness, Parity};
use deltakit_core::sse::{sse_solve, SseBranch};
use deltakit_core::vulnerability::{
    ehssc_approx, greedy_uumv, uumv_approx, verify_hitting_set, EhsscBranch, EhsscSolution,
    UumvSolution,
};
use deltakit_core::witness::{nested_witness_family, verify_family};
use deltakit_core::{Edge, Error, NodeSet};

#[derive(Parser)]
#[command(name = "deltakit", version, disable_help_subcommand = true)]
#[command(about = "Expansion, cut, and routing algorithms for hyperbolic graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DeltaMethod {
    /// Exact scan for n ≤ 60, 2-approximation beyond.
    Auto,
    Exact,
    Approx,
}

#[derive(Subcommand)]
enum Cmd {
    /// Gromov hyperbolicity of the graph.
    Delta {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_enum, default_value_t = DeltaMethod::Auto)]
        method: DeltaMethod,
        /// Node-count cap for the exact quadruple scan.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Nested family of node-expansion witnesses between p and q.
    Witnesses {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        /// Exponent μ in (0,1), as a fraction.
        #[arg(long, default_value = "1/2")]
        mu: String,
        /// Hyperbolicity override (integer or half, e.g. 3/2).
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Limited-overlap witness families along the segmented p–q geodesic.
    Overlap {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        tau: u32,
        #[arg(long, default_value = "1/2")]
        mu: String,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        max_degree: Option<u32>,
        /// Proceed past the τ validity checks (result is shortfall-flagged).
        #[arg(long)]
        force: bool,
    },
    /// Family of pairwise disjoint small s-t cuts, certified from scratch.
    Cuts {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Approximate hitting set for all s-t cuts with at most k edges.
    Ehssc {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        max_degree: Option<u32>,
        /// Override the loop/shortest-path branch threshold.
        #[arg(long)]
        threshold_override: Option<u64>,
    },
    /// Route κ s-t paths minimizing edges shared by more than r of them.
    Uumv {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        kappa: u64,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        max_degree: Option<u32>,
        /// Run the greedy baseline instead of the hitting-set construction.
        #[arg(long)]
        greedy: bool,
    },
    /// Small-set expansion on a regular graph.
    Sse {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Target normalized expansion, as a fraction in (0,1].
        #[arg(long)]
        epsilon: String,
        /// Size budget fraction in (0,1/2).
        #[arg(long)]
        zeta: String,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Emit a generator family as an edge list on standard output.
    Gen {
        /// Family spec, e.g. path:6, cycle:8, complete:5, star:7,
        /// tree:ARITY:DEPTH, grid:R:C, hypercube:D, theta:A:B:C,
        /// cliques:COUNT:SIZE, er:N:P_NUM/P_DEN, crossedfan:G.
        family: String,
        /// Seed for randomized families.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Brute-force oracles for toy instances.
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Exact δ by independent quadruple enumeration (n ≤ 30).
    Delta {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exact minimum node expansion over all subsets (n ≤ 20).
    MinExpansion {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// All s-t cut-edge sets of size ≤ k (n ≤ 16).
    Cuts {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        k: u64,
    },
    /// Exact minimum hitting set for the size-≤-k cuts (n ≤ 12).
    Ehssc {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        k: u64,
    },
    /// Exact routing optimum, both via the reduction and directly (κ ≤ 3).
    Uumv {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        kappa: u64,
    },
    /// Exact unit-capacity min cut over all bipartitions (n ≤ 12).
    MinCut {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

enum AppError {
    Io(String),
    Core(Error),
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Io(_) => 1,
            AppError::Core(e) if e.is_domain() => 2,
            AppError::Core(_) => 1,
        }
    }
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppError::Io(m) => write!(f, "{m}"),
            AppError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for AppError {
    fn from(e: Error) -> Self {
        AppError::Core(e)
    }
}

/// Load the edge-list file. When the input labels are already dense 0..n−1
/// they are kept as node ids verbatim, so `gen` output round-trips exactly;
/// otherwise ids are compacted in order of first appearance.
fn load_graph(path: &PathBuf) -> Result<Graph, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Io(format!("cannot read {}: {e}", path.display())))?;
    let g = Graph::parse(&text)?;
    let n = g.node_count();
    let mut sorted: Vec<u64> = g.labels().to_vec();
    sorted.sort_unstable();
    if sorted == (0..n as u64).collect::<Vec<u64>>() {
        let pairs: Vec<(u32, u32)> = g
            .edges()
            .iter()
            .map(|e| (g.label(e.0) as u32, g.label(e.1) as u32))
            .collect();
        Ok(Graph::from_numbered_edges(n, &pairs)?)
    } else {
        Ok(g)
    }
}

fn parse_ratio(s: &str) -> Result<Ratio, AppError> {
    let err = || AppError::Core(Error::BadParameter(format!("bad fraction {s:?}")));
    match s.split_once('/') {
        Some((a, b)) => {
            let num: i64 = a.trim().parse().map_err(|_| err())?;
            let den: i64 = b.trim().parse().map_err(|_| err())?;
            if den == 0 {
                return Err(err());
            }
            Ok(ratio(num, den))
        }
        None => {
            let v: i64 = s.trim().parse().map_err(|_| err())?;
            Ok(ratio(v, 1))
        }
    }
}

/// Half-integers: "2", "5/2", "2.5".
fn parse_halfint(s: &str) -> Result<HalfInt, AppError> {
    let err = || AppError::Core(Error::BadParameter(format!("bad half-integer {s:?}")));
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        if b.trim() != "2" {
            return Err(err());
        }
        return Ok(HalfInt::from_halves(a.trim().parse().map_err(|_| err())?));
    }
    if let Some(whole) = s.strip_suffix(".5") {
        let w: i64 = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| err())? };
        return Ok(HalfInt::from_halves(2 * w + 1));
    }
    Ok(HalfInt::from_int(s.parse().map_err(|_| err())?))
}

fn opt_halfint(s: &Option<String>) -> Result<Option<HalfInt>, AppError> {
    s.as_deref().map(parse_halfint).transpose()}

fn hi(h: HalfInt) -> Value {
    json!(h.to_string())
}

fn rat(r: &Ratio) -> Value {
    json!(ratio_display(r))
}

fn nodes(s: &NodeSet) -> Value {
    json!(s.iter().collect::<Vec<u32>>())
}

fn edge_pairs(edges: &[Edge]) -> Value {
    json!(edges.iter().map(|e| [e.0, e.1]).collect::<Vec<[u32; 2]>>())
}

fn delta_report(r: &HyperbolicityResult) -> Value {
    json!({
        "delta": hi(r.delta),
        "effective_delta": hi(r.effective_delta),
        "exact": r.is_exact,
        "witness_quadruple": r.witness_quadruple,
    })
}

fn ehssc_report(sol: &EhsscSolution) -> Value {
    json!({
        "hit_edges": edge_pairs(&sol.hit_edges),
        "hit_count": sol.hit_edges.len(),
        "branch": match sol.branch {
            EhsscBranch::Loop => "loop",
            EhsscBranch::ShortestPath => "shortest-path",
        },
        "iterations": sol.iterations.iter().map(|f| edge_pairs(f)).collect::<Vec<Value>>(),
        "k": sol.k,
        "delta": hi(sol.delta),
        "d_excl": sol.d_excl,
        "threshold": sol.threshold,
        "threshold_overridden": sol.threshold_overridden,
    })
}

fn uumv_report(sol: &UumvSolution) -> Value {
    json!({
        "paths": sol.paths,
        "shared_edges": edge_pairs(&sol.shared_edges),
        "shared_count": sol.shared_edges.len(),
        "hitting_set_size": sol.hitting_set_size,
        "r": sol.r,
        "kappa": sol.kappa,
    })
}

fn emit(report: &Value, format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(report).expect("serializable"))
        }
        Format::Table => {
            let obj = report.as_object().expect("reports are objects");
            let width = obj.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in obj {
                let rendered = match v {
                    Value::String(s) => s.clone(),
                    other => serde_json::to_string(other).expect("serializable"),
                };
                println!("{k:<width$}  {rendered}");
            }
        }
    }
}

fn run(cmd: Cmd) -> Result<(), AppError> {
    match cmd {
        Cmd::Delta { graph, format, method, cap } => {
            let g = load_graph(&graph)?;
            let r = match method {
                DeltaMethod::Auto => match cap {
                    Some(c) => delta_exact_capped(&g, c)?,
                    None => default_delta(&g)?,
                },
                DeltaMethod::Exact => delta_exact_capped(&g, cap.unwrap_or(400))?,
                DeltaMethod::Approx => delta_two_approx(&g),
            };
            let mut report = delta_report(&r);
            report["n"] = json!(g.node_count());
            report["m"] = json!(g.edge_count());
            emit(&report, format);
        }
        Cmd::Witnesses { graph, format, p, q, mu, delta, max_degree } => {
            let g = load_graph(&graph)?;
            let mu = parse_ratio(&mu)?;
            let fam = nested_witness_family(&g, p, q, &mu, opt_halfint(&delta)?, max_degree)?;
            verify_family(&g, &fam)?;
            let report = json!({
                "anchor": fam.anchor,
                "subsets": fam.subsets.iter().map(nodes).collect::<Vec<Value>>(),
                "expansions": fam.expansions.iter().map(rat).collect::<Vec<Value>>(),
                "bound": rat(&fam.bound),
                "count": fam.subsets.len(),
                "guaranteed": fam.guaranteed,
                "shortfall": fam.shortfall,
                "distance": fam.params.delta_cap,
                "mu": rat(&fam.params.mu),
                "delta": hi(fam.params.delta),
                "delta_exact": fam.params.delta_is_exact,
                "max_degree": fam.params.d,
                "alpha_radius": fam.params.alpha_radius,
            });
            emit(&report, format);
        }
        Cmd::Overlap { graph, format, p, q, tau, mu, delta, max_degree, force } => {
            let g = load_graph(&graph)?;
            let mu = parse_ratio(&mu)?;
            let set =
                overlap_families(&g, p, q, tau, &mu, opt_halfint(&delta)?, max_degree, force)?;
            let pairs_ok = verify_all_pairs(&set);
            let report = json!({
                "families": set.families.iter().map(|f| json!({
                    "segment": f.index,
                    "handedness": match f.handedness {
                        Handedness::Left => "left",
                        Handedness::Right => "right",
                    },
                    "anchor": f.family.anchor,
                    "subsets": f.family.subsets.iter().map(nodes).collect::<Vec<Value>>(),
                    "expansions": f.family.expansions.iter().map(rat).collect::<Vec<Value>>(),
                    "bound": rat(&f.family.bound),
                    "shortfall": f.family.shortfall,
                })).collect::<Vec<Value>>(),
                "family_count": set.families.len(),
                "group": [
                    match set.group.0 { Parity::Even => "even", Parity::Odd => "odd" },
                    match set.group.1 { Handedness::Left => "left", Handedness::Right => "right" },
                ],
                "segment_anchors": set.segment_anchors,
                "distance": set.delta_cap,
                "tau": set.tau,
                "segment_length": set.delta_cap / set.tau,
                "overlap_threshold": set.delta_cap / (2 * set.tau),
                "mu": rat(&set.mu),
                "delta": hi(set.delta),
                "max_degree": set.d,
                "tau_valid": set.tau_check.is_valid(),
                "pairwise_limited_overlap": pairs_ok,
                "shortfall": set.shortfall,
            });
            emit(&report, format);
        }
        Cmd::Cuts { graph, format, s, t, delta, max_degree } => {
            let g = load_graph(&graph)?;
            let fam = disjoint_cut_family(&g, s, t, opt_halfint(&delta)?, max_degree)?;
            let cert = certify_cut_family(&g, &fam);
            let exclusion =
                g.ball(s, fam.delta.floor_mul(35) as u32).union(&NodeSet::singleton(t));
            let report = json!({
                "cuts": fam.cuts.iter().map(|c| json!({
                    "level": c.level,
                    "center": c.center,
                    "ball": nodes(&c.nodes),
                    "cut_edges": edge_pairs(&c.cut_edges),
                })).collect::<Vec<Value>>(),
                "cut_count": fam.cuts.len(),
                "guaranteed": fam.guaranteed,
                "s": fam.s,
                "t": fam.t,
                "delta": hi(fam.delta),
                "d_excl": fam.d_excl,
                "exclusion_set": nodes(&exclusion),
                "stride": fam.stride,
                "radius": fam.radius,
                "size_bound": fam.size_bound,
                "certified": cert.pass(),
            });
            emit(&report, format);
        }
        Cmd::Ehssc { graph, format, s, t, k, delta, max_degree, threshold_override } => {
            let g = load_graph(&graph)?;
            let sol = ehssc_approx(
                &g,
                s,
                t,
                k,
                opt_halfint(&delta)?,
                max_degree,
                threshold_override,
            )?;
            let valid = verify_hitting_set(&g, s, t, k, &sol.hit_edges)?;
            let mut report = ehssc_report(&sol);
            report["valid"] = json!(valid);
            emit(&report, format);
        }
        Cmd::Uumv { graph, format, s, t, r, kappa, delta, max_degree, greedy } => {
            let g = load_graph(&graph)?;
            let report = if greedy {
                let sol = greedy_uumv(&g, s, t, r, kappa)?;
                let mut rep = uumv_report(&sol);
                rep["algorithm"] = json!("greedy");
                rep
            } else {
                let (sol, ehssc) =
                    uumv_approx(&g, s, t, r, kappa, opt_halfint(&delta)?, max_degree)?;
                let mut rep = uumv_report(&sol);
                rep["algorithm"] = json!("hitting-set");
                rep["ehssc"] = ehssc_report(&ehssc);
                rep
            };
            emit(&report, format);
        }
        Cmd::Sse { graph, format, epsilon, zeta, delta, max_degree } => {
            let g = load_graph(&graph)?;
            let eps = parse_ratio(&epsilon)?;
            let zeta = parse_ratio(&zeta)?;
            let sol = sse_solve(&g, &eps, &zeta, opt_halfint(&delta)?, max_degree)?;
            let report = json!({
                "set": nodes(&sol.set),
                "size": sol.set.len(),
                "phi": rat(&sol.phi),
                "h": rat(&sol.h),
                "branch": match sol.branch {
                    SseBranch::Ball => "ball",
                    SseBranch::LevelBlock => "level-block",
                    SseBranch::DisconnectedBall => "disconnected-ball",
                    SseBranch::Exhaustive => "exhaustive",
                },
                "shortfall": sol.shortfall,
                "epsilon": rat(&sol.params.epsilon),
                "zeta": rat(&sol.params.zeta),
                "p": sol.params.p,
                "q": sol.params.q,
                "distance": sol.params.delta_cap,
                "target_separation": sol.params.target_separation,
                "separation_fallback": sol.params.separation_fallback,
                "alpha_radius": sol.params.alpha_radius,
                "eta": sol.params.eta,
                "delta": hi(sol.params.delta),
                "degree": sol.params.d,
                "asymptotic_window": sol.params.window_ok,
            });
            emit(&report, format);
        }
        Cmd::Gen { family, seed } => {
            let g = generate(&parse_family(&family, seed)?)?;
            print!("{}", g.to_edge_list());
        }
        Cmd::Oracle { which } => run_oracle(which)?,
    }
    Ok(())
}

fn run_oracle(which: OracleCmd) -> Result<(), AppError> {
    match which {
        OracleCmd::Delta { graph, format } => {
            let g = load_graph(&graph)?;
            let d = oracle::brute_delta(&g)?;
            emit(&json!({ "delta": hi(d) }), format);
        }
        OracleCmd::MinExpansion { graph, format } => {
            let g = load_graph(&graph)?;
            let (set, h) = oracle::brute_min_node_expansion(&g)?;
            emit(&json!({ "set": nodes(&set), "h": rat(&h) }), format);
        }
        OracleCmd::Cuts { graph, format, s, t, k } => {
            let g = load_graph(&graph)?;
            let cuts = oracle::enumerate_size_constrained_cuts(&g, s, t, k)?;
            emit(
                &json!({
                    "cuts": cuts.iter().map(|c| edge_pairs(c)).collect::<Vec<Value>>(),
                    "count": cuts.len(),
                }),
                format,
            );
        }
        OracleCmd::Ehssc { graph, format, s, t, k } => {
            let g = load_graph(&graph)?;
            let (hit, opt) = oracle::brute_ehssc(&g, s, t, k)?;
            emit(&json!({ "hit_edges": edge_pairs(&hit), "opt": opt }), format);
        }
        OracleCmd::Uumv { graph, format, s, t, r, kappa } => {
            let g = load_graph(&graph)?;
            let via_reduction = oracle::brute_uumv(&g, s, t, r, kappa)?;
            let direct = if kappa <= 3 && g.node_count() <= 10 {
                Some(oracle::brute_uumv_direct(&g, s, t, r, kappa)?)
            } else {
                None
            };
            emit(
                &json!({ "opt": via_reduction, "direct": direct }),
                format,
            );
        }
        OracleCmd::MinCut { graph, format, s, t } => {
            let g = load_graph(&graph)?;
            let cap = CapacityMap::unit(&g);
            let brute = oracle::brute_min_cut(&g, &cap, s, t)?;
            let flow = max_flow(&g, &cap, s, t, None)?;
            emit(
                &json!({
                    "min_cut": brute,
                    "flow_value": flow.value.finite(),
                    "cut_edges": edge_pairs(&flow.cut_edges),
                }),
                format,
            );
        }
    }
    Ok(())
}

fn parse_family(spec: &str, seed: u64) -> Result<Family, AppError> {
    let err = |msg: &str| AppError::Core(Error::BadParameter(format!("{msg}: {spec:?}")));
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or("");
    let rest: Vec<&str> = parts.collect();
    let num = |s: &str| -> Result<u32, AppError> {
        s.parse().map_err(|_| err("bad numeric parameter"))
    };
    let arity = |want: usize| -> Result<(), AppError> {
        if rest.len() == want {
            Ok(())
        } else {
            Err(err("wrong number of parameters"))
        }
    };
    Ok(match name {
        "path" => {
            arity(1)?;
            Family::Path(num(rest[0])?)
        }
        "cycle" => {
            arity(1)?;
            Family::Cycle(num(rest[0])?)
        }
        "complete" => {
            arity(1)?;
            Family::Complete(num(rest[0])?)
        }
        "star" => {
            arity(1)?;
            Family::Star(num(rest[0])?)
        }
        "tree" => {
            arity(2)?;
            Family::BalancedTree { arity: num(rest[0])?, depth: num(rest[1])? }
        }
        "grid" => {
            arity(2)?;
            Family::Grid { rows: num(rest[0])?, cols: num(rest[1])? }
        }
        "hypercube" => {
            arity(1)?;
            Family::Hypercube(num(rest[0])?)
        }
        "theta" => {
            arity(3)?;
            Family::Theta(num(rest[0])?, num(rest[1])?, num(rest[2])?)
        }
        "cliques" => {
            arity(2)?;
            Family::RingOfCliques { cliques: num(rest[0])?, size: num(rest[1])? }
        }
        "er" => {
            arity(2)?;
            let (p_num, p_den) = rest[1]
                .split_once('/')
                .ok_or_else(|| err("probability must be NUM/DEN"))?;
            Family::ErdosRenyi {
                n: num(rest[0])?,
                p_num: p_num.parse().map_err(|_| err("bad probability"))?,
                p_den: p_den.parse().map_err(|_| err("bad probability"))?,
                seed,
            }
        }
        "crossedfan" => {
            arity(1)?;
            Family::CrossedFan { gadgets: num(rest[0])? }
        }
        _ => return Err(err("unknown family")),
    })
}
