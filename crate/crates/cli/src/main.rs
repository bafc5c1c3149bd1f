//! `tollwalk`: compute toll intervals, check axioms, recognise classes, sweep
//! theorems and play the non-definability games from the command line.
//!
//! Exit codes: 0 holds, 1 violation or counterexample, 2 input error,
//! 3 resource refusal.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tollwalk_core::axioms::{check_axioms_with, AxiomId};
use tollwalk_core::catalog::catalog_by_name;
use tollwalk_core::classes::{classify, GraphClass};
use tollwalk_core::fixtures::fixture;
use tollwalk_core::harness::lemma::{induced_path_lemma_check, PathLemma};
use tollwalk_core::harness::{corpus_up_to, probe_converse, sweep_graphs, GraphSource, TheoremId};
use tollwalk_core::io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use tollwalk_core::nondef::ef::{ef_solve_with, configured_budget};
use tollwalk_core::nondef::strategy::{strategy_soak, GadgetGame};
use tollwalk_core::nondef::{build_g_d, build_g_d_prime, is_scant, w_structure, GadgetIds, NondefError, Player};
use tollwalk_core::tollwalk::{toll_interval, toll_interval_oracle, toll_transit_with};
use tollwalk_core::{Exec, Graph, TransitFunction, Vertex};

use report::{Failure, Report, Status};

#[derive(Parser)]
#[command(name = "tollwalk", version, about = "Toll walk transit functions and their axioms")]
struct Cli {
    /// Emit one `v=1` key=value document on stdout.
    #[arg(long, global = true)]
    machine: bool,
    /// Worker threads; 1 runs sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print T(u,v).
    Interval {
        #[command(flatten)]
        input: GraphInput,
        u: String,
        v: String,
        /// Cross-check against the walk-search oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Check axioms on a transit file or on the toll function of a graph.
    Axioms {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, conflicts_with_all = ["graph", "named"])]
        transit: Option<PathBuf>,
        /// Axiom id (repeatable, or space separated); default all.
        #[arg(long = "axiom")]
        axioms: Vec<String>,
    },
    /// Test membership in every supported class.
    Classify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        class: Option<String>,
    },
    /// Sweep a theorem over small graphs, or probe a characterization.
    Theorem {
        #[arg(long)]
        id: String,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Random trials for char-* ids.
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Check an induced-path lemma on a graph.
    Lemma {
        #[command(flatten)]
        input: GraphInput,
        /// easy1, easy or easydh.
        #[arg(long)]
        name: String,
    },
    /// Gadgets, scant structures and Ehrenfeucht-Fraïssé games.
    Nondef {
        #[command(subcommand)]
        cmd: NondefCmd,
    },
    /// Emit a named graph or a worked example.
    Catalog {
        name: String,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        emit: Format,
    },
}

#[derive(Subcommand)]
enum NondefCmd {
    /// Scantness of W(G_d) and W(G'_d).
    Scant {
        #[arg(long, default_value_t = 2)]
        d: usize,
    },
    /// Exact game on W-structures of two named graphs (default G_d vs G'_d).
    EfExact(GameArgs),
    /// Distance strategy on G_d vs G'_d against random spoilers.
    EfStrategy(GameArgs),
    /// Either game, chosen by --mode.
    Ef {
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[command(flatten)]
        game: GameArgs,
    },
}

#[derive(Args, Clone)]
struct GameArgs {
    /// Two catalog names; exact mode only.
    #[arg(num_args = 0..=2)]
    graphs: Vec<String>,
    #[arg(long, default_value_t = 5)]
    d: usize,
    #[arg(long, default_value_t = 1)]
    moves: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Strategy runs.
    #[arg(long, default_value_t = 500)]
    trials: u64,
}

#[derive(Args)]
struct GraphInput {
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Use a catalog graph instead of a file.
    #[arg(long, conflicts_with = "graph")]
    named: Option<String>,
    /// Input format; defaults to graph6 for .g6 files, else edge list.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Mode {
    Exact,
    Strategy,
}

type CmdResult = Result<Report, Failure>;

fn input_err(msg: impl ToString) -> Failure {
    Failure::Input(msg.to_string())
}

impl GraphInput {
    fn is_given(&self) -> bool {
        self.graph.is_some() || self.named.is_some()
    }

    fn load(&self) -> Result<Graph, Failure> {
        if let Some(name) = &self.named {
            return catalog_by_name(name).map_err(input_err);
        }
        let path = self.graph.as_ref().ok_or_else(|| input_err("one of --graph or --named is required"))?;
        let text = std::fs::read_to_string(path).map_err(|e| input_err(format!("{}: {e}", path.display())))?;
        let format = self.format.unwrap_or_else(|| {
            match path.extension().and_then(|e| e.to_str()) {
                Some("g6") | Some("graph6") => Format::Graph6,
                _ => Format::Edgelist,
            }
        });
        let g = match format {
            Format::Edgelist => from_edge_list(&text),
            Format::Graph6 => {
                let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
                from_graph6(line.trim())
            }
        };
        g.map_err(|e| input_err(format!("{}: {e}", path.display())))
    }
}

fn vertex(g: &Graph, s: &str) -> Result<Vertex, Failure> {
    let v = match s.parse::<usize>() {
        Ok(v) => v,
        Err(_) => g.vertex_by_label(s).ok_or_else(|| input_err(format!("unknown vertex {s:?}")))?,
    };
    g.check_vertex(v).map_err(input_err)?;
    Ok(v)
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_interval(input: &GraphInput, u: &str, v: &str, verify: bool) -> CmdResult {
    let g = input.load()?;
    let (u, v) = (vertex(&g, u)?, vertex(&g, v)?);
    let t = toll_interval(&g, u, v).map_err(input_err)?;
    let mut rep = Report::new("interval");
    rep.field("u", u).field("v", v).field("members", join(t.iter()));
    rep.line(format!("T({u},{v}) = {{{}}}", join(t.iter())));
    if verify {
        let o = toll_interval_oracle(&g, u, v).map_err(input_err)?;
        rep.field("oracle", if o == t { "agree" } else { "disagree" });
        if o != t {
            rep.line(format!("oracle disagrees: {{{}}}", join(o.iter())));
            rep.status(Status::Violated);
        } else {
            rep.line("oracle agrees");
        }
    }
    Ok(rep)
}

fn parse_axioms(raw: &[String]) -> Result<Vec<AxiomId>, Failure> {
    let ids: Vec<&str> = raw.iter().flat_map(|s| s.split([' ', ','])).filter(|s| !s.is_empty()).collect();
    if ids.is_empty() {
        return Ok(AxiomId::ALL.to_vec());
    }
    ids.into_iter().map(|s| s.parse::<AxiomId>().map_err(input_err)).collect()
}

fn cmd_axioms(input: &GraphInput, transit: Option<&PathBuf>, axioms: &[String], exec: Exec) -> CmdResult {
    let ids = parse_axioms(axioms)?;
    let r: TransitFunction = match transit {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| input_err(format!("{}: {e}", path.display())))?;
            TransitFunction::from_text(&text).map_err(|e| input_err(format!("{}: {e}", path.display())))?
        }
        None if input.is_given() => toll_transit_with(&input.load()?, exec).map_err(input_err)?,
        None => return Err(input_err("one of --graph, --named or --transit is required")),
    };
    let mut rep = Report::new("axioms");
    rep.field("n", r.n());
    for v in check_axioms_with(&r, &ids, exec) {
        let val = match &v.witness {
            None => "satisfied".to_string(),
            Some(w) => format!("violated:{}", join(w)),
        };
        rep.field(&format!("axiom.{}", v.axiom), val);
        rep.line(v.to_string());
        if !v.satisfied() {
            rep.status(Status::Violated);
        }
    }
    Ok(rep)
}

fn cmd_classify(input: &GraphInput, class: Option<&str>) -> CmdResult {
    let g = input.load()?;
    let classes = match class {
        Some(c) => vec![c.parse::<GraphClass>().map_err(input_err)?],
        None => GraphClass::ALL.to_vec(),
    };
    let mut rep = Report::new("classify");
    rep.field("n", g.n()).field("m", g.m());
    for c in classes {
        if c.needs_connected() && !g.is_connected() {
            rep.field(&format!("class.{c}"), "n/a");
            rep.line(format!("{c}: n/a (requires a connected graph)"));
            continue;
        }
        let r = classify(&g, c).map_err(|e| Failure::Internal(e.to_string()))?;
        match &r.certificate {
            None => {
                rep.field(&format!("class.{c}"), r.member);
                rep.line(format!("{c}: {}", r.member));
            }
            Some(cert) => {
                rep.field(&format!("class.{c}"), format!("{}:{cert}", r.member));
                rep.line(format!("{c}: {} ({cert})", r.member));
            }
        }
    }
    Ok(rep)
}

fn cmd_theorem(id: &str, max_n: Option<usize>, corpus: Option<&PathBuf>, trials: u64, seed: u64, exec: Exec) -> CmdResult {
    let id: TheoremId = id.parse().map_err(input_err)?;
    let mut rep = Report::new("theorem");
    rep.field("id", id);
    if id.is_characterization() {
        let max_n = max_n.unwrap_or(4);
        let c = probe_converse(id, trials, max_n, seed, exec).map_err(input_err)?;
        rep.field("mode", "converse")
            .field("trials", c.trials)
            .field("seed", c.seed)
            .field("max_n", max_n)
            .field("satisfied", c.satisfied)
            .field("confirmed", c.confirmed)
            .field("disconnected", c.disconnected)
            .field("falsified", c.falsified);
        rep.line(format!(
            "{id}: {} trials, {} satisfy the axioms, {} confirmed, {} disconnected, {} falsified",
            c.trials, c.satisfied, c.confirmed, c.disconnected, c.falsified
        ));
        for (i, f) in c.falsifications.iter().enumerate() {
            rep.field(&format!("falsification.{i}"), format!("trial={} {}", f.trial, f.reason));
            rep.line(format!("trial {}: {}\n{}", f.trial, f.reason, f.transit.trim_end()));
        }
        if c.falsified > 0 {
            rep.status(Status::Violated);
        }
        return Ok(rep);
    }
    let max_n = max_n.unwrap_or(6);
    if max_n < 1 {
        return Err(input_err("--max-n must be at least 1"));
    }
    let source = match corpus {
        Some(p) => GraphSource::Corpus(p),
        None => GraphSource::Builtin,
    };
    let graphs = corpus_up_to(max_n, source, exec).map_err(input_err)?;
    let r = sweep_graphs(&[id], &graphs, exec).map_err(|e| Failure::Internal(e.to_string()))?.remove(0);
    rep.field("mode", "sweep")
        .field("max_n", max_n)
        .field("graphs", r.graphs_checked)
        .field("left_true", r.left_true)
        .field("disagreements", r.disagreements.len());
    rep.line(format!(
        "{id}: {} graphs, left side true on {}, {} disagreements",
        r.graphs_checked,
        r.left_true,
        r.disagreements.len()
    ));
    for (i, d) in r.disagreements.iter().enumerate() {
        let w = d.witness.clone().unwrap_or_default();
        rep.field(&format!("disagreement.{i}"), format!("{} {w}", d.graph));
        rep.line(format!("  {}: left={} right={:?} {w}", d.graph, d.left, d.right));
    }
    if !r.holds() {
        rep.status(Status::Violated);
    }
    Ok(rep)
}

fn cmd_lemma(input: &GraphInput, name: &str) -> CmdResult {
    let g = input.load()?;
    let lemma: PathLemma = name.parse().map_err(input_err)?;
    let r = induced_path_lemma_check(&g, lemma).map_err(input_err)?;
    let mut rep = Report::new("lemma");
    rep.field("lemma", lemma);
    if let Some(p) = &r.precondition_violation {
        rep.field("precondition", p);
        rep.line(format!("{lemma}: hypothesis fails ({p}); not evaluated"));
        rep.status(Status::Violated);
        return Ok(rep);
    }
    rep.field("paths", r.paths_checked).field("violations", r.violations.len());
    rep.line(format!("{lemma}: {} induced paths, {} violations", r.paths_checked, r.violations.len()));
    for v in &r.violations {
        rep.line(format!("  path {} misses {}", join(&v.path), v.missing));
    }
    if !r.holds() {
        rep.status(Status::Violated);
    }
    Ok(rep)
}

fn nondef_err(e: NondefError) -> Failure {
    match e {
        NondefError::Budget { .. } => Failure::Refused(e.to_string()),
        other => input_err(other),
    }
}

fn cmd_scant(d: usize) -> CmdResult {
    let g = build_g_d(d).map_err(input_err)?;
    let gp = build_g_d_prime(d).map_err(input_err)?;
    let (w, wp) = (w_structure(&g).map_err(nondef_err)?, w_structure(&gp).map_err(nondef_err)?);
    let (s, sp) = (is_scant(&w).map_err(nondef_err)?, is_scant(&wp).map_err(nondef_err)?);
    let ids = GadgetIds::new(d);
    let named = sp.offending_pair(ids.v(2), ids.x());
    let mut rep = Report::new("nondef-scant");
    rep.field("d", d).field("g_scant", s.scant).field("gp_scant", sp.scant).field("gp_offending_pairs", sp.offending.len());
    rep.line(format!("W(G_{d}): {}", s.describe(&w)));
    rep.line(format!("W(G'_{d}): {}", sp.describe(&wp)));
    if let Some(o) = named {
        let set = join(o.set.iter().map(|v| gp.label(v)));
        rep.field("gp_witness", format!("{},{}:{set}", gp.label(o.x), gp.label(o.y)));
        rep.line(format!("witness F({},{}) = {{{set}}}", gp.label(ids.v(2)), gp.label(ids.x())));
    }
    if !s.scant || sp.scant || named.is_none() {
        rep.status(Status::Violated);
    }
    Ok(rep)
}

/// Duplicator is expected for gadgets with `d > 2^(r+1)` and for the cycle
/// pair `C_2k`, `C_2k+1` with `k >= 2^(r+1)`.
fn expected_winner(names: &[String], d: usize, moves: usize) -> Option<Player> {
    let bound = 1usize.checked_shl(moves as u32 + 1)?;
    if names.is_empty() {
        return (d > bound).then_some(Player::Duplicator);
    }
    let cyc = |s: &str| s.strip_prefix("cycle:").or_else(|| s.strip_prefix("Ck:")).and_then(|k| k.parse::<usize>().ok());
    match (cyc(&names[0]), cyc(&names[1])) {
        (Some(a), Some(b)) if a % 2 == 0 && b == a + 1 && a / 2 >= bound => Some(Player::Duplicator),
        _ => None,
    }
}

fn cmd_ef_exact(args: &GameArgs, exec: Exec) -> CmdResult {
    let (ga, gb) = match args.graphs.as_slice() {
        [] => (build_g_d(args.d).map_err(input_err)?, build_g_d_prime(args.d).map_err(input_err)?),
        [a, b] => (catalog_by_name(a).map_err(input_err)?, catalog_by_name(b).map_err(input_err)?),
        _ => return Err(input_err("give two graph names or none")),
    };
    let (a, b) = (w_structure(&ga).map_err(nondef_err)?, w_structure(&gb).map_err(nondef_err)?);
    let budget = configured_budget().map_err(nondef_err)?;
    let r = ef_solve_with(&a, &b, args.moves, budget, exec).map_err(nondef_err)?;
    let mut rep = Report::new("nondef-ef-exact");
    let left = args.graphs.first().cloned().unwrap_or(format!("G_d:{}", args.d));
    let right = args.graphs.get(1).cloned().unwrap_or(format!("GP_d:{}", args.d));
    rep.field("a", &left).field("b", &right).field("moves", args.moves).field("winner", r.winner).field("states", r.states);
    rep.line(format!("W({left}) vs W({right}), {}-move game: {} wins", args.moves, r.winner));
    for (i, l) in r.trace_lines().into_iter().enumerate() {
        rep.field(&format!("trace.{i}"), &l);
        rep.line(l);
    }
    if let Some(want) = expected_winner(&args.graphs, args.d, args.moves) {
        rep.field("expected", want);
        if want != r.winner {
            rep.status(Status::Violated);
        }
    }
    Ok(rep)
}

fn cmd_ef_strategy(args: &GameArgs, exec: Exec) -> CmdResult {
    if !args.graphs.is_empty() {
        return Err(input_err("strategy mode plays G_d vs G'_d only; use --d"));
    }
    GadgetGame::new(args.d).map_err(nondef_err)?.check_rounds(args.moves).map_err(nondef_err)?;
    let s = strategy_soak(args.d, args.moves, args.trials, args.seed, exec).map_err(nondef_err)?;
    let mut rep = Report::new("nondef-ef-strategy");
    rep.field("d", s.d)
        .field("moves", s.rounds)
        .field("runs", s.runs)
        .field("seed", s.seed)
        .field("duplicator_wins", s.duplicator_wins)
        .field("w_iso_runs", s.w_iso_runs);
    rep.line(format!(
        "G_{} vs G'_{}, {}-move games: duplicator won {}/{} runs (final map also a W-isomorphism in {})",
        s.d, s.d, s.rounds, s.duplicator_wins, s.runs, s.w_iso_runs
    ));
    for (run, lines) in &s.losses {
        rep.line(format!("lost run {run}:"));
        for l in lines {
            rep.line(format!("  {l}"));
        }
    }
    if s.duplicator_wins != s.runs {
        rep.status(Status::Violated);
    }
    Ok(rep)
}

fn cmd_catalog(name: &str, emit: Format) -> CmdResult {
    let mut rep = Report::new("catalog");
    rep.field("name", name);
    if let Some(k) = name.strip_prefix("example:") {
        let k: usize = k.parse().map_err(|_| input_err(format!("bad example index {k:?}")))?;
        let f = fixture(k).map_err(input_err)?;
        rep.payload(f.r.to_text());
        return Ok(rep);
    }
    let g = catalog_by_name(name).map_err(input_err)?;
    rep.field("n", g.n()).field("m", g.m());
    match emit {
        Format::Edgelist => rep.payload(to_edge_list(&g)),
        Format::Graph6 => rep.payload(format!("{}\n", to_graph6(&g).map_err(input_err)?)),
    };
    Ok(rep)
}

fn run(cli: &Cli, exec: Exec) -> CmdResult {
    match &cli.cmd {
        Cmd::Interval { input, u, v, verify } => cmd_interval(input, u, v, *verify),
        Cmd::Axioms { input, transit, axioms } => cmd_axioms(input, transit.as_ref(), axioms, exec),
        Cmd::Classify { input, class } => cmd_classify(input, class.as_deref()),
        Cmd::Theorem { id, max_n, corpus, trials, seed } => cmd_theorem(id, *max_n, corpus.as_ref(), *trials, *seed, exec),
        Cmd::Lemma { input, name } => cmd_lemma(input, name),
        Cmd::Nondef { cmd } => match cmd {
            NondefCmd::Scant { d } => cmd_scant(*d),
            NondefCmd::EfExact(g) => cmd_ef_exact(g, exec),
            NondefCmd::EfStrategy(g) => cmd_ef_strategy(g, exec),
            NondefCmd::Ef { mode: Mode::Exact, game } => cmd_ef_exact(game, exec),
            NondefCmd::Ef { mode: Mode::Strategy, game } => cmd_ef_strategy(game, exec),
        },
        Cmd::Catalog { name, emit } => cmd_catalog(name, *emit),
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Interval { .. } => "interval",
        Cmd::Axioms { .. } => "axioms",
        Cmd::Classify { .. } => "classify",
        Cmd::Theorem { .. } => "theorem",
        Cmd::Lemma { .. } => "lemma",
        Cmd::Nondef { .. } => "nondef",
        Cmd::Catalog { .. } => "catalog",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let exec = match cli.jobs {
        Some(0) => {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        Some(1) => Exec::Sequential,
        Some(j) => {
            std::env::set_var("RAYON_NUM_THREADS", j.to_string());
            Exec::Parallel
        }
        None => Exec::Parallel,
    };
    let outcome = run(&cli, exec);
    report::emit(command_name(&cli.cmd), outcome, cli.machine)
}
