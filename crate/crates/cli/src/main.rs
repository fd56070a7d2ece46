//! `domforge`: domination polynomials, average dominating-set order, and
//! the exhaustive verification sweeps from the command line.

mod render;

use std::collections::HashSet;
use std::fs;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use domforge_core::dompoly::{DomEngine, DEFAULT_BRUTE_GUARD, DEFAULT_CACHE_CAPACITY};
use domforge_core::enumerate::trees;
use domforge_core::io::{parse_edge_list, parse_graph6, parse_graph6_list};
use domforge_core::verify::{
    bound_sweep, edge_removal_sweep, general_bound_sweep, kn_min_sweep, run_lemma_suites,
    star_min_sweep, sweep_forests, BoundReport, EdgeMode,
};
use domforge_core::{canonical_code, Family, Graph};

use render::{Format, Printer};

#[derive(Parser)]
#[command(
    name = "domforge",
    version,
    about = "Exact domination polynomials and average dominating-set order"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for sweeps.
    #[arg(long, global = true, env = "DOMFORGE_WORKERS")]
    workers: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    output: Format,

    /// Largest component order handed to subset enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_BRUTE_GUARD)]
    brute_guard: usize,

    /// Report `elapsed_ms` as 0 so output is byte-reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the domination polynomial's coefficients.
    Poly(GraphInput),
    /// Print avd(G) = D'(1)/D(1) as an exact fraction.
    Avd(GraphInput),
    /// Print the domination number.
    Gamma(GraphInput),
    /// Compare 3·D'(1) with 2n·D(1).
    Check(GraphInput),
    /// Run the forest bound over a whole family.
    Sweep(SweepArgs),
    /// Run every identity and inequality suite.
    Lemmas {
        #[arg(long)]
        max_n: usize,
    },
    /// Run one of the exhaustive searches over labeled graphs or trees.
    Explore(ExploreArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Edge-list file: a header `n m`, then one `u v` per line.
    #[arg(long)]
    input: Option<String>,
    /// A single graph6 string.
    #[arg(long)]
    graph6: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFamily {
    /// Forests without isolated vertices.
    Forests,
    Trees,
    /// Graphs read from a graph6 file given with `--input`.
    Graph6,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: SweepFamily,
    #[arg(long, required_unless_present = "input")]
    max_n: Option<usize>,
    #[arg(long)]
    input: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Conjecture {
    /// Some edge removal raises avd (asserted).
    EdgeAny,
    /// Some non-pendant edge removal raises avd (findings only).
    EdgeNonpendant,
    /// avd <= 2n/3 without isolated vertices (asserted).
    GeneralBound,
    /// K_n uniquely minimizes avd (asserted).
    KnMin,
    /// The star uniquely minimizes avd among trees up to order n (asserted).
    StarMin,
}

#[derive(Args)]
struct ExploreArgs {
    #[arg(long, value_enum)]
    conjecture: Conjecture,
    #[arg(long)]
    n: usize,
    /// Allow the general bound sweep at n = 8.
    #[arg(long)]
    long_running: bool,
}

/// Whether every asserted check held.
type Verdict = bool;

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("{path}: cannot read file"))
}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    match (&input.input, &input.graph6) {
        (Some(path), None) => Ok(parse_edge_list(&read(path)?, path)?),
        (None, Some(s)) => Ok(parse_graph6(s).context("--graph6")?),
        _ => bail!("give exactly one of --input or --graph6"),
    }
}

fn workers(cli: &Cli) -> usize {
    cli.workers
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn run(cli: &Cli) -> Result<Verdict> {
    let out = Printer::new(cli.output, cli.no_timing);
    let engine = DomEngine::new(cli.brute_guard, DEFAULT_CACHE_CAPACITY);
    let workers = workers(cli);
    match &cli.command {
        Command::Poly(input) => {
            out.polynomial(&engine.compute(&load_graph(input)?)?)?;
            Ok(true)
        }
        Command::Avd(input) => {
            out.avd(&engine.avd(&load_graph(input)?)?)?;
            Ok(true)
        }
        Command::Gamma(input) => {
            out.gamma(engine.gamma(&load_graph(input)?)?)?;
            Ok(true)
        }
        Command::Check(input) => {
            let g = load_graph(input)?;
            let in_scope = g.is_forest() && !g.has_isolated();
            if !g.is_forest() {
                eprintln!("warning: the graph is not a forest; the 2n/3 bound is not guaranteed");
            } else if g.has_isolated() {
                eprintln!(
                    "warning: the graph has isolated vertices; the 2n/3 bound is not guaranteed"
                );
            }
            let eval = engine.compute(&g)?.eval_pair();
            let report = BoundReport::from_eval(g.order(), eval, g.is_extremal_shape());
            let equality = report.status == domforge_core::BoundStatus::Equality;
            let holds = report.status != domforge_core::BoundStatus::Violation
                && equality == report.extremal_shape;
            out.bound(&g, &report)?;
            Ok(!in_scope || holds)
        }
        Command::Sweep(args) => sweep(&out, args, workers),
        Command::Lemmas { max_n } => {
            let reports = run_lemma_suites(*max_n, workers)?;
            out.lemma_suites(&reports)?;
            Ok(reports.iter().all(|r| r.passed()))
        }
        Command::Explore(args) => explore(&out, args, workers),
    }
}

fn sweep(out: &Printer, args: &SweepArgs, workers: usize) -> Result<Verdict> {
    let need_max_n = || args.max_n.context("--max-n is required for this family");
    let reports = match args.family {
        SweepFamily::Forests => sweep_forests(need_max_n()?, workers)?,
        SweepFamily::Trees => {
            let max_n = need_max_n()?;
            if max_n < 2 {
                bail!("--max-n must be at least 2");
            }
            (2..=max_n)
                .map(|n| bound_sweep(Family::Trees, n, &trees(n)?, workers))
                .collect::<domforge_core::Result<Vec<_>>>()?
        }
        SweepFamily::Graph6 => {
            let path = args
                .input
                .as_deref()
                .context("--family graph6 needs --input")?;
            let graphs = parse_graph6_list(&read(path)?, path)?;
            let max_n = args.max_n.unwrap_or(usize::MAX);
            let mut by_order: Vec<(usize, Vec<Graph>)> = Vec::new();
            let mut in_scope = HashSet::new();
            for g in graphs.into_iter().filter(|g| g.order() <= max_n) {
                if g.is_forest() && !g.has_isolated() {
                    in_scope.insert(canonical_code(&g)?);
                }
                match by_order.iter_mut().find(|(n, _)| *n == g.order()) {
                    Some((_, list)) => list.push(g),
                    None => by_order.push((g.order(), vec![g])),
                }
            }
            by_order.sort_by_key(|(n, _)| *n);
            let reports = by_order
                .iter()
                .map(|(n, list)| bound_sweep(Family::External, *n, list, workers))
                .collect::<domforge_core::Result<Vec<_>>>()?;
            out.sweeps(&reports)?;
            // Only forests without isolated vertices are held to the bound.
            return Ok(reports.iter().all(|r| {
                r.mismatches.is_empty() && r.violations.iter().all(|c| !in_scope.contains(c))
            }));
        }
    };
    out.sweeps(&reports)?;
    Ok(reports.iter().all(|r| r.passed()))
}

fn explore(out: &Printer, args: &ExploreArgs, workers: usize) -> Result<Verdict> {
    let n = args.n;
    match args.conjecture {
        Conjecture::EdgeAny | Conjecture::EdgeNonpendant => {
            let mode = match args.conjecture {
                Conjecture::EdgeAny => EdgeMode::AnyEdge,
                _ => EdgeMode::NonPendantEdge,
            };
            let report = edge_removal_sweep(n, mode, workers)?;
            out.conjecture(&report)?;
            Ok(mode == EdgeMode::NonPendantEdge || report.counterexamples.is_empty())
        }
        Conjecture::GeneralBound => {
            if n == 8 && !args.long_running {
                bail!("n = 8 takes several minutes; pass --long-running to run it");
            }
            let report = general_bound_sweep(n, workers, args.long_running)?;
            out.sweeps(std::slice::from_ref(&report))?;
            Ok(report.passed())
        }
        Conjecture::KnMin => {
            let report = kn_min_sweep(n, workers)?;
            out.sweeps(std::slice::from_ref(&report))?;
            Ok(report.passed())
        }
        Conjecture::StarMin => {
            let reports = star_min_sweep(n, workers)?;
            out.sweeps(&reports)?;
            Ok(reports.iter().all(|r| r.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
