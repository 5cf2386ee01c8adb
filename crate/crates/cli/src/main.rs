use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diam_core::complexity::{classify, render_table};
use diam_core::io::{parse_edge_list, parse_pair_list, write_edge_list};
use diam_core::metrics::{cycle_weights, diameter, girth, is_connected};
use diam_core::reductions::{
    compose_general, reduce_vc_meda5_diam3, reduce_vc_meda5_diam4, verify_equivalence, ReductionArtifact,
    VcInstance,
};
use diam_core::solvers::{check_witness, solve_by_oracle, solve_with};
use diam_core::{Graph, OracleBudget, ProblemKind, ProblemSpec, Verdict};
use serde_json::{json, Value};

mod report;

use report::{input_summary, print_json, print_solution};

const BUDGET_ENV: &str = "DIAM_ORACLE_MAX_EDGES";

#[derive(Parser)]
#[command(name = "diam", version, about = "Diameter augmentation by edge deletion")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Size, connectivity, diameter, girth and per-edge cycle weights.
    Metrics { graph: PathBuf },
    /// Decide or optimize one of the deletion problems.
    Solve {
        graph: PathBuf,
        #[command(flatten)]
        problem: ProblemArgs,
        /// Skip the polynomial solvers and enumerate.
        #[arg(long)]
        oracle: bool,
    },
    /// Build a hardness gadget from a vertex cover instance.
    Reduce(ReduceArgs),
    /// Check a deletion set against a problem.
    Verify {
        graph: PathBuf,
        /// Pair list of edges to delete.
        #[arg(long)]
        deleted: PathBuf,
        #[command(flatten)]
        problem: ProblemArgs,
    },
    /// Print the complexity grid.
    Table {
        #[arg(long, default_value_t = 8)]
        max_d: usize,
        #[arg(long, default_value_t = 8)]
        max_k: usize,
    },
}

#[derive(Args)]
struct ProblemArgs {
    /// da, mda, eda, meda or mdi.
    #[arg(long)]
    problem: ProblemKind,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, requires = "y")]
    x: Option<usize>,
    #[arg(long, requires = "x")]
    y: Option<usize>,
}

impl ProblemArgs {
    fn spec(&self) -> ProblemSpec {
        let mut spec = ProblemSpec::new(self.problem, self.d);
        if let Some(k) = self.k {
            spec = spec.with_budget(k);
        }
        if let (Some(x), Some(y)) = (self.x, self.y) {
            spec = spec.with_pair(x, y);
        }
        spec
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Base {
    Diam3,
    Diam4,
}

#[derive(Args)]
struct ReduceArgs {
    /// Vertex cover graph as an edge list.
    #[arg(long)]
    gamma: PathBuf,
    /// Cover size bound.
    #[arg(long)]
    c: usize,
    #[arg(long, value_enum, required_unless_present = "extend_d", conflicts_with = "extend_d")]
    target: Option<Base>,
    /// Diameter of the composed instance.
    #[arg(long, requires = "extend_k")]
    extend_d: Option<usize>,
    /// Required diameter increase of the composed instance.
    #[arg(long, requires = "extend_d")]
    extend_k: Option<usize>,
    /// Writes PREFIX.txt and PREFIX.json.
    #[arg(long)]
    out: PathBuf,
    /// Also decide both instances by brute force and compare.
    #[arg(long)]
    check: bool,
}

/// Anything that aborts a command with exit code 2.
type Failure = Box<dyn std::error::Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether the outcome counts as a yes.
fn run(cli: &Cli) -> Result<bool, Failure> {
    match &cli.command {
        Command::Metrics { graph } => metrics(&read_graph(graph)?, cli.json),
        Command::Solve { graph, problem, oracle } => solve(&read_graph(graph)?, problem, *oracle, cli.json),
        Command::Reduce(args) => reduce(args, cli.json),
        Command::Verify { graph, deleted, problem } => verify(&read_graph(graph)?, deleted, problem, cli.json),
        Command::Table { max_d, max_k } => table(*max_d, *max_k, cli.json),
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn budget() -> Result<OracleBudget, Failure> {
    let budget = OracleBudget::default();
    match std::env::var(BUDGET_ENV) {
        Ok(v) => {
            let max = v.trim().parse().map_err(|_| format!("{BUDGET_ENV}={v:?} is not a number"))?;
            Ok(budget.with_max_edges(max))
        }
        Err(_) => Ok(budget),
    }
}

fn metrics(g: &Graph, as_json: bool) -> Result<bool, Failure> {
    let weights = cycle_weights(g);
    if as_json {
        let mut v = input_summary(g);
        v["cycle_weights"] = weights.iter().map(|(e, w)| json!({ "edge": e, "weight": w })).collect();
        v["diametral_pair"] = json!(diameter(g).pair);
        print_json(&v);
    } else {
        let diam = diameter(g);
        println!("n: {}", g.n());
        println!("m: {}", g.m());
        println!("connected: {}", if is_connected(g) { "yes" } else { "no" });
        match diam.pair {
            Some((u, v)) => println!("diameter: {} ({u}, {v})", diam.value),
            None => println!("diameter: {}", diam.value),
        }
        println!("girth: {}", girth(g));
        println!("cycle weights:");
        for (e, w) in weights.iter() {
            println!("  {e} {w}");
        }
    }
    Ok(true)
}

fn solve(g: &Graph, args: &ProblemArgs, oracle: bool, as_json: bool) -> Result<bool, Failure> {
    let spec = args.spec();
    let budget = budget()?;
    let start = Instant::now();
    let solution = if oracle {
        if !is_connected(g) {
            return Err("input graph is disconnected".into());
        }
        solve_by_oracle(&spec, g, &budget)?
    } else {
        solve_with(&spec, g, &budget)?
    };
    let elapsed = start.elapsed();
    if as_json {
        print_json(&json!({
            "command": "solve",
            "input": input_summary(g),
            "spec": spec,
            "solution": solution,
            "verdict": solution.verdict,
            "method": solution.method,
        }));
    } else {
        print_solution(&solution);
        println!("time: {:.3} ms", elapsed.as_secs_f64() * 1e3);
    }
    Ok(solution.verdict == Verdict::Yes)
}

fn verify(g: &Graph, deleted: &Path, args: &ProblemArgs, as_json: bool) -> Result<bool, Failure> {
    let spec = args.spec();
    let text = fs::read_to_string(deleted).map_err(|e| format!("{}: {e}", deleted.display()))?;
    let f = parse_pair_list(&text).map_err(|e| format!("{}: {e}", deleted.display()))?;
    let check = check_witness(g, &spec, &f)?;
    if as_json {
        print_json(&json!({
            "command": "verify",
            "input": input_summary(g),
            "spec": spec,
            "deleted": f,
            "valid": check.valid,
            "verdict": if check.valid { "valid" } else { "invalid" },
            "reason": check.reason,
            "achieved_diameter": check.achieved_diameter,
        }));
    } else {
        println!("{}", if check.valid { "valid" } else { "invalid" });
        if let Some(reason) = &check.reason {
            println!("reason: {reason}");
        }
        if let Some(d) = check.achieved_diameter {
            println!("achieved diameter: {d}");
        }
    }
    Ok(check.valid)
}

fn reduce(args: &ReduceArgs, as_json: bool) -> Result<bool, Failure> {
    let vc = VcInstance::new(read_graph(&args.gamma)?, args.c);
    let art: ReductionArtifact = match (args.extend_d, args.extend_k, args.target) {
        (Some(d), Some(k), _) => compose_general(d, k, &vc)?,
        (_, _, Some(Base::Diam3)) => reduce_vc_meda5_diam3(&vc)?,
        (_, _, Some(Base::Diam4)) => reduce_vc_meda5_diam4(&vc)?,
        _ => return Err("either --target or --extend-d with --extend-k is required".into()),
    };
    let txt = with_suffix(&args.out, "txt");
    let sidecar = with_suffix(&args.out, "json");
    fs::write(&txt, write_edge_list(&art.graph)).map_err(|e| format!("{}: {e}", txt.display()))?;
    let mut side = serde_json::to_string_pretty(&art.sidecar())?;
    side.push('\n');
    fs::write(&sidecar, side).map_err(|e| format!("{}: {e}", sidecar.display()))?;

    let equivalence = if args.check {
        Some(verify_equivalence(&vc, &art, &budget()?)?)
    } else {
        None
    };
    if as_json {
        print_json(&json!({
            "command": "reduce",
            "n": art.graph.n(),
            "m": art.graph.m(),
            "k": art.k,
            "diameter": art.diameter,
            "target_d": art.target_d,
            "source": art.source,
            "files": [txt.display().to_string(), sidecar.display().to_string()],
            "equivalence": equivalence,
        }));
    } else {
        println!("{}", art.source);
        println!("n: {}, m: {}", art.graph.n(), art.graph.m());
        println!("diameter: {} (verified)", art.diameter);
        println!("k: {}", art.k);
        println!("target diameter: {}", art.target_d);
        println!("wrote {} and {}", txt.display(), sidecar.display());
        if let Some(eq) = &equivalence {
            println!(
                "vertex cover: min {} vs c = {} -> {}; gadget -> {}; {}",
                eq.min_cover,
                args.c,
                yes_no(eq.vc_yes),
                yes_no(eq.artifact_yes),
                if eq.agree { "agree" } else { "DISAGREE" }
            );
        }
    }
    Ok(equivalence.is_none_or(|eq| eq.agree))
}

fn table(max_d: usize, max_k: usize, as_json: bool) -> Result<bool, Failure> {
    if as_json {
        let cells: Vec<Value> = (1..=max_d)
            .flat_map(|d| (1..=max_k).map(move |k| (d, k)))
            .map(|(d, k)| {
                let cell = classify(d, k);
                json!({ "d": d, "k": k, "class": cell.complexity.symbol(), "complexity": cell.complexity, "source": cell.source })
            })
            .collect();
        print_json(&json!({ "command": "table", "cells": cells }));
    } else {
        print!("{}", render_table(max_d, max_k));
    }
    Ok(true)
}

fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
