//! Command-line front end: model checking, games, the formula library and
//! the graph families.
//!
//! Exit codes: 0 true / Duplicator, 1 false / Spoiler, 2 usage or parse
//! error, 3 refused by the budget.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use seplogic::eval::estimated_cost;
use seplogic::families;
use seplogic::formulas;
use seplogic::games::{self, GameConfig, Player, Variant};
use seplogic::syntax::parse_with_signature;
use seplogic::{print, Assignment, Evaluator, Graph, RelationalStructure};

/// Default budget for `check`, in the units of `estimated_cost`.
const CHECK_BUDGET: f64 = 1e16;

#[derive(Parser)]
#[command(name = "seplogic", version, about = "Separator logic and disjoint-paths logic on finite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula on a graph or structure file.
    Check {
        /// Graph file (`n m` header) or structure file (`universe n` header).
        graph: PathBuf,
        /// Formula text, a file containing one, or `lib:NAME[:PARAM...]`.
        formula: String,
        /// Bindings for free variables, as `x=0`; repeatable or comma separated.
        #[arg(long, short, value_delimiter = ',')]
        assign: Vec<String>,
        /// Refuse formulas whose estimated cost exceeds this.
        #[arg(long)]
        budget: Option<f64>,
        /// Ignore the budget.
        #[arg(long)]
        force: bool,
    },
    /// Solve an Ehrenfeucht–Fraïssé game between two files.
    Game {
        a: PathBuf,
        b: PathBuf,
        /// `plain`, `conn:K` or `dp:K`.
        #[arg(long, default_value = "plain")]
        variant: String,
        /// Number of rounds.
        #[arg(short, long)]
        q: usize,
        /// Opening pair `a:b`; repeatable or comma separated.
        #[arg(long, value_delimiter = ',')]
        pin: Vec<String>,
        /// Print a winning strategy.
        #[arg(long)]
        strategy: bool,
        /// Also compare this many random sentences of the game's fragment.
        #[arg(long, default_value_t = 0)]
        sample: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Refuse games with more estimated leaves than this.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Print a library formula.
    Lib {
        name: String,
        params: Vec<String>,
    },
    /// Write the two graphs of a separating family.
    Gen {
        name: String,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Output prefix; writes PREFIX.a.graph and PREFIX.b.graph.
        #[arg(short, long, default_value = "pair")]
        out: PathBuf,
    },
}

/// An error to report together with its exit code.
struct Failure(u8, String);

fn usage(message: impl ToString) -> Failure {
    Failure(2, message.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check {
            graph,
            formula,
            assign,
            budget,
            force,
        } => check(&graph, &formula, &assign, budget, force),
        Command::Game {
            a,
            b,
            variant,
            q,
            pin,
            strategy,
            sample,
            seed,
            budget,
        } => game(&a, &b, &variant, q, &pin, strategy, sample, seed, budget),
        Command::Lib { name, params } => lib(&name, &params),
        Command::Gen { name, q, k, out } => gen(&name, q, k, &out),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn env_budget() -> Result<Option<f64>, Failure> {
    match std::env::var("SEPLOGIC_BUDGET") {
        Ok(v) => v
            .parse()
            .map(Some)
            .map_err(|_| usage(format!("SEPLOGIC_BUDGET is not a number: `{v}`"))),
        Err(_) => Ok(None),
    }
}

/// Reads a graph or structure file. A path that does not exist but names a
/// standard graph such as `C5` or `K3,3` yields that graph.
fn load(path: &Path) -> Result<RelationalStructure, Failure> {
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            let named = path.to_str().and_then(Graph::named);
            return match named {
                Some(g) if !path.exists() => Ok(RelationalStructure::from_graph(&g).expect("simple graph")),
                _ => Err(usage(format!("{}: {e}", path.display()))),
            };
        }
    };
    let is_structure = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with("universe"));
    let context = |e: &dyn std::fmt::Display| usage(format!("{}: {e}", path.display()));
    if is_structure {
        text.parse().map_err(|e| context(&e))
    } else {
        let g: Graph = text.parse().map_err(|e| context(&e))?;
        RelationalStructure::from_graph(&g).map_err(|e| context(&e))
    }
}

fn formula_text(arg: &str) -> Result<String, Failure> {
    if let Some(spec) = arg.strip_prefix("lib:") {
        let mut parts = spec.split(':');
        let name = parts.next().unwrap_or_default();
        let params: Vec<&str> = parts.collect();
        return formulas::build(name, &params).map(|f| print(&f)).map_err(usage);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return fs::read_to_string(path).map_err(|e| usage(format!("{arg}: {e}")));
    }
    Ok(arg.to_string())
}

fn parse_assignment(items: &[String]) -> Result<Assignment, Failure> {
    let mut a = Assignment::new();
    for item in items {
        let parsed = item
            .split_once('=')
            .and_then(|(x, v)| Some((x.trim(), v.trim().parse().ok()?)));
        let (x, v) = parsed.ok_or_else(|| usage(format!("bad binding `{item}`, expected VAR=ELEMENT")))?;
        a.insert(x, v);
    }
    Ok(a)
}

fn check(graph: &Path, formula: &str, assign: &[String], budget: Option<f64>, force: bool) -> Result<u8, Failure> {
    let s = load(graph)?;
    let text = formula_text(formula)?;
    let f = parse_with_signature(&text, &s.signature()).map_err(usage)?;
    let assignment = parse_assignment(assign)?;
    let budget = budget.or(env_budget()?).unwrap_or(CHECK_BUDGET);
    let cost = estimated_cost(&s, &f);
    if !force && cost > budget {
        return Err(Failure(
            3,
            format!("estimated cost {cost:.3e} exceeds the budget of {budget:.3e}; use --force to run anyway"),
        ));
    }
    let verdict = Evaluator::new(&s).evaluate(&f, &assignment).map_err(usage)?;
    println!("result: {verdict}");
    Ok(if verdict { 0 } else { 1 })
}

fn parse_pins(items: &[String]) -> Result<Vec<(usize, usize)>, Failure> {
    items
        .iter()
        .map(|item| {
            item.split_once(':')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| usage(format!("bad pin `{item}`, expected A:B")))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn game(
    a: &Path,
    b: &Path,
    variant: &str,
    q: usize,
    pins: &[String],
    strategy: bool,
    sample: usize,
    seed: u64,
    budget: Option<f64>,
) -> Result<u8, Failure> {
    let (sa, sb) = (load(a)?, load(b)?);
    let variant: Variant = variant.parse().map_err(usage)?;
    let mut cfg = GameConfig::new(q, variant).pinned(parse_pins(pins)?);
    if let Some(budget) = budget.or(env_budget()?) {
        cfg = cfg.budget(budget);
    }
    cfg.extract_strategy = strategy;
    let code = |e: games::GameError| match e {
        games::GameError::Budget { .. } => Failure(3, e.to_string()),
        _ => usage(e),
    };
    let result = games::solve(&sa, &sb, &cfg).map_err(code)?;
    println!("winner: {}", result.winner);
    if strategy {
        match &result.strategy {
            Some(s) => print!("{}", s.render()),
            None => println!("# strategy larger than {} nodes, not extracted", cfg.strategy_cap),
        }
    }
    if sample > 0 {
        let report = games::sample_soundness(&sa, &sb, &cfg, sample, q, seed).map_err(code)?;
        println!(
            "# sampled {} sentences, {} disagreements",
            report.samples,
            report.disagreements.len()
        );
        if let Some(f) = &report.distinguishing {
            println!("# distinguishing: {}", print(f));
        }
    }
    Ok(match result.winner {
        Player::Duplicator => 0,
        Player::Spoiler => 1,
    })
}

fn lib(name: &str, params: &[String]) -> Result<u8, Failure> {
    let params: Vec<&str> = params.iter().map(String::as_str).collect();
    let f = formulas::build(name, &params).map_err(usage)?;
    println!("{}", print(&f));
    println!("# fragment: {}", f.fragment());
    Ok(0)
}

fn gen(name: &str, q: usize, k: Option<usize>, out: &Path) -> Result<u8, Failure> {
    let (g, h) = families::generate(name, q, k).map_err(usage)?;
    for (suffix, graph) in [("a", g), ("b", h)] {
        let mut path = out.as_os_str().to_owned();
        path.push(format!(".{suffix}.graph"));
        let path = PathBuf::from(path);
        fs::write(&path, graph.to_text()).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        println!("{} ({} vertices, {} edges)", path.display(), graph.n(), graph.edge_count());
    }
    Ok(0)
}
