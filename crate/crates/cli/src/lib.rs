//! Command-line front end for the conditional-logic prover.
//!
//! Verdicts travel through the exit code: 0 proved, 1 not proved, 2
//! parse or usage error, 3 resource limit hit. Stdout carries the proof
//! (text or JSON) on success, and optionally a countermodel on failure.

pub mod bench;
pub mod json;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;
use condlog::calculus::{BoundedSequent, ProofNode, System};
use condlog::formula;
use condlog::search::{decide, prove_bounded, prove_sequent, ProveResult, SearchConfig};
use condlog::semantics::{find_countermodel, FiniteModel, LabelMapping};
use condlog::sequent::{parse_sequent, Sequent};

pub const EXIT_PROVED: i32 = 0;
pub const EXIT_NOT_PROVED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

const GRAMMAR: &str = "\
goal syntax:
  formula   := imp ('=>' formula)?      conditional, right associative
  imp       := or ('->' imp)?           right associative
  or        := and ('|' and)*
  and       := unary ('&' unary)*
  unary     := '~' unary | primary
  primary   := 'true' | 'false' | atom | '(' formula ')'
  atom      := [a-z][a-zA-Z0-9_]*

sequent mode (the goal contains '|-'):
  sequent   := items '|-' items
  items     := (item (',' item)*)?
  item      := label ':' formula        labelled formula
             | label '-[' formula ']->' label
             | formula                  short for 'x0: <formula>'
  label     := 'x' digits
";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_system(s: &str) -> Result<System, String> {
    s.parse()
        .map_err(|()| format!("expected ck, ck+id, ck+mp or ck+mp+id, got {s:?}"))
}

/// Decides validity in the conditional logics CK, CK+ID, CK+MP and
/// CK+MP+ID. Exit code 0 means proved, 1 not proved, 2 usage or parse
/// error, 3 resource limit.
#[derive(Debug, Parser)]
#[command(name = "prove", version, disable_help_subcommand = true)]
struct Cli {
    /// Conditional system to decide in.
    #[arg(long, value_parser = parse_system, required_unless_present = "bench")]
    system: Option<System>,

    /// Formula to decide, or a sequent when it contains `|-`.
    #[arg(value_name = "GOAL", conflicts_with = "file")]
    goal: Option<String>,

    /// Read the goal from a file instead of the command line.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,

    /// Proof output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// On a negative verdict, search for a finite countermodel.
    #[arg(long)]
    countermodel: bool,

    /// Largest world count for the countermodel search.
    #[arg(long, value_parser = clap::value_parser!(usize), default_value_t = 2)]
    max_worlds: usize,

    /// Per-branch rule application limit (safety net).
    #[arg(long, default_value_t = SearchConfig::DEFAULT_DEPTH_LIMIT)]
    depth_limit: usize,

    /// Run every `.seq` case in a directory and report verdicts.
    #[arg(
        long,
        value_name = "DIR",
        conflicts_with_all = ["goal", "file", "countermodel"]
    )]
    bench: Option<PathBuf>,
}

enum Goal {
    Formula(formula::Formula),
    Sequent(Sequent),
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    eprintln!();
    eprintln!("{GRAMMAR}");
    EXIT_USAGE
}

/// Renders a proof tree, one node per line, indentation showing depth.
pub fn render_proof_text(proof: &ProofNode) -> String {
    fn walk(node: &ProofNode, depth: usize, out: &mut String) {
        let _ = writeln!(out, "{:indent$}{}: {}", "", node.rule, node.conclusion, indent = depth * 2);
        for premise in &node.premises {
            walk(premise, depth + 1, out);
        }
    }
    let mut out = String::new();
    walk(proof, 0, &mut out);
    out
}

fn world_set(mask: u8, world_count: usize) -> String {
    let mut out = String::from("{");
    let mut first = true;
    for w in 0..world_count {
        if mask >> w & 1 == 1 {
            if !first {
                out.push(',');
            }
            let _ = write!(out, "w{w}");
            first = false;
        }
    }
    out.push('}');
    out
}

/// The countermodel text format: the worlds, each atom's extension, the
/// whole selection table and the falsifying label mapping.
pub fn render_countermodel(m: &FiniteModel, i: &LabelMapping) -> String {
    let n = m.world_count();
    let mut out = String::from("worlds:");
    for w in 0..n {
        let _ = write!(out, " w{w}");
    }
    out.push('\n');
    for (atom, mask) in m.valuation() {
        let _ = writeln!(out, "val {atom}: {}", world_set(*mask, n));
    }
    for w in 0..n {
        for subset in 0..(1u8 << n) {
            let _ = writeln!(
                out,
                "f(w{w}, {}) = {}",
                world_set(subset, n),
                world_set(m.select(w, subset), n)
            );
        }
    }
    out.push_str("mapping:");
    for (label, world) in &i.0 {
        let _ = write!(out, " {label}->w{world}");
    }
    out.push('\n');
    out
}

fn prove_goal(goal: &Goal, sys: System, cfg: &SearchConfig) -> ProveResult {
    match goal {
        Goal::Formula(f) => decide(f, sys, cfg),
        Goal::Sequent(s) if sys.has_mp() => {
            prove_bounded(&BoundedSequent::new(s.clone()), sys, cfg)
        }
        Goal::Sequent(s) => prove_sequent(s, sys, cfg),
    }
}

/// Entry point; returns the process exit code.
pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return EXIT_PROVED;
        }
        Err(e) => {
            eprint!("{e}");
            eprintln!();
            eprintln!("{GRAMMAR}");
            return EXIT_USAGE;
        }
    };

    if let Some(dir) = &cli.bench {
        return match bench::run_bench(dir, cli.depth_limit) {
            Ok(report) => {
                println!("{report}");
                if report.all_passed() {
                    EXIT_PROVED
                } else {
                    EXIT_NOT_PROVED
                }
            }
            Err(e) => usage_error(&format!("cannot read corpus {}: {e}", dir.display())),
        };
    }

    let sys = cli.system.expect("required unless --bench");
    let text = match (&cli.goal, &cli.file) {
        (Some(goal), None) => goal.clone(),
        (None, Some(path)) => match std::fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) => return usage_error(&format!("cannot read {}: {e}", path.display())),
        },
        _ => return usage_error("expected exactly one goal (positional or --file)"),
    };
    let text = text.trim();

    let goal = if text.contains("|-") {
        match parse_sequent(text) {
            Ok(s) if s.is_regular() => Goal::Sequent(s),
            Ok(_) => {
                return usage_error(
                    "the antecedent transitions must form a forest (regular sequent)",
                )
            }
            Err(e) => return usage_error(&e.to_string()),
        }
    } else {
        match formula::parse(text) {
            Ok(f) => Goal::Formula(f),
            Err(e) => return usage_error(&e.to_string()),
        }
    };

    if !(1..=condlog::semantics::MAX_WORLDS).contains(&cli.max_worlds) {
        return usage_error("--max-worlds must be 1 or 2");
    }
    if cli.depth_limit == 0 {
        return usage_error("--depth-limit must be positive");
    }

    let cfg = SearchConfig {
        depth_limit: cli.depth_limit,
        collect_proof: true,
        ..SearchConfig::for_system(sys)
    };

    match prove_goal(&goal, sys, &cfg) {
        ProveResult::Proved(proof) => {
            let proof = proof.expect("proof collection is on");
            match cli.format {
                Format::Text => print!("{}", render_proof_text(&proof)),
                Format::Json => println!("{}", json::proof_to_string(&proof)),
            }
            EXIT_PROVED
        }
        ProveResult::NotProved => {
            if cli.format == Format::Text {
                println!("not proved");
            }
            if cli.countermodel {
                let sequent = match &goal {
                    Goal::Formula(f) => Sequent::goal(f.clone()),
                    Goal::Sequent(s) => s.clone(),
                };
                let atoms = sequent.atoms();
                match find_countermodel(&sequent, sys, cli.max_worlds, &atoms) {
                    Ok(Some((model, mapping))) => {
                        print!("{}", render_countermodel(&model, &mapping));
                    }
                    Ok(None) => {
                        println!("no countermodel within {} worlds", cli.max_worlds);
                    }
                    Err(e) => return usage_error(&e.to_string()),
                }
            }
            EXIT_NOT_PROVED
        }
        ProveResult::ResourceExceeded(limit) => {
            eprintln!("search aborted: depth limit {limit} exceeded");
            EXIT_RESOURCE
        }
    }
}
