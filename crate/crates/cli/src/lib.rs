// SPDX-License-Identifier: MIT
//! The `chaingraph` command line.
//!
//! Exit status is 0 when a command computed its answer (or the answer is
//! yes), 1 when a yes/no answer is no, and 2 on bad input.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use chaingraph::complexes::equivalence_class;
use chaingraph::depmodel::graphoid_closure;
use chaingraph::format::write_graph_list;
use chaingraph::recovery::{recover_largest_with, RuleOrder};
use chaingraph::separation::moral_graph;
use chaingraph::{
    enumerate_complexes, input_list, largest_cg_oracle, markov_equivalent, parse_graph,
    parse_model, parse_triplet, pattern_of, recover_pattern, represented, write_dot, write_graph,
    CgModel, Criterion, DependencyModel, ExplicitModel, HybridGraph, CLASS_EDGE_BOUND,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "chaingraph",
    version,
    about = "Chain graph independence models and their recovery"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Whether the graph is a chain graph.
    Check { file: PathBuf },
    /// The components in chain order, one per line.
    Components { file: PathBuf },
    /// Every complex of a chain graph.
    Complexes { file: PathBuf },
    /// The moral graph of a chain graph.
    Moralize {
        file: PathBuf,
        #[command(flatten)]
        dot: DotArg,
    },
    /// Whether `X | Y | Z` is represented in a chain graph.
    Sep {
        file: PathBuf,
        triplet: String,
        #[arg(long, value_enum, default_value_t = CriterionArg::Moral)]
        criterion: CriterionArg,
    },
    /// The pattern of a chain graph, or the pattern recovered from a model.
    Pattern {
        #[arg(required_unless_present = "model", conflicts_with = "model")]
        file: Option<PathBuf>,
        #[arg(long)]
        model: Option<PathBuf>,
        #[command(flatten)]
        dot: DotArg,
    },
    /// The largest chain graph with the given pattern.
    Largest {
        file: PathBuf,
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = OrderArg::Necessity)]
        order: OrderArg,
        #[command(flatten)]
        dot: DotArg,
    },
    /// Recovers the largest chain graph from the model a chain graph induces.
    Recover {
        #[arg(long = "from-cg")]
        from_cg: PathBuf,
        /// Compare against the pattern and the largest graph computed directly.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        dot: DotArg,
    },
    /// Whether two chain graphs are Markov equivalent.
    Equiv { first: PathBuf, second: PathBuf },
    /// The input list of a chain graph for its component chain.
    Inputlist { file: PathBuf },
    /// The graphoid closure of a model's independencies.
    Closure {
        model: PathBuf,
        /// Leave out the intersection rule.
        #[arg(long)]
        semigraphoid: bool,
    },
    /// Every chain graph Markov equivalent to the given one.
    Class {
        file: PathBuf,
        #[arg(long = "max-edges", default_value_t = CLASS_EDGE_BOUND)]
        max_edges: usize,
    },
}

#[derive(Args, Debug)]
struct DotArg {
    /// Also write a DOT rendering of the result to this path.
    #[arg(long = "dot", value_name = "PATH")]
    path: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CriterionArg {
    Moral,
    C,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Necessity,
    Doublecycle,
}

/// Failure to produce an answer; always exit status 2.
#[derive(Debug)]
struct Failure(String);

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<chaingraph::Error> for Failure {
    fn from(e: chaingraph::Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs one invocation and returns its exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> std::result::Result<HybridGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure(format!("{}:{e}", path.display())))
}

fn load_model(path: &Path) -> std::result::Result<ExplicitModel, Failure> {
    let file = parse_model(&read(path)?).map_err(|e| Failure(format!("{}:{e}", path.display())))?;
    Ok(ExplicitModel::from_file(file)?)
}

/// A graph that must be a chain graph; the error names a pseudocycle.
fn load_chain_graph(path: &Path) -> std::result::Result<HybridGraph, Failure> {
    let g = load_graph(path)?;
    match g.directed_pseudocycle() {
        None => Ok(g),
        Some(cycle) => Err(Failure(format!(
            "{}: not a chain graph: directed pseudocycle {}",
            path.display(),
            show_route(&g, &cycle)
        ))),
    }
}

/// `a -> b -- c -> a`
fn show_route(g: &HybridGraph, route: &[usize]) -> String {
    let mut s = g.label(route[0]).to_string();
    for w in route.windows(2) {
        s.push_str(if g.is_line(w[0], w[1]) {
            " -- "
        } else {
            " -> "
        });
        s.push_str(g.label(w[1]));
    }
    s
}

fn emit_graph(out: &mut dyn Write, g: &HybridGraph, dot: &DotArg) -> Outcome {
    out.write_all(write_graph(g).as_bytes())?;
    if let Some(path) = &dot.path {
        std::fs::write(path, write_dot(g))
            .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    }
    Ok(0)
}

fn verdict(out: &mut dyn Write, yes: bool, yes_text: &str, no_text: &str) -> Outcome {
    writeln!(out, "{}", if yes { yes_text } else { no_text })?;
    Ok(if yes { 0 } else { 1 })
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Check { file } => {
            let g = load_graph(&file)?;
            match g.directed_pseudocycle() {
                None => verdict(out, true, "CHAIN GRAPH", ""),
                Some(cycle) => {
                    writeln!(out, "NOT A CHAIN GRAPH")?;
                    writeln!(out, "directed pseudocycle {}", show_route(&g, &cycle))?;
                    Ok(1)
                }
            }
        }
        Command::Components { file } => {
            let g = load_chain_graph(&file)?;
            for block in g.component_chain()?.blocks() {
                writeln!(out, "{}", g.labels_of(*block).join(" "))?;
            }
            Ok(0)
        }
        Command::Complexes { file } => {
            let g = load_chain_graph(&file)?;
            for c in enumerate_complexes(&g) {
                writeln!(out, "{}", c.display(&g))?;
            }
            Ok(0)
        }
        Command::Moralize { file, dot } => {
            let g = load_chain_graph(&file)?;
            emit_graph(out, &moral_graph(&g)?, &dot)
        }
        Command::Sep {
            file,
            triplet,
            criterion,
        } => {
            let g = load_chain_graph(&file)?;
            let t =
                parse_triplet(&triplet, g.labels()).map_err(|e| Failure(format!("triplet:{e}")))?;
            let criterion = match criterion {
                CriterionArg::Moral => Criterion::Moralization,
                CriterionArg::C => Criterion::CSeparation,
            };
            verdict(
                out,
                represented(&g, &t, criterion)?,
                "SEPARATED",
                "CONNECTED",
            )
        }
        Command::Pattern { file, model, dot } => {
            let pattern = match (file, model) {
                (Some(file), _) => pattern_of(&load_chain_graph(&file)?)?,
                (None, Some(model)) => recover_pattern(&load_model(&model)?)?,
                (None, None) => unreachable!("clap requires one input"),
            };
            emit_graph(out, &pattern, &dot)
        }
        Command::Largest {
            file,
            trace,
            order,
            dot,
        } => {
            let pattern = load_graph(&file)?;
            let order = match order {
                OrderArg::Necessity => RuleOrder::NecessityFirst,
                OrderArg::Doublecycle => RuleOrder::DoublecycleFirst,
            };
            let result = recover_largest_with(&pattern, order)?;
            if trace {
                for event in &result.trace {
                    writeln!(out, "# {}", event.display(&pattern))?;
                }
            }
            emit_graph(out, &result.graph, &dot)
        }
        Command::Recover {
            from_cg,
            verify,
            trace,
            dot,
        } => {
            let g = load_chain_graph(&from_cg)?;
            let model = CgModel::new(g.clone())?;
            let pattern = recover_pattern(&model)?;
            let result = recover_largest_with(&pattern, RuleOrder::default())?;
            if trace {
                for event in &result.trace {
                    writeln!(out, "# {}", event.display(&pattern))?;
                }
            }
            emit_graph(out, &result.graph, &dot)?;
            if !verify {
                return Ok(0);
            }
            let pattern_ok = pattern == pattern_of(&g)?;
            let largest_ok = result.graph == largest_cg_oracle(&g, CLASS_EDGE_BOUND)?;
            for (ok, what) in [(pattern_ok, "pattern"), (largest_ok, "largest")] {
                writeln!(out, "{} {what}", if ok { "PASS" } else { "FAIL" })?;
            }
            Ok(if pattern_ok && largest_ok { 0 } else { 1 })
        }
        Command::Equiv { first, second } => {
            let g = load_chain_graph(&first)?;
            let h = load_chain_graph(&second)?;
            verdict(
                out,
                markov_equivalent(&g, &h)?,
                "EQUIVALENT",
                "NOT EQUIVALENT",
            )
        }
        Command::Inputlist { file } => {
            let g = load_chain_graph(&file)?;
            for t in input_list(&g, &g.component_chain()?)? {
                writeln!(out, "{}", t.display(g.labels()))?;
            }
            Ok(0)
        }
        Command::Closure {
            model,
            semigraphoid,
        } => {
            let m = load_model(&model)?;
            let list = m.independencies().iter().copied();
            for t in graphoid_closure(list, m.n(), !semigraphoid)? {
                writeln!(out, "{}", t.display(m.labels()))?;
            }
            Ok(0)
        }
        Command::Class { file, max_edges } => {
            let g = load_chain_graph(&file)?;
            let class = equivalence_class(&g, max_edges)?;
            out.write_all(write_graph_list(&class).as_bytes())?;
            Ok(0)
        }
    }
}
