mod bench;
mod input;
mod query;
mod step;
mod tree;

use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use tableaux::models::{EngineOptions, SelectionStrategy};
use tableaux::oracle::DEFAULT_MAX_LETTERS;
use tableaux::trace::TraceOptions;

use crate::input::InputArgs;

#[derive(Debug, Parser)]
#[command(
    name = "tableaux",
    version,
    about = "Enumerate the models of signed propositional formulae"
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every partial model, one per line.
    Models(InputArgs),
    /// Print SAT or UNSAT.
    Sat(InputArgs),
    /// Decide whether GOAL holds under every interpretation.
    Valid { goal: String },
    /// Decide whether the input entails GOAL.
    Entails {
        goal: String,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Build and print the tableau (or, with --tree-of-lists, the tree of lists).
    Tableau(InputArgs),
    /// Extend a tableau by hand; commands are read from standard input.
    Step(InputArgs),
    /// Compare strategy cost on a corpus or on generated problems.
    Bench(bench::BenchArgs),
    /// Compare the engine against the truth table.
    Check(InputArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyName {
    BranchLast,
    First,
    Manual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Args)]
pub struct Config {
    /// Which composite formula to decompose next.
    #[arg(long, value_enum, default_value_t = StrategyName::BranchLast, global = true)]
    strategy: StrategyName,
    /// Comma-separated indices for --strategy manual.
    #[arg(long, value_delimiter = ',', global = true)]
    choices: Option<Vec<usize>>,
    /// Stop at sets holding opposite literals.
    #[arg(long, global = true, conflicts_with = "full_expansion")]
    pub early_closure: bool,
    /// Expand every branch to literals (the default).
    #[arg(long, global = true)]
    pub full_expansion: bool,
    /// Drop models that extend another model.
    #[arg(long, global = true)]
    pub subsume: bool,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Show the tree of lists instead of the tableau.
    #[arg(long, global = true)]
    pub tree_of_lists: bool,
    /// Seed for the problems `bench` generates.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Largest letter count the truth table will enumerate.
    #[arg(long, default_value_t = DEFAULT_MAX_LETTERS, global = true)]
    pub max_letters: usize,
}

impl Config {
    pub fn strategy(&self) -> Result<SelectionStrategy> {
        match (self.strategy, &self.choices) {
            (StrategyName::Manual, Some(c)) => Ok(SelectionStrategy::manual(c.clone())),
            (StrategyName::Manual, None) => bail!("--strategy manual needs --choices"),
            (_, Some(_)) => bail!("--choices only applies to --strategy manual"),
            (StrategyName::BranchLast, None) => Ok(SelectionStrategy::BranchLast),
            (StrategyName::First, None) => Ok(SelectionStrategy::FirstComposite),
        }
    }

    pub fn engine_options(&self) -> EngineOptions {
        EngineOptions {
            early_closure: self.early_closure,
        }
    }

    pub fn trace_options(&self) -> TraceOptions {
        TraceOptions {
            early_stop: self.early_closure,
        }
    }

    pub fn reject_dot(&self, command: &str) -> Result<()> {
        if self.format == Format::Dot {
            bail!("--format dot is only available for `tableau`, not `{command}`");
        }
        Ok(())
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let config = &cli.config;
    match cli.command {
        Command::Models(input) => query::models(config, &input.load()?),
        Command::Sat(input) => query::sat(config, &input.load()?),
        Command::Valid { goal } => query::valid(config, &goal),
        Command::Entails { goal, input } => query::entails(config, &input.load()?, &goal),
        Command::Tableau(input) => tree::tableau(config, &input.load()?),
        Command::Step(input) => step::run(config, &input.load_for_repl()?),
        Command::Bench(args) => bench::run(config, &args),
        Command::Check(input) => query::check(config, &input.load()?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
