use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Args;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use tableaux::formula::SignedFormula;
use tableaux::generate::FormulaGenerator;
use tableaux::models::{models_with, RunStats, SelectionStrategy};
use tableaux::parser::parse_problem;

use crate::{Config, Format};

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Problem file, or a directory whose files are all problems.
    #[arg(conflicts_with = "seed")]
    pub corpus: Option<PathBuf>,
    /// Number of generated problems (with --seed).
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Maximum formula depth of generated problems.
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
    /// Number of distinct letters in generated problems.
    #[arg(long, default_value_t = 3)]
    pub letters: usize,
    /// Maximum number of signed formulae per generated problem.
    #[arg(long, default_value_t = 3)]
    pub size: usize,
}

#[derive(Debug, Serialize)]
struct Row {
    strategy: &'static str,
    problems: usize,
    #[serde(flatten)]
    stats: RunStats,
}

fn load_corpus(path: &Path) -> Result<Vec<Vec<SignedFormula>>> {
    let files = if path.is_dir() {
        let mut files = Vec::new();
        for entry in
            std::fs::read_dir(path).with_context(|| format!("reading {}", path.display()))?
        {
            let p = entry?.path();
            if p.is_file() {
                files.push(p);
            }
        }
        files.sort();
        files
    } else {
        vec![path.to_path_buf()]
    };
    files
        .iter()
        .map(|f| {
            let text =
                std::fs::read_to_string(f).with_context(|| format!("reading {}", f.display()))?;
            let problem =
                parse_problem(&text).with_context(|| format!("parsing {}", f.display()))?;
            Ok(problem.assumptions)
        })
        .collect()
}

fn generate(seed: u64, args: &BenchArgs) -> Result<Vec<Vec<SignedFormula>>> {
    if args.letters == 0 || args.size == 0 {
        bail!("--letters and --size must be at least 1");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let generator = FormulaGenerator::new(args.letters, args.depth);
    Ok((0..args.count)
        .map(|_| generator.gamma(&mut rng, args.size))
        .collect())
}

fn add(total: &mut RunStats, s: RunStats) {
    total.nodes += s.nodes;
    total.leaves += s.leaves;
    total.closed_leaves += s.closed_leaves;
    total.expansions += s.expansions;
}

pub fn run(config: &Config, args: &BenchArgs) -> Result<ExitCode> {
    config.reject_dot("bench")?;
    let corpus = match (&args.corpus, config.seed) {
        (Some(path), _) => load_corpus(path)?,
        (None, Some(seed)) => generate(seed, args)?,
        (None, None) => bail!("give a corpus path or --seed N"),
    };
    let strategies = [
        ("branch-last", SelectionStrategy::BranchLast),
        ("first", SelectionStrategy::FirstComposite),
    ];
    let mut rows = Vec::new();
    if !corpus.is_empty() {
        for (name, strategy) in strategies {
            let mut total = RunStats::default();
            for gamma in &corpus {
                let mut s = strategy.clone();
                let (_, stats) = models_with(gamma, &mut s, config.engine_options())?;
                add(&mut total, stats);
            }
            rows.push(Row {
                strategy: name,
                problems: corpus.len(),
                stats: total,
            });
        }
    }
    match config.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
        _ => {
            println!(
                "{:<12} {:>8} {:>10} {:>10} {:>10} {:>10}",
                "strategy", "problems", "nodes", "leaves", "closed", "expansions"
            );
            for r in &rows {
                println!(
                    "{:<12} {:>8} {:>10} {:>10} {:>10} {:>10}",
                    r.strategy,
                    r.problems,
                    r.stats.nodes,
                    r.stats.leaves,
                    r.stats.closed_leaves,
                    r.stats.expansions
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
