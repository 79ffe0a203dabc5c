use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use tableaux::parser::{parse_problem, parse_signed, Problem};

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Problem file, one `T: formula` or `F: formula` per line; `-` reads stdin.
    #[arg(conflicts_with = "expr")]
    pub file: Option<PathBuf>,
    /// Inline signed formula, e.g. -e "T: p & ~q". Repeatable.
    #[arg(short = 'e', long = "expr", value_name = "SIGNED")]
    pub expr: Vec<String>,
}

impl InputArgs {
    pub fn load(&self) -> Result<Problem> {
        let problem = match (&self.file, self.expr.is_empty()) {
            (Some(path), _) => load_file(path)?,
            (None, false) => inline(&self.expr)?,
            (None, true) => {
                bail!("no input: give a problem file, `-` for stdin, or -e \"T: formula\"")
            }
        };
        for w in &problem.warnings {
            eprintln!("warning: {w}");
        }
        Ok(problem)
    }

    /// Like [`load`](Self::load), but stdin is reserved for commands.
    pub fn load_for_repl(&self) -> Result<Problem> {
        if self.file.as_deref() == Some(Path::new("-")) {
            bail!("`step` reads commands from stdin; give the problem as a file or with -e");
        }
        self.load()
    }
}

fn load_file(path: &Path) -> Result<Problem> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        buf
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_problem(&text).with_context(|| format!("parsing {}", path.display()))
}

fn inline(exprs: &[String]) -> Result<Problem> {
    let mut problem = Problem::default();
    for (i, text) in exprs.iter().enumerate() {
        let sf = parse_signed(text)
            .with_context(|| format!("parsing -e argument {} `{text}`", i + 1))?;
        problem.push(sf, None);
    }
    Ok(problem)
}
