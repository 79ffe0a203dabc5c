//! Manual extension of a tableau. Commands come from stdin, so a session can
//! be scripted by piping a file.

use std::io::{self, BufRead, IsTerminal, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::json;
use tableaux::formula::SignedFormula;
use tableaux::models::{
    has_complementary_pair, is_literal_set, subsume, ModelSet, SelectionStrategy, Selector,
};
use tableaux::parser::Problem;
use tableaux::trace::{set_status, tableau_ascii, tableau_json, tableau_models, Tableau};

use crate::query::{models_json, verdict};
use crate::tree::print_models;
use crate::Config;

const HELP: &str = "\
commands:
  use L.F      decompose formula F of leaf L (both 0-based)
  auto         finish every open branch with the default strategy
  show         print the leaves again
  tree         print the whole tableau
  undo         revert the last use or auto
  export [F]   write the tableau as JSON to file F, or to stdout
  quit         leave";

struct Session {
    tableau: Tableau,
    history: Vec<Tableau>,
    early_stop: bool,
    subsume: bool,
}

impl Session {
    fn finished(&self, set: &[SignedFormula]) -> bool {
        is_literal_set(set) || (self.early_stop && has_complementary_pair(set))
    }

    fn is_complete(&self) -> bool {
        self.tableau
            .leaves()
            .iter()
            .all(|(_, set)| self.finished(set))
    }

    fn models(&self) -> Option<ModelSet> {
        let ms = tableau_models(&self.tableau).ok()?;
        Some(if self.subsume { subsume(&ms) } else { ms })
    }

    fn show(&self) {
        for (n, (_, set)) in self.tableau.leaves().iter().enumerate() {
            let status = set_status(set);
            let note = if self.finished(set) {
                status.to_string()
            } else {
                "to do".into()
            };
            println!("leaf {n} ({note}):");
            for (i, sf) in set.iter().enumerate() {
                if sf.is_literal() {
                    println!("       {sf}");
                } else {
                    println!("  [{i}]  {sf}");
                }
            }
        }
        if self.is_complete() {
            if let Some(ms) = self.models() {
                print_models(&ms);
            }
            println!("tableau complete; `export [FILE]` writes it as JSON");
        }
    }

    fn apply(&mut self, leaf: usize, index: usize) -> Result<()> {
        let leaves = self.tableau.leaves();
        let (path, set) = leaves
            .get(leaf)
            .ok_or_else(|| anyhow!("no leaf {leaf}; there are {}", leaves.len()))?;
        if self.finished(set) {
            bail!("leaf {leaf} is finished");
        }
        let sf = set
            .get(index)
            .ok_or_else(|| anyhow!("leaf {leaf} has no formula {index}; it holds {}", set.len()))?;
        if sf.is_literal() {
            bail!("`{sf}` is a literal and cannot be decomposed");
        }
        let before = self.tableau.clone();
        self.tableau.extend_at(path, index)?;
        self.history.push(before);
        Ok(())
    }

    fn auto(&mut self) -> Result<()> {
        let before = self.tableau.clone();
        let mut strategy = SelectionStrategy::BranchLast;
        while let Some((path, set)) = self
            .tableau
            .leaves()
            .into_iter()
            .find(|(_, s)| !self.finished(s))
        {
            let index = strategy
                .select(&set)?
                .expect("unfinished leaves hold a composite");
            self.tableau.extend_at(&path, index)?;
        }
        self.history.push(before);
        Ok(())
    }

    fn export(&self, target: Option<&str>) -> Result<()> {
        let doc = json!({
            "tree": tableau_json(&self.tableau),
            "models": self.models().as_ref().map(models_json),
        });
        let text = serde_json::to_string_pretty(&doc)?;
        match target {
            None => println!("{text}"),
            Some(path) => {
                std::fs::write(path, text + "\n").with_context(|| format!("writing {path}"))?;
                println!("wrote {path}");
            }
        }
        Ok(())
    }
}

fn parse_use(arg: &str) -> Result<(usize, usize)> {
    let (l, f) = arg
        .split_once('.')
        .ok_or_else(|| anyhow!("expected `use LEAF.FORMULA`, e.g. `use 0.1`"))?;
    let l = l
        .trim()
        .parse()
        .with_context(|| format!("bad leaf number `{l}`"))?;
    let f = f
        .trim()
        .parse()
        .with_context(|| format!("bad formula number `{f}`"))?;
    Ok((l, f))
}

pub fn run(config: &Config, problem: &Problem) -> Result<ExitCode> {
    let mut session = Session {
        tableau: Tableau::new(&problem.assumptions),
        history: Vec::new(),
        early_stop: config.trace_options().early_stop,
        subsume: config.subsume,
    };
    let stdin = io::stdin();
    let interactive = stdin.is_terminal();
    if interactive {
        println!("type `help` for commands");
    }
    session.show();

    let mut lines = stdin.lock().lines();
    loop {
        if interactive {
            print!("> ");
            io::stdout().flush()?;
        }
        let Some(line) = lines.next() else { break };
        let line = line?;
        let mut words = line.split_whitespace();
        let Some(cmd) = words.next() else { continue };
        let arg = words.next();
        let outcome = match (cmd, arg) {
            ("use", Some(arg)) => parse_use(arg)
                .and_then(|(l, f)| session.apply(l, f))
                .map(|_| true),
            ("use", None) => Err(anyhow!("expected `use LEAF.FORMULA`, e.g. `use 0.1`")),
            ("auto", _) => session.auto().map(|_| true),
            ("show", _) => Ok(true),
            ("tree", _) => {
                print!("{}", tableau_ascii(&session.tableau));
                Ok(false)
            }
            ("undo", _) => match session.history.pop() {
                Some(prev) => {
                    session.tableau = prev;
                    Ok(true)
                }
                None => Err(anyhow!("nothing to undo")),
            },
            ("export", target) => session.export(target).map(|_| false),
            ("help", _) => {
                println!("{HELP}");
                Ok(false)
            }
            ("quit" | "exit", _) => break,
            (other, _) => Err(anyhow!("unknown command `{other}`; try `help`")),
        };
        match outcome {
            Ok(true) => session.show(),
            Ok(false) => {}
            Err(e) => eprintln!("error: {e:#}"),
        }
    }

    Ok(match session.models() {
        Some(ms) if session.is_complete() => verdict(!ms.is_empty()),
        _ => ExitCode::SUCCESS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn use_arguments() {
        assert_eq!(parse_use("0.1").unwrap(), (0, 1));
        assert_eq!(parse_use("12.3").unwrap(), (12, 3));
        assert!(parse_use("1").is_err());
        assert!(parse_use("a.1").is_err());
        assert!(parse_use("1.-1").is_err());
    }
}
