//! `models`, `sat`, `valid`, `entails` and `check`.

use std::process::ExitCode;

use anyhow::{Context, Result};
use serde_json::json;
use tableaux::formula::{letters_of, SignedFormula};
use tableaux::models::{models_with, subsume, with_goal_denied, ModelSet};
use tableaux::oracle::truth_table_models;
use tableaux::parser::{desugar, parse_formula, Problem};
use tableaux::trace::render_model;
use tableaux::{expand_partial_models, PartialModel};

use crate::{Config, Format};

pub fn verdict(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

pub fn compute(config: &Config, gamma: &[SignedFormula]) -> Result<ModelSet> {
    let mut strategy = config.strategy()?;
    let (ms, _) = models_with(gamma, &mut strategy, config.engine_options())?;
    Ok(if config.subsume { subsume(&ms) } else { ms })
}

/// `{"p": "T", "q": "F"}`, keys sorted.
pub fn model_json(m: &PartialModel) -> serde_json::Value {
    m.iter()
        .map(|(p, v)| (p.to_string(), json!(if v { "T" } else { "F" })))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

pub fn models_json(ms: &ModelSet) -> serde_json::Value {
    ms.iter().map(model_json).collect()
}

pub fn models(config: &Config, problem: &Problem) -> Result<ExitCode> {
    config.reject_dot("models")?;
    let ms = compute(config, &problem.assumptions)?;
    match config.format {
        Format::Json => println!(
            "{}",
            json!({ "satisfiable": !ms.is_empty(), "models": models_json(&ms) })
        ),
        _ if ms.is_empty() => println!("UNSATISFIABLE"),
        _ => ms.iter().for_each(|m| println!("{}", render_model(m))),
    }
    Ok(verdict(!ms.is_empty()))
}

pub fn sat(config: &Config, problem: &Problem) -> Result<ExitCode> {
    config.reject_dot("sat")?;
    let sat = !compute(config, &problem.assumptions)?.is_empty();
    match config.format {
        Format::Json => println!("{}", json!({ "satisfiable": sat })),
        _ => println!("{}", if sat { "SAT" } else { "UNSAT" }),
    }
    Ok(verdict(sat))
}

fn goal_holds(
    config: &Config,
    gamma: &[SignedFormula],
    goal: &str,
    labels: (&str, &str),
) -> Result<ExitCode> {
    let alpha = desugar(&parse_formula(goal).with_context(|| format!("parsing goal `{goal}`"))?);
    let counter = compute(config, &with_goal_denied(gamma, &alpha))?;
    let holds = counter.is_empty();
    let first = counter.iter().next();
    match config.format {
        Format::Json => println!(
            "{}",
            json!({ "holds": holds, "countermodel": first.map(model_json) })
        ),
        _ => {
            println!("{}", if holds { labels.0 } else { labels.1 });
            if let Some(m) = first {
                println!("countermodel: {}", render_model(m));
            }
        }
    }
    Ok(verdict(holds))
}

pub fn valid(config: &Config, goal: &str) -> Result<ExitCode> {
    config.reject_dot("valid")?;
    goal_holds(config, &[], goal, ("VALID", "INVALID"))
}

pub fn entails(config: &Config, problem: &Problem, goal: &str) -> Result<ExitCode> {
    config.reject_dot("entails")?;
    goal_holds(
        config,
        &problem.assumptions,
        goal,
        ("ENTAILED", "NOT ENTAILED"),
    )
}

pub fn check(config: &Config, problem: &Problem) -> Result<ExitCode> {
    config.reject_dot("check")?;
    let gamma = &problem.assumptions;
    let expected = truth_table_models(gamma, config.max_letters)?;
    let found = expand_partial_models(&compute(config, gamma)?, &letters_of(gamma))?;
    let agree = found == expected;
    match config.format {
        Format::Json => println!(
            "{}",
            json!({ "agree": agree, "engine": found.len(), "truth_table": expected.len() })
        ),
        _ => {
            println!("{}", if agree { "AGREE" } else { "DISAGREE" });
            println!(
                "engine: {} assignments, truth table: {} assignments",
                found.len(),
                expected.len()
            );
        }
    }
    Ok(verdict(agree))
}
