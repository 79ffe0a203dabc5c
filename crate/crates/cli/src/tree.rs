use std::process::ExitCode;

use anyhow::Result;
use serde_json::json;
use tableaux::models::{subsume, ModelSet};
use tableaux::parser::Problem;
use tableaux::trace::{
    build_tableau, build_tree_of_lists, render_model, tableau_ascii, tableau_dot, tableau_json,
    tableau_models, tree_models, tree_of_lists_ascii, tree_of_lists_dot, tree_of_lists_json,
};

use crate::query::{models_json, verdict};
use crate::{Config, Format};

pub fn tableau(config: &Config, problem: &Problem) -> Result<ExitCode> {
    let gamma = &problem.assumptions;
    let mut strategy = config.strategy()?;
    let opts = config.trace_options();
    let (ascii, doc, dot, ms) = if config.tree_of_lists {
        let t = build_tree_of_lists(gamma, &mut strategy, opts)?;
        let ms = tree_models(&t)?;
        (
            tree_of_lists_ascii(&t),
            tree_of_lists_json(&t),
            tree_of_lists_dot(&t),
            ms,
        )
    } else {
        let t = build_tableau(gamma, &mut strategy, opts)?;
        let ms = tableau_models(&t)?;
        (tableau_ascii(&t), tableau_json(&t), tableau_dot(&t), ms)
    };
    let ms = if config.subsume { subsume(&ms) } else { ms };
    match config.format {
        Format::Text => {
            print!("{ascii}");
            println!();
            print_models(&ms);
        }
        Format::Json => {
            let doc = json!({ "tree": doc, "models": models_json(&ms) });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Dot => print!("{dot}"),
    }
    Ok(verdict(!ms.is_empty()))
}

pub fn print_models(ms: &ModelSet) {
    if ms.is_empty() {
        println!("models: none (UNSATISFIABLE)");
    } else {
        println!("models:");
        for m in ms.iter() {
            println!("  {}", render_model(m));
        }
    }
}
