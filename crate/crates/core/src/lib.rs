//! All models of a finite set of signed propositional formulae, computed by
//! tableau-style decomposition, together with the trace structures that
//! record a run: a flat list of lists, a tree of lists, and a tableau (tree
//! of formulae).
//!
//! ```
//! use tableaux::{models_of, parse_problem};
//!
//! let problem = parse_problem("T: p & ~q\nF: p & q").unwrap();
//! let models = models_of(&problem.assumptions);
//! let rendered: Vec<String> = models.iter().map(|m| m.to_string()).collect();
//! assert_eq!(rendered, ["p=T q=F"]);
//! ```

pub mod formula;
pub mod generate;
pub mod models;
pub mod oracle;
pub mod parser;
pub mod trace;

pub use formula::{
    letters_of, satisfies, satisfies_set, Formula, FormulaError, Interpretation, Letter,
    PartialModel, Sign, SignedFormula,
};
pub use models::{
    entails, expand, expand_partial_models, is_satisfiable, is_valid, lmods, models, models_of,
    models_with, subsume, EngineError, EngineOptions, ModelSet, Rule, RunStats, SelectionStrategy,
    Selector,
};
pub use oracle::{check_equivalence, truth_table_models, OracleError, TotalAssignment};
pub use parser::{parse_formula, parse_problem, render, ParseError, Problem};
pub use trace::{
    build_tableau, build_tree_of_lists, run_flat_trace, BranchStatus, Tableau, TraceError,
    TraceOptions, TreeOfLists,
};
