//! Brute-force ground truth: every total assignment over the mentioned
//! letters, filtered by satisfaction.
//!
//! [`truth_table_models`] uses only the semantics in [`crate::formula`];
//! [`check_equivalence`] then compares it against the decomposition engine.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::formula::{letters_of, satisfies_set, Interpretation, Letter, Sign, SignedFormula};
use crate::models::{expand_partial_models, models, EngineError, SelectionStrategy};

pub const DEFAULT_MAX_LETTERS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{found} letters exceed the truth-table bound of {bound}")]
    TooManyLetters { found: usize, bound: usize },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// An assignment defined on exactly a declared letter set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TotalAssignment(BTreeMap<Letter, bool>);

impl TotalAssignment {
    pub fn new(values: BTreeMap<Letter, bool>) -> Self {
        TotalAssignment(values)
    }

    pub fn letters(&self) -> impl Iterator<Item = &Letter> {
        self.0.keys()
    }

    pub fn get(&self, letter: &Letter) -> Option<bool> {
        self.0.get(letter).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Letter, bool)> {
        self.0.iter().map(|(k, v)| (k, *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Interpretation for TotalAssignment {
    fn value(&self, letter: &Letter) -> Option<bool> {
        self.get(letter)
    }
}

impl fmt::Display for TotalAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter()
            .map(|(p, v)| format!("{p}={}", Sign::from_bool(v)))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for TotalAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// All `2^n` assignments over `letters` in enumeration order: letters sorted
/// by name, the first letter varying slowest, `false` before `true`.
pub fn all_assignments(
    letters: &BTreeSet<Letter>,
    max_letters: usize,
) -> Result<Vec<TotalAssignment>, OracleError> {
    let n = letters.len();
    if n > max_letters {
        return Err(OracleError::TooManyLetters {
            found: n,
            bound: max_letters,
        });
    }
    let ordered: Vec<&Letter> = letters.iter().collect();
    let out = (0u64..1 << n)
        .map(|bits| {
            let values = ordered
                .iter()
                .enumerate()
                .map(|(i, p)| ((*p).clone(), bits >> (n - 1 - i) & 1 == 1))
                .collect();
            TotalAssignment(values)
        })
        .collect();
    Ok(out)
}

pub fn truth_table_models(
    gamma: &[SignedFormula],
    max_letters: usize,
) -> Result<BTreeSet<TotalAssignment>, OracleError> {
    let letters = letters_of(gamma);
    let mut out = BTreeSet::new();
    for assignment in all_assignments(&letters, max_letters)? {
        let holds =
            satisfies_set(&assignment, gamma).expect("assignment covers every letter of gamma");
        if holds {
            out.insert(assignment);
        }
    }
    Ok(out)
}

/// Whether the decomposition engine and the truth table agree on `gamma`,
/// compared as sets of total assignments over the letters of `gamma`.
pub fn check_equivalence(
    gamma: &[SignedFormula],
    strategy: SelectionStrategy,
    max_letters: usize,
) -> Result<bool, OracleError> {
    let expected = truth_table_models(gamma, max_letters)?;
    let found = models(gamma, strategy)?;
    Ok(expand_partial_models(&found, &letters_of(gamma))? == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;

    fn assignment(pairs: &[(&str, bool)]) -> TotalAssignment {
        TotalAssignment(
            pairs
                .iter()
                .map(|(n, v)| (Letter::new(n).unwrap(), *v))
                .collect(),
        )
    }

    #[test]
    fn enumeration_order() {
        let letters: BTreeSet<Letter> =
            ["q", "p"].iter().map(|n| Letter::new(n).unwrap()).collect();
        let rendered: Vec<String> = all_assignments(&letters, 20)
            .unwrap()
            .iter()
            .map(|a| a.to_string())
            .collect();
        assert_eq!(rendered, ["p=F q=F", "p=F q=T", "p=T q=F", "p=T q=T"]);
    }

    #[test]
    fn worked_example() {
        let p = Formula::var("p");
        let q = Formula::var("q");
        let gamma = [
            SignedFormula::t(Formula::and(p.clone(), Formula::not(q.clone()))),
            SignedFormula::f(Formula::and(p, q)),
        ];
        let got = truth_table_models(&gamma, 20).unwrap();
        assert_eq!(
            got,
            BTreeSet::from([assignment(&[("p", true), ("q", false)])])
        );
    }

    #[test]
    fn empty_gamma_has_the_empty_assignment() {
        let got = truth_table_models(&[], 20).unwrap();
        assert_eq!(got, BTreeSet::from([assignment(&[])]));
    }

    #[test]
    fn contradiction() {
        let p = Formula::var("p");
        let got = truth_table_models(&[SignedFormula::t(p.clone()), SignedFormula::f(p)], 20);
        assert!(got.unwrap().is_empty());
    }

    #[test]
    fn equivalence_examples() {
        let p = Formula::var("p");
        let q = Formula::var("q");
        let gamma = [
            SignedFormula::t(Formula::and(p.clone(), Formula::not(q.clone()))),
            SignedFormula::f(Formula::and(p, q)),
        ];
        assert!(check_equivalence(&gamma, SelectionStrategy::BranchLast, 20).unwrap());
        assert!(check_equivalence(&gamma, SelectionStrategy::FirstComposite, 20).unwrap());
        assert!(
            check_equivalence(&gamma, SelectionStrategy::manual(vec![1, 0, 2, 0, 2]), 20).unwrap()
        );
        assert!(check_equivalence(&[], SelectionStrategy::BranchLast, 20).unwrap());
    }

    #[test]
    fn letter_bound() {
        let gamma: Vec<SignedFormula> = ["a", "b", "c"]
            .iter()
            .map(|n| SignedFormula::t(Formula::var(n)))
            .collect();
        assert_eq!(
            truth_table_models(&gamma, 2).unwrap_err(),
            OracleError::TooManyLetters { found: 3, bound: 2 }
        );
        assert_eq!(truth_table_models(&gamma, 3).unwrap().len(), 1);
    }
}
