//! The object language: letters, core formulae over `~` and `&`, signs,
//! signed formulae, and their classical semantics.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("letter `{0}` is not assigned by the interpretation")]
    MissingLetter(Letter),
    #[error("`{0}` is not a valid letter name")]
    InvalidLetter(String),
}

/// A propositional letter. Names match `[A-Za-z][A-Za-z0-9_]*` and compare
/// byte for byte.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(Arc<str>);

impl Letter {
    pub fn new(name: &str) -> Result<Self, FormulaError> {
        if Self::is_valid_name(name) {
            Ok(Letter(Arc::from(name)))
        } else {
            Err(FormulaError::InvalidLetter(name.to_string()))
        }
    }

    pub fn is_valid_name(name: &str) -> bool {
        let mut chars = name.chars();
        matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A formula over the core connectives. Equality is purely syntactic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Var(Letter),
    Not(Arc<Formula>),
    And(Arc<Formula>, Arc<Formula>),
}

impl Formula {
    /// Builds a letter formula, panicking on an invalid name. Meant for
    /// literals in code and tests; use [`Letter::new`] for untrusted input.
    pub fn var(name: &str) -> Self {
        Formula::Var(Letter::new(name).expect("invalid letter name"))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(body: Formula) -> Self {
        Formula::Not(Arc::new(body))
    }

    pub fn and(left: Formula, right: Formula) -> Self {
        Formula::And(Arc::new(left), Arc::new(right))
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Formula::Var(_))
    }

    /// Number of connectives.
    pub fn connectives(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::Not(body) => 1 + body.connectives(),
            Formula::And(l, r) => 1 + l.connectives() + r.connectives(),
        }
    }

    /// Nesting depth of connectives; a letter has depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::Not(body) => 1 + body.depth(),
            Formula::And(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    pub fn collect_letters(&self, into: &mut BTreeSet<Letter>) {
        match self {
            Formula::Var(p) => {
                into.insert(p.clone());
            }
            Formula::Not(body) => body.collect_letters(into),
            Formula::And(l, r) => {
                l.collect_letters(into);
                r.collect_letters(into);
            }
        }
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        let mut out = BTreeSet::new();
        self.collect_letters(&mut out);
        out
    }

    /// Semantic value under `interp`.
    pub fn eval<I: Interpretation + ?Sized>(&self, interp: &I) -> Result<bool, FormulaError> {
        match self {
            Formula::Var(p) => interp
                .value(p)
                .ok_or_else(|| FormulaError::MissingLetter(p.clone())),
            Formula::Not(body) => Ok(!body.eval(interp)?),
            // Both sides are evaluated so that a missing letter is always reported.
            Formula::And(l, r) => {
                let lv = l.eval(interp)?;
                let rv = r.eval(interp)?;
                Ok(lv && rv)
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parser::render(self))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render(self))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    T,
    F,
}

impl Sign {
    pub fn opposite(self) -> Sign {
        match self {
            Sign::T => Sign::F,
            Sign::F => Sign::T,
        }
    }

    /// The boolean value a sign asserts.
    pub fn mean(self) -> bool {
        matches!(self, Sign::T)
    }

    pub fn from_bool(value: bool) -> Sign {
        if value {
            Sign::T
        } else {
            Sign::F
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::T => "T",
            Sign::F => "F",
        })
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedFormula {
    pub sign: Sign,
    pub formula: Formula,
}

impl SignedFormula {
    pub fn new(sign: Sign, formula: Formula) -> Self {
        SignedFormula { sign, formula }
    }

    pub fn t(formula: Formula) -> Self {
        SignedFormula::new(Sign::T, formula)
    }

    pub fn f(formula: Formula) -> Self {
        SignedFormula::new(Sign::F, formula)
    }

    pub fn is_literal(&self) -> bool {
        self.formula.is_var()
    }

    /// The letter of a literal.
    pub fn literal_letter(&self) -> Option<&Letter> {
        match &self.formula {
            Formula::Var(p) => Some(p),
            _ => None,
        }
    }

    /// Termination measure: the connective count of the formula.
    pub fn measure(&self) -> usize {
        self.formula.connectives()
    }

    pub fn satisfied_by<I: Interpretation + ?Sized>(
        &self,
        interp: &I,
    ) -> Result<bool, FormulaError> {
        Ok(self.formula.eval(interp)? == self.sign.mean())
    }
}

impl fmt::Debug for SignedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SignedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.sign, self.formula)
    }
}

/// Anything that assigns truth values to (some) letters.
pub trait Interpretation {
    fn value(&self, letter: &Letter) -> Option<bool>;
}

impl Interpretation for BTreeMap<Letter, bool> {
    fn value(&self, letter: &Letter) -> Option<bool> {
        self.get(letter).copied()
    }
}

/// A finite assignment standing for every total interpretation that agrees
/// with it on its domain. The empty model stands for all interpretations.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialModel(BTreeMap<Letter, bool>);

impl PartialModel {
    pub fn new() -> Self {
        PartialModel(BTreeMap::new())
    }

    /// Assigns `letter`, returning the previous value if any.
    pub fn insert(&mut self, letter: Letter, value: bool) -> Option<bool> {
        self.0.insert(letter, value)
    }

    pub fn get(&self, letter: &Letter) -> Option<bool> {
        self.0.get(letter).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Letter, bool)> {
        self.0.iter().map(|(k, v)| (k, *v))
    }

    pub fn domain(&self) -> impl Iterator<Item = &Letter> {
        self.0.keys()
    }

    pub fn as_map(&self) -> &BTreeMap<Letter, bool> {
        &self.0
    }

    /// True if `other` agrees with every assignment made here.
    pub fn is_extended_by(&self, other: &PartialModel) -> bool {
        self.iter().all(|(p, v)| other.get(p) == Some(v))
    }
}

impl FromIterator<(Letter, bool)> for PartialModel {
    fn from_iter<T: IntoIterator<Item = (Letter, bool)>>(iter: T) -> Self {
        PartialModel(iter.into_iter().collect())
    }
}

impl Interpretation for PartialModel {
    fn value(&self, letter: &Letter) -> Option<bool> {
        self.get(letter)
    }
}

impl fmt::Debug for PartialModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// `p=T q=F`, letters in name order; the empty model renders as nothing.
impl fmt::Display for PartialModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, v) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{p}={}", Sign::from_bool(v))?;
        }
        Ok(())
    }
}

pub fn satisfies<I: Interpretation + ?Sized>(
    interp: &I,
    sf: &SignedFormula,
) -> Result<bool, FormulaError> {
    sf.satisfied_by(interp)
}

/// True iff `interp` satisfies every member of `gamma`. Every member is
/// checked, so a missing letter is reported even after a falsified member.
pub fn satisfies_set<'a, I, G>(interp: &I, gamma: G) -> Result<bool, FormulaError>
where
    I: Interpretation + ?Sized,
    G: IntoIterator<Item = &'a SignedFormula>,
{
    let mut all = true;
    for sf in gamma {
        all &= sf.satisfied_by(interp)?;
    }
    Ok(all)
}

pub fn letters_of<'a, G>(gamma: G) -> BTreeSet<Letter>
where
    G: IntoIterator<Item = &'a SignedFormula>,
{
    let mut out = BTreeSet::new();
    for sf in gamma {
        sf.formula.collect_letters(&mut out);
    }
    out
}

pub fn total_measure(gamma: &[SignedFormula]) -> usize {
    gamma.iter().map(SignedFormula::measure).sum()
}
