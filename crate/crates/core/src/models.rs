//! Computing the set of all models of a finite set of signed formulae by
//! decomposition.
//!
//! A set is treated as a duplicate-free ordered list. A composite member σ is
//! split off (`Δ = Γ − σ`) and replaced according to its shape:
//!
//! * `T(a & b)` gives one successor `Δ, T a, T b`
//! * `F(a & b)` gives two successors `Δ, F a` and `Δ, F b`, whose models are
//!   united
//! * `S(~a)` gives one successor `Δ, op(S) a`
//!
//! A set of literals is solved directly by [`lmods`]. Each step strictly
//! lowers the total connective count, so the recursion terminates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{total_measure, Formula, Letter, PartialModel, Sign, SignedFormula};
use crate::oracle::TotalAssignment;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("`{0}` is not a member of the set")]
    NotMember(SignedFormula),
    #[error("`{0}` is not a literal")]
    NotLiteralSet(SignedFormula),
    #[error("`{0}` is a literal and cannot be decomposed")]
    NotComposite(SignedFormula),
    #[error("invalid manual choice: {0}")]
    ManualChoiceInvalid(String),
    #[error("model assigns `{0}`, which is outside the requested letters")]
    DomainExceedsLetters(Letter),
}

/// Names of the decomposition equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    #[serde(rename = "T&")]
    TAnd,
    #[serde(rename = "F&")]
    FAnd,
    #[serde(rename = "~")]
    Neg,
}

impl Rule {
    /// The rule that decomposes `sf`, or `None` for a literal.
    pub fn for_formula(sf: &SignedFormula) -> Option<Rule> {
        match (&sf.formula, sf.sign) {
            (Formula::Var(_), _) => None,
            (Formula::Not(_), _) => Some(Rule::Neg),
            (Formula::And(..), Sign::T) => Some(Rule::TAnd),
            (Formula::And(..), Sign::F) => Some(Rule::FAnd),
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Rule::FAnd => 2,
            Rule::TAnd | Rule::Neg => 1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rule::TAnd => "T&",
            Rule::FAnd => "F&",
            Rule::Neg => "~",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A finite set of partial models. Members may overlap or subsume each other.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ModelSet(BTreeSet<PartialModel>);

impl ModelSet {
    pub fn empty() -> Self {
        ModelSet(BTreeSet::new())
    }

    /// The set of all interpretations.
    pub fn everything() -> Self {
        ModelSet(BTreeSet::from([PartialModel::new()]))
    }

    pub fn singleton(model: PartialModel) -> Self {
        ModelSet(BTreeSet::from([model]))
    }

    pub fn insert(&mut self, model: PartialModel) -> bool {
        self.0.insert(model)
    }

    pub fn extend(&mut self, other: ModelSet) {
        self.0.extend(other.0);
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Members in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &PartialModel> {
        self.0.iter()
    }

    pub fn contains(&self, model: &PartialModel) -> bool {
        self.0.contains(model)
    }
}

impl FromIterator<PartialModel> for ModelSet {
    fn from_iter<T: IntoIterator<Item = PartialModel>>(iter: T) -> Self {
        ModelSet(iter.into_iter().collect())
    }
}

impl IntoIterator for ModelSet {
    type Item = PartialModel;
    type IntoIter = std::collections::btree_set::IntoIter<PartialModel>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// Set union on lists: appends `sf` unless already present.
pub fn union_push(list: &mut Vec<SignedFormula>, sf: SignedFormula) {
    if !list.contains(&sf) {
        list.push(sf);
    }
}

/// `Γ` written as `Δ | σ`: returns `Δ`.
pub fn split(
    gamma: &[SignedFormula],
    sigma: &SignedFormula,
) -> Result<Vec<SignedFormula>, EngineError> {
    let at = gamma
        .iter()
        .position(|sf| sf == sigma)
        .ok_or_else(|| EngineError::NotMember(sigma.clone()))?;
    let mut delta = gamma.to_vec();
    delta.remove(at);
    Ok(delta)
}

pub fn is_literal_set(gamma: &[SignedFormula]) -> bool {
    gamma.iter().all(SignedFormula::is_literal)
}

/// Whether some letter occurs in `gamma` as both `T p` and `F p`.
pub fn has_complementary_pair(gamma: &[SignedFormula]) -> bool {
    let mut seen: BTreeMap<&Letter, Sign> = BTreeMap::new();
    for sf in gamma {
        if let Some(p) = sf.literal_letter() {
            match seen.get(p) {
                Some(&s) if s != sf.sign => return true,
                _ => {
                    seen.insert(p, sf.sign);
                }
            }
        }
    }
    false
}

/// Models of a set of literals: nothing if it holds opposite literals,
/// otherwise the single partial model the literals dictate.
pub fn lmods(gamma: &[SignedFormula]) -> Result<ModelSet, EngineError> {
    let mut model = PartialModel::new();
    let mut inconsistent = false;
    for sf in gamma {
        let p = sf
            .literal_letter()
            .ok_or_else(|| EngineError::NotLiteralSet(sf.clone()))?;
        if let Some(prev) = model.insert(p.clone(), sf.sign.mean()) {
            inconsistent |= prev != sf.sign.mean();
        }
    }
    Ok(if inconsistent {
        ModelSet::empty()
    } else {
        ModelSet::singleton(model)
    })
}

/// One application of a decomposition equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub used: SignedFormula,
    pub rule: Rule,
    /// One list, or two for `F&`.
    pub successors: Vec<Vec<SignedFormula>>,
}

/// The formulae that decomposing `sigma` introduces, in written order, one
/// group per successor.
pub fn products(sigma: &SignedFormula) -> Result<(Rule, Vec<Vec<SignedFormula>>), EngineError> {
    let groups = match (&sigma.formula, sigma.sign) {
        (Formula::Var(_), _) => return Err(EngineError::NotComposite(sigma.clone())),
        (Formula::Not(body), s) => vec![vec![SignedFormula::new(s.opposite(), (**body).clone())]],
        (Formula::And(a, b), Sign::T) => vec![vec![
            SignedFormula::t((**a).clone()),
            SignedFormula::t((**b).clone()),
        ]],
        (Formula::And(a, b), Sign::F) => vec![
            vec![SignedFormula::f((**a).clone())],
            vec![SignedFormula::f((**b).clone())],
        ],
    };
    let rule = Rule::for_formula(sigma).expect("composite");
    Ok((rule, groups))
}

pub fn expand(gamma: &[SignedFormula], sigma: &SignedFormula) -> Result<Expansion, EngineError> {
    if sigma.is_literal() {
        return Err(EngineError::NotComposite(sigma.clone()));
    }
    let delta = split(gamma, sigma)?;
    let (rule, groups) = products(sigma)?;
    let successors = groups
        .into_iter()
        .map(|group| {
            let mut next = delta.clone();
            for sf in group {
                union_push(&mut next, sf);
            }
            next
        })
        .collect();
    Ok(Expansion {
        used: sigma.clone(),
        rule,
        successors,
    })
}

/// Chooses which composite member of a set to decompose next.
pub trait Selector {
    /// Index into `gamma` of the member to decompose, or `None` when `gamma`
    /// holds only literals.
    fn select(&mut self, gamma: &[SignedFormula]) -> Result<Option<usize>, EngineError>;
}

impl<S: Selector + ?Sized> Selector for &mut S {
    fn select(&mut self, gamma: &[SignedFormula]) -> Result<Option<usize>, EngineError> {
        (**self).select(gamma)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ManualChoices {
    choices: Vec<usize>,
    cursor: usize,
}

impl ManualChoices {
    pub fn new(choices: Vec<usize>) -> Self {
        ManualChoices { choices, cursor: 0 }
    }

    pub fn consumed(&self) -> usize {
        self.cursor
    }

    pub fn remaining(&self) -> &[usize] {
        &self.choices[self.cursor..]
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum SelectionStrategy {
    /// Non-branching rules first; `F&` only once nothing else is left.
    #[default]
    BranchLast,
    FirstComposite,
    /// Replays externally supplied indices, one per decomposition.
    Manual(ManualChoices),
}

impl SelectionStrategy {
    pub fn manual(choices: Vec<usize>) -> Self {
        SelectionStrategy::Manual(ManualChoices::new(choices))
    }
}

impl Selector for SelectionStrategy {
    fn select(&mut self, gamma: &[SignedFormula]) -> Result<Option<usize>, EngineError> {
        if is_literal_set(gamma) {
            return Ok(None);
        }
        match self {
            SelectionStrategy::BranchLast => {
                let non_branching = gamma
                    .iter()
                    .position(|sf| matches!(Rule::for_formula(sf), Some(Rule::TAnd | Rule::Neg)));
                Ok(non_branching.or_else(|| gamma.iter().position(|sf| !sf.is_literal())))
            }
            SelectionStrategy::FirstComposite => Ok(gamma.iter().position(|sf| !sf.is_literal())),
            SelectionStrategy::Manual(m) => {
                let Some(&index) = m.choices.get(m.cursor) else {
                    return Err(EngineError::ManualChoiceInvalid(format!(
                        "choice sequence exhausted after {} choices",
                        m.cursor
                    )));
                };
                match gamma.get(index) {
                    None => Err(EngineError::ManualChoiceInvalid(format!(
                        "index {index} out of range for a set of {} formulae",
                        gamma.len()
                    ))),
                    Some(sf) if sf.is_literal() => Err(EngineError::ManualChoiceInvalid(format!(
                        "index {index} designates the literal `{sf}`"
                    ))),
                    Some(_) => {
                        m.cursor += 1;
                        Ok(Some(index))
                    }
                }
            }
        }
    }
}

/// Wraps a selector and records every index it hands out, so a run can be
/// replayed with [`SelectionStrategy::manual`].
#[derive(Debug, Clone)]
pub struct Recording<S> {
    inner: S,
    choices: Vec<usize>,
}

impl<S: Selector> Recording<S> {
    pub fn new(inner: S) -> Self {
        Recording {
            inner,
            choices: Vec::new(),
        }
    }

    pub fn choices(&self) -> &[usize] {
        &self.choices
    }

    pub fn into_choices(self) -> Vec<usize> {
        self.choices
    }
}

impl<S: Selector> Selector for Recording<S> {
    fn select(&mut self, gamma: &[SignedFormula]) -> Result<Option<usize>, EngineError> {
        let picked = self.inner.select(gamma)?;
        if let Some(i) = picked {
            self.choices.push(i);
        }
        Ok(picked)
    }
}

pub fn select_formula<'g, S: Selector + ?Sized>(
    gamma: &'g [SignedFormula],
    selector: &mut S,
) -> Result<Option<&'g SignedFormula>, EngineError> {
    Ok(selector.select(gamma)?.map(|i| &gamma[i]))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EngineOptions {
    /// Stop at a set as soon as it holds opposite literals, even if
    /// composites remain.
    pub early_closure: bool,
}

/// Work done by one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    /// Every set visited, i.e. the nodes of the corresponding tree.
    pub nodes: usize,
    pub leaves: usize,
    pub closed_leaves: usize,
    pub expansions: usize,
}

/// All models of `gamma` under the default strategy.
pub fn models_of(gamma: &[SignedFormula]) -> ModelSet {
    models(gamma, SelectionStrategy::BranchLast).expect("automatic strategies never fail")
}

pub fn models(
    gamma: &[SignedFormula],
    strategy: SelectionStrategy,
) -> Result<ModelSet, EngineError> {
    let mut strategy = strategy;
    models_with(gamma, &mut strategy, EngineOptions::default()).map(|(m, _)| m)
}

/// The decomposition loop. Sets are processed depth-first, first successor
/// first, on an explicit stack; this is also the order in which a selector
/// sees them.
pub fn models_with<S: Selector + ?Sized>(
    gamma: &[SignedFormula],
    selector: &mut S,
    options: EngineOptions,
) -> Result<(ModelSet, RunStats), EngineError> {
    let mut result = ModelSet::empty();
    let mut stats = RunStats::default();
    let mut stack = vec![dedup(gamma)];
    while let Some(current) = stack.pop() {
        stats.nodes += 1;
        if options.early_closure && has_complementary_pair(&current) {
            stats.leaves += 1;
            stats.closed_leaves += 1;
            continue;
        }
        let Some(index) = selector.select(&current)? else {
            let found = lmods(&current)?;
            stats.leaves += 1;
            if found.is_empty() {
                stats.closed_leaves += 1;
            }
            result.extend(found);
            continue;
        };
        let expansion = expand(&current, &current[index])?;
        stats.expansions += 1;
        debug_assert!(expansion
            .successors
            .iter()
            .all(|s| total_measure(s) < total_measure(&current)));
        stack.extend(expansion.successors.into_iter().rev());
    }
    Ok((result, stats))
}

pub(crate) fn dedup(gamma: &[SignedFormula]) -> Vec<SignedFormula> {
    let mut out = Vec::with_capacity(gamma.len());
    for sf in gamma {
        union_push(&mut out, sf.clone());
    }
    out
}

/// Every assignment over `letters` that extends some member of `ms`.
pub fn expand_partial_models(
    ms: &ModelSet,
    letters: &BTreeSet<Letter>,
) -> Result<BTreeSet<TotalAssignment>, EngineError> {
    let mut out = BTreeSet::new();
    for model in ms.iter() {
        if let Some(p) = model.domain().find(|p| !letters.contains(*p)) {
            return Err(EngineError::DomainExceedsLetters(p.clone()));
        }
        let free: Vec<&Letter> = letters.iter().filter(|p| model.get(p).is_none()).collect();
        for bits in 0u64..1 << free.len() {
            let mut values: BTreeMap<Letter, bool> = model.as_map().clone();
            for (i, p) in free.iter().enumerate() {
                values.insert((*p).clone(), bits >> i & 1 == 1);
            }
            out.insert(TotalAssignment::new(values));
        }
    }
    Ok(out)
}

/// Drops every member that strictly extends another member.
pub fn subsume(ms: &ModelSet) -> ModelSet {
    ms.iter()
        .filter(|m| {
            !ms.iter()
                .any(|other| other.len() < m.len() && other.is_extended_by(m))
        })
        .cloned()
        .collect()
}

pub fn is_satisfiable(gamma: &[SignedFormula]) -> bool {
    !models_of(gamma).is_empty()
}

pub fn is_valid(alpha: &Formula) -> bool {
    models_of(&[SignedFormula::f(alpha.clone())]).is_empty()
}

pub fn entails(gamma: &[SignedFormula], alpha: &Formula) -> bool {
    models_of(&with_goal_denied(gamma, alpha)).is_empty()
}

/// `gamma ∪ [F alpha]`.
pub fn with_goal_denied(gamma: &[SignedFormula], alpha: &Formula) -> Vec<SignedFormula> {
    let mut all = dedup(gamma);
    union_push(&mut all, SignedFormula::f(alpha.clone()));
    all
}
