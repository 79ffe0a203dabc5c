//! Execution traces of the decomposition engine.
//!
//! Three shapes are produced, all driven by the same [`Selector`] and
//! visiting sets in the same order (depth-first, first successor first), so a
//! recorded choice sequence replays identically across them:
//!
//! * a flat trace, rewriting a list of lists one expansion at a time
//! * a [`TreeOfLists`], where every node carries its whole set
//! * a [`Tableau`], where a non-root node only records the formulae its
//!   parent's decomposition introduced; the full set at a node is recomputed
//!   from the path as `(parent set − used) ∪ explicit`
//!
//! Nodes are addressed by paths of child indices from the root.

use std::fmt::{self, Write as _};

use serde::Serialize;
use thiserror::Error;

use crate::formula::{total_measure, SignedFormula};
use crate::models::{
    dedup, expand, has_complementary_pair, is_literal_set, lmods, products, split, union_push,
    EngineError, ModelSet, Rule, Selector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("no node at path {0:?}")]
    BadPath(Vec<usize>),
    #[error("node at path {0:?} is not a leaf")]
    NotALeaf(Vec<usize>),
    #[error("tree of lists has an unfinished leaf at {0:?}")]
    IncompleteTree(Vec<usize>),
    #[error("tableau has an unfinished branch at {0:?}")]
    IncompleteTableau(Vec<usize>),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TraceOptions {
    /// Stop extending a branch once it holds opposite literals. Off by
    /// default, so every leaf ends up literal-only.
    pub early_stop: bool,
}

/// Node label: the equation applied at a node, or `Lit` for a leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NodeRule {
    #[serde(rename = "T&")]
    TAnd,
    #[serde(rename = "F&")]
    FAnd,
    #[serde(rename = "~")]
    Neg,
    #[serde(rename = "lit")]
    Lit,
}

impl From<Rule> for NodeRule {
    fn from(rule: Rule) -> Self {
        match rule {
            Rule::TAnd => NodeRule::TAnd,
            Rule::FAnd => NodeRule::FAnd,
            Rule::Neg => NodeRule::Neg,
        }
    }
}

impl fmt::Display for NodeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NodeRule::TAnd => "T&",
            NodeRule::FAnd => "F&",
            NodeRule::Neg => "~",
            NodeRule::Lit => "lit",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchStatus {
    Open,
    Closed,
    Incomplete,
}

impl fmt::Display for BranchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BranchStatus::Open => "open",
            BranchStatus::Closed => "closed",
            BranchStatus::Incomplete => "incomplete",
        })
    }
}

/// Status of a branch whose leaf holds `set`. Opposite literals close a
/// branch even if composites remain, which only happens with early stopping.
pub fn set_status(set: &[SignedFormula]) -> BranchStatus {
    if has_complementary_pair(set) {
        BranchStatus::Closed
    } else if is_literal_set(set) {
        BranchStatus::Open
    } else {
        BranchStatus::Incomplete
    }
}

fn leaf_models(set: &[SignedFormula]) -> Option<ModelSet> {
    match set_status(set) {
        BranchStatus::Closed => Some(ModelSet::empty()),
        BranchStatus::Open => Some(lmods(set).expect("open leaves are literal sets")),
        BranchStatus::Incomplete => None,
    }
}

// ---------------------------------------------------------------------------
// Flat trace

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatAction {
    pub rule: Rule,
    pub used: SignedFormula,
    /// Position of the rewritten list in the previous worklist.
    pub list_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatTraceStep {
    pub worklist: Vec<Vec<SignedFormula>>,
    /// `None` for the initial step.
    pub action: Option<FlatAction>,
}

impl fmt::Display for FlatTraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(a) = &self.action {
            write!(f, "[{}] {} in list {}: ", a.rule, a.used, a.list_index)?;
        }
        let lists: Vec<String> = self.worklist.iter().map(|l| render_list(l)).collect();
        f.write_str(&lists.join(" , "))
    }
}

/// Rewrites `[gamma]` until only finished lists remain, always working on
/// the leftmost unfinished list.
pub fn run_flat_trace<S: Selector + ?Sized>(
    gamma: &[SignedFormula],
    selector: &mut S,
    options: TraceOptions,
) -> Result<Vec<FlatTraceStep>, TraceError> {
    let mut worklist = vec![dedup(gamma)];
    let mut steps = vec![FlatTraceStep {
        worklist: worklist.clone(),
        action: None,
    }];
    let mut cursor = 0;
    while cursor < worklist.len() {
        let current = &worklist[cursor];
        if options.early_stop && has_complementary_pair(current) {
            cursor += 1;
            continue;
        }
        let Some(index) = selector.select(current)? else {
            cursor += 1;
            continue;
        };
        let expansion = expand(current, &current[index])?;
        debug_assert!(expansion
            .successors
            .iter()
            .all(|s| total_measure(s) < total_measure(current)));
        worklist.splice(cursor..=cursor, expansion.successors);
        steps.push(FlatTraceStep {
            worklist: worklist.clone(),
            action: Some(FlatAction {
                rule: expansion.rule,
                used: expansion.used,
                list_index: cursor,
            }),
        });
    }
    Ok(steps)
}

/// Union of the models of the final lists of a flat trace.
pub fn flat_trace_models(steps: &[FlatTraceStep]) -> Result<ModelSet, TraceError> {
    let mut out = ModelSet::empty();
    let Some(last) = steps.last() else {
        return Ok(out);
    };
    for (i, list) in last.worklist.iter().enumerate() {
        out.extend(leaf_models(list).ok_or_else(|| TraceError::IncompleteTree(vec![i]))?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Tree of lists

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeOfLists {
    pub content: Vec<SignedFormula>,
    /// Equation and formula used; `None` on leaves.
    pub label: Option<(Rule, SignedFormula)>,
    pub children: Vec<TreeOfLists>,
}

impl TreeOfLists {
    pub fn leaf(content: Vec<SignedFormula>) -> Self {
        TreeOfLists {
            content,
            label: None,
            children: Vec::new(),
        }
    }

    pub fn rule(&self) -> NodeRule {
        self.label
            .as_ref()
            .map_or(NodeRule::Lit, |(rule, _)| NodeRule::from(*rule))
    }

    pub fn used(&self) -> Option<&SignedFormula> {
        self.label.as_ref().map(|(_, sf)| sf)
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(TreeOfLists::node_count)
            .sum::<usize>()
    }

    pub fn node(&self, path: &[usize]) -> Result<&TreeOfLists, TraceError> {
        let mut node = self;
        for &i in path {
            node = node
                .children
                .get(i)
                .ok_or_else(|| TraceError::BadPath(path.to_vec()))?;
        }
        Ok(node)
    }

    /// Leaves left to right with their paths.
    pub fn leaves(&self) -> Vec<(Vec<usize>, &TreeOfLists)> {
        let mut out = Vec::new();
        let mut stack = vec![(Vec::new(), self)];
        while let Some((path, node)) = stack.pop() {
            if node.is_leaf() {
                out.push((path, node));
                continue;
            }
            for (i, child) in node.children.iter().enumerate().rev() {
                let mut p = path.clone();
                p.push(i);
                stack.push((p, child));
            }
        }
        out
    }

    /// Same shape, labels and arity, with node contents compared as sets.
    pub fn same_up_to_order(&self, other: &TreeOfLists) -> bool {
        self.label == other.label
            && same_set(&self.content, &other.content)
            && self.children.len() == other.children.len()
            && self
                .children
                .iter()
                .zip(&other.children)
                .all(|(a, b)| a.same_up_to_order(b))
    }

    /// Internal nodes have as many children as their rule dictates, and
    /// each child holds the corresponding successor of its parent.
    pub fn check_structure(&self) -> bool {
        match &self.label {
            None => self.children.is_empty(),
            Some((rule, used)) => {
                let Ok(expansion) = expand(&self.content, used) else {
                    return false;
                };
                expansion.rule == *rule
                    && self.children.len() == rule.arity()
                    && self
                        .children
                        .iter()
                        .zip(&expansion.successors)
                        .all(|(c, s)| &c.content == s && c.check_structure())
            }
        }
    }
}

pub fn same_set(a: &[SignedFormula], b: &[SignedFormula]) -> bool {
    a.iter().all(|x| b.contains(x)) && b.iter().all(|x| a.contains(x))
}

pub fn build_tree_of_lists<S: Selector + ?Sized>(
    gamma: &[SignedFormula],
    selector: &mut S,
    options: TraceOptions,
) -> Result<TreeOfLists, TraceError> {
    grow_list_tree(dedup(gamma), selector, options)
}

fn grow_list_tree<S: Selector + ?Sized>(
    content: Vec<SignedFormula>,
    selector: &mut S,
    options: TraceOptions,
) -> Result<TreeOfLists, TraceError> {
    if options.early_stop && has_complementary_pair(&content) {
        return Ok(TreeOfLists::leaf(content));
    }
    let Some(index) = selector.select(&content)? else {
        return Ok(TreeOfLists::leaf(content));
    };
    let expansion = expand(&content, &content[index])?;
    let children = expansion
        .successors
        .into_iter()
        .map(|s| grow_list_tree(s, selector, options))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TreeOfLists {
        content,
        label: Some((expansion.rule, expansion.used)),
        children,
    })
}

/// Union of the models of the leaves.
pub fn tree_models(tree: &TreeOfLists) -> Result<ModelSet, TraceError> {
    let mut out = ModelSet::empty();
    for (path, leaf) in tree.leaves() {
        out.extend(leaf_models(&leaf.content).ok_or(TraceError::IncompleteTree(path))?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Tableau (tree of formulae)

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    /// The whole input at the root; elsewhere the one or two formulae the
    /// parent's decomposition introduced.
    pub explicit: Vec<SignedFormula>,
    /// Present exactly on internal nodes.
    pub used: Option<SignedFormula>,
    pub children: Vec<Tableau>,
}

impl Tableau {
    /// A single-node tableau over `gamma`.
    pub fn new(gamma: &[SignedFormula]) -> Self {
        Tableau::leaf(dedup(gamma))
    }

    fn leaf(explicit: Vec<SignedFormula>) -> Self {
        Tableau {
            explicit,
            used: None,
            children: Vec::new(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn rule(&self) -> NodeRule {
        self.used
            .as_ref()
            .and_then(Rule::for_formula)
            .map_or(NodeRule::Lit, NodeRule::from)
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(Tableau::node_count).sum::<usize>()
    }

    pub fn node(&self, path: &[usize]) -> Result<&Tableau, TraceError> {
        let mut node = self;
        for &i in path {
            node = node
                .children
                .get(i)
                .ok_or_else(|| TraceError::BadPath(path.to_vec()))?;
        }
        Ok(node)
    }

    fn node_mut(&mut self, path: &[usize]) -> Result<&mut Tableau, TraceError> {
        let mut node = self;
        for &i in path {
            node = node
                .children
                .get_mut(i)
                .ok_or_else(|| TraceError::BadPath(path.to_vec()))?;
        }
        Ok(node)
    }

    /// Leaves left to right, each with its path and implicit set.
    pub fn leaves(&self) -> Vec<(Vec<usize>, Vec<SignedFormula>)> {
        let mut out = Vec::new();
        let mut stack = vec![(Vec::new(), self, self.explicit.clone())];
        while let Some((path, node, implicit)) = stack.pop() {
            let Some(used) = &node.used else {
                out.push((path, implicit));
                continue;
            };
            let delta = split(&implicit, used).expect("used formula belongs to the implicit set");
            for (i, child) in node.children.iter().enumerate().rev() {
                let mut p = path.clone();
                p.push(i);
                stack.push((p, child, child_implicit(&delta, &child.explicit)));
            }
        }
        out
    }

    /// Decomposes formula `index` of the implicit set at the leaf `path`.
    pub fn extend_at(&mut self, path: &[usize], index: usize) -> Result<(), TraceError> {
        let implicit = implicit_set(self, path)?;
        let node = self.node_mut(path)?;
        if !node.is_leaf() {
            return Err(TraceError::NotALeaf(path.to_vec()));
        }
        let sigma = implicit.get(index).cloned().ok_or_else(|| {
            EngineError::ManualChoiceInvalid(format!(
                "index {index} out of range for a set of {} formulae",
                implicit.len()
            ))
        })?;
        let (_, groups) = products(&sigma)?;
        node.used = Some(sigma);
        node.children = groups.into_iter().map(Tableau::leaf).collect();
        Ok(())
    }

    pub fn is_complete(&self) -> bool {
        self.leaves()
            .iter()
            .all(|(_, set)| set_status(set) != BranchStatus::Incomplete)
    }
}

fn child_implicit(delta: &[SignedFormula], explicit: &[SignedFormula]) -> Vec<SignedFormula> {
    let mut out = delta.to_vec();
    for sf in explicit {
        union_push(&mut out, sf.clone());
    }
    out
}

pub fn build_tableau<S: Selector + ?Sized>(
    gamma: &[SignedFormula],
    selector: &mut S,
    options: TraceOptions,
) -> Result<Tableau, TraceError> {
    let root = dedup(gamma);
    grow_tableau(root.clone(), root, selector, options)
}

fn grow_tableau<S: Selector + ?Sized>(
    explicit: Vec<SignedFormula>,
    implicit: Vec<SignedFormula>,
    selector: &mut S,
    options: TraceOptions,
) -> Result<Tableau, TraceError> {
    if options.early_stop && has_complementary_pair(&implicit) {
        return Ok(Tableau::leaf(explicit));
    }
    let Some(index) = selector.select(&implicit)? else {
        return Ok(Tableau::leaf(explicit));
    };
    let sigma = implicit[index].clone();
    let (_, groups) = products(&sigma)?;
    let delta = split(&implicit, &sigma)?;
    let children = groups
        .into_iter()
        .map(|e| {
            let next = child_implicit(&delta, &e);
            grow_tableau(e, next, selector, options)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Tableau {
        explicit,
        used: Some(sigma),
        children,
    })
}

/// The full set at `path`: the root's explicit set, then
/// `(parent set − parent's used formula) ∪ explicit` on the way down.
pub fn implicit_set(t: &Tableau, path: &[usize]) -> Result<Vec<SignedFormula>, TraceError> {
    let mut node = t;
    let mut set = t.explicit.clone();
    for &i in path {
        let child = node
            .children
            .get(i)
            .ok_or_else(|| TraceError::BadPath(path.to_vec()))?;
        let used = node
            .used
            .as_ref()
            .expect("nodes with children have a used formula");
        set = child_implicit(&split(&set, used)?, &child.explicit);
        node = child;
    }
    Ok(set)
}

/// Union of the explicit sets along the branch to `leaf_path`, minus every
/// formula used on that branch.
pub fn branch_union_check(
    t: &Tableau,
    leaf_path: &[usize],
) -> Result<Vec<SignedFormula>, TraceError> {
    let leaf = t.node(leaf_path)?;
    if !leaf.is_leaf() {
        return Err(TraceError::NotALeaf(leaf_path.to_vec()));
    }
    let mut union = Vec::new();
    let mut used = Vec::new();
    let mut node = t;
    let mut steps = leaf_path.iter();
    loop {
        for sf in &node.explicit {
            union_push(&mut union, sf.clone());
        }
        if let Some(u) = &node.used {
            used.push(u.clone());
        }
        match steps.next() {
            Some(&i) => node = &node.children[i],
            None => break,
        }
    }
    union.retain(|sf| !used.contains(sf));
    Ok(union)
}

pub fn branch_status(t: &Tableau, leaf_path: &[usize]) -> Result<BranchStatus, TraceError> {
    if !t.node(leaf_path)?.is_leaf() {
        return Err(TraceError::NotALeaf(leaf_path.to_vec()));
    }
    Ok(set_status(&implicit_set(t, leaf_path)?))
}

/// The tree of lists carrying the same information: every node's content is
/// its implicit set.
pub fn to_tree_of_lists(t: &Tableau) -> Result<TreeOfLists, TraceError> {
    fn go(
        node: &Tableau,
        implicit: Vec<SignedFormula>,
        path: &mut Vec<usize>,
    ) -> Result<TreeOfLists, TraceError> {
        let Some(used) = &node.used else {
            if set_status(&implicit) == BranchStatus::Incomplete {
                return Err(TraceError::IncompleteTableau(path.clone()));
            }
            return Ok(TreeOfLists::leaf(implicit));
        };
        let rule =
            Rule::for_formula(used).ok_or_else(|| EngineError::NotComposite(used.clone()))?;
        let delta = split(&implicit, used)?;
        let mut children = Vec::with_capacity(node.children.len());
        for (i, child) in node.children.iter().enumerate() {
            path.push(i);
            children.push(go(child, child_implicit(&delta, &child.explicit), path)?);
            path.pop();
        }
        Ok(TreeOfLists {
            content: implicit,
            label: Some((rule, used.clone())),
            children,
        })
    }
    go(t, t.explicit.clone(), &mut Vec::new())
}

/// Union over the leaves of the models of their implicit sets.
pub fn tableau_models(t: &Tableau) -> Result<ModelSet, TraceError> {
    let mut out = ModelSet::empty();
    for (path, set) in t.leaves() {
        out.extend(leaf_models(&set).ok_or(TraceError::IncompleteTableau(path))?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Export

#[derive(Debug, Serialize)]
struct ListNodeJson {
    rule: NodeRule,
    used: Option<String>,
    content: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    status: Option<BranchStatus>,
    children: Vec<ListNodeJson>,
}

#[derive(Debug, Serialize)]
struct TableauNodeJson {
    rule: NodeRule,
    used: Option<String>,
    explicit: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    status: Option<BranchStatus>,
    children: Vec<TableauNodeJson>,
}

fn strings(list: &[SignedFormula]) -> Vec<String> {
    list.iter().map(ToString::to_string).collect()
}

/// JSON object per node with `rule`, `used`, `content`, leaf `status`, and
/// `children`, in that key order.
pub fn tree_of_lists_json(tree: &TreeOfLists) -> serde_json::Value {
    fn go(node: &TreeOfLists) -> ListNodeJson {
        ListNodeJson {
            rule: node.rule(),
            used: node.used().map(ToString::to_string),
            content: strings(&node.content),
            status: node.is_leaf().then(|| set_status(&node.content)),
            children: node.children.iter().map(go).collect(),
        }
    }
    serde_json::to_value(go(tree)).expect("tree serializes")
}

/// Like [`tree_of_lists_json`] but with `explicit` in place of `content`.
pub fn tableau_json(t: &Tableau) -> serde_json::Value {
    fn go(node: &Tableau, implicit: &[SignedFormula]) -> TableauNodeJson {
        let children = match &node.used {
            None => Vec::new(),
            Some(used) => {
                let delta =
                    split(implicit, used).expect("used formula belongs to the implicit set");
                node.children
                    .iter()
                    .map(|c| go(c, &child_implicit(&delta, &c.explicit)))
                    .collect()
            }
        };
        TableauNodeJson {
            rule: node.rule(),
            used: node.used.as_ref().map(ToString::to_string),
            explicit: strings(&node.explicit),
            status: node.is_leaf().then(|| set_status(implicit)),
            children,
        }
    }
    serde_json::to_value(go(t, &t.explicit)).expect("tableau serializes")
}

/// Uniform view over both tree shapes for the text renderers.
struct View {
    lines: Vec<String>,
    used: Option<(NodeRule, String)>,
    /// For leaves: status of the full set at the leaf, and its model.
    leaf: Option<(BranchStatus, Option<String>)>,
    children: Vec<View>,
}

fn leaf_annotation(set: &[SignedFormula]) -> (BranchStatus, Option<String>) {
    let status = set_status(set);
    let model = (status == BranchStatus::Open).then(|| {
        let ms = lmods(set).expect("open leaves are literal sets");
        ms.into_iter()
            .next()
            .map(|m| render_model(&m))
            .unwrap_or_default()
    });
    (status, model)
}

/// A partial model as `p=T q=F`, or `(all interpretations)` when empty.
pub fn render_model(model: &crate::formula::PartialModel) -> String {
    if model.is_empty() {
        "(all interpretations)".to_string()
    } else {
        model.to_string()
    }
}

fn list_view(node: &TreeOfLists) -> View {
    View {
        lines: strings(&node.content),
        used: node
            .label
            .as_ref()
            .map(|(r, sf)| (NodeRule::from(*r), sf.to_string())),
        leaf: node.is_leaf().then(|| leaf_annotation(&node.content)),
        children: node.children.iter().map(list_view).collect(),
    }
}

fn tableau_view(node: &Tableau, implicit: &[SignedFormula]) -> View {
    let children = match &node.used {
        None => Vec::new(),
        Some(used) => {
            let delta = split(implicit, used).expect("used formula belongs to the implicit set");
            node.children
                .iter()
                .map(|c| tableau_view(c, &child_implicit(&delta, &c.explicit)))
                .collect()
        }
    };
    View {
        lines: strings(&node.explicit),
        used: node.used.as_ref().map(|u| (node.rule(), u.to_string())),
        leaf: node.is_leaf().then(|| leaf_annotation(implicit)),
        children,
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn view_to_dot(root: &View, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    let mut next_id = 0usize;
    let mut stack = vec![(root, None::<usize>)];
    let mut edges = Vec::new();
    while let Some((view, parent)) = stack.pop() {
        let id = next_id;
        next_id += 1;
        let mut label: Vec<String> = view.lines.iter().map(|l| dot_escape(l)).collect();
        if let Some((rule, used)) = &view.used {
            label.push(dot_escape(&format!("[{rule}] {used}")));
        }
        match &view.leaf {
            Some((BranchStatus::Closed, _)) => label.push("✕".into()),
            Some((BranchStatus::Open, Some(model))) => {
                label.push(dot_escape(&format!("open: {model}")))
            }
            Some((BranchStatus::Incomplete, _)) => label.push("incomplete".into()),
            _ => {}
        }
        writeln!(out, "  n{id} [label=\"{}\"];", label.join("\\n")).unwrap();
        if let Some(p) = parent {
            edges.push((p, id));
        }
        for child in view.children.iter().rev() {
            stack.push((child, Some(id)));
        }
    }
    for (from, to) in edges {
        writeln!(out, "  n{from} -> n{to};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn view_to_ascii(root: &View) -> String {
    fn describe(view: &View) -> String {
        let mut s = format!("{{{}}}", view.lines.join(", "));
        if let Some((rule, used)) = &view.used {
            write!(s, "  [{rule}] {used}").unwrap();
        }
        match &view.leaf {
            Some((BranchStatus::Closed, _)) => s.push_str("  ✕"),
            Some((BranchStatus::Open, Some(model))) => write!(s, "  open: {model}").unwrap(),
            Some((BranchStatus::Incomplete, _)) => s.push_str("  incomplete"),
            _ => {}
        }
        s
    }
    fn go(view: &View, prefix: &str, out: &mut String) {
        let n = view.children.len();
        for (i, child) in view.children.iter().enumerate() {
            let last = i + 1 == n;
            let (branch, extend) = if last {
                ("└── ", "    ")
            } else {
                ("├── ", "│   ")
            };
            writeln!(out, "{prefix}{branch}{}", describe(child)).unwrap();
            go(child, &format!("{prefix}{extend}"), out);
        }
    }
    let mut out = String::new();
    writeln!(out, "{}", describe(root)).unwrap();
    go(root, "", &mut out);
    out
}

/// Graphviz rendering; children are emitted left to right.
pub fn tree_of_lists_dot(tree: &TreeOfLists) -> String {
    view_to_dot(&list_view(tree), "tree_of_lists")
}

pub fn tableau_dot(t: &Tableau) -> String {
    view_to_dot(&tableau_view(t, &t.explicit), "tableau")
}

pub fn tree_of_lists_ascii(tree: &TreeOfLists) -> String {
    view_to_ascii(&list_view(tree))
}

pub fn tableau_ascii(t: &Tableau) -> String {
    view_to_ascii(&tableau_view(t, &t.explicit))
}

pub fn render_list(list: &[SignedFormula]) -> String {
    format!("[{}]", strings(list).join(", "))
}
