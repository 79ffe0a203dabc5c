//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tableaux::formula::{letters_of, total_measure, Letter, PartialModel, SignedFormula};
use tableaux::generate::{FormulaGenerator, RandomSelector};
use tableaux::models::{
    expand_partial_models, models, models_with, EngineOptions, ModelSet, Recording,
    SelectionStrategy,
};
use tableaux::oracle::{truth_table_models, TotalAssignment, DEFAULT_MAX_LETTERS};
use tableaux::parser::{desugar, parse_formula, parse_problem, render};
use tableaux::trace::{
    branch_status, branch_union_check, build_tableau, build_tree_of_lists, implicit_set,
    run_flat_trace, same_set, to_tree_of_lists, BranchStatus, TraceOptions, TreeOfLists,
};

use common::{all_signed, for_each_surface, letters, surface_bits, truth_bits};

const ORACLE_SEED: u64 = 0x5eed_0003;
const TREE_SEED: u64 = 0x5eed_0005;
const TERMINATION_SEED: u64 = 0x5eed_0008;
const ROUND_TRIP_SEED: u64 = 0x5eed_0009;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn worked_example() -> Vec<SignedFormula> {
    parse_problem("T: p & ~q\nF: p & q").unwrap().assumptions
}

fn within(limit: Duration, started: Instant, detail: String) -> Verdict {
    let elapsed = started.elapsed();
    if elapsed < limit {
        Ok(detail)
    } else {
        Err(format!("{detail}; took {elapsed:?}, limit {limit:?}"))
    }
}

/// Exhaustive: every list of at most two distinct signed formulae of depth
/// at most 2 over two letters. Random: 1000 seeded lists over at most three
/// letters with depth at most 4.
fn oracle_corpus() -> Vec<Vec<SignedFormula>> {
    let signed = all_signed(&letters(2), 2);
    let mut corpus = vec![vec![]];
    for a in &signed {
        corpus.push(vec![a.clone()]);
    }
    for a in &signed {
        for b in &signed {
            if a != b {
                corpus.push(vec![a.clone(), b.clone()]);
            }
        }
    }
    corpus.extend(random_corpus(ORACLE_SEED, 1000, 3, 4, 3));
    corpus
}

fn random_corpus(
    seed: u64,
    count: usize,
    letter_count: usize,
    depth: usize,
    size: usize,
) -> Vec<Vec<SignedFormula>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gen = FormulaGenerator::new(letter_count, depth);
    (0..count).map(|_| gen.gamma(&mut rng, size)).collect()
}

/// BranchLast, FirstComposite and a Manual replay of a random run.
fn strategies_for(gamma: &[SignedFormula], seed: u64) -> Vec<(&'static str, SelectionStrategy)> {
    let mut rec = Recording::new(RandomSelector::new(ChaCha8Rng::seed_from_u64(seed)));
    models_with(gamma, &mut rec, EngineOptions::default()).expect("random runs succeed");
    vec![
        ("branch-last", SelectionStrategy::BranchLast),
        ("first", SelectionStrategy::FirstComposite),
        ("manual", SelectionStrategy::manual(rec.into_choices())),
    ]
}

fn totals(ms: &ModelSet, gamma: &[SignedFormula]) -> BTreeSet<TotalAssignment> {
    expand_partial_models(ms, &letters_of(gamma)).expect("models only mention letters of gamma")
}

fn describe(gamma: &[SignedFormula]) -> String {
    gamma
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn criterion_1() -> Verdict {
    let started = Instant::now();
    let found =
        models(&worked_example(), SelectionStrategy::BranchLast).map_err(|e| e.to_string())?;
    let expected: PartialModel = [
        (Letter::new("p").unwrap(), true),
        (Letter::new("q").unwrap(), false),
    ]
    .into_iter()
    .collect();
    if found != ModelSet::singleton(expected) {
        return Err(format!("got {found:?}"));
    }
    within(Duration::from_secs(1), started, "models = {p=T q=F}".into())
}

fn criterion_2() -> Verdict {
    let started = Instant::now();
    // depth-first replay of F& at the root, then T& and ~ on each branch
    let mut choices = SelectionStrategy::manual(vec![1, 0, 2, 0, 2]);
    let steps = run_flat_trace(&worked_example(), &mut choices, TraceOptions::default())
        .map_err(|e| e.to_string())?;
    let last = &steps.last().unwrap().worklist;
    let expected = [
        parse_problem("T: p\nF: q\nF: p").unwrap().assumptions,
        parse_problem("T: p\nF: q\nF: q").unwrap().assumptions,
    ];
    if last.len() != 2 || !same_set(&last[0], &expected[0]) || !same_set(&last[1], &expected[1]) {
        return Err(format!("final lists {last:?}"));
    }
    within(
        Duration::from_secs(1),
        started,
        format!(
            "final lists {} and {}",
            tableaux::trace::render_list(&last[0]),
            tableaux::trace::render_list(&last[1])
        ),
    )
}

fn criterion_3() -> Verdict {
    let started = Instant::now();
    let corpus = oracle_corpus();
    let mut checks = 0usize;
    for (n, gamma) in corpus.iter().enumerate() {
        let expected = truth_table_models(gamma, DEFAULT_MAX_LETTERS).map_err(|e| e.to_string())?;
        for (name, strategy) in strategies_for(gamma, n as u64) {
            let found = models(gamma, strategy).map_err(|e| e.to_string())?;
            if totals(&found, gamma) != expected {
                return Err(format!(
                    "{name} disagrees with the truth table on [{}]",
                    describe(gamma)
                ));
            }
            checks += 1;
        }
    }
    within(
        Duration::from_secs(60),
        started,
        format!(
            "{} sets, {checks} engine runs, all equal to the truth table",
            corpus.len()
        ),
    )
}

fn criterion_4() -> Verdict {
    let corpus = oracle_corpus();
    for (n, gamma) in corpus.iter().enumerate() {
        let mut seen: Option<BTreeSet<TotalAssignment>> = None;
        for (name, strategy) in strategies_for(gamma, n as u64) {
            let t = totals(&models(gamma, strategy).map_err(|e| e.to_string())?, gamma);
            match &seen {
                None => seen = Some(t),
                Some(first) if *first != t => {
                    return Err(format!("{name} differs on [{}]", describe(gamma)));
                }
                Some(_) => {}
            }
        }
    }
    Ok(format!(
        "{} sets identical across 3 strategies",
        corpus.len()
    ))
}

/// Random sets with recorded random choice sequences.
fn tree_corpus() -> Vec<(Vec<SignedFormula>, Vec<usize>)> {
    random_corpus(TREE_SEED, 600, 3, 4, 3)
        .into_iter()
        .enumerate()
        .map(|(n, gamma)| {
            let mut rec = Recording::new(RandomSelector::new(ChaCha8Rng::seed_from_u64(
                TREE_SEED ^ n as u64,
            )));
            build_tableau(&gamma, &mut rec, TraceOptions::default()).expect("random runs succeed");
            (gamma, rec.into_choices())
        })
        .collect()
}

fn criterion_5() -> Verdict {
    let corpus = tree_corpus();
    let mut nodes = 0;
    for (gamma, choices) in &corpus {
        let opts = TraceOptions::default();
        let t = build_tableau(gamma, &mut SelectionStrategy::manual(choices.clone()), opts)
            .map_err(|e| e.to_string())?;
        let tree =
            build_tree_of_lists(gamma, &mut SelectionStrategy::manual(choices.clone()), opts)
                .map_err(|e| e.to_string())?;
        let mapped = to_tree_of_lists(&t).map_err(|e| e.to_string())?;
        if !mapped.same_up_to_order(&tree) {
            return Err(format!(
                "trees differ on [{}] with choices {choices:?}",
                describe(gamma)
            ));
        }
        nodes += tree.node_count();
    }
    Ok(format!(
        "{} tableaux match their trees of lists ({nodes} nodes)",
        corpus.len()
    ))
}

fn criterion_6() -> Verdict {
    let corpus = tree_corpus();
    let mut leaves = 0;
    for (gamma, choices) in &corpus {
        let t = build_tableau(
            gamma,
            &mut SelectionStrategy::manual(choices.clone()),
            TraceOptions::default(),
        )
        .map_err(|e| e.to_string())?;
        for (path, _) in t.leaves() {
            let implicit = implicit_set(&t, &path).map_err(|e| e.to_string())?;
            let union = branch_union_check(&t, &path).map_err(|e| e.to_string())?;
            if !same_set(&implicit, &union) {
                return Err(format!(
                    "leaf {path:?} of [{}]: {union:?} vs {implicit:?}",
                    describe(gamma)
                ));
            }
            leaves += 1;
        }
    }
    Ok(format!("{leaves} leaves over {} tableaux", corpus.len()))
}

fn criterion_7() -> Verdict {
    let corpus = oracle_corpus();
    let mut unsat = 0;
    for gamma in &corpus {
        let t = build_tableau(
            gamma,
            &mut SelectionStrategy::BranchLast,
            TraceOptions::default(),
        )
        .map_err(|e| e.to_string())?;
        let mut all_closed = true;
        for (path, _) in t.leaves() {
            all_closed &=
                branch_status(&t, &path).map_err(|e| e.to_string())? == BranchStatus::Closed;
        }
        let empty = truth_table_models(gamma, DEFAULT_MAX_LETTERS)
            .map_err(|e| e.to_string())?
            .is_empty();
        if all_closed != empty {
            return Err(format!(
                "closed={all_closed}, unsatisfiable={empty} on [{}]",
                describe(gamma)
            ));
        }
        unsat += usize::from(empty);
    }
    Ok(format!(
        "{} sets, {unsat} closed tableaux, all unsatisfiable",
        corpus.len()
    ))
}

fn measure_decreases(tree: &TreeOfLists) -> bool {
    tree.children
        .iter()
        .all(|c| total_measure(&c.content) < total_measure(&tree.content) && measure_decreases(c))
}

fn criterion_8() -> Verdict {
    let mut expansions = 0usize;
    let mut check = |gamma: &[SignedFormula], strategy: SelectionStrategy| -> Result<(), String> {
        let mut strategy = strategy;
        let tree = build_tree_of_lists(gamma, &mut strategy, TraceOptions::default())
            .map_err(|e| e.to_string())?;
        if !measure_decreases(&tree) {
            return Err(format!("measure did not decrease on [{}]", describe(gamma)));
        }
        expansions += tree.node_count() - tree.leaves().len();
        Ok(())
    };
    for gamma in oracle_corpus() {
        check(&gamma, SelectionStrategy::BranchLast)?;
        check(&gamma, SelectionStrategy::FirstComposite)?;
    }
    for (gamma, choices) in tree_corpus() {
        check(&gamma, SelectionStrategy::manual(choices))?;
    }

    let deep = random_corpus(TERMINATION_SEED, 300, 5, 8, 3);
    let mut slowest = Duration::ZERO;
    for gamma in &deep {
        for strategy in [
            SelectionStrategy::BranchLast,
            SelectionStrategy::FirstComposite,
        ] {
            let started = Instant::now();
            check(gamma, strategy.clone())?;
            models(gamma, strategy).map_err(|e| e.to_string())?;
            let took = started.elapsed();
            slowest = slowest.max(took);
            if took >= Duration::from_secs(10) {
                return Err(format!("run took {took:?} on [{}]", describe(gamma)));
            }
        }
    }
    Ok(format!(
        "{expansions} expansions all lower the measure; slowest depth-8 run {slowest:?}"
    ))
}

fn criterion_9() -> Verdict {
    let gen = FormulaGenerator::new(3, 6);
    let mut rng = ChaCha8Rng::seed_from_u64(ROUND_TRIP_SEED);
    for _ in 0..1000 {
        let f = gen.formula(&mut rng);
        let text = render(&f);
        let back = parse_formula(&text).map_err(|e| format!("`{text}`: {e}"))?;
        if desugar(&back) != f {
            return Err(format!("`{text}` does not round-trip"));
        }
    }

    let ls = letters(2);
    let mut count = 0usize;
    let mut failure = None;
    for_each_surface(&ls, 3, |sf| {
        count += 1;
        if failure.is_none() && truth_bits(&desugar(sf), &ls) != surface_bits(sf, &ls) {
            failure = Some(format!("{sf:?}"));
        }
    });
    match failure {
        Some(sf) => Err(format!("desugaring changes the meaning of {sf}")),
        None => Ok(format!(
            "1000 round-trips; {count} surface formulae desugared soundly"
        )),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("worked example reproduction", criterion_1),
        ("flat-trace replay", criterion_2),
        ("oracle equivalence", criterion_3),
        ("strategy invariance", criterion_4),
        ("tree correspondence", criterion_5),
        ("implicit-set theorem", criterion_6),
        ("closure soundness/completeness", criterion_7),
        ("termination", criterion_8),
        ("round-trip and desugaring", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let verdict =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = started.elapsed();
        match verdict {
            Ok(detail) => println!("PASS  {:>2}. {name} ({took:.2?}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {:>2}. {name} ({took:.2?}): {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
