//! Test-only enumerators and an independent evaluator.

#![allow(dead_code)]

use std::collections::BTreeMap;

use tableaux::formula::{Formula, Letter, Sign, SignedFormula};
use tableaux::generate::letter_names;
use tableaux::parser::SurfaceFormula;

/// Every core formula of depth at most `depth` over `letters`.
pub fn all_core(letters: &[Letter], depth: usize) -> Vec<Formula> {
    let mut levels: Vec<Formula> = letters.iter().cloned().map(Formula::Var).collect();
    for _ in 0..depth {
        let prev = levels.clone();
        let mut next: Vec<Formula> = letters.iter().cloned().map(Formula::Var).collect();
        next.extend(prev.iter().cloned().map(Formula::not));
        for a in &prev {
            for b in &prev {
                next.push(Formula::and(a.clone(), b.clone()));
            }
        }
        levels = next;
    }
    levels
}

pub fn all_signed(letters: &[Letter], depth: usize) -> Vec<SignedFormula> {
    all_core(letters, depth)
        .into_iter()
        .flat_map(|f| [SignedFormula::t(f.clone()), SignedFormula::f(f)])
        .collect()
}

/// Calls `visit` on every surface formula of depth at most `depth`. Levels
/// below `depth` are materialised; the top level is streamed.
pub fn for_each_surface(letters: &[Letter], depth: usize, mut visit: impl FnMut(&SurfaceFormula)) {
    // (depth, formula) for everything strictly below the current level
    let mut below: Vec<(usize, SurfaceFormula)> = Vec::new();
    let mut current: Vec<SurfaceFormula> =
        letters.iter().cloned().map(SurfaceFormula::Var).collect();
    for f in &current {
        visit(f);
    }
    for d in 1..=depth {
        below.extend(current.drain(..).map(|f| (d - 1, f)));
        let keep = d < depth;
        let mut emit = |f: SurfaceFormula, current: &mut Vec<SurfaceFormula>| {
            visit(&f);
            if keep {
                current.push(f);
            }
        };
        for (da, a) in &below {
            if *da == d - 1 {
                emit(SurfaceFormula::not(a.clone()), &mut current);
            }
        }
        for (da, a) in &below {
            for (db, b) in &below {
                if (*da).max(*db) != d - 1 {
                    continue;
                }
                emit(SurfaceFormula::and(a.clone(), b.clone()), &mut current);
                emit(SurfaceFormula::or(a.clone(), b.clone()), &mut current);
                emit(SurfaceFormula::implies(a.clone(), b.clone()), &mut current);
                emit(SurfaceFormula::iff(a.clone(), b.clone()), &mut current);
            }
        }
    }
}

/// Standard two-valued semantics of the surface connectives.
pub fn surface_value(sf: &SurfaceFormula, values: &BTreeMap<Letter, bool>) -> bool {
    match sf {
        SurfaceFormula::Var(p) => values[p],
        SurfaceFormula::Not(a) => !surface_value(a, values),
        SurfaceFormula::And(a, b) => surface_value(a, values) && surface_value(b, values),
        SurfaceFormula::Or(a, b) => surface_value(a, values) || surface_value(b, values),
        SurfaceFormula::Implies(a, b) => !surface_value(a, values) || surface_value(b, values),
        SurfaceFormula::Iff(a, b) => surface_value(a, values) == surface_value(b, values),
    }
}

/// Truth table of `f` as a bit vector: bit `k` is the value under the
/// assignment whose `i`-th letter is bit `i` of `k`.
pub fn truth_bits(f: &Formula, letters: &[Letter]) -> u64 {
    assert!(letters.len() <= 6);
    let rows = 1u32 << letters.len();
    let all: u64 = if rows == 64 {
        u64::MAX
    } else {
        (1u64 << rows) - 1
    };
    fn go(f: &Formula, letters: &[Letter], all: u64) -> u64 {
        match f {
            Formula::Var(p) => {
                let i = letters
                    .iter()
                    .position(|l| l == p)
                    .expect("letter in table");
                let mut bits = 0u64;
                for k in 0..64u32 {
                    if (all >> k) & 1 == 1 && (k >> i) & 1 == 1 {
                        bits |= 1 << k;
                    }
                }
                bits
            }
            Formula::Not(a) => !go(a, letters, all) & all,
            Formula::And(a, b) => go(a, letters, all) & go(b, letters, all),
        }
    }
    go(f, letters, all)
}

pub fn signed_bits(sf: &SignedFormula, letters: &[Letter]) -> u64 {
    let rows = 1u32 << letters.len();
    let all: u64 = if rows == 64 {
        u64::MAX
    } else {
        (1u64 << rows) - 1
    };
    let bits = truth_bits(&sf.formula, letters);
    match sf.sign {
        Sign::T => bits,
        Sign::F => !bits & all,
    }
}

pub fn assignment_from_row(letters: &[Letter], row: u32) -> BTreeMap<Letter, bool> {
    letters
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), (row >> i) & 1 == 1))
        .collect()
}

pub fn letters(n: usize) -> Vec<Letter> {
    letter_names(n)
}

/// Bit-vector truth table of a surface formula, laid out as in [`truth_bits`].
pub fn surface_bits(sf: &SurfaceFormula, letters: &[Letter]) -> u64 {
    let rows = 1u32 << letters.len();
    let all: u64 = if rows == 64 {
        u64::MAX
    } else {
        (1u64 << rows) - 1
    };
    let go = |f: &SurfaceFormula| surface_bits(f, letters);
    match sf {
        SurfaceFormula::Var(p) => truth_bits(&Formula::Var(p.clone()), letters),
        SurfaceFormula::Not(a) => !go(a) & all,
        SurfaceFormula::And(a, b) => go(a) & go(b),
        SurfaceFormula::Or(a, b) => go(a) | go(b),
        SurfaceFormula::Implies(a, b) => (!go(a) | go(b)) & all,
        SurfaceFormula::Iff(a, b) => !(go(a) ^ go(b)) & all,
    }
}
