//! Seeded random formulae and selectors, for benchmarks and testing.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::formula::{Formula, Letter, Sign, SignedFormula};
use crate::models::{dedup, EngineError, Selector};

/// `p`, `q`, `r`, `s`, `t`, then `p5`, `p6`, ...
pub fn letter_names(count: usize) -> Vec<Letter> {
    const FIRST: [&str; 5] = ["p", "q", "r", "s", "t"];
    (0..count)
        .map(|i| match FIRST.get(i) {
            Some(name) => Letter::new(name).unwrap(),
            None => Letter::new(&format!("p{i}")).unwrap(),
        })
        .collect()
}

/// Grammar-directed generator. Below the depth limit a node is a letter,
/// a negation or a conjunction with the given relative weights.
#[derive(Debug, Clone)]
pub struct FormulaGenerator {
    pub letters: Vec<Letter>,
    pub max_depth: usize,
    pub letter_weight: u32,
    pub not_weight: u32,
    pub and_weight: u32,
}

impl FormulaGenerator {
    pub fn new(letter_count: usize, max_depth: usize) -> Self {
        assert!(letter_count > 0, "need at least one letter");
        FormulaGenerator {
            letters: letter_names(letter_count),
            max_depth,
            letter_weight: 3,
            not_weight: 3,
            and_weight: 4,
        }
    }

    pub fn formula<R: Rng + ?Sized>(&self, rng: &mut R) -> Formula {
        self.formula_at(rng, self.max_depth)
    }

    fn formula_at<R: Rng + ?Sized>(&self, rng: &mut R, depth: usize) -> Formula {
        let letter = |rng: &mut R| Formula::Var(self.letters.choose(rng).unwrap().clone());
        if depth == 0 {
            return letter(rng);
        }
        let total = self.letter_weight + self.not_weight + self.and_weight;
        let roll = rng.gen_range(0..total);
        if roll < self.letter_weight {
            letter(rng)
        } else if roll < self.letter_weight + self.not_weight {
            Formula::not(self.formula_at(rng, depth - 1))
        } else {
            let l = self.formula_at(rng, depth - 1);
            let r = self.formula_at(rng, depth - 1);
            Formula::and(l, r)
        }
    }

    pub fn signed<R: Rng + ?Sized>(&self, rng: &mut R) -> SignedFormula {
        let sign = if rng.gen_bool(0.5) { Sign::T } else { Sign::F };
        SignedFormula::new(sign, self.formula(rng))
    }

    /// A duplicate-free list of between 1 and `max_size` signed formulae.
    pub fn gamma<R: Rng + ?Sized>(&self, rng: &mut R, max_size: usize) -> Vec<SignedFormula> {
        let size = rng.gen_range(1..=max_size.max(1));
        let raw: Vec<SignedFormula> = (0..size).map(|_| self.signed(rng)).collect();
        dedup(&raw)
    }
}

/// Picks uniformly among the composite members.
#[derive(Debug, Clone)]
pub struct RandomSelector<R> {
    rng: R,
}

impl<R: Rng> RandomSelector<R> {
    pub fn new(rng: R) -> Self {
        RandomSelector { rng }
    }
}

impl<R: Rng> Selector for RandomSelector<R> {
    fn select(&mut self, gamma: &[SignedFormula]) -> Result<Option<usize>, EngineError> {
        let composites: Vec<usize> = gamma
            .iter()
            .enumerate()
            .filter(|(_, sf)| !sf.is_literal())
            .map(|(i, _)| i)
            .collect();
        Ok(composites.choose(&mut self.rng).copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn respects_depth_and_letters() {
        let gen = FormulaGenerator::new(3, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let f = gen.formula(&mut rng);
            assert!(f.depth() <= 4);
            assert!(f.letters().iter().all(|l| gen.letters.contains(l)));
        }
    }

    #[test]
    fn deterministic_for_a_seed() {
        let gen = FormulaGenerator::new(3, 4);
        let a: Vec<_> = {
            let mut rng = ChaCha8Rng::seed_from_u64(42);
            (0..20).map(|_| gen.gamma(&mut rng, 3)).collect()
        };
        let b: Vec<_> = {
            let mut rng = ChaCha8Rng::seed_from_u64(42);
            (0..20).map(|_| gen.gamma(&mut rng, 3)).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn letter_name_sequence() {
        let names: Vec<String> = letter_names(7).iter().map(|l| l.to_string()).collect();
        assert_eq!(names, ["p", "q", "r", "s", "t", "p5", "p6"]);
    }
}
