//! Seeded random expression corpora for cross-validation runs.
//!
//! Draws are rejected until they compile within the state bound, minimize to
//! at most `max_states` states, and keep their syntactic monoid under
//! `max_monoid` elements. The caps keep the exhaustive brute-force
//! cross-checks in the test suite inside their per-item time budget; the
//! same seed always yields the same corpus.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::algebra::transition_monoid_bounded;
use crate::automata::{compile_bounded, Dfa};
use crate::regex::ExtRegex;

#[derive(Debug, Clone)]
pub struct CorpusOptions {
    pub count: usize,
    pub max_depth: usize,
    pub allow_star: bool,
    pub seed: u64,
    pub max_states: usize,
    pub max_monoid: usize,
    pub state_limit: usize,
}

impl CorpusOptions {
    /// Expressions over the full operator set, depth ≤ 5, alphabets of size
    /// 2 or 3.
    pub fn regular(count: usize, seed: u64) -> Self {
        CorpusOptions {
            count,
            max_depth: 5,
            allow_star: true,
            seed,
            max_states: 6,
            max_monoid: 2_000,
            state_limit: 100_000,
        }
    }

    /// Star-free-syntactic expressions: no star node anywhere.
    pub fn star_free(count: usize, seed: u64) -> Self {
        CorpusOptions {
            allow_star: false,
            ..Self::regular(count, seed)
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub alphabet: Alphabet,
    pub regex: ExtRegex,
    /// Minimal complete automaton of the expression.
    pub dfa: Dfa,
}

pub fn generate_corpus(options: &CorpusOptions) -> Vec<CorpusItem> {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let mut items = Vec::with_capacity(options.count);
    let mut attempts = 0usize;
    let attempt_cap = options.count.saturating_mul(10_000).max(10_000);
    while items.len() < options.count {
        attempts += 1;
        assert!(
            attempts <= attempt_cap,
            "corpus generation did not converge; loosen the acceptance caps"
        );
        let alphabet = if rng.gen_bool(0.5) {
            Alphabet::parse("01").unwrap()
        } else {
            Alphabet::parse("012").unwrap()
        };
        let regex = random_expr(&mut rng, options.max_depth, &alphabet, options.allow_star);
        let Ok(dfa) = compile_bounded(&regex, &alphabet, options.state_limit) else {
            continue;
        };
        if dfa.state_count() > options.max_states {
            continue;
        }
        if transition_monoid_bounded(&dfa, options.max_monoid).is_err() {
            continue;
        }
        items.push(CorpusItem {
            alphabet,
            regex,
            dfa,
        });
    }
    items
}

fn random_symbol(rng: &mut ChaCha8Rng, alphabet: &Alphabet) -> char {
    alphabet.symbol(rng.gen_range(0..alphabet.len()))
}

fn random_expr(
    rng: &mut ChaCha8Rng,
    budget: usize,
    alphabet: &Alphabet,
    allow_star: bool,
) -> ExtRegex {
    if budget == 0 {
        return match rng.gen_range(0..10u32) {
            0 => ExtRegex::Epsilon,
            1 => ExtRegex::EmptyLang,
            _ => ExtRegex::Lit(random_symbol(rng, alphabet)),
        };
    }
    let roll = if allow_star {
        rng.gen_range(0..20u32)
    } else {
        // Star's weight folded into concatenation.
        let r = rng.gen_range(0..20u32);
        if (14..17).contains(&r) {
            9
        } else {
            r
        }
    };
    match roll {
        0..=3 => ExtRegex::Lit(random_symbol(rng, alphabet)),
        4 => ExtRegex::Epsilon,
        5 => ExtRegex::EmptyLang,
        6..=9 => ExtRegex::union(
            random_expr(rng, budget - 1, alphabet, allow_star),
            random_expr(rng, budget - 1, alphabet, allow_star),
        ),
        10..=13 => ExtRegex::concat(
            random_expr(rng, budget - 1, alphabet, allow_star),
            random_expr(rng, budget - 1, alphabet, allow_star),
        ),
        14..=16 => ExtRegex::star(random_expr(rng, budget - 1, alphabet, allow_star)),
        17 | 18 => ExtRegex::complement(random_expr(rng, budget - 1, alphabet, allow_star)),
        _ => ExtRegex::intersect(
            random_expr(rng, budget - 1, alphabet, allow_star),
            random_expr(rng, budget - 1, alphabet, allow_star),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_corpus() {
        let a = generate_corpus(&CorpusOptions::regular(10, 7));
        let b = generate_corpus(&CorpusOptions::regular(10, 7));
        let left: Vec<_> = a.iter().map(|i| i.regex.clone()).collect();
        let right: Vec<_> = b.iter().map(|i| i.regex.clone()).collect();
        assert_eq!(left, right);
    }

    #[test]
    fn star_free_corpus_has_no_star_nodes() {
        let items = generate_corpus(&CorpusOptions::star_free(25, 0));
        assert_eq!(items.len(), 25);
        for item in items {
            assert!(item.regex.is_star_free_syntactic());
        }
    }

    #[test]
    fn corpus_respects_state_cap() {
        for item in generate_corpus(&CorpusOptions::regular(25, 0)) {
            assert!(item.dfa.state_count() <= 6);
            assert_eq!(item.dfa.minimize(), item.dfa);
        }
    }
}
