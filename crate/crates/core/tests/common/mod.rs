//! Independent reference implementations used to cross-check the library:
//! an AST-interpreter membership oracle and brute-force class counters that
//! only ever step the automaton as a black-box membership function.

// Not every test target uses every helper.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use recog::automata::Dfa;
use recog::regex::ExtRegex;

/// Direct interpretation of an expression on a word, by exhaustive splitting.
/// Exponential, fine for the short words it is used on.
pub fn naive_matches(e: &ExtRegex, w: &[char]) -> bool {
    match e {
        ExtRegex::EmptyLang => false,
        ExtRegex::Epsilon => w.is_empty(),
        ExtRegex::Lit(c) => w.len() == 1 && w[0] == *c,
        ExtRegex::Union(l, r) => naive_matches(l, w) || naive_matches(r, w),
        ExtRegex::Intersect(l, r) => naive_matches(l, w) && naive_matches(r, w),
        ExtRegex::Complement(inner) => !naive_matches(inner, w),
        ExtRegex::Concat(l, r) => {
            (0..=w.len()).any(|k| naive_matches(l, &w[..k]) && naive_matches(r, &w[k..]))
        }
        ExtRegex::Star(inner) => {
            w.is_empty()
                || (1..=w.len()).any(|k| naive_matches(inner, &w[..k]) && naive_matches(e, &w[k..]))
        }
    }
}

fn push_bit(sig: &mut Vec<u64>, index: usize, value: bool) {
    if index.is_multiple_of(64) {
        sig.push(0);
    }
    if value {
        *sig.last_mut().unwrap() |= 1 << (index % 64);
    }
}

fn reachable_within(d: &Dfa, from: usize, depth: usize, out: &mut BTreeSet<usize>) {
    out.insert(from);
    if depth == 0 {
        return;
    }
    for a in 0..d.alphabet().len() {
        reachable_within(d, d.next(from, a as u8), depth - 1, out);
    }
}

/// Acceptance signatures over every suffix of length ≤ `depth`, one per
/// tracked state, built by walking the full suffix tree.
fn suffix_signatures(d: &Dfa, states: &[usize], depth: usize) -> Vec<Vec<u64>> {
    let mut sigs = vec![Vec::new(); states.len()];
    let mut counter = 0usize;
    fn rec(d: &Dfa, cur: &[usize], depth: usize, sigs: &mut [Vec<u64>], counter: &mut usize) {
        let idx = *counter;
        *counter += 1;
        for (i, &q) in cur.iter().enumerate() {
            push_bit(&mut sigs[i], idx, d.is_accept(q));
        }
        if depth == 0 {
            return;
        }
        for a in 0..d.alphabet().len() {
            let next: Vec<usize> = cur.iter().map(|&q| d.next(q, a as u8)).collect();
            rec(d, &next, depth - 1, sigs, counter);
        }
    }
    rec(d, states, depth, &mut sigs, &mut counter);
    sigs
}

/// Number of distinct rows in the right-congruence table restricted to
/// prefixes and suffixes of length ≤ `len`: enumerate the states reached by
/// the prefixes, then compare their acceptance behavior over every suffix.
pub fn nerode_class_count_bruteforce(d: &Dfa, len: usize) -> usize {
    let mut reached = BTreeSet::new();
    reachable_within(d, d.start(), len, &mut reached);
    let states: Vec<usize> = reached.into_iter().collect();
    let sigs = suffix_signatures(d, &states, len);
    sigs.into_iter().collect::<HashSet<_>>().len()
}

/// Number of two-sided congruence classes among words of length ≤
/// `candidate_len`, where contexts (c1, c2) both range over words of length ≤
/// `context_len`. The class of a word is determined by, for each state
/// reachable by some c1, the right-behavior class of the state reached after
/// reading the word there.
pub fn theta_prime_class_count_bruteforce(
    d: &Dfa,
    candidate_len: usize,
    context_len: usize,
) -> usize {
    let n = d.state_count();
    let all_states: Vec<usize> = (0..n).collect();
    let right_sigs = suffix_signatures(d, &all_states, context_len);
    let mut ids: HashMap<&Vec<u64>, usize> = HashMap::new();
    let right_class: Vec<usize> = right_sigs
        .iter()
        .map(|sig| {
            let next = ids.len();
            *ids.entry(sig).or_insert(next)
        })
        .collect();

    let mut left_reach = BTreeSet::new();
    reachable_within(d, d.start(), context_len, &mut left_reach);
    let left_states: Vec<usize> = left_reach.into_iter().collect();

    let mut distinct: HashSet<Vec<usize>> = HashSet::new();
    fn rec(
        d: &Dfa,
        cur: &[usize],
        depth: usize,
        right_class: &[usize],
        distinct: &mut HashSet<Vec<usize>>,
    ) {
        distinct.insert(cur.iter().map(|&q| right_class[q]).collect());
        if depth == 0 {
            return;
        }
        for a in 0..d.alphabet().len() {
            let next: Vec<usize> = cur.iter().map(|&q| d.next(q, a as u8)).collect();
            rec(d, &next, depth - 1, right_class, distinct);
        }
    }
    rec(d, &left_states, candidate_len, &right_class, &mut distinct);
    distinct.len()
}
