//! Acceptance suite: one test per release criterion, each printing a PASS
//! line (run with `--nocapture` to see them). Every bound asserted here is
//! exact; there are no tolerances to tune.

mod common;

use std::sync::OnceLock;

use recog::algebra::{recognizer_to_dfa, transition_monoid};
use recog::alphabet::{Alphabet, Word};
use recog::automata::compile;
use recog::corpus::{generate_corpus, CorpusItem, CorpusOptions};
use recog::oracles::MembershipOracle;
use recog::phitypes::{
    rank_report, separation_certificate, theta_classes, two_type_bound_check, witness_tree,
    LanguageHandle,
};
use recog::regex::parse_regex;

fn corpus() -> &'static Vec<CorpusItem> {
    static CORPUS: OnceLock<Vec<CorpusItem>> = OnceLock::new();
    CORPUS.get_or_init(|| generate_corpus(&CorpusOptions::regular(200, 0)))
}

fn dfa_of(pattern: &str, alphabet: &str) -> recog::Dfa {
    let a = Alphabet::parse(alphabet).unwrap();
    compile(&parse_regex(pattern, &a).unwrap(), &a).unwrap()
}

/// Criterion 1: on 200 seeded random expressions, the reported class count
/// equals the minimal automaton state count and the brute-force class count
/// over prefixes/suffixes up to twice the state count. Exact equality.
#[test]
fn criterion_1_multiplicity_matches_minimal_states_and_bruteforce() {
    let items = corpus();
    assert_eq!(items.len(), 200);
    for (i, item) in items.iter().enumerate() {
        let report = rank_report(&LanguageHandle::from_dfa(item.dfa.clone()), 0).unwrap();
        assert!(report.rank_zero && !report.empirical);
        let states = item.dfa.state_count();
        assert_eq!(report.mult_phi, Some(states), "item {i}");
        let rows = common::nerode_class_count_bruteforce(&item.dfa, 2 * states);
        assert_eq!(states, rows, "item {i}: brute-force row count");
        assert_eq!(report.index.class_count(), states, "item {i}");
    }
    println!("PASS criterion 1: mult_phi = minimal states = brute-force rows on 200 expressions");
}

/// Criterion 2: on every corpus language with at most 4 minimal states, the
/// two-sided multiplicity equals the brute-force two-sided class count with
/// contexts up to length 6; spot values 0*1* -> 5, (aa)* -> 2, full -> 1.
#[test]
fn criterion_2_syntactic_monoid_size_matches_bruteforce() {
    let mut checked = 0;
    for (i, item) in corpus().iter().enumerate() {
        if item.dfa.state_count() > 4 {
            continue;
        }
        checked += 1;
        let monoid = transition_monoid(&item.dfa).unwrap();
        let brute = common::theta_prime_class_count_bruteforce(&item.dfa, 12, 6);
        assert_eq!(monoid.size(), brute, "item {i}");
    }
    assert!(checked > 0, "corpus contains small automata");

    for (pattern, alphabet, expected) in [("0*1*", "01", 5), ("(aa)*", "a", 2), ("!#", "01", 1)] {
        let d = dfa_of(pattern, alphabet);
        let report = rank_report(&LanguageHandle::from_dfa(d.clone()), 0).unwrap();
        assert_eq!(report.mult_phi_prime, Some(expected), "{pattern}");
        assert_eq!(
            common::theta_prime_class_count_bruteforce(&d, 12, 6),
            expected,
            "{pattern}: brute force"
        );
    }
    println!("PASS criterion 2: mult_phi_prime = brute-force two-sided classes ({checked} small corpus items + 3 spot values)");
}

/// Criterion 3: star-freeness verdicts; a 100-expression star-free-syntactic
/// corpus is 100% aperiodic.
#[test]
fn criterion_3_star_freeness() {
    let sm = transition_monoid(&dfa_of("0*1*", "01")).unwrap();
    assert!(sm.monoid().is_aperiodic(), "0*1* is star-free");
    let sm = transition_monoid(&dfa_of("(aa)*", "a")).unwrap();
    assert!(!sm.monoid().is_aperiodic(), "(aa)* is not star-free");

    let items = generate_corpus(&CorpusOptions::star_free(100, 0));
    assert_eq!(items.len(), 100);
    for (i, item) in items.iter().enumerate() {
        assert!(item.regex.is_star_free_syntactic(), "item {i}");
        let sm = transition_monoid(&item.dfa).unwrap();
        assert!(
            sm.monoid().is_aperiodic(),
            "item {i}: star-free syntax must yield an aperiodic monoid"
        );
    }
    println!("PASS criterion 3: star-free verdicts and 100/100 aperiodic star-free corpus");
}

/// Criterion 4: balanced01 class counts follow 2L+2 for L = 1..5, grow
/// strictly, and the non-recognizability certificate re-verifies entirely.
#[test]
fn criterion_4_balanced01_class_law_and_certificate() {
    let h = LanguageHandle::from_oracle(MembershipOracle::balanced01());
    let mut previous = 0;
    for len in 1..=5 {
        let count = theta_classes(&h, len).unwrap().class_count();
        assert_eq!(count, 2 * len + 2, "class count at probe length {len}");
        assert!(count > previous, "class counts must grow strictly");
        previous = count;
    }
    let report = rank_report(&h, 5).unwrap();
    assert!(!report.rank_zero);
    let witness = report.witness.expect("growing class systems yield a certificate");
    assert_eq!(witness.k(), 12);
    assert!(witness.is_complete());
    assert!(witness.verify(&h).unwrap(), "every certificate entry re-verifies");
    println!("PASS criterion 4: balanced01 counts 2L+2 for L=1..5, certificate verified (k=12)");
}

/// Criterion 5: the two-type bound holds for the triple language at
/// max_len = 6 (runtime budget 60 s; actual runtime is far below).
#[test]
fn criterion_5_two_type_bound_at_len_6() {
    let started = std::time::Instant::now();
    assert_eq!(two_type_bound_check(6).unwrap(), None);
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 60, "budget exceeded: {elapsed:?}");
    println!("PASS criterion 5: two-type bound holds at max_len=6 in {elapsed:?}");
}

/// Criterion 6: a fully verified depth-3, branching-3 witness tree with
/// 1 + 3 + 9 + 27 = 40 nodes; sibling tuples differ in the last coordinate.
#[test]
fn criterion_6_witness_tree_depth_3_branching_3() {
    let tree = witness_tree(3, 3).unwrap();
    assert_eq!(tree.node_count, 40);
    assert_eq!(count_nodes(&tree.root), 40);
    assert!(tree.verify(), "every conjunct re-verifies against the oracle");
    assert_sibling_tuples_distinct(&tree.root);
    println!("PASS criterion 6: 40-node witness tree fully verified");
}

fn count_nodes(node: &recog::phitypes::WitnessNode) -> usize {
    1 + node.children.iter().map(count_nodes).sum::<usize>()
}

fn assert_sibling_tuples_distinct(node: &recog::phitypes::WitnessNode) {
    let last_coords: Vec<usize> = node
        .children
        .iter()
        .map(|c| *c.sigma.last().expect("children extend the parent tuple"))
        .collect();
    for (i, a) in last_coords.iter().enumerate() {
        for b in &last_coords[i + 1..] {
            assert_ne!(a, b, "sibling tuples must differ in the last coordinate");
        }
    }
    for child in &node.children {
        assert_sibling_tuples_distinct(child);
    }
}

/// Criterion 7: a complete 6x6 certificate for the words 0^1..0^6 against the
/// triple language, suffix bound 14; the entry for a pair is 1^a 2^a with a
/// the smaller exponent, and every entry verifies.
#[test]
fn criterion_7_triple_block_certificate() {
    let h = LanguageHandle::from_oracle(MembershipOracle::triple());
    let alphabet = h.alphabet().clone();
    let members: Vec<Word> = (1..=6)
        .map(|a| Word::parse(&"0".repeat(a), &alphabet).unwrap())
        .collect();
    let cert = separation_certificate(&h, &members, 14).unwrap();
    assert_eq!(cert.k(), 6);
    assert!(cert.is_complete());
    assert!(cert.verify(&h).unwrap());
    for i in 0..6 {
        for j in (i + 1)..6 {
            let a = (i + 1).min(j + 1);
            let expected = format!("{}{}", "1".repeat(a), "2".repeat(a));
            assert_eq!(
                cert.entry(i, j).unwrap().to_string(),
                expected,
                "pair (0^{}, 0^{})",
                i + 1,
                j + 1
            );
        }
    }
    println!("PASS criterion 7: complete 6x6 certificate with 1^a 2^a entries, all verified");
}

/// Criterion 8: rebuilding each corpus language from its syntactic monoid
/// recognizer gives back the same language, with zero counterexamples.
#[test]
fn criterion_8_monoid_recognizer_roundtrip() {
    for (i, item) in corpus().iter().enumerate() {
        let monoid = transition_monoid(&item.dfa).unwrap();
        let rebuilt = recognizer_to_dfa(&monoid.to_recognizer());
        assert!(
            rebuilt.equivalent(&item.dfa).unwrap().is_none(),
            "item {i}: recognizer round trip changed the language"
        );
    }
    println!("PASS criterion 8: recognizer round trip exact on 200 expressions");
}

/// Criterion 9: Hopcroft and the naive Moore oracle agree in state count and
/// language across the corpus (checked on a redundant, non-minimal variant
/// of each automaton).
#[test]
fn criterion_9_hopcroft_agrees_with_moore() {
    for (i, item) in corpus().iter().enumerate() {
        let redundant = inflate(&item.dfa);
        assert!(redundant.state_count() > item.dfa.state_count());
        let hopcroft = redundant.minimize();
        let moore = redundant.minimize_moore();
        assert_eq!(hopcroft.state_count(), moore.state_count(), "item {i}");
        assert!(hopcroft.equivalent(&moore).unwrap().is_none(), "item {i}");
        assert_eq!(hopcroft, moore, "item {i}: canonical forms must coincide");
        assert!(hopcroft.equivalent(&item.dfa).unwrap().is_none(), "item {i}");
    }
    println!("PASS criterion 9: Hopcroft and Moore agree on 200 inflated corpus automata");
}

/// Doubles every state (both copies equivalent) to give the minimizers
/// something to do.
fn inflate(d: &recog::Dfa) -> recog::Dfa {
    let k = d.alphabet().len();
    let mut delta = Vec::new();
    let mut accept = Vec::new();
    for q in 0..d.state_count() {
        for copy in 0..2 {
            let row: Vec<usize> = (0..k)
                .map(|a| 2 * d.next(q, a as u8) + (q + copy + a) % 2)
                .collect();
            delta.push(row);
            accept.push(d.is_accept(q));
        }
    }
    recog::Dfa::new(d.alphabet().clone(), 2 * d.start(), accept, delta).unwrap()
}
