//! Executable recognizability analysis for formal languages.
//!
//! The crate answers, constructively, the questions that tie a language to
//! its algebraic invariants:
//!
//! * how many right-congruence classes does it have (the state complexity,
//!   computed from the minimal complete automaton);
//! * how large is its syntactic monoid (the transformation monoid of that
//!   automaton);
//! * is it star-free (aperiodicity of the syntactic monoid);
//! * and, for languages given only by a membership predicate, what finite
//!   evidence separates it from every regular language — pairwise separation
//!   certificates and rank witness trees.
//!
//! Entry points: [`regex::parse_regex`] and [`automata::compile`] go from
//! syntax to minimal automata; [`algebra::transition_monoid`] builds the
//! syntactic monoid; [`phitypes::theta_classes`] and [`phitypes::rank_report`]
//! produce the class-space analyses; [`oracles::MembershipOracle`] hosts the
//! built-in non-regular languages.

pub mod alphabet;
pub mod algebra;
pub mod automata;
pub mod corpus;
pub mod error;
pub mod oracles;
pub mod phitypes;
pub mod regex;

pub use alphabet::{count_words_up_to, words_up_to, Alphabet, Word};
pub use algebra::{
    recognizer_to_dfa, transition_monoid, FiniteMonoid, MonoidHom, Recognizer, SyntacticMonoid,
};
pub use automata::{compile, BoolOp, Dfa, Nfa};
pub use error::{Error, Result};
pub use oracles::MembershipOracle;
pub use phitypes::{
    rank_report, separation_certificate, theta_classes, two_type_bound_check, witness_tree,
    LanguageHandle, PhiTypeIndex, RankReport, SeparationCertificate, WitnessTree,
};
pub use regex::{parse_regex, print_regex, ExtRegex};
