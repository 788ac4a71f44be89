//! Right-congruence classes, multiplicities, and finite evidence against
//! recognizability.
//!
//! Two words are related by the right congruence of a language A when every
//! suffix extends both into A or neither. For a regular language the classes
//! are exactly the states of the minimal complete automaton, and this module
//! computes them that way. For oracle-backed languages the classes can only
//! be probed: words up to a length bound are partitioned by their membership
//! signature over all suffixes up to the same bound, which yields a lower
//! bound on the true class count. A [`RankReport`] summarizes either case:
//! class count (the state complexity) and two-sided class count (the
//! syntactic monoid size) when the language is recognizable, or a
//! [`SeparationCertificate`] exhibiting pairwise separated words when the
//! probed class system keeps growing.

mod certificate;
mod two_type;
mod witness;

pub use certificate::{separation_certificate, SeparationCertificate};
pub use two_type::two_type_bound_check;
pub use witness::{witness_tree, WitnessNode, WitnessTree};

use std::collections::HashMap;

use serde::Serialize;

use crate::alphabet::{count_words_up_to, enumerate_index_words, Alphabet, Word};
use crate::algebra::{transition_monoid_bounded, DEFAULT_MONOID_LIMIT};
use crate::automata::{compile, Dfa};
use crate::error::{Error, Result};
use crate::oracles::MembershipOracle;
use crate::regex::ExtRegex;

/// Default bound on the number of words enumerated per side (prefixes and
/// suffixes) when probing an oracle-backed language. Signature computation is
/// quadratic in this count, so the default keeps a full probe run at or below
/// roughly 10⁸ membership queries.
pub const DEFAULT_WORD_LIMIT: usize = 10_000;

/// A language given either by an automaton (exact analysis) or by a
/// membership oracle (bounded probing).
#[derive(Debug, Clone)]
pub struct LanguageHandle {
    backing: LanguageBacking,
}

#[derive(Debug, Clone)]
pub enum LanguageBacking {
    Automaton(Dfa),
    Oracle(MembershipOracle),
}

impl LanguageHandle {
    pub fn from_dfa(d: Dfa) -> Self {
        LanguageHandle {
            backing: LanguageBacking::Automaton(d),
        }
    }

    pub fn from_oracle(o: MembershipOracle) -> Self {
        LanguageHandle {
            backing: LanguageBacking::Oracle(o),
        }
    }

    pub fn from_regex(e: &ExtRegex, alphabet: &Alphabet) -> Result<Self> {
        Ok(Self::from_dfa(compile(e, alphabet)?))
    }

    pub fn backing(&self) -> &LanguageBacking {
        &self.backing
    }

    pub fn alphabet(&self) -> &Alphabet {
        match &self.backing {
            LanguageBacking::Automaton(d) => d.alphabet(),
            LanguageBacking::Oracle(o) => o.alphabet(),
        }
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        match &self.backing {
            LanguageBacking::Automaton(d) => d.run(w),
            LanguageBacking::Oracle(o) => o.decide(w),
        }
    }
}

/// A membership bit-vector over an ordered probe suffix set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Signature {
    len: usize,
    bits: Vec<u64>,
}

impl Signature {
    fn with_len(len: usize) -> Self {
        Signature {
            len,
            bits: vec![0; len.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        if value {
            self.bits[i / 64] |= 1 << (i % 64);
        }
    }

    pub fn bit(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Index of the first probe on which the two signatures disagree.
    pub fn first_difference(&self, other: &Signature) -> Option<usize> {
        debug_assert_eq!(self.len, other.len);
        for (block, (a, b)) in self.bits.iter().zip(&other.bits).enumerate() {
            let diff = a ^ b;
            if diff != 0 {
                return Some(block * 64 + diff.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// One right-congruence class: its id, the length-lex least known member, and
/// that member's signature over the probe suffixes.
#[derive(Debug, Clone)]
pub struct PhiTypeClass {
    pub id: usize,
    pub sample: Word,
    pub signature: Signature,
}

/// The realized class space of a language, as far as it is known.
///
/// `complete` is true exactly when the index was computed from a minimal
/// automaton, in which case the class count equals the automaton's state
/// count. Oracle-backed indexes are lower bounds: distinct classes are
/// genuinely distinct, but longer probes may reveal more.
#[derive(Debug, Clone)]
pub struct PhiTypeIndex {
    pub classes: Vec<PhiTypeClass>,
    pub probe_suffixes: Vec<Word>,
    pub complete: bool,
}

impl PhiTypeIndex {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&index_json(self)).expect("index serialization cannot fail")
    }
}

#[derive(Serialize)]
struct ClassJson {
    id: usize,
    sample: Word,
}

#[derive(Serialize)]
struct IndexJson {
    complete: bool,
    count: usize,
    classes: Vec<ClassJson>,
}

fn index_json(index: &PhiTypeIndex) -> IndexJson {
    IndexJson {
        complete: index.complete,
        count: index.class_count(),
        classes: index
            .classes
            .iter()
            .map(|c| ClassJson {
                id: c.id,
                sample: c.sample.clone(),
            })
            .collect(),
    }
}

/// Right-congruence classes of the language behind `h`.
///
/// Automaton-backed: exact, one class per state of the minimal complete
/// automaton (`max_len` is not consulted). Oracle-backed: classes of words of
/// length ≤ `max_len` separated by suffixes of length ≤ `max_len`.
pub fn theta_classes(h: &LanguageHandle, max_len: usize) -> Result<PhiTypeIndex> {
    theta_classes_bounded(h, max_len, DEFAULT_WORD_LIMIT)
}

pub fn theta_classes_bounded(
    h: &LanguageHandle,
    max_len: usize,
    word_limit: usize,
) -> Result<PhiTypeIndex> {
    match &h.backing {
        LanguageBacking::Automaton(d) => Ok(theta_classes_dfa(d)),
        LanguageBacking::Oracle(o) => {
            let partition = theta_partition_oracle(o, max_len, word_limit)?;
            Ok(partition.into_index(o.alphabet()))
        }
    }
}

fn theta_classes_dfa(d: &Dfa) -> PhiTypeIndex {
    let m = d.minimize();
    let samples = m.state_samples();
    // Probe set: a shortest separating word for every state pair, deduplicated
    // and ordered length-lex. Distinct states then get distinct signatures.
    let distinguishers = m.pair_distinguishers();
    let mut probe_set: Vec<Word> = Vec::new();
    for p in 0..m.state_count() {
        for q in (p + 1)..m.state_count() {
            if let Some(w) = distinguishers.get(&(p, q)) {
                if !probe_set.contains(w) {
                    probe_set.push(w.clone());
                }
            }
        }
    }
    probe_set.sort();

    let classes = (0..m.state_count())
        .map(|q| {
            let mut signature = Signature::with_len(probe_set.len());
            for (i, probe) in probe_set.iter().enumerate() {
                signature.set(i, m.is_accept(m.step_indices(q, probe.indices())));
            }
            PhiTypeClass {
                id: q,
                sample: samples[q].clone().expect("minimal automata are reachable"),
                signature,
            }
        })
        .collect();
    PhiTypeIndex {
        classes,
        probe_suffixes: probe_set,
        complete: true,
    }
}

/// Bounded-probe partition of an oracle-backed language. Prefixes and
/// suffixes both range over all words of length ≤ `max_len`; prefixes are
/// grouped by their membership signature over the suffixes.
pub(crate) struct OraclePartition {
    pub(crate) words: Vec<Vec<u8>>,
    pub(crate) class_of: Vec<usize>,
    /// Word index of each class's first (hence length-lex least) member.
    pub(crate) sample_index: Vec<usize>,
    pub(crate) signatures: Vec<Signature>,
}

impl OraclePartition {
    pub(crate) fn class_count(&self) -> usize {
        self.signatures.len()
    }

    fn into_index(self, alphabet: &Alphabet) -> PhiTypeIndex {
        let classes = self
            .sample_index
            .iter()
            .zip(&self.signatures)
            .enumerate()
            .map(|(id, (&wi, signature))| PhiTypeClass {
                id,
                sample: Word::from_indices(alphabet, self.words[wi].clone()),
                signature: signature.clone(),
            })
            .collect();
        PhiTypeIndex {
            classes,
            probe_suffixes: self
                .words
                .iter()
                .map(|w| Word::from_indices(alphabet, w.clone()))
                .collect(),
            complete: false,
        }
    }
}

pub(crate) fn theta_partition_oracle(
    oracle: &MembershipOracle,
    max_len: usize,
    word_limit: usize,
) -> Result<OraclePartition> {
    let k = oracle.alphabet().len();
    let count = count_words_up_to(k, max_len)?;
    if count > word_limit {
        return Err(Error::ProbeLimit { limit: word_limit });
    }
    let words = enumerate_index_words(k, max_len);

    let mut ids: HashMap<Signature, usize> = HashMap::new();
    let mut class_of = Vec::with_capacity(words.len());
    let mut sample_index = Vec::new();
    let mut signatures = Vec::new();
    let mut buf: Vec<u8> = Vec::with_capacity(2 * max_len);

    for (wi, prefix) in words.iter().enumerate() {
        let mut sig = Signature::with_len(words.len());
        for (si, suffix) in words.iter().enumerate() {
            buf.clear();
            buf.extend_from_slice(prefix);
            buf.extend_from_slice(suffix);
            sig.set(si, oracle.decide_indices(&buf));
        }
        let next_id = ids.len();
        let id = *ids.entry(sig.clone()).or_insert(next_id);
        if id == next_id {
            sample_index.push(wi);
            signatures.push(sig);
        }
        class_of.push(id);
    }

    Ok(OraclePartition {
        words,
        class_of,
        sample_index,
        signatures,
    })
}

/// Verdict on recognizability, with multiplicities when the language is (or
/// empirically looks) recognizable and a separation certificate otherwise.
#[derive(Debug, Clone)]
pub struct RankReport {
    /// True when the realized class space is finite. Exact for
    /// automaton-backed handles; for oracle-backed handles this is the
    /// bounded-probe verdict and `empirical` is set.
    pub rank_zero: bool,
    /// True when the verdict rests on bounded enumeration rather than an
    /// automaton.
    pub empirical: bool,
    /// Right-congruence class count (the state complexity); present when
    /// `rank_zero`.
    pub mult_phi: Option<usize>,
    /// Two-sided class count (the syntactic monoid size); present when
    /// `rank_zero`.
    pub mult_phi_prime: Option<usize>,
    pub index: PhiTypeIndex,
    /// Pairwise-separated class samples, present when `rank_zero` is false.
    pub witness: Option<SeparationCertificate>,
}

/// Tuning knobs for [`rank_report_with`].
#[derive(Debug, Clone)]
pub struct RankOptions {
    pub word_limit: usize,
    pub monoid_limit: usize,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions {
            word_limit: DEFAULT_WORD_LIMIT,
            monoid_limit: DEFAULT_MONOID_LIMIT,
        }
    }
}

pub fn rank_report(h: &LanguageHandle, max_len: usize) -> Result<RankReport> {
    rank_report_with(h, max_len, &RankOptions::default())
}

pub fn rank_report_with(
    h: &LanguageHandle,
    max_len: usize,
    options: &RankOptions,
) -> Result<RankReport> {
    match &h.backing {
        LanguageBacking::Automaton(d) => {
            let m = d.minimize();
            let monoid = transition_monoid_bounded(&m, options.monoid_limit)?;
            let index = theta_classes_dfa(&m);
            Ok(RankReport {
                rank_zero: true,
                empirical: false,
                mult_phi: Some(m.state_count()),
                mult_phi_prime: Some(monoid.size()),
                index,
                witness: None,
            })
        }
        LanguageBacking::Oracle(o) => rank_report_oracle(o, max_len, options),
    }
}

fn rank_report_oracle(
    oracle: &MembershipOracle,
    max_len: usize,
    options: &RankOptions,
) -> Result<RankReport> {
    // Reject over-large bounds before any partition work.
    let top_count = count_words_up_to(oracle.alphabet().len(), max_len)?;
    if top_count > options.word_limit {
        return Err(Error::ProbeLimit {
            limit: options.word_limit,
        });
    }
    // Class counts for every probe length up to the bound. Each length is a
    // self-contained partition; the counts are non-decreasing.
    let mut counts = Vec::with_capacity(max_len + 1);
    let mut top: Option<OraclePartition> = None;
    for len in 0..=max_len {
        let partition = theta_partition_oracle(oracle, len, options.word_limit)?;
        counts.push(partition.class_count());
        if len == max_len {
            top = Some(partition);
        }
    }
    let partition = top.expect("loop runs at least once");

    let window = (max_len.div_ceil(2)).max(1);
    let stabilized = counts.len() >= window && {
        let tail = &counts[counts.len() - window..];
        tail.iter().all(|&c| c == tail[0])
    };

    if stabilized {
        if let Some(dfa) = induced_class_automaton(oracle, &partition, max_len) {
            // The finite class system explains every enumerated word, so
            // report it as (empirical) evidence of recognizability.
            let minimal = dfa.minimize();
            let monoid = transition_monoid_bounded(&minimal, options.monoid_limit)?;
            let class_count = partition.class_count();
            return Ok(RankReport {
                rank_zero: true,
                empirical: true,
                mult_phi: Some(class_count),
                mult_phi_prime: Some(monoid.size()),
                index: partition.into_index(oracle.alphabet()),
                witness: None,
            });
        }
    }

    let witness = certificate::from_partition(oracle.alphabet(), &partition);
    Ok(RankReport {
        rank_zero: false,
        empirical: true,
        mult_phi: None,
        mult_phi_prime: None,
        index: partition.into_index(oracle.alphabet()),
        witness: Some(witness),
    })
}

/// Attempts to read the bounded-probe partition as a complete automaton on
/// the classes. Returns `None` when some transition is unknown, two members
/// of a class disagree about a transition, or the automaton contradicts the
/// oracle on an enumerated word.
fn induced_class_automaton(
    oracle: &MembershipOracle,
    partition: &OraclePartition,
    max_len: usize,
) -> Option<Dfa> {
    let k = oracle.alphabet().len();
    let n = partition.class_count();
    let index_of: HashMap<&[u8], usize> = partition
        .words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_slice(), i))
        .collect();

    let mut delta: Vec<Vec<Option<usize>>> = vec![vec![None; k]; n];
    let mut extended: Vec<u8> = Vec::with_capacity(max_len + 1);
    for (wi, w) in partition.words.iter().enumerate() {
        if w.len() >= max_len {
            continue;
        }
        let from = partition.class_of[wi];
        for (a, slot) in delta[from].iter_mut().enumerate() {
            extended.clear();
            extended.extend_from_slice(w);
            extended.push(a as u8);
            let ti = index_of[extended.as_slice()];
            let target = partition.class_of[ti];
            match slot {
                None => *slot = Some(target),
                Some(existing) if *existing != target => return None,
                Some(_) => {}
            }
        }
    }

    let delta: Option<Vec<Vec<usize>>> = delta
        .into_iter()
        .map(|row| row.into_iter().collect())
        .collect();
    let delta = delta?;
    // Suffix ε is probe 0, so bit 0 of a class signature is plain membership.
    let accept: Vec<bool> = partition.signatures.iter().map(|s| s.bit(0)).collect();
    let start = partition.class_of[0];
    let dfa = Dfa::new(oracle.alphabet().clone(), start, accept, delta).ok()?;

    let consistent = partition.words.iter().enumerate().all(|(wi, w)| {
        let run = dfa.is_accept(dfa.step_indices(dfa.start(), w));
        run == partition.signatures[partition.class_of[wi]].bit(0)
    });
    consistent.then_some(dfa)
}

impl RankReport {
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct ReportJson<'a> {
            rank_zero: bool,
            empirical: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            mult_phi: Option<usize>,
            #[serde(skip_serializing_if = "Option::is_none")]
            mult_phi_prime: Option<usize>,
            classes: Vec<ClassJson>,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: Option<&'a SeparationCertificate>,
        }
        let doc = ReportJson {
            rank_zero: self.rank_zero,
            empirical: self.empirical,
            mult_phi: self.mult_phi,
            mult_phi_prime: self.mult_phi_prime,
            classes: index_json(&self.index).classes,
            witness: self.witness.as_ref(),
        };
        serde_json::to_string_pretty(&doc).expect("report serialization cannot fail")
    }
}
