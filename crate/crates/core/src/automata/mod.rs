//! Deterministic and nondeterministic finite automata.
//!
//! All DFAs in this crate are complete: the transition function is total,
//! with explicit sink states where needed. Completeness matters because the
//! right-congruence classes of a language correspond to the states of the
//! complete minimal automaton, dead class included. Minimized automata are
//! numbered canonically (breadth-first from the start state, symbols in
//! alphabet order), which makes every serialized output byte-reproducible.

mod minimize;
mod nfa;
mod subset;
mod thompson;

pub use nfa::Nfa;
pub use thompson::{compile, compile_bounded, DEFAULT_STATE_LIMIT};

use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};

type StatePair = (usize, usize);

/// A complete deterministic finite automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    start: usize,
    accept: Vec<bool>,
    /// delta[q][a] = successor of q on the a-th alphabet symbol.
    delta: Vec<Vec<usize>>,
}

/// Boolean combination applied by [`Dfa::product`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOp {
    And,
    Or,
    Xor,
    Diff,
}

impl BoolOp {
    fn apply(self, a: bool, b: bool) -> bool {
        match self {
            BoolOp::And => a && b,
            BoolOp::Or => a || b,
            BoolOp::Xor => a ^ b,
            BoolOp::Diff => a && !b,
        }
    }
}

impl Dfa {
    /// Builds a DFA, validating completeness and state-id bounds.
    pub fn new(
        alphabet: Alphabet,
        start: usize,
        accept: Vec<bool>,
        delta: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = delta.len();
        if n == 0 {
            return Err(Error::InvalidDfa("a DFA needs at least one state".into()));
        }
        if accept.len() != n {
            return Err(Error::InvalidDfa(format!(
                "accept vector has length {} for {} states",
                accept.len(),
                n
            )));
        }
        if start >= n {
            return Err(Error::InvalidDfa(format!("start state {start} out of range")));
        }
        for (q, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::InvalidDfa(format!(
                    "state {q} has {} transitions for {} symbols",
                    row.len(),
                    alphabet.len()
                )));
            }
            for (a, &t) in row.iter().enumerate() {
                if t >= n {
                    return Err(Error::InvalidDfa(format!(
                        "transition {q} --{}--> {t} out of range",
                        alphabet.symbol(a)
                    )));
                }
            }
        }
        Ok(Dfa {
            alphabet,
            start,
            accept,
            delta,
        })
    }

    /// Internal constructor for automata whose shape is correct by
    /// construction.
    pub(crate) fn new_unchecked(
        alphabet: Alphabet,
        start: usize,
        accept: Vec<bool>,
        delta: Vec<Vec<usize>>,
    ) -> Self {
        debug_assert!(delta.iter().all(|row| row.len() == alphabet.len()));
        Dfa {
            alphabet,
            start,
            accept,
            delta,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accept(&self, q: usize) -> bool {
        self.accept[q]
    }

    pub fn accept_states(&self) -> Vec<usize> {
        (0..self.state_count()).filter(|&q| self.accept[q]).collect()
    }

    pub fn next(&self, q: usize, a: u8) -> usize {
        self.delta[q][a as usize]
    }

    /// Runs a word from a given state.
    pub(crate) fn step_indices(&self, from: usize, indices: &[u8]) -> usize {
        indices.iter().fold(from, |q, &a| self.next(q, a))
    }

    /// Membership: does the automaton accept `w`? Words over a different
    /// alphabet are translated symbol-by-symbol; a symbol outside this
    /// automaton's alphabet is an error.
    pub fn run(&self, w: &Word) -> Result<bool> {
        let q = if w.alphabet() == &self.alphabet {
            self.step_indices(self.start, w.indices())
        } else {
            let mut q = self.start;
            for c in w.chars() {
                let a = self
                    .alphabet
                    .index_of(c)
                    .ok_or(Error::UnknownSymbol { symbol: c })?;
                q = self.next(q, a);
            }
            q
        };
        Ok(self.accept[q])
    }

    /// Minimal automaton for the same language (Hopcroft refinement,
    /// canonical numbering). Idempotent.
    pub fn minimize(&self) -> Dfa {
        minimize::minimize_hopcroft(self)
    }

    /// Reference minimization by naive Moore refinement. Agrees with
    /// [`Dfa::minimize`] on every input; kept as an independent oracle.
    pub fn minimize_moore(&self) -> Dfa {
        minimize::minimize_moore(self)
    }

    /// Complement: flips exactly the accept set, leaving states and
    /// transitions untouched. Correct because the automaton is complete.
    pub fn complement(&self) -> Dfa {
        Dfa {
            alphabet: self.alphabet.clone(),
            start: self.start,
            accept: self.accept.iter().map(|&b| !b).collect(),
            delta: self.delta.clone(),
        }
    }

    /// Product construction over the reachable pairs, acceptance combined by
    /// `op`. Operands must share an alphabet.
    pub fn product(&self, other: &Dfa, op: BoolOp) -> Result<Dfa> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let k = self.alphabet.len();
        let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let start = (self.start, other.start);
        ids.insert(start, 0);
        pairs.push(start);
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            i += 1;
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let t = (self.next(p, a as u8), other.next(q, a as u8));
                let id = *ids.entry(t).or_insert_with(|| {
                    pairs.push(t);
                    pairs.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
        }
        let accept = pairs
            .iter()
            .map(|&(p, q)| op.apply(self.accept[p], other.accept[q]))
            .collect();
        Ok(Dfa {
            alphabet: self.alphabet.clone(),
            start: 0,
            accept,
            delta,
        })
    }

    /// Language equivalence. Returns `None` when the languages agree, and
    /// otherwise the shortest distinguishing word (ties broken by alphabet
    /// order).
    pub fn equivalent(&self, other: &Dfa) -> Result<Option<Word>> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let k = self.alphabet.len();
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        // Parent links (predecessor slot, symbol) reconstruct the witness.
        let mut trail: Vec<(usize, u8)> = Vec::new();
        let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
        let start = (self.start, other.start);
        seen.insert(start, 0);
        trail.push((usize::MAX, 0));
        queue.push_back(start);
        let mut slot = 0;
        while let Some((p, q)) = queue.pop_front() {
            let here = slot;
            slot += 1;
            if self.accept[p] != other.accept[q] {
                let mut rev = Vec::new();
                let mut at = here;
                while trail[at].0 != usize::MAX {
                    rev.push(trail[at].1);
                    at = trail[at].0;
                }
                rev.reverse();
                return Ok(Some(Word::from_indices(&self.alphabet, rev)));
            }
            for a in 0..k {
                let t = (self.next(p, a as u8), other.next(q, a as u8));
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(t) {
                    e.insert(trail.len());
                    trail.push((here, a as u8));
                    queue.push_back(t);
                }
            }
        }
        Ok(None)
    }

    /// Shortest word reaching each state (length-lex least), breadth-first
    /// from the start state. States unreachable from the start get no entry;
    /// minimized automata have none.
    pub fn state_samples(&self) -> Vec<Option<Word>> {
        let k = self.alphabet.len();
        let n = self.state_count();
        let mut sample: Vec<Option<Word>> = vec![None; n];
        sample[self.start] = Some(Word::epsilon(&self.alphabet));
        let mut queue = VecDeque::from([self.start]);
        while let Some(q) = queue.pop_front() {
            for a in 0..k {
                let t = self.next(q, a as u8);
                if sample[t].is_none() {
                    let mut w = sample[q].clone().unwrap();
                    w.push(a as u8);
                    sample[t] = Some(w);
                    queue.push_back(t);
                }
            }
        }
        sample
    }

    /// For every pair of states, a shortest word on which exactly one of the
    /// two runs accepts, when one exists. Computed by one backward
    /// breadth-first pass over the pair graph.
    pub(crate) fn pair_distinguishers(&self) -> HashMap<StatePair, Word> {
        let n = self.state_count();
        let k = self.alphabet.len();
        // link[(p,q)] = (symbol, successor pair) on the shortest
        // distinguishing word; acceptance-differing pairs terminate with ε.
        let mut link: HashMap<StatePair, Option<(u8, StatePair)>> = HashMap::new();
        let mut queue: VecDeque<StatePair> = VecDeque::new();
        for p in 0..n {
            for q in 0..n {
                if self.accept[p] != self.accept[q] {
                    link.insert((p, q), None);
                    queue.push_back((p, q));
                }
            }
        }
        // Reverse edges of the pair graph.
        let mut rev: HashMap<StatePair, Vec<(u8, StatePair)>> = HashMap::new();
        for p in 0..n {
            for q in 0..n {
                for a in 0..k {
                    let t = (self.next(p, a as u8), self.next(q, a as u8));
                    rev.entry(t).or_default().push((a as u8, (p, q)));
                }
            }
        }
        while let Some(pair) = queue.pop_front() {
            if let Some(preds) = rev.get(&pair) {
                for &(a, pred) in preds {
                    if let std::collections::hash_map::Entry::Vacant(e) = link.entry(pred) {
                        e.insert(Some((a, pair)));
                        queue.push_back(pred);
                    }
                }
            }
        }
        let mut out = HashMap::new();
        for &pair in link.keys() {
            let mut indices = Vec::new();
            let mut at = pair;
            while let Some((a, next)) = link[&at] {
                indices.push(a);
                at = next;
            }
            out.insert(pair, Word::from_indices(&self.alphabet, indices));
        }
        out
    }

    /// JSON form per the external interface:
    /// `{"alphabet": [...], "states": n, "start": s, "accept": [...], "delta": [[...]]}`.
    pub fn to_json(&self) -> String {
        let doc = DfaJson {
            alphabet: self.alphabet.symbols().iter().map(|c| c.to_string()).collect(),
            states: self.state_count(),
            start: self.start,
            accept: self.accept_states(),
            delta: self.delta.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("DFA serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Dfa> {
        let doc: DfaJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidDfa(e.to_string()))?;
        let mut symbols = Vec::with_capacity(doc.alphabet.len());
        for entry in &doc.alphabet {
            let mut chars = entry.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => symbols.push(c),
                _ => {
                    return Err(Error::InvalidDfa(format!(
                        "alphabet entry {entry:?} is not a single character"
                    )))
                }
            }
        }
        let alphabet = Alphabet::new(symbols)?;
        if doc.delta.len() != doc.states {
            return Err(Error::InvalidDfa(format!(
                "delta has {} rows for {} states",
                doc.delta.len(),
                doc.states
            )));
        }
        let mut accept = vec![false; doc.states];
        for q in doc.accept {
            if q >= doc.states {
                return Err(Error::InvalidDfa(format!("accept state {q} out of range")));
            }
            accept[q] = true;
        }
        Dfa::new(alphabet, doc.start, accept, doc.delta)
    }

    /// GraphViz DOT export: doublecircle accept nodes, labeled edges, and a
    /// start arrow from a point node. Edges with the same endpoints merge
    /// their symbol labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph dfa {\n  rankdir=LR;\n");
        out.push_str("  __start [shape=point, label=\"\"];\n");
        let _ = writeln!(out, "  __start -> q{};", self.start);
        for q in 0..self.state_count() {
            let shape = if self.accept[q] { "doublecircle" } else { "circle" };
            let _ = writeln!(out, "  q{q} [shape={shape}, label=\"q{q}\"];");
        }
        for q in 0..self.state_count() {
            let mut by_target: Vec<(usize, Vec<char>)> = Vec::new();
            for a in 0..self.alphabet.len() {
                let t = self.next(q, a as u8);
                match by_target.iter_mut().find(|(tt, _)| *tt == t) {
                    Some((_, syms)) => syms.push(self.alphabet.symbol(a)),
                    None => by_target.push((t, vec![self.alphabet.symbol(a)])),
                }
            }
            for (t, syms) in by_target {
                let label: String = syms
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                let _ = writeln!(out, "  q{q} -> q{t} [label=\"{label}\"];");
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct DfaJson {
    alphabet: Vec<String>,
    states: usize,
    start: usize,
    accept: Vec<usize>,
    delta: Vec<Vec<usize>>,
}
