//! Nondeterministic finite automata with ε-moves.

use crate::alphabet::Alphabet;
use crate::automata::Dfa;

/// A nondeterministic automaton over an alphabet, with ε-transitions, a
/// single start state and a set of accepting states.
#[derive(Debug, Clone)]
pub struct Nfa {
    pub(crate) alphabet: Alphabet,
    pub(crate) states: Vec<NfaState>,
    pub(crate) start: usize,
    pub(crate) accept: Vec<bool>,
}

#[derive(Debug, Clone)]
pub(crate) struct NfaState {
    pub(crate) eps: Vec<usize>,
    /// Successors per symbol index.
    pub(crate) on: Vec<Vec<usize>>,
}

impl NfaState {
    pub(crate) fn new(symbol_count: usize) -> Self {
        NfaState {
            eps: Vec::new(),
            on: vec![Vec::new(); symbol_count],
        }
    }
}

impl Nfa {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn accept_states(&self) -> Vec<usize> {
        self.accept
            .iter()
            .enumerate()
            .filter_map(|(q, &a)| a.then_some(q))
            .collect()
    }

    /// Successors of `q` on the given symbol index.
    pub fn transitions(&self, q: usize, symbol: u8) -> &[usize] {
        &self.states[q].on[symbol as usize]
    }

    /// ε-successors of `q`.
    pub fn eps_transitions(&self, q: usize) -> &[usize] {
        &self.states[q].eps
    }

    /// ε-closure of a state set, returned sorted.
    pub(crate) fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.states.len()];
        let mut stack: Vec<usize> = Vec::new();
        for &q in seed {
            if !in_set[q] {
                in_set[q] = true;
                stack.push(q);
            }
        }
        while let Some(q) = stack.pop() {
            for &t in &self.states[q].eps {
                if !in_set[t] {
                    in_set[t] = true;
                    stack.push(t);
                }
            }
        }
        in_set
            .iter()
            .enumerate()
            .filter_map(|(q, &b)| b.then_some(q))
            .collect()
    }
}

/// Views a DFA as an NFA, for feeding determinized fragments back into
/// automaton composition.
pub(crate) fn dfa_to_nfa(d: &Dfa) -> Nfa {
    let k = d.alphabet().len();
    let mut states = Vec::with_capacity(d.state_count());
    for q in 0..d.state_count() {
        let mut s = NfaState::new(k);
        for (a, succ) in s.on.iter_mut().enumerate() {
            succ.push(d.next(q, a as u8));
        }
        states.push(s);
    }
    Nfa {
        alphabet: d.alphabet().clone(),
        states,
        start: d.start(),
        accept: (0..d.state_count()).map(|q| d.is_accept(q)).collect(),
    }
}
