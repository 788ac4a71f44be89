//! Lowering of extended regular expressions to automata.
//!
//! The regular operators (union, concatenation, star) use the classic
//! ε-NFA combinators. Complement and intersection are not NFA-friendly, so
//! those nodes determinize their operands, apply the boolean operation on
//! DFAs, and feed the result back in as an NFA. Intermediate DFAs are
//! minimized to keep complement-heavy expressions from blowing up.

use crate::alphabet::Alphabet;
use crate::automata::nfa::{dfa_to_nfa, Nfa, NfaState};
use crate::automata::subset::determinize;
use crate::automata::{BoolOp, Dfa};
use crate::error::{Error, Result};
use crate::regex::ExtRegex;

/// Compiles an expression to its minimal complete DFA, with the default
/// intermediate state bound.
pub fn compile(e: &ExtRegex, alphabet: &Alphabet) -> Result<Dfa> {
    compile_bounded(e, alphabet, DEFAULT_STATE_LIMIT)
}

/// Default bound on intermediate automaton sizes during compilation.
pub const DEFAULT_STATE_LIMIT: usize = 1_000_000;

/// Compiles with an explicit bound on intermediate automaton sizes.
pub fn compile_bounded(e: &ExtRegex, alphabet: &Alphabet, state_limit: usize) -> Result<Dfa> {
    for c in e.literals() {
        if !alphabet.contains(c) {
            return Err(Error::UnknownSymbol { symbol: c });
        }
    }
    let nfa = lower(e, alphabet, state_limit)?;
    let dfa = determinize(&nfa, state_limit)?;
    Ok(dfa.minimize())
}

fn lower(e: &ExtRegex, alphabet: &Alphabet, limit: usize) -> Result<Nfa> {
    let mut b = Builder::new(alphabet.clone(), limit);
    let frag = b.build(e)?;
    let mut accept = vec![false; b.states.len()];
    accept[frag.accept] = true;
    Ok(Nfa {
        alphabet: b.alphabet,
        states: b.states,
        start: frag.start,
        accept,
    })
}

struct Fragment {
    start: usize,
    accept: usize,
}

struct Builder {
    alphabet: Alphabet,
    states: Vec<NfaState>,
    limit: usize,
}

impl Builder {
    fn new(alphabet: Alphabet, limit: usize) -> Self {
        Builder {
            alphabet,
            states: Vec::new(),
            limit,
        }
    }

    fn fresh(&mut self) -> Result<usize> {
        if self.states.len() >= self.limit {
            return Err(Error::StateLimit { limit: self.limit });
        }
        self.states.push(NfaState::new(self.alphabet.len()));
        Ok(self.states.len() - 1)
    }

    fn eps(&mut self, from: usize, to: usize) {
        self.states[from].eps.push(to);
    }

    fn build(&mut self, e: &ExtRegex) -> Result<Fragment> {
        match e {
            ExtRegex::EmptyLang => {
                let start = self.fresh()?;
                let accept = self.fresh()?;
                Ok(Fragment { start, accept })
            }
            ExtRegex::Epsilon => {
                let start = self.fresh()?;
                let accept = self.fresh()?;
                self.eps(start, accept);
                Ok(Fragment { start, accept })
            }
            ExtRegex::Lit(c) => {
                let start = self.fresh()?;
                let accept = self.fresh()?;
                let a = self
                    .alphabet
                    .index_of(*c)
                    .ok_or(Error::UnknownSymbol { symbol: *c })?;
                self.states[start].on[a as usize].push(accept);
                Ok(Fragment { start, accept })
            }
            ExtRegex::Union(l, r) => {
                let lf = self.build(l)?;
                let rf = self.build(r)?;
                let start = self.fresh()?;
                let accept = self.fresh()?;
                self.eps(start, lf.start);
                self.eps(start, rf.start);
                self.eps(lf.accept, accept);
                self.eps(rf.accept, accept);
                Ok(Fragment { start, accept })
            }
            ExtRegex::Concat(l, r) => {
                let lf = self.build(l)?;
                let rf = self.build(r)?;
                self.eps(lf.accept, rf.start);
                Ok(Fragment {
                    start: lf.start,
                    accept: rf.accept,
                })
            }
            ExtRegex::Star(inner) => {
                let f = self.build(inner)?;
                let start = self.fresh()?;
                let accept = self.fresh()?;
                self.eps(start, f.start);
                self.eps(start, accept);
                self.eps(f.accept, f.start);
                self.eps(f.accept, accept);
                Ok(Fragment { start, accept })
            }
            ExtRegex::Complement(inner) => {
                let d = self.determinize_subexpr(inner)?;
                self.splice(d.complement())
            }
            ExtRegex::Intersect(l, r) => {
                let dl = self.determinize_subexpr(l)?;
                let dr = self.determinize_subexpr(r)?;
                let d = dl.product(&dr, BoolOp::And)?.minimize();
                self.splice(d)
            }
        }
    }

    /// Determinizes a subexpression in isolation.
    fn determinize_subexpr(&mut self, e: &ExtRegex) -> Result<Dfa> {
        let nfa = lower(e, &self.alphabet, self.limit)?;
        Ok(determinize(&nfa, self.limit)?.minimize())
    }

    /// Copies a DFA into the builder as an NFA fragment. The DFA has no
    /// single accepting state, so a fresh accept node collects them by
    /// ε-moves.
    fn splice(&mut self, d: Dfa) -> Result<Fragment> {
        let base = self.states.len();
        let nfa = dfa_to_nfa(&d);
        for state in nfa.states {
            if self.states.len() >= self.limit {
                return Err(Error::StateLimit { limit: self.limit });
            }
            self.states.push(NfaState {
                eps: state.eps.iter().map(|&t| t + base).collect(),
                on: state
                    .on
                    .iter()
                    .map(|succ| succ.iter().map(|&t| t + base).collect())
                    .collect(),
            });
        }
        let accept = self.fresh()?;
        for (q, &acc) in nfa.accept.iter().enumerate() {
            if acc {
                self.eps(base + q, accept);
            }
        }
        Ok(Fragment {
            start: base + nfa.start,
            accept,
        })
    }
}
