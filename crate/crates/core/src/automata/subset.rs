//! Subset construction: NFA determinization.

use std::collections::HashMap;

use crate::automata::nfa::Nfa;
use crate::automata::Dfa;
use crate::error::{Error, Result};

/// Determinizes an NFA into a complete DFA. Subset states are discovered
/// breadth-first with symbols in alphabet order, so the numbering is
/// reproducible. The empty subset acts as the explicit sink, which keeps the
/// result total.
pub(crate) fn determinize(nfa: &Nfa, state_limit: usize) -> Result<Dfa> {
    let k = nfa.alphabet.len();
    let start_set = nfa.closure(&[nfa.start]);

    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    let mut delta: Vec<Vec<usize>> = Vec::new();

    ids.insert(start_set.clone(), 0);
    subsets.push(start_set);

    let mut next = 0;
    while next < subsets.len() {
        let current = subsets[next].clone();
        let mut row = Vec::with_capacity(k);
        for a in 0..k {
            let mut moved: Vec<usize> = Vec::new();
            for &q in &current {
                moved.extend_from_slice(&nfa.states[q].on[a]);
            }
            moved.sort_unstable();
            moved.dedup();
            let target = nfa.closure(&moved);
            let id = match ids.get(&target) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    if id >= state_limit {
                        return Err(Error::StateLimit { limit: state_limit });
                    }
                    ids.insert(target.clone(), id);
                    subsets.push(target);
                    id
                }
            };
            row.push(id);
        }
        delta.push(row);
        next += 1;
    }

    let accept = subsets
        .iter()
        .map(|set| set.iter().any(|&q| nfa.accept[q]))
        .collect();
    Dfa::new(nfa.alphabet.clone(), 0, accept, delta)
}
