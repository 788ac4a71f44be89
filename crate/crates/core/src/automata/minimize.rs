//! DFA minimization.
//!
//! The primary path is Hopcroft partition refinement. A naive Moore
//! refinement lives alongside it as an independent reference; the two must
//! agree on every input, which the test suite exercises heavily. Both paths
//! first restrict to reachable states and finish with the same canonical
//! renumbering, so equal languages yield structurally equal automata.

use std::collections::HashMap;

use crate::automata::Dfa;

/// Hopcroft partition refinement.
pub(crate) fn minimize_hopcroft(d: &Dfa) -> Dfa {
    let d = restrict_to_reachable(d);
    let n = d.state_count();
    let k = d.alphabet().len();

    // Preimage lists: pre[a][q] = states mapping to q on symbol a.
    let mut pre = vec![vec![Vec::new(); n]; k];
    for q in 0..n {
        for (a, pre_a) in pre.iter_mut().enumerate() {
            pre_a[d.next(q, a as u8)].push(q);
        }
    }

    // Blocks are append-only; `block_of` tracks the live assignment.
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = vec![0usize; n];
    let accepting: Vec<usize> = (0..n).filter(|&q| d.is_accept(q)).collect();
    let rejecting: Vec<usize> = (0..n).filter(|&q| !d.is_accept(q)).collect();
    for group in [accepting, rejecting] {
        if !group.is_empty() {
            let id = blocks.len();
            for &q in &group {
                block_of[q] = id;
            }
            blocks.push(group);
        }
    }

    let mut worklist: Vec<usize> = (0..blocks.len()).collect();
    let mut in_worklist = vec![true; blocks.len()];

    let mut mark = vec![false; n];
    while let Some(splitter) = worklist.pop() {
        in_worklist[splitter] = false;
        let splitter_members = blocks[splitter].clone();
        for pre_a in &pre {
            // X = δ⁻¹(splitter) on the symbol behind pre_a.
            let mut marked: Vec<usize> = Vec::new();
            let mut touched: Vec<usize> = Vec::new();
            for &q in &splitter_members {
                for &p in &pre_a[q] {
                    if !mark[p] {
                        mark[p] = true;
                        marked.push(p);
                        let b = block_of[p];
                        if !touched.contains(&b) {
                            touched.push(b);
                        }
                    }
                }
            }
            for &b in &touched {
                let (inside, outside): (Vec<usize>, Vec<usize>) =
                    blocks[b].iter().partition(|&&q| mark[q]);
                if inside.is_empty() || outside.is_empty() {
                    continue;
                }
                // Keep id b for the inside part, mint a new id for the rest.
                let new_id = blocks.len();
                for &q in &outside {
                    block_of[q] = new_id;
                }
                blocks[b] = inside;
                blocks.push(outside);
                in_worklist.push(false);
                if in_worklist[b] {
                    worklist.push(new_id);
                    in_worklist[new_id] = true;
                } else {
                    // Only the smaller half needs reprocessing.
                    let smaller = if blocks[b].len() <= blocks[new_id].len() {
                        b
                    } else {
                        new_id
                    };
                    worklist.push(smaller);
                    in_worklist[smaller] = true;
                }
            }
            for &p in &marked {
                mark[p] = false;
            }
        }
    }

    quotient(&d, &block_of)
}

/// Naive Moore refinement: repeatedly split blocks by the block vector of
/// their successors until stable. Quadratic, kept as the reference
/// implementation against which Hopcroft is validated.
pub(crate) fn minimize_moore(d: &Dfa) -> Dfa {
    let d = restrict_to_reachable(d);
    let n = d.state_count();
    let k = d.alphabet().len();

    let mut block_of: Vec<usize> = (0..n).map(|q| usize::from(d.is_accept(q))).collect();
    let mut block_count = block_of.iter().max().map(|m| m + 1).unwrap_or(1);

    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next_assignment = Vec::with_capacity(n);
        for q in 0..n {
            let mut key = Vec::with_capacity(k + 1);
            key.push(block_of[q]);
            for a in 0..k {
                key.push(block_of[d.next(q, a as u8)]);
            }
            let fresh = ids.len();
            let id = *ids.entry(key).or_insert(fresh);
            next_assignment.push(id);
        }
        let next_count = ids.len();
        if next_count == block_count {
            break;
        }
        block_of = next_assignment;
        block_count = next_count;
    }

    quotient(&d, &block_of)
}

fn restrict_to_reachable(d: &Dfa) -> Dfa {
    let n = d.state_count();
    let k = d.alphabet().len();
    let mut seen = vec![false; n];
    let mut order = vec![d.start()];
    seen[d.start()] = true;
    let mut i = 0;
    while i < order.len() {
        let q = order[i];
        i += 1;
        for a in 0..k {
            let t = d.next(q, a as u8);
            if !seen[t] {
                seen[t] = true;
                order.push(t);
            }
        }
    }
    if order.len() == n {
        return d.clone();
    }
    let mut renumber = vec![usize::MAX; n];
    for (new, &old) in order.iter().enumerate() {
        renumber[old] = new;
    }
    let delta = order
        .iter()
        .map(|&old| (0..k).map(|a| renumber[d.next(old, a as u8)]).collect())
        .collect();
    let accept = order.iter().map(|&old| d.is_accept(old)).collect();
    Dfa::new_unchecked(d.alphabet().clone(), renumber[d.start()], accept, delta)
}

/// Collapses a partition into the quotient automaton and renumbers it
/// canonically: breadth-first from the start state, symbols in alphabet
/// order.
fn quotient(d: &Dfa, block_of: &[usize]) -> Dfa {
    let k = d.alphabet().len();
    let block_count = block_of.iter().max().map(|m| m + 1).unwrap_or(1);

    // One representative per block suffices: members agree on transitions up
    // to block identity by construction.
    let mut rep = vec![usize::MAX; block_count];
    for (q, &b) in block_of.iter().enumerate() {
        if rep[b] == usize::MAX {
            rep[b] = q;
        }
    }

    let start_block = block_of[d.start()];
    let mut order = vec![start_block];
    let mut number = vec![usize::MAX; block_count];
    number[start_block] = 0;
    let mut i = 0;
    while i < order.len() {
        let b = order[i];
        i += 1;
        for a in 0..k {
            let t = block_of[d.next(rep[b], a as u8)];
            if number[t] == usize::MAX {
                number[t] = order.len();
                order.push(t);
            }
        }
    }

    let delta = order
        .iter()
        .map(|&b| {
            (0..k)
                .map(|a| number[block_of[d.next(rep[b], a as u8)]])
                .collect()
        })
        .collect();
    let accept = order.iter().map(|&b| d.is_accept(rep[b])).collect();
    Dfa::new_unchecked(d.alphabet().clone(), 0, accept, delta)
}
