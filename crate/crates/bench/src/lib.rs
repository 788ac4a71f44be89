//! Input builders shared by the kernel benchmarks.

use recog::alphabet::Alphabet;
use recog::automata::Dfa;

/// Complete binary DFA on 2^k states that tracks the last k symbols read;
/// accepting when the oldest tracked symbol is 0. Minimal for its language,
/// exponential in k, and a classic stress shape for partition refinement.
pub fn sliding_window_dfa(k: u32) -> Dfa {
    let n = 1usize << k;
    let mask = n - 1;
    let alphabet = Alphabet::parse("01").unwrap();
    let delta = (0..n)
        .map(|s| (0..2).map(|a| (s << 1 | a) & mask).collect())
        .collect();
    let accept = (0..n).map(|s| s >> (k - 1) & 1 == 0).collect();
    Dfa::new(alphabet, 0, accept, delta).unwrap()
}

/// Doubles every state into two equivalent copies, giving minimizers real
/// merging work while keeping the language fixed.
pub fn inflate(d: &Dfa) -> Dfa {
    let k = d.alphabet().len();
    let mut delta = Vec::with_capacity(2 * d.state_count());
    let mut accept = Vec::with_capacity(2 * d.state_count());
    for q in 0..d.state_count() {
        for copy in 0..2 {
            let row = (0..k)
                .map(|a| 2 * d.next(q, a as u8) + (q + copy + a) % 2)
                .collect();
            delta.push(row);
            accept.push(d.is_accept(q));
        }
    }
    Dfa::new(d.alphabet().clone(), 2 * d.start(), accept, delta).unwrap()
}
