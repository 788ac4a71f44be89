//! Membership oracles: total predicates on words, used to probe languages
//! that no automaton can back.
//!
//! Three built-ins over the alphabet {0,1,2} ship with the crate:
//!
//! * `balanced01` — words of {0,1}* with equally many 0s and 1s;
//! * `triple` — the words 0ⁿ1ⁿ2ⁿ;
//! * `dcfl_seq` — words u2v where u and v encode tuples of naturals as
//!   0-blocks separated by 1s, v is no longer than u, and some component of v
//!   exceeds the mirrored component of u by exactly one.
//!
//! Custom oracles can be built with [`MembershipOracle::new`]; the predicate
//! must be total (terminate on every word).

use std::fmt;
use std::sync::Arc;

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};

type DecideFn = dyn Fn(&[u8]) -> bool + Send + Sync;

/// A named total membership predicate over a fixed alphabet. The predicate
/// receives symbol indices relative to that alphabet. Must be pure and
/// reentrant; clones share the predicate.
#[derive(Clone)]
pub struct MembershipOracle {
    name: String,
    alphabet: Alphabet,
    decide: Arc<DecideFn>,
}

impl fmt::Debug for MembershipOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MembershipOracle")
            .field("name", &self.name)
            .field("alphabet", &self.alphabet)
            .finish_non_exhaustive()
    }
}

impl MembershipOracle {
    pub fn new(
        name: impl Into<String>,
        alphabet: Alphabet,
        decide: impl Fn(&[u8]) -> bool + Send + Sync + 'static,
    ) -> Self {
        MembershipOracle {
            name: name.into(),
            alphabet,
            decide: Arc::new(decide),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub(crate) fn decide_indices(&self, indices: &[u8]) -> bool {
        (self.decide)(indices)
    }

    /// Membership of a word; symbols are translated through this oracle's
    /// alphabet when the word comes from another one.
    pub fn decide(&self, w: &Word) -> Result<bool> {
        if w.alphabet() == &self.alphabet {
            return Ok(self.decide_indices(w.indices()));
        }
        let mut indices = Vec::with_capacity(w.len());
        for c in w.chars() {
            match self.alphabet.index_of(c) {
                Some(i) => indices.push(i),
                None => return Err(Error::UnknownSymbol { symbol: c }),
            }
        }
        Ok(self.decide_indices(&indices))
    }

    fn alphabet012() -> Alphabet {
        Alphabet::parse("012").expect("012 is a valid alphabet")
    }

    /// Words of {0,1}* with n₀(w) = n₁(w), over the alphabet {0,1,2}.
    pub fn balanced01() -> Self {
        MembershipOracle::new("balanced01", Self::alphabet012(), |w| {
            let mut zeros = 0usize;
            let mut ones = 0usize;
            for &c in w {
                match c {
                    0 => zeros += 1,
                    1 => ones += 1,
                    _ => return false,
                }
            }
            zeros == ones
        })
    }

    /// The language { 0ⁿ1ⁿ2ⁿ : n ≥ 0 } over {0,1,2}.
    pub fn triple() -> Self {
        MembershipOracle::new("triple", Self::alphabet012(), |w| {
            let zeros = w.iter().take_while(|&&c| c == 0).count();
            let ones = w[zeros..].iter().take_while(|&&c| c == 1).count();
            let twos = w[zeros + ones..].iter().take_while(|&&c| c == 2).count();
            zeros + ones + twos == w.len() && zeros == ones && ones == twos
        })
    }

    /// Words u2v over {0,1,2} with u, v ∈ {0,1}*: reading u as the tuple
    /// (n_0, …, n_{k-1}) of 0-block lengths and v as (m_0, …, m_{ℓ-1}),
    /// membership requires ℓ ≤ k and m_i = n_{k-i-1} + 1 for some i < ℓ.
    pub fn dcfl_seq() -> Self {
        MembershipOracle::new("dcfl_seq", Self::alphabet012(), |w| {
            let Some(sep) = w.iter().position(|&c| c == 2) else {
                return false;
            };
            let (u, rest) = w.split_at(sep);
            let v = &rest[1..];
            if v.contains(&2) {
                return false;
            }
            let n = zero_blocks(u);
            let m = zero_blocks(v);
            m.len() <= n.len()
                && m.iter()
                    .enumerate()
                    .any(|(i, &mi)| mi == n[n.len() - i - 1] + 1)
        })
    }

    /// Encodes a tuple of naturals as 0-blocks separated by 1s, the word form
    /// consumed by [`MembershipOracle::dcfl_seq`].
    pub fn encode_tuple(tuple: &[usize]) -> Word {
        let alphabet = Self::alphabet012();
        let mut indices = Vec::new();
        for (i, &n) in tuple.iter().enumerate() {
            if i > 0 {
                indices.push(1);
            }
            indices.extend(std::iter::repeat_n(0, n));
        }
        Word::from_indices(&alphabet, indices)
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "balanced01" => Some(Self::balanced01()),
            "triple" => Some(Self::triple()),
            "dcfl_seq" => Some(Self::dcfl_seq()),
            _ => None,
        }
    }

    pub fn builtin_names() -> &'static [&'static str] {
        &["balanced01", "triple", "dcfl_seq"]
    }
}

/// 0-block lengths of a {0,1}-index word: k = (number of 1s) + 1 blocks.
/// Every word has exactly one such reading, the empty word being the
/// single-block tuple (0).
fn zero_blocks(w: &[u8]) -> Vec<usize> {
    let mut blocks = vec![0usize];
    for &c in w {
        if c == 1 {
            blocks.push(0);
        } else {
            *blocks.last_mut().unwrap() += 1;
        }
    }
    blocks
}
