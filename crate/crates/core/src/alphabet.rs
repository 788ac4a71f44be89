//! Alphabets and words of the free monoid over a finite symbol set.
//!
//! A [`Word`] stores symbol *indices* into its [`Alphabet`], so the hot
//! enumeration loops elsewhere in the crate work on small integer slices.
//! Words order length-first, then lexicographically by symbol index, which is
//! the canonical enumeration order used everywhere.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Characters with reserved meaning in the expression syntax; they can never
/// be alphabet symbols.
pub const RESERVED_CHARS: &[char] = &['|', '&', '!', '*', '(', ')', '_', '#'];

/// An ordered, non-empty set of distinct printable symbols.
///
/// Iteration order is declaration order and is stable; symbol indices refer
/// to that order throughout the crate. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Arc<[char]>,
}

impl Alphabet {
    pub fn new<I>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = char>,
    {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::InvalidInput(
                "alphabet must contain at least one symbol".into(),
            ));
        }
        if symbols.len() > u8::MAX as usize {
            return Err(Error::InvalidInput(format!(
                "alphabet has {} symbols; at most {} are supported",
                symbols.len(),
                u8::MAX
            )));
        }
        for (i, &c) in symbols.iter().enumerate() {
            if c.is_whitespace() || c.is_control() {
                return Err(Error::InvalidInput(format!(
                    "alphabet symbol {c:?} is not printable"
                )));
            }
            if RESERVED_CHARS.contains(&c) {
                return Err(Error::InvalidInput(format!(
                    "alphabet symbol {c:?} is reserved syntax"
                )));
            }
            if symbols[..i].contains(&c) {
                return Err(Error::InvalidInput(format!(
                    "duplicate alphabet symbol {c:?}"
                )));
            }
        }
        Ok(Alphabet {
            symbols: symbols.into(),
        })
    }

    /// Parses a CLI-style alphabet spec: one character per symbol, in order.
    pub fn parse(spec: &str) -> Result<Self> {
        Self::new(spec.chars())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Alphabets are never empty; present for completeness.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> char {
        self.symbols[index]
    }

    pub fn index_of(&self, c: char) -> Option<u8> {
        self.symbols.iter().position(|&s| s == c).map(|i| i as u8)
    }

    pub fn contains(&self, c: char) -> bool {
        self.index_of(c).is_some()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet(")?;
        for c in self.symbols.iter() {
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.symbols.iter() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite (possibly empty) sequence of symbols from one alphabet.
///
/// The empty word is the monoid identity and is written `_` in display form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    indices: Vec<u8>,
}

impl Word {
    pub fn epsilon(alphabet: &Alphabet) -> Self {
        Word {
            alphabet: alphabet.clone(),
            indices: Vec::new(),
        }
    }

    /// Builds a word from symbol indices. Indices must be in range for the
    /// alphabet.
    pub fn from_indices(alphabet: &Alphabet, indices: Vec<u8>) -> Self {
        debug_assert!(indices.iter().all(|&i| (i as usize) < alphabet.len()));
        Word {
            alphabet: alphabet.clone(),
            indices,
        }
    }

    /// Parses the CLI word syntax: `_` is the empty word, anything else is a
    /// sequence of alphabet symbols.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        if text == "_" {
            return Ok(Word::epsilon(alphabet));
        }
        let mut indices = Vec::with_capacity(text.len());
        for c in text.chars() {
            match alphabet.index_of(c) {
                Some(i) => indices.push(i),
                None => return Err(Error::UnknownSymbol { symbol: c }),
            }
        }
        Ok(Word {
            alphabet: alphabet.clone(),
            indices,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[u8] {
        &self.indices
    }

    pub fn chars(&self) -> impl Iterator<Item = char> + '_ {
        self.indices
            .iter()
            .map(move |&i| self.alphabet.symbol(i as usize))
    }

    /// Monoid product. Both operands must come from the same alphabet.
    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(
            self.alphabet, other.alphabet,
            "words from different alphabets cannot be concatenated"
        );
        let mut indices = Vec::with_capacity(self.indices.len() + other.indices.len());
        indices.extend_from_slice(&self.indices);
        indices.extend_from_slice(&other.indices);
        Word {
            alphabet: self.alphabet.clone(),
            indices,
        }
    }

    pub fn push(&mut self, symbol_index: u8) {
        debug_assert!((symbol_index as usize) < self.alphabet.len());
        self.indices.push(symbol_index);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Length-first, then lexicographic by symbol index.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.indices
            .len()
            .cmp(&other.indices.len())
            .then_with(|| self.indices.cmp(&other.indices))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "_");
        }
        for c in self.chars() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Number of words of length at most `max_len` over `alphabet_size` symbols,
/// or an overflow error when the count exceeds the platform count limit.
pub fn count_words_up_to(alphabet_size: usize, max_len: usize) -> Result<usize> {
    let mut total: usize = 0;
    let mut layer: usize = 1;
    for len in 0..=max_len {
        total = total
            .checked_add(layer)
            .ok_or(Error::WordCountOverflow { max_len })?;
        if len < max_len {
            layer = layer
                .checked_mul(alphabet_size)
                .ok_or(Error::WordCountOverflow { max_len })?;
        }
    }
    Ok(total)
}

/// All words of length at most `max_len`, in length-then-lexicographic order.
pub fn words_up_to(alphabet: &Alphabet, max_len: usize) -> Result<WordsUpTo> {
    count_words_up_to(alphabet.len(), max_len)?;
    Ok(WordsUpTo {
        alphabet: alphabet.clone(),
        max_len,
        next: Some(Vec::new()),
    })
}

pub struct WordsUpTo {
    alphabet: Alphabet,
    max_len: usize,
    next: Option<Vec<u8>>,
}

impl Iterator for WordsUpTo {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let word = Word::from_indices(&self.alphabet, current.clone());
        self.next = advance_index_word(current, self.alphabet.len() as u8, self.max_len);
        Some(word)
    }
}

/// Steps an index word to its successor in length-lex order, or `None` at the
/// end of the length bound.
fn advance_index_word(mut w: Vec<u8>, k: u8, max_len: usize) -> Option<Vec<u8>> {
    // Base-k increment; on wrap-around move to the next length.
    for i in (0..w.len()).rev() {
        if w[i] + 1 < k {
            w[i] += 1;
            for x in &mut w[i + 1..] {
                *x = 0;
            }
            return Some(w);
        }
    }
    if w.len() < max_len {
        Some(vec![0; w.len() + 1])
    } else {
        None
    }
}

/// Materializes all index words of length at most `max_len` in length-lex
/// order. Callers are responsible for bounding the count beforehand.
pub(crate) fn enumerate_index_words(k: usize, max_len: usize) -> Vec<Vec<u8>> {
    let count = count_words_up_to(k, max_len).expect("caller must pre-check the word count");
    let mut out = Vec::with_capacity(count);
    let mut cur = Some(Vec::new());
    while let Some(w) = cur {
        out.push(w.clone());
        cur = advance_index_word(w, k as u8, max_len);
    }
    out
}
