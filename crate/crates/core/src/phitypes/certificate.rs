//! Pairwise separation certificates.
//!
//! A certificate lists words together with, for each pair, a suffix that
//! extends exactly one of the two into the language. Every entry can be
//! re-checked against the membership predicate, so the certificate is
//! self-contained finite evidence that its members lie in pairwise distinct
//! right-congruence classes.

use serde::Serialize;

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::phitypes::{LanguageBacking, LanguageHandle, OraclePartition};

// Hard stop for runaway suffix searches.
const ENUMERATION_CAP: usize = 20_000_000;

#[derive(Debug, Clone, Serialize)]
pub struct SeparationCertificate {
    members: Vec<Word>,
    /// matrix[i][j] extends member i and member j differently; the diagonal
    /// is empty. Symmetric.
    matrix: Vec<Vec<Option<Word>>>,
}

impl SeparationCertificate {
    pub(crate) fn from_parts(members: Vec<Word>, matrix: Vec<Vec<Option<Word>>>) -> Self {
        debug_assert_eq!(members.len(), matrix.len());
        debug_assert!(matrix.iter().all(|row| row.len() == members.len()));
        debug_assert!((0..members.len()).all(|i| matrix[i][i].is_none()));
        SeparationCertificate { members, matrix }
    }

    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn k(&self) -> usize {
        self.members.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<&Word> {
        self.matrix[i][j].as_ref()
    }

    /// All off-diagonal entries present.
    pub fn is_complete(&self) -> bool {
        (0..self.k()).all(|i| (0..self.k()).all(|j| i == j || self.matrix[i][j].is_some()))
    }

    /// Re-checks the certificate against the language: it must be complete
    /// and every entry must extend exactly one of its two members into the
    /// language.
    pub fn verify(&self, h: &LanguageHandle) -> Result<bool> {
        for i in 0..self.k() {
            for j in 0..self.k() {
                if i == j {
                    continue;
                }
                let Some(suffix) = &self.matrix[i][j] else {
                    return Ok(false);
                };
                let a = h.contains(&self.members[i].concat(suffix))?;
                let b = h.contains(&self.members[j].concat(suffix))?;
                if a == b {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization cannot fail")
    }
}

/// Searches suffixes in length-lex order for a separator of every member
/// pair. Entries are the shortest separating suffixes. Errors on the first
/// pair that no suffix within the bound separates.
pub fn separation_certificate(
    h: &LanguageHandle,
    members: &[Word],
    max_suffix_len: usize,
) -> Result<SeparationCertificate> {
    if members.is_empty() {
        return Err(Error::InvalidInput("certificate needs at least one member".into()));
    }
    for (i, m) in members.iter().enumerate() {
        if members[..i].contains(m) {
            return Err(Error::InvalidInput(format!("duplicate member {m}")));
        }
    }
    let alphabet = h.alphabet().clone();
    let k = members.len();

    // Translate members into the handle's alphabet once; automaton-backed
    // handles then only step each suffix from k precomputed states.
    let member_indices: Vec<Vec<u8>> = members
        .iter()
        .map(|m| Word::parse(&m.to_string(), &alphabet).map(|w| w.indices().to_vec()))
        .collect::<Result<_>>()?;
    let member_states: Option<Vec<usize>> = match &h.backing {
        LanguageBacking::Automaton(d) => Some(
            member_indices
                .iter()
                .map(|m| d.step_indices(d.start(), m))
                .collect(),
        ),
        LanguageBacking::Oracle(_) => None,
    };

    let mut matrix: Vec<Vec<Option<Word>>> = vec![vec![None; k]; k];
    let mut open: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| ((i + 1)..k).map(move |j| (i, j)))
        .collect();

    let mut enumerated = 0usize;
    let mut bits = vec![false; k];
    let mut buf: Vec<u8> = Vec::new();
    'lengths: for len in 0..=max_suffix_len {
        let mut suffix = vec![0u8; len];
        loop {
            enumerated += 1;
            if enumerated > ENUMERATION_CAP {
                return Err(Error::ProbeLimit {
                    limit: ENUMERATION_CAP,
                });
            }
            for (i, m) in member_indices.iter().enumerate() {
                bits[i] = match (&h.backing, &member_states) {
                    (LanguageBacking::Automaton(d), Some(states)) => {
                        d.is_accept(d.step_indices(states[i], &suffix))
                    }
                    (LanguageBacking::Oracle(o), _) => {
                        buf.clear();
                        buf.extend_from_slice(m);
                        buf.extend_from_slice(&suffix);
                        o.decide_indices(&buf)
                    }
                    _ => unreachable!("member states exist exactly for automaton backings"),
                };
            }
            open.retain(|&(i, j)| {
                if bits[i] != bits[j] {
                    let w = Word::from_indices(&alphabet, suffix.clone());
                    matrix[i][j] = Some(w.clone());
                    matrix[j][i] = Some(w);
                    false
                } else {
                    true
                }
            });
            if open.is_empty() {
                break 'lengths;
            }
            if !advance_fixed_len(&mut suffix, alphabet.len() as u8) {
                break;
            }
        }
    }

    if let Some(&(i, j)) = open.first() {
        return Err(Error::UnseparatedPair {
            left: members[i].to_string(),
            right: members[j].to_string(),
            bound: max_suffix_len,
        });
    }
    Ok(SeparationCertificate::from_parts(members.to_vec(), matrix))
}

/// Base-k odometer over a fixed-length word; false on wrap-around.
fn advance_fixed_len(w: &mut [u8], k: u8) -> bool {
    for i in (0..w.len()).rev() {
        if w[i] + 1 < k {
            w[i] += 1;
            for x in &mut w[i + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    false
}

/// Certificate for one sample per class of a bounded-probe partition. The
/// separating suffix of a pair is the first probe on which the class
/// signatures disagree, so no new membership queries are needed.
#[allow(clippy::needless_range_loop)] // symmetric double-indexed fill
pub(crate) fn from_partition(
    alphabet: &Alphabet,
    partition: &OraclePartition,
) -> SeparationCertificate {
    let n = partition.class_count();
    let members: Vec<Word> = partition
        .sample_index
        .iter()
        .map(|&wi| Word::from_indices(alphabet, partition.words[wi].clone()))
        .collect();
    let mut matrix: Vec<Vec<Option<Word>>> = vec![vec![None; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let probe = partition.signatures[i]
                .first_difference(&partition.signatures[j])
                .expect("distinct classes have distinct signatures");
            let w = Word::from_indices(alphabet, partition.words[probe].clone());
            matrix[i][j] = Some(w.clone());
            matrix[j][i] = Some(w);
        }
    }
    SeparationCertificate::from_parts(members, matrix)
}
