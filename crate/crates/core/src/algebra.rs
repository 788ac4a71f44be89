//! Finite monoids and homomorphism recognizers.
//!
//! The syntactic monoid of a regular language is computed as the
//! transformation monoid of its minimal complete automaton: elements are the
//! distinct state maps induced by words, closed under composition. Element
//! ids follow breadth-first discovery order (identity first, then closure by
//! generator words in alphabet order), so multiplication tables and
//! representative words are reproducible.
//!
//! Everything here is finite by construction. Recognizability also makes
//! sense over infinite non-free monoids — in an infinite direct sum of
//! order-2 groups, the even-support elements are recognized by the
//! coordinate-sum homomorphism onto Z/2Z even though no automaton is in
//! sight — but no computation over such carriers is attempted.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::alphabet::{Alphabet, Word};
use crate::automata::Dfa;
use crate::error::{Error, Result};

/// Default bound on the number of monoid elements discovered during closure.
pub const DEFAULT_MONOID_LIMIT: usize = 100_000;

// Guard on multiplication-table size; beyond this the table itself would
// dominate memory even when the element count is within bounds.
const TABLE_ENTRY_CAP: usize = 1 << 27;

/// A finite monoid given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    identity: usize,
    /// table[a][b] = a · b
    table: Vec<Vec<usize>>,
}

/// Outcome of the exhaustive axiom check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoidAxiomViolation {
    /// identity · x ≠ x or x · identity ≠ x.
    Identity { elem: usize },
    /// (a · b) · c ≠ a · (b · c).
    Associativity { a: usize, b: usize, c: usize },
}

impl FiniteMonoid {
    /// Builds a monoid from a table, validating shape and entry bounds.
    /// Axioms are not enforced here; see [`FiniteMonoid::check_axioms`].
    pub fn new(identity: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidMonoid("a monoid needs at least one element".into()));
        }
        if identity >= n {
            return Err(Error::InvalidMonoid(format!(
                "identity {identity} out of range"
            )));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMonoid(format!(
                    "row {a} has {} entries for size {n}",
                    row.len()
                )));
            }
            for &e in row {
                if e >= n {
                    return Err(Error::InvalidMonoid(format!(
                        "table entry {e} out of range"
                    )));
                }
            }
        }
        Ok(FiniteMonoid { identity, table })
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Exhaustive identity and associativity check; returns the first
    /// violation found. Cubic in the element count.
    pub fn check_axioms(&self) -> std::result::Result<(), MonoidAxiomViolation> {
        let n = self.size();
        for x in 0..n {
            if self.mul(self.identity, x) != x || self.mul(x, self.identity) != x {
                return Err(MonoidAxiomViolation::Identity { elem: x });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(MonoidAxiomViolation::Associativity { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Aperiodicity: every element satisfies x^n = x^(n+1) for some n ≤ size.
    /// When that fails, [`FiniteMonoid::aperiodicity_witness`] yields an
    /// element whose powers cycle with period ≥ 2, i.e. generate a
    /// nontrivial cyclic group.
    pub fn is_aperiodic(&self) -> bool {
        self.aperiodicity_witness().is_none()
    }

    pub fn aperiodicity_witness(&self) -> Option<usize> {
        for x in 0..self.size() {
            // Walk x, x², x³, … until a value repeats. A repeat of the
            // immediately preceding power means x^n = x^(n+1); anything else
            // closes a cycle of period ≥ 2.
            let mut seen = BTreeSet::new();
            let mut power = x;
            seen.insert(power);
            loop {
                let next = self.mul(power, x);
                if next == power {
                    break;
                }
                if !seen.insert(next) {
                    return Some(x);
                }
                power = next;
            }
        }
        None
    }
}

/// A monoid homomorphism from the free monoid over an alphabet, determined by
/// the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidHom {
    alphabet: Alphabet,
    target: FiniteMonoid,
    /// gen_image[a] = image of the a-th alphabet symbol.
    gen_image: Vec<usize>,
}

impl MonoidHom {
    pub fn new(alphabet: Alphabet, target: FiniteMonoid, gen_image: Vec<usize>) -> Result<Self> {
        if gen_image.len() != alphabet.len() {
            return Err(Error::InvalidMonoid(format!(
                "{} generator images for {} symbols",
                gen_image.len(),
                alphabet.len()
            )));
        }
        if let Some(&bad) = gen_image.iter().find(|&&e| e >= target.size()) {
            return Err(Error::InvalidMonoid(format!(
                "generator image {bad} out of range"
            )));
        }
        Ok(MonoidHom {
            alphabet,
            target,
            gen_image,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn target(&self) -> &FiniteMonoid {
        &self.target
    }

    pub fn gen_image(&self) -> &[usize] {
        &self.gen_image
    }

    pub(crate) fn eval_indices(&self, indices: &[u8]) -> usize {
        indices.iter().fold(self.target.identity(), |acc, &a| {
            self.target.mul(acc, self.gen_image[a as usize])
        })
    }

    /// α(w), extending the generator images; α(ε) is the identity.
    pub fn eval(&self, w: &Word) -> Result<usize> {
        if w.alphabet() == &self.alphabet {
            return Ok(self.eval_indices(w.indices()));
        }
        let mut acc = self.target.identity();
        for c in w.chars() {
            let a = self
                .alphabet
                .index_of(c)
                .ok_or(Error::UnknownSymbol { symbol: c })?;
            acc = self.target.mul(acc, self.gen_image[a as usize]);
        }
        Ok(acc)
    }
}

/// A homomorphism together with an accepting element set; recognizes the
/// language α⁻¹(accept).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognizer {
    pub hom: MonoidHom,
    pub accept: BTreeSet<usize>,
}

/// Result of the transformation-monoid closure of a minimal automaton: the
/// syntactic monoid, the evaluation homomorphism onto it, one shortest
/// representative word per element, and the accepting element set.
#[derive(Debug, Clone)]
pub struct SyntacticMonoid {
    hom: MonoidHom,
    representatives: Vec<Word>,
    accept: BTreeSet<usize>,
}

impl SyntacticMonoid {
    pub fn monoid(&self) -> &FiniteMonoid {
        self.hom.target()
    }

    pub fn size(&self) -> usize {
        self.monoid().size()
    }

    pub fn eval_hom(&self) -> &MonoidHom {
        &self.hom
    }

    pub fn eval(&self, w: &Word) -> Result<usize> {
        self.hom.eval(w)
    }

    /// Shortest representative word of each element, indexed by element id.
    pub fn representatives(&self) -> &[Word] {
        &self.representatives
    }

    pub fn accept_elems(&self) -> &BTreeSet<usize> {
        &self.accept
    }

    pub fn to_recognizer(&self) -> Recognizer {
        Recognizer {
            hom: self.hom.clone(),
            accept: self.accept.clone(),
        }
    }

    /// JSON form per the external interface.
    pub fn to_json(&self) -> String {
        let gen_image: BTreeMap<String, usize> = self
            .hom
            .alphabet()
            .symbols()
            .iter()
            .enumerate()
            .map(|(i, c)| (c.to_string(), self.hom.gen_image()[i]))
            .collect();
        let doc = MonoidJson {
            size: self.size(),
            identity: self.monoid().identity(),
            table: self.monoid().table().to_vec(),
            gen_image,
            accept: self.accept.iter().copied().collect(),
            representatives: self.representatives.iter().map(|w| w.to_string()).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("monoid serialization cannot fail")
    }
}

#[derive(Serialize)]
struct MonoidJson {
    size: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
    gen_image: BTreeMap<String, usize>,
    accept: Vec<usize>,
    representatives: Vec<String>,
}

/// Transformation monoid of the minimal automaton of `d` (which is minimized
/// internally first), with the default element bound.
pub fn transition_monoid(d: &Dfa) -> Result<SyntacticMonoid> {
    transition_monoid_bounded(d, DEFAULT_MONOID_LIMIT)
}

pub fn transition_monoid_bounded(d: &Dfa, limit: usize) -> Result<SyntacticMonoid> {
    let m = d.minimize();
    let n = m.state_count();
    let k = m.alphabet().len();

    // Breadth-first closure over generator right-multiplication. Element 0 is
    // the identity transformation; discovery order fixes element ids.
    let identity: Vec<usize> = (0..n).collect();
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut transforms: Vec<Vec<usize>> = Vec::new();
    let mut reps: Vec<Word> = Vec::new();
    ids.insert(identity.clone(), 0);
    transforms.push(identity);
    reps.push(Word::epsilon(m.alphabet()));

    let gens: Vec<Vec<usize>> = (0..k)
        .map(|a| (0..n).map(|q| m.next(q, a as u8)).collect())
        .collect();

    let mut queue = VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        for (a, gen) in gens.iter().enumerate() {
            let composed: Vec<usize> = transforms[cur].iter().map(|&q| gen[q]).collect();
            if !ids.contains_key(&composed) {
                let id = transforms.len();
                if id >= limit {
                    return Err(Error::MonoidLimit { limit });
                }
                ids.insert(composed.clone(), id);
                transforms.push(composed);
                let mut w = reps[cur].clone();
                w.push(a as u8);
                reps.push(w);
                queue.push_back(id);
            }
        }
    }

    let size = transforms.len();
    if size.saturating_mul(size) > TABLE_ENTRY_CAP {
        return Err(Error::MonoidLimit { limit });
    }
    let mut table = vec![vec![0usize; size]; size];
    for i in 0..size {
        for j in 0..size {
            // Word concatenation u·v acts as "apply t_u, then t_v".
            let composed: Vec<usize> = transforms[i].iter().map(|&q| transforms[j][q]).collect();
            table[i][j] = *ids
                .get(&composed)
                .expect("generator closure is closed under composition");
        }
    }

    let accept: BTreeSet<usize> = (0..size)
        .filter(|&i| m.is_accept(transforms[i][m.start()]))
        .collect();
    let gen_image: Vec<usize> = gens.iter().map(|g| ids[g]).collect();
    let monoid = FiniteMonoid::new(0, table)?;
    let hom = MonoidHom::new(m.alphabet().clone(), monoid, gen_image)?;
    Ok(SyntacticMonoid {
        hom,
        representatives: reps,
        accept,
    })
}

/// Automaton over the reachable monoid elements: state m reads a as
/// m · α(a), starting from the identity, accepting on the recognizer's
/// element set. Accepts exactly α⁻¹(accept).
pub fn recognizer_to_dfa(r: &Recognizer) -> Dfa {
    let hom = &r.hom;
    let k = hom.alphabet().len();
    let mut ids: HashMap<usize, usize> = HashMap::new();
    let mut elems: Vec<usize> = Vec::new();
    ids.insert(hom.target().identity(), 0);
    elems.push(hom.target().identity());
    let mut delta: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < elems.len() {
        let e = elems[i];
        i += 1;
        let mut row = Vec::with_capacity(k);
        for a in 0..k {
            let t = hom.target().mul(e, hom.gen_image()[a]);
            let id = *ids.entry(t).or_insert_with(|| {
                elems.push(t);
                elems.len() - 1
            });
            row.push(id);
        }
        delta.push(row);
    }
    let accept = elems.iter().map(|e| r.accept.contains(e)).collect();
    Dfa::new(hom.alphabet().clone(), 0, accept, delta)
        .expect("element graph is a well-formed DFA")
}

/// Outcome of [`verify_recognizer`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognizerVerdict {
    Verified,
    /// Two words in the same fibre of the homomorphism with different
    /// membership: `accepted` is in the language, `rejected` is not.
    Counterexample { accepted: Word, rejected: Word },
}

/// Checks that the homomorphism of `r` recognizes the language of `d`, i.e.
/// that the language is a union of fibres. On failure, produces a pair of
/// same-fibre words with differing membership.
pub fn verify_recognizer(r: &Recognizer, d: &Dfa) -> Result<RecognizerVerdict> {
    let hom = &r.hom;
    if hom.alphabet() != d.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let k = d.alphabet().len();

    // Image of the language: elements α(w) for accepted w, found by a
    // breadth-first walk of the (element, state) product.
    let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
    let mut queue = VecDeque::new();
    let start = (hom.target().identity(), d.start());
    seen.insert(start, ());
    queue.push_back(start);
    let mut image: BTreeSet<usize> = BTreeSet::new();
    while let Some((e, q)) = queue.pop_front() {
        if d.is_accept(q) {
            image.insert(e);
        }
        for a in 0..k {
            let t = (hom.target().mul(e, hom.gen_image()[a]), d.next(q, a as u8));
            if seen.insert(t, ()).is_none() {
                queue.push_back(t);
            }
        }
    }

    // α⁻¹(α(L)) always contains L; the language is recognized exactly when
    // the two are equal.
    let saturated = recognizer_to_dfa(&Recognizer {
        hom: hom.clone(),
        accept: image,
    });
    match saturated.equivalent(d)? {
        None => Ok(RecognizerVerdict::Verified),
        Some(rejected) => {
            debug_assert!(!d.run(&rejected).unwrap_or(false));
            let target = hom.eval(&rejected)?;
            let accepted = shortest_fibre_witness(hom, d, target)
                .expect("a rejected word of the saturation shares a fibre with an accepted word");
            Ok(RecognizerVerdict::Counterexample { accepted, rejected })
        }
    }
}

/// Shortest accepted word mapping to `target` under the homomorphism.
fn shortest_fibre_witness(hom: &MonoidHom, d: &Dfa, target: usize) -> Option<Word> {
    type Node = (usize, usize);
    let k = d.alphabet().len();
    let start = (hom.target().identity(), d.start());
    let mut parents: HashMap<Node, Option<(Node, u8)>> = HashMap::new();
    parents.insert(start, None);
    let mut queue = VecDeque::from([start]);
    while let Some((e, q)) = queue.pop_front() {
        if e == target && d.is_accept(q) {
            let mut rev = Vec::new();
            let mut at = (e, q);
            while let Some(Some((prev, a))) = parents.get(&at) {
                rev.push(*a);
                at = *prev;
            }
            rev.reverse();
            return Some(Word::from_indices(d.alphabet(), rev));
        }
        for a in 0..k {
            let t = (hom.target().mul(e, hom.gen_image()[a]), d.next(q, a as u8));
            parents.entry(t).or_insert_with(|| {
                queue.push_back(t);
                Some(((e, q), a as u8))
            });
        }
    }
    None
}
