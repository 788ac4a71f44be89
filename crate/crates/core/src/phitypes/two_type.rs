//! Exhaustive check that every satisfiable parameter of the `triple`
//! language extends to at most two realized right-congruence classes.

use crate::alphabet::Word;
use crate::error::{Error, Result};
use crate::oracles::MembershipOracle;
use crate::phitypes::{theta_partition_oracle, DEFAULT_WORD_LIMIT};

/// For every parameter word c of length ≤ `max_len` such that some word x of
/// length ≤ `max_len` has xc in the language { 0ⁿ1ⁿ2ⁿ }, checks that the
/// satisfying words fall into at most two signature classes (signatures over
/// suffixes of length ≤ `max_len`). Returns `None` when the bound holds, and
/// the first violating parameter otherwise. Requires `max_len ≥ 4`.
pub fn two_type_bound_check(max_len: usize) -> Result<Option<Word>> {
    two_type_bound_check_with(&MembershipOracle::triple(), max_len)
}

/// The same check against an arbitrary oracle; other languages can and do
/// violate the bound.
pub(crate) fn two_type_bound_check_with(
    oracle: &MembershipOracle,
    max_len: usize,
) -> Result<Option<Word>> {
    if max_len < 4 {
        return Err(Error::InvalidInput(
            "two-type bound check needs max_len >= 4".into(),
        ));
    }
    let partition = theta_partition_oracle(oracle, max_len, DEFAULT_WORD_LIMIT)?;

    // Membership of x·c is the signature bit of x's class at probe c, so the
    // classes realized by satisfiers of parameter c are exactly the classes
    // whose signature sets bit c.
    for (ci, c) in partition.words.iter().enumerate() {
        let mut realized = 0usize;
        for signature in &partition.signatures {
            if signature.bit(ci) {
                realized += 1;
                if realized > 2 {
                    return Ok(Some(Word::from_indices(oracle.alphabet(), c.clone())));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_holds_at_len_4() {
        assert_eq!(two_type_bound_check(4).unwrap(), None);
    }

    #[test]
    fn bound_holds_at_len_6() {
        assert_eq!(two_type_bound_check(6).unwrap(), None);
    }

    #[test]
    fn rejects_small_bounds() {
        assert!(two_type_bound_check(3).is_err());
    }

    #[test]
    fn balanced01_never_violates_the_bound() {
        // Every satisfiable parameter of balanced01 pins down the surplus of
        // 1s over 0s exactly, so its satisfiers form a single class; the
        // bound holds vacuously rather than failing.
        let got = two_type_bound_check_with(&MembershipOracle::balanced01(), 5).unwrap();
        assert_eq!(got, None);
    }

    #[test]
    fn dcfl_seq_violates_the_bound() {
        // The empty parameter already violates: the language members 20, 120
        // and 0120 lie in three distinct classes.
        let got = two_type_bound_check_with(&MembershipOracle::dcfl_seq(), 6).unwrap();
        assert_eq!(got.map(|w| w.to_string()), Some("_".to_string()));
    }
}
