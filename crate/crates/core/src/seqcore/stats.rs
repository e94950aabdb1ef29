use std::collections::BTreeSet;

use serde::Serialize;

use super::pattern::Pattern;
use super::word::InversionSequence;
use crate::{Error, Result};

/// `srpt`, `last` and the set of repeated letters of a nonempty sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatProfile {
    /// Smallest repeated letter; `n - 1` when every letter is distinct.
    pub srpt: usize,
    pub last: usize,
    pub repeated: BTreeSet<usize>,
}

pub fn stat_profile(e: &InversionSequence) -> Result<StatProfile> {
    let n = e.len();
    let last = e.last().ok_or(Error::EmptySequence)?;
    let mut seen = vec![0u8; n];
    let mut repeated = BTreeSet::new();
    for &letter in e.letters() {
        if seen[letter] == 1 {
            repeated.insert(letter);
        }
        seen[letter] = seen[letter].saturating_add(1);
    }
    // All letters distinct forces e = 0,1,…,n-1.
    let srpt = repeated.first().copied().unwrap_or(n - 1);
    Ok(StatProfile {
        srpt,
        last,
        repeated,
    })
}

/// The prefix `e_1 … e_{n-1}`.
pub fn drop_last(e: &InversionSequence) -> Result<InversionSequence> {
    if e.len() < 2 {
        return Err(Error::TooShort(e.len()));
    }
    let letters = &e.letters()[..e.len() - 1];
    Ok(InversionSequence::new_unchecked(letters.to_vec()))
}

/// For a 0012-avoider with `srpt = last = k <= n - 2`, returns
/// `e_{k+i} - k` for `i = 1..=n-k`.
pub fn shift_reduce(e: &InversionSequence, k: usize) -> Result<InversionSequence> {
    let n = e.len();
    if n < 2 || k > n - 2 {
        return Err(Error::Precondition(format!(
            "shift {k} needs 0 <= k <= n - 2 with n = {n}"
        )));
    }
    let p0012 = Pattern::parse("0012").expect("reduced");
    if p0012.occurs_in(e.letters()) {
        return Err(Error::Precondition(format!("{e} contains 0012")));
    }
    let profile = stat_profile(e)?;
    if profile.srpt != k || profile.last != k {
        return Err(Error::Precondition(format!(
            "{e} has srpt {} and last {}, expected both {k}",
            profile.srpt, profile.last
        )));
    }
    let letters = e.letters()[k..]
        .iter()
        .map(|&x| {
            x.checked_sub(k)
                .ok_or_else(|| Error::Precondition(format!("{e} has a letter below {k} after position {k}")))
        })
        .collect::<Result<Vec<_>>>()?;
    InversionSequence::new(letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> InversionSequence {
        InversionSequence::parse(s).unwrap()
    }

    #[test]
    fn profiles() {
        let p = stat_profile(&seq("0123")).unwrap();
        assert_eq!((p.srpt, p.last), (3, 3));
        assert!(p.repeated.is_empty());
        let p = stat_profile(&seq("000")).unwrap();
        assert_eq!((p.srpt, p.last), (0, 0));
        let p = stat_profile(&seq("0113")).unwrap();
        assert_eq!((p.srpt, p.last), (1, 3));
        assert_eq!(p.repeated, BTreeSet::from([1]));
        assert_eq!(stat_profile(&seq("0")).unwrap().srpt, 0);
        assert_eq!(stat_profile(&seq("")), Err(Error::EmptySequence));
    }

    #[test]
    fn prefix() {
        assert_eq!(drop_last(&seq("0021")).unwrap(), seq("002"));
        assert_eq!(drop_last(&seq("01")).unwrap(), seq("0"));
        assert_eq!(drop_last(&seq("0")), Err(Error::TooShort(1)));
    }

    #[test]
    fn shift() {
        assert_eq!(shift_reduce(&seq("0111"), 1).unwrap(), seq("000"));
        assert_eq!(shift_reduce(&seq("00"), 0).unwrap(), seq("00"));
        assert_eq!(shift_reduce(&seq("0122"), 2).unwrap(), seq("00"));
    }

    #[test]
    fn shift_rejects_bad_input() {
        // srpt 0, last 1
        assert!(shift_reduce(&seq("0011"), 1).is_err());
        // k = n - 1
        assert!(shift_reduce(&seq("0123"), 3).is_err());
        // contains 0012
        assert!(shift_reduce(&seq("0,0,1,2,0"), 0).is_err());
    }
}
