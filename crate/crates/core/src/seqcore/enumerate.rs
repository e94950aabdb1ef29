use super::pattern::Pattern;
use super::word::InversionSequence;

/// Lexicographic depth-first enumeration of `I_n(patterns)`.
///
/// A prefix that contains a pattern has no avoiding extensions, so the walk
/// only checks occurrences ending at the newest letter. With a starting
/// prefix the iterator never backtracks into it, which yields exactly the
/// avoiders that extend that prefix.
#[derive(Debug, Clone)]
pub struct Avoiders {
    n: usize,
    patterns: Vec<Pattern>,
    seq: Vec<usize>,
    floor: usize,
    started: bool,
    done: bool,
}

impl Avoiders {
    fn new(n: usize, patterns: &[Pattern], prefix: &InversionSequence) -> Self {
        let feasible = prefix.len() <= n && avoids_all(prefix.letters(), patterns);
        Avoiders {
            n,
            patterns: patterns.to_vec(),
            seq: prefix.letters().to_vec(),
            floor: prefix.len(),
            started: false,
            done: !feasible,
        }
    }

    fn newest_is_clean(&self) -> bool {
        let end = self.seq.len() - 1;
        !self
            .patterns
            .iter()
            .any(|p| p.occurs_ending_at(&self.seq, end))
    }

    fn backtrack(&mut self) -> Option<usize> {
        if self.seq.len() <= self.floor {
            return None;
        }
        self.seq.pop().map(|v| v + 1)
    }
}

impl Iterator for Avoiders {
    type Item = InversionSequence;

    fn next(&mut self) -> Option<InversionSequence> {
        if self.done {
            return None;
        }
        let mut start = if self.started {
            match self.backtrack() {
                Some(s) => s,
                None => {
                    self.done = true;
                    return None;
                }
            }
        } else {
            self.started = true;
            if self.seq.len() == self.n {
                self.done = true;
                return Some(InversionSequence::new_unchecked(self.seq.clone()));
            }
            0
        };
        loop {
            let max_letter = self.seq.len();
            let mut extended = false;
            for v in start..=max_letter {
                self.seq.push(v);
                if self.newest_is_clean() {
                    extended = true;
                    break;
                }
                self.seq.pop();
            }
            if extended {
                if self.seq.len() == self.n {
                    return Some(InversionSequence::new_unchecked(self.seq.clone()));
                }
                start = 0;
            } else {
                match self.backtrack() {
                    Some(s) => start = s,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// All inversion sequences of length `n` avoiding every pattern, in
/// lexicographic order. `n = 0` yields the empty sequence.
pub fn enumerate(n: usize, patterns: &[Pattern]) -> Avoiders {
    Avoiders::new(n, patterns, &InversionSequence::default())
}

/// The avoiders of length `n` that start with `prefix`.
pub fn enumerate_from(n: usize, patterns: &[Pattern], prefix: &InversionSequence) -> Avoiders {
    Avoiders::new(n, patterns, prefix)
}

/// Avoiding prefixes of length `min(depth, n)`. Running [`enumerate_from`]
/// on each and concatenating reproduces [`enumerate`] exactly.
pub fn partition_prefixes(n: usize, depth: usize, patterns: &[Pattern]) -> Vec<InversionSequence> {
    enumerate(depth.min(n), patterns).collect()
}

pub fn avoids_all(letters: &[usize], patterns: &[Pattern]) -> bool {
    !patterns.iter().any(|p| p.occurs_in(letters))
}
