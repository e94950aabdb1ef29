use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::word::{write_letters, Word};
use crate::{Error, Result};

/// Relabels `w` so its `k`-th smallest distinct letter becomes `k - 1`.
pub fn reduce(w: &Word) -> Word {
    let mut distinct: Vec<usize> = w.letters().to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let letters = w
        .letters()
        .iter()
        .map(|x| distinct.binary_search(x).expect("letter present"))
        .collect();
    Word::new(letters)
}

/// A pattern: a word equal to its own reduction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    letters: Vec<usize>,
    // order[i * len + j] = letters[i].cmp(&letters[j])
    order: Vec<Ordering>,
}

impl Pattern {
    /// Rejects words that are not already reduced; use [`reduce`] to
    /// canonicalize first.
    pub fn new(word: Word) -> Result<Self> {
        let reduced = reduce(&word);
        if reduced != word {
            return Err(Error::NotReduced(word.to_string(), reduced.to_string()));
        }
        let letters = word.into_letters();
        let m = letters.len();
        let mut order = Vec::with_capacity(m * m);
        for a in &letters {
            for b in &letters {
                order.push(a.cmp(b));
            }
        }
        Ok(Pattern { letters, order })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Pattern::new(Word::parse(text)?)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    #[inline]
    fn rel(&self, i: usize, j: usize) -> Ordering {
        self.order[i * self.letters.len() + j]
    }

    /// True when `word` has an occurrence whose final letter is `word[end]`.
    pub(crate) fn occurs_ending_at(&self, word: &[usize], end: usize) -> bool {
        let m = self.len();
        if m == 0 {
            return true;
        }
        if end + 1 < m {
            return false;
        }
        let mut chosen = Vec::with_capacity(m);
        self.search(word, end, Some(word[end]), &mut chosen)
    }

    /// True when `word` contains an occurrence anywhere.
    pub(crate) fn occurs_in(&self, word: &[usize]) -> bool {
        let m = self.len();
        if m == 0 {
            return true;
        }
        let mut chosen = Vec::with_capacity(m);
        self.search(word, word.len(), None, &mut chosen)
    }

    // Depth-first search over word[..limit]. `chosen` holds the word
    // positions picked for pattern positions 0..chosen.len(). With
    // `fixed_last`, the final pattern position is already bound to that
    // letter and every pick is checked against it as well.
    fn search(
        &self,
        word: &[usize],
        limit: usize,
        fixed_last: Option<usize>,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let m = self.len();
        let j = chosen.len();
        let free = if fixed_last.is_some() { m - 1 } else { m };
        if j == free {
            return true;
        }
        let remaining_after = free - j - 1;
        if limit < remaining_after {
            return false;
        }
        let start = chosen.last().map_or(0, |&p| p + 1);
        let stop = limit - remaining_after;
        for pos in start..stop {
            let c = word[pos];
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(i, &p)| word[p].cmp(&c) == self.rel(i, j))
                && fixed_last.is_none_or(|last| c.cmp(&last) == self.rel(j, m - 1));
            if consistent {
                chosen.push(pos);
                if self.search(word, limit, fixed_last, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::parse(s)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&l| l < 10) {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            write_letters(f, &self.letters)
        }
    }
}

/// Whether some subsequence of `word` reduces to `pattern`.
pub fn contains(word: &Word, pattern: &Pattern) -> bool {
    pattern.occurs_in(word.letters())
}
