use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A finite word over the non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }

    /// Parses `0,0,2,3` or, when no comma is present, `0023` (one digit per
    /// letter). Surrounding whitespace is ignored and the empty string is the
    /// empty word.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::default());
        }
        let err = || Error::Parse(text.to_string());
        let letters = if text.contains(',') {
            text.split(',')
                .map(|tok| tok.trim().parse::<usize>().map_err(|_| err()))
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(err))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Word(letters))
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[usize]) -> fmt::Result {
    for (i, letter) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{letter}")?;
    }
    Ok(())
}

/// A word `e_1 … e_n` with `0 <= e_i <= i - 1` for every position.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct InversionSequence(Vec<usize>);

impl InversionSequence {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if let Some((i, &letter)) = letters.iter().enumerate().find(|&(i, &e)| e > i) {
            return Err(Error::NotInversionSequence {
                position: i + 1,
                letter,
                bound: i,
            });
        }
        Ok(InversionSequence(letters))
    }

    pub(crate) fn new_unchecked(letters: Vec<usize>) -> Self {
        debug_assert!(letters.iter().enumerate().all(|(i, &e)| e <= i));
        InversionSequence(letters)
    }

    /// The all-distinct sequence `0,1,…,n-1`.
    pub fn identity(n: usize) -> Self {
        InversionSequence((0..n).collect())
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(Word::parse(text)?.into_letters())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn as_word(&self) -> Word {
        Word(self.0.clone())
    }
}

impl TryFrom<Word> for InversionSequence {
    type Error = Error;

    fn try_from(word: Word) -> Result<Self> {
        InversionSequence::new(word.0)
    }
}

impl FromStr for InversionSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InversionSequence::parse(s)
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_both_encodings() {
        assert_eq!(Word::parse("0023252").unwrap(), Word::parse("0,0,2,3,2,5,2").unwrap());
        assert_eq!(Word::parse("0, 10 ,11").unwrap().letters(), &[0, 10, 11]);
        assert!(Word::parse("").unwrap().is_empty());
        assert!(Word::parse("0a1").is_err());
        assert!(Word::parse("0,,1").is_err());
    }

    #[test]
    fn display_is_comma_separated() {
        assert_eq!(Word::new(vec![0, 12, 3]).to_string(), "0,12,3");
        assert_eq!(Word::default().to_string(), "");
    }

    #[test]
    fn inversion_bounds() {
        assert!(InversionSequence::parse("0012").is_ok());
        let err = InversionSequence::parse("0,0,3").unwrap_err();
        assert_eq!(
            err,
            Error::NotInversionSequence {
                position: 3,
                letter: 3,
                bound: 2
            }
        );
        assert!(InversionSequence::parse("1").is_err());
        assert_eq!(InversionSequence::identity(4).to_string(), "0,1,2,3");
    }
}
