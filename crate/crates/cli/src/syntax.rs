//! Parsers for command-line values.

use std::ops::RangeInclusive;

use anyhow::{bail, Context, Result};
use invseq::seqcore::{Pattern, Word};

/// One pattern: a digit string (`0012`) or a bracketed letter list
/// (`[0,0,1,2]`).
fn parse_pattern(text: &str) -> Result<Pattern> {
    let text = text.trim();
    let word = match text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        Some(inner) => Word::parse(inner)?,
        None => {
            if !text.chars().all(|c| c.is_ascii_digit()) || text.is_empty() {
                bail!("pattern {text:?} must be digits or a bracketed list like [0,0,1,2]");
            }
            Word::parse(text)?
        }
    };
    Ok(Pattern::new(word)?)
}

/// Comma-separated patterns forming one class. Commas inside brackets belong
/// to the pattern.
pub fn parse_class(text: &str) -> Result<Vec<Pattern>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut token = String::new();
    for ch in text.chars() {
        match ch {
            '[' => {
                depth += 1;
                token.push(ch);
            }
            ']' => {
                depth = depth.checked_sub(1).context("unbalanced ']'")?;
                token.push(ch);
            }
            ',' if depth == 0 => {
                out.push(parse_pattern(&token)?);
                token.clear();
            }
            _ => token.push(ch),
        }
    }
    if depth != 0 {
        bail!("unbalanced '[' in {text:?}");
    }
    out.push(parse_pattern(&token)?);
    Ok(out)
}

/// Semicolon-separated classes.
pub fn parse_classes(text: &str) -> Result<Vec<Vec<Pattern>>> {
    text.split(';').map(parse_class).collect()
}

/// `a..b` or `a..=b` (both inclusive) or a single `n`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>> {
    let text = text.trim();
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (text, text),
    };
    let lo: usize = lo.trim().parse().with_context(|| format!("bad range {text:?}"))?;
    let hi: usize = hi.trim().parse().with_context(|| format!("bad range {text:?}"))?;
    if lo > hi {
        bail!("empty range {text:?}");
    }
    Ok(lo..=hi)
}

/// Display label for a class, e.g. `021,120`.
pub fn class_label(class: &[Pattern]) -> String {
    class
        .iter()
        .map(|p| {
            if p.letters().iter().all(|&l| l < 10) {
                p.to_string()
            } else {
                format!("[{}]", Word::new(p.letters().to_vec()))
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes() {
        let c = parse_classes("0012;021,120").unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[1].len(), 2);
        assert_eq!(parse_class("[0,0,1,2]").unwrap(), parse_class("0012").unwrap());
        assert_eq!(parse_class("[0012]").unwrap(), parse_class("0012").unwrap());
        assert!(parse_class("21").is_err());
        assert!(parse_class("0a").is_err());
        assert!(parse_class("[0,1").is_err());
        assert!(parse_class("").is_err());
        assert_eq!(class_label(&c[1]), "021,120");
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..6").unwrap(), 1..=6);
        assert_eq!(parse_range("1..=6").unwrap(), 1..=6);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("6..1").is_err());
        assert!(parse_range("x").is_err());
    }
}
