//! Text grammars for free words, braid words and augmented braids.
//!
//! Free words are whitespace-separated tokens `x<k>`, `x<k>^<int>` or signed
//! integers; braid words use `s<k>` in the same way. A lone `e` is the empty
//! word. Augmented braids are written `(<braid> ; <word>)`.

use braidforce_core::{AugBraid, BraidWord, FreeWord, Letter};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("bad token `{token}`: {reason}")]
    Token { token: String, reason: &'static str },
    #[error("expected `(<braid> ; <word>)`, got `{0}`")]
    AugForm(String),
    #[error("word `{0}` moves the last strand")]
    NotAugmented(String),
    #[error("{0}")]
    Usage(&'static str),
    #[error(transparent)]
    Core(#[from] braidforce_core::Error),
}

fn bad(token: &str, reason: &'static str) -> ParseError {
    ParseError::Token { token: token.to_owned(), reason }
}

/// Letters of one token, expanded by its exponent.
fn token_letters(token: &str, prefix: char) -> Result<Vec<Letter>, ParseError> {
    if let Ok(v) = token.parse::<i64>() {
        return Letter::from_signed(v).map(|l| vec![l]).ok_or_else(|| bad(token, "zero is not a generator"));
    }
    let body = token.strip_prefix(prefix).ok_or_else(|| bad(token, "unknown generator"))?;
    let (index, exp) = match body.split_once('^') {
        Some((i, e)) => (i, e.parse::<i64>().map_err(|_| bad(token, "exponent is not an integer"))?),
        None => (body, 1),
    };
    let index: u32 = index.parse().map_err(|_| bad(token, "index is not a positive integer"))?;
    if index == 0 {
        return Err(bad(token, "indices start at 1"));
    }
    let letter = if exp < 0 { Letter::neg(index) } else { Letter::pos(index) };
    let count = usize::try_from(exp.unsigned_abs()).map_err(|_| bad(token, "exponent too large"))?;
    Ok(vec![letter; count])
}

fn letters(s: &str, prefix: char) -> Result<Vec<Letter>, ParseError> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    if tokens == ["e"] {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for t in tokens {
        out.extend(token_letters(t, prefix)?);
    }
    Ok(out)
}

/// Parses and freely reduces a word in `F_rank`.
pub fn parse_word(rank: usize, s: &str) -> Result<FreeWord, ParseError> {
    Ok(FreeWord::reduce(rank, letters(s, 'x')?)?)
}

pub fn parse_braid(strands: usize, s: &str) -> Result<BraidWord, ParseError> {
    Ok(BraidWord::new(strands, letters(s, 's')?)?)
}

/// Parses `(<braid> ; <word>)` over `n` punctures, or a plain word on
/// `n + 1` strands that fixes the last strand.
pub fn parse_aug(n: usize, s: &str) -> Result<AugBraid, ParseError> {
    let trimmed = s.trim();
    if let Some(inner) = trimmed.strip_prefix('(') {
        let inner = inner.strip_suffix(')').ok_or_else(|| ParseError::AugForm(s.to_owned()))?;
        let (b, w) = inner.split_once(';').ok_or_else(|| ParseError::AugForm(s.to_owned()))?;
        return Ok(AugBraid::new(parse_braid(n, b)?, parse_word(n, w)?)?);
    }
    let w = parse_braid(n + 1, trimmed)?;
    if !w.fixes_last_strand() {
        return Err(ParseError::NotAugmented(s.to_owned()));
    }
    Ok(AugBraid::from_word(&w)?)
}
