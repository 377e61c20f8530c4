//! Reduced words in the surface generators `x1, y1, ..., xg, yg`.
//!
//! A [`Word`] is always freely reduced, so equality of words is equality of
//! group elements in the free group. The text format is a whitespace
//! separated list of tokens `x<k>`, `y<k>`, optionally followed by `^-1` (or
//! any nonzero power `^n`); the empty word is written `1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenKind {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_exponent(exponent: i64) -> Sign {
        if exponent < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

/// A generator `x_k` or `y_k` (1-based handle index) or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenSymbol {
    pub kind: GenKind,
    pub index: usize,
    pub sign: Sign,
}

impl GenSymbol {
    pub fn new(kind: GenKind, index: usize, sign: Sign) -> Result<Self> {
        if index == 0 {
            return Err(Error::InvalidIndex("generator indices start at 1".into()));
        }
        Ok(GenSymbol { kind, index, sign })
    }

    pub fn x(index: usize) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        GenSymbol {
            kind: GenKind::X,
            index,
            sign: Sign::Plus,
        }
    }

    pub fn y(index: usize) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        GenSymbol {
            kind: GenKind::Y,
            index,
            sign: Sign::Plus,
        }
    }

    pub fn inverse(self) -> Self {
        GenSymbol {
            sign: self.sign.flip(),
            ..self
        }
    }

    /// The positive generator underlying this letter.
    pub fn base(self) -> Self {
        GenSymbol {
            sign: Sign::Plus,
            ..self
        }
    }

    pub fn is_inverse_of(self, other: GenSymbol) -> bool {
        self.kind == other.kind && self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            GenKind::X => 'x',
            GenKind::Y => 'y',
        };
        write!(f, "{letter}{}", self.index)?;
        if self.sign == Sign::Minus {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(Vec<GenSymbol>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(symbol: GenSymbol) -> Self {
        Word(vec![symbol])
    }

    pub fn x(index: usize) -> Self {
        Word::letter(GenSymbol::x(index))
    }

    pub fn y(index: usize) -> Self {
        Word::letter(GenSymbol::y(index))
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = GenSymbol>>(letters: I) -> Self {
        let mut out: Vec<GenSymbol> = Vec::new();
        for letter in letters {
            match out.last() {
                Some(&last) if last.is_inverse_of(letter) => {
                    out.pop();
                }
                _ => out.push(letter),
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[GenSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        // Only the seam between the two reduced words can cancel.
        let mut out = self.0.clone();
        let mut rest = other.0.as_slice();
        while let (Some(&last), Some(&first)) = (out.last(), rest.first()) {
            if !last.is_inverse_of(first) {
                break;
            }
            out.pop();
            rest = &rest[1..];
        }
        out.extend_from_slice(rest);
        Word(out)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Word::identity(), |acc, _| acc.concat(&base))
    }

    /// The commutator `[u, v] = u v u^-1 v^-1`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse())
    }

    /// `u w u^-1`.
    pub fn conjugate_by(&self, u: &Word) -> Word {
        u.concat(self).concat(&u.inverse())
    }

    /// Adds `offset` to every handle index.
    pub fn shift(&self, offset: usize) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| GenSymbol {
                    index: l.index + offset,
                    ..*l
                })
                .collect(),
        )
    }

    /// Largest handle index occurring in the word (0 for the identity).
    pub fn max_index(&self) -> usize {
        self.0.iter().map(|l| l.index).max().unwrap_or(0)
    }

    pub fn parse(text: &str) -> Result<Word> {
        text.parse()
    }
}

/// `[y_i, x_i] [y_{i+1}, x_{i+1}] ... [y_j, x_j]`.
pub fn partial_relator(start: usize, end: usize) -> Result<Word> {
    if start < 1 || start > end {
        return Err(Error::InvalidRange { start, end });
    }
    Ok((start..=end).fold(Word::identity(), |acc, k| {
        acc.concat(&Word::commutator(&Word::y(k), &Word::x(k)))
    }))
}

/// The boundary word `R = [y_1, x_1] ... [y_g, x_g]` of the genus `g` surface.
pub fn relator(genus: usize) -> Result<Word> {
    if genus < 1 {
        return Err(Error::InvalidGenus(genus));
    }
    partial_relator(1, genus)
}

/// `R_i = [y_i, x_i]`.
pub fn handle_relator(index: usize) -> Result<Word> {
    partial_relator(index, index)
}

impl FromIterator<GenSymbol> for Word {
    fn from_iter<I: IntoIterator<Item = GenSymbol>>(iter: I) -> Self {
        Word::reduce(iter)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, letter) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let position = offset + text[offset..].find(token).unwrap_or(0);
            offset = position + token.len();
            if token == "1" {
                continue;
            }
            let (symbol, exponent) = parse_letter_token(token, position)?;
            let letter = if exponent < 0 {
                symbol.inverse()
            } else {
                symbol
            };
            letters.extend(std::iter::repeat_n(
                letter,
                exponent.unsigned_abs() as usize,
            ));
        }
        Ok(Word::reduce(letters))
    }
}

fn parse_letter_token(token: &str, position: usize) -> Result<(GenSymbol, i64)> {
    let (head, exponent) = match token.split_once('^') {
        Some((head, power)) => {
            let exponent: i64 = power
                .parse()
                .map_err(|_| Error::parse(position, format!("bad exponent in `{token}`")))?;
            if exponent == 0 {
                return Err(Error::parse(
                    position,
                    format!("zero exponent in `{token}`"),
                ));
            }
            (head, exponent)
        }
        None => (token, 1),
    };
    let kind = match head.chars().next() {
        Some('x') => GenKind::X,
        Some('y') => GenKind::Y,
        _ => {
            return Err(Error::parse(
                position,
                format!("expected x<k> or y<k>, got `{token}`"),
            ))
        }
    };
    let index: usize = head[1..]
        .parse()
        .map_err(|_| Error::parse(position, format!("bad generator index in `{token}`")))?;
    let symbol = GenSymbol::new(kind, index, Sign::Plus).map_err(|_| {
        Error::parse(
            position,
            format!("generator indices start at 1, got `{token}`"),
        )
    })?;
    Ok((symbol, exponent))
}
