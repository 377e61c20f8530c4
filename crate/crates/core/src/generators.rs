//! The standard Dehn twists `a_i`, `b_i`, `w_i` and words in them.

use std::fmt;
use std::str::FromStr;

use crate::endo::{Alphabet, Endo, MappingClass};
use crate::error::{Error, Result};
use crate::word::{relator, GenSymbol, Sign, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DehnKind {
    A,
    B,
    W,
}

impl DehnKind {
    pub fn letter(self) -> char {
        match self {
            DehnKind::A => 'a',
            DehnKind::B => 'b',
            DehnKind::W => 'w',
        }
    }

    /// Largest valid index at genus `g`.
    pub fn max_index(self, genus: usize) -> usize {
        match self {
            DehnKind::A | DehnKind::B => genus,
            DehnKind::W => genus.saturating_sub(1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct McgGenerator {
    pub kind: DehnKind,
    pub index: usize,
    pub sign: Sign,
}

impl McgGenerator {
    pub fn new(kind: DehnKind, index: usize) -> Self {
        McgGenerator {
            kind,
            index,
            sign: Sign::Plus,
        }
    }

    pub fn a(index: usize) -> Self {
        McgGenerator::new(DehnKind::A, index)
    }

    pub fn b(index: usize) -> Self {
        McgGenerator::new(DehnKind::B, index)
    }

    pub fn w(index: usize) -> Self {
        McgGenerator::new(DehnKind::W, index)
    }

    pub fn inverse(self) -> Self {
        McgGenerator {
            sign: self.sign.flip(),
            ..self
        }
    }

    fn cancels(self, other: McgGenerator) -> bool {
        self.kind == other.kind && self.index == other.index && self.sign != other.sign
    }

    /// The mapping class of this twist (or its inverse) at genus `g`.
    pub fn mapping_class(self, genus: usize) -> Result<MappingClass> {
        let twist = match self.kind {
            DehnKind::A => dehn_a(self.index, genus)?,
            DehnKind::B => dehn_b(self.index, genus)?,
            DehnKind::W => dehn_w(self.index, genus)?,
        };
        Ok(match self.sign {
            Sign::Plus => twist,
            Sign::Minus => twist.inverse(),
        })
    }
}

impl fmt::Display for McgGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.index)?;
        if self.sign == Sign::Minus {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A freely reduced word in the Dehn twist generators. Reduction here is
/// purely syntactic; it knows nothing about relations in the group.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct McgWord(Vec<McgGenerator>);

impl McgWord {
    pub fn new<I: IntoIterator<Item = McgGenerator>>(letters: I) -> Self {
        let mut out: Vec<McgGenerator> = Vec::new();
        for letter in letters {
            match out.last() {
                Some(&last) if last.cancels(letter) => {
                    out.pop();
                }
                _ => out.push(letter),
            }
        }
        McgWord(out)
    }

    pub fn letters(&self) -> &[McgGenerator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &McgWord) -> McgWord {
        McgWord::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn inverse(&self) -> McgWord {
        McgWord(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    pub fn pow(&self, n: i64) -> McgWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        McgWord::new((0..n.unsigned_abs()).flat_map(|_| base.0.iter().copied()))
    }
}

impl fmt::Display for McgWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, g) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for McgWord {
    type Err = Error;

    /// Accepts the expression syntax restricted to `a<k>`, `b<k>`, `w<k>`,
    /// parentheses and integer powers.
    fn from_str(text: &str) -> Result<McgWord> {
        crate::expr::parse_expression(text)?.to_mcg_word()
    }
}

fn check_genus(genus: usize) -> Result<()> {
    if genus < 1 {
        return Err(Error::InvalidGenus(genus));
    }
    Ok(())
}

fn check_index(kind: DehnKind, index: usize, genus: usize) -> Result<()> {
    check_genus(genus)?;
    if index < 1 || index > kind.max_index(genus) {
        return Err(Error::InvalidIndex(format!(
            "{}{index} is not a generator at genus {genus}",
            kind.letter()
        )));
    }
    Ok(())
}

fn certified(
    genus: usize,
    forward: &[(GenSymbol, Word)],
    inverse: &[(GenSymbol, Word)],
) -> Result<MappingClass> {
    let alphabet = Alphabet::Surface { genus };
    MappingClass::new(
        Endo::with_images(alphabet, forward)?,
        Endo::with_images(alphabet, inverse)?,
    )
}

/// `a_i: y_i -> y_i x_i^-1`.
pub fn dehn_a(index: usize, genus: usize) -> Result<MappingClass> {
    check_index(DehnKind::A, index, genus)?;
    let (x, y) = (Word::x(index), Word::y(index));
    certified(
        genus,
        &[(GenSymbol::y(index), y.concat(&x.inverse()))],
        &[(GenSymbol::y(index), y.concat(&x))],
    )
}

/// `b_i: x_i -> x_i y_i`.
pub fn dehn_b(index: usize, genus: usize) -> Result<MappingClass> {
    check_index(DehnKind::B, index, genus)?;
    let (x, y) = (Word::x(index), Word::y(index));
    certified(
        genus,
        &[(GenSymbol::x(index), x.concat(&y))],
        &[(GenSymbol::x(index), x.concat(&y.inverse()))],
    )
}

/// `z_i = x_i^-1 y_{i+1} x_{i+1} y_{i+1}^-1`.
pub fn w_curve(index: usize) -> Word {
    let (x, y_next, x_next) = (Word::x(index), Word::y(index + 1), Word::x(index + 1));
    x.inverse().concat(&x_next.conjugate_by(&y_next))
}

/// `w_i: x_i -> z_i^-1 y_{i+1} x_{i+1} y_{i+1}^-1, y_i -> y_i z_i,
/// y_{i+1} -> z_i^-1 y_{i+1}`.
///
/// `w_i` fixes `z_i` and sends `x_i` to `z_i^-1 x_i z_i`, so the inverse is
/// `x_i -> z_i x_i z_i^-1, y_i -> y_i z_i^-1, y_{i+1} -> z_i y_{i+1}`.
pub fn dehn_w(index: usize, genus: usize) -> Result<MappingClass> {
    check_index(DehnKind::W, index, genus)?;
    let z = w_curve(index);
    let z_inv = z.inverse();
    let (y, y_next) = (Word::y(index), Word::y(index + 1));
    let x_next_conj = Word::x(index + 1).conjugate_by(&y_next);
    certified(
        genus,
        &[
            (GenSymbol::x(index), z_inv.concat(&x_next_conj)),
            (GenSymbol::y(index), y.concat(&z)),
            (GenSymbol::y(index + 1), z_inv.concat(&y_next)),
        ],
        &[
            (GenSymbol::x(index), Word::x(index).conjugate_by(&z)),
            (GenSymbol::y(index), y.concat(&z_inv)),
            (GenSymbol::y(index + 1), z.concat(&y_next)),
        ],
    )
}

/// Every standard generator at genus `g`, in the order `a_1..a_g, b_1..b_g,
/// w_1..w_{g-1}`.
pub fn catalog(genus: usize) -> Vec<McgGenerator> {
    [DehnKind::A, DehnKind::B, DehnKind::W]
        .into_iter()
        .flat_map(|kind| (1..=kind.max_index(genus)).map(move |i| McgGenerator::new(kind, i)))
        .collect()
}

/// Left-to-right product: the leftmost letter acts first.
pub fn evaluate_mcg_word(word: &McgWord, genus: usize) -> Result<MappingClass> {
    check_genus(genus)?;
    word.letters()
        .iter()
        .try_fold(MappingClass::identity(genus)?, |acc, g| {
            acc.compose(&g.mapping_class(genus)?)
        })
}

pub fn preserves_relator(f: &Endo, genus: usize) -> bool {
    if f.alphabet() != (Alphabet::Surface { genus }) {
        return false;
    }
    match relator(genus) {
        Ok(r) => f.apply(&r).map(|image| image == r).unwrap_or(false),
        Err(_) => false,
    }
}
