//! Braid words, the Artin representation, and the two maps of the braid
//! group into the mapping class group: `phi` (sigma_i to beta_i) and the
//! Harer map (sigma_i to b_{(i+1)/2} or w_{i/2}).

use std::fmt;

use crate::braidings::beta_local;
use crate::endo::{Alphabet, Automorphism, Endo, MappingClass};
use crate::error::{Error, Result};
use crate::generators::{dehn_b, dehn_w};
use crate::report::{CheckResult, Report};
use crate::word::{GenSymbol, Sign, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    pub index: usize,
    pub sign: Sign,
}

impl BraidLetter {
    pub fn sigma(index: usize) -> Self {
        BraidLetter {
            index,
            sign: Sign::Plus,
        }
    }

    pub fn inverse(self) -> Self {
        BraidLetter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.index)?;
        if self.sign == Sign::Minus {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A freely reduced word in the standard generators of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new<I: IntoIterator<Item = BraidLetter>>(strands: usize, letters: I) -> Result<Self> {
        if strands < 1 {
            return Err(Error::InvalidRange {
                start: 1,
                end: strands,
            });
        }
        let mut out: Vec<BraidLetter> = Vec::new();
        for letter in letters {
            if letter.index < 1 || letter.index >= strands {
                return Err(Error::InvalidIndex(format!(
                    "s{} is not a generator of B_{strands}",
                    letter.index
                )));
            }
            match out.last() {
                Some(&last) if last == letter.inverse() => {
                    out.pop();
                }
                _ => out.push(letter),
            }
        }
        Ok(BraidWord {
            strands,
            letters: out,
        })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        BraidWord::new(strands, [])
    }

    /// Parses `s<k>` tokens with optional `^n` powers; `1` is the identity.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        crate::expr::parse_expression(text)?.to_braid_word(strands)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        let strands = self.strands.max(other.strands);
        BraidWord::new(strands, self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> BraidWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let letters = (0..n.unsigned_abs()).flat_map(|_| base.letters.iter().copied());
        BraidWord::new(self.strands, letters).expect("letters already valid")
    }

    /// Same letters viewed in `B_m` for `m >= n`.
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.iter().copied())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `sigma_{r,s} = (s_r ... s_1)(s_{r+1} ... s_2) ... (s_{r+s-1} ... s_s)` on
/// `r + s` strands.
pub fn sigma_rs(front: usize, rear: usize) -> Result<BraidWord> {
    if front < 1 || rear < 1 {
        return Err(Error::InvalidRange {
            start: front.min(rear),
            end: front.max(rear),
        });
    }
    let letters = crate::braidings::braiding_factors(front, rear)
        .into_iter()
        .map(BraidLetter::sigma);
    BraidWord::new(front + rear, letters)
}

/// `x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i` on the free group of rank `n`.
fn artin_generator(letter: BraidLetter, rank: usize) -> Automorphism {
    let i = letter.index;
    let alphabet = Alphabet::Free { rank };
    let (xi, xj) = (Word::x(i), Word::x(i + 1));
    let forward = Endo::with_images(
        alphabet,
        &[
            (GenSymbol::x(i), xj.conjugate_by(&xi)),
            (GenSymbol::x(i + 1), xi.clone()),
        ],
    )
    .expect("index checked by BraidWord");
    let inverse = Endo::with_images(
        alphabet,
        &[
            (GenSymbol::x(i), xj.clone()),
            (GenSymbol::x(i + 1), xi.conjugate_by(&xj.inverse())),
        ],
    )
    .expect("index checked by BraidWord");
    let auto = Automorphism::from_parts(forward, inverse);
    match letter.sign {
        Sign::Plus => auto,
        Sign::Minus => auto.inverse(),
    }
}

/// The Artin action of a braid on the free group of rank `n` (the number of
/// strands), leftmost letter acting first.
pub fn artin(braid: &BraidWord) -> Automorphism {
    let rank = braid.strands();
    braid.letters().iter().fold(
        Automorphism::identity(Alphabet::Free { rank }),
        |acc, &l| acc.compose(&artin_generator(l, rank)).expect("same rank"),
    )
}

fn check_strands(braid: &BraidWord, needed_genus: usize, genus: usize) -> Result<()> {
    if genus < 1 {
        return Err(Error::InvalidGenus(genus));
    }
    if needed_genus > genus {
        return Err(Error::InvalidIndex(format!(
            "braid on {} strands needs genus {needed_genus}, got {genus}",
            braid.strands()
        )));
    }
    Ok(())
}

/// `sigma_i -> beta_i`, at genus `g >= n`.
pub fn phi(braid: &BraidWord, genus: usize) -> Result<MappingClass> {
    check_strands(braid, braid.strands(), genus)?;
    phi_with(braid, genus, beta_local)
}

/// `phi` with the local braidings supplied by `beta`.
pub(crate) fn phi_with<F>(braid: &BraidWord, genus: usize, mut beta: F) -> Result<MappingClass>
where
    F: FnMut(usize, usize) -> Result<MappingClass>,
{
    let mut cache: Vec<Option<MappingClass>> = vec![None; genus];
    let mut acc = MappingClass::identity(genus)?;
    for letter in braid.letters() {
        let slot = &mut cache[letter.index];
        if slot.is_none() {
            *slot = Some(beta(letter.index, genus)?);
        }
        let factor = slot.as_ref().expect("filled above");
        acc = match letter.sign {
            Sign::Plus => acc.compose(factor)?,
            Sign::Minus => acc.compose(&factor.inverse())?,
        };
    }
    Ok(acc)
}

/// `sigma_i -> b_{(i+1)/2}` for odd `i`, `w_{i/2}` for even `i`.
pub fn harer(braid: &BraidWord, genus: usize) -> Result<MappingClass> {
    let needed = braid
        .letters()
        .iter()
        .map(|l| {
            if l.index % 2 == 1 {
                l.index.div_ceil(2)
            } else {
                l.index / 2 + 1
            }
        })
        .max()
        .unwrap_or(1);
    check_strands(braid, needed, genus)?;
    braid
        .letters()
        .iter()
        .try_fold(MappingClass::identity(genus)?, |acc, l| {
            let twist = if l.index % 2 == 1 {
                dehn_b(l.index.div_ceil(2), genus)?
            } else {
                dehn_w(l.index / 2, genus)?
            };
            acc.compose(&match l.sign {
                Sign::Plus => twist,
                Sign::Minus => twist.inverse(),
            })
        })
}

/// All freely reduced braid words of length at most `max_len` on `strands`
/// strands, shortest first.
pub fn enumerate_reduced(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let alphabet: Vec<BraidLetter> = (1..strands)
        .flat_map(|i| [BraidLetter::sigma(i), BraidLetter::sigma(i).inverse()])
        .collect();
    let mut layer: Vec<Vec<BraidLetter>> = vec![Vec::new()];
    let mut all = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for word in &layer {
            for &l in &alphabet {
                if word.last() == Some(&l.inverse()) {
                    continue;
                }
                let mut longer = word.clone();
                longer.push(l);
                next.push(longer);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.into_iter()
        .map(|letters| BraidWord { strands, letters })
        .collect()
}

/// Bounded evidence for the injectivity of `phi`: every reduced word whose
/// Artin image is nontrivial (hence nontrivial in `B_n`) must have a
/// nontrivial image at genus `n`.
pub fn injectivity_smoke(strands: usize, max_len: usize) -> Result<Report> {
    injectivity_smoke_with(strands, max_len, beta_local)
}

pub(crate) fn injectivity_smoke_with<F>(
    strands: usize,
    max_len: usize,
    mut beta: F,
) -> Result<Report>
where
    F: FnMut(usize, usize) -> Result<MappingClass>,
{
    if strands < 2 || max_len < 1 {
        return Err(Error::InvalidRange {
            start: 2,
            end: strands.min(max_len + 1),
        });
    }
    let genus = strands;
    let betas = (1..strands)
        .map(|i| beta(i, genus))
        .collect::<Result<Vec<_>>>()?;
    let mut nontrivial = 0;
    let mut trivial = 0;
    let mut violations = Vec::new();
    let mut inconsistent = Vec::new();
    let words = enumerate_reduced(strands, max_len);
    for word in words.iter().filter(|w| !w.is_empty()) {
        let image = phi_with(word, genus, |i, _| Ok(betas[i - 1].clone()))?;
        if artin(word).is_identity() {
            trivial += 1;
            if !image.is_identity() {
                inconsistent.push(word.to_string());
            }
        } else {
            nontrivial += 1;
            if image.is_identity() {
                violations.push(word.to_string());
            }
        }
    }
    let params = [("n", strands.to_string()), ("L", max_len.to_string())];
    let shown = |v: &[String]| v.iter().take(5).cloned().collect::<Vec<_>>().join("; ");
    let smoke = CheckResult::new(
        "phi_injectivity_smoke",
        &params,
        "phi is injective because the Artin representation is",
        violations.is_empty(),
        Some(format!(
            "{} words with trivial phi image: {}",
            violations.len(),
            shown(&violations)
        )),
    )
    .with_evidence(format!(
        "{} reduced words, {} Artin-nontrivial, {} Artin-trivial, 0 violations",
        words.len() - 1,
        nontrivial,
        trivial
    ));
    let consistent = CheckResult::new(
        "phi_trivial_on_artin_trivial",
        &params,
        "phi is a homomorphism of the braid group",
        inconsistent.is_empty(),
        Some(format!(
            "{} Artin-trivial words with nontrivial phi image: {}",
            inconsistent.len(),
            shown(&inconsistent)
        )),
    );
    Ok(Report::new(
        format!("injectivity smoke B_{strands}, length <= {max_len}"),
        crate::CONVENTION,
        vec![smoke, consistent],
    ))
}
