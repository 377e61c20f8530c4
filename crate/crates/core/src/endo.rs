//! Endomorphisms of free groups stored as generator image tables.
//!
//! The action is on the right: in a product `f h` the factor `f` acts first,
//! so `compose(f, h)` sends a word `w` to `apply(apply(w, f), h)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{relator, GenKind, GenSymbol, Sign, Word};

/// The generating set an [`Endo`] acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `x1, y1, ..., xg, yg`: the fundamental group of the genus `g` surface
    /// with one boundary component.
    Surface { genus: usize },
    /// `x1, ..., xn`: the free group acted on by the braid group.
    Free { rank: usize },
}

impl Alphabet {
    pub fn size(self) -> usize {
        match self {
            Alphabet::Surface { genus } => 2 * genus,
            Alphabet::Free { rank } => rank,
        }
    }

    /// Number of handle indices (genus, or rank for the free alphabet).
    pub fn handles(self) -> usize {
        match self {
            Alphabet::Surface { genus } => genus,
            Alphabet::Free { rank } => rank,
        }
    }

    fn with_handles(self, handles: usize) -> Alphabet {
        match self {
            Alphabet::Surface { .. } => Alphabet::Surface { genus: handles },
            Alphabet::Free { .. } => Alphabet::Free { rank: handles },
        }
    }

    pub fn position(self, letter: GenSymbol) -> Option<usize> {
        if letter.index == 0 || letter.index > self.handles() {
            return None;
        }
        match (self, letter.kind) {
            (Alphabet::Surface { .. }, GenKind::X) => Some(2 * (letter.index - 1)),
            (Alphabet::Surface { .. }, GenKind::Y) => Some(2 * (letter.index - 1) + 1),
            (Alphabet::Free { .. }, GenKind::X) => Some(letter.index - 1),
            (Alphabet::Free { .. }, GenKind::Y) => None,
        }
    }

    pub fn generator(self, position: usize) -> GenSymbol {
        match self {
            Alphabet::Surface { .. } if position.is_multiple_of(2) => {
                GenSymbol::x(position / 2 + 1)
            }
            Alphabet::Surface { .. } => GenSymbol::y(position / 2 + 1),
            Alphabet::Free { .. } => GenSymbol::x(position + 1),
        }
    }

    pub fn generators(self) -> impl Iterator<Item = GenSymbol> {
        (0..self.size()).map(move |p| self.generator(p))
    }

    pub fn contains_word(self, word: &Word) -> bool {
        word.letters().iter().all(|&l| self.position(l).is_some())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::Surface { genus } => write!(f, "surface genus {genus}"),
            Alphabet::Free { rank } => write!(f, "free rank {rank}"),
        }
    }
}

/// An endomorphism given by the images of the generators, in alphabet order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Endo {
    alphabet: Alphabet,
    images: Vec<Word>,
}

/// Where two endomorphisms first disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Difference {
    pub generator: GenSymbol,
    pub left: Word,
    pub right: Word,
}

impl fmt::Display for Difference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} vs {}", self.generator, self.left, self.right)
    }
}

impl Endo {
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.size() {
            return Err(Error::RankMismatch(format!(
                "{alphabet} needs {} images, got {}",
                alphabet.size(),
                images.len()
            )));
        }
        if let Some(bad) = images.iter().find(|w| !alphabet.contains_word(w)) {
            return Err(Error::RankMismatch(format!(
                "image `{bad}` leaves the {alphabet}"
            )));
        }
        Ok(Endo { alphabet, images })
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = alphabet.generators().map(Word::letter).collect();
        Endo { alphabet, images }
    }

    /// The identity of the genus `g` surface group.
    pub fn surface_identity(genus: usize) -> Result<Self> {
        if genus < 1 {
            return Err(Error::InvalidGenus(genus));
        }
        Ok(Endo::identity(Alphabet::Surface { genus }))
    }

    /// Identity except for the listed generator images.
    pub fn with_images(alphabet: Alphabet, changes: &[(GenSymbol, Word)]) -> Result<Self> {
        let mut images: Vec<Word> = alphabet.generators().map(Word::letter).collect();
        for (generator, image) in changes {
            let slot = alphabet
                .position(*generator)
                .filter(|_| generator.sign == Sign::Plus)
                .ok_or_else(|| {
                    Error::RankMismatch(format!("{generator} is not a generator of the {alphabet}"))
                })?;
            images[slot] = image.clone();
        }
        Endo::new(alphabet, images)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Genus for a surface endomorphism, rank for a free one.
    pub fn genus(&self) -> usize {
        self.alphabet.handles()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, generator: GenSymbol) -> Option<&Word> {
        self.alphabet.position(generator).map(|p| &self.images[p])
    }

    pub fn apply(&self, word: &Word) -> Result<Word> {
        let mut letters = Vec::with_capacity(word.len() * 4);
        for &letter in word.letters() {
            let slot = self.alphabet.position(letter).ok_or_else(|| {
                Error::RankMismatch(format!("letter {letter} is outside the {}", self.alphabet))
            })?;
            let image = self.images[slot].letters();
            match letter.sign {
                Sign::Plus => letters.extend_from_slice(image),
                Sign::Minus => letters.extend(image.iter().rev().map(|l| l.inverse())),
            }
        }
        Ok(Word::reduce(letters))
    }

    /// `self` acts first, then `then`.
    pub fn compose(&self, then: &Endo) -> Result<Endo> {
        if self.alphabet != then.alphabet {
            return Err(Error::RankMismatch(format!(
                "cannot compose {} with {}",
                self.alphabet, then.alphabet
            )));
        }
        let images = self
            .images
            .iter()
            .map(|image| then.apply(image))
            .collect::<Result<Vec<_>>>()?;
        Ok(Endo {
            alphabet: self.alphabet,
            images,
        })
    }

    /// Acts as `self` on the first block of handles and as `other`, with
    /// indices shifted past them, on the second.
    pub fn free_product(&self, other: &Endo) -> Result<Endo> {
        let alphabet = match (self.alphabet, other.alphabet) {
            (Alphabet::Surface { genus: a }, Alphabet::Surface { genus: b }) => {
                Alphabet::Surface { genus: a + b }
            }
            (Alphabet::Free { rank: a }, Alphabet::Free { rank: b }) => {
                Alphabet::Free { rank: a + b }
            }
            (a, b) => return Err(Error::RankMismatch(format!("free product of {a} and {b}"))),
        };
        let offset = self.alphabet.handles();
        let images = self
            .images
            .iter()
            .cloned()
            .chain(other.images.iter().map(|w| w.shift(offset)))
            .collect();
        Ok(Endo { alphabet, images })
    }

    /// Reinterprets the table at a larger genus, fixing the new generators.
    pub fn stabilize(&self, handles: usize) -> Result<Endo> {
        if handles < self.genus() {
            return Err(Error::RankMismatch(format!(
                "cannot stabilize from {} to {handles} handles",
                self.genus()
            )));
        }
        let extra = Endo::identity(self.alphabet.with_handles(handles - self.genus()));
        if extra.images.is_empty() {
            return Ok(self.clone());
        }
        self.free_product(&extra)
    }

    pub fn is_identity(&self) -> bool {
        self.alphabet
            .generators()
            .zip(&self.images)
            .all(|(g, image)| image.letters() == [g])
    }

    /// Every generator on which the two tables disagree, in alphabet order.
    pub fn differences(&self, other: &Endo) -> Vec<Difference> {
        if self.alphabet != other.alphabet {
            return Vec::new();
        }
        self.alphabet
            .generators()
            .zip(self.images.iter().zip(&other.images))
            .filter(|(_, (l, r))| l != r)
            .map(|(generator, (l, r))| Difference {
                generator,
                left: l.clone(),
                right: r.clone(),
            })
            .collect()
    }

    pub fn first_difference(&self, other: &Endo) -> Option<Difference> {
        self.differences(other).into_iter().next()
    }
}

/// Letterwise equality of reduced image tables.
pub fn endo_equal(f: &Endo, h: &Endo) -> bool {
    f == h
}

/// True when `f` and `h` are mutually inverse.
pub fn verify_inverse(f: &Endo, h: &Endo) -> bool {
    if f.alphabet != h.alphabet {
        return false;
    }
    match (f.compose(h), h.compose(f)) {
        (Ok(fh), Ok(hf)) => fh.is_identity() && hf.is_identity(),
        _ => false,
    }
}

impl fmt::Display for Endo {
    /// Fixture format: a `genus`/`rank` header line, then one `gen -> image`
    /// line per generator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alphabet {
            Alphabet::Surface { genus } => writeln!(f, "genus {genus}")?,
            Alphabet::Free { rank } => writeln!(f, "rank {rank}")?,
        }
        for (generator, image) in self.alphabet.generators().zip(&self.images) {
            writeln!(f, "{generator} -> {image}")?;
        }
        Ok(())
    }
}

impl FromStr for Endo {
    type Err = Error;

    fn from_str(text: &str) -> Result<Endo> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::parse(0, "missing genus header"))?;
        let alphabet = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["genus", n] => Alphabet::Surface {
                genus: n.parse().map_err(|_| Error::parse(0, "bad genus"))?,
            },
            ["rank", n] => Alphabet::Free {
                rank: n.parse().map_err(|_| Error::parse(0, "bad rank"))?,
            },
            [n] => Alphabet::Surface {
                genus: n.parse().map_err(|_| Error::parse(0, "bad genus"))?,
            },
            _ => return Err(Error::parse(0, format!("bad header `{header}`"))),
        };
        if alphabet.handles() == 0 {
            return Err(Error::InvalidGenus(0));
        }
        let mut images: Vec<Option<Word>> = vec![None; alphabet.size()];
        for (n, line) in lines.enumerate() {
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| {
                Error::parse(n + 1, format!("expected `gen -> word`, got `{line}`"))
            })?;
            let generator = Word::parse(lhs.trim())?;
            let slot = match generator.letters() {
                [g] if g.sign == Sign::Plus => alphabet.position(*g),
                _ => None,
            }
            .ok_or_else(|| Error::parse(n + 1, format!("`{}` is not a generator", lhs.trim())))?;
            if images[slot].is_some() {
                return Err(Error::parse(
                    n + 1,
                    format!("duplicate line for {}", lhs.trim()),
                ));
            }
            images[slot] = Some(Word::parse(rhs.trim())?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(p, w)| {
                w.ok_or_else(|| {
                    Error::parse(0, format!("missing image of {}", alphabet.generator(p)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Endo::new(alphabet, images)
    }
}

/// An invertible endomorphism together with a certified inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    forward: Endo,
    inverse: Endo,
}

impl Automorphism {
    /// Certifies `inverse` against `forward` with [`verify_inverse`].
    pub fn new(forward: Endo, inverse: Endo) -> Result<Self> {
        if !verify_inverse(&forward, &inverse) {
            return Err(Error::Certification(
                "stated inverse does not invert the map".into(),
            ));
        }
        Ok(Automorphism { forward, inverse })
    }

    pub(crate) fn from_parts(forward: Endo, inverse: Endo) -> Self {
        debug_assert_eq!(forward.alphabet, inverse.alphabet);
        Automorphism { forward, inverse }
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let id = Endo::identity(alphabet);
        Automorphism {
            forward: id.clone(),
            inverse: id,
        }
    }

    pub fn endo(&self) -> &Endo {
        &self.forward
    }

    pub fn inverse_endo(&self) -> &Endo {
        &self.inverse
    }

    pub fn alphabet(&self) -> Alphabet {
        self.forward.alphabet
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    pub fn apply(&self, word: &Word) -> Result<Word> {
        self.forward.apply(word)
    }

    /// `self` acts first.
    pub fn compose(&self, then: &Automorphism) -> Result<Automorphism> {
        Ok(Automorphism {
            forward: self.forward.compose(&then.forward)?,
            inverse: then.inverse.compose(&self.inverse)?,
        })
    }

    pub fn pow(&self, n: i64) -> Automorphism {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Automorphism::identity(self.alphabet()), |acc, _| {
            acc.compose(&base).expect("same alphabet")
        })
    }

    pub fn free_product(&self, other: &Automorphism) -> Result<Automorphism> {
        Ok(Automorphism {
            forward: self.forward.free_product(&other.forward)?,
            inverse: self.inverse.free_product(&other.inverse)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.forward.is_identity()
    }
}

/// An automorphism of the surface group that fixes the boundary word
/// `R = [y1,x1]...[yg,xg]`, with its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MappingClass(Automorphism);

impl MappingClass {
    /// Certifies invertibility and preservation of the boundary word.
    pub fn new(forward: Endo, inverse: Endo) -> Result<Self> {
        MappingClass::from_automorphism(Automorphism::new(forward, inverse)?)
    }

    pub fn from_automorphism(auto: Automorphism) -> Result<Self> {
        let genus = match auto.alphabet() {
            Alphabet::Surface { genus } => genus,
            other => {
                return Err(Error::RankMismatch(format!(
                    "mapping classes act on surface groups, not the {other}"
                )))
            }
        };
        let r = relator(genus)?;
        if auto.forward.apply(&r)? != r {
            return Err(Error::Certification(format!(
                "map does not fix the boundary word at genus {genus}"
            )));
        }
        Ok(MappingClass(auto))
    }

    pub fn identity(genus: usize) -> Result<Self> {
        if genus < 1 {
            return Err(Error::InvalidGenus(genus));
        }
        Ok(MappingClass(Automorphism::identity(Alphabet::Surface {
            genus,
        })))
    }

    pub fn genus(&self) -> usize {
        self.0.forward.genus()
    }

    pub fn endo(&self) -> &Endo {
        &self.0.forward
    }

    pub fn inverse_endo(&self) -> &Endo {
        &self.0.inverse
    }

    pub fn automorphism(&self) -> &Automorphism {
        &self.0
    }

    pub fn into_automorphism(self) -> Automorphism {
        self.0
    }

    pub fn apply(&self, word: &Word) -> Result<Word> {
        self.0.apply(word)
    }

    pub fn image(&self, generator: GenSymbol) -> &Word {
        self.0
            .forward
            .image(generator)
            .expect("generator within genus")
    }

    pub fn inverse(&self) -> MappingClass {
        MappingClass(self.0.inverse())
    }

    /// `self` acts first.
    pub fn compose(&self, then: &MappingClass) -> Result<MappingClass> {
        if self.genus() != then.genus() {
            return Err(Error::RankMismatch(format!(
                "cannot compose genus {} with genus {}",
                self.genus(),
                then.genus()
            )));
        }
        Ok(MappingClass(self.0.compose(&then.0)?))
    }

    pub fn pow(&self, n: i64) -> MappingClass {
        MappingClass(self.0.pow(n))
    }

    /// Left-to-right product of a nonempty sequence at a common genus.
    pub fn product<'a, I>(genus: usize, factors: I) -> Result<MappingClass>
    where
        I: IntoIterator<Item = &'a MappingClass>,
    {
        factors
            .into_iter()
            .try_fold(MappingClass::identity(genus)?, |acc, f| acc.compose(f))
    }

    /// The monoidal product: `self` on handles `1..=g`, `other` on the next
    /// `k` handles.
    pub fn free_product(&self, other: &MappingClass) -> MappingClass {
        MappingClass(self.0.free_product(&other.0).expect("surface alphabets"))
    }

    pub fn stabilize(&self, genus: usize) -> Result<MappingClass> {
        if genus == self.genus() {
            return Ok(self.clone());
        }
        Ok(self.free_product(&MappingClass::identity(genus.saturating_sub(self.genus()))?))
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn first_difference(&self, other: &MappingClass) -> Option<Difference> {
        self.endo().first_difference(other.endo())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn surface(genus: usize, changes: &[(&str, &str)]) -> Endo {
        let alphabet = Alphabet::Surface { genus };
        let changes: Vec<_> = changes
            .iter()
            .map(|(g, image)| (w(g).letters()[0], w(image)))
            .collect();
        Endo::with_images(alphabet, &changes).unwrap()
    }

    #[test]
    fn identity_tables() {
        let id1 = Endo::surface_identity(1).unwrap();
        assert_eq!(id1.images(), &[w("x1"), w("y1")]);
        assert_eq!(Endo::surface_identity(2).unwrap().images().len(), 4);
        assert_eq!(Endo::surface_identity(0), Err(Error::InvalidGenus(0)));
    }

    #[test]
    fn apply_substitutes_and_reduces() {
        let a1 = surface(2, &[("y1", "y1 x1^-1")]);
        assert_eq!(a1.apply(&w("y1")).unwrap(), w("y1 x1^-1"));
        assert_eq!(a1.apply(&w("x2")).unwrap(), w("x2"));
        assert_eq!(a1.apply(&w("y1^-1")).unwrap(), w("x1 y1^-1"));
        let a1g1 = surface(1, &[("y1", "y1 x1^-1")]);
        let r = relator(1).unwrap();
        assert_eq!(a1g1.apply(&r).unwrap(), r);
        assert!(matches!(a1g1.apply(&w("x2")), Err(Error::RankMismatch(_))));
    }

    #[test]
    fn compose_acts_left_to_right() {
        let a1 = surface(2, &[("y1", "y1 x1^-1")]);
        let b1 = surface(2, &[("x1", "x1 y1")]);
        let ab = a1.compose(&b1).unwrap();
        // y1 -> y1 x1^-1 -> (y1)(x1 y1)^-1 = y1 y1^-1 x1^-1 = x1^-1.
        let oracle = b1.apply(&a1.apply(&w("y1")).unwrap()).unwrap();
        assert_eq!(ab.apply(&w("y1")).unwrap(), oracle);
        assert_eq!(oracle, w("x1^-1"));
        assert_eq!(a1.compose(&Endo::surface_identity(2).unwrap()).unwrap(), a1);
        assert!(a1.compose(&Endo::surface_identity(3).unwrap()).is_err());
    }

    #[test]
    fn inverse_certification() {
        let id = Endo::surface_identity(1).unwrap();
        assert!(verify_inverse(&id, &id));
        let a1 = surface(1, &[("y1", "y1 x1^-1")]);
        let a1_inv = surface(1, &[("y1", "y1 x1")]);
        assert!(verify_inverse(&a1, &a1_inv));
        assert!(!verify_inverse(&a1, &a1));
        assert!(endo_equal(&id, &id));
        assert!(!endo_equal(&a1, &surface(1, &[("x1", "x1 y1")])));
    }

    #[test]
    fn free_product_blocks() {
        let id1 = Endo::surface_identity(1).unwrap();
        assert_eq!(
            id1.free_product(&id1).unwrap(),
            Endo::surface_identity(2).unwrap()
        );
        let a1 = surface(1, &[("y1", "y1 x1^-1")]);
        let both = a1.free_product(&a1).unwrap();
        assert_eq!(both, surface(2, &[("y1", "y1 x1^-1"), ("y2", "y2 x2^-1")]));
        let left = a1.free_product(&id1).unwrap();
        for word in ["x1 y1", "y1^-1 x1 y1 y1"] {
            assert_eq!(left.apply(&w(word)).unwrap(), a1.apply(&w(word)).unwrap());
        }
    }

    #[test]
    fn fixture_round_trip() {
        let f = surface(2, &[("y1", "y1 x1^-1"), ("x2", "x2 y2")]);
        let text = f.to_string();
        assert!(text.starts_with("genus 2\nx1 -> x1\ny1 -> y1 x1^-1\n"));
        assert_eq!(text.parse::<Endo>().unwrap(), f);
        assert!("genus 1\nx1 -> x1\n".parse::<Endo>().is_err());
        assert!("genus 1\nx1 -> x1\ny1 -> y2\n".parse::<Endo>().is_err());
    }

    #[test]
    fn mapping_class_certification() {
        let a1 = surface(1, &[("y1", "y1 x1^-1")]);
        let a1_inv = surface(1, &[("y1", "y1 x1")]);
        assert!(MappingClass::new(a1.clone(), a1_inv.clone()).is_ok());
        assert!(matches!(
            MappingClass::new(a1.clone(), a1.clone()),
            Err(Error::Certification(_))
        ));
        // Invertible but moves the boundary word.
        let swap = surface(1, &[("x1", "y1"), ("y1", "x1")]);
        assert!(matches!(
            MappingClass::new(swap.clone(), swap),
            Err(Error::Certification(_))
        ));
    }

    #[test]
    fn differences_list_every_generator() {
        let f = surface(2, &[("x1", "x1 y1"), ("y2", "y2 x2")]);
        let id = Endo::surface_identity(2).unwrap();
        let diffs = f.differences(&id);
        assert_eq!(diffs.len(), 2);
        assert_eq!(diffs[0].generator, GenSymbol::x(1));
        assert_eq!(diffs[1].generator, GenSymbol::y(2));
        assert_eq!(diffs[0].to_string(), "x1: x1 y1 vs x1");
    }
}
