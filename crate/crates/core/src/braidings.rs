//! Braidings `beta_i` and `beta_{r,s}`, half Dehn twists along the catalog
//! curves, full twists, and the comparison of `beta_i` against the Dehn
//! twists supported in its pair of pants.
//!
//! Curves:
//!
//! * `Handle(i)` is `R_i = [y_i, x_i]`, the shoulder of the `i`-th handle.
//! * `Pair(i)` is `R_{i,i+1}`, the boundary of the genus two subsurface
//!   spanned by handles `i` and `i+1`.
//! * `Boundary` is `R`, the boundary of the whole surface.

use std::fmt;

use crate::endo::{Alphabet, Endo, MappingClass};
use crate::error::{Error, Result};
use crate::generators::{evaluate_mcg_word, McgGenerator, McgWord};
use crate::report::{CheckResult, Report};
use crate::word::{handle_relator, partial_relator, GenSymbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Curve {
    Handle(usize),
    Pair(usize),
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Reverse,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Reverse,
            Direction::Reverse => Direction::Forward,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfTwistName {
    pub curve: Curve,
    pub direction: Direction,
}

impl HalfTwistName {
    pub fn forward(curve: Curve) -> Self {
        HalfTwistName {
            curve,
            direction: Direction::Forward,
        }
    }

    pub fn reverse(curve: Curve) -> Self {
        HalfTwistName {
            curve,
            direction: Direction::Reverse,
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curve::Handle(i) => write!(f, "R{i}"),
            Curve::Pair(i) => write!(f, "R{{{},{}}}", i, i + 1),
            Curve::Boundary => f.write_str("R"),
        }
    }
}

impl fmt::Display for HalfTwistName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prime = if self.direction == Direction::Reverse {
            "'"
        } else {
            ""
        };
        match self.curve {
            Curve::Boundary => write!(f, "hR{prime}"),
            curve => write!(f, "h{prime}({curve})"),
        }
    }
}

fn check_pair_index(index: usize, genus: usize) -> Result<()> {
    if genus < 1 {
        return Err(Error::InvalidGenus(genus));
    }
    if index < 1 || index + 1 > genus {
        return Err(Error::InvalidIndex(format!(
            "pair index {index} needs 1 <= i <= g-1 at genus {genus}"
        )));
    }
    Ok(())
}

fn check_handle_index(index: usize, genus: usize) -> Result<()> {
    if genus < 1 {
        return Err(Error::InvalidGenus(genus));
    }
    if index < 1 || index > genus {
        return Err(Error::InvalidIndex(format!(
            "handle index {index} needs 1 <= i <= g at genus {genus}"
        )));
    }
    Ok(())
}

fn table(genus: usize, changes: Vec<(GenSymbol, Word)>) -> Result<Endo> {
    Endo::with_images(Alphabet::Surface { genus }, &changes)
}

/// Swaps the block of `front` handles starting after `offset` with the
/// following block of `rear` handles:
///
/// `x_{o+k} -> S x_{o+rear+k} S^-1` for `k <= front`, and
/// `x_{o+front+k} -> x_{o+k}` for `k <= rear`, likewise for `y`, where
/// `S = R_{o+1, o+rear}`. Zero-sized blocks give the identity.
fn block_braiding(offset: usize, front: usize, rear: usize, genus: usize) -> Result<MappingClass> {
    if offset + front + rear > genus {
        return Err(Error::InvalidIndex(format!(
            "blocks {front}+{rear} after offset {offset} exceed genus {genus}"
        )));
    }
    if front == 0 || rear == 0 {
        return MappingClass::identity(genus);
    }
    let swept = partial_relator(offset + 1, offset + rear)?;
    let returned = partial_relator(offset + front + 1, offset + front + rear)?;
    let mut forward = Vec::new();
    let mut inverse = Vec::new();
    for k in 1..=front {
        forward.push((
            GenSymbol::x(offset + k),
            Word::x(offset + rear + k).conjugate_by(&swept),
        ));
        forward.push((
            GenSymbol::y(offset + k),
            Word::y(offset + rear + k).conjugate_by(&swept),
        ));
        inverse.push((
            GenSymbol::x(offset + rear + k),
            Word::x(offset + k).conjugate_by(&returned.inverse()),
        ));
        inverse.push((
            GenSymbol::y(offset + rear + k),
            Word::y(offset + k).conjugate_by(&returned.inverse()),
        ));
    }
    for k in 1..=rear {
        forward.push((GenSymbol::x(offset + front + k), Word::x(offset + k)));
        forward.push((GenSymbol::y(offset + front + k), Word::y(offset + k)));
        inverse.push((GenSymbol::x(offset + k), Word::x(offset + front + k)));
        inverse.push((GenSymbol::y(offset + k), Word::y(offset + front + k)));
    }
    MappingClass::new(table(genus, forward)?, table(genus, inverse)?)
}

/// `(a_i b_i a_i)^4 (a_{i+1} b_{i+1} (a_i b_i a_i)^-1 w_i a_i b_i a_i^2 b_i)^-3`.
pub fn beta_twist_word(index: usize) -> McgWord {
    let (a, b) = (McgGenerator::a(index), McgGenerator::b(index));
    let aba = McgWord::new([a, b, a]);
    let inner = McgWord::new([McgGenerator::a(index + 1), McgGenerator::b(index + 1)])
        .concat(&aba.inverse())
        .concat(&McgWord::new([McgGenerator::w(index), a, b, a, a, b]));
    aba.pow(4).concat(&inner.pow(-3))
}

/// The local braiding `beta_i`:
/// `x_i -> R_i x_{i+1} R_i^-1, y_i -> R_i y_{i+1} R_i^-1, x_{i+1} -> x_i,
/// y_{i+1} -> y_i`.
///
/// The table is the returned value; the Dehn twist word
/// [`beta_twist_word`] is evaluated as well and must agree with it.
pub fn beta_local(index: usize, genus: usize) -> Result<MappingClass> {
    check_pair_index(index, genus)?;
    let direct = beta_table(index, genus)?;
    let from_twists = evaluate_mcg_word(&beta_twist_word(index), genus)?;
    if let Some(diff) = direct.first_difference(&from_twists) {
        return Err(Error::Certification(format!(
            "beta_{index} table disagrees with its Dehn twist word at genus {genus}: {diff}"
        )));
    }
    Ok(direct)
}

/// The `beta_i` action table alone, without the Dehn twist cross-check.
pub fn beta_table(index: usize, genus: usize) -> Result<MappingClass> {
    check_pair_index(index, genus)?;
    block_braiding(index - 1, 1, 1, genus)
}

/// Indices of the local braidings in
/// `(beta_r ... beta_1)(beta_{r+1} ... beta_2) ... (beta_{r+s-1} ... beta_s)`,
/// in order of application. Empty when either block is empty.
pub fn braiding_factors(front: usize, rear: usize) -> Vec<usize> {
    (0..rear)
        .flat_map(|block| (block + 1..=block + front).rev())
        .collect()
}

fn check_counts(front: usize, rear: usize) -> Result<()> {
    if front < 1 || rear < 1 {
        return Err(Error::InvalidRange {
            start: front.min(rear),
            end: front.max(rear),
        });
    }
    Ok(())
}

/// `beta_{r,s}` as the product of local braidings, at genus `r + s`.
pub fn beta_rs_product(front: usize, rear: usize) -> Result<MappingClass> {
    check_counts(front, rear)?;
    let genus = front + rear;
    let factors = braiding_factors(front, rear)
        .into_iter()
        .map(|i| beta_table(i, genus))
        .collect::<Result<Vec<_>>>()?;
    MappingClass::product(genus, &factors)
}

/// `beta_{r,s}` from its action: the front `r` handles move behind the rear
/// `s`, conjugated by `R_s = R_{1,s}`.
pub fn beta_rs_direct(front: usize, rear: usize) -> Result<MappingClass> {
    check_counts(front, rear)?;
    block_braiding(0, front, rear, front + rear)
}

/// `beta_{r,s}` allowing empty blocks, which give the identity at genus
/// `r + s` (`None` when both are empty).
pub fn braiding_with_unit(front: usize, rear: usize) -> Result<Option<MappingClass>> {
    if front + rear == 0 {
        return Ok(None);
    }
    block_braiding(0, front, rear, front + rear).map(Some)
}

fn handle_half_twist(index: usize, direction: Direction, genus: usize) -> Result<MappingClass> {
    check_handle_index(index, genus)?;
    let r = handle_relator(index)?;
    let (x, y) = (Word::x(index), Word::y(index));
    // forward: x -> R^-1 x^-1, y -> y^-1 R; reverse: x -> x^-1 R^-1, y -> R y^-1.
    let forward = table(
        genus,
        vec![
            (GenSymbol::x(index), r.inverse().concat(&x.inverse())),
            (GenSymbol::y(index), y.inverse().concat(&r)),
        ],
    )?;
    let reverse = table(
        genus,
        vec![
            (GenSymbol::x(index), x.inverse().concat(&r.inverse())),
            (GenSymbol::y(index), r.concat(&y.inverse())),
        ],
    )?;
    orient(forward, reverse, direction)
}

fn pair_half_twist(index: usize, direction: Direction, genus: usize) -> Result<MappingClass> {
    check_pair_index(index, genus)?;
    let (a, b) = (index, index + 1);
    let pair = partial_relator(a, b)?;
    let (ra, rb) = (handle_relator(a)?, handle_relator(b)?);
    let (xa, ya, xb, yb) = (Word::x(a), Word::y(a), Word::x(b), Word::y(b));
    let forward = table(
        genus,
        vec![
            (GenSymbol::x(a), rb.inverse().concat(&xb.inverse())),
            (GenSymbol::y(a), yb.inverse().concat(&rb)),
            (
                GenSymbol::x(b),
                pair.inverse().concat(&xa.inverse()).concat(&rb),
            ),
            (
                GenSymbol::y(b),
                rb.inverse().concat(&ya.inverse()).concat(&pair),
            ),
        ],
    )?;
    let reverse = table(
        genus,
        vec![
            (
                GenSymbol::x(a),
                ra.concat(&xb.inverse()).concat(&pair.inverse()),
            ),
            (
                GenSymbol::y(a),
                pair.concat(&yb.inverse()).concat(&ra.inverse()),
            ),
            (GenSymbol::x(b), xa.inverse().conjugate_by(&ya)),
            (GenSymbol::y(b), ra.concat(&ya.inverse())),
        ],
    )?;
    orient(forward, reverse, direction)
}

/// Reverse half twist along the boundary of the genus `g` surface: the half
/// turn `Delta_g = beta_1 (beta_2 beta_1) ... (beta_{g-1} ... beta_1)`
/// followed by the reverse half twist on every handle. Its square is
/// conjugation by `R`.
fn boundary_half_twist(direction: Direction, genus: usize) -> Result<MappingClass> {
    if genus < 1 {
        return Err(Error::InvalidGenus(genus));
    }
    if genus == 2 {
        return pair_half_twist(1, direction, genus);
    }
    let mut factors = Vec::new();
    for top in 1..genus {
        for i in (1..=top).rev() {
            factors.push(beta_table(i, genus)?);
        }
    }
    for i in 1..=genus {
        factors.push(handle_half_twist(i, Direction::Reverse, genus)?);
    }
    let reverse = MappingClass::product(genus, &factors)?;
    Ok(match direction {
        Direction::Reverse => reverse,
        Direction::Forward => reverse.inverse(),
    })
}

fn orient(forward: Endo, reverse: Endo, direction: Direction) -> Result<MappingClass> {
    match direction {
        Direction::Forward => MappingClass::new(forward, reverse),
        Direction::Reverse => MappingClass::new(reverse, forward),
    }
}

/// The half Dehn twist (forward) or reverse half Dehn twist along a catalog
/// curve.
pub fn half_twist(name: HalfTwistName, genus: usize) -> Result<MappingClass> {
    match name.curve {
        Curve::Handle(i) => handle_half_twist(i, name.direction, genus),
        Curve::Pair(i) => pair_half_twist(i, name.direction, genus),
        Curve::Boundary => boundary_half_twist(name.direction, genus),
    }
}

/// Half twists on both arms of the genus two surface, `h_{R1} h_{R2}`.
pub fn arms_twist(genus: usize, direction: Direction) -> Result<MappingClass> {
    if genus != 2 {
        return Err(Error::InvalidGenus(genus));
    }
    half_twist(
        HalfTwistName {
            curve: Curve::Handle(1),
            direction,
        },
        2,
    )?
    .compose(&half_twist(
        HalfTwistName {
            curve: Curve::Handle(2),
            direction,
        },
        2,
    )?)
}

/// `h'(R{i,i+1})`, then `h(R_i)`, then `h(R_{i+1})`.
pub fn beta_geometric(index: usize, genus: usize) -> Result<MappingClass> {
    check_pair_index(index, genus)?;
    let factors = [
        half_twist(HalfTwistName::reverse(Curve::Pair(index)), genus)?,
        half_twist(HalfTwistName::forward(Curve::Handle(index)), genus)?,
        half_twist(HalfTwistName::forward(Curve::Handle(index + 1)), genus)?,
    ];
    MappingClass::product(genus, &factors)
}

/// The full Dehn twist along a curve: the square of the forward half twist.
pub fn full_twist(curve: Curve, genus: usize) -> Result<MappingClass> {
    Ok(half_twist(HalfTwistName::forward(curve), genus)?.pow(2))
}

/// Compares `beta_i` with the full twists and inverse full twists along the
/// three boundary curves of its pair of pants. Each comparison passes when
/// the two maps differ, with the first difference as evidence; the verdict
/// check passes when `beta_i` equals none of them.
pub fn is_geometric_image(index: usize, genus: usize) -> Result<Report> {
    let beta = beta_local(index, genus)?;
    nongeometric_report(&beta, index, genus)
}

pub(crate) fn nongeometric_report(
    beta: &MappingClass,
    index: usize,
    genus: usize,
) -> Result<Report> {
    const CITE: &str =
        "beta_i is not a Dehn twist along any of the three curves of its pair of pants";
    let mut results = Vec::new();
    let mut matches = Vec::new();
    for curve in [
        Curve::Handle(index),
        Curve::Handle(index + 1),
        Curve::Pair(index),
    ] {
        let twist = full_twist(curve, genus)?;
        for (power, candidate) in [(1, twist.clone()), (-1, twist.inverse())] {
            let params = [
                ("g", genus.to_string()),
                ("i", index.to_string()),
                ("candidate", format!("t({curve})^{power}")),
            ];
            let check = CheckResult::different(
                "beta_vs_pants_twist",
                &params,
                CITE,
                beta.endo(),
                candidate.endo(),
            );
            if !check.passed {
                matches.push(format!("t({curve})^{power}"));
            }
            results.push(check);
        }
    }
    let verdict = CheckResult::new(
        "beta_nongeometric_in_pants",
        &[("g", genus.to_string()), ("i", index.to_string())],
        CITE,
        matches.is_empty(),
        Some(format!("beta_{index} equals {}", matches.join(", "))),
    )
    .with_evidence("not equal to any of the 6 candidates");
    results.push(verdict);
    Ok(Report::new(
        format!("nongeometricity beta_{index} at genus {genus}"),
        crate::CONVENTION,
        results,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::verify_inverse;
    use crate::word::relator;

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn r(i: usize) -> Word {
        handle_relator(i).unwrap()
    }

    #[test]
    fn beta_local_tables() {
        let beta = beta_local(1, 2).unwrap();
        assert_eq!(
            beta.image(GenSymbol::x(1)),
            &w("y1 x1 y1^-1 x1^-1 x2 x1 y1 x1^-1 y1^-1")
        );
        assert_eq!(beta.image(GenSymbol::x(1)), &w("x2").conjugate_by(&r(1)));
        assert_eq!(beta.image(GenSymbol::x(2)), &w("x1"));
        let beta13 = beta_local(1, 3).unwrap();
        assert_eq!(beta13.image(GenSymbol::x(3)), &w("x3"));
        assert!(matches!(beta_local(2, 2), Err(Error::InvalidIndex(_))));
        assert!(matches!(beta_local(0, 3), Err(Error::InvalidIndex(_))));
    }

    #[test]
    fn beta_twist_word_text() {
        let parsed: McgWord = "(a1 b1 a1)^4 (a2 b2 (a1 b1 a1)^-1 w1 a1 b1 a1^2 b1)^-3"
            .parse()
            .unwrap();
        assert_eq!(beta_twist_word(1), parsed);
    }

    #[test]
    fn product_factor_order() {
        assert_eq!(braiding_factors(1, 1), vec![1]);
        assert_eq!(braiding_factors(1, 2), vec![1, 2]);
        assert_eq!(braiding_factors(2, 3), vec![2, 1, 3, 2, 4, 3]);
        assert!(braiding_factors(0, 3).is_empty());
        assert!(braiding_factors(3, 0).is_empty());
    }

    #[test]
    fn beta_rs_examples() {
        assert_eq!(beta_rs_product(1, 1).unwrap(), beta_local(1, 2).unwrap());
        let expected = beta_local(1, 3)
            .unwrap()
            .compose(&beta_local(2, 3).unwrap())
            .unwrap();
        assert_eq!(beta_rs_product(1, 2).unwrap(), expected);
        let d = beta_rs_direct(2, 3).unwrap();
        let r3 = partial_relator(1, 3).unwrap();
        assert_eq!(d.image(GenSymbol::x(1)), &w("x4").conjugate_by(&r3));
        assert_eq!(d.image(GenSymbol::x(3)), &w("x1"));
        assert_eq!(
            beta_rs_direct(1, 1).unwrap().image(GenSymbol::y(2)),
            &w("y1")
        );
        assert!(matches!(
            beta_rs_direct(0, 2),
            Err(Error::InvalidRange { .. })
        ));
        assert!(matches!(
            beta_rs_product(2, 0),
            Err(Error::InvalidRange { .. })
        ));
    }

    #[test]
    fn boundary_half_twist_tables() {
        let h = half_twist(HalfTwistName::forward(Curve::Boundary), 2).unwrap();
        let h_rev = half_twist(HalfTwistName::reverse(Curve::Boundary), 2).unwrap();
        let big_r = relator(2).unwrap();
        assert_eq!(
            h.image(GenSymbol::x(1)),
            &r(2).inverse().concat(&w("x2^-1"))
        );
        assert_eq!(h.image(GenSymbol::y(1)), &w("y2^-1").concat(&r(2)));
        assert_eq!(
            h.image(GenSymbol::x(2)),
            &big_r.inverse().concat(&w("x1^-1")).concat(&r(2))
        );
        assert_eq!(
            h.image(GenSymbol::y(2)),
            &r(2).inverse().concat(&w("y1^-1")).concat(&big_r)
        );
        assert_eq!(h_rev.image(GenSymbol::y(2)), &r(1).concat(&w("y1^-1")));
        assert_eq!(
            h_rev.image(GenSymbol::y(2)),
            &w("y1^-1").conjugate_by(&w("y1 x1"))
        );
        assert_eq!(
            h_rev.image(GenSymbol::x(1)),
            &w("x2^-1").conjugate_by(&r(1).concat(&w("y2")))
        );
        assert_eq!(
            h_rev.image(GenSymbol::y(1)),
            &w("y2^-1").conjugate_by(&r(1).concat(&w("y2 x2")))
        );
        assert_eq!(h.apply(&r(1)).unwrap(), r(2));
        assert!(verify_inverse(h.endo(), h_rev.endo()));
    }

    #[test]
    fn boundary_half_twist_formula_agrees_at_genus_two() {
        // The general construction must reproduce the genus two table.
        let mut factors = vec![beta_table(1, 2).unwrap()];
        factors.push(half_twist(HalfTwistName::reverse(Curve::Handle(1)), 2).unwrap());
        factors.push(half_twist(HalfTwistName::reverse(Curve::Handle(2)), 2).unwrap());
        let formula = MappingClass::product(2, &factors).unwrap();
        assert_eq!(
            formula,
            half_twist(HalfTwistName::reverse(Curve::Boundary), 2).unwrap()
        );
    }

    #[test]
    fn boundary_half_twist_squares_to_boundary_conjugation() {
        for genus in 1..=5 {
            let big_r = relator(genus).unwrap();
            let rev = half_twist(HalfTwistName::reverse(Curve::Boundary), genus).unwrap();
            let square = rev.pow(2);
            for g in (Alphabet::Surface { genus }).generators() {
                assert_eq!(
                    square.image(g),
                    &Word::letter(g).conjugate_by(&big_r),
                    "genus {genus}"
                );
            }
        }
        assert_eq!(
            half_twist(HalfTwistName::reverse(Curve::Boundary), 1).unwrap(),
            half_twist(HalfTwistName::reverse(Curve::Handle(1)), 1).unwrap()
        );
    }

    #[test]
    fn handle_half_twist_rows() {
        let h1 = half_twist(HalfTwistName::forward(Curve::Handle(1)), 2).unwrap();
        assert_eq!(h1.image(GenSymbol::y(1)), &w("x1 y1^-1 x1^-1"));
        assert_eq!(
            h1.image(GenSymbol::x(1)),
            &w("x1^-1").conjugate_by(&w("x1 y1"))
        );
        let h1_rev = half_twist(HalfTwistName::reverse(Curve::Handle(1)), 2).unwrap();
        assert_eq!(h1_rev.image(GenSymbol::x(1)), &w("y1 x1^-1 y1^-1"));
        assert!(matches!(
            half_twist(HalfTwistName::forward(Curve::Handle(3)), 2),
            Err(Error::InvalidIndex(_))
        ));
        assert!(matches!(
            half_twist(HalfTwistName::forward(Curve::Pair(2)), 2),
            Err(Error::InvalidIndex(_))
        ));
    }

    #[test]
    fn arms_twist_tables() {
        let fwd = arms_twist(2, Direction::Forward).unwrap();
        let rev = arms_twist(2, Direction::Reverse).unwrap();
        assert_eq!(
            fwd.image(GenSymbol::x(2)),
            &w("x2^-1").conjugate_by(&w("x2 y2"))
        );
        assert_eq!(fwd.image(GenSymbol::y(2)), &w("x2 y2^-1 x2^-1"));
        assert_eq!(rev.image(GenSymbol::x(1)), &w("y1 x1^-1 y1^-1"));
        assert_eq!(
            rev.image(GenSymbol::y(2)),
            &w("y2^-1").conjugate_by(&w("y2 x2"))
        );
        assert!(fwd.compose(&rev).unwrap().is_identity());
        assert!(matches!(
            arms_twist(3, Direction::Forward),
            Err(Error::InvalidGenus(3))
        ));
    }

    #[test]
    fn beta_geometric_matches_table() {
        for genus in 2..=5 {
            for i in 1..genus {
                assert_eq!(
                    beta_geometric(i, genus).unwrap(),
                    beta_table(i, genus).unwrap(),
                    "i={i} g={genus}"
                );
            }
        }
        let pair_rev = half_twist(HalfTwistName::reverse(Curve::Pair(1)), 2).unwrap();
        assert_eq!(pair_rev.image(GenSymbol::x(2)), &w("y1 x1^-1 y1^-1"));
    }

    #[test]
    fn full_twist_examples() {
        let t1 = full_twist(Curve::Handle(1), 2).unwrap();
        // Squaring x1 -> R1^-1 x1^-1 gives conjugation by R1^-1.
        assert_eq!(
            t1.image(GenSymbol::x(1)),
            &w("x1").conjugate_by(&r(1).inverse())
        );
        assert_eq!(t1.image(GenSymbol::x(2)), &w("x2"));
        let tp = full_twist(Curve::Pair(1), 2).unwrap();
        let big_r = relator(2).unwrap();
        assert_eq!(tp.apply(&big_r).unwrap(), big_r);
    }

    #[test]
    fn nongeometric_report_for_first_braiding() {
        let report = is_geometric_image(1, 2).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.summary.total, 7);
        let vs_handle = report
            .results
            .iter()
            .find(|r| r.param("candidate") == Some("t(R1)^1"))
            .unwrap();
        assert!(vs_handle.evidence.as_deref().unwrap().starts_with("x1:"));
        let beta = beta_local(1, 2).unwrap();
        let t = full_twist(Curve::Handle(1), 2).unwrap();
        assert!(beta
            .endo()
            .differences(t.endo())
            .iter()
            .any(|d| d.generator == GenSymbol::x(2)));
    }
}
