//! Braided monoidal axioms for the braidings `beta_{r,s}`, and the
//! verification suite that aggregates every identity the library claims.
//!
//! Composites follow the right action: `f.compose(h)` applies `f` first. A
//! categorical composite `F ∘ G` is therefore `G.compose(F)`; the hexagons
//! pass under this order and fail under the opposite one at `(1,1,1)`.
//! Tensor padding: `1_A ⊗ f` is `identity(a).free_product(f)` and `f ⊗ 1_B`
//! is `f.free_product(identity(b))`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::{
    artin, harer, injectivity_smoke_with, phi_with, sigma_rs, BraidLetter, BraidWord,
};
use crate::braidings::{
    arms_twist, beta_geometric, beta_rs_direct, beta_table, beta_twist_word, braiding_factors,
    braiding_with_unit, full_twist, half_twist, nongeometric_report, Curve, Direction,
    HalfTwistName,
};
use crate::endo::{verify_inverse, Endo, MappingClass};
use crate::error::{Error, Result};
use crate::generators::{
    catalog, dehn_a, evaluate_mcg_word, preserves_relator, DehnKind, McgGenerator,
};
use crate::report::{CheckResult, Report};
use crate::word::{handle_relator, relator, GenKind, GenSymbol, Sign, Word};

const CITE_UNIT: &str = "unit axiom: beta_{A,I} = beta_{I,A} = 1_A";
const CITE_HEX_B: &str =
    "hexagon axiom (b): beta_{A⊗B,C} = (beta_{A,C} ⊗ 1_B) ∘ (1_A ⊗ beta_{B,C})";
const CITE_HEX_C: &str =
    "hexagon axiom (c): beta_{A,B⊗C} = (1_B ⊗ beta_{A,C}) ∘ (beta_{A,B} ⊗ 1_C)";
const CITE_YB: &str = "Yang-Baxter equation implied by the hexagons";
const CITE_NAT: &str = "braidings are natural in both variables";

fn idc(genus: usize) -> Result<MappingClass> {
    MappingClass::identity(genus)
}

fn rst(r: usize, s: usize, t: usize) -> [(&'static str, String); 3] {
    [
        ("r", r.to_string()),
        ("s", s.to_string()),
        ("t", t.to_string()),
    ]
}

fn or_errored(
    name: &str,
    params: &[(&str, String)],
    cite: &str,
    run: impl FnOnce() -> Result<CheckResult>,
) -> CheckResult {
    run().unwrap_or_else(|e| CheckResult::errored(name, params, cite, e))
}

fn positive(counts: &[usize]) -> Result<()> {
    match counts.iter().find(|&&c| c < 1) {
        Some(_) => Err(Error::InvalidRange {
            start: 0,
            end: counts.len(),
        }),
        None => Ok(()),
    }
}

/// `beta_{r,0}` and `beta_{0,r}` are the identity at genus `r`. At `r = 0`
/// the check is vacuous.
pub fn check_unit_axiom(r: usize) -> CheckResult {
    let params = [("r", r.to_string())];
    or_errored("unit_axiom", &params, CITE_UNIT, || {
        if r == 0 {
            let vacuous = braiding_with_unit(0, 0)?.is_none();
            return Ok(
                CheckResult::new("unit_axiom", &params, CITE_UNIT, vacuous, None)
                    .with_evidence("genus 0, vacuous"),
            );
        }
        let id = idc(r)?;
        for (front, rear) in [(r, 0), (0, r)] {
            let beta = braiding_with_unit(front, rear)?.expect("nonempty");
            if let Some(d) = beta.first_difference(&id) {
                return Ok(CheckResult::new(
                    "unit_axiom",
                    &params,
                    CITE_UNIT,
                    false,
                    Some(format!("beta_{{{front},{rear}}} {d}")),
                ));
            }
        }
        Ok(CheckResult::new(
            "unit_axiom",
            &params,
            CITE_UNIT,
            true,
            None,
        ))
    })
}

/// The two sides of hexagon (b) at genus `r+s+t`.
pub fn hexagon_b_sides(r: usize, s: usize, t: usize) -> Result<(MappingClass, MappingClass)> {
    positive(&[r, s, t])?;
    let left = beta_rs_direct(r + s, t)?;
    let first = idc(r)?.free_product(&beta_rs_direct(s, t)?);
    let second = beta_rs_direct(r, t)?.free_product(&idc(s)?);
    Ok((left, first.compose(&second)?))
}

/// The two sides of hexagon (c) at genus `r+s+t`.
pub fn hexagon_c_sides(r: usize, s: usize, t: usize) -> Result<(MappingClass, MappingClass)> {
    positive(&[r, s, t])?;
    let left = beta_rs_direct(r, s + t)?;
    let first = beta_rs_direct(r, s)?.free_product(&idc(t)?);
    let second = idc(s)?.free_product(&beta_rs_direct(r, t)?);
    Ok((left, first.compose(&second)?))
}

/// The two sides of the Yang-Baxter equation, in application order:
/// `(beta_{A,B} ⊗ 1_C), (1_B ⊗ beta_{A,C}), (beta_{B,C} ⊗ 1_A)` and
/// `(1_A ⊗ beta_{B,C}), (beta_{A,C} ⊗ 1_B), (1_C ⊗ beta_{A,B})`.
pub fn yang_baxter_sides(r: usize, s: usize, t: usize) -> Result<(MappingClass, MappingClass)> {
    positive(&[r, s, t])?;
    let genus = r + s + t;
    let left = [
        beta_rs_direct(r, s)?.free_product(&idc(t)?),
        idc(s)?.free_product(&beta_rs_direct(r, t)?),
        beta_rs_direct(s, t)?.free_product(&idc(r)?),
    ];
    let right = [
        idc(r)?.free_product(&beta_rs_direct(s, t)?),
        beta_rs_direct(r, t)?.free_product(&idc(s)?),
        idc(t)?.free_product(&beta_rs_direct(r, s)?),
    ];
    Ok((
        MappingClass::product(genus, &left)?,
        MappingClass::product(genus, &right)?,
    ))
}

fn sides_check(
    name: &str,
    cite: &str,
    r: usize,
    s: usize,
    t: usize,
    sides: fn(usize, usize, usize) -> Result<(MappingClass, MappingClass)>,
) -> CheckResult {
    let params = rst(r, s, t);
    or_errored(name, &params, cite, || {
        let (left, right) = sides(r, s, t)?;
        Ok(CheckResult::equal(
            name,
            &params,
            cite,
            left.endo(),
            right.endo(),
        ))
    })
}

pub fn check_hexagon_b(r: usize, s: usize, t: usize) -> CheckResult {
    sides_check("hexagon_b", CITE_HEX_B, r, s, t, hexagon_b_sides)
}

pub fn check_hexagon_c(r: usize, s: usize, t: usize) -> CheckResult {
    sides_check("hexagon_c", CITE_HEX_C, r, s, t, hexagon_c_sides)
}

pub fn check_yang_baxter(r: usize, s: usize, t: usize) -> CheckResult {
    sides_check("yang_baxter", CITE_YB, r, s, t, yang_baxter_sides)
}

/// `(f ⊗ h)` then `beta_{r,s}` equals `beta_{r,s}` then `(h ⊗ f)`.
pub fn naturality_sides(
    f: &MappingClass,
    h: &MappingClass,
) -> Result<(MappingClass, MappingClass)> {
    let beta = beta_rs_direct(f.genus(), h.genus())?;
    Ok((
        f.free_product(h).compose(&beta)?,
        beta.compose(&h.free_product(f))?,
    ))
}

pub fn check_naturality(
    r: usize,
    s: usize,
    f: &MappingClass,
    h: &MappingClass,
) -> Result<CheckResult> {
    if f.genus() != r || h.genus() != s {
        return Err(Error::RankMismatch(format!(
            "naturality at ({r},{s}) got maps of genus {} and {}",
            f.genus(),
            h.genus()
        )));
    }
    let (left, right) = naturality_sides(f, h)?;
    let params = [("r", r.to_string()), ("s", s.to_string())];
    Ok(CheckResult::equal(
        "naturality",
        &params,
        CITE_NAT,
        left.endo(),
        right.endo(),
    ))
}

/// Which families of checks [`run_suite`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Words,
    Generators,
    Braidings,
    HalfTwists,
    Category,
    Braids,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Words,
        Suite::Generators,
        Suite::Braidings,
        Suite::HalfTwists,
        Suite::Category,
        Suite::Braids,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Words => "words",
            Suite::Generators => "generators",
            Suite::Braidings => "braidings",
            Suite::HalfTwists => "half-twists",
            Suite::Category => "category",
            Suite::Braids => "braids",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`; expected one of words, generators, braidings, half-twists, category, braids"))
    }
}

/// Deliberate corruption of a fixture, used to show that failures are
/// detected and localized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Every `beta_1` the suite looks up is followed by `a_1`.
    CorruptBeta1,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest genus (and number of strands) any check works at.
    pub max_genus: usize,
    /// Bound on `r+s` and `r+s+t` for braiding checks.
    pub max_rs: usize,
    /// Longest braid word in the injectivity smoke test.
    pub max_braid_len: usize,
    /// Most strands in the injectivity smoke test.
    pub max_strands: usize,
    /// Random word samples for the word laws.
    pub word_samples: usize,
    pub seed: u64,
    pub suites: Vec<Suite>,
    pub fault: Option<Fault>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_genus: 6,
            max_rs: 6,
            max_braid_len: 6,
            max_strands: 3,
            word_samples: 64,
            seed: 0,
            suites: Suite::ALL.to_vec(),
            fault: None,
        }
    }
}

impl SuiteConfig {
    fn runs(&self, suite: Suite) -> bool {
        self.suites.contains(&suite)
    }

    fn rs_bound(&self) -> usize {
        self.max_rs.min(self.max_genus)
    }
}

/// Local braidings with the Dehn twist cross-check done once per `(i, g)`,
/// and the configured fault applied.
struct Betas {
    fault: Option<Fault>,
    cache: HashMap<(usize, usize), MappingClass>,
}

impl Betas {
    fn new(fault: Option<Fault>) -> Self {
        Betas {
            fault,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, index: usize, genus: usize) -> Result<MappingClass> {
        if let Some(beta) = self.cache.get(&(index, genus)) {
            return Ok(beta.clone());
        }
        let mut beta = beta_table(index, genus)?;
        if index == 1 && self.fault == Some(Fault::CorruptBeta1) {
            beta = beta.compose(&dehn_a(1, genus)?)?;
        }
        self.cache.insert((index, genus), beta.clone());
        Ok(beta)
    }

    fn product(&mut self, front: usize, rear: usize) -> Result<MappingClass> {
        let genus = front + rear;
        let factors = braiding_factors(front, rear)
            .into_iter()
            .map(|i| self.get(i, genus))
            .collect::<Result<Vec<_>>>()?;
        MappingClass::product(genus, &factors)
    }
}

/// Runs the configured families of checks. Failures are recorded in the
/// report, never raised; the report is ordered by check name and parameters
/// and depends only on the configuration.
pub fn run_suite(config: &SuiteConfig) -> Report {
    let mut results = Vec::new();
    let mut betas = Betas::new(config.fault);
    if config.runs(Suite::Words) {
        word_checks(config, &mut results);
    }
    if config.runs(Suite::Generators) {
        generator_checks(config, &mut results);
    }
    if config.runs(Suite::Braidings) {
        braiding_checks(config, &mut betas, &mut results);
    }
    if config.runs(Suite::HalfTwists) {
        half_twist_checks(config, &mut betas, &mut results);
    }
    if config.runs(Suite::Category) {
        category_checks(config, &mut results);
    }
    if config.runs(Suite::Braids) {
        braid_checks(config, &mut betas, &mut results);
    }
    let names: Vec<&str> = config.suites.iter().map(|s| s.name()).collect();
    Report::new(
        format!("verify[{}]", names.join(",")),
        crate::CONVENTION,
        results,
    )
}

fn random_word(rng: &mut ChaCha8Rng, genus: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::reduce((0..len).map(|_| {
        let kind = if rng.gen_bool(0.5) {
            GenKind::X
        } else {
            GenKind::Y
        };
        let sign = if rng.gen_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        GenSymbol::new(kind, rng.gen_range(1..=genus), sign).expect("index at least 1")
    }))
}

fn law(name: &str, cite: &str, samples: usize, failure: Option<String>) -> CheckResult {
    CheckResult::new(
        name,
        &[("samples", samples.to_string())],
        cite,
        failure.is_none(),
        failure,
    )
    .with_evidence(format!("{samples} seeded random words"))
}

fn word_checks(config: &SuiteConfig, results: &mut Vec<CheckResult>) {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = config.word_samples;
    let genus = config.max_genus.max(1);
    let words: Vec<[Word; 3]> = (0..n)
        .map(|_| [0, 1, 2].map(|_| random_word(&mut rng, genus, 12)))
        .collect();
    let find = |pred: &dyn Fn(&[Word; 3]) -> bool| {
        words
            .iter()
            .find(|w| !pred(w))
            .map(|w| format!("u = {}, v = {}, w = {}", w[0], w[1], w[2]))
    };
    results.push(law(
        "word_reduce_idempotent",
        "free reduction is a normal form",
        n,
        find(&|w| Word::reduce(w[0].letters().iter().copied()) == w[0]),
    ));
    results.push(law(
        "word_inverse_cancels",
        "u u^-1 = 1 in the free group",
        n,
        find(&|w| w[0].concat(&w[0].inverse()).is_empty() && w[0].inverse().inverse() == w[0]),
    ));
    results.push(law(
        "word_concat_associative",
        "the free group product is associative",
        n,
        find(&|w| w[0].concat(&w[1]).concat(&w[2]) == w[0].concat(&w[1].concat(&w[2]))),
    ));
    results.push(law(
        "word_text_round_trip",
        "word text format parses back to the same word",
        n,
        find(&|w| Word::parse(&w[0].to_string()).ok().as_ref() == Some(&w[0])),
    ));
    results.push(law(
        "word_commutator_inverse",
        "[u,v]^-1 = [v,u]",
        n,
        find(&|w| Word::commutator(&w[0], &w[1]).inverse() == Word::commutator(&w[1], &w[0])),
    ));
    // applying an endomorphism is a homomorphism: f(uv) = f(u) f(v)
    let f = beta_table(1, genus.max(2)).expect("beta_1 at genus >= 2");
    results.push(law(
        "apply_is_homomorphism",
        "an endomorphism acts letterwise",
        n,
        find(&|w| {
            let (u, v) = (&w[0], &w[1]);
            f.apply(&u.concat(v)).ok() == Some(f.apply(u).unwrap().concat(&f.apply(v).unwrap()))
        }),
    ));
    let g = config.max_genus.max(1);
    for genus in 1..=g.min(3) {
        let text = relator(genus).map(|r| r.to_string()).unwrap_or_default();
        let expected: String = (1..=genus)
            .map(|i| format!("y{i} x{i} y{i}^-1 x{i}^-1"))
            .collect::<Vec<_>>()
            .join(" ");
        results.push(CheckResult::new(
            "relator_text",
            &[("g", genus.to_string())],
            "R = [y1,x1]...[yg,xg] with [u,v] = u v u^-1 v^-1",
            text == expected,
            Some(format!("got `{text}`, expected `{expected}`")),
        ));
    }
}

fn generator_checks(config: &SuiteConfig, results: &mut Vec<CheckResult>) {
    const CITE_GEN: &str = "Dehn twist generators are automorphisms fixing R";
    const CITE_CHAIN: &str = "Dehn twists along curves meeting once braid; disjoint ones commute";
    for genus in 1..=config.max_genus.min(4) {
        for gen in catalog(genus) {
            let params = [("g", genus.to_string()), ("twist", gen.to_string())];
            results.push(or_errored("generator_certified", &params, CITE_GEN, || {
                let class = gen.mapping_class(genus)?;
                let ok = verify_inverse(class.endo(), class.inverse_endo())
                    && preserves_relator(class.endo(), genus);
                Ok(CheckResult::new(
                    "generator_certified",
                    &params,
                    CITE_GEN,
                    ok,
                    None,
                ))
            }));
        }
    }
    // The chain a1, b1, w1, b2, w2, ... consecutive members braid.
    for genus in 2..=config.max_genus.min(3) {
        let mut chain = vec![McgGenerator::a(1), McgGenerator::b(1)];
        for i in 1..genus {
            chain.push(McgGenerator::w(i));
            chain.push(McgGenerator::b(i + 1));
        }
        chain.push(McgGenerator::a(genus));
        let chain: Vec<McgGenerator> = chain
            .into_iter()
            .filter(|g| g.kind != DehnKind::A || g.index == 1 || g.index == genus)
            .collect();
        let mut seen = Vec::new();
        for (n, &p) in chain.iter().enumerate() {
            for &q in &chain[n + 1..] {
                if seen.contains(&(p, q)) {
                    continue;
                }
                seen.push((p, q));
                let adjacent = chain
                    .windows(2)
                    .any(|w| (w[0] == p && w[1] == q) || (w[0] == q && w[1] == p));
                let name = if adjacent {
                    "dehn_braid_relation"
                } else {
                    "dehn_far_commute"
                };
                let params = [("g", genus.to_string()), ("pair", format!("{p},{q}"))];
                results.push(or_errored(name, &params, CITE_CHAIN, || {
                    let (f, h) = (p.mapping_class(genus)?, q.mapping_class(genus)?);
                    let (left, right) = if adjacent {
                        (
                            MappingClass::product(genus, [&f, &h, &f])?,
                            MappingClass::product(genus, [&h, &f, &h])?,
                        )
                    } else {
                        (f.compose(&h)?, h.compose(&f)?)
                    };
                    Ok(CheckResult::equal(
                        name,
                        &params,
                        CITE_CHAIN,
                        left.endo(),
                        right.endo(),
                    ))
                }));
            }
        }
    }
}

const BETA11_TABLE: &str = "genus 2
x1 -> y1 x1 y1^-1 x1^-1 x2 x1 y1 x1^-1 y1^-1
y1 -> y1 x1 y1^-1 x1^-1 y2 x1 y1 x1^-1 y1^-1
x2 -> x1
y2 -> y1";

fn braiding_checks(config: &SuiteConfig, betas: &mut Betas, results: &mut Vec<CheckResult>) {
    const CITE_TWIST_WORD: &str = "the (1,1)-braiding equals the Dehn twist word (a1 b1 a1)^4 (a2 b2 (a1 b1 a1)^-1 w1 a1 b1 a1^2 b1)^-3";
    const CITE_THREE: &str =
        "beta_i: table, transported Dehn twist word and h'(R{i,i+1}) h(Ri) h(Ri+1) agree";
    const CITE_BRAID: &str = "the local braidings satisfy the braid relations";
    const CITE_RS: &str =
        "beta_{r,s} is the product of local braidings and the image of sigma_{r,s}";
    const CITE_FIX: &str = "beta_{r,s} fixes the boundary word R";
    if config.max_genus >= 2 {
        let params = [("g", "2".to_string())];
        results.push(or_errored(
            "beta11_dehn_word_matches_table",
            &params,
            CITE_TWIST_WORD,
            || {
                let table: Endo = BETA11_TABLE.parse()?;
                let word = evaluate_mcg_word(&beta_twist_word(1), 2)?;
                let beta = betas.get(1, 2)?;
                let check = CheckResult::equal(
                    "beta11_dehn_word_matches_table",
                    &params,
                    CITE_TWIST_WORD,
                    word.endo(),
                    &table,
                );
                if !check.passed {
                    return Ok(check);
                }
                Ok(CheckResult::equal(
                    "beta11_dehn_word_matches_table",
                    &params,
                    CITE_TWIST_WORD,
                    beta.endo(),
                    &table,
                ))
            },
        ));
    }
    for genus in 2..=config.max_genus {
        for i in 1..genus {
            let params = [("g", genus.to_string()), ("i", i.to_string())];
            results.push(or_errored("beta_three_way", &params, CITE_THREE, || {
                let beta = betas.get(i, genus)?;
                let word = evaluate_mcg_word(&beta_twist_word(i), genus)?;
                let geometric = beta_geometric(i, genus)?;
                let first = CheckResult::equal(
                    "beta_three_way",
                    &params,
                    CITE_THREE,
                    beta.endo(),
                    word.endo(),
                );
                if !first.passed {
                    return Ok(first);
                }
                Ok(CheckResult::equal(
                    "beta_three_way",
                    &params,
                    CITE_THREE,
                    beta.endo(),
                    geometric.endo(),
                ))
            }));
        }
        for i in 1..genus.saturating_sub(1) {
            let params = [("g", genus.to_string()), ("i", i.to_string())];
            results.push(or_errored(
                "beta_braid_relation",
                &params,
                CITE_BRAID,
                || {
                    let (p, q) = (betas.get(i, genus)?, betas.get(i + 1, genus)?);
                    let left = MappingClass::product(genus, [&p, &q, &p])?;
                    let right = MappingClass::product(genus, [&q, &p, &q])?;
                    Ok(CheckResult::equal(
                        "beta_braid_relation",
                        &params,
                        CITE_BRAID,
                        left.endo(),
                        right.endo(),
                    ))
                },
            ));
        }
        for i in 1..genus {
            for j in i + 2..genus {
                let params = [
                    ("g", genus.to_string()),
                    ("i", i.to_string()),
                    ("j", j.to_string()),
                ];
                results.push(or_errored("beta_far_commute", &params, CITE_BRAID, || {
                    let (p, q) = (betas.get(i, genus)?, betas.get(j, genus)?);
                    Ok(CheckResult::equal(
                        "beta_far_commute",
                        &params,
                        CITE_BRAID,
                        p.compose(&q)?.endo(),
                        q.compose(&p)?.endo(),
                    ))
                }));
            }
        }
    }
    let bound = config.rs_bound();
    for r in 1..bound {
        for s in 1..=bound - r {
            let params = [("r", r.to_string()), ("s", s.to_string())];
            results.push(or_errored(
                "beta_rs_product_direct_phi",
                &params,
                CITE_RS,
                || {
                    let direct = beta_rs_direct(r, s)?;
                    let product = betas.product(r, s)?;
                    let via_phi = phi_with(&sigma_rs(r, s)?, r + s, |i, g| betas.get(i, g))?;
                    let first = CheckResult::equal(
                        "beta_rs_product_direct_phi",
                        &params,
                        CITE_RS,
                        product.endo(),
                        direct.endo(),
                    );
                    if !first.passed {
                        return Ok(first);
                    }
                    Ok(CheckResult::equal(
                        "beta_rs_product_direct_phi",
                        &params,
                        CITE_RS,
                        via_phi.endo(),
                        direct.endo(),
                    ))
                },
            ));
            results.push(or_errored(
                "beta_rs_fixes_relator",
                &params,
                CITE_FIX,
                || {
                    let ok = preserves_relator(beta_rs_direct(r, s)?.endo(), r + s)
                        && preserves_relator(betas.product(r, s)?.endo(), r + s);
                    Ok(CheckResult::new(
                        "beta_rs_fixes_relator",
                        &params,
                        CITE_FIX,
                        ok,
                        None,
                    ))
                },
            ));
        }
    }
}

fn curve_word(name: &str) -> Result<Word> {
    match name {
        "R1" => handle_relator(1),
        "R2" => handle_relator(2),
        "R" => relator(2),
        _ => unreachable!("fixed curve names"),
    }
}

/// `h_R` and `h'_R` on the curves `R1`, `R2`: image, then expected value
/// written in terms of `R1`, `R2`, `R`.
const CURVE_IMAGES: [(Direction, &str, &[&str]); 4] = [
    (Direction::Forward, "R1", &["R2"]),
    (Direction::Forward, "R2", &["R2^-1", "R"]),
    (Direction::Reverse, "R1", &["R", "R1^-1"]),
    (Direction::Reverse, "R2", &["R1"]),
];

fn curve_expression(parts: &[&str]) -> Result<Word> {
    parts.iter().try_fold(Word::identity(), |acc, part| {
        let (name, inverse) = match part.strip_suffix("^-1") {
            Some(name) => (name, true),
            None => (*part, false),
        };
        let w = curve_word(name)?;
        Ok(acc.concat(&if inverse { w.inverse() } else { w }))
    })
}

fn half_twist_checks(config: &SuiteConfig, betas: &mut Betas, results: &mut Vec<CheckResult>) {
    const CITE_PAIR: &str = "the reverse half twist is the inverse of the half twist";
    const CITE_SQUARE: &str =
        "the square of a half twist is a full Dehn twist; h_R^2 and h'_R^2 are mutually inverse";
    const CITE_CURVES: &str = "action of h_R and h'_R on the curves R1, R2";
    const CITE_FACTOR: &str = "beta_{1,1} = h'_R ∘ h_A";
    const CITE_CHAIN: &str = "intermediate images in the factorization beta_{1,1} = h'_R ∘ h_A";
    const CITE_COMMUTE: &str = "half twists with disjoint or nested support commute";
    const CITE_CONJ: &str = "h_R exchanges the handle curves, so it conjugates h_{R1} to h_{R2}";
    for genus in 1..=config.max_genus.min(3) {
        let mut curves: Vec<Curve> = (1..=genus).map(Curve::Handle).collect();
        curves.extend((1..genus).map(Curve::Pair));
        curves.push(Curve::Boundary);
        for curve in curves {
            let params = [("g", genus.to_string()), ("curve", curve.to_string())];
            results.push(or_errored(
                "half_twist_inverse_pair",
                &params,
                CITE_PAIR,
                || {
                    let f = half_twist(HalfTwistName::forward(curve), genus)?;
                    let r = half_twist(HalfTwistName::reverse(curve), genus)?;
                    let ok = verify_inverse(f.endo(), r.endo())
                        && preserves_relator(f.endo(), genus)
                        && preserves_relator(r.endo(), genus);
                    Ok(CheckResult::new(
                        "half_twist_inverse_pair",
                        &params,
                        CITE_PAIR,
                        ok,
                        None,
                    ))
                },
            ));
            results.push(or_errored(
                "full_twist_squares_inverse",
                &params,
                CITE_SQUARE,
                || {
                    let full = full_twist(curve, genus)?;
                    let reverse_sq = half_twist(HalfTwistName::reverse(curve), genus)?.pow(2);
                    let ok = verify_inverse(full.endo(), reverse_sq.endo());
                    Ok(CheckResult::new(
                        "full_twist_squares_inverse",
                        &params,
                        CITE_SQUARE,
                        ok,
                        None,
                    ))
                },
            ));
        }
    }
    if config.max_genus < 2 {
        return;
    }
    for (direction, curve, expected) in CURVE_IMAGES {
        let twist = HalfTwistName {
            curve: Curve::Boundary,
            direction,
        };
        let params = [("twist", twist.to_string()), ("curve", curve.to_string())];
        results.push(or_errored(
            "half_twist_curve_image",
            &params,
            CITE_CURVES,
            || {
                let image = half_twist(twist, 2)?.apply(&curve_word(curve)?)?;
                let want = curve_expression(expected)?;
                Ok(CheckResult::new(
                    "half_twist_curve_image",
                    &params,
                    CITE_CURVES,
                    image == want,
                    Some(format!("{curve}: {image} vs {}", expected.join(" "))),
                ))
            },
        ));
    }
    let params = [("g", "2".to_string())];
    results.push(or_errored(
        "hR_then_hR_prime_identity",
        &params,
        CITE_PAIR,
        || {
            let hr = half_twist(HalfTwistName::forward(Curve::Boundary), 2)?;
            let hrp = half_twist(HalfTwistName::reverse(Curve::Boundary), 2)?;
            let both = hr.compose(&hrp)?;
            Ok(CheckResult::equal(
                "hR_then_hR_prime_identity",
                &params,
                CITE_PAIR,
                both.endo(),
                idc(2)?.endo(),
            ))
        },
    ));
    results.push(or_errored(
        "half_twist_factorization",
        &params,
        CITE_FACTOR,
        || {
            let composite = half_twist(HalfTwistName::reverse(Curve::Boundary), 2)?
                .compose(&arms_twist(2, Direction::Forward)?)?;
            let beta = betas.get(1, 2)?;
            let first = CheckResult::equal(
                "half_twist_factorization",
                &params,
                CITE_FACTOR,
                composite.endo(),
                beta.endo(),
            );
            if !first.passed {
                return Ok(first);
            }
            Ok(CheckResult::equal(
                "half_twist_factorization",
                &params,
                CITE_FACTOR,
                composite.endo(),
                beta_rs_direct(1, 1)?.endo(),
            ))
        },
    ));
    for (generator, expected) in [
        (GenSymbol::x(2), "y1 x1^-1 y1^-1"),
        (GenSymbol::y(2), "y1 x1 y1^-1 x1^-1 y1^-1"),
    ] {
        let params = [("generator", generator.to_string())];
        results.push(or_errored(
            "half_twist_factorization_chain",
            &params,
            CITE_CHAIN,
            || {
                let hrp = half_twist(HalfTwistName::reverse(Curve::Boundary), 2)?;
                let image = hrp.image(generator);
                let want = Word::parse(expected)?;
                Ok(CheckResult::new(
                    "half_twist_factorization_chain",
                    &params,
                    CITE_CHAIN,
                    image == &want,
                    Some(format!("{generator}: {image} vs {want}")),
                ))
            },
        ));
    }
    let hr1 = |d| {
        half_twist(
            HalfTwistName {
                curve: Curve::Handle(1),
                direction: d,
            },
            2,
        )
    };
    let hr2 = |d| {
        half_twist(
            HalfTwistName {
                curve: Curve::Handle(2),
                direction: d,
            },
            2,
        )
    };
    let params = [("g", "2".to_string()), ("pair", "h(R1),h(R2)".to_string())];
    results.push(or_errored(
        "half_twists_commute",
        &params,
        CITE_COMMUTE,
        || {
            let (p, q) = (hr1(Direction::Forward)?, hr2(Direction::Forward)?);
            Ok(CheckResult::equal(
                "half_twists_commute",
                &params,
                CITE_COMMUTE,
                p.compose(&q)?.endo(),
                q.compose(&p)?.endo(),
            ))
        },
    ));
    let params = [("g", "2".to_string()), ("pair", "hR,hA".to_string())];
    results.push(or_errored(
        "half_twists_commute",
        &params,
        CITE_COMMUTE,
        || {
            let p = half_twist(HalfTwistName::forward(Curve::Boundary), 2)?;
            let q = arms_twist(2, Direction::Forward)?;
            Ok(CheckResult::equal(
                "half_twists_commute",
                &params,
                CITE_COMMUTE,
                p.compose(&q)?.endo(),
                q.compose(&p)?.endo(),
            ))
        },
    ));
    // h_R maps R1 to R2 (but R2 to R2^-1 R), so it carries h(R1) to h(R2).
    let params = [
        ("g", "2".to_string()),
        ("from", "h(R1)".to_string()),
        ("to", "h(R2)".to_string()),
    ];
    results.push(or_errored(
        "hR_conjugates_handle_twists",
        &params,
        CITE_CONJ,
        || {
            let hr = half_twist(HalfTwistName::forward(Curve::Boundary), 2)?;
            let conjugated =
                MappingClass::product(2, [&hr.inverse(), &hr1(Direction::Forward)?, &hr])?;
            let target = hr2(Direction::Forward)?;
            Ok(CheckResult::equal(
                "hR_conjugates_handle_twists",
                &params,
                CITE_CONJ,
                conjugated.endo(),
                target.endo(),
            ))
        },
    ));
    for (genus, index) in [(2, 1), (3, 1), (3, 2)] {
        if genus > config.max_genus {
            continue;
        }
        let cite = "beta_i is not a Dehn twist along any of the three curves of its pair of pants";
        let params = [("g", genus.to_string()), ("i", index.to_string())];
        match betas
            .get(index, genus)
            .and_then(|beta| nongeometric_report(&beta, index, genus))
        {
            Ok(report) => results.extend(report.results),
            Err(e) => results.push(CheckResult::errored(
                "beta_nongeometric_in_pants",
                &params,
                cite,
                e,
            )),
        }
    }
}

/// Naturality sample set at genus `g`: identity, each Dehn twist
/// generator, and each local braiding.
fn naturality_samples(genus: usize) -> Result<Vec<(String, MappingClass)>> {
    let mut samples = vec![("1".to_string(), idc(genus)?)];
    for gen in catalog(genus) {
        samples.push((gen.to_string(), gen.mapping_class(genus)?));
    }
    for i in 1..genus {
        samples.push((format!("beta({i})"), beta_table(i, genus)?));
    }
    Ok(samples)
}

fn category_checks(config: &SuiteConfig, results: &mut Vec<CheckResult>) {
    let bound = config.rs_bound();
    for r in 0..=bound {
        results.push(check_unit_axiom(r));
    }
    let mut meta_failures = Vec::new();
    let mut triples = 0;
    for r in 1..=bound {
        for s in 1..=bound {
            for t in 1..=bound {
                if r + s + t > bound {
                    continue;
                }
                let (b, c, yb) = (
                    check_hexagon_b(r, s, t),
                    check_hexagon_c(r, s, t),
                    check_yang_baxter(r, s, t),
                );
                triples += 1;
                if b.passed && c.passed && !yb.passed {
                    meta_failures.push(format!("({r},{s},{t})"));
                }
                results.extend([b, c, yb]);
            }
        }
    }
    results.push(
        CheckResult::new(
            "hexagons_imply_yang_baxter",
            &[("max_rst", bound.to_string())],
            "the hexagon axioms imply the Yang-Baxter equation",
            meta_failures.is_empty(),
            Some(format!(
                "hexagons pass but Yang-Baxter fails at {}",
                meta_failures.join(", ")
            )),
        )
        .with_evidence(format!("{triples} triples")),
    );
    let nat_bound = bound.min(4);
    for r in 1..nat_bound {
        for s in 1..=nat_bound - r {
            let params = [("r", r.to_string()), ("s", s.to_string())];
            results.push(or_errored("naturality", &params, CITE_NAT, || {
                let (fs, hs) = (naturality_samples(r)?, naturality_samples(s)?);
                for (fname, f) in &fs {
                    for (hname, h) in &hs {
                        let check = check_naturality(r, s, f, h)?;
                        if !check.passed {
                            let witness = format!(
                                "f = {fname}, h = {hname}: {}",
                                check.witness.unwrap_or_default()
                            );
                            return Ok(CheckResult::new(
                                "naturality",
                                &params,
                                CITE_NAT,
                                false,
                                Some(witness),
                            ));
                        }
                    }
                }
                Ok(
                    CheckResult::new("naturality", &params, CITE_NAT, true, None)
                        .with_evidence(format!("{} sample pairs", fs.len() * hs.len())),
                )
            }));
        }
    }
}

fn braid_checks(config: &SuiteConfig, betas: &mut Betas, results: &mut Vec<CheckResult>) {
    const CITE_ARTIN: &str = "the Artin action satisfies the braid relations";
    const CITE_HARER: &str = "sigma_i -> b_1, w_1, b_2, ... satisfies the braid relations";
    const CITE_HARER_BETA: &str =
        "the twist-chain embedding does not carry sigma_{1,1} to the braiding beta_{1,1}";
    let braid = |n: usize, letters: &[usize]| {
        BraidWord::new(n, letters.iter().map(|&i| BraidLetter::sigma(i)))
    };
    for n in 3..=config.max_genus.clamp(3, 6) {
        for i in 1..n - 1 {
            let params = [("n", n.to_string()), ("i", i.to_string())];
            results.push(or_errored(
                "artin_braid_relation",
                &params,
                CITE_ARTIN,
                || {
                    let (left, right) = (
                        artin(&braid(n, &[i, i + 1, i])?),
                        artin(&braid(n, &[i + 1, i, i + 1])?),
                    );
                    Ok(CheckResult::equal(
                        "artin_braid_relation",
                        &params,
                        CITE_ARTIN,
                        left.endo(),
                        right.endo(),
                    ))
                },
            ));
        }
        for i in 1..n {
            for j in i + 2..n {
                let params = [
                    ("n", n.to_string()),
                    ("i", i.to_string()),
                    ("j", j.to_string()),
                ];
                results.push(or_errored("artin_far_commute", &params, CITE_ARTIN, || {
                    let (left, right) = (artin(&braid(n, &[i, j])?), artin(&braid(n, &[j, i])?));
                    Ok(CheckResult::equal(
                        "artin_far_commute",
                        &params,
                        CITE_ARTIN,
                        left.endo(),
                        right.endo(),
                    ))
                }));
            }
        }
    }
    let strands = config.max_strands.min(config.max_genus);
    for n in 2..=strands {
        let cite = "phi is injective on short braid words";
        let params = [
            ("n", n.to_string()),
            ("max_len", config.max_braid_len.to_string()),
        ];
        match injectivity_smoke_with(n, config.max_braid_len, |i, g| betas.get(i, g)) {
            Ok(report) => results.extend(report.results),
            Err(e) => results.push(CheckResult::errored(
                "phi_injectivity_smoke",
                &params,
                cite,
                e,
            )),
        }
    }
    for genus in 2..=config.max_genus.min(3) {
        // harer on 2g strands uses sigma_1 .. sigma_{2g-1}; sigma_{2g-1} = b_g.
        let n = 2 * genus;
        for i in 1..n - 1 {
            let params = [("g", genus.to_string()), ("i", i.to_string())];
            results.push(or_errored(
                "harer_braid_relation",
                &params,
                CITE_HARER,
                || {
                    let left = harer(&braid(n, &[i, i + 1, i])?, genus)?;
                    let right = harer(&braid(n, &[i + 1, i, i + 1])?, genus)?;
                    Ok(CheckResult::equal(
                        "harer_braid_relation",
                        &params,
                        CITE_HARER,
                        left.endo(),
                        right.endo(),
                    ))
                },
            ));
        }
        for i in 1..n - 1 {
            for j in i + 2..n {
                let params = [
                    ("g", genus.to_string()),
                    ("i", i.to_string()),
                    ("j", j.to_string()),
                ];
                results.push(or_errored("harer_far_commute", &params, CITE_HARER, || {
                    let left = harer(&braid(n, &[i, j])?, genus)?;
                    let right = harer(&braid(n, &[j, i])?, genus)?;
                    Ok(CheckResult::equal(
                        "harer_far_commute",
                        &params,
                        CITE_HARER,
                        left.endo(),
                        right.endo(),
                    ))
                }));
            }
        }
    }
    if config.max_genus >= 2 {
        let params = [("g", "2".to_string())];
        results.push(or_errored(
            "harer_differs_from_braiding",
            &params,
            CITE_HARER_BETA,
            || {
                let h = harer(&sigma_rs(1, 1)?.with_strands(2)?, 2)?;
                Ok(CheckResult::different(
                    "harer_differs_from_braiding",
                    &params,
                    CITE_HARER_BETA,
                    h.endo(),
                    beta_rs_direct(1, 1)?.endo(),
                ))
            },
        ));
    }
}
