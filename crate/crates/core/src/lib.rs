//! Mapping classes of the genus `g` surface with one boundary component,
//! computed as automorphisms of the free group on `x1, y1, ..., xg, yg` that
//! fix the boundary word `R = [y1,x1]...[yg,xg]`.
//!
//! The library builds the Dehn twist generators, the braidings `beta_i` and
//! `beta_{r,s}`, half twists along a small catalog of curves, the braid group
//! maps (Artin action, `phi: sigma_i -> beta_i`, and the twist chain map), and
//! checks the braided monoidal axioms by exact word computation.
//!
//! Conventions: maps act on the right. In every product, word, and
//! expression the leftmost factor acts first, so `f.compose(&h)` is "`f`,
//! then `h`". Commutators are `[u,v] = u v u^-1 v^-1`.
//!
//! ```
//! use surface_braid::{beta_local, evaluate, parse_expression};
//!
//! let twists = parse_expression("(a1 b1 a1)^4 (a2 b2 (a1 b1 a1)^-1 w1 a1 b1 a1^2 b1)^-3").unwrap();
//! assert_eq!(evaluate(&twists, 2).unwrap(), beta_local(1, 2).unwrap());
//! ```

pub mod braid;
pub mod braidings;
pub mod checks;
pub mod cli;
pub mod endo;
pub mod error;
pub mod expr;
pub mod generators;
pub mod report;
pub mod word;

pub use braid::{
    artin, enumerate_reduced, harer, injectivity_smoke, phi, sigma_rs, BraidLetter, BraidWord,
};
pub use braidings::{
    arms_twist, beta_geometric, beta_local, beta_rs_direct, beta_rs_product, beta_table,
    beta_twist_word, braiding_factors, braiding_with_unit, full_twist, half_twist,
    is_geometric_image, Curve, Direction, HalfTwistName,
};
pub use checks::{
    check_hexagon_b, check_hexagon_c, check_naturality, check_unit_axiom, check_yang_baxter,
    run_suite, Fault, Suite, SuiteConfig,
};
pub use endo::{
    endo_equal, verify_inverse, Alphabet, Automorphism, Difference, Endo, MappingClass,
};
pub use error::{Error, Result};
pub use expr::{evaluate, evaluate_any, parse_expression, Expression};
pub use generators::{
    catalog, dehn_a, dehn_b, dehn_w, evaluate_mcg_word, preserves_relator, DehnKind, McgGenerator,
    McgWord,
};
pub use report::{CheckResult, Report, Summary};
pub use word::{handle_relator, partial_relator, relator, GenKind, GenSymbol, Sign, Word};

/// The composition convention, recorded in every report header.
pub const CONVENTION: &str = "right action: leftmost factor acts first, f.compose(h) = h after f; \
categorical composite F∘G applies G first; [u,v] = u v u^-1 v^-1";
