//! Unit, hexagon and Yang-Baxter axioms for the braidings, plus a naturality
//! sample.

use surface_braid::{
    beta_local, check_hexagon_b, check_hexagon_c, check_naturality, check_unit_axiom,
    check_yang_baxter, dehn_b,
};

fn main() -> surface_braid::Result<()> {
    println!("{}", check_unit_axiom(3));
    for (r, s, t) in [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 3)] {
        println!("{}", check_hexagon_b(r, s, t));
        println!("{}", check_hexagon_c(r, s, t));
        println!("{}", check_yang_baxter(r, s, t));
    }
    println!(
        "{}",
        check_naturality(2, 1, &beta_local(1, 2)?, &dehn_b(1, 1)?)?
    );
    Ok(())
}
