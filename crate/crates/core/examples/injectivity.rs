//! Exhaustive smoke test: braids with nontrivial Artin image have nontrivial
//! image under phi.

use surface_braid::injectivity_smoke;

fn main() -> surface_braid::Result<()> {
    for strands in 2..=3 {
        print!("{}", injectivity_smoke(strands, 6)?.to_text());
    }
    Ok(())
}
