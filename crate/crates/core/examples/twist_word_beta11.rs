//! The Dehn twist word for the (1,1)-braiding, evaluated at genus 2, against
//! the braiding's action table.

use surface_braid::{beta_rs_direct, beta_twist_word, evaluate_mcg_word};

fn main() -> surface_braid::Result<()> {
    let word = beta_twist_word(1);
    println!("word: {word}");
    let twisted = evaluate_mcg_word(&word, 2)?;
    print!("{}", twisted.endo());
    let direct = beta_rs_direct(1, 1)?;
    println!("matches beta_{{1,1}}: {}", twisted == direct);
    Ok(())
}
