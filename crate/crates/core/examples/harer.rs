//! The twist-chain map sigma_i -> b_1, w_1, b_2, ...: it satisfies the braid
//! relations but does not send sigma_{1,1} to the braiding.

use surface_braid::{beta_rs_direct, harer, sigma_rs, BraidWord};

fn main() -> surface_braid::Result<()> {
    let genus = 3;
    for i in 1..2 * genus - 1 {
        let left = harer(
            &BraidWord::parse(&format!("s{i} s{} s{i}", i + 1), 2 * genus)?,
            genus,
        )?;
        let right = harer(
            &BraidWord::parse(&format!("s{} s{i} s{}", i + 1, i + 1), 2 * genus)?,
            genus,
        )?;
        println!("s{i}, s{}: braid relation {}", i + 1, left == right);
    }
    let h = harer(&sigma_rs(1, 1)?, 2)?;
    let beta = beta_rs_direct(1, 1)?;
    match h.first_difference(&beta) {
        Some(d) => println!("harer(sigma_{{1,1}}) != beta_{{1,1}}: {d}"),
        None => println!("harer(sigma_{{1,1}}) == beta_{{1,1}}"),
    }
    Ok(())
}
