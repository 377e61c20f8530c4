//! beta_{r,s} three ways: product of local braidings, direct table, and the
//! image of sigma_{r,s} under phi.

use surface_braid::{beta_rs_direct, beta_rs_product, phi, preserves_relator, sigma_rs};

fn main() -> surface_braid::Result<()> {
    for r in 1..6 {
        for s in 1..=6 - r {
            let direct = beta_rs_direct(r, s)?;
            let product = beta_rs_product(r, s)?;
            let via_phi = phi(&sigma_rs(r, s)?, r + s)?;
            println!(
                "beta_{{{r},{s}}}: product {} phi {} fixes R {}",
                product == direct,
                via_phi == direct,
                preserves_relator(direct.endo(), r + s)
            );
        }
    }
    let example = beta_rs_direct(2, 3)?;
    println!(
        "beta_{{2,3}}(y1) = {}",
        example.image(surface_braid::GenSymbol::y(1))
    );
    Ok(())
}
