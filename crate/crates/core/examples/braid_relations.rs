//! Braid relations for the local braidings beta_i and for the Artin action.

use surface_braid::{artin, beta_local, BraidWord, MappingClass};

fn main() -> surface_braid::Result<()> {
    let genus = 4;
    for i in 1..genus - 1 {
        let (p, q) = (beta_local(i, genus)?, beta_local(i + 1, genus)?);
        let left = MappingClass::product(genus, [&p, &q, &p])?;
        let right = MappingClass::product(genus, [&q, &p, &q])?;
        println!(
            "beta_{i} beta_{} beta_{i} = beta_{} beta_{i} beta_{}: {}",
            i + 1,
            i + 1,
            i + 1,
            left == right
        );
    }
    let p = beta_local(1, genus)?;
    let q = beta_local(3, genus)?;
    println!(
        "beta_1 beta_3 = beta_3 beta_1: {}",
        p.compose(&q)? == q.compose(&p)?
    );

    let left = artin(&BraidWord::parse("s1 s2 s1", 3)?);
    let right = artin(&BraidWord::parse("s2 s1 s2", 3)?);
    println!("Artin: s1 s2 s1 = s2 s1 s2: {}", left == right);
    print!("{}", left.endo());
    Ok(())
}
