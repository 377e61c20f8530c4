//! Parsing, printing and evaluating expressions.

use surface_braid::{evaluate, evaluate_any, parse_expression, Word};

fn main() -> surface_braid::Result<()> {
    for (text, genus) in [
        ("(a1 b1 a1)^4 (a2 b2 (a1 b1 a1)^-1 w1 a1 b1 a1^2 b1)^-3", 2),
        ("hR' hA", 2),
        ("beta(1) beta(1)^-1", 2),
        ("t(R1)", 2),
        ("phi(s1 s2 s1) harer(s3)^-1", 3),
    ] {
        let expr = parse_expression(text)?;
        let class = evaluate(&expr, genus)?;
        println!(
            "{expr}  at genus {genus}:  x1 -> {}",
            class.apply(&Word::x(1))?
        );
    }
    let artin = evaluate_any(&parse_expression("artin(s1 s2)")?, 3)?;
    println!("artin(s1 s2):\n{}", artin.endo());
    match parse_expression("a1 q7") {
        Err(e) => println!("error: {e}"),
        Ok(e) => println!("parsed {e}"),
    }
    Ok(())
}
