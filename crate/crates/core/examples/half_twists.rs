//! Half twists at genus 2: the boundary pair, the arms, their action on the
//! handle curves, and the factorization beta_{1,1} = h'_R h_A.

use surface_braid::{
    arms_twist, beta_rs_direct, half_twist, handle_relator, relator, Curve, Direction,
    HalfTwistName,
};

fn main() -> surface_braid::Result<()> {
    let h_r = half_twist(HalfTwistName::forward(Curve::Boundary), 2)?;
    let h_r_rev = half_twist(HalfTwistName::reverse(Curve::Boundary), 2)?;
    println!("h_R:\n{}", h_r.endo());
    println!("h'_R:\n{}", h_r_rev.endo());

    let (r1, r2, r) = (handle_relator(1)?, handle_relator(2)?, relator(2)?);
    println!("h_R(R1) == R2: {}", h_r.apply(&r1)? == r2);
    println!(
        "h_R(R2) == R2^-1 R: {}",
        h_r.apply(&r2)? == r2.inverse().concat(&r)
    );
    println!(
        "h_R then h'_R is the identity: {}",
        h_r.compose(&h_r_rev)?.is_identity()
    );

    let composite = h_r_rev.compose(&arms_twist(2, Direction::Forward)?)?;
    println!(
        "h'_R h_A == beta_{{1,1}}: {}",
        composite == beta_rs_direct(1, 1)?
    );
    Ok(())
}
