//! beta_i against the full twists along the three curves of its pair of
//! pants.

use surface_braid::is_geometric_image;

fn main() -> surface_braid::Result<()> {
    for (i, genus) in [(1, 2), (1, 3), (2, 3)] {
        print!("{}", is_geometric_image(i, genus)?.to_text());
    }
    Ok(())
}
