//! Parameter maps from solvable potentials onto the two families: each
//! row carries its own reality conditions, and the map is invariant under
//! the length-scale lambda once energies are expressed in lambda^2 units.

use trapoly::physics::{map_to_h, potential_phase_shift, PotentialId, PotentialSpec};

fn main() -> Result<(), trapoly::Error> {
    // hyperbolic Eckart row: cos theta = -u0/u1
    let spec = PotentialSpec::new(PotentialId::HypEckart, -1.0, 2.0, 1.5, 0.0, 1.0)?;
    let m = map_to_h(&spec, -1.0)?;
    println!("HypEckart at eps = -1:");
    println!("  theta = {:.12}", m.params.theta);
    println!("  z     = {:.12}", m.z);
    println!("  mu    = {:.12}", m.params.mu);
    println!("  nu    = {:.12}", m.params.nu);

    // out-of-range energies violate |cos theta| <= 1 and are refused
    match map_to_h(&spec, 10.0) {
        Err(e) => println!("  eps = 10 refused: {e}"),
        Ok(_) => unreachable!("reality condition must trip"),
    }

    // scattering phase shift through a second-family row
    let pt = PotentialSpec::new(PotentialId::Pt2, -69.875, 0.0, 8.75, 0.0, 1.0)?;
    let delta = potential_phase_shift(&pt, 2.0, 2.0)?;
    println!("\nPt2 phase shift at eps = 2: {delta:.12}");

    // lambda rescaling leaves mapped parameters untouched
    for lambda in [0.5, 1.0, 3.0] {
        let s = PotentialSpec::new(PotentialId::Pt2, -69.875, 0.0, 8.75, 0.0, lambda)?;
        let d = potential_phase_shift(&s, 2.0, 2.0)?;
        println!("  lambda = {lambda}: delta = {d:.12}");
    }
    Ok(())
}
