//! From a potential to its bound-state energies along two routes: the
//! closed-form level formula behind the parameter map, and the discrete
//! points of the truncated polynomial spectrum. Both agree.

use trapoly::physics::{map_to_g, potential_bound_energies, PotentialId, PotentialSpec};
use trapoly::spectral::{classify_spectrum, zeros_g, DiscreteRegion};

fn main() -> Result<(), trapoly::Error> {
    // second-family row with u0 = -69.875, u_plus = 8.75: sigma = -35, nu = 3
    let spec = PotentialSpec::new(PotentialId::Pt2, -69.875, 0.0, 8.75, 0.0, 1.0)?;
    let mu_override = 2.0;

    let energies = potential_bound_energies(&spec, mu_override)?;
    println!("closed-form bound energies (lambda^2/2 units):");
    for (i, e) in energies.iter().enumerate() {
        println!("  level {i}: {e:.12}");
    }

    // the same spectrum via zero stability under truncation growth
    let m = map_to_g(&spec, 1.0, mu_override)?;
    let za = zeros_g(&m.params, 200)?;
    let zb = zeros_g(&m.params, 300)?;
    let rep = classify_spectrum(&za, &zb, 1e-6, DiscreteRegion::Below(0.0))?;

    println!("\ntruncation-stable points (energy = 2 z^2):");
    for (i, zsq) in rep.discrete_points.iter().enumerate() {
        let e = 2.0 * zsq;
        let rel = ((e - energies[i]) / energies[i]).abs();
        println!("  level {i}: {e:.12}  (rel diff {rel:.2e})");
    }
    assert_eq!(energies.len(), rep.n_discrete);

    // an Eckart-type row solved by damped fixed-point iteration
    let eck = PotentialSpec::new(PotentialId::EckartRow3, -4.0, 0.0, 0.0, 0.0, 1.0)?;
    let ee = potential_bound_energies(&eck, 1.0)?;
    println!("\nEckart row, u0 = -4: {} levels: {ee:?}", ee.len());
    Ok(())
}
