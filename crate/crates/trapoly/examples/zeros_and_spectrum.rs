//! Zeros of both families and the two-truncation spectrum classification.
//! For sigma = -35 the G family shows exactly four truncation-stable
//! points below zero; they match the closed-form bound levels.

use trapoly::closed_form::bound_spectrum;
use trapoly::recursion::{GParams, HParams};
use trapoly::spectral::{classify_spectrum, zeros_g, zeros_h, DiscreteRegion};

fn main() -> Result<(), trapoly::Error> {
    let h = HParams::new(2.0, 3.0, 1.0, 0.7 * std::f64::consts::PI)?;
    let zh = zeros_h(&h, 50)?;
    println!(
        "H zeros, order 50: min {:.6}, max {:.6}, {} negative",
        zh[0],
        zh[49],
        zh.iter().filter(|&&z| z < 0.0).count()
    );

    let g = GParams::new(2.0, 3.0, -35.0)?;
    let za = zeros_g(&g, 200)?;
    let zb = zeros_g(&g, 300)?;
    let rep = classify_spectrum(&za, &zb, 1e-6, DiscreteRegion::Below(0.0))?;

    println!("\nG zeros, sigma = -35: {} discrete points", rep.n_discrete);
    let exact = bound_spectrum(3.0, -35.0);
    println!(
        "{:>24} {:>24} {:>12}",
        "stable zero", "closed form", "rel diff"
    );
    for (got, want) in rep.discrete_points.iter().zip(&exact.levels) {
        println!(
            "{got:>24.16e} {want:>24.16e} {:>12.2e}",
            ((got - want) / want).abs()
        );
    }
    println!(
        "\n{} samples classified continuous (spacing shrinks with order)",
        rep.continuous_samples.len()
    );
    Ok(())
}
