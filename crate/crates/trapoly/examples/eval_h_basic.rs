//! Evaluate the first family H at a point, in both the raw scaled
//! representation (significand, decade) and as plain f64 where it fits.

use trapoly::recursion::{eval_h_sequence, HParams, SeedKind};

fn main() -> Result<(), trapoly::Error> {
    let p = HParams::new(2.0, 3.0, 1.0, std::f64::consts::FRAC_PI_2)?;
    let x = 0.1;
    let seq = eval_h_sequence(&p, x, 12, SeedKind::FirstKind)?;

    println!("H(mu=2, nu=3, alpha=1, theta=pi/2) at x = {x}");
    println!(
        "{:>3} {:>24} {:>6} {:>24}",
        "n", "significand", "dec", "value"
    );
    for n in 0..seq.len() {
        println!(
            "{n:>3} {:>24.16e} {:>6} {:>24.16e}",
            seq.significand(n),
            seq.exponent10(n),
            seq.value(n)
        );
    }

    // the scaled form stays meaningful long after f64 overflows
    let far = eval_h_sequence(&p, x, 2000, SeedKind::FirstKind)?;
    println!(
        "\nn = 2000: value overflows f64 ({}), scaled form {:.16e} * 10^{}",
        far.value(2000),
        far.significand(2000),
        far.exponent10(2000)
    );
    Ok(())
}
