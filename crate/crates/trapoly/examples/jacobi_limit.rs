//! At x = 0 the argument-dependent term drops out of the recursion and
//! the first family collapses onto the Jacobi polynomials
//! P_n^(mu,nu)(cos theta), an independent cross-check of the recursion.

use trapoly::numerics::jacobi_poly;
use trapoly::recursion::{eval_h_sequence, HParams, SeedKind};

fn main() -> Result<(), trapoly::Error> {
    let (mu, nu) = (0.7, 2.3);
    let theta: f64 = 1.1;
    // alpha is arbitrary: it only enters multiplied by x
    let p = HParams::new(mu, nu, 4.0, theta)?;
    let seq = eval_h_sequence(&p, 0.0, 10, SeedKind::FirstKind)?;

    println!("H at x=0 vs Jacobi P_n^({mu},{nu})(cos {theta})");
    println!(
        "{:>3} {:>22} {:>22} {:>10}",
        "n", "H value", "Jacobi", "diff"
    );
    for n in 0..=10 {
        let h = seq.value(n);
        let j = jacobi_poly(n, mu, nu, theta.cos())?;
        let diff = (h - j).abs();
        println!("{n:>3} {h:>22.14e} {j:>22.14e} {diff:>10.2e}");
        assert!(diff <= 1e-10 * j.abs().max(1.0));
    }
    Ok(())
}
