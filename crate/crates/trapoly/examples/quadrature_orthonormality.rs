//! Gaussian quadrature from the G-family matrix and the discrete
//! orthonormality it induces: sum_k w_k Gn(x_k) Gm(x_k) = delta_nm for
//! n, m well below the rule size, even with bound states present.

use trapoly::closed_form::orthogonality_check;
use trapoly::recursion::GParams;

fn main() -> Result<(), trapoly::Error> {
    let p = GParams::new(3.0, 3.0, -35.0)?;
    let n_quad = 45;

    println!("G(mu=3, nu=3, sigma=-35), rule size {n_quad}");
    println!("{:>3} {:>3} {:>24}", "n", "m", "sum - delta");
    for n in 0..=4 {
        for m in n..=4 {
            let s = orthogonality_check(&p, n, m, n_quad)?;
            let target = if n == m { 1.0 } else { 0.0 };
            println!("{n:>3} {m:>3} {:>24.2e}", s - target);
        }
    }

    // degrees too close to the rule size are rejected, not mis-summed
    match orthogonality_check(&p, 20, 20, n_quad) {
        Err(e) => println!("\nn = 20 with rule 45 rejected: {e}"),
        Ok(_) => unreachable!("degree guard must trip"),
    }
    Ok(())
}
