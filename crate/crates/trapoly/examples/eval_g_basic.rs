//! Evaluate the second family G in its squared argument z^2, including
//! negative z^2 (the bound-state side) and the orthonormal rescaling.

use trapoly::recursion::{apply_orthonormal_scale, eval_g_sequence, GParams, SeedKind};

fn main() -> Result<(), trapoly::Error> {
    let p = GParams::new(1.0, 2.0, 3.0)?;

    for zsq in [5.4, -2.0] {
        let seq = eval_g_sequence(&p, zsq, 8, SeedKind::FirstKind)?;
        let ortho = apply_orthonormal_scale(&seq, p.mu, p.nu)?;
        println!("G(mu=1, nu=2, sigma=3) at z^2 = {zsq}");
        println!("{:>3} {:>24} {:>24}", "n", "barred", "orthonormal");
        for n in 0..seq.len() {
            println!("{n:>3} {:>24.16e} {:>24.16e}", seq.value(n), ortho.value(n));
        }
        println!();
    }
    Ok(())
}
