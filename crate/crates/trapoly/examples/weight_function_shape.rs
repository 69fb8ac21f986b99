//! The continuous weight of the G family from the closed scattering
//! amplitude: w(z) is proportional to 1/A(z)^2, so ln w = -2 ln A exactly,
//! and the product w A^2 is 1 for every z.

use trapoly::closed_form::{amplitude, weight, weight_log};

fn main() -> Result<(), trapoly::Error> {
    let (nu, sigma) = (3.0, -35.0);
    println!("G weight, nu = {nu}, sigma = {sigma}");
    println!(
        "{:>6} {:>16} {:>16} {:>12}",
        "z", "ln w(z)", "A(z)", "w A^2"
    );
    let mut z = 0.5;
    while z <= 8.0 {
        let lw = weight_log(nu, sigma, z)?;
        let a = amplitude(nu, sigma, z)?;
        let w = weight(nu, sigma, z)?;
        println!("{z:>6.2} {lw:>16.8} {a:>16.6e} {:>12.8}", w * a * a);
        z += 1.5;
    }

    // very large nu at large z overflows the weight but not its log
    match weight(50.0, sigma, 5000.0) {
        Err(e) => println!("\nweight(nu=50, z=5000): {e}"),
        Ok(_) => unreachable!("overflow guard must trip"),
    }
    println!(
        "weight_log(nu=50, z=5000) stays finite: {:.4}",
        weight_log(50.0, sigma, 5000.0)?
    );
    Ok(())
}
