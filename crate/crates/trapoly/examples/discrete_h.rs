//! The beta-discrete variant of the first family: same coefficients,
//! evaluated on the exponential grid representation with beta in (0, 1).

use trapoly::recursion::{eval_h_discrete_sequence, HParams};

fn main() -> Result<(), trapoly::Error> {
    let p = HParams::new(2.0, 3.0, 1.0, std::f64::consts::FRAC_PI_2)?;
    let beta = 0.5;
    let x_k = 0.1;
    let seq = eval_h_discrete_sequence(&p, beta, x_k, 6)?;

    println!("discrete H(mu=2, nu=3, alpha=1), beta = {beta}, x_k = {x_k}");
    for n in 0..seq.len() {
        println!("n = {n}: {:.16e}", seq.value(n));
    }

    // entry 1 has the closed form (7 sqrt(2) - 2) / 4 at these parameters
    let expect = (7.0 * std::f64::consts::SQRT_2 - 2.0) / 4.0;
    println!("\nn = 1 closed form: {expect:.16e}");
    assert!((seq.value(1) - expect).abs() < 1e-14);

    // beta outside (0, 1) is rejected
    assert!(eval_h_discrete_sequence(&p, 1.0, x_k, 3).is_err());
    assert!(eval_h_discrete_sequence(&p, 0.0, x_k, 3).is_err());
    println!("beta = 0 and beta = 1 are rejected as required");
    Ok(())
}
