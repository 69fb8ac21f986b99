//! First-kind vs second-kind solutions of the same three-term recursion.
//! Any independent seed pair generates a second solution; seeds equal to
//! the first-kind pair are rejected.

use trapoly::recursion::{eval_h_sequence, h_first_seed, HParams, SeedKind};

fn main() -> Result<(), trapoly::Error> {
    let p = HParams::new(0.5, 1.5, 2.0, 1.1)?;
    let x = 0.2;

    let first = eval_h_sequence(&p, x, 10, SeedKind::FirstKind)?;
    let second = eval_h_sequence(&p, x, 10, SeedKind::SecondKind { c0: 0.0, c1: 1.0 })?;

    println!("{:>3} {:>24} {:>24}", "n", "first kind", "second kind");
    for n in 0..first.len() {
        println!(
            "{n:>3} {:>24.16e} {:>24.16e}",
            first.value(n),
            second.value(n)
        );
    }

    // the pair (1, first seed) is the first-kind solution in disguise
    let c1 = h_first_seed(&p, x);
    match eval_h_sequence(&p, x, 5, SeedKind::SecondKind { c0: 1.0, c1 }) {
        Err(e) => println!("\nfirst-kind seeds via SecondKind rejected: {e}"),
        Ok(_) => unreachable!("degenerate seeds must be rejected"),
    }
    Ok(())
}
