//! Envelope exponent and oscillation fit of the large-n tail of the
//! orthonormal G sequence: the envelope decays like n^-1/2 and the phase
//! advances linearly in ln n.

use trapoly::asymptotics::{envelope_exponent, fit_oscillation, OscillationLaw};
use trapoly::recursion::{apply_orthonormal_scale, eval_g_sequence, GParams, SeedKind};

fn main() -> Result<(), trapoly::Error> {
    let p = GParams::new(1.0, 2.0, 3.0)?;
    let zsq = 100.0;
    let (n_lo, n_hi) = (150, 1000);

    let barred = eval_g_sequence(&p, zsq, n_hi, SeedKind::FirstKind)?;
    let seq = apply_orthonormal_scale(&barred, p.mu, p.nu)?;

    let tau = envelope_exponent(&seq, n_lo, n_hi)?;
    println!("envelope exponent tau = {tau:.6} (expected near 0.5)");

    let fit = fit_oscillation(&seq, n_lo, n_hi, tau, OscillationLaw::LogN)?;
    println!("log-law fit over [{n_lo}, {n_hi}]:");
    println!("  freq         = {:.6}", fit.freq);
    println!("  amplitude    = {:.6e}", fit.amplitude);
    println!("  phase        = {:.6}", fit.phase);
    println!(
        "  rms residual = {:.4}% of amplitude",
        100.0 * fit.rms_residual
    );
    Ok(())
}
