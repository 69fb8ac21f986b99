//! Large-order asymptotics diagnostics: envelope decay exponents from peak
//! heights, sinusoidal fits of tau-rescaled sequences under a linear-in-n or
//! logarithmic-in-n phase law, and amplitude scans across a z grid.

use crate::error::{Error, Result};
use crate::recursion::{
    apply_orthonormal_scale, eval_g_sequence, GParams, ScaledSequence, SeedKind,
};

/// Phase law of the oscillation: phase = freq * n + c * ln n (LinearN, c
/// fitted) or phase = freq * ln n (LogN, c identically 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OscillationLaw {
    LinearN,
    LogN,
}

/// Fitted model n^tau * seq_n ~ amplitude * cos(phase_n + phase), with
/// rms_residual expressed as a fraction of the amplitude.
#[derive(Debug, Clone)]
pub struct AsymptoticsFit {
    pub tau: f64,
    pub law: OscillationLaw,
    pub freq: f64,
    pub log_coeff: f64,
    pub amplitude: f64,
    pub phase: f64,
    pub rms_residual: f64,
}

/// One successful amplitude/phase extraction at a grid point z.
#[derive(Debug, Clone)]
pub struct AmplitudeSample {
    pub z: f64,
    pub freq: f64,
    pub amplitude: f64,
    pub phase: f64,
    pub rms_residual: f64,
}

/// Scan results; grid points whose fit failed are collected, not fatal.
#[derive(Debug)]
pub struct AmplitudeScan {
    pub samples: Vec<AmplitudeSample>,
    pub failures: Vec<(f64, Error)>,
}

fn window_check(seq: &ScaledSequence, n_lo: usize, n_hi: usize, min_len: usize) -> Result<()> {
    if n_lo < 2 || n_hi <= n_lo || n_hi - n_lo < min_len {
        return Err(Error::Parameter(format!(
            "window [{n_lo}, {n_hi}] needs n_lo >= 2 and at least {min_len} points"
        )));
    }
    if n_hi >= seq.len() {
        return Err(Error::Parameter(format!(
            "window end {n_hi} exceeds the sequence length {}",
            seq.len()
        )));
    }
    Ok(())
}

/// Envelope decay exponent tau of an oscillating sequence: locate the local
/// maxima of ln|seq_n| in the window, refine each peak by a parabola through
/// its three samples, and fit ln(peak height) against ln(peak position).
/// Returns tau with seq_n ~ n^-tau at peaks.
pub fn envelope_exponent(seq: &ScaledSequence, n_lo: usize, n_hi: usize) -> Result<f64> {
    window_check(seq, n_lo, n_hi, 50)?;
    let mut sign_changes = 0usize;
    let mut last_sign = 0.0f64;
    for n in n_lo..=n_hi {
        let s = seq.sign(n);
        if s != 0.0 {
            if last_sign != 0.0 && s != last_sign {
                sign_changes += 1;
            }
            last_sign = s;
        }
    }
    if sign_changes < 5 {
        return Err(Error::Fit(format!(
            "only {sign_changes} sign changes in the window; sequence does not oscillate"
        )));
    }
    let ln10 = std::f64::consts::LN_10;
    let loga: Vec<f64> = (n_lo..=n_hi).map(|n| seq.log10_abs(n) * ln10).collect();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 1..loga.len() - 1 {
        let (l, m, r) = (loga[i - 1], loga[i], loga[i + 1]);
        if !(l.is_finite() && m.is_finite() && r.is_finite()) {
            continue;
        }
        if m > l && m > r {
            // parabolic refinement of position and height
            let denom = l - 2.0 * m + r;
            let (dn, h) = if denom < 0.0 {
                let dn = 0.5 * (l - r) / denom;
                (dn, m - 0.25 * (l - r) * dn)
            } else {
                (0.0, m)
            };
            xs.push(((n_lo + i) as f64 + dn).ln());
            ys.push(h);
        }
    }
    if xs.len() < 3 {
        return Err(Error::Fit(format!(
            "found only {} envelope peaks; need at least 3",
            xs.len()
        )));
    }
    let slope = least_squares_slope(&xs, &ys);
    Ok(-slope)
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Least-squares line y = a + b x.
fn least_squares_line(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let b = least_squares_slope(xs, ys);
    let n = xs.len() as f64;
    let a = (ys.iter().sum::<f64>() - b * xs.iter().sum::<f64>()) / n;
    (a, b)
}

/// For fixed phase samples psi, solve y ~ p cos(psi) + q sin(psi) by the
/// 2x2 normal equations; returns (p, q, rss).
fn solve_pq(y: &[f64], psi: &[f64]) -> (f64, f64, f64) {
    let (mut cc, mut cs, mut ss, mut yc, mut ys, mut yy) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    for (&yi, &ps) in y.iter().zip(psi) {
        let c = ps.cos();
        let s = ps.sin();
        cc += c * c;
        cs += c * s;
        ss += s * s;
        yc += yi * c;
        ys += yi * s;
        yy += yi * yi;
    }
    let det = cc * ss - cs * cs;
    if det.abs() < 1e-12 * cc.max(ss).max(1e-300) {
        return (0.0, 0.0, yy);
    }
    let p = (yc * ss - ys * cs) / det;
    let q = (ys * cc - yc * cs) / det;
    (p, q, (yy - p * yc - q * ys).max(0.0))
}

fn golden_min(mut f: impl FnMut(f64) -> f64, mut a: f64, mut b: f64, iters: usize) -> f64 {
    let inv_phi = 0.6180339887498949;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..iters {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Fit n^tau * seq_n ~ A cos(freq g(n) + c ln n + phi) over the window.
///
/// LinearN (g(n) = n, c free) is searched on a 2d grid that is first
/// reparametrized so the two phase directions are orthogonal over the
/// window: with lnfit the least-squares line of ln n against n, the model
/// becomes F n + C (ln n - lnfit(n)) + const, which decouples the grid.
/// LogN (g(n) = ln n, c = 0) is a 1d search. Both are refined by
/// golden-section descent. A residual above half the amplitude is a fit
/// failure, not a result.
pub fn fit_oscillation(
    seq: &ScaledSequence,
    n_lo: usize,
    n_hi: usize,
    tau: f64,
    law: OscillationLaw,
) -> Result<AsymptoticsFit> {
    window_check(seq, n_lo, n_hi, 10)?;
    if !tau.is_finite() {
        return Err(Error::Parameter("tau must be finite".into()));
    }
    let ln10 = std::f64::consts::LN_10;
    let ns: Vec<f64> = (n_lo..=n_hi).map(|n| n as f64).collect();
    let mut y = Vec::with_capacity(ns.len());
    for n in n_lo..=n_hi {
        let lv = tau * (n as f64).ln() + seq.log10_abs(n) * ln10;
        if lv > 300.0 {
            return Err(Error::Fit(
                "rescaled sequence overflows; tau does not match the envelope".into(),
            ));
        }
        y.push(seq.sign(n) * lv.exp());
    }
    let y_max = y.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    let fit = match law {
        OscillationLaw::LogN => {
            let psi_of = |freq: f64, out: &mut Vec<f64>| {
                out.clear();
                out.extend(ns.iter().map(|&n| freq * n.ln()));
            };
            let mut psi = Vec::with_capacity(ns.len());
            let mut eval = |freq: f64| {
                let mut buf = Vec::with_capacity(ns.len());
                psi_of(freq, &mut buf);
                solve_pq(&y, &buf).2
            };
            let mut best_f = 0.0;
            let mut best_rss = f64::INFINITY;
            let mut f = 0.0;
            while f <= 20.0 + 1e-12 {
                let rss = eval(f);
                if rss < best_rss {
                    best_rss = rss;
                    best_f = f;
                }
                f += 0.05;
            }
            let freq = golden_min(&mut eval, (best_f - 0.05).max(0.0), best_f + 0.05, 50);
            psi_of(freq, &mut psi);
            let (p, q, rss) = solve_pq(&y, &psi);
            finish_fit(tau, law, freq, 0.0, p, q, rss, y.len(), 0.0)
        }
        OscillationLaw::LinearN => {
            let lns: Vec<f64> = ns.iter().map(|&n| n.ln()).collect();
            let (a_ln, b_ln) = least_squares_line(&ns, &lns);
            let g2: Vec<f64> = ns
                .iter()
                .zip(&lns)
                .map(|(&n, &l)| l - (a_ln + b_ln * n))
                .collect();
            let r_max = g2.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
            let c_step = (1.0 / r_max.max(1e-9)).min(25.0);
            let eval = |fc: (f64, f64)| {
                let psi: Vec<f64> = ns
                    .iter()
                    .zip(&g2)
                    .map(|(&n, &g)| fc.0 * n + fc.1 * g)
                    .collect();
                solve_pq(&y, &psi).2
            };
            let mut best = (0.0, 0.0);
            let mut best_rss = f64::INFINITY;
            let mut fgrid = 0.0;
            while fgrid <= std::f64::consts::PI + 1e-12 {
                let mut cgrid = -150.0;
                while cgrid <= 150.0 + 1e-12 {
                    let rss = eval((fgrid, cgrid));
                    if rss < best_rss {
                        best_rss = rss;
                        best = (fgrid, cgrid);
                    }
                    cgrid += c_step;
                }
                fgrid += 0.005;
            }
            let (mut bf, mut bc) = best;
            for _ in 0..6 {
                bf = golden_min(|f| eval((f, bc)), (bf - 0.005).max(0.0), bf + 0.005, 30);
                bc = golden_min(|c| eval((bf, c)), bc - c_step, bc + c_step, 30);
            }
            let psi: Vec<f64> = ns.iter().zip(&g2).map(|(&n, &g)| bf * n + bc * g).collect();
            let (p, q, rss) = solve_pq(&y, &psi);
            // undo the orthogonalization: F n + C g2 = (F - C b) n + C ln n - C a
            let freq = bf - bc * b_ln;
            let log_coeff = bc;
            finish_fit(tau, law, freq, log_coeff, p, q, rss, y.len(), -bc * a_ln)
        }
    }?;
    // a near-zero frequency turns the sinusoid into a slow trend absorber
    // with runaway amplitude; such a fit describes no oscillation
    if fit.amplitude > 5.0 * y_max {
        return Err(Error::Fit(format!(
            "fitted amplitude {:e} far exceeds the window data scale {y_max:e}; \
             window is not sinusoidal at this scaling",
            fit.amplitude
        )));
    }
    Ok(fit)
}

#[allow(clippy::too_many_arguments)]
fn finish_fit(
    tau: f64,
    law: OscillationLaw,
    freq: f64,
    log_coeff: f64,
    p: f64,
    q: f64,
    rss: f64,
    len: usize,
    phase_shift_back: f64,
) -> Result<AsymptoticsFit> {
    let amplitude = p.hypot(q);
    if amplitude == 0.0 {
        return Err(Error::Fit("fitted amplitude is zero".into()));
    }
    // y = p cos psi + q sin psi = A cos(psi + phi)
    let mut phase = (-q).atan2(p) + phase_shift_back;
    let two_pi = 2.0 * std::f64::consts::PI;
    while phase > std::f64::consts::PI {
        phase -= two_pi;
    }
    while phase <= -std::f64::consts::PI {
        phase += two_pi;
    }
    let rms_residual = (rss / len as f64).sqrt() / amplitude;
    if rms_residual.is_nan() || rms_residual > 0.5 {
        return Err(Error::Fit(format!(
            "window is not sinusoidal at this scaling (residual fraction {rms_residual:.3})"
        )));
    }
    Ok(AsymptoticsFit {
        tau,
        law,
        freq,
        log_coeff,
        amplitude,
        phase,
        rms_residual,
    })
}

/// Amplitude and phase of the orthonormalized second-family oscillation at
/// each z in the grid, with a fixed envelope exponent tau (1/2 is the
/// natural scattering normalization) and the LogN law. Per-point failures
/// are collected rather than aborting the scan.
pub fn amplitude_scan(
    p: &GParams,
    z_grid: &[f64],
    tau: f64,
    n_lo: usize,
    n_hi: usize,
) -> Result<AmplitudeScan> {
    p.validate()?;
    if z_grid.is_empty() {
        return Err(Error::Parameter("z grid is empty".into()));
    }
    if let Some(&bad) = z_grid.iter().find(|&&z| z <= 0.0 || !z.is_finite()) {
        return Err(Error::Parameter(format!(
            "z grid must be positive and finite, got {bad}"
        )));
    }
    let mut samples = Vec::new();
    let mut failures = Vec::new();
    for &z in z_grid {
        let attempt = (|| -> Result<AmplitudeSample> {
            let seq = eval_g_sequence(p, z * z, n_hi, SeedKind::FirstKind)?;
            let on = apply_orthonormal_scale(&seq, p.mu, p.nu)?;
            let fit = fit_oscillation(&on, n_lo, n_hi, tau, OscillationLaw::LogN)?;
            Ok(AmplitudeSample {
                z,
                freq: fit.freq,
                amplitude: fit.amplitude,
                phase: fit.phase,
                rms_residual: fit.rms_residual,
            })
        })();
        match attempt {
            Ok(s) => samples.push(s),
            Err(e) => failures.push((z, e)),
        }
    }
    Ok(AmplitudeScan { samples, failures })
}
