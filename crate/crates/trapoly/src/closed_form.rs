//! Closed-form physics quantities of the second family: the finite bound
//! spectrum, the scattering phase shift and amplitude built from complex
//! log-gamma, the conjectured (unnormalized) weight, and a Gauss-quadrature
//! orthogonality check. The extrapolated variants continue the gamma
//! arguments to sigma > 0; they are exploratory, not part of the core
//! contract.

use crate::error::{Error, Result};
use crate::numerics::{log_gamma_complex, ComplexValue};
use crate::recursion::{eval_g_sequence, orthonormal_log_scales, GParams, SeedKind};
use crate::spectral::{build_g_matrix, golub_welsch};

/// The finite discrete spectrum: z_n^2 levels ascending toward 0.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundSpectrum {
    pub levels: Vec<f64>,
    pub count: usize,
}

/// Levels z_n^2 = -2 (n + (nu+1)/2 - sqrt(-sigma))^2 for every integer
/// n >= 0 with n <= sqrt(-sigma) - (nu+1)/2. Total: sigma >= 0 or a negative
/// ceiling gives an empty spectrum, never an error.
pub fn bound_spectrum(nu: f64, sigma: f64) -> BoundSpectrum {
    if sigma >= 0.0 {
        return BoundSpectrum {
            levels: Vec::new(),
            count: 0,
        };
    }
    let h = 0.5 * (nu + 1.0);
    let s = (-sigma).sqrt();
    let top = s - h;
    if top < 0.0 {
        return BoundSpectrum {
            levels: Vec::new(),
            count: 0,
        };
    }
    let count = top.floor() as usize + 1;
    let levels = (0..count)
        .map(|n| {
            let d = n as f64 + h - s;
            let v = -2.0 * d * d;
            if v == 0.0 {
                0.0
            } else {
                v
            }
        })
        .collect();
    BoundSpectrum { levels, count }
}

/// The shared log-gamma combination of the phase/amplitude formulas:
/// lnG(i sqrt2 z) - lnG(h - s + i z/sqrt2) - lnG(h + s + i z/sqrt2) with
/// h = (nu+1)/2 and s = sqrt(-sigma). Im is the phase shift, Re the log
/// amplitude.
fn gamma_combo(nu: f64, sigma: f64, z: f64) -> Result<ComplexValue> {
    if !(nu > -1.0) {
        return Err(Error::Parameter(format!("require nu > -1, got {nu}")));
    }
    if !(sigma < 0.0) {
        return Err(Error::Domain(format!(
            "closed forms need sigma < 0 (got {sigma}); use the _extrapolated variants for sigma >= 0"
        )));
    }
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!("require z > 0, got {z}")));
    }
    let h = 0.5 * (nu + 1.0);
    let s = (-sigma).sqrt();
    let y = z / std::f64::consts::SQRT_2;
    let t1 = log_gamma_complex(ComplexValue::new(0.0, std::f64::consts::SQRT_2 * z))?;
    let t2 = log_gamma_complex(ComplexValue::new(h - s, y))?;
    let t3 = log_gamma_complex(ComplexValue::new(h + s, y))?;
    Ok(ComplexValue::new(
        t1.re - t2.re - t3.re,
        t1.im - t2.im - t3.im,
    ))
}

/// Continuation of the combination to any sigma: for sigma > 0 the shift s
/// turns imaginary and moves into the gamma arguments' imaginary parts.
fn gamma_combo_extrapolated(nu: f64, sigma: f64, z: f64) -> Result<ComplexValue> {
    if sigma < 0.0 {
        return gamma_combo(nu, sigma, z);
    }
    if !(nu > -1.0) {
        return Err(Error::Parameter(format!("require nu > -1, got {nu}")));
    }
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!("require z > 0, got {z}")));
    }
    if !sigma.is_finite() {
        return Err(Error::Parameter("sigma must be finite".into()));
    }
    let h = 0.5 * (nu + 1.0);
    let sq = sigma.sqrt();
    let y = z / std::f64::consts::SQRT_2;
    let t1 = log_gamma_complex(ComplexValue::new(0.0, std::f64::consts::SQRT_2 * z))?;
    let t2 = log_gamma_complex(ComplexValue::new(h, y - sq))?;
    let t3 = log_gamma_complex(ComplexValue::new(h, y + sq))?;
    Ok(ComplexValue::new(
        t1.re - t2.re - t3.re,
        t1.im - t2.im - t3.im,
    ))
}

/// Scattering phase shift in radians, on the continuous log-gamma branch.
pub fn phase_shift(nu: f64, sigma: f64, z: f64) -> Result<f64> {
    Ok(gamma_combo(nu, sigma, z)?.im)
}

/// Scattering amplitude modulus (unnormalized; the underlying relation is a
/// proportionality).
pub fn amplitude(nu: f64, sigma: f64, z: f64) -> Result<f64> {
    Ok(gamma_combo(nu, sigma, z)?.re.exp())
}

/// ln of the unnormalized weight 1/A^2; finite wherever the combination is.
pub fn weight_log(nu: f64, sigma: f64, z: f64) -> Result<f64> {
    Ok(-2.0 * gamma_combo(nu, sigma, z)?.re)
}

/// Unnormalized weight 1/A^2 as a plain double.
pub fn weight(nu: f64, sigma: f64, z: f64) -> Result<f64> {
    let lw = weight_log(nu, sigma, z)?;
    if lw > 709.0 {
        return Err(Error::Domain(format!(
            "infinite weight: the amplitude underflows at z = {z}; use weight_log"
        )));
    }
    Ok(lw.exp())
}

pub fn phase_shift_extrapolated(nu: f64, sigma: f64, z: f64) -> Result<f64> {
    Ok(gamma_combo_extrapolated(nu, sigma, z)?.im)
}

pub fn amplitude_extrapolated(nu: f64, sigma: f64, z: f64) -> Result<f64> {
    Ok(gamma_combo_extrapolated(nu, sigma, z)?.re.exp())
}

pub fn weight_extrapolated(nu: f64, sigma: f64, z: f64) -> Result<f64> {
    let lw = -2.0 * gamma_combo_extrapolated(nu, sigma, z)?.re;
    if lw > 709.0 {
        return Err(Error::Domain(format!(
            "infinite weight: the amplitude underflows at z = {z}"
        )));
    }
    Ok(lw.exp())
}

/// Discrete Gauss analogue of the orthonormality relation: the n_quad-point
/// rule of the family applied to the orthonormalized product, expected to be
/// the Kronecker delta. Degrees must stay below n_quad / 3 so the rule is
/// comfortably exact. Terms are assembled in log space: nodes deep in the
/// tails pair tiny weights with huge polynomial values.
pub fn orthogonality_check(p: &GParams, n: usize, m: usize, n_quad: usize) -> Result<f64> {
    p.validate()?;
    if n_quad == 0 || n >= n_quad / 3 || m >= n_quad / 3 {
        return Err(Error::Parameter(format!(
            "degrees n = {n}, m = {m} must be below n_quad / 3 = {}",
            n_quad / 3
        )));
    }
    let rule = golub_welsch(&build_g_matrix(p, n_quad)?)?;
    let top = n.max(m);
    let ln_a = orthonormal_log_scales(top, p.mu, p.nu)?;
    let ln10 = std::f64::consts::LN_10;
    let mut sum = 0.0f64;
    for (k, &node) in rule.nodes.iter().enumerate() {
        let seq = eval_g_sequence(p, node, top, SeedKind::FirstKind)?;
        let sgn = seq.sign(n) * seq.sign(m);
        if sgn == 0.0 {
            continue;
        }
        let l = rule.log_weights[k]
            + ln10 * seq.log10_abs(n)
            + ln_a[n]
            + ln10 * seq.log10_abs(m)
            + ln_a[m];
        sum += sgn * l.exp();
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn bound_spectrum_examples() {
        let bs = bound_spectrum(3.0, -35.0);
        assert_eq!(bs.count, 4);
        assert_eq!(bs.levels.len(), 4);
        let approx = [-30.6714, -17.0070, -7.3427, -1.6784];
        for (got, want) in bs.levels.iter().zip(approx) {
            assert!((got - want).abs() < 5e-4, "{got} vs {want}");
        }
        for w in bs.levels.windows(2) {
            assert!(w[0] < w[1]);
        }
        // exact reconstruction
        let s = 35f64.sqrt();
        for (n, &l) in bs.levels.iter().enumerate() {
            let d = n as f64 + 2.0 - s;
            assert!(rel(l, -2.0 * d * d) < 1e-15);
        }
        assert_eq!(bound_spectrum(3.0, 3.0).count, 0);
        // boundary: sqrt(-sigma) exactly (nu+1)/2 keeps one level at 0
        let edge = bound_spectrum(3.0, -4.0);
        assert_eq!(edge.count, 1);
        assert_eq!(edge.levels[0], 0.0);
        // just below the boundary: none
        assert_eq!(bound_spectrum(3.0, -3.99).count, 0);
    }

    #[test]
    fn phase_shift_golden() {
        // arbitrary-precision gamma oracle values, nu = 3, sigma = -35
        assert!(rel(phase_shift(3.0, -35.0, 1.0).unwrap(), 9.6248573909438992) < 1e-12);
        assert!(rel(phase_shift(3.0, -35.0, 2.0).unwrap(), 8.2010645301964462) < 1e-12);
    }

    #[test]
    fn amplitude_golden() {
        assert!(rel(amplitude(3.0, -35.0, 1.0).unwrap(), 0.0016141934937628532) < 1e-12);
        assert!(rel(amplitude(3.0, -35.0, 2.0).unwrap(), 0.0010798066355452342) < 1e-12);
    }

    #[test]
    fn weight_amplitude_identity() {
        for z in [0.1, 0.9, 3.3, 11.0, 50.0] {
            let a = amplitude(3.0, -35.0, z).unwrap();
            assert!(a > 0.0);
            let w = weight(3.0, -35.0, z).unwrap();
            assert!(w > 0.0);
            assert!(rel(w * a * a, 1.0) < 1e-10, "z = {z}");
            assert!(rel(weight_log(3.0, -35.0, z).unwrap(), -2.0 * a.ln()) < 1e-10);
        }
    }

    #[test]
    fn phase_shift_is_continuous() {
        let mut prev = phase_shift(3.0, -35.0, 0.5).unwrap();
        let mut z = 0.51;
        while z <= 20.0 {
            let cur = phase_shift(3.0, -35.0, z).unwrap();
            assert!((cur - prev).abs() < 0.2, "jump at z = {z}");
            prev = cur;
            z += 0.01;
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(phase_shift(3.0, 1.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(
            phase_shift(3.0, -35.0, 0.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            phase_shift(3.0, -35.0, -2.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            amplitude(-1.5, -35.0, 1.0),
            Err(Error::Parameter(_))
        ));
        // the exponential parts of the weight cancel; the z^(2 nu + 1) tail
        // stays representable at moderate nu and overflows at large nu
        let w = weight(3.0, -35.0, 500.0).unwrap();
        assert!(w.is_finite() && w > 0.0);
        assert!(matches!(weight(50.0, -35.0, 5000.0), Err(Error::Domain(_))));
        assert!(weight_log(50.0, -35.0, 5000.0).unwrap().is_finite());
    }

    #[test]
    fn extrapolated_variants() {
        // continuous across sigma = 0
        let a = phase_shift_extrapolated(2.0, -1e-8, 1.3).unwrap();
        let b = phase_shift_extrapolated(2.0, 1e-8, 1.3).unwrap();
        assert!((a - b).abs() < 1e-4);
        let a = amplitude_extrapolated(2.0, -1e-8, 1.3).unwrap();
        let b = amplitude_extrapolated(2.0, 1e-8, 1.3).unwrap();
        assert!(rel(a, b) < 1e-4);
        // negative sigma defers to the standard forms
        assert!(
            rel(
                phase_shift_extrapolated(3.0, -35.0, 1.0).unwrap(),
                phase_shift(3.0, -35.0, 1.0).unwrap()
            ) < 1e-15
        );
        // finite for positive sigma
        let w = weight_extrapolated(1.0, 3.0, 2.0).unwrap();
        assert!(w.is_finite() && w > 0.0);
    }

    #[test]
    fn orthogonality_check_kronecker() {
        let p = GParams::new(1.0, 2.0, 3.0).unwrap();
        assert!((orthogonality_check(&p, 5, 5, 30).unwrap() - 1.0).abs() < 1e-10);
        assert!(orthogonality_check(&p, 2, 7, 30).unwrap().abs() < 1e-10);
        // mixed spectrum: bound states dominate some nodes
        let q = GParams::new(3.0, 3.0, -35.0).unwrap();
        assert!((orthogonality_check(&q, 3, 3, 45).unwrap() - 1.0).abs() < 1e-10);
        assert!(orthogonality_check(&q, 3, 6, 45).unwrap().abs() < 1e-10);
        assert!(matches!(
            orthogonality_check(&p, 10, 2, 30),
            Err(Error::Parameter(_))
        ));
    }
}
