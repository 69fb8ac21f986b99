//! Three-term recursions for both polynomial families, the discrete variant,
//! and the orthonormalization constants. Sequences are returned in a scaled
//! (significand, decimal exponent) representation so that the n^2 growth of
//! the recursion coefficients never overflows double precision.

use crate::error::{Error, Result};

/// Parameters of the first family: mu, nu, alpha and the angle theta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HParams {
    pub mu: f64,
    pub nu: f64,
    pub alpha: f64,
    pub theta: f64,
}

impl HParams {
    pub fn new(mu: f64, nu: f64, alpha: f64, theta: f64) -> Result<Self> {
        let p = Self {
            mu,
            nu,
            alpha,
            theta,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mu > -1.0) || !(self.nu > -1.0) {
            return Err(Error::Parameter(format!(
                "require mu > -1 and nu > -1, got mu = {}, nu = {}",
                self.mu, self.nu
            )));
        }
        if !self.alpha.is_finite() {
            return Err(Error::Parameter("alpha must be finite".into()));
        }
        if !(self.theta >= 0.0 && self.theta <= std::f64::consts::PI) {
            return Err(Error::Parameter(format!(
                "require 0 <= theta <= pi, got {}",
                self.theta
            )));
        }
        Ok(())
    }
}

/// Parameters of the second family: mu, nu and the shift sigma.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GParams {
    pub mu: f64,
    pub nu: f64,
    pub sigma: f64,
}

impl GParams {
    pub fn new(mu: f64, nu: f64, sigma: f64) -> Result<Self> {
        let p = Self { mu, nu, sigma };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mu > -1.0) || !(self.nu > -1.0) {
            return Err(Error::Parameter(format!(
                "require mu > -1 and nu > -1, got mu = {}, nu = {}",
                self.mu, self.nu
            )));
        }
        if !self.sigma.is_finite() {
            return Err(Error::Parameter("sigma must be finite".into()));
        }
        Ok(())
    }

    /// B_n = n + (mu+nu)/2 + 1.
    pub fn b_n(&self, n: usize) -> f64 {
        n as f64 + 0.5 * (self.mu + self.nu) + 1.0
    }
}

/// Seed selection: the canonical first-kind seeds, or caller-supplied
/// second-kind seeds (entries 0 and 1 of the sequence). There is no default
/// second-kind normalization; both coefficients must be provided and must
/// differ from the first-kind pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeedKind {
    FirstKind,
    SecondKind { c0: f64, c1: f64 },
}

/// A polynomial-value sequence stored as (significand, exponent10) pairs:
/// value_n = significand * 10^exponent10 with |significand| in [1, 10) or
/// significand = 0. Safe against overflow for orders up to 10^4 and beyond.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledSequence {
    pub entries: Vec<(f64, i64)>,
}

/// Split a finite double into (significand, exponent10).
pub(crate) fn normalize10(v: f64) -> (f64, i64) {
    if v == 0.0 {
        return (0.0, 0);
    }
    let mut e = v.abs().log10().floor() as i64;
    let mut s = v / pow10(e);
    // log10 rounding can leave the significand one decade off
    if s.abs() >= 10.0 {
        s /= 10.0;
        e += 1;
    } else if s.abs() < 1.0 {
        s *= 10.0;
        e -= 1;
    }
    (s, e)
}

pub(crate) fn pow10(e: i64) -> f64 {
    if e < -350 {
        0.0
    } else if e > 350 {
        f64::INFINITY
    } else {
        10f64.powi(e as i32)
    }
}

impl ScaledSequence {
    pub fn from_values(values: &[f64]) -> Self {
        Self {
            entries: values.iter().map(|&v| normalize10(v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn significand(&self, n: usize) -> f64 {
        self.entries[n].0
    }

    pub fn exponent10(&self, n: usize) -> i64 {
        self.entries[n].1
    }

    /// Reconstructed double value; +-inf or 0 when the exponent leaves the
    /// representable range.
    pub fn value(&self, n: usize) -> f64 {
        let (s, e) = self.entries[n];
        s * pow10(e)
    }

    /// log10 |value_n|; -inf for an exact zero.
    pub fn log10_abs(&self, n: usize) -> f64 {
        let (s, e) = self.entries[n];
        if s == 0.0 {
            f64::NEG_INFINITY
        } else {
            e as f64 + s.abs().log10()
        }
    }

    pub fn sign(&self, n: usize) -> f64 {
        let (s, _) = self.entries[n];
        if s == 0.0 {
            0.0
        } else {
            s.signum()
        }
    }
}

/// One forward step v_next = a * v1 + b * v0 in scaled arithmetic.
fn scaled_step(a: f64, v1: (f64, i64), b: f64, v0: (f64, i64)) -> (f64, i64) {
    let t1 = a * v1.0;
    let t0 = b * v0.0;
    let e = match (t1 != 0.0, t0 != 0.0) {
        (true, true) => v1.1.max(v0.1),
        (true, false) => v1.1,
        (false, true) => v0.1,
        (false, false) => return (0.0, 0),
    };
    let r = t1 * pow10(v1.1 - e) + t0 * pow10(v0.1 - e);
    let (s, de) = normalize10(r);
    if s == 0.0 {
        (0.0, 0)
    } else {
        (s, e + de)
    }
}

/// Recursion coefficients (d_n, e_n, b_n, c_n) of the first family.
///
/// At n = 0 the generic e, b, c expressions are returned in their reduced
/// forms e_0 = (nu-mu)/(mu+nu+2), b_0 = 0 (it multiplies the -1 entry, which
/// is identically zero), c_0 = 2/(mu+nu+2); the generic quotients are 0/0 at
/// degenerate mu+nu even though the limits are finite.
pub fn h_coeffs(n: usize, p: &HParams) -> Result<(f64, f64, f64, f64)> {
    p.validate()?;
    let (mu, nu) = (p.mu, p.nu);
    let s = mu + nu;
    let nf = n as f64;
    let d = {
        let h = nf + 0.5 * (s + 1.0);
        h * h + p.alpha
    };
    if n == 0 {
        let e = (nu - mu) / (s + 2.0);
        let c = 2.0 / (s + 2.0);
        return Ok((d, e, 0.0, c));
    }
    let t = 2.0 * nf + s;
    let e = (nu * nu - mu * mu) / (t * (t + 2.0));
    let b = 2.0 * (nf + mu) * (nf + nu) / (t * (t + 1.0));
    let c = 2.0 * (nf + 1.0) * (nf + s + 1.0) / ((t + 1.0) * (t + 2.0));
    Ok((d, e, b, c))
}

/// Recursion coefficients (diag_n, sub_n, sup_n) of the second family.
///
/// Breakdown guard: |sigma + B_n^2| < 1e-12 * B_n^2 makes the recursion (and
/// the tridiagonal matrix) decouple; surfaced as a typed error naming n.
pub fn g_coeffs(n: usize, p: &GParams) -> Result<(f64, f64, f64)> {
    p.validate()?;
    let (mu, nu) = (p.mu, p.nu);
    let s = mu + nu;
    let nf = n as f64;
    let bn = p.b_n(n);
    let fac_n = p.sigma + bn * bn;
    if fac_n.abs() < 1e-12 * bn * bn {
        return Err(Error::Breakdown {
            order: n,
            message: format!("sigma + B_n^2 vanishes (B_n = {bn})"),
        });
    }
    if n == 0 {
        let bracket = (mu - nu) / (s + 2.0) + 1.0;
        let diag = fac_n * bracket - 0.5 * (mu + 1.0) * (mu + 1.0);
        let sup = -fac_n * 2.0 / (s + 2.0);
        return Ok((diag, 0.0, sup));
    }
    let bnm = p.b_n(n - 1);
    let fac_m = p.sigma + bnm * bnm;
    if fac_m.abs() < 1e-12 * bnm * bnm {
        return Err(Error::Breakdown {
            order: n - 1,
            message: format!("sigma + B_n^2 vanishes (B_n = {bnm})"),
        });
    }
    let t = 2.0 * nf + s;
    let bracket = (mu * mu - nu * nu) / (t * (t + 2.0)) + 1.0;
    let diag = fac_n * bracket - 2.0 * nf * (nf + nu) / t - 0.5 * (mu + 1.0) * (mu + 1.0);
    let sub = -fac_m * 2.0 * (nf + mu) * (nf + nu) / (t * (t + 1.0));
    let sup = -fac_n * 2.0 * (nf + 1.0) * (nf + s + 1.0) / ((t + 1.0) * (t + 2.0));
    Ok((diag, sub, sup))
}

/// First-kind seed value at n = 1 for the first family.
pub fn h_first_seed(p: &HParams, x: f64) -> f64 {
    let (mu, nu) = (p.mu, p.nu);
    let h = 0.5 * (mu + nu + 1.0);
    let d0 = h * h + p.alpha;
    0.5 * (mu - nu) + 0.5 * (mu + nu + 2.0) * (p.theta.cos() - x * p.theta.sin() * d0)
}

/// First-kind seed value at n = 1 for the second family.
pub fn g_first_seed(p: &GParams, zsq: f64) -> f64 {
    let b0 = p.b_n(0);
    let mu1 = p.mu + 1.0;
    p.mu + 1.0 - (p.mu + p.nu + 2.0) * (zsq + 0.5 * mu1 * mu1) / (2.0 * (p.sigma + b0 * b0))
}

fn resolve_seeds(seed: SeedKind, first1: f64, what: &str) -> Result<(f64, f64)> {
    match seed {
        SeedKind::FirstKind => Ok((1.0, first1)),
        SeedKind::SecondKind { c0, c1 } => {
            if c0 == 1.0 && c1 == first1 {
                return Err(Error::Parameter(format!(
                    "second-kind seeds equal the first-kind {what} seeds (1, {first1}); \
                     they must differ"
                )));
            }
            Ok((c0, c1))
        }
    }
}

/// Values of the first family at x = z^-1 for orders 0..=n_max by forward
/// recursion, entry 1 pinned to the canonical seed (or the caller's
/// second-kind pair).
pub fn eval_h_sequence(
    p: &HParams,
    x: f64,
    n_max: usize,
    seed: SeedKind,
) -> Result<ScaledSequence> {
    p.validate()?;
    if !x.is_finite() {
        return Err(Error::Parameter("x must be finite".into()));
    }
    let ct = p.theta.cos();
    let st = p.theta.sin();
    let (v0, v1) = resolve_seeds(seed, h_first_seed(p, x), "linear")?;
    let mut entries = Vec::with_capacity(n_max + 1);
    entries.push(normalize10(v0));
    if n_max >= 1 {
        entries.push(normalize10(v1));
    }
    for n in 1..n_max {
        let (d, e, b, c) = h_coeffs(n, p)?;
        if c == 0.0 {
            return Err(Error::Breakdown {
                order: n,
                message: "forward coefficient c_n vanished".into(),
            });
        }
        let a = (ct - x * st * d - e) / c;
        let next = scaled_step(a, entries[n], -b / c, entries[n - 1]);
        entries.push(next);
    }
    Ok(ScaledSequence { entries })
}

/// Values of the discrete variant of the first family. beta = e^(-2 theta)
/// must lie strictly inside (0, 1); x_k is the caller's z_k^-1 grid point.
pub fn eval_h_discrete_sequence(
    p: &HParams,
    beta: f64,
    x_k: f64,
    n_max: usize,
) -> Result<ScaledSequence> {
    p.validate()?;
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::Parameter(format!(
            "beta must lie in (0, 1), got {beta}"
        )));
    }
    if !x_k.is_finite() {
        return Err(Error::Parameter("x_k must be finite".into()));
    }
    let sb2 = 2.0 * beta.sqrt();
    let onep = 1.0 + beta;
    let onem = 1.0 - beta;
    let mut entries = Vec::with_capacity(n_max + 1);
    entries.push(normalize10(1.0));
    for n in 0..n_max {
        let (d, e, b, c) = h_coeffs(n, p)?;
        let denom = sb2 * c;
        let a = (onep - x_k * onem * d - sb2 * e) / denom;
        let next = if n == 0 {
            scaled_step(a, entries[0], 0.0, entries[0])
        } else {
            scaled_step(a, entries[n], -sb2 * b / denom, entries[n - 1])
        };
        entries.push(next);
    }
    Ok(ScaledSequence { entries })
}

/// Values of the second family at z^2 for orders 0..=n_max. Negative zsq is
/// allowed: it realizes the discrete substitution z -> i z_k.
pub fn eval_g_sequence(
    p: &GParams,
    zsq: f64,
    n_max: usize,
    seed: SeedKind,
) -> Result<ScaledSequence> {
    p.validate()?;
    if !zsq.is_finite() {
        return Err(Error::Parameter("zsq must be finite".into()));
    }
    let (v0, v1) = resolve_seeds(seed, g_first_seed(p, zsq), "linear")?;
    let mut entries = Vec::with_capacity(n_max + 1);
    entries.push(normalize10(v0));
    if n_max >= 1 {
        entries.push(normalize10(v1));
    }
    for n in 1..n_max {
        let (diag, sub, sup) = g_coeffs(n, p)?;
        let a = (zsq - diag) / sup;
        let next = scaled_step(a, entries[n], -sub / sup, entries[n - 1]);
        entries.push(next);
    }
    Ok(ScaledSequence { entries })
}

/// ln A_n of the orthonormalization constant, via the telescoping ratio
/// (A_{n+1}/A_n)^2 = c_n / b_{n+1}, which is finite and positive for all
/// mu, nu > -1 (the closed-form Pochhammer quotient is the same product).
pub fn orthonormal_scale_log(n: usize, mu: f64, nu: f64) -> Result<f64> {
    Ok(orthonormal_log_scales(n, mu, nu)?[n])
}

/// ln A_n for all n = 0..=n_max at once (cumulative form of the ratio).
pub fn orthonormal_log_scales(n_max: usize, mu: f64, nu: f64) -> Result<Vec<f64>> {
    let p = HParams {
        mu,
        nu,
        alpha: 0.0,
        theta: 0.0,
    };
    p.validate()?;
    let mut out = Vec::with_capacity(n_max + 1);
    let mut acc = 0.0;
    out.push(0.0);
    for n in 0..n_max {
        let (_, _, _, c) = h_coeffs(n, &p)?;
        let (_, _, b_next, _) = h_coeffs(n + 1, &p)?;
        acc += 0.5 * (c / b_next).ln();
        out.push(acc);
    }
    Ok(out)
}

/// The orthonormalization constant A_n itself (computed in log space).
pub fn orthonormal_scale(n: usize, mu: f64, nu: f64) -> Result<f64> {
    Ok(orthonormal_scale_log(n, mu, nu)?.exp())
}

/// Entry-wise multiplication of a sequence by A_n: turns barred values into
/// orthonormal ones. Exponent bookkeeping stays in the scaled representation.
pub fn apply_orthonormal_scale(seq: &ScaledSequence, mu: f64, nu: f64) -> Result<ScaledSequence> {
    if seq.is_empty() {
        return Ok(seq.clone());
    }
    let logs = orthonormal_log_scales(seq.len() - 1, mu, nu)?;
    let ln10 = std::f64::consts::LN_10;
    let entries = seq
        .entries
        .iter()
        .zip(logs.iter())
        .map(|(&(s, e), &la)| {
            if s == 0.0 {
                (0.0, 0)
            } else {
                let total = e as f64 + s.abs().log10() + la / ln10;
                let ee = total.floor();
                (s.signum() * pow10f(total - ee), ee as i64)
            }
        })
        .collect();
    Ok(ScaledSequence { entries })
}

fn pow10f(x: f64) -> f64 {
    (x * std::f64::consts::LN_10).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::jacobi_poly;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn h_coeffs_golden() {
        let p = HParams::new(2.0, 3.0, 1.0, 0.4).unwrap();
        let (d, e, b, c) = h_coeffs(1, &p).unwrap();
        assert!(close(d, 17.0, 1e-15));
        assert!(close(e, 5.0 / 63.0, 1e-15));
        assert!(close(b, 3.0 / 7.0, 1e-15));
        assert!(close(c, 7.0 / 18.0, 1e-15));
        // mu = nu kills e_n at every order
        let q = HParams::new(1.3, 1.3, 0.7, 0.4).unwrap();
        for n in 0..20 {
            let (_, e, _, _) = h_coeffs(n, &q).unwrap();
            assert_eq!(e, 0.0);
        }
        // n = 0 reduced forms stay finite at the degenerate mu + nu = 0
        let r = HParams::new(0.5, -0.5, 0.0, 0.4).unwrap();
        let (_, e0, b0, c0) = h_coeffs(0, &r).unwrap();
        assert!(e0.is_finite() && c0.is_finite());
        assert_eq!(b0, 0.0);
    }

    #[test]
    fn g_coeffs_golden() {
        let p = GParams::new(1.0, 2.0, 3.0).unwrap();
        let (diag, sub, sup) = g_coeffs(0, &p).unwrap();
        assert!(close(diag, 5.4, 1e-14));
        assert_eq!(sub, 0.0);
        assert!(close(sup, -9.25 * 0.4, 1e-14));
    }

    #[test]
    fn g_breakdown_at_sigma_hitting_b_n() {
        // sigma = -B_1^2 for mu=1, nu=2: B_1 = 3.5
        let p = GParams::new(1.0, 2.0, -12.25).unwrap();
        match eval_g_sequence(&p, 0.3, 3, SeedKind::FirstKind) {
            Err(Error::Breakdown { order, .. }) => assert_eq!(order, 1),
            other => panic!("expected breakdown, got {other:?}"),
        }
    }

    #[test]
    fn eval_h_seed_golden() {
        // theta = pi/2, x = 0.1: entry 1 = -4
        let p = HParams::new(2.0, 3.0, 1.0, std::f64::consts::FRAC_PI_2).unwrap();
        let s = eval_h_sequence(&p, 0.1, 1, SeedKind::FirstKind).unwrap();
        assert!((s.value(1) + 4.0).abs() < 1e-12);
        // x = 0: entry 1 = -1/2 + (7/2) cos theta
        let q = HParams::new(2.0, 3.0, 1.0, 0.3).unwrap();
        let s = eval_h_sequence(&q, 0.0, 1, SeedKind::FirstKind).unwrap();
        assert!(close(s.value(1), 2.8436777119396211, 1e-14));
    }

    #[test]
    fn eval_h_all_ones_at_theta_zero() {
        let p = HParams::new(0.0, 0.0, 2.5, 0.0).unwrap();
        let s = eval_h_sequence(&p, 0.7, 20, SeedKind::FirstKind).unwrap();
        for n in 0..=20 {
            assert!(close(s.value(n), 1.0, 1e-13), "n = {n}");
        }
    }

    #[test]
    fn eval_h_jacobi_limit() {
        for (mu, nu, alpha, theta) in [
            (2.0, 3.0, 1.0, 0.7),
            (0.5, -0.5, 5.0, 2.0),
            (-0.4, 1.1, -1.0, 0.1),
        ] {
            let p = HParams::new(mu, nu, alpha, theta).unwrap();
            let s = eval_h_sequence(&p, 0.0, 30, SeedKind::FirstKind).unwrap();
            for n in 0..=30 {
                let want = jacobi_poly(n, mu, nu, theta.cos()).unwrap();
                let got = s.value(n);
                assert!(
                    (got - want).abs() <= 1e-10 * want.abs().max(1.0),
                    "n={n} mu={mu} nu={nu}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn eval_h_discrete_golden() {
        let p = HParams::new(2.0, 3.0, 1.0, 0.3).unwrap();
        let s = eval_h_discrete_sequence(&p, 0.5, 0.1, 1).unwrap();
        // hand-solved n = 0 row: (7 sqrt2 - 2)/4
        assert!(close(s.value(1), 1.9748737341529163, 1e-14));
        assert_eq!(s.value(0), 1.0);
        assert!(eval_h_discrete_sequence(&p, 1.0, 0.1, 1).is_err());
        assert!(eval_h_discrete_sequence(&p, 0.0, 0.1, 1).is_err());
    }

    #[test]
    fn eval_h_discrete_n0_is_seed_only() {
        let p = HParams::new(1.0, 1.5, 0.0, 0.3).unwrap();
        let s = eval_h_discrete_sequence(&p, 0.25, 0.2, 0).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.value(0), 1.0);
    }

    #[test]
    fn eval_g_seed_golden() {
        let p = GParams::new(1.0, 2.0, 3.0).unwrap();
        let s = eval_g_sequence(&p, 0.0, 1, SeedKind::FirstKind).unwrap();
        assert!(close(s.value(1), 54.0 / 37.0, 1e-14));
        let s = eval_g_sequence(&p, 5.4, 1, SeedKind::FirstKind).unwrap();
        assert!(s.value(1).abs() < 1e-14);
        let s = eval_g_sequence(&p, -7.7, 0, SeedKind::FirstKind).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.value(0), 1.0);
    }

    #[test]
    fn second_kind_seeds() {
        let p = GParams::new(1.0, 2.0, 3.0).unwrap();
        let first = eval_g_sequence(&p, 0.2, 10, SeedKind::FirstKind).unwrap();
        let second =
            eval_g_sequence(&p, 0.2, 10, SeedKind::SecondKind { c0: 0.0, c1: 1.0 }).unwrap();
        for n in 2..=10 {
            assert!(first.value(n) != second.value(n), "n = {n}");
        }
        // seeds equal to the first-kind pair are rejected
        let c1 = g_first_seed(&p, 0.2);
        assert!(eval_g_sequence(&p, 0.2, 5, SeedKind::SecondKind { c0: 1.0, c1 }).is_err());
    }

    #[test]
    fn parity_property() {
        let pi = std::f64::consts::PI;
        for (mu, nu, alpha, theta, x) in [
            (2.0, 3.0, 1.0, 0.7, 0.31),
            (0.2, 1.7, -1.0, 2.1, -0.62),
            (4.5, 0.0, 5.0, 1.0, 1.25),
        ] {
            let a = HParams::new(mu, nu, alpha, theta).unwrap();
            let b = HParams::new(nu, mu, alpha, pi - theta).unwrap();
            let sa = eval_h_sequence(&a, x, 50, SeedKind::FirstKind).unwrap();
            let sb = eval_h_sequence(&b, -x, 50, SeedKind::FirstKind).unwrap();
            for n in 0..=50 {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                let va = sa.value(n);
                let vb = sign * sb.value(n);
                assert!(
                    (va - vb).abs() <= 1e-10 * va.abs().max(1.0),
                    "n={n}: {va} vs {vb}"
                );
            }
        }
    }

    #[test]
    fn scaled_matches_naive_recursion() {
        // direct unscaled f64 recursion stays representable to n = 100 here
        // (it overflows near n = 141)
        let p = HParams::new(2.0, 3.0, 5.0, 0.9).unwrap();
        let x = 0.03;
        let s = eval_h_sequence(&p, x, 100, SeedKind::FirstKind).unwrap();
        let ct = p.theta.cos();
        let st = p.theta.sin();
        let mut prev = 1.0f64;
        let mut cur = h_first_seed(&p, x);
        assert!(close(s.value(1), cur, 1e-12));
        for n in 1..100 {
            let (d, e, b, c) = h_coeffs(n, &p).unwrap();
            let next = ((ct - x * st * d - e) * cur - b * prev) / c;
            prev = cur;
            cur = next;
            assert!(
                (s.value(n + 1) - cur).abs() <= 1e-12 * cur.abs(),
                "n = {}",
                n + 1
            );
        }
    }

    #[test]
    fn degree_by_interpolation() {
        // H_6 is degree 6 in x: interpolating through 7 points reproduces a
        // held-out point
        let p = HParams::new(1.2, 0.7, 2.0, 1.1).unwrap();
        let nodes: Vec<f64> = (0..7).map(|i| -0.3 + 0.1 * i as f64).collect();
        let vals: Vec<f64> = nodes
            .iter()
            .map(|&x| {
                eval_h_sequence(&p, x, 6, SeedKind::FirstKind)
                    .unwrap()
                    .value(6)
            })
            .collect();
        let x_held = 0.55;
        let direct = eval_h_sequence(&p, x_held, 6, SeedKind::FirstKind)
            .unwrap()
            .value(6);
        let interp = lagrange(&nodes, &vals, x_held);
        assert!(close(interp, direct, 1e-8));

        // G_5 is degree 5 in z^2
        let g = GParams::new(1.0, 2.0, 3.0).unwrap();
        let nodes: Vec<f64> = (0..6).map(|i| -1.0 + 0.8 * i as f64).collect();
        let vals: Vec<f64> = nodes
            .iter()
            .map(|&z2| {
                eval_g_sequence(&g, z2, 5, SeedKind::FirstKind)
                    .unwrap()
                    .value(5)
            })
            .collect();
        let z_held = 3.3;
        let direct = eval_g_sequence(&g, z_held, 5, SeedKind::FirstKind)
            .unwrap()
            .value(5);
        assert!(close(lagrange(&nodes, &vals, z_held), direct, 1e-8));

        // H_4 is degree 4 in alpha at fixed x
        let alphas: Vec<f64> = (0..5).map(|i| -2.0 + 1.5 * i as f64).collect();
        let vals: Vec<f64> = alphas
            .iter()
            .map(|&a| {
                let q = HParams::new(1.2, 0.7, a, 1.1).unwrap();
                eval_h_sequence(&q, 0.4, 4, SeedKind::FirstKind)
                    .unwrap()
                    .value(4)
            })
            .collect();
        let a_held = 2.2;
        let q = HParams::new(1.2, 0.7, a_held, 1.1).unwrap();
        let direct = eval_h_sequence(&q, 0.4, 4, SeedKind::FirstKind)
            .unwrap()
            .value(4);
        assert!(close(lagrange(&alphas, &vals, a_held), direct, 1e-8));
    }

    fn lagrange(xs: &[f64], ys: &[f64], x: f64) -> f64 {
        let mut sum = 0.0;
        for i in 0..xs.len() {
            let mut w = 1.0;
            for j in 0..xs.len() {
                if i != j {
                    w *= (x - xs[j]) / (xs[i] - xs[j]);
                }
            }
            sum += w * ys[i];
        }
        sum
    }

    #[test]
    fn orthonormal_golden() {
        assert_eq!(orthonormal_scale(0, 2.0, 3.0).unwrap(), 1.0);
        assert!(close(
            orthonormal_scale(1, 2.0, 3.0).unwrap(),
            0.81649658092772603, // sqrt(2/3)
            1e-14
        ));
        // cross-check against the closed Pochhammer form, arbitrary-precision oracle
        assert!(close(
            orthonormal_scale(37, 0.3, 1.7).unwrap(),
            4.245968575836208,
            1e-12
        ));
        // finite and positive deep into the sequence
        let lg = orthonormal_scale_log(10_000, 0.3, 1.7).unwrap();
        assert!(lg.is_finite() && lg > 0.0);
    }

    #[test]
    fn apply_orthonormal_matches_pointwise() {
        let p = GParams::new(1.0, 2.0, 3.0).unwrap();
        let seq = eval_g_sequence(&p, 2.5, 40, SeedKind::FirstKind).unwrap();
        let scaled = apply_orthonormal_scale(&seq, p.mu, p.nu).unwrap();
        for n in [0usize, 1, 7, 40] {
            let want = seq.value(n) * orthonormal_scale(n, p.mu, p.nu).unwrap();
            assert!(close(scaled.value(n), want, 1e-12), "n = {n}");
        }
    }

    #[test]
    fn scaled_sequence_representation() {
        let s = ScaledSequence::from_values(&[0.0, -4.0, 123.456, 1e-7]);
        assert_eq!(s.entries[0], (0.0, 0));
        assert_eq!(s.entries[1], (-4.0, 0));
        assert!((s.entries[2].0 - 1.23456).abs() < 1e-12 && s.entries[2].1 == 2);
        assert!((s.value(3) - 1e-7).abs() < 1e-22);
        for n in 0..s.len() {
            let (sig, _) = s.entries[n];
            assert!(sig == 0.0 || (sig.abs() >= 1.0 && sig.abs() < 10.0));
        }
    }
}
