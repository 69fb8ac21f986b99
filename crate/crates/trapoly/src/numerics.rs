//! Special-function primitives: real and complex log-gamma, log-Pochhammer,
//! and a reference Jacobi-polynomial evaluator used as an oracle by the
//! recursion layer.

use crate::error::{Error, Result};

/// A complex number as a plain value pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl ComplexValue {
    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

const LN_2PI_HALF: f64 = 0.9189385332046727; // ln(2*pi)/2

// B_{2k} / (2k (2k-1)) for the Stirling tail, k = 1..=10.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

// zeta(k) - 1 for k = 2..=30, for the Taylor series of ln Gamma(1+t) on |t| <= 1/2.
const ZETA_M1: [f64; 29] = [
    0.6449340668482264,
    0.2020569031595943,
    0.08232323371113819,
    0.03692775514336993,
    0.01734306198444914,
    0.008349277381922827,
    0.00407735619794434,
    0.0020083928260822143,
    0.0009945751278180853,
    0.0004941886041194645,
    0.0002460865533080483,
    0.00012271334757848915,
    6.124813505870483e-05,
    3.058823630702049e-05,
    1.528225940865187e-05,
    7.637197637899763e-06,
    3.81729326499984e-06,
    1.908212716553939e-06,
    9.539620338727962e-07,
    4.769329867878064e-07,
    2.38450502727733e-07,
    1.1921992596531106e-07,
    5.960818905125948e-08,
    2.980350351465228e-08,
    1.4901554828365043e-08,
    7.45071178983543e-09,
    3.725334024788457e-09,
    1.862659723513049e-09,
    9.313274324196682e-10,
];

const EULER_GAMMA: f64 = 0.5772156649015329;

/// ln Gamma(1+t) for |t| <= 1/2, full relative accuracy including near t = 0.
fn ln_gamma_1p(t: f64) -> f64 {
    let mut sum = 0.0;
    let mut tk = t * t; // t^k starting at k = 2
    for (i, zm1) in ZETA_M1.iter().enumerate() {
        let k = (i + 2) as f64;
        let term = if i % 2 == 0 {
            zm1 / k * tk
        } else {
            -zm1 / k * tk
        };
        sum += term;
        tk *= t;
        if term.abs() < 1e-18 * (1.0 + sum.abs()) {
            break;
        }
    }
    -t.ln_1p() + t * (1.0 - EULER_GAMMA) + sum
}

fn stirling_real(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut tail = 0.0;
    let mut p = inv;
    for c in STIRLING {
        tail += c * p;
        p *= inv2;
    }
    (x - 0.5) * x.ln() - x + LN_2PI_HALF + tail
}

/// ln Gamma(x) for x > 0, relative error <= 1e-13 over the whole range.
pub fn log_gamma_real(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "log_gamma_real requires x > 0, got {x}"
        )));
    }
    if x >= 10.0 {
        return Ok(stirling_real(x));
    }
    if x < 0.5 {
        // Gamma(x) = Gamma(1+x)/x
        return Ok(ln_gamma_1p(x) - x.ln());
    }
    if x < 1.5 {
        return Ok(ln_gamma_1p(x - 1.0));
    }
    if x < 2.5 {
        // Gamma(x) = (x-1) Gamma(x-1); ln(x-1) via ln_1p keeps the zero at x = 2 exact
        return Ok((x - 2.0).ln_1p() + ln_gamma_1p(x - 2.0));
    }
    // shift down into [1.5, 2.5)
    let m = (x - 1.5).floor() as usize;
    let mut prod = 1.0;
    let mut y = x;
    for _ in 0..m {
        y -= 1.0;
        prod *= y;
    }
    Ok(prod.ln() + (y - 2.0).ln_1p() + ln_gamma_1p(y - 2.0))
}

// Minimal internal complex arithmetic; only what log-gamma needs.
#[derive(Clone, Copy)]
struct Cpx {
    re: f64,
    im: f64,
}

impl Cpx {
    fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }
    fn add(self, o: Cpx) -> Cpx {
        Cpx::new(self.re + o.re, self.im + o.im)
    }
    fn sub(self, o: Cpx) -> Cpx {
        Cpx::new(self.re - o.re, self.im - o.im)
    }
    fn mul(self, o: Cpx) -> Cpx {
        Cpx::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
    fn scale(self, s: f64) -> Cpx {
        Cpx::new(self.re * s, self.im * s)
    }
    fn recip(self) -> Cpx {
        let d = self.re * self.re + self.im * self.im;
        Cpx::new(self.re / d, -self.im / d)
    }
    /// Principal-branch complex logarithm.
    fn log(self) -> Cpx {
        Cpx::new(self.re.hypot(self.im).ln(), self.im.atan2(self.re))
    }
}

fn stirling_complex(w: Cpx) -> Cpx {
    let inv = w.recip();
    let inv2 = inv.mul(inv);
    let mut tail = Cpx::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING {
        tail = tail.add(p.scale(c));
        p = p.mul(inv2);
    }
    // (w - 1/2) log w - w + ln(2 pi)/2 + tail
    w.sub(Cpx::new(0.5, 0.0))
        .mul(w.log())
        .sub(w)
        .add(Cpx::new(LN_2PI_HALF, 0.0))
        .add(tail)
}

/// Principal-branch log-gamma, continuous on the upper half plane (the
/// imaginary part is the continuously tracked arg Gamma(z), not reduced to
/// (-pi, pi]). The lower half plane is the conjugate. Accuracy is better
/// than 1e-12 absolute for |z| <= 100.
pub fn log_gamma_complex(z: ComplexValue) -> Result<ComplexValue> {
    if !z.is_finite() {
        return Err(Error::Domain("log_gamma_complex: non-finite input".into()));
    }
    if z.im == 0.0 {
        if z.re > 0.0 {
            return Ok(ComplexValue::new(log_gamma_real(z.re)?, 0.0));
        }
        if z.re == z.re.trunc() {
            return Err(Error::Domain(format!(
                "log_gamma_complex: pole at z = {}",
                z.re
            )));
        }
        // fall through: negative non-integer real axis, taken as the limit
        // from above (branch cut on the negative real axis)
    }
    if z.im < 0.0 {
        let v = log_gamma_complex(ComplexValue::new(z.re, -z.im))?;
        return Ok(ComplexValue::new(v.re, -v.im));
    }
    // Recurrence up to Re(w) >= 12, then the Stirling series. On the open
    // upper half plane log Gamma(z) = log Gamma(z+1) - Log z holds with the
    // principal Log, so the accumulated branch is the continuous one.
    let mut acc = Cpx::new(0.0, 0.0);
    let mut w = Cpx::new(z.re, z.im);
    while w.re < 12.0 {
        acc = acc.add(w.log());
        w.re += 1.0;
    }
    let s = stirling_complex(w).sub(acc);
    Ok(ComplexValue::new(s.re, s.im))
}

/// ln (a)_n for the rising factorial (a)_n = a(a+1)...(a+n-1), in log form.
///
/// Requires a + k > 0 for every 0 <= k < n (equivalently a > 0 when n >= 1);
/// when the product contains non-positive factors the log form is undefined
/// and the caller must multiply the factors directly instead.
pub fn pochhammer_log(a: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    if !(a > 0.0) {
        return Err(Error::Domain(format!(
            "pochhammer_log: a + k is not positive throughout the product (a = {a}); \
             use the explicit product form for sign-changing factors"
        )));
    }
    Ok(log_gamma_real(a + n as f64)? - log_gamma_real(a)?)
}

/// Standard Jacobi polynomial P_n^(mu,nu)(x) by its three-term recurrence.
pub fn jacobi_poly(n: usize, mu: f64, nu: f64, x: f64) -> Result<f64> {
    if !(mu > -1.0) || !(nu > -1.0) {
        return Err(Error::Parameter(format!(
            "jacobi_poly requires mu > -1 and nu > -1, got mu = {mu}, nu = {nu}"
        )));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut pm = 1.0;
    let mut p = 0.5 * (mu - nu) + 0.5 * (mu + nu + 2.0) * x;
    for k in 1..n {
        let kf = k as f64;
        let s = 2.0 * kf + mu + nu;
        let a = 2.0 * (kf + 1.0) * (kf + mu + nu + 1.0) * s;
        let b = (s + 1.0) * ((mu * mu - nu * nu) + s * (s + 2.0) * x);
        let c = 2.0 * (kf + mu) * (kf + nu) * (s + 2.0);
        let next = (b * p - c * pm) / a;
        pm = p;
        p = next;
    }
    Ok(p)
}
