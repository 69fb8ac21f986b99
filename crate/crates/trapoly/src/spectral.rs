//! Tridiagonal spectral machinery: the symmetric pencil / matrix built from
//! the recursion coefficients, Sturm-sequence bisection for eigenvalues,
//! two-sided glued eigenvectors (stable at both spectrum edges), zeros via
//! truncation, Gaussian quadrature, and discrete/continuous classification.

use crate::error::{Error, Result};
use crate::recursion::{g_coeffs, h_coeffs, GParams, HParams};

/// Symmetric tridiagonal pencil T v = lambda D v. `scale` holds the diagonal
/// of D; `None` means the standard problem D = I.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagPencil {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
    pub scale: Option<Vec<f64>>,
}

/// Eigenvalues plus the first component of each (unit-norm) eigenvector of
/// the standard problem that was actually solved, both as a plain double and
/// in log form for underflow-free weight assembly.
#[derive(Debug, Clone)]
pub struct EigenSolution {
    pub values: Vec<f64>,
    pub first_components: Vec<f64>,
    pub first_log_abs: Vec<f64>,
}

/// Gaussian quadrature nodes and weights (weights normalized to sum 1).
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub log_weights: Vec<f64>,
}

/// Which part of the truncated spectrum may contain discrete points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DiscreteRegion {
    All,
    Below(f64),
    None,
}

/// Result of the two-truncation stability classification.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub continuous_samples: Vec<f64>,
    pub discrete_points: Vec<f64>,
    pub n_discrete: usize,
    pub stability_tol: f64,
}

/// Pencil of the first family: T has diag cos(theta) - e_n and offdiag
/// sqrt(b_{n+1} c_n); D has diag sin(theta) d_n. Requires theta away from
/// 0 and pi (otherwise x drops out of the recursion) and d_0 > 0 (d_n is
/// increasing in n, so d_0 > 0 makes D positive definite).
pub fn build_h_pencil(p: &HParams, n: usize) -> Result<SymTridiagPencil> {
    p.validate()?;
    if n == 0 {
        return Err(Error::Parameter("matrix order must be at least 1".into()));
    }
    let st = p.theta.sin();
    if st.abs() < 1e-12 {
        return Err(Error::Domain(
            "theta at 0 or pi removes the x-dependence; the pencil has no zeros to find".into(),
        ));
    }
    let h0 = 0.5 * (p.mu + p.nu + 1.0);
    if h0 * h0 + p.alpha <= 0.0 {
        return Err(Error::Parameter(format!(
            "alpha = {} makes d_0 = {} non-positive; the pencil is not definite",
            p.alpha,
            h0 * h0 + p.alpha
        )));
    }
    let ct = p.theta.cos();
    let mut diag = Vec::with_capacity(n);
    let mut offdiag = Vec::with_capacity(n.saturating_sub(1));
    let mut scale = Vec::with_capacity(n);
    for k in 0..n {
        let (d, e, _, c) = h_coeffs(k, p)?;
        diag.push(ct - e);
        scale.push(st * d);
        if k + 1 < n {
            let (_, _, b_next, _) = h_coeffs(k + 1, p)?;
            offdiag.push((b_next * c).sqrt());
        }
    }
    Ok(SymTridiagPencil {
        diag,
        offdiag,
        scale: Some(scale),
    })
}

/// Symmetrized matrix of the second family: eigenvalues are the z^2 zeros.
/// The sub/sup product is (sigma + B_n^2)^2 b_{n+1} c_n, always nonnegative,
/// so the stable symmetrized offdiag is |sigma + B_n^2| sqrt(b_{n+1} c_n).
pub fn build_g_matrix(p: &GParams, n: usize) -> Result<SymTridiagPencil> {
    p.validate()?;
    if n == 0 {
        return Err(Error::Parameter("matrix order must be at least 1".into()));
    }
    let hp = HParams {
        mu: p.mu,
        nu: p.nu,
        alpha: 0.0,
        theta: 0.0,
    };
    let mut diag = Vec::with_capacity(n);
    let mut offdiag = Vec::with_capacity(n - 1);
    for k in 0..n {
        let (dg, _, _) = g_coeffs(k, p)?;
        diag.push(dg);
        if k + 1 < n {
            let (_, _, _, c) = h_coeffs(k, &hp)?;
            let (_, _, b_next, _) = h_coeffs(k + 1, &hp)?;
            let bk = p.b_n(k);
            offdiag.push((p.sigma + bk * bk).abs() * (b_next * c).sqrt());
        }
    }
    Ok(SymTridiagPencil {
        diag,
        offdiag,
        scale: None,
    })
}

/// Reduce T v = lambda D v to the standard S u = lambda u with
/// S = D^-1/2 T D^-1/2, u = D^1/2 v. Requires a positive scale diagonal.
pub fn reduce_to_standard(pencil: &SymTridiagPencil) -> Result<SymTridiagPencil> {
    let scale = pencil
        .scale
        .as_ref()
        .ok_or_else(|| Error::Parameter("pencil is already in standard form".into()))?;
    if scale.iter().any(|&s| !(s > 0.0)) {
        return Err(Error::Parameter(
            "scale diagonal must be strictly positive to reduce".into(),
        ));
    }
    let n = pencil.diag.len();
    let mut diag = Vec::with_capacity(n);
    let mut offdiag = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n {
        diag.push(pencil.diag[i] / scale[i]);
        if i + 1 < n {
            offdiag.push(pencil.offdiag[i] / (scale[i] * scale[i + 1]).sqrt());
        }
    }
    Ok(SymTridiagPencil {
        diag,
        offdiag,
        scale: None,
    })
}

/// Sturm count: number of eigenvalues of the standard (diag, offdiag)
/// matrix strictly below x, from the signs of the LDL^T pivots.
fn neg_count(diag: &[f64], offdiag: &[f64], x: f64) -> usize {
    let mut count = 0usize;
    let mut d = 1.0f64;
    for i in 0..diag.len() {
        let e2 = if i == 0 {
            0.0
        } else {
            offdiag[i - 1] * offdiag[i - 1]
        };
        d = (diag[i] - x) - e2 / d;
        if d == 0.0 {
            d = 1e-300;
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues of a standard symmetric tridiagonal matrix by per-index
/// bisection inside widened Gershgorin bounds. Ascending, machine-width
/// final intervals.
fn bisect_eigenvalues(diag: &[f64], offdiag: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let mut r = 0.0;
        if i > 0 {
            r += offdiag[i - 1].abs();
        }
        if i + 1 < n {
            r += offdiag[i].abs();
        }
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    lo -= 1e-12 * lo.abs().max(1.0);
    hi += 1e-12 * hi.abs().max(1.0);
    let mut vals = vec![0.0f64; n];
    for k in 0..n {
        let mut a = if k == 0 { lo } else { vals[k - 1].max(lo) };
        let mut b = hi;
        let mut iters = 0u32;
        loop {
            let m = 0.5 * (a + b);
            if m == a || m == b {
                vals[k] = m;
                break;
            }
            if neg_count(diag, offdiag, m) > k {
                b = m;
            } else {
                a = m;
            }
            iters += 1;
            if iters > 4000 {
                return Err(Error::Convergence {
                    index: k,
                    message: "bisection failed to isolate the eigenvalue".into(),
                });
            }
        }
    }
    Ok(vals)
}

#[derive(Clone, Copy)]
struct SignLog {
    s: f64,
    l: f64,
}

impl SignLog {
    const ZERO: SignLog = SignLog {
        s: 0.0,
        l: f64::NEG_INFINITY,
    };

    fn one() -> Self {
        SignLog { s: 1.0, l: 0.0 }
    }

    fn from_value(v: f64) -> Self {
        if v == 0.0 {
            Self::ZERO
        } else {
            SignLog {
                s: v.signum(),
                l: v.abs().ln(),
            }
        }
    }

    /// a * self + b * other, carried out at the common max exponent.
    fn combine(a: f64, x: SignLog, b: f64, y: SignLog) -> SignLog {
        let m = x.l.max(y.l);
        if m == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        let t = a * x.s * (x.l - m).exp() + b * y.s * (y.l - m).exp();
        if t == 0.0 {
            Self::ZERO
        } else {
            SignLog {
                s: t.signum(),
                l: m + t.abs().ln(),
            }
        }
    }
}

/// Eigenvector of the standard matrix for an isolated eigenvalue lambda,
/// glued from a forward and a backward recurrence at the index where both
/// are largest; immune to the one-sided underflow/instability at either
/// spectrum edge. Unit euclidean norm; entries as (sign, log).
fn glue_vector_signlog(diag: &[f64], offdiag: &[f64], lambda: f64) -> Vec<SignLog> {
    let n = diag.len();
    if n == 1 {
        return vec![SignLog::one()];
    }
    let mut fwd = vec![SignLog::ZERO; n];
    fwd[0] = SignLog::one();
    fwd[1] = SignLog::from_value((lambda - diag[0]) / offdiag[0]);
    for k in 1..n - 1 {
        fwd[k + 1] = SignLog::combine(
            (lambda - diag[k]) / offdiag[k],
            fwd[k],
            -offdiag[k - 1] / offdiag[k],
            fwd[k - 1],
        );
    }
    let mut bwd = vec![SignLog::ZERO; n];
    bwd[n - 1] = SignLog::one();
    bwd[n - 2] = SignLog::from_value((lambda - diag[n - 1]) / offdiag[n - 2]);
    for k in (1..n - 1).rev() {
        bwd[k - 1] = SignLog::combine(
            (lambda - diag[k]) / offdiag[k - 1],
            bwd[k],
            -offdiag[k] / offdiag[k - 1],
            bwd[k + 1],
        );
    }
    // glue where both half-solutions carry the most weight
    let mut best = 0usize;
    let mut best_l = f64::NEG_INFINITY;
    for k in 0..n {
        let l = fwd[k].l + bwd[k].l;
        if l > best_l {
            best_l = l;
            best = k;
        }
    }
    let mut v = Vec::with_capacity(n);
    for (k, f) in fwd.iter().enumerate() {
        if k <= best {
            v.push(*f);
        } else {
            let b = bwd[k];
            v.push(SignLog {
                s: b.s * fwd[best].s * bwd[best].s,
                l: b.l + fwd[best].l - bwd[best].l,
            });
        }
    }
    // normalize sum v^2 = 1 by log-sum-exp
    let m = v
        .iter()
        .map(|e| 2.0 * e.l)
        .fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = v.iter().map(|e| (2.0 * e.l - m).exp()).sum();
    let log_norm_sq = m + sum.ln();
    for e in v.iter_mut() {
        e.l -= 0.5 * log_norm_sq;
    }
    v
}

fn require_standard<'a>(m: &'a SymTridiagPencil, what: &str) -> Result<&'a SymTridiagPencil> {
    if m.scale.is_some() {
        return Err(Error::Parameter(format!(
            "{what} needs the standard form; call reduce_to_standard first"
        )));
    }
    Ok(m)
}

/// Eigenvalues of the pencil or matrix, plus first eigenvector components of
/// the standard problem actually solved (pencils are reduced internally).
pub fn eig_sym_tridiag(m: &SymTridiagPencil) -> Result<EigenSolution> {
    let std_m;
    let work = if m.scale.is_some() {
        std_m = reduce_to_standard(m)?;
        &std_m
    } else {
        m
    };
    let values = bisect_eigenvalues(&work.diag, &work.offdiag)?;
    let mut first_components = Vec::with_capacity(values.len());
    let mut first_log_abs = Vec::with_capacity(values.len());
    for &lambda in &values {
        let v = glue_vector_signlog(&work.diag, &work.offdiag, lambda);
        first_components.push(v[0].s * v[0].l.exp());
        first_log_abs.push(v[0].l);
    }
    Ok(EigenSolution {
        values,
        first_components,
        first_log_abs,
    })
}

/// Unit-norm eigenvector of a standard matrix for one eigenvalue.
pub fn eig_vector(m: &SymTridiagPencil, lambda: f64) -> Result<Vec<f64>> {
    let work = require_standard(m, "eig_vector")?;
    Ok(glue_vector_signlog(&work.diag, &work.offdiag, lambda)
        .iter()
        .map(|e| e.s * e.l.exp())
        .collect())
}

/// Gaussian quadrature from the standard Jacobi matrix: nodes are the
/// eigenvalues, weight_k is the squared first eigenvector component,
/// renormalized to sum exactly 1 in log space.
pub fn golub_welsch(m: &SymTridiagPencil) -> Result<QuadratureRule> {
    require_standard(m, "golub_welsch")?;
    let eig = eig_sym_tridiag(m)?;
    let logs: Vec<f64> = eig.first_log_abs.iter().map(|&l| 2.0 * l).collect();
    let mx = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let total: f64 = logs.iter().map(|&l| (l - mx).exp()).sum();
    let log_total = mx + total.ln();
    let log_weights: Vec<f64> = logs.iter().map(|&l| l - log_total).collect();
    let weights: Vec<f64> = log_weights.iter().map(|&l| l.exp()).collect();
    Ok(QuadratureRule {
        nodes: eig.values,
        weights,
        log_weights,
    })
}

/// Zeros of the order-n polynomial of the first family (in x) as the
/// generalized eigenvalues of the leading n-by-n pencil.
pub fn zeros_h(p: &HParams, order: usize) -> Result<Vec<f64>> {
    let pencil = build_h_pencil(p, order)?;
    Ok(eig_sym_tridiag(&pencil)?.values)
}

/// Zeros of the order-n polynomial of the second family (in z^2) as the
/// eigenvalues of the leading n-by-n symmetrized matrix.
pub fn zeros_g(p: &GParams, order: usize) -> Result<Vec<f64>> {
    let matrix = build_g_matrix(p, order)?;
    Ok(eig_sym_tridiag(&matrix)?.values)
}

/// Classify zeros into discrete points (stable between two truncation
/// orders) and continuous-band samples (order-dependent). `zeros_a` comes
/// from the coarser truncation, `zeros_b` from the finer one; matched points
/// are reported at their refined positions. The match rule is mixed
/// absolute/relative: |a - b| <= tol (1 + |a|).
pub fn classify_spectrum(
    zeros_a: &[f64],
    zeros_b: &[f64],
    tol: f64,
    region: DiscreteRegion,
) -> Result<SpectrumReport> {
    if !(tol > 0.0) {
        return Err(Error::Parameter(format!(
            "stability tolerance must be positive, got {tol}"
        )));
    }
    let in_region = |v: f64| match region {
        DiscreteRegion::All => true,
        DiscreteRegion::Below(c) => v < c,
        DiscreteRegion::None => false,
    };
    let fa: Vec<f64> = zeros_a.iter().cloned().filter(|&v| in_region(v)).collect();
    let fb: Vec<(usize, f64)> = zeros_b
        .iter()
        .cloned()
        .enumerate()
        .filter(|&(_, v)| in_region(v))
        .collect();
    let mut matched = vec![false; zeros_b.len()];
    let mut discrete_points = Vec::new();
    let mut j = 0usize;
    for &a in &fa {
        while j + 1 < fb.len() && (fb[j + 1].1 - a).abs() <= (fb[j].1 - a).abs() {
            j += 1;
        }
        if j < fb.len() && (fb[j].1 - a).abs() <= tol * (1.0 + a.abs()) {
            matched[fb[j].0] = true;
            discrete_points.push(fb[j].1);
            j += 1;
        }
    }
    let continuous_samples: Vec<f64> = zeros_b
        .iter()
        .cloned()
        .enumerate()
        .filter(|&(i, _)| !matched[i])
        .map(|(_, v)| v)
        .collect();
    let n_discrete = discrete_points.len();
    Ok(SpectrumReport {
        continuous_samples,
        discrete_points,
        n_discrete,
        stability_tol: tol,
    })
}
