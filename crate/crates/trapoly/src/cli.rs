//! Command-line front end: evaluation, zeros, spectra, asymptotics fits,
//! phase-shift comparisons, and the four figure artifacts. All numeric
//! output uses 17 significant digits; JSON carries a schema_version field.
//! Exit codes: 0 ok, 2 usage/parameter, 3 numeric breakdown, 4 fit failure.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize as _;
use serde_json::json;

use crate::asymptotics::{
    amplitude_scan, envelope_exponent, fit_oscillation, AsymptoticsFit, OscillationLaw,
};
use crate::closed_form::{bound_spectrum, phase_shift};
use crate::error::Error;
use crate::recursion::{
    apply_orthonormal_scale, eval_g_sequence, eval_h_sequence, GParams, HParams, ScaledSequence,
    SeedKind,
};
use crate::spectral::{classify_spectrum, zeros_g, zeros_h, DiscreteRegion};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "trapoly",
    about = "Tridiagonal-representation orthogonal polynomials: values, zeros, spectra, asymptotics, phase shifts, figure data",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a polynomial sequence at one argument
    Eval(EvalArgs),
    /// Zeros of the order-N polynomial
    Zeros(ZerosArgs),
    /// Two-truncation spectrum classification
    Spectrum(SpectrumArgs),
    /// Envelope exponent and sinusoidal fit of the large-n tail
    Asymptotics(AsymArgs),
    /// Fitted vs closed-form phase shifts over a z grid
    Phaseshift(PhaseArgs),
    /// Reproduce the data behind one of the four figures
    Figure(FigArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    H,
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputKind {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LawArg {
    Linear,
    Log,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegionArg {
    Auto,
    All,
    BelowZero,
    None,
}

#[derive(Args)]
struct FamilyArgs {
    /// Polynomial family
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<f64>,
    /// H family only
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    /// H family only; radians
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<f64>,
    /// H family only; theta as a fraction of pi
    #[arg(long, conflicts_with = "theta", allow_hyphen_values = true)]
    theta_pi_frac: Option<f64>,
    /// G family only
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<f64>,
}

fn require(v: Option<f64>, flag: &str) -> Result<f64, Error> {
    v.ok_or_else(|| Error::Parameter(format!("{flag} is required")))
}

impl FamilyArgs {
    fn family(&self) -> Result<Family, Error> {
        self.family
            .ok_or_else(|| Error::Parameter("--family is required".into()))
    }

    fn h_params(&self) -> Result<HParams, Error> {
        let mu = require(self.mu, "--mu")?;
        let nu = require(self.nu, "--nu")?;
        let alpha = self
            .alpha
            .ok_or_else(|| Error::Parameter("--alpha is required for --family h".into()))?;
        let theta = match (self.theta, self.theta_pi_frac) {
            (Some(t), None) => t,
            (None, Some(f)) => f * std::f64::consts::PI,
            (None, None) => {
                return Err(Error::Parameter(
                    "--theta or --theta-pi-frac is required for --family h".into(),
                ))
            }
            (Some(_), Some(_)) => {
                return Err(Error::Parameter(
                    "--theta and --theta-pi-frac are mutually exclusive".into(),
                ))
            }
        };
        if self.sigma.is_some() {
            return Err(Error::Parameter(
                "--sigma does not apply to --family h".into(),
            ));
        }
        HParams::new(mu, nu, alpha, theta)
    }

    fn g_params(&self) -> Result<GParams, Error> {
        let mu = require(self.mu, "--mu")?;
        let nu = require(self.nu, "--nu")?;
        if self.alpha.is_some() || self.theta.is_some() || self.theta_pi_frac.is_some() {
            return Err(Error::Parameter(
                "--alpha/--theta apply only to --family h".into(),
            ));
        }
        let sigma = self
            .sigma
            .ok_or_else(|| Error::Parameter("--sigma is required for --family g".into()))?;
        GParams::new(mu, nu, sigma)
    }
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    fam: FamilyArgs,
    /// Argument x = 1/z (H family)
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,
    /// Argument z^2 (G family)
    #[arg(long, allow_hyphen_values = true)]
    zsq: Option<f64>,
    #[arg(long)]
    nmax: usize,
    /// Second-kind seed for entry 0 (requires --seed-c1)
    #[arg(long, requires = "seed_c1", allow_hyphen_values = true)]
    seed_c0: Option<f64>,
    /// Second-kind seed for entry 1 (requires --seed-c0)
    #[arg(long, requires = "seed_c0", allow_hyphen_values = true)]
    seed_c1: Option<f64>,
    #[arg(long, value_enum, default_value = "csv")]
    output: OutputKind,
}

#[derive(Args)]
struct ZerosArgs {
    #[command(flatten)]
    fam: FamilyArgs,
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum, default_value = "csv")]
    output: OutputKind,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    fam: FamilyArgs,
    #[arg(long)]
    order: usize,
    /// Second truncation order; default ceil(1.5 * order)
    #[arg(long)]
    order2: Option<usize>,
    /// Stability tolerance of the mixed match rule
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Where discrete points may live; auto = below 0 for G, nowhere for H
    #[arg(long, value_enum, default_value = "auto")]
    region: RegionArg,
}

#[derive(Args)]
struct AsymArgs {
    #[command(flatten)]
    fam: FamilyArgs,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    zsq: Option<f64>,
    #[arg(long)]
    n_lo: Option<usize>,
    #[arg(long)]
    n_hi: Option<usize>,
    /// Phase law; default linear for H, log for G
    #[arg(long, value_enum)]
    law: Option<LawArg>,
    /// Fixed envelope exponent; default: measured from the window
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<f64>,
    /// Analyze the barred (monic-seeded) values instead of orthonormal ones
    #[arg(long)]
    barred: bool,
    /// Run the synthetic recovery check instead of a real sequence
    #[arg(long)]
    selftest: bool,
}

#[derive(Args)]
struct PhaseArgs {
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<f64>,
    /// Comma-separated z grid, e.g. "1,2,4,8"
    #[arg(long)]
    z_list: Option<String>,
    #[arg(long)]
    n_lo: Option<usize>,
    #[arg(long)]
    n_hi: Option<usize>,
    /// Envelope exponent used in the per-z fits
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    tau: f64,
    /// Verify the offset-adjustment machinery on synthetic data
    #[arg(long)]
    selftest: bool,
}

#[derive(Args)]
struct FigArgs {
    /// Figure id (1..=4)
    id: u8,
    /// Output directory for figN_data.csv and figN_meta.json
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

/// 17 significant digits, the fixed interchange format of all numeric output.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Default)]
struct Sig17Formatter;

impl serde_json::ser::Formatter for Sig17Formatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

fn json_string(value: &serde_json::Value) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig17Formatter);
    value
        .serialize(&mut ser)
        .expect("in-memory JSON serialization cannot fail");
    let mut s = String::from_utf8(buf).expect("serializer emits UTF-8");
    s.push('\n');
    s
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parameter(_) | Error::Domain(_) | Error::Mapping(_) => 2,
        Error::Breakdown { .. } | Error::Convergence { .. } => 3,
        Error::Fit(_) => 4,
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    if let Some(code) = check_precision_env() {
        return code;
    }
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap maps help/version to success internally
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.cmd {
        Cmd::Eval(a) => cmd_eval(a),
        Cmd::Zeros(a) => cmd_zeros(a),
        Cmd::Spectrum(a) => cmd_spectrum(a),
        Cmd::Asymptotics(a) => cmd_asymptotics(a),
        Cmd::Phaseshift(a) => cmd_phaseshift(a),
        Cmd::Figure(a) => cmd_figure(a),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("trapoly: {e}");
            exit_code(&e)
        }
    }
}

/// TRAPOLY_PRECISION_BITS: a precision hint. Values above the native 53
/// bits only warn (extended precision is unavailable); non-numeric or
/// non-positive values are usage errors. Results never depend on it.
fn check_precision_env() -> Option<i32> {
    let raw = std::env::var("TRAPOLY_PRECISION_BITS").ok()?;
    match raw.trim().parse::<i64>() {
        Ok(bits) if bits > 53 => {
            eprintln!(
                "trapoly: TRAPOLY_PRECISION_BITS={bits} requested; extended precision is \
                 unavailable, computing with native 53-bit doubles"
            );
            None
        }
        Ok(bits) if bits >= 1 => None,
        _ => {
            eprintln!("trapoly: invalid TRAPOLY_PRECISION_BITS value {raw:?}");
            Some(2)
        }
    }
}

fn eval_sequence(
    fam: &FamilyArgs,
    x: Option<f64>,
    zsq: Option<f64>,
    nmax: usize,
    seed: SeedKind,
) -> Result<ScaledSequence, Error> {
    match fam.family()? {
        Family::H => {
            let p = fam.h_params()?;
            if zsq.is_some() {
                return Err(Error::Parameter(
                    "--zsq does not apply to --family h".into(),
                ));
            }
            let x = x.ok_or_else(|| Error::Parameter("--x is required for --family h".into()))?;
            eval_h_sequence(&p, x, nmax, seed)
        }
        Family::G => {
            let p = fam.g_params()?;
            if x.is_some() {
                return Err(Error::Parameter("--x does not apply to --family g".into()));
            }
            let zsq =
                zsq.ok_or_else(|| Error::Parameter("--zsq is required for --family g".into()))?;
            eval_g_sequence(&p, zsq, nmax, seed)
        }
    }
}

fn representable(seq: &ScaledSequence, n: usize) -> Option<f64> {
    let v = seq.value(n);
    if seq.significand(n) == 0.0 {
        Some(0.0)
    } else if v.is_finite() && v != 0.0 {
        Some(v)
    } else {
        None
    }
}

fn cmd_eval(a: EvalArgs) -> Result<(), Error> {
    let seed = match (a.seed_c0, a.seed_c1) {
        (Some(c0), Some(c1)) => SeedKind::SecondKind { c0, c1 },
        _ => SeedKind::FirstKind,
    };
    let seq = eval_sequence(&a.fam, a.x, a.zsq, a.nmax, seed)?;
    match a.output {
        OutputKind::Csv => {
            let mut out = String::from("n,significand,exponent10,value_if_representable\n");
            for n in 0..seq.len() {
                let val = representable(&seq, n).map(fmt17).unwrap_or_default();
                out.push_str(&format!(
                    "{n},{},{},{val}\n",
                    fmt17(seq.significand(n)),
                    seq.exponent10(n)
                ));
            }
            print!("{out}");
        }
        OutputKind::Json => {
            let rows: Vec<serde_json::Value> = (0..seq.len())
                .map(|n| {
                    json!({
                        "n": n,
                        "significand": seq.significand(n),
                        "exponent10": seq.exponent10(n),
                        "value_if_representable": representable(&seq, n),
                    })
                })
                .collect();
            print!(
                "{}",
                json_string(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "rows": rows,
                }))
            );
        }
    }
    Ok(())
}

fn family_zeros(fam: &FamilyArgs, order: usize) -> Result<Vec<f64>, Error> {
    match fam.family()? {
        Family::H => zeros_h(&fam.h_params()?, order),
        Family::G => zeros_g(&fam.g_params()?, order),
    }
}

fn cmd_zeros(a: ZerosArgs) -> Result<(), Error> {
    let zeros = family_zeros(&a.fam, a.order)?;
    match a.output {
        OutputKind::Csv => {
            let mut out = String::from("index,zero\n");
            for (i, z) in zeros.iter().enumerate() {
                out.push_str(&format!("{i},{}\n", fmt17(*z)));
            }
            print!("{out}");
        }
        OutputKind::Json => {
            print!(
                "{}",
                json_string(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "order": a.order,
                    "zeros": zeros,
                }))
            );
        }
    }
    Ok(())
}

fn cmd_spectrum(a: SpectrumArgs) -> Result<(), Error> {
    let order2 = a.order2.unwrap_or_else(|| (3 * a.order).div_ceil(2));
    if order2 <= a.order {
        return Err(Error::Parameter(format!(
            "--order2 ({order2}) must exceed --order ({})",
            a.order
        )));
    }
    let region = match (a.region, a.fam.family()?) {
        (RegionArg::Auto, Family::G) => DiscreteRegion::Below(0.0),
        (RegionArg::Auto, Family::H) => DiscreteRegion::None,
        (RegionArg::All, _) => DiscreteRegion::All,
        (RegionArg::BelowZero, _) => DiscreteRegion::Below(0.0),
        (RegionArg::None, _) => DiscreteRegion::None,
    };
    let za = family_zeros(&a.fam, a.order)?;
    let zb = family_zeros(&a.fam, order2)?;
    let rep = classify_spectrum(&za, &zb, a.tol, region)?;
    print!(
        "{}",
        json_string(&json!({
            "schema_version": SCHEMA_VERSION,
            "order": a.order,
            "order2": order2,
            "stability_tol": rep.stability_tol,
            "n_discrete": rep.n_discrete,
            "discrete_points": rep.discrete_points,
            "continuous_samples": rep.continuous_samples,
        }))
    );
    Ok(())
}

fn law_of(arg: Option<LawArg>, family: Family) -> OscillationLaw {
    match arg {
        Some(LawArg::Linear) => OscillationLaw::LinearN,
        Some(LawArg::Log) => OscillationLaw::LogN,
        None => match family {
            Family::H => OscillationLaw::LinearN,
            Family::G => OscillationLaw::LogN,
        },
    }
}

fn fit_json(fit: &AsymptoticsFit, tau_source: &str) -> serde_json::Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "tau": fit.tau,
        "tau_source": tau_source,
        "law": match fit.law {
            OscillationLaw::LinearN => "linear_n",
            OscillationLaw::LogN => "log_n",
        },
        "freq": fit.freq,
        "log_coeff": fit.log_coeff,
        "amplitude": fit.amplitude,
        "phase": fit.phase,
        "rms_residual": fit.rms_residual,
    })
}

fn cmd_asymptotics(a: AsymArgs) -> Result<(), Error> {
    if a.selftest {
        return asymptotics_selftest();
    }
    let n_lo = a
        .n_lo
        .ok_or_else(|| Error::Parameter("--n-lo is required".into()))?;
    let n_hi = a
        .n_hi
        .ok_or_else(|| Error::Parameter("--n-hi is required".into()))?;
    let raw = eval_sequence(&a.fam, a.x, a.zsq, n_hi, SeedKind::FirstKind)?;
    let seq = if a.barred {
        raw
    } else {
        let mu = require(a.fam.mu, "--mu")?;
        let nu = require(a.fam.nu, "--nu")?;
        apply_orthonormal_scale(&raw, mu, nu)?
    };
    let (tau, tau_source) = match a.tau {
        Some(t) => (t, "fixed"),
        None => (envelope_exponent(&seq, n_lo, n_hi)?, "envelope"),
    };
    let fit = fit_oscillation(&seq, n_lo, n_hi, tau, law_of(a.law, a.fam.family()?))?;
    print!("{}", json_string(&fit_json(&fit, tau_source)));
    Ok(())
}

fn asymptotics_selftest() -> Result<(), Error> {
    let vals: Vec<f64> = (0..=5000)
        .map(|n| {
            if n == 0 {
                0.0
            } else {
                3.0 * (0.7 * (n as f64).ln() + 1.0).cos()
            }
        })
        .collect();
    let seq = ScaledSequence::from_values(&vals);
    let fit = fit_oscillation(&seq, 100, 5000, 0.0, OscillationLaw::LogN)?;
    let ok = (fit.freq - 0.7).abs() < 1e-4
        && (fit.amplitude - 3.0).abs() < 1e-4
        && (fit.phase - 1.0).abs() < 1e-4
        && fit.rms_residual < 1e-4;
    if !ok {
        return Err(Error::Fit(format!(
            "selftest mismatch: freq {} amplitude {} phase {} residual {}",
            fit.freq, fit.amplitude, fit.phase, fit.rms_residual
        )));
    }
    let mut v = fit_json(&fit, "fixed");
    v["selftest"] = json!("asymptotics");
    print!("{}", json_string(&v));
    Ok(())
}

/// Circular mean with period pi: half the argument of sum exp(2 i r).
fn half_pi_offset(rs: &[f64]) -> f64 {
    let s: f64 = rs.iter().map(|r| (2.0 * r).sin()).sum();
    let c: f64 = rs.iter().map(|r| (2.0 * r).cos()).sum();
    0.5 * s.atan2(c)
}

/// Wrap into [-pi/2, pi/2).
fn wrap_half_pi(x: f64) -> f64 {
    (x + std::f64::consts::FRAC_PI_2).rem_euclid(std::f64::consts::PI) - std::f64::consts::FRAC_PI_2
}

fn cmd_phaseshift(a: PhaseArgs) -> Result<(), Error> {
    if a.selftest {
        return phaseshift_selftest();
    }
    let need = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| Error::Parameter(format!("{name} is required")))
    };
    let mu = need(a.mu, "--mu")?;
    let nu = need(a.nu, "--nu")?;
    let sigma = need(a.sigma, "--sigma")?;
    let n_lo = a
        .n_lo
        .ok_or_else(|| Error::Parameter("--n-lo is required".into()))?;
    let n_hi = a
        .n_hi
        .ok_or_else(|| Error::Parameter("--n-hi is required".into()))?;
    let list = a
        .z_list
        .ok_or_else(|| Error::Parameter("--z-list is required".into()))?;
    let mut zs = Vec::new();
    for part in list.split(',') {
        let z: f64 = part
            .trim()
            .parse()
            .map_err(|_| Error::Parameter(format!("--z-list entry {part:?} is not a number")))?;
        zs.push(z);
    }
    let p = GParams::new(mu, nu, sigma)?;
    let scan = amplitude_scan(&p, &zs, a.tau, n_lo, n_hi)?;
    for (z, e) in &scan.failures {
        eprintln!("trapoly: fit failed at z = {z}: {e}");
    }
    if scan.samples.is_empty() {
        return Err(Error::Fit("no z grid point produced a usable fit".into()));
    }
    let eq16: Vec<f64> = scan
        .samples
        .iter()
        .map(|s| phase_shift(nu, sigma, s.z))
        .collect::<Result<_, _>>()?;
    let raw: Vec<f64> = scan
        .samples
        .iter()
        .zip(&eq16)
        .map(|(s, d16)| s.phase - d16)
        .collect();
    let offset = half_pi_offset(&raw);
    let mut out = String::from("z,delta_fit,delta_eq16,offset_adjusted_diff\n");
    for ((s, d16), r) in scan.samples.iter().zip(&eq16).zip(&raw) {
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt17(s.z),
            fmt17(s.phase),
            fmt17(*d16),
            fmt17(wrap_half_pi(r - offset))
        ));
    }
    print!("{out}");
    Ok(())
}

fn phaseshift_selftest() -> Result<(), Error> {
    // diffs equal mod pi must collapse to zero after offset adjustment
    let rs = [
        0.4,
        0.4 - std::f64::consts::PI,
        0.4 + std::f64::consts::PI,
        0.4,
    ];
    let offset = half_pi_offset(&rs);
    let worst = rs
        .iter()
        .map(|r| wrap_half_pi(r - offset).abs())
        .fold(0.0f64, f64::max);
    if worst > 1e-12 {
        return Err(Error::Fit(format!(
            "selftest mismatch: residual offset {worst}"
        )));
    }
    print!(
        "{}",
        json_string(&json!({
            "schema_version": SCHEMA_VERSION,
            "selftest": "phaseshift",
            "max_adjusted_diff": worst,
        }))
    );
    Ok(())
}

fn write_artifact(dir: &Path, name: &str, content: &str) -> Result<(), Error> {
    let path = dir.join(name);
    std::fs::write(&path, content)
        .map_err(|e| Error::Parameter(format!("cannot write {}: {e}", path.display())))
}

fn cmd_figure(a: FigArgs) -> Result<(), Error> {
    match a.id {
        1 => figure1(&a.out_dir),
        2 => figure2(&a.out_dir),
        3 => figure3(&a.out_dir),
        4 => figure4(&a.out_dir),
        other => Err(Error::Parameter(format!(
            "figure id must be 1..=4, got {other}"
        ))),
    }
}

fn figure1(dir: &Path) -> Result<(), Error> {
    let p = HParams::new(2.0, 3.0, 1.0, 0.7 * std::f64::consts::PI)?;
    let zeros = zeros_h(&p, 500)?;
    let mut data = String::from("index,zero\n");
    for (i, z) in zeros.iter().enumerate() {
        data.push_str(&format!("{i},{}\n", fmt17(*z)));
    }
    let n_neg = zeros.iter().filter(|&&z| z < 0.0).count();
    let min_gap = zeros
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min);
    let meta = json!({
        "schema_version": SCHEMA_VERSION,
        "figure": 1,
        "family": "h",
        "mu": 2.0, "nu": 3.0, "alpha": 1.0, "theta": 0.7 * std::f64::consts::PI,
        "order": 500,
        "n_zeros": zeros.len(),
        "min_zero": zeros.first().copied(),
        "max_zero": zeros.last().copied(),
        "n_negative": n_neg,
        "n_positive": zeros.len() - n_neg,
        "min_gap": min_gap,
    });
    write_artifact(dir, "fig1_data.csv", &data)?;
    write_artifact(dir, "fig1_meta.json", &json_string(&meta))
}

fn figure2(dir: &Path) -> Result<(), Error> {
    let p = HParams::new(2.0, 3.0, 5.0, 0.2)?;
    let x = 1e-6;
    let (n_lo, n_hi) = (400usize, 470usize);
    let barred = eval_h_sequence(&p, x, n_hi, SeedKind::FirstKind)?;
    let ortho = apply_orthonormal_scale(&barred, p.mu, p.nu)?;
    let mut data = String::from("n,orthonormal_value,barred_value\n");
    for n in n_lo..=n_hi {
        data.push_str(&format!(
            "{n},{},{}\n",
            fmt17(ortho.value(n)),
            fmt17(barred.value(n))
        ));
    }
    let tau_ortho = envelope_exponent(&ortho, n_lo, n_hi)?;
    let tau_barred = envelope_exponent(&barred, n_lo, n_hi)?;
    let fit = fit_oscillation(&ortho, n_lo, n_hi, tau_ortho, OscillationLaw::LinearN)?;
    let meta = json!({
        "schema_version": SCHEMA_VERSION,
        "figure": 2,
        "family": "h",
        "mu": 2.0, "nu": 3.0, "alpha": 5.0, "theta": 0.2,
        "x": x,
        "n_lo": n_lo, "n_hi": n_hi,
        "rows": n_hi - n_lo + 1,
        "tau_orthonormal": tau_ortho,
        "tau_barred": tau_barred,
        "fit_law": "linear_n",
        "fit_freq": fit.freq,
        "fit_log_coeff": fit.log_coeff,
        "fit_amplitude": fit.amplitude,
        "fit_phase": fit.phase,
        "fit_rms_residual": fit.rms_residual,
    });
    write_artifact(dir, "fig2_data.csv", &data)?;
    write_artifact(dir, "fig2_meta.json", &json_string(&meta))
}

fn figure3(dir: &Path) -> Result<(), Error> {
    let p = GParams::new(2.0, 3.0, -35.0)?;
    let za = zeros_g(&p, 200)?;
    let zb = zeros_g(&p, 300)?;
    let mut data = String::from("index,zsq_zero\n");
    for (i, z) in za.iter().enumerate() {
        data.push_str(&format!("{i},{}\n", fmt17(*z)));
    }
    let rep = classify_spectrum(&za, &zb, 1e-6, DiscreteRegion::Below(0.0))?;
    let bs = bound_spectrum(3.0, -35.0);
    let max_rel = rep
        .discrete_points
        .iter()
        .zip(&bs.levels)
        .map(|(a, b)| ((a - b) / b).abs())
        .fold(0.0f64, f64::max);
    let meta = json!({
        "schema_version": SCHEMA_VERSION,
        "figure": 3,
        "family": "g",
        "mu": 2.0, "nu": 3.0, "sigma": -35.0,
        "order": 200,
        "order2": 300,
        "stability_tol": rep.stability_tol,
        "n_discrete": rep.n_discrete,
        "discrete_points": rep.discrete_points,
        "closed_form_levels": bs.levels,
        "max_rel_mismatch": max_rel,
        "n_continuous_samples": rep.continuous_samples.len(),
    });
    write_artifact(dir, "fig3_data.csv", &data)?;
    write_artifact(dir, "fig3_meta.json", &json_string(&meta))
}

fn figure4(dir: &Path) -> Result<(), Error> {
    let p = GParams::new(1.0, 2.0, 3.0)?;
    let zsq = 100.0;
    let (n_lo, n_hi) = (150usize, 1000usize);
    let barred = eval_g_sequence(&p, zsq, n_hi, SeedKind::FirstKind)?;
    let ortho = apply_orthonormal_scale(&barred, p.mu, p.nu)?;
    let mut data = String::from("n,orthonormal_value\n");
    for n in n_lo..=n_hi {
        data.push_str(&format!("{n},{}\n", fmt17(ortho.value(n))));
    }
    let tau = envelope_exponent(&ortho, n_lo, n_hi)?;
    let fit = fit_oscillation(&ortho, n_lo, n_hi, tau, OscillationLaw::LogN)?;
    let meta = json!({
        "schema_version": SCHEMA_VERSION,
        "figure": 4,
        "family": "g",
        "mu": 1.0, "nu": 2.0, "sigma": 3.0,
        "z": 10.0,
        "zsq": zsq,
        "n_lo": n_lo, "n_hi": n_hi,
        "rows": n_hi - n_lo + 1,
        "tau": tau,
        "fit_law": "log_n",
        "fit_freq": fit.freq,
        "fit_amplitude": fit.amplitude,
        "fit_phase": fit.phase,
        "fit_rms_residual": fit.rms_residual,
    });
    write_artifact(dir, "fig4_data.csv", &data)?;
    write_artifact(dir, "fig4_meta.json", &json_string(&meta))
}
