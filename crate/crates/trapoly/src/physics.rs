//! Maps between physical potential parameters and polynomial parameters,
//! plus physical outputs (bound-state energies, scattering phase shifts)
//! computed through the polynomial layer. All maps work in the
//! dimensionless combinations u_i = 2 V_i / lambda^2 and eps = 2 E /
//! lambda^2, so lambda never enters the outputs.

use crate::closed_form::{bound_spectrum, phase_shift};
use crate::error::{Error, Result};
use crate::recursion::{GParams, HParams};

/// The supported potentials. The first five map to the first (H) family,
/// the last three to the second (G) family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialId {
    TrigScarf,
    NewL2,
    HypEckart,
    HypPoschlTeller,
    HypRosenMorse,
    Pt2,
    TrigRow2,
    EckartRow3,
}

impl PotentialId {
    pub fn maps_to_h(self) -> bool {
        matches!(
            self,
            PotentialId::TrigScarf
                | PotentialId::NewL2
                | PotentialId::HypEckart
                | PotentialId::HypPoschlTeller
                | PotentialId::HypRosenMorse
        )
    }
}

/// Dimensionless potential strengths and the (inverse-length) scale lambda.
/// Bounds are the tabulated well-depth limits, stored in u-form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    pub id: PotentialId,
    pub u0: f64,
    pub u1: f64,
    pub u_plus: f64,
    pub u_minus: f64,
    pub lambda: f64,
}

impl PotentialSpec {
    pub fn new(
        id: PotentialId,
        u0: f64,
        u1: f64,
        u_plus: f64,
        u_minus: f64,
        lambda: f64,
    ) -> Result<Self> {
        let s = Self {
            id,
            u0,
            u1,
            u_plus,
            u_minus,
            lambda,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lambda > 0.0) || !self.lambda.is_finite() {
            return Err(Error::Parameter(format!(
                "lambda must be positive and finite, got {}",
                self.lambda
            )));
        }
        for (name, v) in [
            ("u0", self.u0),
            ("u1", self.u1),
            ("u_plus", self.u_plus),
            ("u_minus", self.u_minus),
        ] {
            if !v.is_finite() {
                return Err(Error::Parameter(format!("{name} must be finite")));
            }
        }
        // dimensionless well-depth bounds
        let (plus_min, minus_must_vanish, minus_min) = match self.id {
            PotentialId::TrigScarf => (-0.125, false, -0.125),
            PotentialId::NewL2 => (-0.125, false, -0.5),
            PotentialId::HypEckart => (-0.5, true, 0.0),
            PotentialId::HypPoschlTeller => (-0.25, true, 0.0),
            PotentialId::HypRosenMorse => (0.0, true, 0.0),
            PotentialId::Pt2 => (-0.25, true, 0.0),
            PotentialId::TrigRow2 => (-0.125, false, -0.125),
            PotentialId::EckartRow3 => (-0.5, true, 0.0),
        };
        if self.id == PotentialId::HypRosenMorse && self.u_plus != 0.0 {
            return Err(Error::Parameter("HypRosenMorse requires u_plus = 0".into()));
        }
        if self.u_plus < plus_min {
            return Err(Error::Parameter(format!(
                "u_plus = {} below the well-depth bound {plus_min} for {:?}",
                self.u_plus, self.id
            )));
        }
        if minus_must_vanish {
            if self.u_minus != 0.0 {
                return Err(Error::Parameter(format!(
                    "{:?} requires u_minus = 0",
                    self.id
                )));
            }
        } else if self.u_minus < minus_min {
            return Err(Error::Parameter(format!(
                "u_minus = {} below the well-depth bound {minus_min} for {:?}",
                self.u_minus, self.id
            )));
        }
        Ok(())
    }
}

/// First-family parameters plus the mapped argument z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MappedH {
    pub params: HParams,
    pub z: f64,
}

/// Second-family parameters plus the mapped argument z^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MappedG {
    pub params: GParams,
    pub zsq: f64,
}

fn nonneg_root(what: &str, sq: f64, hint: &str) -> Result<f64> {
    if sq < 0.0 {
        return Err(Error::Mapping(format!("{what} = {sq} is negative; {hint}")));
    }
    Ok(sq.sqrt())
}

/// Map a first-family potential at energy eps (or grid energy eps_k for the
/// trigonometric row) to HParams and the argument z.
pub fn map_to_h(spec: &PotentialSpec, eps: f64) -> Result<MappedH> {
    spec.validate()?;
    if !eps.is_finite() {
        return Err(Error::Parameter("eps must be finite".into()));
    }
    let bound_hint = "the bound-state regime requires eps <= 0";
    let (ct, z, alpha, musq, nusq) = match spec.id {
        PotentialId::TrigScarf => {
            if spec.u1 == 0.0 {
                return Err(Error::Mapping("u1 must be nonzero".into()));
            }
            let ct = eps / spec.u1;
            if ct.abs() > 1.0 {
                return Err(Error::Mapping(format!(
                    "eps_k / u1 = {ct} lies outside [-1, 1]"
                )));
            }
            (
                ct,
                (spec.u1 * spec.u1 - eps * eps).max(0.0).sqrt(),
                spec.u0,
                0.25 + 2.0 * spec.u_minus,
                0.25 + 2.0 * spec.u_plus,
            )
        }
        PotentialId::NewL2 => {
            if !(spec.u1 * eps > 0.0) {
                return Err(Error::Mapping(format!(
                    "u1 * eps = {} must be positive for a real argument",
                    spec.u1 * eps
                )));
            }
            let ct = (eps - spec.u1) / (eps + spec.u1);
            (
                ct,
                0.5 / (spec.u1 * eps).sqrt(),
                spec.u0 - spec.u1 - 1.0 / 16.0,
                1.0 + 2.0 * spec.u_minus,
                0.25 + 2.0 * spec.u_plus,
            )
        }
        PotentialId::HypEckart | PotentialId::HypPoschlTeller | PotentialId::HypRosenMorse => {
            if spec.u1 == 0.0 {
                return Err(Error::Mapping("u1 must be nonzero".into()));
            }
            let ct = -spec.u0 / spec.u1;
            if ct.abs() > 1.0 {
                return Err(Error::Mapping(format!(
                    "-u0 / u1 = {ct} lies outside [-1, 1]"
                )));
            }
            let rad = (spec.u1 * spec.u1 - spec.u0 * spec.u0).max(0.0).sqrt();
            match spec.id {
                PotentialId::HypEckart => (ct, rad, 0.0, -4.0 * eps, 1.0 + 2.0 * spec.u_plus),
                PotentialId::HypPoschlTeller => {
                    (ct, 0.5 * rad, -1.0 / 16.0, -eps, 0.25 + spec.u_plus)
                }
                _ => (ct, rad, -0.25, -eps, -eps),
            }
        }
        _ => {
            return Err(Error::Mapping(format!(
                "{:?} has no first-family row; use map_to_g",
                spec.id
            )))
        }
    };
    let mu = nonneg_root("mu^2", musq, bound_hint)?;
    let nu = nonneg_root("nu^2", nusq, bound_hint)?;
    let params = HParams::new(mu, nu, alpha, ct.acos())?;
    Ok(MappedH { params, z })
}

/// Map a second-family potential at energy eps to GParams and the argument
/// z^2. mu is caller-supplied: its dependence on the physical parameters is
/// not determined by the tables (the spectrum formula does not involve mu).
pub fn map_to_g(spec: &PotentialSpec, eps: f64, mu_override: f64) -> Result<MappedG> {
    spec.validate()?;
    if !eps.is_finite() {
        return Err(Error::Parameter("eps must be finite".into()));
    }
    let (zsq, sigma, nusq) = match spec.id {
        PotentialId::Pt2 => (0.5 * eps, 0.5 * spec.u0 - 1.0 / 16.0, 0.25 + spec.u_plus),
        PotentialId::TrigRow2 => (
            -spec.u_minus - 0.125,
            spec.u0 - eps,
            0.25 + 2.0 * spec.u_plus,
        ),
        PotentialId::EckartRow3 => (2.0 * eps, spec.u0 + eps, 1.0 + 2.0 * spec.u_plus),
        _ => {
            return Err(Error::Mapping(format!(
                "{:?} has no second-family row; use map_to_h",
                spec.id
            )))
        }
    };
    let nu = nonneg_root("nu^2", nusq, "check the well-depth bounds")?;
    let params = GParams::new(mu_override, nu, sigma)?;
    Ok(MappedG { params, zsq })
}

/// Bound-state energies eps_n (dimensionless, ascending) of a second-family
/// potential: the closed-form z_n^2 levels pushed back through the row's
/// z^2(eps) map. Row 1 inverts directly; row 3's energy-dependent sigma is
/// resolved per level by a damped fixed point. Empty when there are no
/// bound states.
pub fn potential_bound_energies(spec: &PotentialSpec, mu_override: f64) -> Result<Vec<f64>> {
    spec.validate()?;
    if !(mu_override > -1.0) {
        return Err(Error::Parameter(format!(
            "mu_override must exceed -1, got {mu_override}"
        )));
    }
    match spec.id {
        PotentialId::Pt2 => {
            let sigma = 0.5 * spec.u0 - 1.0 / 16.0;
            let nu = nonneg_root("nu^2", 0.25 + spec.u_plus, "check the well-depth bounds")?;
            // z^2 = eps / 2, so eps_n = 2 z_n^2
            Ok(bound_spectrum(nu, sigma)
                .levels
                .iter()
                .map(|z| 2.0 * z)
                .collect())
        }
        PotentialId::EckartRow3 => {
            let nu = nonneg_root(
                "nu^2",
                1.0 + 2.0 * spec.u_plus,
                "check the well-depth bounds",
            )?;
            let h = 0.5 * (nu + 1.0);
            if spec.u0 >= 0.0 {
                return Ok(Vec::new());
            }
            let top = (-spec.u0).sqrt() - h;
            if top < 0.0 {
                return Ok(Vec::new());
            }
            let count = top.floor() as usize + 1;
            let mut levels = Vec::with_capacity(count);
            for n in 0..count {
                levels.push(eckart_level(spec.u0, h, n)?);
            }
            Ok(levels)
        }
        PotentialId::TrigRow2 => Err(Error::Mapping(
            "the trigonometric row's z^2 does not depend on the energy, so the finite-spectrum \
             inversion does not apply (its bound tower is infinite)"
                .into(),
        )),
        _ => Err(Error::Mapping(format!(
            "{:?} maps to the first family, whose bound energies are not produced by this \
             closed form",
            spec.id
        ))),
    }
}

/// One level of the Eckart-type row: solve eps = -(n + h - sqrt(-(u0 +
/// eps)))^2 by damped fixed-point iteration (factor 0.5, mixed tolerance
/// 1e-12, at most 200 steps).
fn eckart_level(u0: f64, h: f64, n: usize) -> Result<f64> {
    let nh = n as f64 + h;
    let g = |eps: f64| {
        let s = (-(u0 + eps)).sqrt();
        let d = nh - s;
        -d * d
    };
    let mut eps = g(0.0);
    for _ in 0..200 {
        let next = 0.5 * eps + 0.5 * g(eps);
        let delta = (next - eps).abs();
        eps = next;
        if delta <= 1e-12 * (1.0 + eps.abs()) {
            // normalize a -0.0 threshold level
            return Ok(eps + 0.0);
        }
    }
    Err(Error::Convergence {
        index: n,
        message: "energy-dependent-sigma fixed point did not converge in 200 steps".into(),
    })
}

/// Scattering phase shift of a second-family potential at positive energy
/// eps, through the closed form at z = sqrt(z^2(eps)).
pub fn potential_phase_shift(spec: &PotentialSpec, eps: f64, mu_override: f64) -> Result<f64> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::Parameter(format!(
            "scattering requires eps > 0, got {eps}"
        )));
    }
    let mapped = map_to_g(spec, eps, mu_override)?;
    if mapped.zsq <= 0.0 {
        return Err(Error::Mapping(format!(
            "z^2 = {} is not a scattering energy",
            mapped.zsq
        )));
    }
    let sigma = mapped.params.sigma;
    if sigma >= 0.0 {
        return Err(Error::Mapping(format!(
            "sigma = {sigma} after mapping; the phase shift needs sigma < 0"
        )));
    }
    phase_shift(mapped.params.nu, sigma, mapped.zsq.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1.0)
    }

    fn eckart_spec() -> PotentialSpec {
        PotentialSpec::new(PotentialId::HypEckart, 1.0, 2.0, 0.0, 0.0, 1.0).unwrap()
    }

    #[test]
    fn hyp_eckart_golden() {
        let m = map_to_h(&eckart_spec(), -1.0).unwrap();
        assert!(rel(m.params.theta.cos(), -0.5) < 1e-15);
        assert!(rel(m.z, 3f64.sqrt()) < 1e-15);
        assert_eq!(m.params.alpha, 0.0);
        assert!(rel(m.params.mu, 2.0) < 1e-15);
        assert!(rel(m.params.nu, 1.0) < 1e-15);
    }

    #[test]
    fn rosen_morse_equal_parameters() {
        let spec = PotentialSpec::new(PotentialId::HypRosenMorse, 1.0, 2.0, 0.0, 0.0, 1.0).unwrap();
        let m = map_to_h(&spec, -2.25).unwrap();
        assert_eq!(m.params.mu, m.params.nu);
        assert!(rel(m.params.mu, 1.5) < 1e-15);
        assert_eq!(m.params.alpha, -0.25);
        // scattering-side energies have no real mu
        assert!(matches!(map_to_h(&spec, 1.0), Err(Error::Mapping(_))));
    }

    #[test]
    fn poschl_teller_half_argument() {
        let spec =
            PotentialSpec::new(PotentialId::HypPoschlTeller, 1.0, 2.0, 0.75, 0.0, 1.0).unwrap();
        let m = map_to_h(&spec, -4.0).unwrap();
        assert!(rel(m.z, 0.5 * 3f64.sqrt()) < 1e-15);
        assert_eq!(m.params.alpha, -1.0 / 16.0);
        assert!(rel(m.params.mu, 2.0) < 1e-15);
        assert!(rel(m.params.nu, 1.0) < 1e-15);
    }

    #[test]
    fn trig_scarf_and_new_rows() {
        let spec = PotentialSpec::new(PotentialId::TrigScarf, 0.5, 2.0, 0.0, 0.0, 1.0).unwrap();
        let m = map_to_h(&spec, 1.2).unwrap();
        assert!(rel(m.params.theta.cos(), 0.6) < 1e-15);
        assert!(rel(m.z, (4.0f64 - 1.44).sqrt()) < 1e-15);
        assert_eq!(m.params.alpha, 0.5);
        assert!(matches!(map_to_h(&spec, 5.0), Err(Error::Mapping(_))));

        let spec = PotentialSpec::new(PotentialId::NewL2, 0.5, 4.0, 0.0, 0.0, 1.0).unwrap();
        let m = map_to_h(&spec, 1.0).unwrap();
        assert!(rel(m.params.theta.cos(), -0.6) < 1e-15);
        assert!(rel(m.z, 0.25) < 1e-15);
        assert!(rel(m.params.alpha, 0.5 - 4.0 - 1.0 / 16.0) < 1e-15);
        assert!(rel(m.params.mu, 1.0) < 1e-15);
        assert!(rel(m.params.nu, 0.5) < 1e-15);
        assert!(matches!(map_to_h(&spec, -1.0), Err(Error::Mapping(_))));
    }

    #[test]
    fn round_trip_table_rows() {
        let checks: Vec<(PotentialSpec, f64)> = vec![
            (eckart_spec(), -1.0),
            (
                PotentialSpec::new(PotentialId::HypPoschlTeller, 0.5, 1.5, 0.3, 0.0, 2.0).unwrap(),
                -0.7,
            ),
            (
                PotentialSpec::new(PotentialId::TrigScarf, -0.3, 1.1, 0.2, 0.1, 0.5).unwrap(),
                0.4,
            ),
            (
                PotentialSpec::new(PotentialId::NewL2, 0.1, 2.0, 0.3, 0.2, 1.0).unwrap(),
                0.9,
            ),
        ];
        for (spec, eps) in checks {
            let m = map_to_h(&spec, eps).unwrap();
            let (ct_tab, z_tab, alpha_tab, musq_tab, nusq_tab) = match spec.id {
                PotentialId::TrigScarf => (
                    eps / spec.u1,
                    (spec.u1 * spec.u1 - eps * eps).sqrt(),
                    spec.u0,
                    0.25 + 2.0 * spec.u_minus,
                    0.25 + 2.0 * spec.u_plus,
                ),
                PotentialId::NewL2 => (
                    (eps - spec.u1) / (eps + spec.u1),
                    0.5 / (spec.u1 * eps).sqrt(),
                    spec.u0 - spec.u1 - 1.0 / 16.0,
                    1.0 + 2.0 * spec.u_minus,
                    0.25 + 2.0 * spec.u_plus,
                ),
                PotentialId::HypEckart => (
                    -spec.u0 / spec.u1,
                    (spec.u1 * spec.u1 - spec.u0 * spec.u0).sqrt(),
                    0.0,
                    -4.0 * eps,
                    1.0 + 2.0 * spec.u_plus,
                ),
                PotentialId::HypPoschlTeller => (
                    -spec.u0 / spec.u1,
                    0.5 * (spec.u1 * spec.u1 - spec.u0 * spec.u0).sqrt(),
                    -1.0 / 16.0,
                    -eps,
                    0.25 + spec.u_plus,
                ),
                _ => unreachable!(),
            };
            assert!(rel(m.params.theta.cos(), ct_tab) < 1e-12);
            assert!(rel(m.z, z_tab) < 1e-12);
            assert!(rel(m.params.alpha, alpha_tab) < 1e-12);
            assert!(rel(m.params.mu * m.params.mu, musq_tab) < 1e-12);
            assert!(rel(m.params.nu * m.params.nu, nusq_tab) < 1e-12);
        }
    }

    #[test]
    fn lambda_never_enters() {
        for lambda in [0.5, 1.0, 3.0] {
            let spec =
                PotentialSpec::new(PotentialId::HypEckart, 1.0, 2.0, 0.0, 0.0, lambda).unwrap();
            let m = map_to_h(&spec, -1.0).unwrap();
            assert_eq!(m.params, map_to_h(&eckart_spec(), -1.0).unwrap().params);
            assert_eq!(m.z, map_to_h(&eckart_spec(), -1.0).unwrap().z);
            let g = PotentialSpec::new(PotentialId::Pt2, -69.875, 0.0, 8.75, 0.0, lambda).unwrap();
            let e = potential_bound_energies(&g, 1.0).unwrap();
            let d = potential_phase_shift(&g, 2.0, 1.0).unwrap();
            let base = PotentialSpec::new(PotentialId::Pt2, -69.875, 0.0, 8.75, 0.0, 1.0).unwrap();
            assert_eq!(e, potential_bound_energies(&base, 1.0).unwrap());
            assert_eq!(d, potential_phase_shift(&base, 2.0, 1.0).unwrap());
        }
    }

    #[test]
    fn pt2_inversion_golden() {
        let spec = PotentialSpec::new(PotentialId::Pt2, -69.875, 0.0, 8.75, 0.0, 1.0).unwrap();
        let m = map_to_g(&spec, 2.0, 1.5).unwrap();
        assert!(rel(m.params.sigma, -35.0) < 1e-15);
        assert!(rel(m.params.nu, 3.0) < 1e-15);
        assert_eq!(m.params.mu, 1.5);
        assert!(rel(m.zsq, 1.0) < 1e-15);
    }

    #[test]
    fn pt2_bound_energies_golden() {
        let spec = PotentialSpec::new(PotentialId::Pt2, -69.875, 0.0, 8.75, 0.0, 1.0).unwrap();
        let e = potential_bound_energies(&spec, 1.0).unwrap();
        assert_eq!(e.len(), 4);
        assert!(rel(e[0], -61.342723470406143) < 1e-12);
        assert!(rel(e[3], -3.3568086760153583) < 1e-12);
        // mu never enters the spectrum
        assert_eq!(e, potential_bound_energies(&spec, 2.0).unwrap());
        // sigma >= 0: empty, not an error
        let none = PotentialSpec::new(PotentialId::Pt2, 1.0, 0.0, 8.75, 0.0, 1.0).unwrap();
        assert!(potential_bound_energies(&none, 1.0).unwrap().is_empty());
    }

    #[test]
    fn eckart_row_fixed_point_matches_closed_form() {
        // the damped iteration has the closed-form solution
        // s* = ((n+h)^2 - u0) / (2(n+h)), eps_n = -s*^2 - u0
        let spec = PotentialSpec::new(PotentialId::EckartRow3, -4.0, 0.0, 0.0, 0.0, 1.0).unwrap();
        let e = potential_bound_energies(&spec, 1.0).unwrap();
        assert_eq!(e.len(), 2);
        for (n, &got) in e.iter().enumerate() {
            let nh = n as f64 + 1.0;
            let s_star = (nh * nh + 4.0) / (2.0 * nh);
            let want = -s_star * s_star + 4.0;
            assert!((got - want).abs() < 1e-10, "n = {n}: {got} vs {want}");
        }
        assert!((e[0] + 2.25).abs() < 1e-10);
        assert!(e[1].abs() < 1e-10);
        for w in e.windows(2) {
            assert!(w[0] < w[1]);
        }
        let none = PotentialSpec::new(PotentialId::EckartRow3, 0.5, 0.0, 0.0, 0.0, 1.0).unwrap();
        assert!(potential_bound_energies(&none, 1.0).unwrap().is_empty());
    }

    #[test]
    fn phase_shift_composition_golden() {
        let spec = PotentialSpec::new(PotentialId::Pt2, -69.875, 0.0, 8.75, 0.0, 1.0).unwrap();
        // eps = 2 puts z at 1
        let d = potential_phase_shift(&spec, 2.0, 1.0).unwrap();
        assert!(rel(d, 9.6248573909438992) < 1e-12);
        assert!(matches!(
            potential_phase_shift(&spec, -1.0, 1.0),
            Err(Error::Parameter(_))
        ));
        // trig row never scatters: z^2 <= 0 under the well-depth bounds
        let trig = PotentialSpec::new(PotentialId::TrigRow2, 0.0, 0.0, 0.0, 0.0, 1.0).unwrap();
        assert!(matches!(
            potential_phase_shift(&trig, 1.0, 1.0),
            Err(Error::Mapping(_))
        ));
        assert!(matches!(
            potential_bound_energies(&trig, 1.0),
            Err(Error::Mapping(_))
        ));
    }

    #[test]
    fn wrong_family_and_bad_bounds() {
        let g = PotentialSpec::new(PotentialId::Pt2, -69.875, 0.0, 8.75, 0.0, 1.0).unwrap();
        assert!(matches!(map_to_h(&g, 1.0), Err(Error::Mapping(_))));
        assert!(matches!(
            map_to_g(&eckart_spec(), 1.0, 1.0),
            Err(Error::Mapping(_))
        ));
        assert!(matches!(
            potential_bound_energies(&eckart_spec(), 1.0),
            Err(Error::Mapping(_))
        ));
        assert!(PotentialSpec::new(PotentialId::TrigScarf, 0.0, 1.0, -0.2, 0.0, 1.0).is_err());
        assert!(PotentialSpec::new(PotentialId::HypEckart, 1.0, 2.0, 0.0, 0.5, 1.0).is_err());
        assert!(PotentialSpec::new(PotentialId::HypEckart, 1.0, 2.0, 0.0, 0.0, -1.0).is_err());
        assert!(PotentialSpec::new(PotentialId::HypRosenMorse, 1.0, 2.0, 0.1, 0.0, 1.0).is_err());
        // mu_override must be a valid family parameter
        assert!(matches!(map_to_g(&g, 1.0, -2.0), Err(Error::Parameter(_))));
    }
}
