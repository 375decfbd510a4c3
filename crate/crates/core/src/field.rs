//! Magnetic field model: a finite sum of smooth radial bumps plus
//! Aharonov-Bohm solenoids, with the scalar potential `h` solving
//! `Delta h = B` and its decomposition into a regular part and the
//! per-solenoid log terms.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::{composite_gl, composite_gl_graded};

/// Intensities are kept away from {0, 1} by this margin.
pub const ALPHA_MARGIN: f64 = 1e-6;
/// Minimum pairwise separation of solenoid centers.
pub const MIN_SEPARATION: f64 = 1e-9;
/// Evaluation closer than this to a solenoid center is rejected.
pub const SINGULAR_TOL: f64 = 1e-12;

/// An idealized flux line: a `2 pi alpha` delta contribution at `center`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Solenoid {
    pub center: Complex64,
    pub alpha: f64,
}

/// A radially symmetric smooth bump of compact support.
///
/// The profile is the fixed function `g(s) = exp(-1/(1-s^2))` for `s < 1`
/// (zero outside), scaled so the total flux of the bump equals `2 pi * flux`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialBump {
    pub center: Complex64,
    pub radius: f64,
    pub flux: f64,
}

fn bump_profile(s: f64) -> f64 {
    if s.abs() < 1.0 {
        (-1.0 / (1.0 - s * s)).exp()
    } else {
        0.0
    }
}

/// `G(u) = int_0^u g(w) w dw`, the (unnormalized) enclosed-flux primitive.
fn profile_moment(u: f64) -> f64 {
    let u = u.clamp(0.0, 1.0);
    // fine panels: g varies steeply where the bump tail dies off near w = 1
    composite_gl(|w| bump_profile(w) * w, 0.0, u, 1.0 / 64.0)
}

/// `G(1)`, the normalization constant of the profile.
fn profile_total() -> f64 {
    // int_0^1 exp(-1/(1-s^2)) s ds
    0.074_247_753_387_961_02
}

impl RadialBump {
    fn validate(&self) -> Result<()> {
        if !(self.radius > 0.0) || !self.radius.is_finite() {
            return Err(Error::InvalidField(format!(
                "bump radius {} must be positive",
                self.radius
            )));
        }
        if !self.flux.is_finite() {
            return Err(Error::InvalidField("bump flux must be finite".into()));
        }
        Ok(())
    }

    /// Field value `B_0` contributed by this bump at `z`.
    pub fn field_at(&self, z: Complex64) -> f64 {
        let s = (z - self.center).norm() / self.radius;
        self.flux / (self.radius * self.radius * profile_total()) * bump_profile(s)
    }

    /// Enclosed flux divided by `2 pi` within radius `r` of the bump center.
    pub fn enclosed_flux(&self, r: f64) -> f64 {
        if r >= self.radius {
            self.flux
        } else {
            self.flux * profile_moment(r / self.radius) / profile_total()
        }
    }

    /// Contribution of this bump to the regular potential `h_0` at `z`.
    ///
    /// Outside the support this is exactly `flux * log|z - center|` (Newton's
    /// theorem). Inside, the radial Poisson equation `h' (r) = F_enc(r)/r` is
    /// integrated as `h0(r) = flux log(rho) - (flux/G(1)) H(r/rho)` with
    /// `H(x) = -G(x) log x - int_x^1 g(w) w log w dw`, which reduces the
    /// nested integral to two single quadratures.
    pub fn potential_at(&self, z: Complex64) -> f64 {
        let r = (z - self.center).norm();
        if r >= self.radius {
            return self.flux * r.ln();
        }
        let x = (r / self.radius).max(0.0);
        let cap = 1.0 / 64.0;
        let h = if x <= 0.0 {
            // H(0) = -int_0^1 g w log w dw
            -composite_gl_graded(|w| bump_profile(w) * w * w.ln(), 1e-14, 1.0, cap)
        } else {
            let gx = profile_moment(x);
            let jx = composite_gl_graded(|w| bump_profile(w) * w * w.ln(), x, 1.0, cap);
            -gx * x.ln() - jx
        };
        self.flux * self.radius.ln() - self.flux / profile_total() * h
    }
}

/// The full field `B = B_0 + sum_j 2 pi alpha_j delta_{z_j}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldConfig {
    bumps: Vec<RadialBump>,
    solenoids: Vec<Solenoid>,
}

/// The scalar potential at a point, split into its regular and singular parts.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialValue {
    /// `h(z)`
    pub total: f64,
    /// `h_0(z)`, the bump contribution
    pub regular: f64,
    /// `h_j(z) = alpha_j log|z - z_j|`, one entry per solenoid
    pub singular_parts: Vec<f64>,
}

impl FieldConfig {
    pub fn new(bumps: Vec<RadialBump>, solenoids: Vec<Solenoid>) -> Result<Self> {
        for b in &bumps {
            b.validate()?;
        }
        for s in &solenoids {
            if !(s.alpha >= ALPHA_MARGIN && s.alpha <= 1.0 - ALPHA_MARGIN) {
                return Err(Error::InvalidField(format!(
                    "solenoid intensity {} outside [{ALPHA_MARGIN}, 1 - {ALPHA_MARGIN}]",
                    s.alpha
                )));
            }
            if !s.center.is_finite() {
                return Err(Error::InvalidField("solenoid center not finite".into()));
            }
        }
        for i in 0..solenoids.len() {
            for j in (i + 1)..solenoids.len() {
                if (solenoids[i].center - solenoids[j].center).norm() < MIN_SEPARATION {
                    return Err(Error::InvalidField(format!(
                        "solenoid centers {i} and {j} closer than {MIN_SEPARATION:e}"
                    )));
                }
            }
        }
        Ok(Self { bumps, solenoids })
    }

    pub fn bumps(&self) -> &[RadialBump] {
        &self.bumps
    }

    pub fn solenoids(&self) -> &[Solenoid] {
        &self.solenoids
    }

    pub fn num_solenoids(&self) -> usize {
        self.solenoids.len()
    }

    /// Value of the regular part `B_0` at `z`.
    pub fn regular_field(&self, z: Complex64) -> f64 {
        self.bumps.iter().map(|b| b.field_at(z)).sum()
    }

    /// Total flux of `B` divided by `2 pi`: `Phi = sum_k flux_k + sum_j alpha_j`.
    pub fn total_flux(&self) -> f64 {
        let bump: f64 = self.bumps.iter().map(|b| b.flux).sum();
        let sol: f64 = self.solenoids.iter().map(|s| s.alpha).sum();
        bump + sol
    }

    /// Scalar potential `h(z)` with its decomposition `h_0 + sum_j h_j`.
    pub fn scalar_potential(&self, z: Complex64) -> Result<PotentialValue> {
        let regular: f64 = self.bumps.iter().map(|b| b.potential_at(z)).sum();
        let mut singular_parts = Vec::with_capacity(self.solenoids.len());
        for s in &self.solenoids {
            let d = (z - s.center).norm();
            if d < SINGULAR_TOL {
                return Err(Error::SingularPoint {
                    z,
                    tol: SINGULAR_TOL,
                });
            }
            singular_parts.push(s.alpha * d.ln());
        }
        let total = regular + singular_parts.iter().sum::<f64>();
        Ok(PotentialValue {
            total,
            regular,
            singular_parts,
        })
    }

    /// `h(z)` alone; the common case for conjugation weights `e^{+-h}`.
    pub fn potential(&self, z: Complex64) -> Result<f64> {
        Ok(self.scalar_potential(z)?.total)
    }

    /// The potential at solenoid `j` with the self-singularity removed:
    /// returns `(h_0(z_j), sum_{l != j} alpha_l log|z_j - z_l|)`.
    pub fn regular_part_at_solenoid(&self, j: usize) -> (f64, f64) {
        let zj = self.solenoids[j].center;
        let h0: f64 = self.bumps.iter().map(|b| b.potential_at(zj)).sum();
        let others: f64 = self
            .solenoids
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != j)
            .map(|(_, s)| s.alpha * (zj - s.center).norm().ln())
            .sum();
        (h0, others)
    }

    /// Growth exponents of `e^h`: `|z|^Phi` at infinity and `|z - z_j|^{alpha_j}`
    /// at each solenoid.
    pub fn asymptotic_exponents(&self) -> (f64, Vec<f64>) {
        (
            self.total_flux(),
            self.solenoids.iter().map(|s| s.alpha).collect(),
        )
    }

    /// Flux-weighted centroid `(sum alpha_j z_j + sum flux_k w_k) / Phi`.
    ///
    /// Centering far-field ring averages here cancels the dipole term of `h`.
    pub fn flux_centroid(&self) -> Complex64 {
        let phi = self.total_flux();
        if phi.abs() < 0.25 {
            return Complex64::new(0.0, 0.0);
        }
        let mut m = Complex64::new(0.0, 0.0);
        for s in &self.solenoids {
            m += s.alpha * s.center;
        }
        for b in &self.bumps {
            m += b.flux * b.center;
        }
        m / phi
    }

    /// Distance from `z` to the nearest feature (solenoid center or bump disc).
    pub fn feature_distance(&self, z: Complex64) -> f64 {
        let mut d = f64::INFINITY;
        for s in &self.solenoids {
            d = d.min((z - s.center).norm());
        }
        for b in &self.bumps {
            d = d.min(((z - b.center).norm() - b.radius).max(0.0));
        }
        d
    }
}
