//! Machine-readable reports for the CLI commands. Every report is a plain
//! serde struct so the JSON round-trips through the same schema it was
//! produced from, and field order (hence byte output) is deterministic.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::extension::{
    check_dirac_condition, classify_extension, ev_tau_pattern, extract_boundary_data, gauge_phase,
    krein_sample_reversed, spin_flip_v, spin_flip_w, v_equivalent, w_equivalent, SolenoidClass,
};
use crate::field::Solenoid;
use crate::kernelsolver::{dirac_kernel, evaluate_mode, pauli_kernel, ZeroModeBasis};
use crate::verify::{annihilation_residual_seeded, l2_check};

pub const SCHEMA_VERSION: u32 = 1;

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Symbolic descriptor of one constructed mode.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeDescriptor {
    /// "plus" or "minus"
    pub component: String,
    /// residues at the solenoid centers (plus modes)
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub residues: Vec<[f64; 2]>,
    /// polynomial coefficients in z (plus modes)
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub poly: Vec<[f64; 2]>,
    /// anti-polynomial coefficients in conj(z) (minus modes)
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub coeffs: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub smallest_singular_value: f64,
    pub largest_singular_value: f64,
    pub null_dimension: usize,
    pub conditioning_warning: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub max_annihilation_residual: Option<f64>,
    pub annihilation_points: Option<usize>,
    pub l2_all_pass: Option<bool>,
    pub l2_outer_exponents: Vec<f64>,
    pub moment_residual: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroModesReport {
    pub schema_version: u32,
    pub phi: f64,
    pub n: usize,
    pub tau: f64,
    pub count: usize,
    pub per_component_plus: usize,
    pub per_component_minus: usize,
    pub headline_dirac: i64,
    pub headline_pauli: i64,
    pub discrepancy_flag: bool,
    pub modes: Vec<ModeDescriptor>,
    pub certificate: Option<CertificateReport>,
    pub verification: VerificationSummary,
}

fn mode_descriptors(basis: &ZeroModeBasis) -> Vec<ModeDescriptor> {
    let mut out = Vec::with_capacity(basis.count);
    for m in &basis.plus_modes {
        out.push(ModeDescriptor {
            component: "plus".into(),
            residues: m.residues.iter().map(|&z| pair(z)).collect(),
            poly: m.poly.iter().map(|&z| pair(z)).collect(),
            coeffs: Vec::new(),
        });
    }
    for m in &basis.minus_modes {
        out.push(ModeDescriptor {
            component: "minus".into(),
            residues: Vec::new(),
            poly: Vec::new(),
            coeffs: m.coeffs.iter().map(|&z| pair(z)).collect(),
        });
    }
    out
}

/// Constructs the kernel, verifies it, and assembles the zero-modes report.
pub fn cmd_zeromodes(config: &RunConfig) -> Result<ZeroModesReport> {
    let tau = config.uniform_tau()?;
    let cfg = &config.field;
    let basis = pauli_kernel(cfg, tau)?;

    let mut verification = VerificationSummary {
        max_annihilation_residual: None,
        annihilation_points: None,
        l2_all_pass: None,
        l2_outer_exponents: Vec::new(),
        moment_residual: basis.moment_residual(cfg),
        passed: true,
    };
    if basis.count > 0 {
        let ann = annihilation_residual_seeded(&basis, cfg, config.run.seed)?;
        verification.max_annihilation_residual = Some(ann.max_relative_residual);
        verification.annihilation_points = Some(ann.points_tested);
        let mut all_l2 = true;
        for i in 0..basis.count {
            let report = l2_check(
                |z| evaluate_mode(&basis, cfg, i, z).expect("rings avoid centers"),
                cfg,
            );
            verification.l2_outer_exponents.push(report.outer_exponent);
            all_l2 &= report.is_l2;
        }
        verification.l2_all_pass = Some(all_l2);
        verification.passed = ann.max_relative_residual < config.run.annihilation_tolerance
            && all_l2
            && verification.moment_residual < 1e-10;
    }

    Ok(ZeroModesReport {
        schema_version: SCHEMA_VERSION,
        phi: cfg.total_flux(),
        n: cfg.num_solenoids(),
        tau,
        count: basis.count,
        per_component_plus: basis.per_component.0,
        per_component_minus: basis.per_component.1,
        headline_dirac: basis.headline_dirac,
        headline_pauli: basis.headline_pauli.unwrap_or(0),
        discrepancy_flag: basis.discrepancy_flag,
        modes: mode_descriptors(&basis),
        certificate: basis.certificate.map(|c| CertificateReport {
            smallest_singular_value: c.smallest_singular_value,
            largest_singular_value: c.largest_singular_value,
            null_dimension: c.null_dimension,
            conditioning_warning: c.conditioning_warning,
        }),
        verification,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub schema_version: u32,
    pub per_solenoid: Vec<String>,
    pub ev_is_square_of_this_dirac: bool,
    pub max_match_impossible: bool,
    pub ev_tau_pattern: Vec<f64>,
    pub notes: Vec<String>,
}

/// Classifies the extension vector against the EV and Maximal patterns.
pub fn cmd_classify(config: &RunConfig) -> Result<ClassifyReport> {
    let alphas: Vec<f64> = config.field.solenoids().iter().map(|s| s.alpha).collect();
    let cls = classify_extension(&alphas, &config.extension)?;
    Ok(ClassifyReport {
        schema_version: SCHEMA_VERSION,
        per_solenoid: cls
            .per_solenoid
            .iter()
            .map(|c| {
                match c {
                    SolenoidClass::EvMatch => "EV_MATCH",
                    SolenoidClass::GenericSquaredDirac => "GENERIC_SQUARED_DIRAC",
                }
                .to_string()
            })
            .collect(),
        ev_is_square_of_this_dirac: cls.ev_is_square_of_this_dirac,
        max_match_impossible: cls.max_match_impossible,
        ev_tau_pattern: ev_tau_pattern(&alphas),
        notes: vec![
            "with intensities normalized to (0, 1), EV is the square of the uniform tau = pi extension".into(),
            "with intensities normalized to (-1, 0), EV is the square of the uniform tau = 0 extension".into(),
            "the Maximal operator's boundary pattern is not of squared-Dirac form for any tau".into(),
        ],
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpinflipProbe {
    pub solenoid: usize,
    pub alpha: f64,
    pub tau: f64,
    pub tau_prime: f64,
    /// extraction + Dirac-condition verdict for the V-mapped reversed sample
    pub v_numerical: bool,
    /// extraction + Dirac-condition verdict for the gauged-W-mapped sample
    pub w_numerical: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpinflipReport {
    pub schema_version: u32,
    pub v_equivalent: bool,
    pub w_equivalent: bool,
    pub probes: Vec<SpinflipProbe>,
    pub numerics_agree_with_predicates: bool,
    pub verdict: String,
}

/// Evaluates the V/W equivalence predicates and cross-checks them against
/// boundary-data extraction on single-solenoid probes.
pub fn cmd_spinflip(config: &RunConfig) -> Result<SpinflipReport> {
    let taus = &config.extension;
    let taus_prime = config
        .extension_prime
        .as_ref()
        .ok_or_else(|| Error::Config("spinflip requires taus_prime".into()))?;
    if taus_prime.len() != taus.len() {
        return Err(Error::Config(format!(
            "taus_prime has {} entries, taus has {}",
            taus_prime.len(),
            taus.len()
        )));
    }

    let v_pred = v_equivalent(taus_prime, taus);
    let w_pred = w_equivalent(taus_prime, taus);

    let mu = Complex64::new(0.8, 0.3);
    let mut probes = Vec::new();
    let mut agree = true;
    for (j, s) in config.field.solenoids().iter().enumerate() {
        let alpha = s.alpha;
        let beta = 1.0 - alpha;
        let tau = taus.taus()[j];
        let tau_p = taus_prime.taus()[j];
        let probe = Solenoid {
            center: Complex64::ZERO,
            alpha,
        };

        let v_field =
            |z: Complex64| spin_flip_v(krein_sample_reversed(beta, tau_p, mu, z).unwrap());
        let v_bd = extract_boundary_data(v_field, &probe)?;
        let v_num = check_dirac_condition(&v_bd, tau)?.holds;

        let centers = [Complex64::ZERO];
        let w_field = |z: Complex64| {
            spin_flip_w(
                krein_sample_reversed(beta, tau_p, mu, z).unwrap(),
                gauge_phase(&centers, z),
            )
        };
        let w_bd = extract_boundary_data(w_field, &probe)?;
        let w_num = check_dirac_condition(&w_bd, tau)?.holds;

        use std::f64::consts::PI;
        let v_pred_j = {
            let sum = tau + tau_p;
            (sum - PI).abs() < 1e-12 || (sum - 3.0 * PI).abs() < 1e-12
        };
        let w_pred_j = ((tau - tau_p).abs() - PI).abs() < 1e-12;
        agree &= v_num == v_pred_j && w_num == w_pred_j;

        probes.push(SpinflipProbe {
            solenoid: j,
            alpha,
            tau,
            tau_prime: tau_p,
            v_numerical: v_num,
            w_numerical: w_num,
        });
    }

    let verdict = match (v_pred, w_pred) {
        (true, true) => "equivalent under V and W".to_string(),
        (true, false) => "equivalent under V".to_string(),
        (false, true) => "equivalent under W".to_string(),
        (false, false) => "not equivalent under V or W".to_string(),
    };

    Ok(SpinflipReport {
        schema_version: SCHEMA_VERSION,
        v_equivalent: v_pred,
        w_equivalent: w_pred,
        probes,
        numerics_agree_with_predicates: agree,
        verdict,
    })
}

/// CSV grid of `(x, y, |psi_+|^2, |psi_-|^2)` for one mode.
#[derive(Debug, Clone, PartialEq)]
pub struct GridOutput {
    pub csv: String,
    pub rows: usize,
    pub skipped: usize,
}

pub fn cmd_grid(config: &RunConfig) -> Result<GridOutput> {
    let tau = config.uniform_tau()?;
    let cfg = &config.field;
    let basis = dirac_kernel(cfg, tau)?;
    if basis.count == 0 {
        return Err(Error::EmptyBasis);
    }
    let index = config.run.mode_index;
    if index >= basis.count {
        return Err(Error::Config(format!(
            "mode_index {index} out of range (count = {})",
            basis.count
        )));
    }
    let [xmin, xmax, ymin, ymax] = config.run.grid_bounds;
    let res = config.run.grid_resolution;
    let mut csv = String::from("x,y,abs_psi_plus_sq,abs_psi_minus_sq\n");
    let mut rows = 0usize;
    let mut skipped = 0usize;
    for iy in 0..res {
        let y = ymin + (ymax - ymin) * iy as f64 / (res - 1) as f64;
        for ix in 0..res {
            let x = xmin + (xmax - xmin) * ix as f64 / (res - 1) as f64;
            let z = Complex64::new(x, y);
            if cfg.solenoids().iter().any(|s| (z - s.center).norm() < 1e-6) {
                skipped += 1;
                continue;
            }
            let s = evaluate_mode(&basis, cfg, index, z)?;
            csv.push_str(&format!(
                "{x},{y},{},{}\n",
                s.plus.norm_sqr(),
                s.minus.norm_sqr()
            ));
            rows += 1;
        }
    }
    Ok(GridOutput { csv, rows, skipped })
}
