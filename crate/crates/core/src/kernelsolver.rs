//! Explicit zero-mode bases and counts for the Dirac extension (uniform tau)
//! and the Pauli extension, the moment system behind the coupled case, and
//! the singular-value certificate that rules out coupled zero-modes.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::extension::SpinorSample;
use crate::field::{FieldConfig, SINGULAR_TOL};
use crate::specfun::sigma;
use crate::verify::null_space;

/// Values within this of an integer are treated as that integer.
pub const INT_TOL: f64 = 1e-9;
/// Singular values below this ratio of the largest count as null directions.
pub const NULL_SPACE_TOL: f64 = 1e-10;
/// Node separations below this trip the conditioning warning.
pub const SEPARATION_WARN: f64 = 1e-7;

/// The counting function used by the kernel formulas: `floor(x)` for
/// non-integer `x > 1`, `x - 1` for integer `x > 1`, zero otherwise.
pub fn lower_int(x: f64) -> i64 {
    let nearest = x.round();
    if (x - nearest).abs() <= INT_TOL {
        let n = nearest as i64;
        if n > 1 {
            n - 1
        } else {
            0
        }
    } else if x > 1.0 {
        x.floor() as i64
    } else {
        0
    }
}

/// The positive weights `b_j = e^{-2 h0(z_j)} prod_{l != j} |z_j - z_l|^{-2 alpha_l}
/// sigma(1 - alpha_j) / sigma(alpha_j)` entering the coupled-mode analysis.
pub fn b_weights(cfg: &FieldConfig) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(cfg.num_solenoids());
    for (j, s) in cfg.solenoids().iter().enumerate() {
        let (h0, others) = cfg.regular_part_at_solenoid(j);
        let ratio = sigma(1.0 - s.alpha)? / sigma(s.alpha)?;
        out.push((-2.0 * (h0 + others)).exp() * ratio);
    }
    Ok(out)
}

/// The moment system `(m, V, B)`: `m = n - {n - Phi} - 1`, the `(m+1) x n`
/// matrix with rows `(z_1^k, ..., z_n^k)`, and the diagonal weights `b_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSystem {
    pub m: i64,
    pub vand: DMatrix<Complex64>,
    pub weights: Vec<f64>,
}

pub fn moment_system(cfg: &FieldConfig) -> Result<MomentSystem> {
    let n = cfg.num_solenoids();
    if n == 0 {
        return Err(Error::DegenerateSystem { m: -1 });
    }
    let phi = cfg.total_flux();
    let m = n as i64 - lower_int(n as f64 - phi) - 1;
    if m < 0 {
        return Err(Error::DegenerateSystem { m });
    }
    let vand = power_matrix(cfg, (m + 1) as usize);
    Ok(MomentSystem {
        m,
        vand,
        weights: b_weights(cfg)?,
    })
}

/// `rows x n` matrix with entries `z_j^k`, `k = 0..rows-1`.
fn power_matrix(cfg: &FieldConfig, rows: usize) -> DMatrix<Complex64> {
    let n = cfg.num_solenoids();
    let mut mat = DMatrix::<Complex64>::zeros(rows, n);
    for (j, s) in cfg.solenoids().iter().enumerate() {
        let mut p = Complex64::new(1.0, 0.0);
        for k in 0..rows {
            mat[(k, j)] = p;
            p *= s.center;
        }
    }
    mat
}

/// Which operator a basis belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum OperatorKind {
    Dirac,
    Pauli,
}

/// A spin-up mode: `psi_+ = e^h (sum_j eta_j / (z - z_j) + sum_k c_k z^k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMode {
    pub residues: Vec<Complex64>,
    pub poly: Vec<Complex64>,
}

/// A spin-down mode: `psi_- = e^{-h} sum_k a_k conj(z)^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct AntiPolyMode {
    pub coeffs: Vec<Complex64>,
}

/// Certificate that the coupled system has no nonzero solution.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CoupledCertificate {
    pub smallest_singular_value: f64,
    pub largest_singular_value: f64,
    pub null_dimension: usize,
    pub conditioning_warning: bool,
}

/// An explicit kernel basis with its count bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroModeBasis {
    pub kind: OperatorKind,
    pub tau: f64,
    pub plus_modes: Vec<RationalMode>,
    pub minus_modes: Vec<AntiPolyMode>,
    /// constructed dimension: `|plus_modes| + |minus_modes|`
    pub count: usize,
    /// the closed-form Dirac kernel count for this tau branch
    pub headline_dirac: i64,
    /// the closed-form Pauli kernel count (absolute-value form)
    pub headline_pauli: Option<i64>,
    /// `(spin-up, spin-down)` counts from the proof's case analysis
    pub per_component: (usize, usize),
    /// set when the constructed count differs from a headline formula
    pub discrepancy_flag: bool,
    pub certificate: Option<CoupledCertificate>,
}

impl ZeroModeBasis {
    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Largest violation of the moment constraints `sum_j eta_j z_j^k = 0`
    /// over the plus modes, normalized per row.
    pub fn moment_residual(&self, cfg: &FieldConfig) -> f64 {
        let n = cfg.num_solenoids();
        let phi = cfg.total_flux();
        let k_rows = n as i64 - lower_int(n as f64 - phi);
        if k_rows <= 0 {
            return 0.0;
        }
        let mat = power_matrix(cfg, k_rows as usize);
        let mut worst = 0.0f64;
        for mode in &self.plus_modes {
            if mode.residues.is_empty() {
                continue;
            }
            let eta = nalgebra::DVector::from_column_slice(&mode.residues);
            let prod = &mat * &eta;
            for k in 0..k_rows as usize {
                let row_scale: f64 =
                    (0..n).map(|j| mat[(k, j)].norm()).sum::<f64>() * eta.norm() + 1e-30;
                worst = worst.max(prod[k].norm() / row_scale);
            }
        }
        worst
    }
}

fn is_tau(tau: f64, value: f64) -> bool {
    (tau - value).abs() < crate::extension::ANGLE_TOL
}

/// Monomial spin-up modes `e^h z^k`, `k = 0..count-1`.
fn monomial_plus_modes(n: usize, count: i64) -> Vec<RationalMode> {
    (0..count.max(0))
        .map(|k| {
            let mut poly = vec![Complex64::ZERO; k as usize + 1];
            poly[k as usize] = Complex64::new(1.0, 0.0);
            RationalMode {
                residues: vec![Complex64::ZERO; n],
                poly,
            }
        })
        .collect()
}

/// Basis coefficient vectors of anti-polynomials `z̄^i prod_j (z̄ - z̄_j)`,
/// the spin-down modes with forced zeros at every solenoid.
fn forced_zero_minus_modes(cfg: &FieldConfig, count: i64) -> Vec<AntiPolyMode> {
    let mut root_poly = vec![Complex64::new(1.0, 0.0)];
    for s in cfg.solenoids() {
        // multiply by (X - conj(z_j))
        let r = s.center.conj();
        let mut next = vec![Complex64::ZERO; root_poly.len() + 1];
        for (i, &c) in root_poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
        }
        root_poly = next;
    }
    (0..count.max(0))
        .map(|i| {
            let mut coeffs = vec![Complex64::ZERO; i as usize];
            coeffs.extend_from_slice(&root_poly);
            AntiPolyMode { coeffs }
        })
        .collect()
}

/// Plain monomial spin-down modes `e^{-h} z̄^i`, `i = 0..count-1`.
fn monomial_minus_modes(count: i64) -> Vec<AntiPolyMode> {
    (0..count.max(0))
        .map(|i| {
            let mut coeffs = vec![Complex64::ZERO; i as usize + 1];
            coeffs[i as usize] = Complex64::new(1.0, 0.0);
            AntiPolyMode { coeffs }
        })
        .collect()
}

/// Constructs the kernel of the Dirac extension with uniform `tau`.
///
/// The construction follows the proof's case analysis per spin component;
/// `discrepancy_flag` is raised whenever the constructed total differs from
/// the headline formula (possible only for `Phi < 0` or `Phi > n + 1`).
pub fn dirac_kernel(cfg: &FieldConfig, tau: f64) -> Result<ZeroModeBasis> {
    build_kernel(cfg, tau, OperatorKind::Dirac)
}

/// Kernel of the Pauli extension `(D^h)^2`: the same basis, reported against
/// both headline formulas (which differ for negative flux).
pub fn pauli_kernel(cfg: &FieldConfig, tau: f64) -> Result<ZeroModeBasis> {
    build_kernel(cfg, tau, OperatorKind::Pauli)
}

fn build_kernel(cfg: &FieldConfig, tau: f64, kind: OperatorKind) -> Result<ZeroModeBasis> {
    let n = cfg.num_solenoids();
    if n == 0 {
        return Err(Error::InvalidField(
            "kernel construction requires at least one solenoid".into(),
        ));
    }
    let phi = cfg.total_flux();
    let nf = n as f64;

    let (plus_modes, minus_modes, certificate);
    if is_tau(tau, std::f64::consts::PI) {
        // spin-down: anti-polynomials of degree <= {Phi}-1, no forced zeros;
        // spin-up: plain polynomials of degree <= {-Phi}-1
        minus_modes = monomial_minus_modes(lower_int(phi));
        plus_modes = monomial_plus_modes(n, lower_int(-phi));
        certificate = None;
    } else if is_tau(tau, 0.0) {
        // spin-up: pole sums with the moment constraints, plus free monomials
        // when the flux is negative enough to admit polynomial growth
        let k_rows = n as i64 - lower_int(nf - phi);
        let mut plus = Vec::new();
        if k_rows <= 0 {
            for j in 0..n {
                let mut residues = vec![Complex64::ZERO; n];
                residues[j] = Complex64::new(1.0, 0.0);
                plus.push(RationalMode {
                    residues,
                    poly: Vec::new(),
                });
            }
        } else if (k_rows as usize) < n {
            let constraints = power_matrix(cfg, k_rows as usize);
            let (basis, _smin) = null_space(&constraints, NULL_SPACE_TOL);
            for eta in basis {
                plus.push(RationalMode {
                    residues: eta.iter().copied().collect(),
                    poly: Vec::new(),
                });
            }
        }
        plus.extend(monomial_plus_modes(n, lower_int(-phi)));
        // spin-down: anti-polynomials with forced zeros at every solenoid
        minus_modes = forced_zero_minus_modes(cfg, lower_int(phi - nf));
        plus_modes = plus;
        certificate = None;
    } else {
        // coupled case: no modes; certify triviality through the moment system
        plus_modes = Vec::new();
        minus_modes = Vec::new();
        certificate = if phi > 1.0 {
            Some(coupled_certificate(cfg, tau)?)
        } else {
            None
        };
    }

    let per_component = (plus_modes.len(), minus_modes.len());
    let count = per_component.0 + per_component.1;
    let headline_dirac = if is_tau(tau, 0.0) {
        lower_int(nf - phi)
    } else if is_tau(tau, std::f64::consts::PI) {
        lower_int(phi)
    } else {
        0
    };
    let headline_pauli = match kind {
        OperatorKind::Dirac => None,
        OperatorKind::Pauli => Some(if is_tau(tau, 0.0) {
            lower_int((nf - phi).abs())
        } else if is_tau(tau, std::f64::consts::PI) {
            lower_int(phi.abs())
        } else {
            0
        }),
    };
    let discrepancy_flag =
        count as i64 != headline_dirac || headline_pauli.is_some_and(|h| h != count as i64);

    Ok(ZeroModeBasis {
        kind,
        tau,
        plus_modes,
        minus_modes,
        count,
        headline_dirac,
        headline_pauli,
        per_component,
        discrepancy_flag,
        certificate,
    })
}

/// Builds `sqrt(B) V*` and certifies its null space through the SVD.
///
/// For distinct solenoid centers the matrix has full column rank, so the
/// certified dimension is zero and the coupled system admits only the
/// trivial solution.
pub fn coupled_certificate(cfg: &FieldConfig, _tau: f64) -> Result<CoupledCertificate> {
    let system = moment_system(cfg)?;
    let n = cfg.num_solenoids();
    let cols = (system.m + 1) as usize;
    let mut mat = DMatrix::<Complex64>::zeros(n, cols);
    for j in 0..n {
        let w = system.weights[j].sqrt();
        for k in 0..cols {
            mat[(j, k)] = w * system.vand[(k, j)].conj();
        }
    }
    let (basis, smin) = null_space(&mat, NULL_SPACE_TOL);
    let svd = mat.svd(false, false);
    let smax = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    let mut min_sep = f64::INFINITY;
    for i in 0..n {
        for j in (i + 1)..n {
            min_sep = min_sep.min((cfg.solenoids()[i].center - cfg.solenoids()[j].center).norm());
        }
    }
    Ok(CoupledCertificate {
        smallest_singular_value: smin,
        largest_singular_value: smax,
        null_dimension: basis.len(),
        conditioning_warning: smin < NULL_SPACE_TOL * smax || min_sep < SEPARATION_WARN,
    })
}

/// Evaluates the indexed mode pointwise; plus modes come first.
pub fn evaluate_mode(
    basis: &ZeroModeBasis,
    cfg: &FieldConfig,
    index: usize,
    z: Complex64,
) -> Result<SpinorSample> {
    if cfg
        .solenoids()
        .iter()
        .any(|s| (z - s.center).norm() < SINGULAR_TOL)
    {
        return Err(Error::SingularPoint {
            z,
            tol: SINGULAR_TOL,
        });
    }
    let h = cfg.potential(z)?;
    let n_plus = basis.plus_modes.len();
    if index < n_plus {
        let mode = &basis.plus_modes[index];
        let mut f = Complex64::ZERO;
        for (j, &eta) in mode.residues.iter().enumerate() {
            if eta != Complex64::ZERO {
                f += eta / (z - cfg.solenoids()[j].center);
            }
        }
        let mut p = Complex64::new(1.0, 0.0);
        for &c in &mode.poly {
            f += c * p;
            p *= z;
        }
        Ok(SpinorSample::new(h.exp() * f, Complex64::ZERO))
    } else if index < n_plus + basis.minus_modes.len() {
        let mode = &basis.minus_modes[index - n_plus];
        let zb = z.conj();
        let mut f = Complex64::ZERO;
        let mut p = Complex64::new(1.0, 0.0);
        for &a in &mode.coeffs {
            f += a * p;
            p *= zb;
        }
        Ok(SpinorSample::new(Complex64::ZERO, (-h).exp() * f))
    } else {
        Err(Error::Domain(format!(
            "mode index {index} out of range for basis of size {}",
            basis.count
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{RadialBump, Solenoid};
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn solenoids_at(points: &[(f64, f64)], alpha: f64) -> FieldConfig {
        FieldConfig::new(
            vec![],
            points
                .iter()
                .map(|&(x, y)| Solenoid {
                    center: c(x, y),
                    alpha,
                })
                .collect(),
        )
        .unwrap()
    }

    fn triangle_half() -> FieldConfig {
        // equilateral triangle: the cube roots of unity, alpha = 1/2 each
        let w = c(-0.5, 3f64.sqrt() / 2.0);
        FieldConfig::new(
            vec![],
            vec![
                Solenoid {
                    center: c(1.0, 0.0),
                    alpha: 0.5,
                },
                Solenoid {
                    center: w,
                    alpha: 0.5,
                },
                Solenoid {
                    center: w.conj(),
                    alpha: 0.5,
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn lower_int_cases() {
        assert_eq!(lower_int(1.5), 1);
        assert_eq!(lower_int(2.0), 1);
        assert_eq!(lower_int(0.7), 0);
        assert_eq!(lower_int(1.0), 0);
        assert_eq!(lower_int(-3.0), 0);
        assert_eq!(lower_int(3.5), 3);
        assert_eq!(lower_int(2.0 + 1e-12), 1);
        assert_eq!(lower_int(1.0 - 1e-12), 0);
    }

    #[test]
    fn b_weights_examples() {
        let cfg = solenoids_at(&[(0.0, 0.0)], 0.5);
        assert_relative_eq!(b_weights(&cfg).unwrap()[0], 1.0, max_relative = 1e-12);

        let cfg = solenoids_at(&[(0.0, 0.0), (2.0, 0.0)], 0.5);
        let b = b_weights(&cfg).unwrap();
        assert_relative_eq!(b[0], 0.5, max_relative = 1e-12);
        assert_relative_eq!(b[1], 0.5, max_relative = 1e-12);

        let cfg = FieldConfig::new(
            vec![RadialBump {
                center: c(0.0, 0.0),
                radius: 1.0,
                flux: 1.0,
            }],
            vec![Solenoid {
                center: c(3.0, 0.0),
                alpha: 0.3,
            }],
        )
        .unwrap();
        let want = (1.0 / 9.0) * sigma(0.7).unwrap() / sigma(0.3).unwrap();
        assert_relative_eq!(b_weights(&cfg).unwrap()[0], want, max_relative = 1e-12);
    }

    #[test]
    fn moment_system_shapes() {
        // n = 2, z = (0, 1), Phi = 1.5: m = 1, vand = [[1,1],[0,1]]
        let cfg = FieldConfig::new(
            vec![],
            vec![
                Solenoid {
                    center: c(0.0, 0.0),
                    alpha: 0.75,
                },
                Solenoid {
                    center: c(1.0, 0.0),
                    alpha: 0.75,
                },
            ],
        )
        .unwrap();
        let sys = moment_system(&cfg).unwrap();
        assert_eq!(sys.m, 1);
        assert_eq!(sys.vand.nrows(), 2);
        assert_eq!(sys.vand[(0, 0)], c(1.0, 0.0));
        assert_eq!(sys.vand[(1, 0)], c(0.0, 0.0));
        assert_eq!(sys.vand[(1, 1)], c(1.0, 0.0));

        // n = 1, Phi = 0.5: m = 0, vand = [[1]]
        let cfg = solenoids_at(&[(0.0, 0.0)], 0.5);
        let sys = moment_system(&cfg).unwrap();
        assert_eq!(sys.m, 0);
        assert_eq!(sys.vand.nrows(), 1);

        // collinear distinct nodes keep full row rank
        let cfg = FieldConfig::new(
            vec![],
            vec![
                Solenoid {
                    center: c(-1.0, 0.0),
                    alpha: 0.9,
                },
                Solenoid {
                    center: c(0.3, 0.0),
                    alpha: 0.9,
                },
                Solenoid {
                    center: c(1.2, 0.0),
                    alpha: 0.9,
                },
            ],
        )
        .unwrap();
        let sys = moment_system(&cfg).unwrap();
        let svd = sys.vand.clone().svd(false, false);
        let smin = svd.singular_values.iter().cloned().fold(f64::MAX, f64::min);
        assert!(smin > 1e-6);
    }

    #[test]
    fn triangle_kernel_counts() {
        let cfg = triangle_half(); // Phi = 1.5, n = 3
        let b = dirac_kernel(&cfg, PI).unwrap();
        assert_eq!(b.count, 1);
        assert_eq!(b.per_component, (0, 1));
        assert!(!b.discrepancy_flag);
        // the single mode is e^{-h}: coefficients (1)
        assert_eq!(b.minus_modes[0].coeffs.len(), 1);

        let b = dirac_kernel(&cfg, 0.0).unwrap();
        assert_eq!(b.count, 1);
        assert_eq!(b.per_component, (1, 0));

        let b = dirac_kernel(&cfg, FRAC_PI_2).unwrap();
        assert_eq!(b.count, 0);
        let cert = b.certificate.unwrap();
        assert_eq!(cert.null_dimension, 0);
        assert!(cert.smallest_singular_value > 0.0);
        assert!(!cert.conditioning_warning);
    }

    #[test]
    fn pauli_headlines_agree_for_positive_flux() {
        let cfg = triangle_half(); // Phi = 1.5
        let b = pauli_kernel(&cfg, PI).unwrap();
        assert_eq!(b.kind, OperatorKind::Pauli);
        assert_eq!(b.headline_dirac, 1);
        assert_eq!(b.headline_pauli, Some(1));
        assert!(!b.discrepancy_flag);

        let b = pauli_kernel(&cfg, 0.0).unwrap();
        assert_eq!(b.headline_pauli, Some(1));
        assert!(!b.discrepancy_flag);
    }

    #[test]
    fn coupled_candidates_cannot_satisfy_moments() {
        // candidate data with eta_j = i cot(tau/2) b_j f_-(z_j) never meets
        // the moment constraints unless the anti-polynomial is zero
        let cfg = FieldConfig::new(
            vec![],
            vec![
                Solenoid {
                    center: c(1.0, 0.2),
                    alpha: 0.6,
                },
                Solenoid {
                    center: c(-0.9, 0.7),
                    alpha: 0.55,
                },
                Solenoid {
                    center: c(0.1, -1.3),
                    alpha: 0.5,
                },
                Solenoid {
                    center: c(2.0, 1.0),
                    alpha: 0.52,
                },
            ],
        )
        .unwrap(); // Phi = 2.17, m = 2
        let sys = moment_system(&cfg).unwrap();
        let tau = FRAC_PI_2;
        let factor = Complex64::I * (tau / 2.0).tan().recip();
        for trial in 0..5 {
            let a: Vec<Complex64> = (0..=sys.m as usize)
                .map(|k| c(((trial * 3 + k) as f64).sin() + 0.2, (k as f64 - 0.7).cos()))
                .collect();
            let mut residual: f64 = 0.0;
            let mut eta_norm = 0.0f64;
            for k in 0..=sys.m as usize {
                let mut sum = Complex64::ZERO;
                for (j, s) in cfg.solenoids().iter().enumerate() {
                    let f_minus: Complex64 = a
                        .iter()
                        .enumerate()
                        .map(|(p, &ap)| ap * s.center.conj().powu(p as u32))
                        .sum();
                    let eta = factor * sys.weights[j] * f_minus;
                    eta_norm = eta_norm.max(eta.norm());
                    sum += eta * s.center.powu(k as u32);
                }
                residual = residual.max(sum.norm());
            }
            assert!(residual > 1e-6 * eta_norm, "trial {trial}");
        }
    }

    #[test]
    fn single_solenoid_has_no_modes() {
        let cfg = solenoids_at(&[(0.0, 0.0)], 0.5);
        assert_eq!(dirac_kernel(&cfg, PI).unwrap().count, 0);
        assert_eq!(dirac_kernel(&cfg, 0.0).unwrap().count, 0);
    }

    #[test]
    fn triangle_tau_zero_mode_matches_hand_solution() {
        // constraints sum eta_j = 0 and sum eta_j z_j = 0 at the cube roots
        // of unity have the one-dimensional solution eta ~ (1, w, w^2)
        let cfg = triangle_half();
        let b = dirac_kernel(&cfg, 0.0).unwrap();
        assert_eq!(b.plus_modes.len(), 1);
        let eta = &b.plus_modes[0].residues;
        // hand solution: eta_j = z_j (the centers vector), since
        // sum z_j = 0 and sum z_j^2 = sum conj(z_j) = 0 at the cube roots
        let w = c(-0.5, 3f64.sqrt() / 2.0);
        let hand = [c(1.0, 0.0), w, w.conj()];
        // check it IS a null vector first
        let s0: Complex64 = hand.iter().sum();
        let s1: Complex64 = hand
            .iter()
            .zip(cfg.solenoids())
            .map(|(&e, s)| e * s.center)
            .sum();
        assert!(s0.norm() < 1e-12 && s1.norm() < 1e-12);
        // computed basis vector is proportional to the hand solution
        let dot: Complex64 = eta
            .iter()
            .zip(hand.iter())
            .map(|(&a, &b)| a.conj() * b)
            .sum();
        let norm_hand = 3f64.sqrt();
        let norm_eta = eta.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt();
        assert_relative_eq!(dot.norm(), norm_eta * norm_hand, max_relative = 1e-10);
    }

    #[test]
    fn moment_constraints_hold_for_constructed_modes() {
        let cfg = FieldConfig::new(
            vec![],
            vec![
                Solenoid {
                    center: c(0.0, 0.0),
                    alpha: 0.4,
                },
                Solenoid {
                    center: c(1.5, 0.3),
                    alpha: 0.6,
                },
                Solenoid {
                    center: c(-0.8, 1.1),
                    alpha: 0.55,
                },
                Solenoid {
                    center: c(0.4, -1.2),
                    alpha: 0.45,
                },
            ],
        )
        .unwrap(); // Phi = 2.0 exactly... keep away from integers
        assert_relative_eq!(cfg.total_flux(), 2.0);
        // shift one intensity to avoid the integer boundary
        let cfg = FieldConfig::new(
            vec![],
            vec![
                Solenoid {
                    center: c(0.0, 0.0),
                    alpha: 0.4,
                },
                Solenoid {
                    center: c(1.5, 0.3),
                    alpha: 0.6,
                },
                Solenoid {
                    center: c(-0.8, 1.1),
                    alpha: 0.55,
                },
                Solenoid {
                    center: c(0.4, -1.2),
                    alpha: 0.62,
                },
            ],
        )
        .unwrap(); // Phi = 2.17, n = 4: tau = 0 count = {4 - 2.17} = 1
        let b = dirac_kernel(&cfg, 0.0).unwrap();
        assert_eq!(b.count, lower_int(4.0 - 2.17) as usize);
        assert!(b.moment_residual(&cfg) < 1e-10);
    }

    #[test]
    fn negative_flux_raises_discrepancy_flag() {
        // bump flux -3, one solenoid alpha = 0.5: Phi = -2.5
        let cfg = FieldConfig::new(
            vec![RadialBump {
                center: c(0.0, 0.0),
                radius: 1.0,
                flux: -3.0,
            }],
            vec![Solenoid {
                center: c(2.0, 0.0),
                alpha: 0.5,
            }],
        )
        .unwrap();
        assert_relative_eq!(cfg.total_flux(), -2.5);

        // tau = pi: headline {Phi} = 0, but the spin-up side constructs
        // {-Phi} = 2 polynomial modes
        let b = pauli_kernel(&cfg, PI).unwrap();
        assert_eq!(b.headline_dirac, 0);
        assert_eq!(b.headline_pauli, Some(2));
        assert_eq!(b.per_component, (2, 0));
        assert_eq!(b.count, 2);
        assert!(b.discrepancy_flag);

        // tau = 0: headline {n - Phi} = {3.5} = 3; construction gives one
        // unconstrained pole mode plus {-Phi} = 2 monomials; no flag
        let b = pauli_kernel(&cfg, 0.0).unwrap();
        assert_eq!(b.headline_dirac, 3);
        assert_eq!(b.headline_pauli, Some(3));
        assert_eq!(b.count, 3);
        assert!(!b.discrepancy_flag);
    }

    #[test]
    fn large_flux_tau_zero_forced_zero_modes() {
        // Phi = 3.3 > n + 1 = 2: tau = 0 headline {n - Phi} = 0 but the
        // spin-down side admits {Phi - n} = 2 forced-zero anti-polynomials
        let cfg = FieldConfig::new(
            vec![RadialBump {
                center: c(0.0, 0.0),
                radius: 0.5,
                flux: 2.9,
            }],
            vec![Solenoid {
                center: c(1.0, 0.0),
                alpha: 0.4,
            }],
        )
        .unwrap();
        let b = dirac_kernel(&cfg, 0.0).unwrap();
        assert_eq!(b.headline_dirac, 0);
        assert_eq!(b.per_component, (0, 2));
        assert!(b.discrepancy_flag);
        // each minus mode vanishes at the solenoid
        for mode in &b.minus_modes {
            let zb = cfg.solenoids()[0].center.conj();
            let mut val = Complex64::ZERO;
            let mut p = c(1.0, 0.0);
            for &a in &mode.coeffs {
                val += a * p;
                p *= zb;
            }
            assert!(val.norm() < 1e-12);
        }
    }

    #[test]
    fn coupled_certificate_examples() {
        // n = 2, m = 0: the matrix is the column (sqrt b_1, sqrt b_2)^t
        let cfg = solenoids_at(&[(0.0, 0.0), (2.0, 0.0)], 0.25); // Phi = 0.5
        let cert = coupled_certificate(&cfg, FRAC_PI_2).unwrap();
        let b = b_weights(&cfg).unwrap();
        assert_relative_eq!(
            cert.smallest_singular_value,
            (b[0] + b[1]).sqrt(),
            max_relative = 1e-12
        );
        assert_eq!(cert.null_dimension, 0);

        let cert = coupled_certificate(&triangle_half(), FRAC_PI_2).unwrap();
        assert_eq!(cert.null_dimension, 0);
        assert!(!cert.conditioning_warning);
    }

    #[test]
    fn near_coincident_solenoids_trip_conditioning_warning() {
        let cfg = FieldConfig::new(
            vec![],
            vec![
                Solenoid {
                    center: c(0.0, 0.0),
                    alpha: 0.5,
                },
                Solenoid {
                    center: c(1e-8, 0.0),
                    alpha: 0.5,
                },
                Solenoid {
                    center: c(1.0, 0.0),
                    alpha: 0.6,
                },
            ],
        )
        .unwrap();
        let cert = coupled_certificate(&cfg, FRAC_PI_2).unwrap();
        assert!(cert.conditioning_warning);
    }

    #[test]
    fn evaluate_mode_minus_is_weighted_antipolynomial() {
        let cfg = triangle_half();
        let basis = dirac_kernel(&cfg, PI).unwrap();
        let z = c(0.7, 0.4);
        let h = cfg.potential(z).unwrap();
        let s = evaluate_mode(&basis, &cfg, 0, z).unwrap();
        assert_eq!(s.plus, Complex64::ZERO);
        assert_relative_eq!(s.minus.re, (-h).exp(), max_relative = 1e-12);
        assert!(s.minus.im.abs() < 1e-15);
    }

    #[test]
    fn evaluate_mode_respects_field_symmetry() {
        // solenoids symmetric under conjugation: |psi| of the tau = pi mode
        // is symmetric too
        let cfg = FieldConfig::new(
            vec![],
            vec![
                Solenoid {
                    center: c(0.0, 1.0),
                    alpha: 0.8,
                },
                Solenoid {
                    center: c(0.0, -1.0),
                    alpha: 0.8,
                },
            ],
        )
        .unwrap(); // Phi = 1.6: one tau = pi mode
        let basis = dirac_kernel(&cfg, PI).unwrap();
        assert_eq!(basis.count, 1);
        let z = c(0.9, 0.35);
        let a = evaluate_mode(&basis, &cfg, 0, z).unwrap();
        let b = evaluate_mode(&basis, &cfg, 0, z.conj()).unwrap();
        assert_relative_eq!(a.minus.norm(), b.minus.norm(), max_relative = 1e-10);
    }

    #[test]
    fn evaluate_mode_errors() {
        let cfg = triangle_half();
        let basis = dirac_kernel(&cfg, PI).unwrap();
        assert!(matches!(
            evaluate_mode(&basis, &cfg, 0, c(1.0, 0.0)),
            Err(Error::SingularPoint { .. })
        ));
        assert!(evaluate_mode(&basis, &cfg, 5, c(0.2, 0.2)).is_err());
    }

    proptest! {
        #[test]
        fn lower_int_matches_piecewise_definition(x in -10.0f64..10.0) {
            let got = lower_int(x);
            let nearest = x.round();
            let expected = if (x - nearest).abs() <= INT_TOL {
                if nearest > 1.0 { nearest as i64 - 1 } else { 0 }
            } else if x > 1.0 {
                x.floor() as i64
            } else {
                0
            };
            prop_assert_eq!(got, expected);
        }

        #[test]
        fn b_weights_always_positive(a1 in 0.05f64..0.95, a2 in 0.05f64..0.95,
                                     x in 0.5f64..3.0) {
            let cfg = FieldConfig::new(
                vec![],
                vec![
                    Solenoid { center: c(0.0, 0.0), alpha: a1 },
                    Solenoid { center: c(x, 0.7), alpha: a2 },
                ],
            ).unwrap();
            for b in b_weights(&cfg).unwrap() {
                prop_assert!(b > 0.0);
            }
        }
    }
}
