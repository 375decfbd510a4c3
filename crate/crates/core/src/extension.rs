//! Self-adjoint extension machinery: deficiency elements, Krein-parameterized
//! domain samples, boundary-value functionals, domain-membership predicates
//! for the Dirac and Pauli realizations, spin-flip maps, and classification
//! of extensions against the Maximal and EV Pauli operators.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::Solenoid;
use crate::specfun::{bessel_k, sigma};

/// Relative residual below which a domain condition is declared satisfied.
pub const PREDICATE_TOL: f64 = 1e-6;

/// Angles are matched to the special values {0, pi/2, pi, 3pi/2} within this.
pub const ANGLE_TOL: f64 = 1e-12;

/// Outermost extraction radius; the ladder is `r0 * 4^{-k}`, k = 0..5.
const EXTRACT_R0: f64 = 1e-2;
const EXTRACT_LEVELS: usize = 6;
/// Angular nodes for the trapezoid rule (spectrally accurate on periodic data).
const EXTRACT_NODES: usize = 256;
/// Fit-residual gate, relative to the leading coefficient.
const EXTRACT_RESIDUAL_GATE: f64 = 1e-4;

/// One extension angle per solenoid, each in `[0, 2 pi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionSpec {
    taus: Vec<f64>,
}

impl ExtensionSpec {
    pub fn new(taus: Vec<f64>) -> Result<Self> {
        for &t in &taus {
            if !(0.0..2.0 * std::f64::consts::PI).contains(&t) {
                return Err(Error::InvalidExtension(format!(
                    "tau = {t} outside [0, 2 pi)"
                )));
            }
        }
        Ok(Self { taus })
    }

    pub fn uniform(tau: f64, n: usize) -> Result<Self> {
        Self::new(vec![tau; n])
    }

    pub fn taus(&self) -> &[f64] {
        &self.taus
    }

    pub fn len(&self) -> usize {
        self.taus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taus.is_empty()
    }

    /// The common angle if all entries agree exactly.
    pub fn uniform_tau(&self) -> Option<f64> {
        let first = *self.taus.first()?;
        self.taus.iter().all(|&t| t == first).then_some(first)
    }
}

/// Pointwise sample of a spinor `(psi_+, psi_-)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorSample {
    pub plus: Complex64,
    pub minus: Complex64,
}

impl SpinorSample {
    pub fn new(plus: Complex64, minus: Complex64) -> Self {
        Self { plus, minus }
    }

    pub fn zero() -> Self {
        Self::new(Complex64::ZERO, Complex64::ZERO)
    }

    /// `|psi_+| + |psi_-|`, the scale used for relative residuals.
    pub fn amplitude(&self) -> f64 {
        self.plus.norm() + self.minus.norm()
    }
}

/// Sign selecting the deficiency space `ker(D* -+ i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `e^{i tau}`, exact at the four quarter-turn angles.
///
/// The tau = 0 and tau = pi branches must cancel exactly in the Krein
/// combination, so these values are pinned rather than left to `cis`.
pub fn unit_phase(tau: f64) -> Complex64 {
    use std::f64::consts::{FRAC_PI_2, PI};
    if tau.abs() < ANGLE_TOL {
        Complex64::new(1.0, 0.0)
    } else if (tau - PI).abs() < ANGLE_TOL {
        Complex64::new(-1.0, 0.0)
    } else if (tau - FRAC_PI_2).abs() < ANGLE_TOL {
        Complex64::new(0.0, 1.0)
    } else if (tau - 3.0 * FRAC_PI_2).abs() < ANGLE_TOL {
        Complex64::new(0.0, -1.0)
    } else {
        Complex64::from_polar(1.0, tau)
    }
}

/// Deficiency element for one solenoid of intensity `alpha` at the origin:
/// `xi_{+-}(r e^{i theta}) = (K_{1-alpha}(r) e^{-i theta}, +- K_alpha(r))`.
pub fn deficiency_element(sign: Sign, alpha: f64, z: Complex64) -> Result<SpinorSample> {
    let (r, theta) = z.to_polar();
    if r == 0.0 {
        return Err(Error::Domain(
            "deficiency element undefined at z = 0".into(),
        ));
    }
    let plus = bessel_k(1.0 - alpha, r)? * Complex64::from_polar(1.0, -theta);
    let k_a = bessel_k(alpha, r)?;
    let minus = match sign {
        Sign::Plus => Complex64::new(k_a, 0.0),
        Sign::Minus => Complex64::new(-k_a, 0.0),
    };
    Ok(SpinorSample::new(plus, minus))
}

/// Singular representative `mu (xi_+ + e^{i tau} xi_-)` of a Krein domain
/// element (the regular part `psi_0` set to zero).
pub fn krein_sample(alpha: f64, tau: f64, mu: Complex64, z: Complex64) -> Result<SpinorSample> {
    let (r, theta) = z.to_polar();
    if r == 0.0 {
        return Err(Error::Domain("krein sample undefined at z = 0".into()));
    }
    let e = unit_phase(tau);
    let plus = mu * (1.0 + e) * bessel_k(1.0 - alpha, r)? * Complex64::from_polar(1.0, -theta);
    let minus = mu * (1.0 - e) * bessel_k(alpha, r)?;
    Ok(SpinorSample::new(plus, minus))
}

/// Krein sample for the sign-reversed field `-B`, whose normalized intensity
/// is `beta = 1 - alpha`. The angular weights sit on the opposite components:
/// `mu ((1 + e^{i tau'}) K_{1-beta}(r), (1 - e^{i tau'}) K_beta(r) e^{+i theta})`.
pub fn krein_sample_reversed(
    beta: f64,
    tau_prime: f64,
    mu: Complex64,
    z: Complex64,
) -> Result<SpinorSample> {
    let (r, theta) = z.to_polar();
    if r == 0.0 {
        return Err(Error::Domain("krein sample undefined at z = 0".into()));
    }
    let e = unit_phase(tau_prime);
    let plus = mu * (1.0 + e) * bessel_k(1.0 - beta, r)?;
    let minus = mu * (1.0 - e) * bessel_k(beta, r)? * Complex64::from_polar(1.0, theta);
    Ok(SpinorSample::new(plus, minus))
}

/// The anti-unitary spin-flip `V: (psi_+, psi_-) -> (conj psi_-, conj psi_+)`.
pub fn spin_flip_v(s: SpinorSample) -> SpinorSample {
    SpinorSample::new(s.minus.conj(), s.plus.conj())
}

/// The component swap `W` composed with a gauge phase on the spin-up slot:
/// `(psi_+, psi_-) -> (gauge * psi_-, psi_+)`.
pub fn spin_flip_w(s: SpinorSample, gauge: Complex64) -> SpinorSample {
    SpinorSample::new(gauge * s.minus, s.plus)
}

/// The pointwise gauge factor `e^{-2 i sum_j theta_j}` with principal-branch
/// angles around the given centers.
pub fn gauge_phase(centers: &[Complex64], z: Complex64) -> Complex64 {
    let mut phase = Complex64::new(1.0, 0.0);
    for &c in centers {
        let u = (z - c) / (z - c).norm();
        let f = u.conj();
        phase *= f * f;
    }
    phase
}

/// A boundary coefficient together with its extraction error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coeff {
    pub value: Complex64,
    pub error: f64,
}

impl Coeff {
    pub fn exact(value: Complex64) -> Self {
        Self { value, error: 0.0 }
    }
}

/// The four boundary functionals of one spinor component at one solenoid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComponentCoeffs {
    /// coefficient of `r^{-alpha}` in the angular mean
    pub c_minus_alpha: Coeff,
    /// coefficient of `r^{alpha}` after subtracting the leading term
    pub c_alpha: Coeff,
    /// coefficient of `r^{alpha-1}` in the `e^{i theta}`-weighted mean
    pub c_alpha_minus_1: Coeff,
    /// coefficient of `r^{1-alpha}` after subtracting the leading term
    pub c_1_minus_alpha: Coeff,
}

/// Boundary data of a spinor at a single solenoid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryData {
    pub alpha: f64,
    pub plus: ComponentCoeffs,
    pub minus: ComponentCoeffs,
}

/// Least-squares fit of `vals(r_k) ~ sum_i coeff_i r_k^{exponents_i}`.
///
/// Columns are normalized before the SVD solve; returns the coefficients,
/// their sensitivity-based error estimates, and the rms misfit.
fn power_law_fit(
    radii: &[f64],
    vals: &[Complex64],
    exponents: &[f64],
) -> (Vec<Complex64>, Vec<f64>, f64) {
    let m = radii.len();
    let n = exponents.len();
    let mut a = DMatrix::<Complex64>::zeros(m, n);
    let mut col_norms = vec![0.0f64; n];
    for (j, &e) in exponents.iter().enumerate() {
        for (i, &r) in radii.iter().enumerate() {
            a[(i, j)] = Complex64::new(r.powf(e), 0.0);
        }
        let norm = a.column(j).norm();
        col_norms[j] = norm;
        for i in 0..m {
            a[(i, j)] /= Complex64::new(norm, 0.0);
        }
    }
    let b = DVector::<Complex64>::from_column_slice(vals);
    let svd = a.clone().svd(true, true);
    let x = svd
        .solve(&b, 1e-14)
        .expect("svd solve on a finite system cannot fail");
    let resid = (&a * &x - &b).norm() / (m as f64).sqrt();

    // error estimate: ||residual|| * row norms of the pseudo-inverse
    let v_t = svd.v_t.as_ref().expect("v_t requested");
    let sv = &svd.singular_values;
    let smax = sv.iter().cloned().fold(0.0f64, f64::max);
    let mut errs = vec![0.0f64; n];
    let mut coeffs = vec![Complex64::ZERO; n];
    for i in 0..n {
        let mut row_sq = 0.0;
        for k in 0..sv.len() {
            if sv[k] > 1e-14 * smax {
                row_sq += v_t[(k, i)].norm_sqr() / (sv[k] * sv[k]);
            }
        }
        errs[i] = resid * (m as f64).sqrt() * row_sq.sqrt() / col_norms[i];
        coeffs[i] = x[i] / Complex64::new(col_norms[i], 0.0);
    }
    (coeffs, errs, resid)
}

/// Extracts the eight boundary coefficients of a spinor field at a solenoid.
///
/// Angular Fourier coefficients `a_l(r) = (1/2 pi) int psi(z_j + r e^{i t}) e^{i l t} dt`
/// for `l in {0, 1}` are computed by the trapezoid rule at the radius ladder
/// `r_k = 1e-2 * 4^{-k}`, then fitted against the three-term exponent ladders
/// `{-a, a, 2-a}` (for `l = 0`) and `{a-1, 1-a, 1+a}` (for `l = 1`). The third
/// column absorbs the first Bessel-series correction so the returned leading
/// and subtracted coefficients are clean.
pub fn extract_boundary_data<F>(field: F, solenoid: &Solenoid) -> Result<BoundaryData>
where
    F: Fn(Complex64) -> SpinorSample,
{
    let alpha = solenoid.alpha;
    let radii: Vec<f64> = (0..EXTRACT_LEVELS)
        .map(|k| EXTRACT_R0 * 0.25f64.powi(k as i32))
        .collect();

    let mut a0_plus = Vec::with_capacity(radii.len());
    let mut a0_minus = Vec::with_capacity(radii.len());
    let mut a1_plus = Vec::with_capacity(radii.len());
    let mut a1_minus = Vec::with_capacity(radii.len());
    let mut amp_max = 0.0f64;
    for &r in &radii {
        let mut s0p = Complex64::ZERO;
        let mut s0m = Complex64::ZERO;
        let mut s1p = Complex64::ZERO;
        let mut s1m = Complex64::ZERO;
        for m in 0..EXTRACT_NODES {
            let theta = 2.0 * std::f64::consts::PI * m as f64 / EXTRACT_NODES as f64;
            let w = Complex64::from_polar(1.0, theta);
            let sample = field(solenoid.center + r * w);
            amp_max = amp_max.max(sample.amplitude());
            s0p += sample.plus;
            s0m += sample.minus;
            s1p += sample.plus * w;
            s1m += sample.minus * w;
        }
        let scale = 1.0 / EXTRACT_NODES as f64;
        a0_plus.push(s0p * scale);
        a0_minus.push(s0m * scale);
        a1_plus.push(s1p * scale);
        a1_minus.push(s1m * scale);
    }
    // roundoff floor of the trapezoid sums; components that are analytically
    // zero still carry cancellation noise at this scale
    let noise_floor = 1e-13 * amp_max;

    let exps0 = [-alpha, alpha, 2.0 - alpha];
    let exps1 = [alpha - 1.0, 1.0 - alpha, 1.0 + alpha];

    let fit_pair = |vals: &[Complex64], exps: &[f64]| -> Result<(Coeff, Coeff)> {
        let (coeffs, errs, resid) = power_law_fit(&radii, vals, exps);
        let limit = EXTRACT_RESIDUAL_GATE * (coeffs[0].norm() + 1e-30) + noise_floor;
        if resid > limit {
            return Err(Error::Extraction {
                residual: resid,
                limit,
            });
        }
        Ok((
            Coeff {
                value: coeffs[0],
                error: errs[0].max(resid),
            },
            Coeff {
                value: coeffs[1],
                error: errs[1].max(resid),
            },
        ))
    };

    let (c_ma_p, c_a_p) = fit_pair(&a0_plus, &exps0)?;
    let (c_ma_m, c_a_m) = fit_pair(&a0_minus, &exps0)?;
    let (c_am1_p, c_1ma_p) = fit_pair(&a1_plus, &exps1)?;
    let (c_am1_m, c_1ma_m) = fit_pair(&a1_minus, &exps1)?;

    Ok(BoundaryData {
        alpha,
        plus: ComponentCoeffs {
            c_minus_alpha: c_ma_p,
            c_alpha: c_a_p,
            c_alpha_minus_1: c_am1_p,
            c_1_minus_alpha: c_1ma_p,
        },
        minus: ComponentCoeffs {
            c_minus_alpha: c_ma_m,
            c_alpha: c_a_m,
            c_alpha_minus_1: c_am1_m,
            c_1_minus_alpha: c_1ma_m,
        },
    })
}

/// Outcome of a domain-membership predicate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionCheck {
    pub holds: bool,
    /// largest normalized residual over the participating equations
    pub residual: f64,
}

/// Residual of the cross-multiplied ratio condition
/// `x * sx * (1 - e^{i tau}) = y * sy * (1 + e^{i tau})`,
/// normalized by the coefficient scale so it is total in `tau`.
fn cross_residual(x: Complex64, sx: f64, y: Complex64, sy: f64, tau: f64) -> f64 {
    let e = unit_phase(tau);
    let lhs = x * sx * (1.0 - e);
    let rhs = y * sy * (1.0 + e);
    let scale = (x.norm().max(y.norm())) * (sx.abs() + sy.abs()) + 1e-30;
    (lhs - rhs).norm() / scale
}

/// Checks the Dirac domain condition at one solenoid: the cross-multiplied
/// ratio law between `c^+_{alpha-1}` and `c^-_{-alpha}`, plus the two
/// vanishing conditions `c^+_{-alpha} = c^-_{alpha-1} = 0`.
pub fn check_dirac_condition(bd: &BoundaryData, tau: f64) -> Result<ConditionCheck> {
    let a = bd.alpha;
    let s_a = sigma(a)?;
    let s_1ma = sigma(1.0 - a)?;
    let res_eq = cross_residual(
        bd.plus.c_alpha_minus_1.value,
        s_a,
        bd.minus.c_minus_alpha.value,
        s_1ma,
        tau,
    );
    let coeff_scale = bd
        .plus
        .c_alpha_minus_1
        .value
        .norm()
        .max(bd.minus.c_minus_alpha.value.norm())
        .max(bd.plus.c_minus_alpha.value.norm())
        .max(bd.minus.c_alpha_minus_1.value.norm())
        + 1e-30;
    let res_zero = bd
        .plus
        .c_minus_alpha
        .value
        .norm()
        .max(bd.minus.c_alpha_minus_1.value.norm())
        / coeff_scale;
    let residual = res_eq.max(res_zero);
    Ok(ConditionCheck {
        holds: residual < PREDICATE_TOL,
        residual,
    })
}

/// Checks the Pauli domain conditions at one solenoid: the Dirac ratio law,
/// the second ratio law between `c^-_{alpha}` and `c^+_{1-alpha}`, and the
/// two vanishing conditions.
pub fn check_pauli_condition(bd: &BoundaryData, tau: f64) -> Result<ConditionCheck> {
    let a = bd.alpha;
    let dirac = check_dirac_condition(bd, tau)?;
    let s_am1 = sigma(a - 1.0)?;
    let s_ma = sigma(-a)?;
    let res_second = cross_residual(
        bd.minus.c_alpha.value,
        s_am1,
        bd.plus.c_1_minus_alpha.value,
        s_ma,
        tau,
    );
    let residual = dirac.residual.max(res_second);
    Ok(ConditionCheck {
        holds: residual < PREDICATE_TOL,
        residual,
    })
}

/// `true` iff `tau'_j + tau_j` is `pi` or `3 pi` for every `j` (the V map
/// intertwines the extensions for `-B` and `B`).
pub fn v_equivalent(tau_prime: &ExtensionSpec, tau: &ExtensionSpec) -> bool {
    use std::f64::consts::PI;
    tau_prime.len() == tau.len()
        && tau_prime.taus().iter().zip(tau.taus()).all(|(&tp, &t)| {
            let s = tp + t;
            (s - PI).abs() < ANGLE_TOL || (s - 3.0 * PI).abs() < ANGLE_TOL
        })
}

/// `true` iff `|tau'_j - tau_j| = pi` for every `j` (the gauged W map
/// intertwines the extensions for `-B` and `B`).
pub fn w_equivalent(tau_prime: &ExtensionSpec, tau: &ExtensionSpec) -> bool {
    use std::f64::consts::PI;
    tau_prime.len() == tau.len()
        && tau_prime
            .taus()
            .iter()
            .zip(tau.taus())
            .all(|(&tp, &t)| ((tp - t).abs() - PI).abs() < ANGLE_TOL)
}

/// Per-solenoid comparison against the EV boundary pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SolenoidClass {
    /// `tau_j = pi` with `alpha_j < 1/2`, or `tau_j = 0` with `alpha_j >= 1/2`
    EvMatch,
    /// any other squared-Dirac extension
    GenericSquaredDirac,
}

/// Classification of a full extension vector against Table-style patterns.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub per_solenoid: Vec<SolenoidClass>,
    /// the EV operator is the square of the Dirac extension with this tau vector
    pub ev_is_square_of_this_dirac: bool,
    /// the Maximal operator is not the square of any Dirac extension;
    /// reported as a global fact (its pattern is unreachable for every tau)
    pub max_match_impossible: bool,
}

/// The tau pattern for which the EV Pauli operator is a squared Dirac
/// operator under the `(0, 1)` intensity normalization.
pub fn ev_tau_pattern(alphas: &[f64]) -> Vec<f64> {
    alphas
        .iter()
        .map(|&a| if a < 0.5 { std::f64::consts::PI } else { 0.0 })
        .collect()
}

/// Classifies each solenoid's `(alpha_j, tau_j)` against the EV pattern.
pub fn classify_extension(alphas: &[f64], taus: &ExtensionSpec) -> Result<Classification> {
    use std::f64::consts::PI;
    if alphas.len() != taus.len() {
        return Err(Error::InvalidExtension(format!(
            "{} intensities vs {} extension angles",
            alphas.len(),
            taus.len()
        )));
    }
    let per_solenoid: Vec<SolenoidClass> = alphas
        .iter()
        .zip(taus.taus())
        .map(|(&a, &t)| {
            let is_pi = (t - PI).abs() < ANGLE_TOL;
            let is_zero = t.abs() < ANGLE_TOL;
            if (is_pi && a < 0.5) || (is_zero && a >= 0.5) {
                SolenoidClass::EvMatch
            } else {
                SolenoidClass::GenericSquaredDirac
            }
        })
        .collect();
    let ev = per_solenoid.iter().all(|c| *c == SolenoidClass::EvMatch);
    Ok(Classification {
        per_solenoid,
        ev_is_square_of_this_dirac: ev,
        max_match_impossible: true,
    })
}

/// Boundary data of a generic Pauli-domain element, synthesized from the
/// closed-form coefficient expressions in terms of `(mu, nu, tau)`.
pub fn pauli_domain_boundary_data(
    alpha: f64,
    tau: f64,
    mu: Complex64,
    nu: Complex64,
) -> Result<BoundaryData> {
    let e = unit_phase(tau);
    let i = Complex64::I;
    let s_a = sigma(alpha)?;
    let s_1ma = sigma(1.0 - alpha)?;
    let s_am1 = sigma(alpha - 1.0)?;
    let s_ma = sigma(-alpha)?;
    Ok(BoundaryData {
        alpha,
        plus: ComponentCoeffs {
            c_minus_alpha: Coeff::exact(Complex64::ZERO),
            // free coefficient: unconstrained by the domain conditions
            c_alpha: Coeff::exact(Complex64::new(0.37, 0.21)),
            c_alpha_minus_1: Coeff::exact(mu / 2.0 * (1.0 + e) * s_1ma),
            c_1_minus_alpha: Coeff::exact(-i * nu / 2.0 * (1.0 - e) * s_am1),
        },
        minus: ComponentCoeffs {
            c_minus_alpha: Coeff::exact(mu / 2.0 * (1.0 - e) * s_a),
            c_alpha: Coeff::exact(-i * nu / 2.0 * (1.0 + e) * s_ma),
            c_alpha_minus_1: Coeff::exact(Complex64::ZERO),
            c_1_minus_alpha: Coeff::exact(Complex64::new(-0.11, 0.53)),
        },
    })
}

/// Boundary data matching the EV Pauli operator's pattern at one solenoid.
pub fn ev_table_boundary_data(alpha: f64) -> BoundaryData {
    let zero = Coeff::exact(Complex64::ZERO);
    let nz1 = Coeff::exact(Complex64::new(1.0, 0.4));
    let nz2 = Coeff::exact(Complex64::new(-0.6, 0.9));
    let nz3 = Coeff::exact(Complex64::new(0.8, -0.1));
    let nz4 = Coeff::exact(Complex64::new(0.3, 0.7));
    if alpha < 0.5 {
        BoundaryData {
            alpha,
            plus: ComponentCoeffs {
                c_minus_alpha: zero,
                c_alpha: nz1,
                c_alpha_minus_1: zero,
                c_1_minus_alpha: nz3,
            },
            minus: ComponentCoeffs {
                c_minus_alpha: nz2,
                c_alpha: zero,
                c_alpha_minus_1: zero,
                c_1_minus_alpha: nz4,
            },
        }
    } else {
        BoundaryData {
            alpha,
            plus: ComponentCoeffs {
                c_minus_alpha: zero,
                c_alpha: nz1,
                c_alpha_minus_1: nz3,
                c_1_minus_alpha: zero,
            },
            minus: ComponentCoeffs {
                c_minus_alpha: zero,
                c_alpha: nz2,
                c_alpha_minus_1: zero,
                c_1_minus_alpha: nz4,
            },
        }
    }
}

/// Two independent boundary-data samples from the Maximal Pauli operator's
/// domain pattern. No single `tau` satisfies the squared-Dirac conditions on
/// both, which is the Table's "not a square" row pattern made testable.
pub fn max_table_boundary_data(alpha: f64) -> [BoundaryData; 2] {
    let zero = Coeff::exact(Complex64::ZERO);
    let nz = Coeff::exact(Complex64::new(0.9, -0.2));
    let free = Coeff::exact(Complex64::new(0.5, 0.5));
    let base = ComponentCoeffs {
        c_minus_alpha: zero,
        c_alpha: free,
        c_alpha_minus_1: zero,
        c_1_minus_alpha: zero,
    };
    let sample_a = BoundaryData {
        alpha,
        plus: ComponentCoeffs {
            c_alpha_minus_1: nz,
            ..base
        },
        minus: ComponentCoeffs {
            c_1_minus_alpha: free,
            ..base
        },
    };
    let sample_b = BoundaryData {
        alpha,
        plus: base,
        minus: ComponentCoeffs {
            c_minus_alpha: nz,
            c_1_minus_alpha: free,
            ..base
        },
    };
    [sample_a, sample_b]
}
