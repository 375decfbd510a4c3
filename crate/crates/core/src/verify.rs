//! Independent numerical oracles: finite-difference application of the Dirac
//! actions, annihilation residuals, L2-membership quadrature, SVD null
//! spaces, and the closed-form check of the boundary functionals.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::extension::{extract_boundary_data, krein_sample, unit_phase, SpinorSample};
use crate::field::{FieldConfig, Solenoid};
use crate::kernelsolver::{evaluate_mode, ZeroModeBasis};
use crate::specfun::sigma;

/// Admissible finite-difference steps.
pub const STEP_RANGE: (f64, f64) = (1e-6, 1e-1);
/// Default step for annihilation sweeps.
pub const DEFAULT_STEP: f64 = 1e-4;
/// Number of points in an annihilation sweep.
pub const TEST_POINTS: usize = 50;
/// Required clearance between test points and field features.
pub const FEATURE_CLEARANCE: f64 = 0.5;
/// Outer radius of the test annulus.
pub const TEST_RADIUS: f64 = 10.0;

/// Worst-case relative residual over a point sweep.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ResidualReport {
    pub max_relative_residual: f64,
    pub points_tested: usize,
    pub worst_point: Complex64,
}

/// Applies the Dirac action to a pointwise spinor evaluator at `z` by
/// 4th-order central differences of the conjugated products `psi_+ e^{-h}`
/// and `psi_- e^{+h}`, recombined through the Wirtinger derivatives.
/// Returns `(q_- psi_-, q_+ psi_+)`, ordered like the action matrix.
pub fn apply_dirac_action<F>(
    field: F,
    cfg: &FieldConfig,
    z: Complex64,
    step: f64,
) -> Result<SpinorSample>
where
    F: Fn(Complex64) -> SpinorSample,
{
    if !(STEP_RANGE.0..=STEP_RANGE.1).contains(&step) {
        return Err(Error::Step { step });
    }
    // products at a stencil point
    let products = |w: Complex64| -> Result<(Complex64, Complex64)> {
        let s = field(w);
        let h = cfg.potential(w)?;
        Ok((s.plus * (-h).exp(), s.minus * h.exp()))
    };
    // 4th-order central difference along direction `dir`
    let diff = |dir: Complex64| -> Result<(Complex64, Complex64)> {
        let (p2, m2) = (
            products(z + 2.0 * step * dir)?,
            products(z - 2.0 * step * dir)?,
        );
        let (p1, m1) = (products(z + step * dir)?, products(z - step * dir)?);
        let d = 1.0 / (12.0 * step);
        Ok((
            (-p2.0 + 8.0 * p1.0 - 8.0 * m1.0 + m2.0) * d,
            (-p2.1 + 8.0 * p1.1 - 8.0 * m1.1 + m2.1) * d,
        ))
    };
    let dx = diff(Complex64::new(1.0, 0.0))?;
    let dy = diff(Complex64::new(0.0, 1.0))?;
    let i = Complex64::I;
    // d/dzbar = (d/dx + i d/dy)/2 on psi_+ e^{-h}; d/dz = (d/dx - i d/dy)/2 on psi_- e^{h}
    let dzbar_plus = 0.5 * (dx.0 + i * dy.0);
    let dz_minus = 0.5 * (dx.1 - i * dy.1);
    let h = cfg.potential(z)?;
    let q_plus = -2.0 * i * h.exp() * dzbar_plus;
    let q_minus = -2.0 * i * (-h).exp() * dz_minus;
    Ok(SpinorSample::new(q_minus, q_plus))
}

/// Deterministic sunflower point set in the annulus around the features:
/// every point keeps `FEATURE_CLEARANCE` from solenoids and bump discs and
/// stays within `TEST_RADIUS` of the feature centroid.
pub fn annulus_test_points(cfg: &FieldConfig, count: usize, seed: u64) -> Result<Vec<Complex64>> {
    let mut center = Complex64::ZERO;
    let mut feature_count = 0usize;
    for s in cfg.solenoids() {
        center += s.center;
        feature_count += 1;
    }
    for b in cfg.bumps() {
        center += b.center;
        feature_count += 1;
    }
    if feature_count > 0 {
        center /= feature_count as f64;
    }
    let golden = 2.0 * std::f64::consts::PI * 0.38196601125010515;
    let phase = seed as f64 * 0.6180339887498949 * 2.0 * std::f64::consts::PI;
    let mut points = Vec::with_capacity(count);
    let max_candidates = 20_000;
    for i in 0..max_candidates {
        let frac = (i as f64 + 0.5) / 600.0;
        let radius = TEST_RADIUS * frac.fract().sqrt();
        let theta = i as f64 * golden + phase;
        let z = center + Complex64::from_polar(radius, theta);
        if cfg.feature_distance(z) >= FEATURE_CLEARANCE {
            points.push(z);
            if points.len() == count {
                return Ok(points);
            }
        }
    }
    Err(Error::Domain(format!(
        "could not place {count} test points clear of the field features"
    )))
}

fn residual_sweep<F>(
    evaluators: &[F],
    cfg: &FieldConfig,
    step: f64,
    seed: u64,
) -> Result<ResidualReport>
where
    F: Fn(Complex64) -> SpinorSample,
{
    if evaluators.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let points = annulus_test_points(cfg, TEST_POINTS, seed)?;
    let mut worst = 0.0f64;
    let mut worst_point = points[0];
    for eval in evaluators {
        for &z in &points {
            let out = apply_dirac_action(eval, cfg, z, step)?;
            let amp = eval(z).amplitude();
            let res = out.amplitude() / (amp + 1e-30);
            if res > worst {
                worst = res;
                worst_point = z;
            }
        }
    }
    Ok(ResidualReport {
        max_relative_residual: worst,
        points_tested: points.len(),
        worst_point,
    })
}

/// Finite-difference annihilation residual of every mode in the basis over
/// the shared 50-point sweep.
pub fn annihilation_residual(basis: &ZeroModeBasis, cfg: &FieldConfig) -> Result<ResidualReport> {
    annihilation_residual_seeded(basis, cfg, 0)
}

pub fn annihilation_residual_seeded(
    basis: &ZeroModeBasis,
    cfg: &FieldConfig,
    seed: u64,
) -> Result<ResidualReport> {
    if basis.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let evals: Vec<_> = (0..basis.count)
        .map(|i| {
            let basis = basis.clone();
            let cfg = cfg.clone();
            move |z: Complex64| evaluate_mode(&basis, &cfg, i, z).expect("points avoid features")
        })
        .collect();
    residual_sweep(&evals, cfg, DEFAULT_STEP, seed)
}

/// Sensitivity guard: perturbs each mode with a wrong-analyticity-type term
/// of relative size `epsilon` and reports the sweep residual, which must
/// come out large if the finite-difference oracle has any teeth.
///
/// Spin-up descriptors gain `epsilon * s * conj(z)`, spin-down ones
/// `epsilon * s * z`, where `s` is the coefficient scale of the mode; both
/// break the (anti-)analyticity that annihilation rests on.
pub fn annihilation_residual_corrupted(
    basis: &ZeroModeBasis,
    cfg: &FieldConfig,
    epsilon: f64,
) -> Result<ResidualReport> {
    if basis.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let mut evals: Vec<Box<dyn Fn(Complex64) -> SpinorSample>> = Vec::new();
    let n_plus = basis.plus_modes.len();
    for i in 0..basis.count {
        let basis_c = basis.clone();
        let cfg_c = cfg.clone();
        let scale = if i < n_plus {
            let m = &basis.plus_modes[i];
            m.residues
                .iter()
                .chain(m.poly.iter())
                .map(|c| c.norm())
                .fold(0.0f64, f64::max)
        } else {
            basis.minus_modes[i - n_plus]
                .coeffs
                .iter()
                .map(|c| c.norm())
                .fold(0.0f64, f64::max)
        };
        let is_plus = i < n_plus;
        evals.push(Box::new(move |z: Complex64| {
            let clean = evaluate_mode(&basis_c, &cfg_c, i, z).expect("points avoid features");
            let h = cfg_c.potential(z).expect("points avoid features");
            if is_plus {
                let bad = epsilon * scale * z.conj() * h.exp();
                SpinorSample::new(clean.plus + bad, clean.minus)
            } else {
                let bad = epsilon * scale * z * (-h).exp();
                SpinorSample::new(clean.plus, clean.minus + bad)
            }
        }));
    }
    residual_sweep(&evals, cfg, DEFAULT_STEP, 0)
}

/// Inner-ring verdict at one solenoid.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct InnerReport {
    pub center: Complex64,
    pub fitted_exponent: f64,
    pub converged: bool,
}

/// Exponent-based L2 verdict: ring averages of `|psi|^2` near each solenoid
/// and at large radius, with membership decided by the fitted exponents.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct QuadratureReport {
    pub inner: Vec<InnerReport>,
    pub outer_exponent: f64,
    pub is_l2: bool,
}

fn ring_average<F>(eval: &F, center: Complex64, r: f64, nodes: usize) -> f64
where
    F: Fn(Complex64) -> SpinorSample,
{
    let mut acc = 0.0;
    for m in 0..nodes {
        let theta = 2.0 * std::f64::consts::PI * m as f64 / nodes as f64;
        let s = eval(center + Complex64::from_polar(r, theta));
        acc += s.plus.norm_sqr() + s.minus.norm_sqr();
    }
    acc / nodes as f64
}

/// Slope of `ln y` against `ln x` by least squares.
fn log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.max(1e-300).ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in lx.iter().zip(ly.iter()) {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    num / den
}

/// Checks square-integrability of a spinor evaluator against the field:
/// near each solenoid the ring-averaged `|psi|^2` must behave like `r^p`
/// with `p > -2`; at infinity (rings centered at the flux centroid, with a
/// `1/R` nuisance term absorbing the residual multipole drift) the fitted
/// slope must be below `-2`.
pub fn l2_check<F>(eval: F, cfg: &FieldConfig) -> QuadratureReport
where
    F: Fn(Complex64) -> SpinorSample,
{
    // inner rings: 10 log-spaced radii over [1e-6, 1e-1], slope fitted on
    // the local portion r <= 1e-2
    let radii: Vec<f64> = (0..10)
        .map(|k| 10f64.powf(-6.0 + 5.0 * k as f64 / 9.0))
        .collect();
    let fit_count = radii.iter().filter(|&&r| r <= 1.01e-2).count();
    let mut inner = Vec::new();
    for s in cfg.solenoids() {
        let avgs: Vec<f64> = radii
            .iter()
            .map(|&r| ring_average(&eval, s.center, r, 64))
            .collect();
        let p = log_slope(&radii[..fit_count], &avgs[..fit_count]);
        inner.push(InnerReport {
            center: s.center,
            fitted_exponent: p,
            converged: p > -2.0,
        });
    }

    // outer rings at R in {10, 20, 40, 80} around the flux centroid
    let center = cfg.flux_centroid();
    let rs = [10.0, 20.0, 40.0, 80.0];
    let avgs: Vec<f64> = rs
        .iter()
        .map(|&r| ring_average(&eval, center, r, 128).max(1e-300))
        .collect();
    // ln avg = p ln R + c + a / R
    let mut a = DMatrix::<f64>::zeros(4, 3);
    let mut b = DVector::<f64>::zeros(4);
    for (i, &r) in rs.iter().enumerate() {
        a[(i, 0)] = r.ln();
        a[(i, 1)] = 1.0;
        a[(i, 2)] = 1.0 / r;
        b[i] = avgs[i].ln();
    }
    let sol = a.svd(true, true).solve(&b, 1e-14).expect("4x3 lsq");
    let outer_exponent = sol[0];

    let is_l2 = inner.iter().all(|r| r.converged) && outer_exponent < -2.0;
    QuadratureReport {
        inner,
        outer_exponent,
        is_l2,
    }
}

/// SVD null space with a relative threshold; returns the basis (descending
/// singular value order) and the smallest singular value of the matrix.
pub fn null_space(matrix: &DMatrix<Complex64>, rel_tol: f64) -> (Vec<DVector<Complex64>>, f64) {
    let (rows, cols) = matrix.shape();
    // a thin SVD of a wide matrix misses the structural null directions;
    // padding with zero rows makes V square without changing the values
    let work = if rows < cols {
        let mut padded = DMatrix::<Complex64>::zeros(cols, cols);
        padded.view_mut((0, 0), (rows, cols)).copy_from(matrix);
        padded
    } else {
        matrix.clone()
    };
    let svd = work.svd(false, true);
    let v_t = svd.v_t.expect("v_t requested");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| {
        svd.singular_values[j]
            .partial_cmp(&svd.singular_values[i])
            .unwrap()
    });
    let smax = svd.singular_values[order[0]];
    // smallest singular value of the original matrix (padding appends zeros)
    let true_count = rows.min(cols);
    let smin = svd.singular_values[order[true_count - 1]];

    let mut basis = Vec::new();
    if smax == 0.0 {
        for i in 0..cols {
            let mut v = DVector::<Complex64>::zeros(cols);
            v[i] = Complex64::new(1.0, 0.0);
            basis.push(v);
        }
        return (basis, 0.0);
    }
    for &i in &order {
        if svd.singular_values[i] < rel_tol * smax {
            basis.push(v_t.row(i).conjugate().transpose());
        }
    }
    (basis, smin)
}

/// Comparison of extracted boundary data against the closed forms of the
/// Krein sample's four leading coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalOracleReport {
    /// deviations of (c+_{-a}, c-_{-a}, c+_{a-1}, c-_{a-1})
    pub deviations: [f64; 4],
    pub max_relative_deviation: f64,
}

/// Extracts boundary data from the Krein sample and compares all four
/// leading coefficients with their closed forms.
pub fn functional_oracle(alpha: f64, tau: f64, mu: Complex64) -> Result<FunctionalOracleReport> {
    let solenoid = Solenoid {
        center: Complex64::ZERO,
        alpha,
    };
    let bd = extract_boundary_data(
        |z| krein_sample(alpha, tau, mu, z).expect("extraction stays off the center"),
        &solenoid,
    )?;
    let e = unit_phase(tau);
    let closed = [
        Complex64::ZERO,
        mu / 2.0 * (1.0 - e) * sigma(alpha)?,
        mu / 2.0 * (1.0 + e) * sigma(1.0 - alpha)?,
        Complex64::ZERO,
    ];
    let extracted = [
        bd.plus.c_minus_alpha.value,
        bd.minus.c_minus_alpha.value,
        bd.plus.c_alpha_minus_1.value,
        bd.minus.c_alpha_minus_1.value,
    ];
    let scale = closed.iter().map(|c| c.norm()).fold(0.0f64, f64::max) + 1e-30;
    let mut deviations = [0.0f64; 4];
    for k in 0..4 {
        let denom = if closed[k].norm() > 0.0 {
            closed[k].norm()
        } else {
            scale
        };
        deviations[k] = (extracted[k] - closed[k]).norm() / denom;
    }
    Ok(FunctionalOracleReport {
        deviations,
        max_relative_deviation: deviations.iter().cloned().fold(0.0, f64::max),
    })
}
