//! Gamma function on real non-pole arguments, the constant `sigma(a) = Gamma(a) 2^a`,
//! and the modified Bessel function `K_nu` for fractional order `nu` in (0, 1).

use std::cell::RefCell;
use std::collections::HashMap;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quad::composite_gl;

/// Minimum admissible distance from a non-positive integer for gamma arguments.
pub const POLE_MARGIN: f64 = 1e-9;

// Lanczos coefficients, g = 7, n = 9 (GSL set).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.5203681218851,
    -1259.1392167224028,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507343278686905,
    -0.13857109526572012,
    9.984_369_578_019_572e-6,
    1.5056327351493116e-7,
];

fn lanczos_gamma(x: f64) -> f64 {
    // valid for x >= 0.5
    let x = x - 1.0;
    let mut acc = LANCZOS_P[0];
    for (i, p) in LANCZOS_P.iter().enumerate().skip(1) {
        acc += p / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
}

/// Distance from `x` to the nearest pole of Gamma (the non-positive integers).
fn pole_distance(x: f64) -> f64 {
    if x > 0.5 {
        return f64::INFINITY;
    }
    (x - x.round()).abs()
}

/// Gamma function for real arguments away from poles.
///
/// Uses the Lanczos approximation for `x >= 0.5` and the reflection formula
/// `Gamma(x) = pi / (sin(pi x) Gamma(1 - x))` below, so accuracy is uniform
/// on negative non-integer arguments.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("gamma argument {x} not finite")));
    }
    if pole_distance(x) < POLE_MARGIN {
        return Err(Error::Pole {
            x,
            margin: POLE_MARGIN,
        });
    }
    if x < 0.5 {
        Ok(PI / ((PI * x).sin() * lanczos_gamma(1.0 - x)))
    } else {
        Ok(lanczos_gamma(x))
    }
}

/// `sigma(a) = Gamma(a) * 2^a`, the constant entering every boundary functional.
pub fn sigma(alpha: f64) -> Result<f64> {
    Ok(gamma(alpha)? * alpha.exp2())
}

thread_local! {
    static BESSEL_CACHE: RefCell<HashMap<(u64, u64), f64>> = RefCell::new(HashMap::new());
}

const BESSEL_CACHE_CAP: usize = 1 << 16;

/// Modified Bessel function `K_nu(r)` for `0 < nu < 1`, `r > 0`.
///
/// Computed from the integral representation
/// `K_nu(r) = int_0^inf exp(-r cosh t) cosh(nu t) dt`,
/// truncated where the integrand has decayed below 1e-18 relative to its
/// peak value `exp(-r)`, with composite 16-point Gauss-Legendre panels.
pub fn bessel_k(nu: f64, r: f64) -> Result<f64> {
    if !(nu > 0.0 && nu < 1.0) {
        return Err(Error::Domain(format!("bessel_k order {nu} outside (0, 1)")));
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Domain(format!("bessel_k argument {r} not positive")));
    }
    let key = (nu.to_bits(), r.to_bits());
    if let Some(v) = BESSEL_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return Ok(v);
    }
    let value = bessel_k_raw(nu, r);
    BESSEL_CACHE.with(|c| {
        let mut map = c.borrow_mut();
        if map.len() >= BESSEL_CACHE_CAP {
            map.clear();
        }
        map.insert(key, value);
    });
    Ok(value)
}

fn bessel_k_raw(nu: f64, r: f64) -> f64 {
    // e^{-r(cosh t - 1)} < 1e-18  <=>  r(cosh t - 1) > 18 ln 10
    let cut = 18.0 * std::f64::consts::LN_10;
    let t_max = (1.0 + cut / r).acosh();
    composite_gl(|t| (-r * t.cosh()).exp() * (nu * t).cosh(), 0.0, t_max, 0.5)
}
