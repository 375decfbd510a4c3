//! Small fixed-order Gauss-Legendre quadrature helpers used by the special
//! function and potential evaluations.

/// 16-point Gauss-Legendre nodes on (-1, 1), positive half (symmetric).
const GL16_X: [f64; 8] = [
    0.09501250983763745,
    0.281_603_550_779_258_9,
    0.45801677765722737,
    0.617_876_244_402_643_8,
    0.755_404_408_355_003,
    0.865_631_202_387_831_8,
    0.944_575_023_073_232_6,
    0.989_400_934_991_649_9,
];

const GL16_W: [f64; 8] = [
    0.18945061045506859,
    0.182_603_415_044_923_6,
    0.16915651939500262,
    0.14959598881657676,
    0.12462897125553403,
    0.09515851168249259,
    0.06225352393864771,
    0.02715245941175404,
];

/// Integrates `f` over `[a, b]` with a single 16-point Gauss-Legendre rule.
pub(crate) fn gl16<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for i in 0..8 {
        let dx = half * GL16_X[i];
        sum += GL16_W[i] * (f(mid + dx) + f(mid - dx));
    }
    sum * half
}

/// Composite 16-point Gauss-Legendre with uniform panels of width <= `max_panel`.
pub(crate) fn composite_gl<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, max_panel: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    let n = ((b - a) / max_panel).ceil().max(1.0) as usize;
    let h = (b - a) / n as f64;
    let mut total = 0.0;
    for k in 0..n {
        let lo = a + k as f64 * h;
        total += gl16(&f, lo, lo + h);
    }
    total
}

/// Composite Gauss-Legendre with panels graded geometrically away from `a`
/// (factor 4) and capped at width `cap`.
///
/// The grading handles mild endpoint behavior at `a` (e.g. `w log w`), the cap
/// keeps panels fine enough for integrands with steep interior variation.
pub(crate) fn composite_gl_graded<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cap: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    let mut total = 0.0;
    let mut lo = a;
    while lo < b {
        let grown = if lo > 0.0 { lo * 4.0 } else { a + cap };
        let hi = grown.min(lo + cap).min(b);
        total += gl16(&f, lo, hi);
        lo = hi;
    }
    total
}
