//! End-to-end solvers for the real root of `x^5 + x = a`.
//!
//! The headline method ([`solve_series`]) follows the series pipeline:
//! evaluate `K_0..K_4`, normalize the quartic by `K_4`, solve it in closed
//! form, keep the real root of the scaled unknown `x/a` inside `(0, 1)`,
//! and scale back. Negative `a` is folded in through the map's odd symmetry
//! (`x^5 + x` is odd, so the root of `-a` is minus the root of `a`),
//! bit-for-bit.
//!
//! Three reference methods back it up: Newton on the quintic, bisection
//! (which always converges since the derivative `5x^4 + 1` never vanishes),
//! and, for small `|a|`, the alternating power series
//! `a - a^5 + 5a^9 - 35a^13 + ...` whose coefficients are the integers
//! `C(5k, k) / (4k + 1)`.

use alloc::vec;

use crate::coefficients::CoefficientTable;
use crate::math;
use crate::polysolve::{
    real_roots_in_open_interval, solve_quartic, PolynomialRealCoeffs, RootSet, DEFAULT_IMAG_TOL,
};
use crate::ultraradicals::{
    evaluate_ultraradicals, TruncationPolicy, UltraradicalError, UltraradicalSet,
};

/// Root-finding method selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMethod {
    Series,
    Newton,
    Bisection,
    BringRadical,
}

impl SolveMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveMethod::Series => "series",
            SolveMethod::Newton => "newton",
            SolveMethod::Bisection => "bisection",
            SolveMethod::BringRadical => "bring_radical",
        }
    }
}

/// One solve job: the right-hand side `a` plus method and knobs.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveRequest {
    pub a: f64,
    pub method: SolveMethod,
    /// Truncation control for the series method.
    pub policy: TruncationPolicy,
    /// Residual target. Must be positive.
    pub tol: f64,
    /// Iteration cap for Newton; term count for the small-`|a|` series.
    pub max_iter: usize,
}

impl SolveRequest {
    pub fn new(a: f64, method: SolveMethod) -> Self {
        Self {
            a,
            method,
            policy: TruncationPolicy::default(),
            tol: 1e-12,
            max_iter: 100,
        }
    }
}

/// Outcome of a successful solve.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport {
    /// The real root `x`.
    pub root: f64,
    /// `x / a`; absent when `a = 0`.
    pub scaled_root: Option<f64>,
    /// `|x^5 + x - a|` at the reported root.
    pub residual: f64,
    pub method: SolveMethod,
    /// Outer terms used (series methods) or iterations taken (Newton,
    /// bisection).
    pub terms_or_iterations: usize,
    /// The evaluated series, when the series method ran (always at the
    /// positive magnitude `|a|`).
    pub ultraradicals: Option<UltraradicalSet>,
    /// All four roots of the normalized quartic, when the series method ran.
    pub quartic_roots: Option<RootSet>,
    /// Whether one Newton polish step was applied on top of the series
    /// result.
    pub polished: bool,
}

/// Errors from the solvers.
#[derive(Clone, Debug, PartialEq)]
pub enum SolveError {
    /// `|a| <= 1`, outside the series method's convergence region.
    Divergent { a: f64 },
    /// `|K_4|` vanished, so the quartic cannot be normalized.
    DegenerateNormalization { k4: f64 },
    /// The quartic produced no real root inside `(0, 1)`; all four roots
    /// are carried for diagnosis.
    SelectionFailure { roots: RootSet },
    /// Newton failed to reach the tolerance; carries the last iterate.
    IterationLimit { last: f64, iterations: usize },
    /// `|a|` at or beyond the small-series convergence radius.
    OutsideRadius { a: f64, radius: f64 },
    /// The coefficient table cannot cover the requested truncation.
    Capacity { required: usize, capacity: usize },
    /// Truncation depth beyond the exact-binomial range.
    OuterIndexTooLarge { m_max: usize },
}

impl SolveError {
    /// Stable machine-readable kind, used by the CLI error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            SolveError::Divergent { .. } => "divergence",
            SolveError::DegenerateNormalization { .. } => "degenerate-normalization",
            SolveError::SelectionFailure { .. } => "selection-failure",
            SolveError::IterationLimit { .. } => "iteration-limit",
            SolveError::OutsideRadius { .. } => "outside-radius",
            SolveError::Capacity { .. } => "capacity",
            SolveError::OuterIndexTooLarge { .. } => "outer-index",
        }
    }
}

impl core::fmt::Display for SolveError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SolveError::Divergent { a } => write!(
                f,
                "series diverges for |a| <= 1 (a = {a}); use the newton or bisect method"
            ),
            SolveError::DegenerateNormalization { k4 } => {
                write!(f, "cannot normalize the quartic: |K4| = {} is too small", {
                    math::abs(*k4)
                })
            }
            SolveError::SelectionFailure { roots } => {
                write!(f, "no real quartic root inside (0, 1); got")?;
                for z in &roots.roots {
                    write!(f, " {}{:+}i", z.re, z.im)?;
                }
                Ok(())
            }
            SolveError::IterationLimit { last, iterations } => write!(
                f,
                "no convergence after {iterations} iterations (last iterate {last})"
            ),
            SolveError::OutsideRadius { a, radius } => write!(
                f,
                "power series diverges for |a| >= {radius} (a = {a}); use another method"
            ),
            SolveError::Capacity { required, capacity } => write!(
                f,
                "coefficient table holds {capacity} entries but index {required} is required"
            ),
            SolveError::OuterIndexTooLarge { m_max } => write!(
                f,
                "outer term cap {m_max} exceeds the exact binomial range (max 62)"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SolveError {}

/// `x^5 + x - a`, evaluated in the fixed order `((x^2)^2 * x + x) - a` so
/// every caller sees identical bits.
#[inline]
fn signed_residual(x: f64, a: f64) -> f64 {
    let x2 = x * x;
    ((x2 * x2) * x + x) - a
}

/// `|x^5 + x - a|` in the same fixed evaluation order.
pub fn residual(x: f64, a: f64) -> f64 {
    math::abs(signed_residual(x, a))
}

/// Derivative `5x^4 + 1` of the quintic map; never zero on the reals.
#[inline]
fn derivative(x: f64) -> f64 {
    let x2 = x * x;
    5.0 * (x2 * x2) + 1.0
}

/// Convergence radius `4 / (5 * 5^(1/4))` of the small-`|a|` power series.
pub fn bring_radius() -> f64 {
    4.0 / (5.0 * math::sqrt(math::sqrt(5.0)))
}

/// Series pipeline without the polish step; the reported root is exactly
/// what the truncated series and the closed-form quartic produce.
pub fn solve_series_unpolished(
    a: f64,
    policy: &TruncationPolicy,
    coeffs: &CoefficientTable,
) -> Result<SolveReport, SolveError> {
    // Negated on purpose: a NaN input must take the error path.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(math::abs(a) > 1.0) {
        return Err(SolveError::Divergent { a });
    }
    let mag = math::abs(a);
    let set = match evaluate_ultraradicals(mag, policy, coeffs) {
        Ok(set) => set,
        Err(UltraradicalError::Capacity { required, capacity }) => {
            return Err(SolveError::Capacity { required, capacity })
        }
        Err(UltraradicalError::Divergent { a }) => return Err(SolveError::Divergent { a }),
        Err(UltraradicalError::OuterIndexTooLarge { m_max }) => {
            return Err(SolveError::OuterIndexTooLarge { m_max })
        }
        Err(UltraradicalError::NonPositive { .. }) => {
            unreachable!("evaluation runs at |a| > 1")
        }
    };
    if math::abs(set.k4) < 1e-300 {
        return Err(SolveError::DegenerateNormalization { k4: set.k4 });
    }
    let quartic = match PolynomialRealCoeffs::new(vec![
        1.0,
        set.k3 / set.k4,
        set.k2 / set.k4,
        set.k1 / set.k4,
        set.k0 / set.k4,
    ]) {
        Ok(p) => p,
        // Non-finite normalized coefficients mean K4 failed as a scale.
        Err(_) => return Err(SolveError::DegenerateNormalization { k4: set.k4 }),
    };
    let quartic_roots = solve_quartic(&quartic);
    let candidates = real_roots_in_open_interval(&quartic_roots, 0.0, 1.0, DEFAULT_IMAG_TOL);
    if candidates.is_empty() {
        return Err(SolveError::SelectionFailure {
            roots: quartic_roots,
        });
    }
    // Several candidates can appear near degenerate corners; the quintic
    // residual is the ground truth for the tie-break.
    let mut best = candidates[0];
    let mut best_residual = residual(mag * best, mag);
    for &xr in &candidates[1..] {
        let r = residual(mag * xr, mag);
        if r < best_residual {
            best = xr;
            best_residual = r;
        }
    }
    let root = if a < 0.0 { -(mag * best) } else { mag * best };
    Ok(SolveReport {
        root,
        scaled_root: Some(root / a),
        residual: residual(root, a),
        method: SolveMethod::Series,
        terms_or_iterations: set.m_used.iter().copied().max().unwrap_or(0),
        ultraradicals: Some(set),
        quartic_roots: Some(quartic_roots),
        polished: false,
    })
}

/// Series pipeline, plus at most one Newton polish step when the raw
/// residual misses `tol`; `polished` records whether that happened.
pub fn solve_series(
    a: f64,
    policy: &TruncationPolicy,
    tol: f64,
    coeffs: &CoefficientTable,
) -> Result<SolveReport, SolveError> {
    assert!(tol > 0.0, "tol must be positive");
    let report = solve_series_unpolished(a, policy, coeffs)?;
    if report.residual <= tol {
        return Ok(report);
    }
    let x = report.root;
    let root = x - signed_residual(x, a) / derivative(x);
    Ok(SolveReport {
        root,
        scaled_root: Some(root / a),
        residual: residual(root, a),
        polished: true,
        ..report
    })
}

/// Newton's method on `f(x) = x^5 + x - a`.
///
/// With no starting point given, seeds at `sign(a) * max(1, |a|)^(1/5)`,
/// which overshoots mildly on the convex branch and then descends
/// monotonically. Counts accepted update steps.
pub fn solve_newton(
    a: f64,
    x0: Option<f64>,
    tol: f64,
    max_iter: usize,
) -> Result<SolveReport, SolveError> {
    assert!(tol > 0.0, "tol must be positive");
    assert!(max_iter >= 1, "max_iter must be at least 1");
    let mut x = x0.unwrap_or_else(|| {
        if a == 0.0 {
            0.0
        } else {
            math::copysign(math::exp(0.2 * math::ln(math::abs(a).max(1.0))), a)
        }
    });
    let mut iterations = 0usize;
    loop {
        let f = signed_residual(x, a);
        if math::abs(f) <= tol {
            return Ok(SolveReport {
                root: x,
                scaled_root: if a == 0.0 { None } else { Some(x / a) },
                residual: math::abs(f),
                method: SolveMethod::Newton,
                terms_or_iterations: iterations,
                ultraradicals: None,
                quartic_roots: None,
                polished: false,
            });
        }
        if iterations >= max_iter {
            return Err(SolveError::IterationLimit {
                last: x,
                iterations,
            });
        }
        x -= f / derivative(x);
        iterations += 1;
    }
}

/// Bisection on `[0, max(1, |a|)]`, mirrored for negative `a`.
///
/// The map is strictly increasing, so the bracket is valid and the method
/// cannot fail; it stops once both the bracket width and the residual are
/// within `tol`, or when binary64 runs out of midpoints.
pub fn solve_bisection(a: f64, tol: f64) -> Result<SolveReport, SolveError> {
    assert!(tol > 0.0, "tol must be positive");
    let mag = math::abs(a);
    let mut lo = 0.0f64;
    let mut hi = mag.max(1.0);
    let mut mid = 0.5 * (lo + hi);
    let mut iterations = 0usize;
    loop {
        let f = signed_residual(mid, mag);
        if (hi - lo) <= tol && math::abs(f) <= tol {
            break;
        }
        if f < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        let next = 0.5 * (lo + hi);
        if next <= lo || next >= hi {
            // The bracket has collapsed to adjacent floats.
            break;
        }
        mid = next;
        iterations += 1;
    }
    let root = if a < 0.0 { -mid } else { mid };
    Ok(SolveReport {
        root,
        scaled_root: if a == 0.0 { None } else { Some(root / a) },
        residual: residual(root, a),
        method: SolveMethod::Bisection,
        terms_or_iterations: iterations,
        ultraradicals: None,
        quartic_roots: None,
        polished: false,
    })
}

/// Integer coefficients `C(5k, k) / (4k + 1)` of the small-`|a|` series,
/// exactly, for spot-checking the runtime recurrence.
pub const fn bring_series_coefficient(k: u64) -> u64 {
    let n = 5 * k;
    let mut r: u64 = 1;
    let mut i = 1;
    while i <= k {
        r = r * (n - k + i) / i;
        i += 1;
    }
    r / (4 * k + 1)
}

// The first six published series coefficients, checked at compile time
// against the general-term formula before anything gets to use it.
const _: () = {
    let expected = [1u64, 1, 5, 35, 285, 2530];
    let mut k = 0;
    while k < 6 {
        assert!(bring_series_coefficient(k as u64) == expected[k]);
        k += 1;
    }
};

/// The alternating power series `a - a^5 + 5a^9 - 35a^13 + ...`, summed to
/// `terms` terms. Converges only for `|a| < ` [`bring_radius`].
///
/// Coefficients are built by the exact ratio recurrence
/// `b_{k+1} = b_k * [(5k+1)...(5k+5)] / [(k+1)(4k+2)(4k+3)(4k+4)(4k+5)]`.
pub fn solve_bring_radical(a: f64, terms: usize) -> Result<SolveReport, SolveError> {
    assert!(terms >= 1, "terms must be at least 1");
    let radius = bring_radius();
    // Negated on purpose: a NaN input must take the error path.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(math::abs(a) < radius) {
        return Err(SolveError::OutsideRadius { a, radius });
    }
    let a2 = a * a;
    let a4 = a2 * a2;
    let mut b = 1.0f64;
    let mut power = a;
    let mut sum = 0.0f64;
    for k in 0..terms {
        let term = b * power;
        sum += if k % 2 == 1 { -term } else { term };
        let kf = k as f64;
        let numerator = (5.0 * kf + 1.0)
            * (5.0 * kf + 2.0)
            * (5.0 * kf + 3.0)
            * (5.0 * kf + 4.0)
            * (5.0 * kf + 5.0);
        let denominator =
            (kf + 1.0) * (4.0 * kf + 2.0) * (4.0 * kf + 3.0) * (4.0 * kf + 4.0) * (4.0 * kf + 5.0);
        b = b * numerator / denominator;
        power *= a4;
    }
    Ok(SolveReport {
        root: sum,
        scaled_root: if a == 0.0 { None } else { Some(sum / a) },
        residual: residual(sum, a),
        method: SolveMethod::BringRadical,
        terms_or_iterations: terms,
        ultraradicals: None,
        quartic_roots: None,
        polished: false,
    })
}

/// Dispatches a [`SolveRequest`] to the matching method. The coefficient
/// table is only consulted by the series method.
pub fn solve(req: &SolveRequest, coeffs: &CoefficientTable) -> Result<SolveReport, SolveError> {
    match req.method {
        SolveMethod::Series => solve_series(req.a, &req.policy, req.tol, coeffs),
        SolveMethod::Newton => solve_newton(req.a, None, req.tol, req.max_iter),
        SolveMethod::Bisection => solve_bisection(req.a, req.tol),
        SolveMethod::BringRadical => solve_bring_radical(req.a, req.max_iter),
    }
}
