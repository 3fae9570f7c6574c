//! The five series `K_0..K_4` that turn the quintic `x^5 + x = a` into a
//! quartic in the scaled unknown `x/a`.
//!
//! Each series is an alternating sum over an outer index `m` with
//! denominators that are powers of `a^4`, so all five converge only for
//! `|a| > 1`. The inner summand at outer index `m` is an alternating
//! binomial-weighted combination of the expansion coefficients `c_k`:
//!
//! ```text
//! inner(m, offset) = sum_{n=0}^{m-1} (-1)^n C(m-1, n) c_{4m+n+offset}
//! ```
//!
//! with `offset` = +1, -3, -2, -1, 0 selecting `K_0..K_4` respectively.
//! `K_0` carries a leading closed term 1 and denominators `a^{4m}`; the
//! other four use `a^{4(m-1)}`, and `K_1` additionally carries `-a^{4/5}`.
//!
//! The inner sums cancel heavily as `m` grows, which is why they are
//! accumulated with compensated summation and why truncation is controlled
//! by a [`TruncationPolicy`] with a guard that stops the outer loop once
//! terms stop decreasing (beyond that point they are noise, not signal).

use crate::coefficients::CoefficientTable;
use crate::math;
use crate::sum::NeumaierSum;

/// Inner-sum offsets for `K_0..K_4`, in that order.
pub const OFFSETS: [i32; 5] = [1, -3, -2, -1, 0];

/// Largest `m` for which `C(m-1, n)` stays exactly representable in 64-bit
/// unsigned arithmetic.
pub const MAX_OUTER_INDEX: usize = 62;

/// Truncation control for the outer sums.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TruncationPolicy {
    /// Hard cap on the outer index `m`. Must be at least 1.
    pub m_max: usize,
    /// Stop once `|T_m| <= rel_term_tol * |partial sum|`. Must be positive.
    pub rel_term_tol: f64,
    /// Stop (without adding `T_m`) once `|T_m| >= |T_{m-1}|`.
    pub cancellation_guard: bool,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            m_max: 14,
            rel_term_tol: 1e-16,
            cancellation_guard: true,
        }
    }
}

/// Why an outer sum stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    /// The last added term fell below the relative tolerance.
    Tolerance,
    /// Terms stopped decreasing; the offending term was not added.
    CancellationGuard,
    /// The outer cap `m_max` was reached.
    MMax,
}

impl StopReason {
    pub fn as_str(self) -> &'static str {
        match self {
            StopReason::Tolerance => "tolerance",
            StopReason::CancellationGuard => "cancellation_guard",
            StopReason::MMax => "m_max",
        }
    }
}

/// Evaluated `K_0..K_4` at one `a`, with per-series truncation records.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UltraradicalSet {
    pub a: f64,
    pub k0: f64,
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
    pub k4: f64,
    /// Outer terms actually summed, per series.
    pub m_used: [usize; 5],
    pub stop_reason: [StopReason; 5],
}

impl UltraradicalSet {
    /// `K_0..K_4` as an array, in index order.
    pub fn values(&self) -> [f64; 5] {
        [self.k0, self.k1, self.k2, self.k3, self.k4]
    }
}

/// Errors from series evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum UltraradicalError {
    /// The coefficient table is too small for the requested truncation.
    Capacity { required: usize, capacity: usize },
    /// `|a| <= 1`, where the series do not converge.
    Divergent { a: f64 },
    /// `a <= 0`; callers must fold negative inputs in by odd symmetry first.
    NonPositive { a: f64 },
    /// The outer index went past the exact-binomial range `m <= 62`.
    OuterIndexTooLarge { m_max: usize },
}

impl UltraradicalError {
    /// Stable machine-readable kind, used by the CLI error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            UltraradicalError::Capacity { .. } => "capacity",
            UltraradicalError::Divergent { .. } => "divergence",
            UltraradicalError::NonPositive { .. } => "non-positive",
            UltraradicalError::OuterIndexTooLarge { .. } => "outer-index",
        }
    }
}

impl core::fmt::Display for UltraradicalError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            UltraradicalError::Capacity { required, capacity } => write!(
                f,
                "coefficient table holds {capacity} entries but index {required} is required"
            ),
            UltraradicalError::Divergent { a } => write!(
                f,
                "series diverges for |a| <= 1 (a = {a}); use a different method"
            ),
            UltraradicalError::NonPositive { a } => write!(
                f,
                "series evaluation needs a > 0 (a = {a}); negate by odd symmetry first"
            ),
            UltraradicalError::OuterIndexTooLarge { m_max } => write!(
                f,
                "outer term cap {m_max} exceeds the exact binomial range (max 62)"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for UltraradicalError {}

/// Largest coefficient index any of the five series touches when the outer
/// sum runs to `m_max` (attained by `K_0`: index `5 * m_max`).
pub fn required_capacity(m_max: usize) -> usize {
    5 * m_max
}

/// Exact `C(n, k)` by the multiplicative formula; every intermediate
/// division is exact. Valid without overflow for `n <= 61`.
fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 1..=k {
        r = r * (n - k + i) / i;
    }
    r
}

/// The alternating binomial-weighted inner sum at outer index `m`.
///
/// `offset` selects the series (see [`OFFSETS`]); `m >= 1`. Accumulation is
/// compensated, ascending in `n`, with the binomial weight formed exactly in
/// integers and converted once per term.
pub fn inner_alternating_sum(
    m: usize,
    offset: i32,
    coeffs: &CoefficientTable,
) -> Result<f64, UltraradicalError> {
    assert!(m >= 1, "inner sum needs m >= 1");
    assert!(
        4 * m as i64 + offset as i64 >= 1,
        "offset {offset} drives the coefficient index below 1"
    );
    if m > MAX_OUTER_INDEX {
        return Err(UltraradicalError::OuterIndexTooLarge { m_max: m });
    }
    let required = (4 * m + (m - 1)) as i64 + offset as i64;
    let required = required as usize;
    if required > coeffs.max_index() {
        return Err(UltraradicalError::Capacity {
            required,
            capacity: coeffs.max_index(),
        });
    }
    let values = coeffs.values();
    let mut s = NeumaierSum::new();
    for n in 0..m {
        let idx = (4 * m + n) as i64 + offset as i64;
        let c = values[idx as usize - 1];
        let weighted = binomial((m - 1) as u64, n as u64) as f64 * c;
        s.add(if n % 2 == 1 { -weighted } else { weighted });
    }
    Ok(s.value())
}

/// The `m`-th outer term of `K_0` at the given `a`; the zeroth term is 1.
///
/// The denominator `a^{4m}` is built by binary powering of `a^4`, so the
/// term scales across `a` exactly as the formula says. Callers must keep
/// `a` nonzero.
pub fn k0_term(m: usize, a: f64, coeffs: &CoefficientTable) -> Result<f64, UltraradicalError> {
    if m == 0 {
        return Ok(1.0);
    }
    let inner = inner_alternating_sum(m, 1, coeffs)?;
    let a2 = a * a;
    let a4 = a2 * a2;
    let t = inner / math::powu(a4, m as u32);
    Ok(if m % 2 == 1 { -t } else { t })
}

/// Evaluates all five series at `a` under the given truncation policy.
///
/// Requires `a > 1`: the series diverge for `|a| <= 1`, and negative `a`
/// must be folded in upstream by the quintic's odd symmetry. The
/// coefficient table must cover [`required_capacity`]`(policy.m_max)`.
pub fn evaluate_ultraradicals(
    a: f64,
    policy: &TruncationPolicy,
    coeffs: &CoefficientTable,
) -> Result<UltraradicalSet, UltraradicalError> {
    assert!(policy.m_max >= 1, "m_max must be at least 1");
    assert!(policy.rel_term_tol > 0.0, "rel_term_tol must be positive");
    // Negated on purpose: a NaN input must take the error path.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(math::abs(a) > 1.0) {
        return Err(UltraradicalError::Divergent { a });
    }
    if a <= 0.0 {
        return Err(UltraradicalError::NonPositive { a });
    }
    if policy.m_max > MAX_OUTER_INDEX {
        return Err(UltraradicalError::OuterIndexTooLarge {
            m_max: policy.m_max,
        });
    }
    let required = required_capacity(policy.m_max);
    if required > coeffs.max_index() {
        return Err(UltraradicalError::Capacity {
            required,
            capacity: coeffs.max_index(),
        });
    }

    let a2 = a * a;
    let a4 = a2 * a2;
    let mut k = [0.0f64; 5];
    let mut m_used = [0usize; 5];
    let mut stop_reason = [StopReason::MMax; 5];

    for (i, &offset) in OFFSETS.iter().enumerate() {
        let closed = match i {
            0 => 1.0,
            1 => -math::pow_four_fifths(a),
            _ => 0.0,
        };
        let mut value = closed;
        // K_0 divides by a^{4m}; the rest by a^{4(m-1)}.
        let mut denom = if i == 0 { a4 } else { 1.0 };
        let mut prev_abs = f64::INFINITY;
        for m in 1..=policy.m_max {
            let inner = inner_alternating_sum(m, offset, coeffs)?;
            let magnitude = inner / denom;
            let term = if m % 2 == 1 { -magnitude } else { magnitude };
            if policy.cancellation_guard && m >= 2 && math::abs(term) >= prev_abs {
                stop_reason[i] = StopReason::CancellationGuard;
                break;
            }
            value += term;
            m_used[i] = m;
            prev_abs = math::abs(term);
            if math::abs(term) <= policy.rel_term_tol * math::abs(value) {
                stop_reason[i] = StopReason::Tolerance;
                break;
            }
            denom *= a4;
        }
        k[i] = value;
    }

    Ok(UltraradicalSet {
        a,
        k0: k[0],
        k1: k[1],
        k2: k[2],
        k3: k[3],
        k4: k[4],
        m_used,
        stop_reason,
    })
}
