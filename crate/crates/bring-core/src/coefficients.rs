//! Coefficients of the binomial expansion of `(1 - t)^(1/5)`.
//!
//! Writing `(1 - t)^(1/5) = 1 - c_1 t - c_2 t^2 - ...`, the `c_k` are all
//! positive, strictly decreasing, and sum to 1 as `K -> infinity` (slowly:
//! the tail decays like `k^(-1/5)`). They satisfy the recurrence
//!
//! ```text
//! c_1 = 1/5,    c_{k+1} = [(5k - 1) / (5(k + 1))] * c_k
//! ```
//!
//! which is the production path here. [`coefficient_closed_form`] evaluates
//! the same value as an explicit left-to-right product so tests can check
//! the recurrence against an independent formulation.

use alloc::vec::Vec;

/// Immutable table of `c_1..c_K`.
///
/// Indices are 1-based to match the series notation; the table is safe to
/// share across threads once built.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    values: Vec<f64>,
}

impl CoefficientTable {
    /// Largest index `K` stored in the table.
    pub fn max_index(&self) -> usize {
        self.values.len()
    }

    /// `c_k` for `1 <= k <= max_index`, `None` outside that range.
    pub fn get(&self, k: usize) -> Option<f64> {
        if k == 0 {
            return None;
        }
        self.values.get(k - 1).copied()
    }

    /// All stored values, `c_1` first.
    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Errors from coefficient construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientError {
    /// A count or index of zero was requested; indices are 1-based.
    ZeroIndex,
}

impl core::fmt::Display for CoefficientError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CoefficientError::ZeroIndex => {
                write!(f, "coefficient index must be at least 1")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CoefficientError {}

/// Ratio `c_{k+1} / c_k` of the recurrence, formed as a single quotient.
///
/// Keeping the division inside this helper pins the operation order: both
/// the recurrence and the closed-form product multiply by exactly this
/// value, so the two paths agree bit-for-bit.
#[inline]
fn step_ratio(k: usize) -> f64 {
    (5.0 * k as f64 - 1.0) / (5.0 * (k as f64 + 1.0))
}

/// Builds `c_1..c_K` by the recurrence. `K` must be at least 1.
pub fn generate_coefficients(k_max: usize) -> Result<CoefficientTable, CoefficientError> {
    if k_max == 0 {
        return Err(CoefficientError::ZeroIndex);
    }
    let mut values = Vec::with_capacity(k_max);
    let mut c = 0.2;
    values.push(c);
    for k in 1..k_max {
        c *= step_ratio(k);
        values.push(c);
    }
    Ok(CoefficientTable { values })
}

/// `c_k` as the explicit product `(1/5) * prod_{j=1}^{k-1} (5j-1)/(5(j+1))`,
/// accumulated left to right. Intended as an independent check on
/// [`generate_coefficients`]; the production code never calls it.
pub fn coefficient_closed_form(k: usize) -> Result<f64, CoefficientError> {
    if k == 0 {
        return Err(CoefficientError::ZeroIndex);
    }
    let mut acc = 0.2;
    for j in 1..k {
        acc *= step_ratio(j);
    }
    Ok(acc)
}
