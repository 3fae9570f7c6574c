//! Compensated accumulation for the alternating inner sums.

/// Neumaier's variant of Kahan summation.
///
/// Tracks a running compensation term so that cancellation between terms of
/// comparable magnitude and opposite sign loses as little as possible. The
/// branch keeps the compensation correct even when an incoming term is
/// larger than the running sum, which plain Kahan gets wrong.
#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if crate::math::abs(self.sum) >= crate::math::abs(x) {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}
