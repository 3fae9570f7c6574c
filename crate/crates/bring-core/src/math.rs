//! Float helpers that dispatch to `std` methods or `libm`, so the rest of
//! the crate can be written once and still build without the standard
//! library.

#[cfg(feature = "std")]
#[inline(always)]
pub fn exp(x: f64) -> f64 {
    x.exp()
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[cfg(feature = "std")]
#[inline(always)]
pub fn ln(x: f64) -> f64 {
    x.ln()
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[cfg(feature = "std")]
#[inline(always)]
pub fn sqrt(x: f64) -> f64 {
    x.sqrt()
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[cfg(feature = "std")]
#[inline(always)]
pub fn cbrt(x: f64) -> f64 {
    x.cbrt()
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn cbrt(x: f64) -> f64 {
    libm::cbrt(x)
}

#[cfg(feature = "std")]
#[inline(always)]
pub fn acos(x: f64) -> f64 {
    x.acos()
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn acos(x: f64) -> f64 {
    libm::acos(x)
}

#[cfg(feature = "std")]
#[inline(always)]
pub fn cos(x: f64) -> f64 {
    x.cos()
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[cfg(feature = "std")]
#[inline(always)]
pub fn hypot(x: f64, y: f64) -> f64 {
    x.hypot(y)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

#[cfg(feature = "std")]
#[inline(always)]
pub fn abs(x: f64) -> f64 {
    x.abs()
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

#[cfg(feature = "std")]
#[inline(always)]
pub fn copysign(x: f64, sign: f64) -> f64 {
    x.copysign(sign)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn copysign(x: f64, sign: f64) -> f64 {
    libm::copysign(x, sign)
}

/// `base^exp` by binary exponentiation, least-significant bit first.
///
/// Pure multiplication, no transcendentals: the result is identical on every
/// target, which matters because the series denominators are built from it.
#[inline]
pub fn powu(base: f64, exp: u32) -> f64 {
    let mut acc = 1.0;
    let mut b = base;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= b;
        }
        e >>= 1;
        if e > 0 {
            b *= b;
        }
    }
    acc
}

/// `a^(4/5)` for strictly positive `a`, via `exp((4/5) ln a)`.
#[inline]
pub fn pow_four_fifths(a: f64) -> f64 {
    exp(0.8 * ln(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powu_matches_naive_products() {
        for e in 0u32..12 {
            let mut naive = 1.0;
            for _ in 0..e {
                naive *= 1.5;
            }
            assert_eq!(powu(1.5, e), naive, "exponent {e}");
        }
    }

    #[test]
    fn powu_zero_exponent_is_one() {
        assert_eq!(powu(123.456, 0), 1.0);
        assert_eq!(powu(0.0, 0), 1.0);
    }

    #[test]
    fn pow_four_fifths_squares_to_known_value() {
        // 32^(4/5) = 16 exactly in the reals; allow float rounding.
        assert!((pow_four_fifths(32.0) - 16.0).abs() < 1e-12);
        assert!((pow_four_fifths(1.0) - 1.0).abs() == 0.0);
    }
}
