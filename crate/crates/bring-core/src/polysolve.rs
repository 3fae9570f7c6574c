//! Closed-form roots of real-coefficient quadratics, cubics, and quartics.
//!
//! The quartic path is Ferrari's method: depress, solve the resolvent
//! cubic, take its largest real root, and split into two quadratics. The
//! cubic path uses Cardano when there is a single real root and the
//! trigonometric form when there are three. Quadratics use the
//! sign-matched discriminant so the larger root is computed without
//! cancellation and the smaller one follows from the product of roots.
//!
//! Roots are returned with residuals measured against the polynomial as
//! given; nothing is polished here. Near-multiple roots therefore come
//! back with honestly degraded residuals.

use alloc::vec::Vec;

use crate::math;

/// Complex value in rectangular form; just enough arithmetic for root
/// bookkeeping and Horner evaluation.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn abs(self) -> f64 {
        math::hypot(self.re, self.im)
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }
}

impl core::ops::Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        Complex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl core::ops::Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl core::ops::Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        Complex::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

/// Real-coefficient polynomial of degree 1 through 4, highest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialRealCoeffs {
    coeffs: Vec<f64>,
}

/// Errors from polynomial construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolynomialError {
    /// The leading coefficient is zero; the stated degree would be wrong.
    LeadingZero,
    /// Only degrees 1..=4 are representable here.
    UnsupportedDegree { coefficient_count: usize },
    /// A coefficient was NaN or infinite.
    NonFinite,
}

impl core::fmt::Display for PolynomialError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PolynomialError::LeadingZero => write!(f, "leading coefficient must be nonzero"),
            PolynomialError::UnsupportedDegree { coefficient_count } => write!(
                f,
                "need 2 to 5 coefficients (degree 1 to 4), got {coefficient_count}"
            ),
            PolynomialError::NonFinite => write!(f, "coefficients must be finite"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PolynomialError {}

impl PolynomialRealCoeffs {
    pub fn new(coeffs: Vec<f64>) -> Result<Self, PolynomialError> {
        if !(2..=5).contains(&coeffs.len()) {
            return Err(PolynomialError::UnsupportedDegree {
                coefficient_count: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(PolynomialError::NonFinite);
        }
        if coeffs[0] == 0.0 {
            return Err(PolynomialError::LeadingZero);
        }
        Ok(Self { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients as given, highest degree first.
    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// Horner evaluation at a real point.
    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in &self.coeffs {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a complex point.
    pub fn eval_complex(&self, z: Complex) -> Complex {
        let mut acc = Complex::default();
        for &c in &self.coeffs {
            acc = acc * z + Complex::new(c, 0.0);
        }
        acc
    }
}

/// Roots of one polynomial, with the worst residual on record.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    /// As many roots as the degree; non-real ones in exact conjugate pairs.
    pub roots: Vec<Complex>,
    /// `max |p(root)|` over the returned roots, against the polynomial as
    /// given.
    pub max_residual: f64,
}

/// Default relative bound on spurious imaginary parts when classifying a
/// root as real.
pub const DEFAULT_IMAG_TOL: f64 = 1e-9;

fn root_set(p: &PolynomialRealCoeffs, roots: Vec<Complex>) -> RootSet {
    let mut max_residual = 0.0f64;
    for &r in &roots {
        max_residual = max_residual.max(p.eval_complex(r).abs());
    }
    RootSet {
        roots,
        max_residual,
    }
}

/// Both roots of `a2 x^2 + a1 x + a0`, larger-magnitude root first when
/// real. Sign-matched discriminant avoids cancellation.
fn quadratic_roots_raw(a2: f64, a1: f64, a0: f64) -> [Complex; 2] {
    let disc = a1 * a1 - 4.0 * a2 * a0;
    if disc >= 0.0 {
        let q = -0.5 * (a1 + math::copysign(math::sqrt(disc), a1));
        let x1 = q / a2;
        let x2 = if q == 0.0 { 0.0 } else { a0 / q };
        [Complex::new(x1, 0.0), Complex::new(x2, 0.0)]
    } else {
        let re = -a1 / (2.0 * a2);
        let im = math::sqrt(-disc) / (2.0 * a2);
        [Complex::new(re, im), Complex::new(re, -im)]
    }
}

/// Principal square root; conjugate inputs give conjugate outputs.
fn csqrt(z: Complex) -> Complex {
    if z.im == 0.0 {
        if z.re >= 0.0 {
            Complex::new(math::sqrt(z.re), 0.0)
        } else {
            Complex::new(0.0, math::sqrt(-z.re))
        }
    } else {
        let r = math::hypot(z.re, z.im);
        let u = math::sqrt((r + z.re) / 2.0);
        let v = math::copysign(math::sqrt((r - z.re) / 2.0), z.im);
        Complex::new(u, v)
    }
}

/// All roots of the monic cubic `t^3 + b t^2 + c t + d`.
fn cubic_roots_monic(b: f64, c: f64, d: f64) -> [Complex; 3] {
    // Depress with t = y - b/3.
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let shift = -b / 3.0;
    let delta = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);
    if delta > 0.0 {
        // One real root (Cardano), then deflate to a quadratic.
        let s = math::sqrt(delta);
        let y = math::cbrt(-q / 2.0 + s) + math::cbrt(-q / 2.0 - s);
        let r = y + shift;
        let [z1, z2] = quadratic_roots_raw(1.0, b + r, c + r * (b + r));
        [Complex::new(r, 0.0), z1, z2]
    } else if p == 0.0 {
        // delta <= 0 with p = 0 forces q = 0: triple root.
        [Complex::new(shift, 0.0); 3]
    } else {
        // Three real roots, trigonometric form.
        let magnitude = 2.0 * math::sqrt(-p / 3.0);
        let arg = (3.0 * q / (2.0 * p)) * math::sqrt(-3.0 / p);
        let theta = math::acos(arg.clamp(-1.0, 1.0));
        let mut out = [Complex::default(); 3];
        for (k, slot) in out.iter_mut().enumerate() {
            let angle = (theta - 2.0 * core::f64::consts::PI * k as f64) / 3.0;
            *slot = Complex::new(magnitude * math::cos(angle) + shift, 0.0);
        }
        out
    }
}

/// Both roots of a degree-2 polynomial.
pub fn solve_quadratic(p: &PolynomialRealCoeffs) -> RootSet {
    assert_eq!(p.degree(), 2, "solve_quadratic needs a degree-2 input");
    let c = p.coefficients();
    let roots = quadratic_roots_raw(c[0], c[1], c[2]).to_vec();
    root_set(p, roots)
}

/// All three roots of a degree-3 polynomial.
pub fn solve_cubic(p: &PolynomialRealCoeffs) -> RootSet {
    assert_eq!(p.degree(), 3, "solve_cubic needs a degree-3 input");
    let c = p.coefficients();
    let roots = cubic_roots_monic(c[1] / c[0], c[2] / c[0], c[3] / c[0]).to_vec();
    root_set(p, roots)
}

/// All four roots of a degree-4 polynomial via Ferrari's method.
pub fn solve_quartic(p: &PolynomialRealCoeffs) -> RootSet {
    assert_eq!(p.degree(), 4, "solve_quartic needs a degree-4 input");
    let cs = p.coefficients();
    let (b, c, d, e) = (cs[1] / cs[0], cs[2] / cs[0], cs[3] / cs[0], cs[4] / cs[0]);
    // Depress with x = y - b/4.
    let b2 = b * b;
    let dp = c - 3.0 * b2 / 8.0;
    let dq = b * b2 / 8.0 - b * c / 2.0 + d;
    let dr = e - 3.0 * b2 * b2 / 256.0 + b2 * c / 16.0 - b * d / 4.0;
    let shift = -b / 4.0;

    let ys: [Complex; 4] = if dq == 0.0 {
        // Biquadratic: quadratic in y^2, then complex square roots.
        let [z1, z2] = quadratic_roots_raw(1.0, dp, dr);
        let (s1, s2) = (csqrt(z1), csqrt(z2));
        [s1, -s1, s2, -s2]
    } else {
        // Resolvent cubic w^3 + 2p w^2 + (p^2 - 4r) w - q^2 = 0 has a
        // positive real root whenever q != 0; take the largest real one.
        let resolvent = cubic_roots_monic(2.0 * dp, dp * dp - 4.0 * dr, -(dq * dq));
        let mut w = f64::NEG_INFINITY;
        for z in resolvent {
            if z.im == 0.0 && z.re > w {
                w = z.re;
            }
        }
        let w = w.max(0.0);
        let alpha = math::sqrt(w);
        let beta = (dp + w - dq / alpha) / 2.0;
        let gamma = (dp + w + dq / alpha) / 2.0;
        let [y1, y2] = quadratic_roots_raw(1.0, alpha, beta);
        let [y3, y4] = quadratic_roots_raw(1.0, -alpha, gamma);
        [y1, y2, y3, y4]
    };

    let roots = ys
        .iter()
        .map(|y| Complex::new(y.re + shift, y.im))
        .collect();
    root_set(p, roots)
}

/// Real parts of the roots that are numerically real and lie strictly
/// inside `(lo, hi)`, sorted ascending.
///
/// A root counts as real when `|im| <= imag_tol * (1 + |re|)`.
pub fn real_roots_in_open_interval(rs: &RootSet, lo: f64, hi: f64, imag_tol: f64) -> Vec<f64> {
    assert!(lo < hi, "interval must be nonempty");
    assert!(imag_tol >= 0.0, "imag_tol must be nonnegative");
    let mut out: Vec<f64> = rs
        .roots
        .iter()
        .filter(|z| math::abs(z.im) <= imag_tol * (1.0 + math::abs(z.re)))
        .map(|z| z.re)
        .filter(|re| lo < *re && *re < hi)
        .collect();
    out.sort_by(|x, y| x.partial_cmp(y).expect("filtered roots are ordered"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn poly(coeffs: &[f64]) -> PolynomialRealCoeffs {
        PolynomialRealCoeffs::new(coeffs.to_vec()).unwrap()
    }

    fn sorted_reals(rs: &RootSet) -> Vec<f64> {
        real_roots_in_open_interval(rs, f64::NEG_INFINITY, f64::INFINITY, DEFAULT_IMAG_TOL)
    }

    #[test]
    fn construction_rejects_bad_inputs() {
        assert_eq!(
            PolynomialRealCoeffs::new(vec![0.0, 1.0]).unwrap_err(),
            PolynomialError::LeadingZero
        );
        assert_eq!(
            PolynomialRealCoeffs::new(vec![1.0]).unwrap_err(),
            PolynomialError::UnsupportedDegree {
                coefficient_count: 1
            }
        );
        assert_eq!(
            PolynomialRealCoeffs::new(vec![1.0; 6]).unwrap_err(),
            PolynomialError::UnsupportedDegree {
                coefficient_count: 6
            }
        );
        assert_eq!(
            PolynomialRealCoeffs::new(vec![1.0, f64::NAN]).unwrap_err(),
            PolynomialError::NonFinite
        );
    }

    #[test]
    fn quadratic_simple_cases() {
        let rs = solve_quadratic(&poly(&[1.0, 0.0, -1.0]));
        assert_eq!(sorted_reals(&rs), vec![-1.0, 1.0]);

        let rs = solve_quadratic(&poly(&[1.0, 0.0, 1.0]));
        assert!(sorted_reals(&rs).is_empty());
        assert!(rs.roots.contains(&Complex::new(0.0, 1.0)));
        assert!(rs.roots.contains(&Complex::new(0.0, -1.0)));

        let rs = solve_quadratic(&poly(&[1.0, -3.0, 2.0]));
        let reals = sorted_reals(&rs);
        assert!((reals[0] - 1.0).abs() < 1e-14 && (reals[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn cubic_with_repeated_and_simple_real_roots() {
        let rs = solve_cubic(&poly(&[1.0, 0.0, -3.0, 2.0]));
        let reals = sorted_reals(&rs);
        assert_eq!(reals.len(), 3);
        assert!((reals[0] + 2.0).abs() < 1e-9);
        assert!((reals[1] - 1.0).abs() < 1e-7); // double root, reduced accuracy
        assert!((reals[2] - 1.0).abs() < 1e-7);

        let rs = solve_cubic(&poly(&[1.0, 0.0, -1.0, 0.0]));
        let reals = sorted_reals(&rs);
        for (got, want) in reals.iter().zip([-1.0, 0.0, 1.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn cubic_single_real_root_matches_bisection() {
        let p = poly(&[1.0, 0.0, 1.0, 1.0]);
        let rs = solve_cubic(&p);
        let reals = sorted_reals(&rs);
        assert_eq!(reals.len(), 1);
        // Bisection oracle on the strictly increasing cubic.
        let (mut lo, mut hi) = (-2.0, 0.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if p.eval(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let oracle = 0.5 * (lo + hi);
        assert!(
            (reals[0] - oracle).abs() <= 1e-12,
            "{} vs {oracle}",
            reals[0]
        );
        assert!(p.eval(reals[0]).abs() <= 1e-12);
    }

    #[test]
    fn quartic_biquadratic_unit_circle() {
        let rs = solve_quartic(&poly(&[1.0, 0.0, 0.0, 0.0, -1.0]));
        assert_eq!(sorted_reals(&rs), vec![-1.0, 1.0]);
        assert!(rs.roots.contains(&Complex::new(0.0, 1.0)));
        assert!(rs.roots.contains(&Complex::new(0.0, -1.0)));
        assert!(rs.max_residual <= 1e-14);
    }

    #[test]
    fn quartic_four_constructed_real_roots() {
        // (x-1)(x-2)(x-3)(x-4)
        let rs = solve_quartic(&poly(&[1.0, -10.0, 35.0, -50.0, 24.0]));
        let reals = sorted_reals(&rs);
        assert_eq!(reals.len(), 4);
        for (got, want) in reals.iter().zip([1.0, 2.0, 3.0, 4.0]) {
            assert!((got - want).abs() <= 1e-10, "{got} vs {want}");
        }
    }

    #[test]
    fn quartic_from_normalized_series_coefficients() {
        let rs = solve_quartic(&poly(&[
            1.0,
            1.428572306,
            2.380957018,
            179.9962886,
            -29.7620421,
        ]));
        let inside = real_roots_in_open_interval(&rs, 0.0, 1.0, DEFAULT_IMAG_TOL);
        assert_eq!(inside.len(), 1);
        assert!((inside[0] - 0.1649484536).abs() <= 1e-8, "{}", inside[0]);
    }

    #[test]
    fn interval_filter_keeps_near_real_roots_and_sorts() {
        let rs = RootSet {
            roots: vec![
                Complex::new(0.7, 0.0),
                Complex::new(0.5, 1e-12),
                Complex::new(-0.2, 0.0),
                Complex::new(3.0, 0.0),
            ],
            max_residual: 0.0,
        };
        assert_eq!(
            real_roots_in_open_interval(&rs, 0.0, 1.0, 1e-9),
            vec![0.5, 0.7]
        );

        let rs = RootSet {
            roots: vec![
                Complex::new(1.0, 0.0),
                Complex::new(-1.0, 0.0),
                Complex::new(0.0, 1.0),
                Complex::new(0.0, -1.0),
            ],
            max_residual: 0.0,
        };
        assert_eq!(real_roots_in_open_interval(&rs, 0.0, 2.0, 1e-9), vec![1.0]);
    }

    /// Builds a monic quartic from the given roots (reals and exact
    /// conjugate pairs), highest degree first.
    fn quartic_from_roots(reals: &[f64], pairs: &[(f64, f64)]) -> Vec<f64> {
        let mut coeffs = vec![1.0f64];
        let mut multiply = |factor: &[f64]| {
            let mut next = vec![0.0; coeffs.len() + factor.len() - 1];
            for (i, &a) in coeffs.iter().enumerate() {
                for (j, &b) in factor.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            coeffs = next;
        };
        for &r in reals {
            multiply(&[1.0, -r]);
        }
        for &(re, im) in pairs {
            multiply(&[1.0, -2.0 * re, re * re + im * im]);
        }
        coeffs
    }

    #[test]
    fn random_quartics_meet_residual_vieta_and_conjugacy_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0420);
        for case in 0..1000 {
            let shape = rng.gen_range(0..3);
            let mut reals = vec![];
            let mut pairs = vec![];
            match shape {
                0 => {
                    for _ in 0..4 {
                        reals.push(rng.gen_range(-10.0..10.0));
                    }
                }
                1 => {
                    reals.push(rng.gen_range(-10.0..10.0));
                    reals.push(rng.gen_range(-10.0..10.0));
                    pairs.push((rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)));
                }
                _ => {
                    pairs.push((rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)));
                    pairs.push((rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)));
                }
            }
            let coeffs = quartic_from_roots(&reals, &pairs);
            let p = poly(&coeffs);
            let rs = solve_quartic(&p);
            let scale: f64 = coeffs.iter().fold(0.0, |acc, c| acc.max(c.abs()));

            for &root in &rs.roots {
                let residual = p.eval_complex(root).abs();
                assert!(
                    residual <= 1e-8 * scale,
                    "case {case}: residual {residual} vs scale {scale}"
                );
            }

            let sum: Complex = rs.roots.iter().fold(Complex::default(), |acc, &z| acc + z);
            let sum_err = (sum.re - (-coeffs[1])).abs() / coeffs[1].abs().max(1.0);
            assert!(sum_err <= 1e-9, "case {case}: root sum off by {sum_err}");
            assert!(sum.im.abs() <= 1e-9 * (1.0 + coeffs[1].abs()));

            let product: Complex = rs
                .roots
                .iter()
                .fold(Complex::new(1.0, 0.0), |acc, &z| acc * z);
            let prod_err = (product.re - coeffs[4]).abs() / coeffs[4].abs().max(1.0);
            assert!(
                prod_err <= 1e-9,
                "case {case}: root product off by {prod_err}"
            );

            for &root in &rs.roots {
                if root.im != 0.0 {
                    assert!(
                        rs.roots.iter().any(|z| z.re == root.re && z.im == -root.im),
                        "case {case}: missing conjugate of {root:?}"
                    );
                }
            }
        }
    }
}
