//! Solver for the reduced quintic `x^5 + x = a`.
//!
//! For real `a` with `|a| > 1` the real root of `x^5 + x = a` can be written
//! as `a` times a root of an auxiliary quartic whose coefficients are sums of
//! alternating series in `1/a^4`. This crate builds those series
//! ([`coefficients`], [`ultraradicals`]), solves the quartic in closed form
//! ([`polysolve`]), and assembles the full pipeline together with reference
//! methods (Newton, bisection, and a small-`|a|` hypergeometric series) in
//! [`solver`]. The [`diagnostics`] module exposes the raw term and
//! partial-sum tables used to study convergence behaviour.
//!
//! The crate is `no_std`-compatible: disable the default `std` feature and
//! enable `libm` to route transcendental calls through software
//! implementations. All series accumulation is written against a fixed
//! operation order, so results are reproducible bit-for-bit across targets.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("enable at least one of the `std` or `libm` features");

extern crate alloc;

pub mod coefficients;
pub mod diagnostics;
pub(crate) mod math;
pub mod polysolve;
pub mod solver;
pub(crate) mod sum;
pub mod ultraradicals;

pub use coefficients::{generate_coefficients, CoefficientTable};
pub use solver::{solve, SolveMethod, SolveReport, SolveRequest};
pub use ultraradicals::{evaluate_ultraradicals, TruncationPolicy, UltraradicalSet};
