//! Numerical laboratory for the Möbius series `F(b) = Σ μ(n)/n · e^{-(b/n)²}`
//! and its expansion over the nontrivial zeros of ζ.
//!
//! Module map:
//! - [`special`]: log-gamma, ζ on the critical line and at odd integers, ₁F₁.
//! - [`zeros`]: zero ordinate tables (embedded, computed, or loaded).
//! - [`mobius`]: μ, M(x), the direct evaluation of F and the weak-Mertens integral.
//! - [`ramanujan`]: coefficients a(γ), the zero-sum expansion, the Riesz family.
//! - [`annulus`]: radii C and c, the density p(x), the second moment.
//! - [`cli`]: the `ramlab` command line.

// `!(x >= 0.0)` style guards are used on purpose so NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod annulus;
pub mod cli;
pub mod error;
pub mod mobius;
pub mod ramanujan;
pub mod special;
pub mod sum;
pub mod zeros;
mod zeros_data;

pub use error::{Error, Result};
