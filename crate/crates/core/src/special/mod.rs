//! Special-function kernel: complex log-gamma, zeta on the critical line and
//! at odd integers, and `₁F₁(k/2; 1/2; z)`.
//!
//! Everything here is a pure function of its arguments. Internal tables
//! (Bernoulli ratios, double-double logarithms) are built once and shared.

pub mod dd;
mod gamma;
mod hyp;
mod zeta;

use num_complex::Complex64;

/// Complex argument or value. Operations never hand back NaN or infinite parts
/// without reporting an error.
pub type ComplexValue = Complex64;

pub use gamma::{gamma, log_gamma, log_reflection};
pub use hyp::{
    coefficient_ratio as hyp1f1_coefficient_ratio, hyp1f1_half, hyp1f1_half_minus_one,
    series_coefficients as hyp1f1_series_coefficients, MAX_ARGUMENT as HYP1F1_MAX_ARGUMENT,
};
pub(crate) use zeta::zeta_integer;
pub use zeta::{
    hardy_z, hardy_z_complex, theta, zero_residual, zeta_critical, zeta_critical_with_bound,
    zeta_odd, zeta_prime_at_zero, DERIVATIVE_STEP, MAX_HEIGHT, SIMPLICITY_THRESHOLD,
};
