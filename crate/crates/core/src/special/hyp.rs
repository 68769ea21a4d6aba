//! Kummer's confluent hypergeometric series with lower parameter 1/2.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Cap on |z| accepted by `hyp1f1_half`.
pub const MAX_ARGUMENT: f64 = 50.0;

/// Series terms allowed before giving up.
pub const MAX_TERMS: usize = 500;

const TERM_CUTOFF: f64 = 1e-16;

/// Coefficient ratio `c_{j+1} / c_j` of `₁F₁(a; 1/2; z) = Σ c_j z^j`, where
/// `c_j = Γ(a+j) Γ(1/2) / (Γ(a) Γ(1/2+j) j!)`.
#[inline]
pub fn coefficient_ratio(a: f64, j: usize) -> f64 {
    let j = j as f64;
    (a + j) / ((0.5 + j) * (j + 1.0))
}

/// The first `count` coefficients `c_j` of `₁F₁(k/2; 1/2; z)`.
pub fn series_coefficients(k: f64, count: usize) -> Vec<f64> {
    let a = 0.5 * k;
    let mut out = Vec::with_capacity(count);
    let mut c = 1.0;
    for j in 0..count {
        out.push(c);
        c *= coefficient_ratio(a, j);
    }
    out
}

/// `₁F₁(k/2; 1/2; z)` for `k >= 1`, `|z| <= 50`.
pub fn hyp1f1_half(k: f64, z: Complex64) -> Result<Complex64> {
    check(k, z)?;
    if z.re < 0.0 && z.norm() > 1.0 {
        // Kummer: ₁F₁(a; b; z) = e^z ₁F₁(b - a; b; -z), which turns an alternating
        // series with huge intermediate terms into a tame one.
        let transformed = series(0.5 - 0.5 * k, -z, false)?;
        Ok(z.exp() * transformed)
    } else {
        series(0.5 * k, z, false)
    }
}

/// `₁F₁(k/2; 1/2; z) - 1` without cancellation for small |z|.
pub fn hyp1f1_half_minus_one(k: f64, z: Complex64) -> Result<Complex64> {
    check(k, z)?;
    if z.norm() <= 1.0 {
        series(0.5 * k, z, true)
    } else {
        Ok(hyp1f1_half(k, z)? - 1.0)
    }
}

fn check(k: f64, z: Complex64) -> Result<()> {
    if !(k >= 1.0 && k.is_finite()) {
        return Err(Error::Domain(format!(
            "hyp1f1_half requires k >= 1, got {k}"
        )));
    }
    if !(z.norm() <= MAX_ARGUMENT) {
        return Err(Error::Range(format!(
            "hyp1f1_half requires |z| <= {MAX_ARGUMENT}, got {}",
            z.norm()
        )));
    }
    Ok(())
}

fn series(a: f64, z: Complex64, skip_constant: bool) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = if skip_constant {
        Complex64::new(0.0, 0.0)
    } else {
        term
    };
    let mut largest = 1.0f64;
    for j in 0..MAX_TERMS {
        term *= z * coefficient_ratio(a, j);
        sum += term;
        let mag = term.norm();
        largest = largest.max(mag);
        if mag == 0.0 {
            return Ok(sum);
        }
        // Past the peak the ratio |z|/j governs the decay.
        let ratio = z.norm() * coefficient_ratio(a, j + 1).abs();
        if ratio < 1.0 && mag < TERM_CUTOFF * sum.norm().max(f64::MIN_POSITIVE) {
            return Ok(sum);
        }
    }
    Err(Error::Convergence(format!(
        "1F1({a}; 1/2; {z}) not converged after {MAX_TERMS} terms (largest term {largest:e})"
    )))
}
