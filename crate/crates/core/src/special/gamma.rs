use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;

// g = 7, n = 9 coefficient set (the one published with GSL).
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;

/// Largest distance to the left of Re(s) = 1/2 the upward recurrence is allowed to travel.
const MAX_SHIFT: f64 = 1.0e4;

/// Log-gamma on the branch that is real on the positive axis and continuous
/// off the non-positive real axis (the analytic continuation of `ln Γ`).
///
/// For `Re s >= 1/2` the Lanczos sum is used directly. Left of that line the
/// value is carried up with `ln Γ(s) = ln Γ(s + m) - Σ ln(s + j)`, which keeps
/// the branch consistent through every strip.
pub fn log_gamma(s: Complex64) -> Result<Complex64> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::Domain(format!("log_gamma of non-finite {s}")));
    }
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() {
        return Err(Error::Domain(format!("log_gamma pole at {}", s.re)));
    }
    if s.re >= 0.5 {
        return Ok(lanczos(s));
    }
    let shift = (0.5 - s.re).ceil();
    if shift > MAX_SHIFT {
        return Err(Error::Range(format!(
            "log_gamma argument {s} too far left of the critical strip"
        )));
    }
    let m = shift as u32;
    let mut logs = Complex64::new(0.0, 0.0);
    for j in 0..m {
        logs += (s + j as f64).ln();
    }
    Ok(lanczos(s + m as f64) - logs)
}

/// Γ(s) itself; overflows (or underflows) for large |s| like any double-valued Γ.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    Ok(log_gamma(s)?.exp())
}

fn lanczos(s: Complex64) -> Complex64 {
    let z = s - 1.0;
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + HALF_LN_TWO_PI + series.ln()
}

/// `ln π - ln sin(π s)` evaluated without overflow for large |Im s|.
///
/// The result is the reflection partner of `log_gamma`: it equals
/// `log_gamma(s) + log_gamma(1 - s)` modulo 2πi.
pub fn log_reflection(s: Complex64) -> Complex64 {
    let i = Complex64::i();
    let ln_pi = PI.ln();
    let pz = s * PI;
    let ln_sin = if s.im > 1.0 {
        // sin(πs) = (i/2) e^{-iπs} (1 - e^{2iπs})
        -i * pz + (-(2.0 * i * pz).exp()).ln_1p() + Complex64::new(-(2.0f64).ln(), PI / 2.0)
    } else if s.im < -1.0 {
        // sin(πs) = (-i/2) e^{iπs} (1 - e^{-2iπs})
        i * pz + (-(-2.0 * i * pz).exp()).ln_1p() + Complex64::new(-(2.0f64).ln(), -PI / 2.0)
    } else {
        pz.sin().ln()
    };
    ln_pi - ln_sin
}

trait Ln1p {
    fn ln_1p(self) -> Self;
}

impl Ln1p for Complex64 {
    fn ln_1p(self) -> Self {
        if self.norm() < 1e-4 {
            // Three terms are exact to double precision at this size.
            self - self * self / 2.0 + self * self * self / 3.0
        } else {
            (self + 1.0).ln()
        }
    }
}
