//! Zeta on the critical line (Euler-Maclaurin), the Hardy Z-function,
//! ζ' at zeros, and ζ at odd integers.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::dd::ln_int;
use super::gamma::log_gamma;
use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

/// Upper end of the supported height range for `zeta_critical`.
pub const MAX_HEIGHT: f64 = 10_000.0;

/// Target for the Euler-Maclaurin remainder bound.
pub const EM_REMAINDER_TARGET: f64 = 1e-15;

const MAX_BERNOULLI_TERMS: usize = 60;

/// Step of the first central difference used for ζ'.
pub const DERIVATIVE_STEP: f64 = 1e-4;

/// |ζ'(ρ)| below this is treated as a multiple zero (or a bad ordinate).
pub const SIMPLICITY_THRESHOLD: f64 = 1e-12;

/// `B_{2k} / (2k)!` for k = 1..=MAX_BERNOULLI_TERMS, via
/// `B_{2k}/(2k)! = (-1)^{k+1} 2 ζ(2k) / (2π)^{2k}`.
fn bernoulli_ratios() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (1..=MAX_BERNOULLI_TERMS)
            .map(|k| {
                let m = 2 * k as i32;
                let zeta_even = match k {
                    1 => PI * PI / 6.0,
                    2 => PI.powi(4) / 90.0,
                    // 2k >= 6: the tail past n = 1000 is below 1e-16 relative
                    _ => {
                        let mut s = NeumaierSum::new();
                        for n in (2..=1000u32).rev() {
                            s.add((n as f64).powi(-m));
                        }
                        1.0 + s.value()
                    }
                };
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                sign * 2.0 * zeta_even / (2.0 * PI).powi(m)
            })
            .collect()
    })
}

/// `n^{-s}` for `s = 1/2 + i t` with the phase reduced in double-double.
#[inline]
fn inv_pow_half_line(n: u64, t: f64) -> Complex64 {
    let phase = ln_int(n).mul_f64(t).rem_two_pi();
    let (sin, cos) = phase.sin_cos();
    let r = 1.0 / (n as f64).sqrt();
    Complex64::new(r * cos, -r * sin)
}

/// ζ(1/2 + i t) for `0 <= t <= 10000`.
pub fn zeta_critical(t: f64) -> Result<Complex64> {
    zeta_critical_with_bound(t).map(|(z, _)| z)
}

/// ζ(1/2 + i t) together with the Euler-Maclaurin remainder bound actually reached.
pub fn zeta_critical_with_bound(t: f64) -> Result<(Complex64, f64)> {
    if !(0.0..=MAX_HEIGHT).contains(&t) {
        return Err(Error::Range(format!(
            "zeta_critical requires 0 <= t <= {MAX_HEIGHT}, got {t}"
        )));
    }
    let s = Complex64::new(0.5, t);
    let n_cut = (t / PI).ceil() as u64 + 16;

    let mut re = NeumaierSum::new();
    let mut im = NeumaierSum::new();
    for n in (1..n_cut).rev() {
        let z = inv_pow_half_line(n, t);
        re.add(z.re);
        im.add(z.im);
    }

    let nf = n_cut as f64;
    let n_pow = inv_pow_half_line(n_cut, t); // N^{-s}
    let mut tail = n_pow * nf / (s - 1.0) + n_pow * 0.5;

    // Bernoulli corrections: c_k * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    let ratios = bernoulli_ratios();
    let mut rising = s; // s(s+1)...(s+2k-2)
    let mut n_inv_pow = n_pow / nf; // N^{-s-2k+1} at k = 1
    let mut bound = f64::INFINITY;
    for k in 1..=MAX_BERNOULLI_TERMS {
        let term = rising * n_inv_pow * ratios[k - 1];
        tail += term;
        if k == MAX_BERNOULLI_TERMS {
            break;
        }
        // The next term, scaled by |s + 2k + 1| / (σ + 2k + 1), bounds the remainder.
        let next_rising = rising * (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        let next = next_rising.norm() * (n_inv_pow.norm() / (nf * nf)) * ratios[k].abs();
        let sigma_shift = (s + (2 * k + 1) as f64).norm() / (0.5 + (2 * k + 1) as f64);
        bound = next * sigma_shift;
        if bound < EM_REMAINDER_TARGET {
            break;
        }
        rising = next_rising;
        n_inv_pow /= nf * nf;
    }
    if bound >= 1e-12 {
        return Err(Error::Convergence(format!(
            "Euler-Maclaurin remainder {bound:e} at t = {t}"
        )));
    }
    re.add(tail.re);
    im.add(tail.im);
    Ok((Complex64::new(re.value(), im.value()), bound))
}

/// Riemann-Siegel theta: `θ(t) = Im ln Γ(1/4 + i t/2) - (t/2) ln π`.
pub fn theta(t: f64) -> Result<f64> {
    let lg = log_gamma(Complex64::new(0.25, 0.5 * t))?;
    Ok(lg.im - 0.5 * t * PI.ln())
}

/// Hardy's Z-function, real for real `t`: `Z(t) = e^{iθ(t)} ζ(1/2 + i t)`.
pub fn hardy_z(t: f64) -> Result<f64> {
    Ok(hardy_z_complex(t)?.re)
}

/// `e^{iθ(t)} ζ(1/2 + i t)` before discarding the (vanishing) imaginary part.
pub fn hardy_z_complex(t: f64) -> Result<Complex64> {
    let z = zeta_critical(t)?;
    let th = theta(t)?;
    Ok(Complex64::from_polar(1.0, th) * z)
}

/// ζ'(1/2 + iγ) by Richardson-extrapolated central differences of `zeta_critical`.
///
/// Meant to be called at zero ordinates. Off a zero the returned number is
/// still the derivative of ζ there; `zero_residual` tells the two cases apart.
pub fn zeta_prime_at_zero(gamma: f64) -> Result<Complex64> {
    let h = DERIVATIVE_STEP;
    if gamma - h < 0.0 || gamma + h > MAX_HEIGHT {
        return Err(Error::Range(format!(
            "zeta_prime_at_zero requires {h} <= gamma <= {}",
            MAX_HEIGHT - h
        )));
    }
    let central = |step: f64| -> Result<Complex64> {
        Ok((zeta_critical(gamma + step)? - zeta_critical(gamma - step)?) / (2.0 * step))
    };
    let d1 = central(h)?;
    let d2 = central(h / 2.0)?;
    let d3 = central(h / 4.0)?;
    let r1 = (d2 * 4.0 - d1) / 3.0;
    let r2 = (d3 * 4.0 - d2) / 3.0;
    let dz_dt = (r2 * 16.0 - r1) / 15.0;
    // s = 1/2 + i t, so dζ/ds = -i dζ/dt
    let deriv = -Complex64::i() * dz_dt;
    let magnitude = deriv.norm();
    if !magnitude.is_finite() || magnitude < SIMPLICITY_THRESHOLD {
        return Err(Error::SimplicityViolation { gamma, magnitude });
    }
    Ok(deriv)
}

/// |ζ(1/2 + iγ)|, for flagging ordinates that are not actually zeros.
pub fn zero_residual(gamma: f64) -> Result<f64> {
    Ok(zeta_critical(gamma)?.norm())
}

/// ζ(m) for odd `3 <= m <= 201`.
pub fn zeta_odd(m: u32) -> Result<f64> {
    if m.is_multiple_of(2) || !(3..=201).contains(&m) {
        return Err(Error::Domain(format!(
            "zeta_odd requires odd 3 <= m <= 201, got {m}"
        )));
    }
    Ok(zeta_integer(m))
}

const INTEGER_TABLE_LEN: u32 = 256;

/// ζ(m) for integer `m >= 2`, tabulated for `m < 256`.
pub(crate) fn zeta_integer(m: u32) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    if m >= INTEGER_TABLE_LEN {
        return zeta_integer_uncached(m);
    }
    TABLE.get_or_init(|| {
        (0..INTEGER_TABLE_LEN)
            .map(|m| {
                if m < 2 {
                    f64::NAN
                } else {
                    zeta_integer_uncached(m)
                }
            })
            .collect()
    })[m as usize]
}

/// Direct summation to `n = 1000` plus the integral tail and its
/// Euler-Maclaurin corrections.
fn zeta_integer_uncached(m: u32) -> f64 {
    debug_assert!(m >= 2);
    const N: u32 = 1000;
    let s = m as f64;
    let nf = N as f64;
    let mut acc = NeumaierSum::new();
    // smallest terms first
    for n in (1..N).rev() {
        acc.add((n as f64).powf(-s));
    }
    // Σ_{n>=N} n^{-s} = N^{1-s}/(s-1) + N^{-s}/2 + Σ_k c_k s(s+1)..(s+2k-2) N^{-s-2k+1}
    let n_pow = nf.powf(-s);
    acc.add(nf * n_pow / (s - 1.0));
    acc.add(0.5 * n_pow);
    let ratios = bernoulli_ratios();
    let mut rising = s;
    let mut p = n_pow / nf;
    for (k, &c) in ratios.iter().enumerate().take(4) {
        let term = c * rising * p;
        acc.add(term);
        let k = k + 1;
        rising *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        p /= nf * nf;
    }
    acc.value()
}
