//! The zero-sum side of the identity
//!
//! `F(b) = b^{-1/2} Re Σ_{γ>0} a(γ) b^{iγ} + (√π/b) F(π/b)`,
//!
//! with `a(γ) = Γ(1/4 - iγ/2)/ζ'(1/2 + iγ)`, plus the Riesz family
//! `P_k(x) = Σ μ(n) n^{-k} e^{-x/n²}` and its expansion over zeros.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mobius::{self, DirectEvaluator, MobiusSieve};
use crate::special::{
    hyp1f1_half_minus_one, hyp1f1_series_coefficients, log_gamma, zeta_integer, zeta_prime_at_zero,
    HYP1F1_MAX_ARGUMENT,
};
use crate::sum::{ComplexSum, NeumaierSum};
use crate::zeros::ZeroTable;

/// Coefficients with `ln|a| < -FLUSH_LOG` are stored as zero and accounted
/// for in error budgets through their magnitude.
pub const FLUSH_LOG: f64 = 700.0;

/// Slack added to certified bounds when comparing the two sides of the identity.
pub const NUMERICAL_SLACK: f64 = 1e-8;

/// Default Möbius depth of the hypergeometric sum in `riesz_expansion`.
pub const DEFAULT_RIESZ_DEPTH: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Coefficient {
    pub gamma: f64,
    /// Family parameter; `k = 1` is the F case.
    pub k: f64,
    pub value: Complex64,
    pub magnitude: f64,
    pub log_magnitude: f64,
    /// True when `value` was flushed to zero to avoid underflow.
    pub flushed: bool,
}

impl Coefficient {
    /// A coefficient with a prescribed value, for synthetic experiments.
    pub fn synthetic(gamma: f64, k: f64, value: Complex64) -> Self {
        let magnitude = value.norm();
        Self {
            gamma,
            k,
            value,
            magnitude,
            log_magnitude: magnitude.ln(),
            flushed: false,
        }
    }
}

/// `a_k(ρ) = Γ(k/2 - ρ/2) / ζ'(ρ)` with `ρ = 1/2 + iγ`, computed in log space.
pub fn coefficient(gamma: f64, k: f64) -> Result<Coefficient> {
    if !(k >= 1.0 && k.is_finite()) {
        return Err(Error::Precondition(format!(
            "coefficient requires k >= 1, got {k}"
        )));
    }
    if !(gamma > 0.0) {
        return Err(Error::Precondition(format!(
            "coefficient requires a positive ordinate, got {gamma}"
        )));
    }
    let lg = log_gamma(Complex64::new(0.5 * k - 0.25, -0.5 * gamma))?;
    let zp = zeta_prime_at_zero(gamma)?;
    let log_value = lg - zp.ln();
    let log_magnitude = log_value.re;
    let flushed = log_magnitude < -FLUSH_LOG;
    let value = if flushed {
        Complex64::new(0.0, 0.0)
    } else {
        log_value.exp()
    };
    Ok(Coefficient {
        gamma,
        k,
        value,
        magnitude: log_magnitude.exp(),
        log_magnitude,
        flushed,
    })
}

/// Coefficients for every ordinate of `zeros`, in table order.
pub fn coefficients(zeros: &ZeroTable, k: f64) -> Result<Vec<Coefficient>> {
    zeros
        .ordinates()
        .par_iter()
        .map(|&g| coefficient(g, k))
        .collect()
}

/// `ln(γ^{3/4} e^{-πγ/4})`.
fn log_envelope(gamma: f64) -> f64 {
    0.75 * gamma.ln() - 0.25 * PI * gamma
}

/// Smallest B with `|a(γ)| <= B γ^{3/4} e^{-πγ/4}` over `coeffs`.
pub fn envelope_constant(coeffs: &[Coefficient]) -> f64 {
    coeffs
        .iter()
        .map(|c| (c.log_magnitude - log_envelope(c.gamma)).exp())
        .fold(0.0, f64::max)
}

/// Allowance for `Σ |a(γ)|` over zeros above `gamma_last`, from the envelope
/// with constant `b_env`. Zeros in `[T, T+1]` are counted as
/// `ln((T+1)/2π)/2π + 2`, which dominates the Riemann-von Mangoldt density
/// together with the fluctuation of S(T) in the supported range.
pub fn envelope_tail(gamma_last: f64, b_env: f64) -> f64 {
    let mut acc = 0.0;
    let mut t = gamma_last;
    loop {
        let count = ((t + 1.0) / (2.0 * PI)).ln().max(0.0) / (2.0 * PI) + 2.0;
        let term = b_env * count * log_envelope(t).exp();
        acc += term;
        if term <= 1e-20 * acc || term == 0.0 {
            return acc;
        }
        t += 1.0;
    }
}

/// Indices of `coeffs` by descending magnitude, ties by ascending γ.
pub(crate) fn descending_order(coeffs: &[Coefficient]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..coeffs.len()).collect();
    idx.sort_by(|&i, &j| {
        coeffs[j]
            .magnitude
            .total_cmp(&coeffs[i].magnitude)
            .then(coeffs[i].gamma.total_cmp(&coeffs[j].gamma))
    });
    idx
}

fn check_family(coeffs: &[Coefficient], k: f64) -> Result<()> {
    if coeffs.is_empty() {
        return Err(Error::Precondition("empty coefficient list".into()));
    }
    if let Some(c) = coeffs.iter().find(|c| c.k != k) {
        return Err(Error::Precondition(format!(
            "expected coefficients of the k = {k} family, found k = {}",
            c.k
        )));
    }
    Ok(())
}

/// `Σ a(γ) e^{iγ u}` in descending-magnitude order.
fn phased_sum(coeffs: &[Coefficient], u: f64) -> Complex64 {
    let mut acc = ComplexSum::new();
    for i in descending_order(coeffs) {
        let c = &coeffs[i];
        acc.add(c.value * Complex64::from_polar(1.0, c.gamma * u));
    }
    acc.value()
}

/// `b^{-1/2} Re Σ a(γ) b^{iγ}` over the given k = 1 coefficients.
pub fn zero_sum(b: f64, coeffs: &[Coefficient]) -> Result<f64> {
    if !(b > 0.0 && b.is_finite()) {
        return Err(Error::Precondition(format!(
            "zero_sum requires b > 0, got {b}"
        )));
    }
    check_family(coeffs, 1.0)?;
    Ok(phased_sum(coeffs, b.ln()).re / b.sqrt())
}

/// `Σ_{ρ} a(ρ) b^{iγ}` over both `ρ = 1/2 ± iγ`. The mirrored terms are
/// rebuilt from `Γ(1/4 + iγ/2)` and `ζ'(1/2 - iγ) = conj ζ'(1/2 + iγ)`, so the
/// imaginary part measures how well the conjugate pairs cancel.
pub fn two_sided_sum(b: f64, coeffs: &[Coefficient]) -> Result<Complex64> {
    if !(b > 0.0 && b.is_finite()) {
        return Err(Error::Precondition(format!(
            "two_sided_sum requires b > 0, got {b}"
        )));
    }
    check_family(coeffs, 1.0)?;
    let u = b.ln();
    let mut acc = ComplexSum::new();
    for i in descending_order(coeffs) {
        let c = &coeffs[i];
        acc.add(c.value * Complex64::from_polar(1.0, c.gamma * u));
        if c.flushed {
            continue;
        }
        let lg = log_gamma(Complex64::new(0.25, 0.5 * c.gamma))?;
        let zp = zeta_prime_at_zero(c.gamma)?.conj();
        let mirrored = (lg - zp.ln()).exp();
        acc.add(mirrored * Complex64::from_polar(1.0, -c.gamma * u));
    }
    Ok(acc.value())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Correction {
    pub value: f64,
    pub error_bound: f64,
}

/// The first `K` terms of `(√π/b) F(π/b)`, i.e.
/// `π^{-1/2} Σ_{k=1}^{K} (-1)^k (π/b)^{2k+1} / (k! ζ(2k+1))`, with a bound on the rest.
///
/// For `b >= π` the remaining series alternates with decreasing terms and the
/// first omitted term bounds it. Below π the bound is
/// `(√π/b) u^{K+1} e^u / (K+1)!` with `u = (π/b)²`.
pub fn correction_sum(b: f64, k_max: usize) -> Result<Correction> {
    if k_max < 1 {
        return Err(Error::Precondition("correction_sum requires K >= 1".into()));
    }
    if !(b > 0.0 && b.is_finite()) {
        return Err(Error::Precondition(format!(
            "correction_sum requires b > 0, got {b}"
        )));
    }
    let u = (PI / b).powi(2);
    let prefactor = PI.sqrt() / b;
    let mut term = 1.0; // u^k / k!
    let mut acc = NeumaierSum::new();
    for k in 1..=k_max {
        term *= u / k as f64;
        let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
        acc.add(sign * term / zeta_integer(2 * k as u32 + 1));
    }
    let next = term * u / (k_max + 1) as f64;
    let tail = if b >= PI { next } else { next * u.exp() };
    Ok(Correction {
        value: prefactor * acc.value(),
        error_bound: prefactor * tail,
    })
}

/// One point of the identity, both sides computed independently.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalRecord {
    pub b: f64,
    /// F(b) from the Möbius side.
    pub direct: f64,
    /// Certified tolerance of `direct`.
    pub direct_tol: f64,
    pub zerosum: f64,
    pub corrections: f64,
    /// Bound on the omitted correction terms.
    pub truncation_bound: f64,
    /// Allowance for zeros not in the table and flushed coefficients, scaled by b^{-1/2}.
    pub zero_tail: f64,
    /// `truncation_bound + zero_tail + direct_tol`.
    pub error_bound: f64,
    pub residual: f64,
}

impl EvalRecord {
    pub fn within_bound(&self) -> bool {
        self.residual <= self.error_bound + NUMERICAL_SLACK
    }
}

/// The k = 1 coefficients of a zero table with their tail allowance.
#[derive(Clone, Debug)]
pub struct Expansion {
    coeffs: Vec<Coefficient>,
    envelope: f64,
    tail: f64,
}

impl Expansion {
    pub fn new(zeros: &ZeroTable) -> Result<Self> {
        Self::from_coefficients(coefficients(zeros, 1.0)?)
    }

    pub fn from_coefficients(coeffs: Vec<Coefficient>) -> Result<Self> {
        check_family(&coeffs, 1.0)?;
        let envelope = envelope_constant(&coeffs);
        let last = coeffs.iter().map(|c| c.gamma).fold(0.0, f64::max);
        let flushed: f64 = coeffs
            .iter()
            .filter(|c| c.flushed)
            .map(|c| c.magnitude)
            .sum();
        let tail = envelope_tail(last, envelope) + flushed;
        Ok(Self {
            coeffs,
            envelope,
            tail,
        })
    }

    pub fn coefficients(&self) -> &[Coefficient] {
        &self.coeffs
    }

    /// Fitted B of the decay envelope.
    pub fn envelope_constant(&self) -> f64 {
        self.envelope
    }

    /// Allowance for `Σ |a(γ)|` over zeros beyond the table.
    pub fn tail_allowance(&self) -> f64 {
        self.tail
    }

    /// Zero sum plus `K` correction terms, with the part of the error bound
    /// that does not depend on the Möbius side.
    pub fn expand(&self, b: f64, k_max: usize) -> Result<(f64, Correction, f64)> {
        let zs = zero_sum(b, &self.coeffs)?;
        let corr = correction_sum(b, k_max)?;
        Ok((zs, corr, self.tail / b.sqrt()))
    }

    /// Both sides at `b`, the direct side from `direct`.
    pub fn evaluate(&self, b: f64, k_max: usize, direct: &DirectEvaluator) -> Result<EvalRecord> {
        let (zerosum, corr, zero_tail) = self.expand(b, k_max)?;
        let direct = direct.eval(b)?;
        let residual = (direct.value - (zerosum + corr.value)).abs();
        Ok(EvalRecord {
            b,
            direct: direct.value,
            direct_tol: direct.tol,
            zerosum,
            corrections: corr.value,
            truncation_bound: corr.error_bound,
            zero_tail,
            error_bound: corr.error_bound + zero_tail + direct.tol,
            residual,
        })
    }
}

/// Default certified tolerance asked of the direct side.
pub const DEFAULT_DIRECT_TOL: f64 = 1e-10;

/// Assembles both sides of the identity at `b` from the zeros of `zeros`.
pub fn evaluate(
    b: f64,
    zeros: &ZeroTable,
    k_max: usize,
    sieve: &MobiusSieve,
) -> Result<EvalRecord> {
    let direct = DirectEvaluator::within(sieve, b, DEFAULT_DIRECT_TOL)?;
    Expansion::new(zeros)?.evaluate(b, k_max, &direct)
}

/// `P_k(x)` within `tol` from the Möbius series.
///
/// `k = 1` uses the subtracted terms `e^{-x/n²} - 1`. Integer `k >= 2` uses
/// the same terms plus `1/ζ(k)`, with tail `x N^{-k-1}/(k+1)`. Other `k > 1`
/// sum the raw series with tail `N^{1-k}/(k-1)`.
pub fn riesz_direct(k: f64, x: f64, sieve: &MobiusSieve, tol: f64) -> Result<f64> {
    if !(k >= 1.0 && k.is_finite()) {
        return Err(Error::Precondition(format!(
            "riesz_direct requires k >= 1, got {k}"
        )));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Precondition(format!(
            "riesz_direct requires x > 0, got {x}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::Precondition(format!(
            "riesz_direct requires tol > 0, got {tol}"
        )));
    }
    let integer = k.fract() == 0.0;
    let n_cut = if k == 1.0 {
        (x / (2.0 * tol)).sqrt().ceil()
    } else if integer {
        (x / ((k + 1.0) * tol)).powf(1.0 / (k + 1.0)).ceil()
    } else {
        (1.0 / ((k - 1.0) * tol)).powf(1.0 / (k - 1.0)).ceil()
    }
    .max(1.0);
    if !(n_cut <= sieve.limit() as f64) {
        return Err(Error::Capacity {
            what: "Möbius sieve",
            requested: n_cut.min(u64::MAX as f64) as u64,
            limit: sieve.limit() as u64,
        });
    }
    let n_cut = n_cut as usize;
    let mu = sieve.values();
    let mut acc = NeumaierSum::new();
    for n in (1..=n_cut).rev() {
        let m = mu[n - 1];
        if m == 0 {
            continue;
        }
        let nf = n as f64;
        let e = if integer {
            (-x / (nf * nf)).exp_m1()
        } else {
            (-x / (nf * nf)).exp()
        };
        acc.add(m as f64 * nf.powf(-k) * e);
    }
    if integer && k >= 2.0 {
        acc.add(1.0 / zeta_integer(k as u32));
    }
    Ok(acc.value())
}

/// `P_k(x)` from the zeros:
///
/// `Γ(k/2) x^{-k/2} Σ_n μ(n)/n (₁F₁(k/2; 1/2; -π²/(n²x)) - 1) + x^{-k/2+1/4} Re Σ a_k(ρ) x^{iγ/2}`.
///
/// Terms `n <= depth` of the first sum use `₁F₁` directly. The rest are summed
/// exactly by swapping the order:
/// `Σ_{j>=1} c_j (-π²/x)^j (1/ζ(2j+1) - Σ_{n<=depth} μ(n) n^{-2j-1})`.
pub fn riesz_expansion(k: f64, x: f64, zeros: &ZeroTable, depth: usize) -> Result<f64> {
    let coeffs = coefficients(zeros, k)?;
    riesz_expansion_with(k, x, &coeffs, depth)
}

/// `riesz_expansion` over precomputed `a_k` coefficients.
pub fn riesz_expansion_with(k: f64, x: f64, coeffs: &[Coefficient], depth: usize) -> Result<f64> {
    let x_min = PI * PI / HYP1F1_MAX_ARGUMENT;
    if !(x >= x_min && x.is_finite()) {
        return Err(Error::Precondition(format!(
            "riesz_expansion requires x >= π²/{HYP1F1_MAX_ARGUMENT}, got {x}"
        )));
    }
    if depth < 1 {
        return Err(Error::Precondition(
            "riesz_expansion requires depth >= 1".into(),
        ));
    }
    check_family(coeffs, k)?;

    let zero_part = x.powf(0.25 - 0.5 * k) * phased_sum(coeffs, 0.5 * x.ln()).re;

    let mu = mobius::sieve(depth)?;
    let w = -PI * PI / x;
    let mut head = NeumaierSum::new();
    for n in 1..=depth {
        let m = mu.mu(n);
        if m == 0 {
            continue;
        }
        let nf = n as f64;
        let z = Complex64::new(w / (nf * nf), 0.0);
        head.add(m as f64 / nf * hyp1f1_half_minus_one(k, z)?.re);
    }

    const MAX_SWAPPED: usize = 100;
    let c = hyp1f1_series_coefficients(k, MAX_SWAPPED + 1);
    let mut tail = NeumaierSum::new();
    let mut wj = 1.0;
    for (j, &cj) in c.iter().enumerate().skip(1) {
        wj *= w;
        let s = 2 * j as u32 + 1;
        let mut partial = NeumaierSum::new();
        for n in (1..=depth).rev() {
            let m = mu.mu(n);
            if m != 0 {
                partial.add(m as f64 * (n as f64).powi(-(s as i32)));
            }
        }
        let remainder = 1.0 / zeta_integer(s) - partial.value();
        let term = cj * wj * remainder;
        tail.add(term);
        // the remainder is at most ζ(s) - 1 - ... < 2 (depth+1)^{-s}
        let scale = (cj * wj).abs() * 2.0 * ((depth + 1) as f64).powi(-(s as i32));
        if scale < 1e-18 * head.value().abs().max(1e-300) || scale == 0.0 {
            break;
        }
    }
    head.add(tail.value());

    let hyp_part =
        log_gamma(Complex64::new(0.5 * k, 0.0))?.re.exp() * x.powf(-0.5 * k) * head.value();
    Ok(zero_part + hyp_part)
}
