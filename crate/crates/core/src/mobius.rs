//! Möbius and Mertens functions, the subtracted-form evaluation of
//! `F(b) = Σ μ(n)/n · e^{-(b/n)²}`, and the weak-Mertens integral.

use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

/// Largest sieve the lab will allocate (one byte per entry).
pub const MAX_SIEVE_LIMIT: usize = 100_000_000;

/// Table of μ(n) for `1 <= n <= limit`.
#[derive(Clone, Debug)]
pub struct MobiusSieve {
    // index 0 is padding so that values[n] = μ(n)
    values: Vec<i8>,
}

impl MobiusSieve {
    pub fn limit(&self) -> usize {
        self.values.len() - 1
    }

    /// μ(n); panics outside `1..=limit`.
    #[inline]
    pub fn mu(&self, n: usize) -> i8 {
        assert!(n >= 1, "μ is defined for n >= 1");
        self.values[n]
    }

    /// μ(1), ..., μ(limit).
    pub fn values(&self) -> &[i8] {
        &self.values[1..]
    }

    pub(crate) fn raw(&self) -> &[i8] {
        &self.values
    }

    fn ensure(&self, n: usize) -> Result<()> {
        if n > self.limit() {
            return Err(Error::Capacity {
                what: "Möbius sieve",
                requested: n as u64,
                limit: self.limit() as u64,
            });
        }
        Ok(())
    }
}

/// Linear sieve of μ up to `limit`.
pub fn sieve(limit: usize) -> Result<MobiusSieve> {
    if limit == 0 || limit > MAX_SIEVE_LIMIT {
        return Err(Error::Capacity {
            what: "Möbius sieve",
            requested: limit as u64,
            limit: MAX_SIEVE_LIMIT as u64,
        });
    }
    const UNSEEN: i8 = 2;
    let mut mu = vec![UNSEEN; limit + 1];
    mu[0] = 0;
    mu[1] = 1;
    let mut primes: Vec<u32> = Vec::new();
    for i in 2..=limit {
        if mu[i] == UNSEEN {
            mu[i] = -1;
            primes.push(i as u32);
        }
        let mi = mu[i];
        for &p in &primes {
            let p = p as usize;
            let ip = i * p;
            if ip > limit {
                break;
            }
            if i % p == 0 {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mi;
        }
    }
    Ok(MobiusSieve { values: mu })
}

/// M(x) = Σ_{n <= x} μ(n).
pub fn mertens(x: f64, sieve: &MobiusSieve) -> Result<i64> {
    if !(x >= 1.0) {
        return Err(Error::Precondition(format!(
            "mertens requires x >= 1, got {x}"
        )));
    }
    let n = x.floor() as usize;
    sieve.ensure(n)?;
    Ok(sieve.raw()[1..=n].iter().map(|&m| m as i64).sum())
}

/// `∫_1^X (M(x)/x)² dx`, exactly up to rounding: M is constant on each
/// `[n, n+1)`, where the integrand contributes `M(n)² / (n(n+1))`.
pub fn wmh_integral(x_max: f64, sieve: &MobiusSieve) -> Result<f64> {
    if !(x_max >= 1.0) {
        return Err(Error::Precondition(format!(
            "wmh_integral requires X >= 1, got {x_max}"
        )));
    }
    let top = x_max.floor() as usize;
    sieve.ensure(top)?;
    let mu = sieve.raw();
    let mut m = 0i64;
    let mut acc = NeumaierSum::new();
    for (n, &v) in mu.iter().enumerate().take(top).skip(1) {
        m += v as i64;
        let nf = n as f64;
        acc.add((m * m) as f64 / (nf * (nf + 1.0)));
    }
    m += mu[top] as i64;
    let tf = top as f64;
    acc.add((m * m) as f64 * (1.0 / tf - 1.0 / x_max));
    Ok(acc.value())
}

/// Terms needed so the certified tail `b²/(2N²)` is at most `tol`.
pub fn f_direct_cutoff(b: f64, tol: f64) -> u64 {
    (b * (0.5 / tol).sqrt()).ceil().max(1.0) as u64
}

/// A direct evaluation of F together with the tolerance it is certified to.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DirectValue {
    pub value: f64,
    pub tol: f64,
    pub terms: u64,
}

/// Above this many multiples of b the Taylor polynomial of `e^{-y} - 1`
/// replaces `exp_m1` (there y = (b/n)² <= 1e-2).
const TAYLOR_SPLIT: f64 = 10.0;

/// Degree of that polynomial; the relative error is below `0.01^8/8! < 3e-21`.
const TAYLOR_DEGREE: usize = 7;

/// `F(b) = Σ_{n<=N} μ(n)/n · (e^{-(b/n)²} - 1)` for every `b <= b_max` with one
/// fixed N. Terms with `n > 10 b_max` are expanded in powers of `b²`, so the
/// sums `Σ μ(n) n^{-2j-1}` over them are computed once and each evaluation
/// costs `O(b_max)`.
#[derive(Clone, Debug)]
pub struct DirectEvaluator<'a> {
    mu: &'a [i8],
    b_max: f64,
    split: usize,
    terms: usize,
    moments: [f64; TAYLOR_DEGREE],
}

impl<'a> DirectEvaluator<'a> {
    /// Certified to `tol` at `b_max` (and to `b²/(2N²)` below it).
    pub fn new(sieve: &'a MobiusSieve, b_max: f64, tol: f64) -> Result<Self> {
        check_argument(b_max)?;
        if !(tol > 0.0) {
            return Err(Error::Precondition(format!(
                "f_direct requires tol > 0, got {tol}"
            )));
        }
        let n = f_direct_cutoff(b_max, tol);
        sieve.ensure(n as usize)?;
        Ok(Self::with_terms(sieve, b_max, n as usize))
    }

    /// Certified to `target_tol` at `b_max` if the sieve allows, otherwise to the
    /// best tolerance a sieve-length sum gives.
    pub fn within(sieve: &'a MobiusSieve, b_max: f64, target_tol: f64) -> Result<Self> {
        check_argument(b_max)?;
        if !(target_tol > 0.0) {
            return Err(Error::Precondition(format!(
                "target tolerance must be positive, got {target_tol}"
            )));
        }
        let n = f_direct_cutoff(b_max, target_tol).min(sieve.limit() as u64);
        Ok(Self::with_terms(sieve, b_max, n as usize))
    }

    fn with_terms(sieve: &'a MobiusSieve, b_max: f64, terms: usize) -> Self {
        let mu = sieve.raw();
        let split = ((TAYLOR_SPLIT * b_max).ceil() as usize).min(terms);
        Self {
            mu,
            b_max,
            split,
            terms,
            moments: inverse_power_moments(mu, split + 1, terms),
        }
    }

    pub fn terms(&self) -> u64 {
        self.terms as u64
    }

    pub fn b_max(&self) -> f64 {
        self.b_max
    }

    /// Certified truncation error at `b`.
    pub fn tol_at(&self, b: f64) -> f64 {
        let n = self.terms as f64;
        b * b / (2.0 * n * n)
    }

    pub fn eval(&self, b: f64) -> Result<DirectValue> {
        check_argument(b)?;
        if b > self.b_max {
            return Err(Error::Precondition(format!(
                "evaluator built for b <= {}, got {b}",
                self.b_max
            )));
        }
        let b2 = b * b;
        let mut acc = NeumaierSum::new();
        for (n, &m) in self.mu.iter().enumerate().take(self.split + 1).skip(1) {
            if m != 0 {
                let nf = n as f64;
                acc.add(m as f64 / nf * (-(b2 / (nf * nf))).exp_m1());
            }
        }
        // Σ_j (-b²)^j/j! · Σ_n μ(n) n^{-2j-1}
        let mut coef = 1.0;
        for (j, &s) in self.moments.iter().enumerate() {
            coef *= -b2 / (j + 1) as f64;
            acc.add(coef * s);
        }
        Ok(DirectValue {
            value: acc.value(),
            tol: self.tol_at(b),
            terms: self.terms as u64,
        })
    }
}

fn check_argument(b: f64) -> Result<()> {
    if !(b > 0.0 && b.is_finite()) {
        return Err(Error::Precondition(format!(
            "f_direct requires b > 0, got {b}"
        )));
    }
    Ok(())
}

/// `Σ_{lo<=n<=hi} μ(n) n^{-2j-1}` for `j = 1..=TAYLOR_DEGREE`.
fn inverse_power_moments(mu: &[i8], lo: usize, hi: usize) -> [f64; TAYLOR_DEGREE] {
    let mut out = [0.0; TAYLOR_DEGREE];
    if lo > hi {
        return out;
    }
    const LANES: usize = 8;
    let mut lanes = [[0.0f64; LANES]; TAYLOR_DEGREE];
    let mut chunks = mu[lo..=hi].chunks_exact(LANES);
    let mut n0 = lo;
    for chunk in chunks.by_ref() {
        for j in 0..LANES {
            let r = 1.0 / (n0 + j) as f64;
            let r2 = r * r;
            let mut p = chunk[j] as f64 * r * r2;
            for lane in lanes.iter_mut() {
                lane[j] += p;
                p *= r2;
            }
        }
        n0 += LANES;
    }
    for (off, &m) in chunks.remainder().iter().enumerate() {
        let r = 1.0 / (n0 + off) as f64;
        let r2 = r * r;
        let mut p = m as f64 * r * r2;
        for lane in lanes.iter_mut() {
            lane[0] += p;
            p *= r2;
        }
    }
    for (o, lane) in out.iter_mut().zip(lanes.iter()) {
        *o = lane.iter().rev().copied().collect::<NeumaierSum>().value();
    }
    out
}

/// `F(b)` to within `tol` from the absolutely convergent form
/// `Σ_{n<=N} μ(n)/n · (e^{-(b/n)²} - 1)`, which equals F because Σ μ(n)/n = 0.
pub fn f_direct(b: f64, sieve: &MobiusSieve, tol: f64) -> Result<f64> {
    Ok(DirectEvaluator::new(sieve, b, tol)?.eval(b)?.value)
}

/// `f_direct` at the tighter of `target_tol` and the best tolerance the sieve
/// can certify for this `b`.
pub fn f_direct_within(b: f64, sieve: &MobiusSieve, target_tol: f64) -> Result<DirectValue> {
    DirectEvaluator::within(sieve, b, target_tol)?.eval(b)
}
