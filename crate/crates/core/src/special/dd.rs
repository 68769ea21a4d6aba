//! Minimal double-double arithmetic, used where the phase `t log n` must be
//! reduced modulo 2π without losing the low-order bits.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };

    /// 2π to roughly 32 digits.
    pub const TWO_PI: Self = Self {
        hi: std::f64::consts::TAU,
        lo: 2.449_293_598_294_706_4e-16,
    };

    pub const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    /// Quotient `a / b` of two doubles, correct to double-double precision.
    pub fn div_f64s(a: f64, b: f64) -> Self {
        let q1 = a / b;
        let r = (-q1).mul_add(b, a);
        let q2 = r / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let (p, e) = two_prod(q1, b);
        let (s, f) = two_sum(self.hi, -p);
        let r = s + (f - e + self.lo);
        let q2 = r / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let e = self.lo.mul_add(b, e);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Representative of `self` modulo 2π in [-π, π], rounded to a double.
    pub fn rem_two_pi(self) -> f64 {
        let q = (self.hi / Self::TWO_PI.hi).round();
        (self - Self::TWO_PI.mul_f64(q)).to_f64()
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let e = e + t;
        let (s, e) = quick_two_sum(s, e);
        let e = e + f;
        let (hi, lo) = quick_two_sum(s, e);
        Self { hi, lo }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

/// Number of entries in the shared `ln n` table.
pub const LN_TABLE_LEN: usize = 8192;

/// `ln n` in double-double for `1 <= n < LN_TABLE_LEN` (index 0 is unused).
///
/// Built incrementally from `ln(n+1) = ln n + 2 atanh(1/(2n+1))`.
pub fn ln_table() -> &'static [DoubleDouble] {
    static TABLE: OnceLock<Vec<DoubleDouble>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = vec![DoubleDouble::ZERO; LN_TABLE_LEN];
        let mut acc = DoubleDouble::ZERO;
        for n in 1..LN_TABLE_LEN - 1 {
            acc = acc + atanh_inv_odd(2 * n as u64 + 1).mul_f64(2.0);
            table[n + 1] = acc;
        }
        table
    })
}

/// `atanh(1/m)` for odd `m >= 3`.
fn atanh_inv_odd(m: u64) -> DoubleDouble {
    let x = DoubleDouble::div_f64s(1.0, m as f64);
    let x2 = x * x;
    let mut power = x;
    let mut acc = x;
    let mut j = 1u32;
    loop {
        power = power * x2;
        let term = power.div_f64((2 * j + 1) as f64);
        acc = acc + term;
        if term.hi.abs() < 1e-34 * acc.hi.abs() {
            break;
        }
        j += 1;
    }
    acc
}

/// `ln n` in double-double; falls back to a double-only value beyond the table.
pub fn ln_int(n: u64) -> DoubleDouble {
    let table = ln_table();
    if (n as usize) < LN_TABLE_LEN {
        table[n as usize]
    } else {
        DoubleDouble::from_f64((n as f64).ln())
    }
}
