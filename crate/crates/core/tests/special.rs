use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Ratio;
use proptest::prelude::*;
use ramanujan_lab::special::*;
use ramanujan_lab::Error;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn log_gamma_known_values() {
    assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
    assert!((log_gamma(c(0.5, 0.0)).unwrap().re - 0.572_364_942_924_700_1).abs() < 1e-14);
    let v = log_gamma(c(0.25, -7.067_363_2)).unwrap();
    assert!((v.re + 10.671_164_576_781_406).abs() < 1e-12, "{v}");
    assert!((v.im + 6.361_552_132_459_124).abs() < 1e-12, "{v}");
}

#[test]
fn log_gamma_poles() {
    for s in [0.0, -1.0, -7.0] {
        assert!(matches!(log_gamma(c(s, 0.0)), Err(Error::Domain(_))));
    }
}

#[test]
fn stirling_limit_constant() {
    // Re ln Γ(1/4 - iγ/2) + πγ/4 + (1/4) ln γ → (1/2) ln 2π + (1/4) ln 2
    let limit = 0.5 * (2.0 * PI).ln() + 0.25 * 2f64.ln();
    for i in 0..=49 {
        let g = 10.0 + 10.0 * i as f64;
        let v = log_gamma(c(0.25, -0.5 * g)).unwrap().re;
        let gap = v + PI * g / 4.0 + 0.25 * g.ln();
        assert!((gap - limit).abs() < 0.01, "γ = {g}: {gap}");
    }
}

#[test]
fn zeta_prime_at_first_zeros() {
    let d1 = zeta_prime_at_zero(14.134_725_141_734_695).unwrap();
    assert!((d1.norm() - 0.793_160_433_356_506).abs() < 1e-9, "{d1}");
    assert!((d1.re - 0.7832).abs() < 1e-4);
    let d2 = zeta_prime_at_zero(21.022_039_638_771_556).unwrap();
    assert!((d2.norm() - 1.136_839_106_827_975).abs() < 1e-9, "{d2}");
    assert!((d2.re - 1.109).abs() < 1e-3);
}

#[test]
fn off_zero_ordinate_is_flagged_by_residual() {
    assert!(zero_residual(15.0).unwrap() > 0.5);
    assert!(zero_residual(14.134_725_141_734_695).unwrap() < 1e-12);
    // the derivative there is still ζ'(1/2 + 15i), not a zero's derivative
    let d = zeta_prime_at_zero(15.0).unwrap();
    assert!(
        (d - c(0.769_524_540_108_257, -0.480_551_062_527_432)).norm() < 1e-8,
        "{d}"
    );
}

#[test]
fn zeta_off_zero_value() {
    let z = zeta_critical(15.0).unwrap();
    assert!((z - c(0.147_109_907_043_349, 0.704_752_241_643_212)).norm() < 1e-13);
}

#[test]
fn hyp1f1_brute_force() {
    let v = hyp1f1_half(2.0, c(-1.0, 0.0)).unwrap();
    assert!((v.re + 0.076_159_013_825_536_84).abs() < 1e-15, "{v}");
    let v = hyp1f1_half(3.0, c(-7.3, 2.0)).unwrap();
    let want = c(0.001_366_214_529_942_212, -0.009_478_506_409_111_798);
    assert!((v - want).norm() < 1e-15, "{v}");
    let x: f64 = 0.5;
    let v = hyp1f1_half(1.0, c(-x * x, 0.0)).unwrap();
    assert!((v.re - (-x * x).exp()).abs() < 4e-16);
}

#[test]
fn hyp1f1_rational_coefficients() {
    type Q = Ratio<i128>;
    for k in [1i128, 2, 3] {
        let a = Q::new(k, 2);
        let half = Q::new(1, 2);
        let coeffs = hyp1f1_series_coefficients(k as f64, 11);
        let mut exact = Q::from_integer(1);
        for j in 0..=10i128 {
            let ratio = (a + j) / ((half + j) * (j + 1));
            let got = hyp1f1_coefficient_ratio(k as f64 / 2.0, j as usize);
            let want = *ratio.numer() as f64 / *ratio.denom() as f64;
            assert_eq!(got, want, "k = {k}, j = {j}");
            let c = *exact.numer() as f64 / *exact.denom() as f64;
            assert!(
                (coeffs[j as usize] - c).abs() <= 4.0 * f64::EPSILON * c,
                "k = {k}, j = {j}"
            );
            // c_{j+1} = c_j (a+j)/((1/2+j)(j+1)) holds in exact arithmetic
            let next = exact * ratio;
            assert_eq!(next / exact, ratio);
            exact = next;
        }
    }
}

#[test]
fn hyp1f1_limits() {
    assert!(matches!(
        hyp1f1_half(1.0, c(0.0, 51.0)),
        Err(Error::Range(_))
    ));
    assert_eq!(HYP1F1_MAX_ARGUMENT, 50.0);
}

#[test]
fn zeta_odd_examples() {
    assert!((zeta_odd(3).unwrap() - 1.202_056_903_2).abs() < 1e-10);
    assert_eq!(zeta_odd(201).unwrap(), 1.0);
    assert!(zeta_odd(4).is_err());
}

/// `a - b` reduced to (-π, π] in the imaginary part.
fn mod_two_pi_i(d: Complex64) -> Complex64 {
    let k = (d.im / (2.0 * PI)).round();
    c(d.re, d.im - 2.0 * PI * k)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn reflection_formula(r in 0.0f64..20.0, phi in 0.0f64..(2.0 * PI)) {
        let s = Complex64::from_polar(r, phi);
        // stay clear of the poles on the real axis
        prop_assume!(s.im.abs() > 1e-3 || (s.re - s.re.round()).abs() > 1e-3);
        let lhs = log_gamma(s).unwrap() + log_gamma(1.0 - s).unwrap();
        let rhs = log_reflection(s);
        let d = mod_two_pi_i(lhs - rhs);
        let scale = 1.0 + rhs.norm();
        prop_assert!(d.norm() <= 1e-11 * scale, "s = {}, diff = {}", s, d);
    }

    #[test]
    fn gamma_recurrence(re in -10.0f64..10.0, im in 0.5f64..40.0) {
        let s = c(re, im);
        let d = mod_two_pi_i(log_gamma(s + 1.0).unwrap() - log_gamma(s).unwrap() - s.ln());
        prop_assert!(d.norm() < 1e-11 * (1.0 + s.norm()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, ..ProptestConfig::default() })]

    #[test]
    fn hardy_z_is_real(t in 1.0f64..500.0) {
        let z = hardy_z_complex(t).unwrap();
        prop_assert!(z.im.abs() <= 1e-9, "t = {}, Z = {}", t, z);
        prop_assert!(z.re.is_finite());
    }

    #[test]
    fn zeta_conjugate_argument(t in 0.0f64..2000.0) {
        let (z, bound) = zeta_critical_with_bound(t).unwrap();
        prop_assert!(z.re.is_finite() && z.im.is_finite());
        prop_assert!(bound <= 1e-12);
    }
}
