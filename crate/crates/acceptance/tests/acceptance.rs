//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use num_complex::Complex64;
use ramanujan_lab::annulus::{self, DensitySpec};
use ramanujan_lab::cli::{self, Cli};
use ramanujan_lab::mobius::{self, DirectEvaluator, MobiusSieve};
use ramanujan_lab::ramanujan::{self, Expansion};
use ramanujan_lab::special::{log_gamma, log_reflection};
use ramanujan_lab::zeros::{self, load_embedded};
use ramanujan_lab::Result;

const TABLE: [f64; 10] = [
    2.9255e-5, 8.2702e-8, 2.8609e-9, 4.0789e-11, 5.2534e-12, 9.4006e-14, 8.7272e-15, 1.0550e-15,
    3.0507e-17, 8.3287e-18,
];
const TABLE_REL: f64 = 5e-4;
const OUTER: f64 = 0.000_029_341_4;
const INNER: f64 = 0.000_029_170_2;
const RADII_ABS: f64 = 0.5e-10;
const RADII_500_REL: f64 = 1e-10;
const IDENTITY_SAMPLES: usize = 200;
const IDENTITY_B_MAX: f64 = 1e4;
const IDENTITY_ZEROS: usize = 50;
const IDENTITY_K: usize = 50;
const IDENTITY_SLACK: f64 = 1e-8;
const DIRECT_TOL: f64 = 1e-10;
const NORMALIZATION_TOL: f64 = 1e-9;
const MOMENT_X_MAX: f64 = 1e4;
const MOMENT_SLOPE_REL: f64 = 0.25;
const CALIBRATION_TOL: f64 = 1e-3;
const RIESZ_IDENTITY_TOL: f64 = 1e-10;
const RIESZ_EXPANSION_TOL: f64 = 1e-6;
const WMH_GROWTH: f64 = 2.0;
const STIRLING_WINDOW: f64 = 1.0;
const REFLECTION_REL: f64 = 1e-11;
const RVM_WINDOW: f64 = 2.0;

struct Context {
    sieve: &'static MobiusSieve,
    expansion50: Expansion,
    direct: DirectEvaluator<'static>,
}

type Outcome = Result<(bool, String)>;
type Criterion = (&'static str, fn(&Context) -> Outcome);

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let r = (hi / lo).ln() / (n - 1) as f64;
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo * (r * i as f64).exp()
            }
        })
        .collect()
}

fn table_reproduction(_: &Context) -> Outcome {
    let coeffs = ramanujan::coefficients(&load_embedded(10)?, 1.0)?;
    let worst = coeffs
        .iter()
        .zip(TABLE)
        .map(|(c, t)| (c.magnitude - t).abs() / t)
        .fold(0.0, f64::max);
    Ok((
        worst <= TABLE_REL,
        format!("max relative deviation {worst:.2e}"),
    ))
}

fn radii_reproduction(_: &Context) -> Outcome {
    let (g10, _) = annulus::radii_and_moment(&load_embedded(10)?)?;
    let (g500, _) = annulus::radii_and_moment(&load_embedded(500)?)?;
    let d_outer = (g10.outer - OUTER).abs();
    let d_inner = (g10.inner - INNER).abs();
    let r_outer = (g500.outer - g10.outer).abs() / g10.outer;
    let r_inner = (g500.inner - g10.inner).abs() / g10.inner;
    let ok = d_outer <= RADII_ABS
        && d_inner <= RADII_ABS
        && r_outer <= RADII_500_REL
        && r_inner <= RADII_500_REL;
    Ok((
        ok,
        format!(
            "C = {:.10e}, c = {:.10e}; 500 vs 10 zeros: {r_outer:.1e}, {r_inner:.1e}",
            g10.outer, g10.inner
        ),
    ))
}

fn identity_residual(ctx: &Context) -> Outcome {
    let mut worst = (0.0, 0.0, 0.0);
    let mut failures = 0;
    for b in log_grid(PI, IDENTITY_B_MAX, IDENTITY_SAMPLES) {
        let r = ctx.expansion50.evaluate(b, IDENTITY_K, &ctx.direct)?;
        if r.residual > r.error_bound + IDENTITY_SLACK {
            failures += 1;
        }
        if r.residual > worst.1 {
            worst = (b, r.residual, r.error_bound);
        }
    }
    Ok((
        failures == 0,
        format!(
            "{failures} violations; largest residual {:.2e} at b = {:.1} (bound {:.2e})",
            worst.1, worst.0, worst.2
        ),
    ))
}

fn theorem_envelope(ctx: &Context) -> Outcome {
    let e = &ctx.expansion50;
    let outer = e.coefficients().iter().map(|c| c.magnitude).sum::<f64>() + e.tail_allowance();
    let mut failures = 0;
    let mut tightest = f64::INFINITY;
    for b in log_grid(PI, IDENTITY_B_MAX, IDENTITY_SAMPLES) {
        let fb = ctx.direct.eval(b)?;
        let fr = ctx.direct.eval(PI / b)?;
        let lhs = b.sqrt() * fb.value.abs();
        let rhs = outer + (PI / b).sqrt() * fr.value.abs();
        let allowance = b.sqrt() * fb.tol + (PI / b).sqrt() * fr.tol;
        if lhs > rhs + allowance {
            failures += 1;
        }
        tightest = tightest.min((rhs + allowance - lhs) / rhs);
    }
    Ok((
        failures == 0,
        format!("{failures} violations; smallest relative margin {tightest:.2e}"),
    ))
}

fn density_normalization(_: &Context) -> Outcome {
    let (g, _) = annulus::radii_and_moment(&load_embedded(10)?)?;
    let specs = [
        DensitySpec::from_geometry(&g)?,
        DensitySpec::disk(g.outer)?,
        DensitySpec::annulus(2.0, 1.0)?,
        DensitySpec::disk(1.0)?,
    ];
    let mut worst: f64 = 0.0;
    for s in &specs {
        worst = worst.max((annulus::density_integral(s)? - 1.0).abs());
        worst = worst.max((annulus::cdf(s, s.outer)? - annulus::cdf(s, -s.outer)? - 1.0).abs());
    }
    Ok((
        worst <= NORMALIZATION_TOL,
        format!("max |∫p - 1| = {worst:.1e} over annulus and disk branches"),
    ))
}

fn second_moment(ctx: &Context) -> Outcome {
    let a = annulus::second_moment_constant(ctx.expansion50.coefficients())?;
    let m = annulus::empirical_second_moment(MOMENT_X_MAX, ctx.sieve)?;
    let ratio = m.fitted_slope / a;
    let late = m.slope_from(MOMENT_X_MAX / 10.0)? / a;
    let cal = annulus::second_moment_with(|x: f64| Ok(x.powf(-0.5)), MOMENT_X_MAX)?;
    let ok = (ratio - 1.0).abs() <= MOMENT_SLOPE_REL
        && (cal.fitted_slope - 1.0).abs() <= CALIBRATION_TOL;
    Ok((
        ok,
        format!(
            "slope/A = {ratio:.4} over [1e2, 1e4] ({late:.4} over [1e3, 1e4]); calibration slope {:.6}",
            cal.fitted_slope
        ),
    ))
}

fn riesz_identities(ctx: &Context) -> Outcome {
    let mut d_identity: f64 = 0.0;
    for x in [2.0, 5.0, 10.0] {
        let p = ramanujan::riesz_direct(1.0, x * x, ctx.sieve, DIRECT_TOL * 1e-2)?;
        let f = mobius::f_direct(x, ctx.sieve, DIRECT_TOL * 1e-2)?;
        d_identity = d_identity.max((p - f).abs());
    }
    let zeros = load_embedded(IDENTITY_ZEROS)?;
    let mut d_expansion: f64 = 0.0;
    for k in [1.0, 2.0] {
        let e = ramanujan::riesz_expansion(k, 100.0, &zeros, ramanujan::DEFAULT_RIESZ_DEPTH)?;
        let d = ramanujan::riesz_direct(k, 100.0, ctx.sieve, DIRECT_TOL * 1e-2)?;
        d_expansion = d_expansion.max((e - d).abs());
    }
    Ok((
        d_identity <= RIESZ_IDENTITY_TOL && d_expansion <= RIESZ_EXPANSION_TOL,
        format!("|P_1(x²) - F(x)| ≤ {d_identity:.1e}; |expansion - direct| ≤ {d_expansion:.1e}"),
    ))
}

fn wmh_ratio(ctx: &Context) -> Outcome {
    let ratios = [1e3, 1e4, 1e5, 1e6]
        .iter()
        .map(|&x: &f64| Ok(mobius::wmh_integral(x, ctx.sieve)? / x.ln()))
        .collect::<Result<Vec<f64>>>()?;
    let ok = ratios.iter().all(|&r| r <= WMH_GROWTH * ratios[0]);
    let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.4}")).collect();
    Ok((ok, format!("ratios {}", shown.join(", "))))
}

fn stirling_window() -> (bool, String) {
    let mut worst: f64 = 0.0;
    for i in 0..=490 {
        let g = 10.0 + i as f64;
        let v = log_gamma(Complex64::new(0.25, -0.5 * g))
            .map(|z| z.re)
            .unwrap_or(f64::NAN);
        let gap = (v + PI * g / 4.0 + 0.25 * g.ln()).abs();
        worst = if gap.is_nan() {
            f64::NAN
        } else {
            worst.max(gap)
        };
    }
    (
        worst <= STIRLING_WINDOW,
        format!("stirling gap {worst:.4} vs window {STIRLING_WINDOW}"),
    )
}

fn reflection() -> (bool, String) {
    let mut worst: f64 = 0.0;
    for i in 1..=40 {
        for j in 0..64 {
            let s = Complex64::from_polar(0.5 * i as f64, (j as f64 + 0.37) * PI / 32.0);
            let Ok(a) = log_gamma(s) else {
                return (false, format!("log_gamma({s}) failed"));
            };
            let Ok(b) = log_gamma(1.0 - s) else {
                return (false, format!("log_gamma({}) failed", 1.0 - s));
            };
            let rhs = log_reflection(s);
            let mut d = a + b - rhs;
            d.im -= 2.0 * PI * (d.im / (2.0 * PI)).round();
            worst = worst.max(d.norm() / (1.0 + rhs.norm()));
        }
    }
    (worst <= REFLECTION_REL, format!("reflection {worst:.1e}"))
}

fn factor_mu(mut n: u64) -> i8 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn sieve_oracle(ctx: &Context) -> (bool, String) {
    let bad = (1..=10_000u64)
        .filter(|&n| ctx.sieve.mu(n as usize) != factor_mu(n))
        .count();
    (bad == 0, format!("sieve mismatches {bad}"))
}

fn zero_count() -> (bool, String) {
    let Ok(table) = load_embedded(zeros::EMBEDDED_CAPACITY) else {
        return (false, "embedded table unavailable".into());
    };
    let mut worst: f64 = 0.0;
    let mut t = 15.0;
    while t <= table.last() {
        worst = worst.max((table.count_below(t) as f64 - zeros::riemann_von_mangoldt(t)).abs());
        t += 0.25;
    }
    (
        worst <= RVM_WINDOW,
        format!("zero count deviation {worst:.3}"),
    )
}

fn density_evenness(ctx: &Context) -> (bool, String) {
    let Ok(g) = annulus::expansion_geometry(&ctx.expansion50) else {
        return (false, "geometry unavailable".into());
    };
    let (Ok(a), Ok(d)) = (DensitySpec::from_geometry(&g), DensitySpec::disk(g.outer)) else {
        return (false, "density spec unavailable".into());
    };
    let specs = [a, d];
    let mut odd = 0;
    for s in &specs {
        for i in 0..=1000 {
            let x = s.outer * (i as f64 / 1000.0) * 1.1;
            if annulus::density(s, x).ok() != annulus::density(s, -x).ok() {
                odd += 1;
            }
        }
    }
    (odd == 0, format!("density asymmetries {odd}"))
}

fn csv_determinism() -> (bool, String) {
    let args = Cli::parse_from([
        "ramlab",
        "--sieve-limit",
        "10000000",
        "figure",
        "--preset",
        "2",
        "--samples",
        "100",
    ]);
    let run = || {
        let mut buf = Vec::new();
        cli::run(&args, &mut buf).map(|_| buf)
    };
    match (run(), run()) {
        (Ok(a), Ok(b)) => (a == b, format!("csv runs identical: {}", a == b)),
        _ => (false, "figure run failed".into()),
    }
}

fn property_suites(ctx: &Context) -> Outcome {
    let parts = [
        stirling_window(),
        reflection(),
        sieve_oracle(ctx),
        zero_count(),
        density_evenness(ctx),
        csv_determinism(),
    ];
    let ok = parts.iter().all(|p| p.0);
    let detail: Vec<String> = parts
        .iter()
        .map(|(pass, d)| format!("{} {d}", if *pass { "ok" } else { "FAILED" }))
        .collect();
    Ok((ok, detail.join("; ")))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let sieve = mobius::sieve(mobius::MAX_SIEVE_LIMIT).expect("sieve");
    // The evaluator borrows the sieve for the whole run.
    let sieve: &'static MobiusSieve = Box::leak(Box::new(sieve));
    let ctx = Context {
        sieve,
        expansion50: Expansion::new(&load_embedded(IDENTITY_ZEROS).expect("zeros"))
            .expect("expansion"),
        direct: DirectEvaluator::within(sieve, IDENTITY_B_MAX, DIRECT_TOL).expect("evaluator"),
    };
    println!("acceptance: setup {:.1}s", start.elapsed().as_secs_f64());

    let criteria: [Criterion; 9] = [
        ("table reproduction", table_reproduction),
        ("radii reproduction", radii_reproduction),
        ("identity residual", identity_residual),
        ("theorem envelope", theorem_envelope),
        ("density normalization", density_normalization),
        ("second moment", second_moment),
        ("riesz identities", riesz_identities),
        ("wmh ratio", wmh_ratio),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (pass, detail) = match check(&ctx) {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "{} criterion {} ({name}): {detail} [{:.1}s]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            t.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
