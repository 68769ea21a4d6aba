//! The `ramlab` command line.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::annulus::{self, DensitySpec};
use crate::error::{Error, Result};
use crate::mobius::{self, DirectEvaluator, MobiusSieve};
use crate::ramanujan::{self, Expansion};
use crate::zeros::{self, ZeroTable};

/// Exit status for a failed `check`.
pub const EXIT_CHECK_FAILED: u8 = 1;
/// Exit status for bad configuration or input data.
pub const EXIT_CONFIG: u8 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroSpec {
    Embedded(usize),
    Compute(usize),
    File(PathBuf),
}

impl FromStr for ZeroSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if let Some(n) = s.strip_prefix("compute:") {
            return n
                .parse()
                .map(ZeroSpec::Compute)
                .map_err(|e| format!("bad zero count {n:?}: {e}"));
        }
        if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
            return s
                .parse()
                .map(ZeroSpec::Embedded)
                .map_err(|e| format!("bad zero count {s:?}: {e}"));
        }
        Ok(ZeroSpec::File(PathBuf::from(s)))
    }
}

impl std::fmt::Display for ZeroSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ZeroSpec::Embedded(n) => write!(f, "embedded:{n}"),
            ZeroSpec::Compute(n) => write!(f, "compute:{n}"),
            ZeroSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ramlab",
    version,
    about = "Möbius series F(b) against sums over zeta zeros"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Args)]
pub struct RunConfig {
    /// Zero ordinates: a count of embedded zeros, `compute:<n>`, or a file path.
    #[arg(long, global = true)]
    pub zeros: Option<ZeroSpec>,
    /// Length of the Möbius sieve.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub sieve_limit: usize,
    /// Number of correction terms.
    #[arg(long = "K", global = true, default_value_t = 50)]
    pub k_terms: usize,
    /// Use only the first <n> ordinates of the table.
    #[arg(long, global = true)]
    pub terms: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Certified tolerance requested of direct evaluations.
    #[arg(long, global = true, default_value_t = ramanujan::DEFAULT_DIRECT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of n, γ_n, |a(γ_n)|.
    Coeffs,
    /// Radii C and c, the classification, and A.
    Radii,
    /// Samples of √b F(b) from both sides of the identity.
    Figure(FigureArgs),
    /// Mean square of F against ln X.
    Moment {
        #[arg(long, default_value_t = 1e4)]
        x_max: f64,
    },
    /// The limiting density, or sampled values of √b F(b) with a KS distance.
    Density(DensityArgs),
    /// P_k(x) directly and from the zeros.
    Riesz {
        #[arg(long, default_value_t = 1.0)]
        k: f64,
        #[arg(long, default_value_t = 100.0)]
        x: f64,
        #[arg(long, default_value_t = ramanujan::DEFAULT_RIESZ_DEPTH)]
        depth: usize,
    },
    /// ∫_1^X (M(x)/x)² dx over decades of X.
    Wmh {
        #[arg(long, default_value_t = 1e6)]
        x_max: f64,
    },
    /// Print the zero table.
    Zeros,
    /// Run the built-in checks.
    Check,
}

#[derive(Clone, Debug, Args)]
pub struct FigureArgs {
    /// 1: [1, 10], 2: [100, 1000], 3: [1000, 20000].
    #[arg(long, conflicts_with_all = ["b_min", "b_max"])]
    pub preset: Option<u8>,
    #[arg(long)]
    pub b_min: Option<f64>,
    #[arg(long)]
    pub b_max: Option<f64>,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
}

#[derive(Clone, Debug, Args)]
pub struct DensityArgs {
    /// Grid points for the density table.
    #[arg(long, default_value_t = 201)]
    pub points: usize,
    /// Sample √b F(b) instead, at this many log-uniform b.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 100.0)]
    pub b_min: f64,
    #[arg(long, default_value_t = 1e6)]
    pub b_max: f64,
}

/// Ranges of the three figures.
pub const FIGURE_PRESETS: [(f64, f64); 3] = [(1.0, 10.0), (100.0, 1000.0), (1000.0, 20000.0)];

/// How a run ended, short of an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    CheckFailed,
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

impl RunConfig {
    fn zero_spec(&self, default: usize) -> ZeroSpec {
        self.zeros.clone().unwrap_or(ZeroSpec::Embedded(default))
    }

    fn load_zeros(&self, default: usize) -> Result<ZeroTable> {
        let table = match self.zero_spec(default) {
            ZeroSpec::Embedded(n) => zeros::load_embedded(n)?,
            ZeroSpec::Compute(n) => zeros::compute_table(n)?,
            ZeroSpec::File(p) => zeros::load_file(p)?,
        };
        match self.terms {
            Some(n) => table.prefix(n),
            None => Ok(table),
        }
    }

    fn sieve(&self) -> Result<MobiusSieve> {
        mobius::sieve(self.sieve_limit)
    }

    fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::Precondition(format!(
                "--tol must be positive, got {}",
                self.tol
            )));
        }
        if self.k_terms < 1 {
            return Err(Error::Precondition("--K must be at least 1".into()));
        }
        Ok(())
    }

    fn header(&self, command: &str, zeros: &ZeroTable) -> String {
        let mut h = String::new();
        let _ = writeln!(h, "# ramlab {command}");
        let _ = writeln!(
            h,
            "# zeros={} used={}",
            self.zero_spec(zeros.len()),
            zeros.len()
        );
        let _ = writeln!(h, "# sieve_limit={}", self.sieve_limit);
        let _ = writeln!(h, "# K={}", self.k_terms);
        let _ = writeln!(h, "# tol={:e}", self.tol);
        h
    }
}

/// Runs one command, writing to `--out` or to `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<Status> {
    cli.config.validate()?;
    let (text, status) = render(cli)?;
    match &cli.config.out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(status)
}

/// Exit code for the result of `run`.
pub fn exit_code(result: &Result<Status>) -> u8 {
    match result {
        Ok(Status::Ok) => 0,
        Ok(Status::CheckFailed) => EXIT_CHECK_FAILED,
        Err(_) => EXIT_CONFIG,
    }
}

fn render(cli: &Cli) -> Result<(String, Status)> {
    let cfg = &cli.config;
    let mut out = String::new();
    let mut status = Status::Ok;
    match &cli.command {
        Command::Coeffs => {
            let table = cfg.load_zeros(10)?;
            out += &cfg.header("coeffs", &table);
            out += "n,gamma,magnitude,re,im\n";
            for (i, c) in ramanujan::coefficients(&table, 1.0)?.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    i + 1,
                    num(c.gamma),
                    num(c.magnitude),
                    num(c.value.re),
                    num(c.value.im)
                );
            }
        }
        Command::Radii => {
            let table = cfg.load_zeros(10)?;
            out += &cfg.header("radii", &table);
            let expansion = Expansion::new(&table)?;
            let a = annulus::second_moment_constant(expansion.coefficients())?;
            let (g, label) = match annulus::expansion_geometry(&expansion) {
                Ok(g) => {
                    let label = g.classification.as_str();
                    (g, label)
                }
                // The radii are still well defined; only the label is withheld.
                Err(Error::Indeterminate { .. }) => {
                    let ranked = annulus::rank_coefficients(expansion.coefficients())?;
                    let mut g = annulus::geometry(&ranked, 0.0)?;
                    g.truncation_tail_bound = expansion.tail_allowance();
                    (g, "indeterminate")
                }
                Err(e) => return Err(e),
            };
            out += "C,c,classification,A,n_used,tail_bound\n";
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                num(g.outer),
                num(g.inner),
                label,
                num(a),
                g.n_used,
                num(g.truncation_tail_bound)
            );
        }
        Command::Figure(args) => {
            let (b_min, b_max) = match (args.preset, args.b_min, args.b_max) {
                (Some(p @ 1..=3), _, _) => FIGURE_PRESETS[p as usize - 1],
                (Some(p), _, _) => {
                    return Err(Error::Precondition(format!("no figure preset {p}")))
                }
                (None, Some(lo), Some(hi)) => (lo, hi),
                (None, None, None) => FIGURE_PRESETS[0],
                _ => {
                    return Err(Error::Precondition(
                        "give both --b-min and --b-max, or --preset".into(),
                    ))
                }
            };
            if !(b_min > 0.0 && b_max > b_min) {
                return Err(Error::Precondition(format!(
                    "figure range needs 0 < b_min < b_max, got [{b_min}, {b_max}]"
                )));
            }
            if args.samples < 2 {
                return Err(Error::Precondition(
                    "figure needs at least 2 samples".into(),
                ));
            }
            let table = cfg.load_zeros(50)?;
            out += &cfg.header("figure", &table);
            let _ = writeln!(
                out,
                "# b_min={b_min} b_max={b_max} samples={}",
                args.samples
            );
            let expansion = Expansion::new(&table)?;
            let sieve = cfg.sieve()?;
            let direct = DirectEvaluator::within(&sieve, b_max, cfg.tol)?;
            let step = (b_max - b_min) / (args.samples - 1) as f64;
            let rows: Vec<String> = (0..args.samples)
                .into_par_iter()
                .map(|i| {
                    let b = if i + 1 == args.samples {
                        b_max
                    } else {
                        b_min + step * i as f64
                    };
                    let r = expansion.evaluate(b, cfg.k_terms, &direct)?;
                    let s = b.sqrt();
                    Ok(format!(
                        "{},{},{},{},{}",
                        num(b),
                        num(s * (r.zerosum + r.corrections)),
                        num(s * r.direct),
                        num(r.residual),
                        num(r.error_bound)
                    ))
                })
                .collect::<Result<_>>()?;
            out += "b,sqrtb_F_zerosum,sqrtb_F_direct,residual,error_bound\n";
            for r in rows {
                out += &r;
                out.push('\n');
            }
        }
        Command::Moment { x_max } => {
            let table = cfg.load_zeros(50)?;
            out += &cfg.header("moment", &table);
            let sieve = cfg.sieve()?;
            let a = annulus::second_moment_constant(&ramanujan::coefficients(&table, 1.0)?)?;
            let m = annulus::empirical_second_moment(*x_max, &sieve)?;
            let _ = writeln!(out, "# A={}", num(a));
            let _ = writeln!(out, "# fitted_slope={}", num(m.fitted_slope));
            let _ = writeln!(out, "# slope_over_A={}", num(m.fitted_slope / a));
            let _ = writeln!(out, "# max_direct_tol={}", num(m.max_tol));
            out += "X,integral\n";
            for (x, v) in &m.grid {
                let _ = writeln!(out, "{},{}", num(*x), num(*v));
            }
        }
        Command::Density(args) => {
            let table = cfg.load_zeros(50)?;
            out += &cfg.header("density", &table);
            let expansion = Expansion::new(&table)?;
            match args.samples {
                None => {
                    let g = annulus::expansion_geometry(&expansion)?;
                    let spec = DensitySpec::from_geometry(&g)?;
                    let a = annulus::second_moment_constant(expansion.coefficients())?;
                    summary_line(&mut out, &g, a, None);
                    if args.points < 2 {
                        return Err(Error::Precondition(
                            "density needs at least 2 points".into(),
                        ));
                    }
                    out += "x,p_model,cdf_model\n";
                    for i in 0..args.points {
                        let x = -g.outer + 2.0 * g.outer * i as f64 / (args.points - 1) as f64;
                        let _ = writeln!(
                            out,
                            "{},{},{}",
                            num(x),
                            num(annulus::density(&spec, x)?),
                            num(annulus::cdf(&spec, x)?)
                        );
                    }
                }
                Some(n) => {
                    let r = annulus::distribution_compare(args.b_min, args.b_max, n, &expansion)?;
                    summary_line(&mut out, &r.geometry, r.second_moment, Some(r.ks_distance));
                    let _ = writeln!(out, "# min={} max={}", num(r.min), num(r.max));
                    out += "sample_b,sqrtb_F\n";
                    for (b, v) in &r.samples {
                        let _ = writeln!(out, "{},{}", num(*b), num(*v));
                    }
                }
            }
        }
        Command::Riesz { k, x, depth } => {
            let table = cfg.load_zeros(50)?;
            out += &cfg.header("riesz", &table);
            let sieve = cfg.sieve()?;
            let direct = ramanujan::riesz_direct(*k, *x, &sieve, cfg.tol)?;
            let expansion = ramanujan::riesz_expansion(*k, *x, &table, *depth)?;
            out += "k,x,direct,expansion,difference\n";
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                num(*k),
                num(*x),
                num(direct),
                num(expansion),
                num(expansion - direct)
            );
        }
        Command::Wmh { x_max } => {
            if !(*x_max >= 10.0) {
                return Err(Error::Precondition(format!(
                    "wmh needs X >= 10, got {x_max}"
                )));
            }
            let sieve = cfg.sieve()?;
            let _ = writeln!(out, "# ramlab wmh\n# sieve_limit={}", cfg.sieve_limit);
            out += "X,integral,ratio\n";
            let mut x: f64 = 10.0;
            loop {
                let x_eff = x.min(*x_max);
                let v = mobius::wmh_integral(x_eff, &sieve)?;
                let _ = writeln!(out, "{},{},{}", num(x_eff), num(v), num(v / x_eff.ln()));
                if x_eff >= *x_max {
                    break;
                }
                x *= 10.0;
            }
        }
        Command::Zeros => {
            let table = cfg.load_zeros(zeros::EMBEDDED_CAPACITY)?;
            out += &table.to_text();
        }
        Command::Check => {
            let report = run_checks(cfg)?;
            if report.iter().any(|c| !c.passed) {
                status = Status::CheckFailed;
            }
            out += "# ramlab check\n";
            for c in report {
                let _ = writeln!(
                    out,
                    "{} {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
        }
    }
    Ok((out, status))
}

fn summary_line(out: &mut String, g: &annulus::AnnulusGeometry, a: f64, ks: Option<f64>) {
    let _ = write!(
        out,
        "# summary C={} c={} classification={} A={}",
        num(g.outer),
        num(g.inner),
        g.classification.as_str(),
        num(a)
    );
    if let Some(ks) = ks {
        let _ = write!(out, " KS={}", num(ks));
    }
    out.push('\n');
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome {
        name,
        passed,
        detail,
    }
}

/// Fast versions of the acceptance checks.
pub fn run_checks(cfg: &RunConfig) -> Result<Vec<CheckOutcome>> {
    let table = cfg.load_zeros(50)?;
    let sieve = cfg.sieve()?;
    let expansion = Expansion::new(&table)?;
    let mut out = Vec::new();

    let g = annulus::expansion_geometry(&expansion)?;
    let a = annulus::second_moment_constant(expansion.coefficients())?;
    out.push(outcome(
        "radii",
        g.outer >= g.inner && g.inner > 0.0,
        format!(
            "C={:.10e} c={:.10e} {} A={a:.10e}",
            g.outer,
            g.inner,
            g.classification.as_str()
        ),
    ));

    // identity residual on a log grid of b in [π, min(10^4, sieve reach)]
    let b_top = 1e4f64.min(sieve.limit() as f64 / 1e3).max(2.0 * PI);
    let direct = DirectEvaluator::within(&sieve, b_top, cfg.tol)?;
    let n = 40;
    let records: Vec<ramanujan::EvalRecord> = (0..n)
        .into_par_iter()
        .map(|i| {
            let b = PI * (b_top / PI).powf(i as f64 / (n - 1) as f64);
            expansion.evaluate(b.min(b_top), cfg.k_terms, &direct)
        })
        .collect::<Result<_>>()?;
    let worst = records
        .iter()
        .map(|r| r.residual - r.error_bound)
        .fold(f64::NEG_INFINITY, f64::max);
    out.push(outcome(
        "identity residual",
        records.iter().all(|r| r.within_bound()),
        format!("{n} points in [π, {b_top}], max residual - bound = {worst:.3e}"),
    ));

    let k1 = expansion.evaluate(PI, 1, &direct)?;
    out.push(outcome(
        "K = 1 at b = π",
        k1.within_bound(),
        format!("residual {:.3e}, bound {:.3e}", k1.residual, k1.error_bound),
    ));

    let spec_a = DensitySpec::from_geometry(&g)?;
    let spec_d = DensitySpec::disk(g.outer)?;
    let ia = annulus::density_integral(&spec_a)?;
    let id = annulus::density_integral(&spec_d)?;
    out.push(outcome(
        "density normalization",
        (ia - 1.0).abs() <= 1e-9 && (id - 1.0).abs() <= 1e-9,
        format!("annulus {ia:.15}, disk {id:.15}"),
    ));

    let x_top = (sieve.limit() as f64).min(1e6);
    let base = mobius::wmh_integral(1e3f64.min(x_top), &sieve)? / 1e3f64.min(x_top).ln();
    let mut largest: f64 = base;
    let mut x = 1e3;
    while x <= x_top {
        largest = largest.max(mobius::wmh_integral(x, &sieve)? / x.ln());
        x *= 10.0;
    }
    out.push(outcome(
        "wmh ratio",
        largest <= 2.0 * base,
        format!("ratio at 10^3 {base:.6}, largest {largest:.6}"),
    ));

    let riesz_sieve_ok = sieve.limit() >= 1_000_000;
    if riesz_sieve_ok {
        let x = 100.0;
        let d = ramanujan::riesz_direct(1.0, x, &sieve, 1e-12)?;
        let e = ramanujan::riesz_expansion(1.0, x, &table, ramanujan::DEFAULT_RIESZ_DEPTH)?;
        out.push(outcome(
            "riesz expansion",
            (d - e).abs() <= 1e-6,
            format!("k=1 x=100 difference {:.3e}", (d - e).abs()),
        ));
    }
    Ok(out)
}
