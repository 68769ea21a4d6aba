//! Value distribution of `√b F(b)`: the radii C and c, the annulus-or-disk
//! question, the limiting density, and the mean square `∫_1^X F(x)² dx`.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mobius::{DirectEvaluator, MobiusSieve};
use crate::ramanujan::{self, Coefficient, Expansion};
use crate::sum::NeumaierSum;
use crate::zeros::ZeroTable;

/// Sorted by descending magnitude; equal magnitudes keep ascending γ.
pub fn rank_coefficients(coeffs: &[Coefficient]) -> Result<Vec<Coefficient>> {
    if coeffs.is_empty() {
        return Err(Error::Precondition("empty coefficient list".into()));
    }
    Ok(ramanujan::descending_order(coeffs)
        .into_iter()
        .map(|i| coeffs[i])
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Annulus,
    Disk,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Annulus => "annulus",
            Classification::Disk => "disk",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnnulusGeometry {
    /// C = Σ |a(γ_n)| over the coefficients used.
    pub outer: f64,
    /// c = |a(γ_1)| - Σ_{n>=2} |a(γ_n)|.
    pub inner: f64,
    pub classification: Classification,
    pub n_used: usize,
    pub truncation_tail_bound: f64,
}

/// Radii from ranked coefficients.
///
/// Unused zeros can only raise C and lower c, by at most `tail_bound` in
/// total. So `c > tail_bound` certifies an annulus and `c <= 0` a disk; in
/// between the answer is refused.
pub fn geometry(ranked: &[Coefficient], tail_bound: f64) -> Result<AnnulusGeometry> {
    if ranked.windows(2).any(|w| w[0].magnitude < w[1].magnitude) {
        return Err(Error::Precondition("coefficients are not ranked".into()));
    }
    let mags: Vec<f64> = ranked.iter().map(|c| c.magnitude).collect();
    geometry_from_magnitudes(&mags, tail_bound)
}

/// `geometry` on bare magnitudes, largest first.
pub fn geometry_from_magnitudes(mags: &[f64], tail_bound: f64) -> Result<AnnulusGeometry> {
    let (&first, rest) = mags
        .split_first()
        .ok_or_else(|| Error::Precondition("empty coefficient list".into()))?;
    if !(tail_bound >= 0.0) {
        return Err(Error::Precondition(format!(
            "tail bound must be >= 0, got {tail_bound}"
        )));
    }
    if !(first > 0.0) || rest.iter().any(|&m| !(m >= 0.0) || m > first) {
        return Err(Error::Precondition(
            "magnitudes must be nonnegative with a positive maximum first".into(),
        ));
    }
    let rest_sum: f64 = rest.iter().rev().copied().collect::<NeumaierSum>().value();
    let outer = first + rest_sum;
    let inner = first - rest_sum;
    let classification = if inner > tail_bound {
        Classification::Annulus
    } else if inner <= 0.0 {
        Classification::Disk
    } else {
        return Err(Error::Indeterminate {
            inner,
            tail: tail_bound,
        });
    };
    Ok(AnnulusGeometry {
        outer,
        inner,
        classification,
        n_used: mags.len(),
        truncation_tail_bound: tail_bound,
    })
}

/// Geometry of an expansion, with its envelope tail as the bound.
pub fn expansion_geometry(expansion: &Expansion) -> Result<AnnulusGeometry> {
    let ranked = rank_coefficients(expansion.coefficients())?;
    geometry(&ranked, expansion.tail_allowance())
}

/// A = ½ Σ |a(γ)|².
pub fn second_moment_constant(coeffs: &[Coefficient]) -> Result<f64> {
    if coeffs.is_empty() {
        return Err(Error::Precondition("empty coefficient list".into()));
    }
    let mut mags: Vec<f64> = coeffs.iter().map(|c| c.magnitude * c.magnitude).collect();
    mags.sort_by(f64::total_cmp);
    Ok(0.5 * mags.into_iter().collect::<NeumaierSum>().value())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensitySpec {
    pub outer: f64,
    /// Ignored for a disk.
    pub inner: f64,
    pub classification: Classification,
}

impl DensitySpec {
    pub fn annulus(outer: f64, inner: f64) -> Result<Self> {
        let s = Self {
            outer,
            inner,
            classification: Classification::Annulus,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn disk(outer: f64) -> Result<Self> {
        let s = Self {
            outer,
            inner: 0.0,
            classification: Classification::Disk,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn from_geometry(g: &AnnulusGeometry) -> Result<Self> {
        match g.classification {
            Classification::Annulus => Self::annulus(g.outer, g.inner),
            Classification::Disk => Self::disk(g.outer),
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.outer > 0.0 && self.outer.is_finite()) {
            return Err(Error::Precondition(format!(
                "outer radius must be positive, got {}",
                self.outer
            )));
        }
        if self.classification == Classification::Annulus
            && !(self.inner > 0.0 && self.inner < self.outer)
        {
            return Err(Error::Precondition(format!(
                "annulus needs 0 < c < C, got c = {}, C = {}",
                self.inner, self.outer
            )));
        }
        Ok(())
    }
}

/// √(R² - x²), zero outside [-R, R].
fn half_chord(r: f64, x: f64) -> f64 {
    ((r - x.abs()).max(0.0) * (r + x.abs())).sqrt()
}

/// `∫_{-R}^{x} √(R² - t²) dt`.
fn semicircle_area(r: f64, x: f64) -> f64 {
    if x <= -r {
        0.0
    } else if x >= r {
        0.5 * PI * r * r
    } else {
        0.5 * (x * half_chord(r, x) + r * r * (x / r).asin()) + 0.25 * PI * r * r
    }
}

/// Limiting density of `√b F(b)`.
pub fn density(spec: &DensitySpec, x: f64) -> Result<f64> {
    spec.validate()?;
    let big = spec.outer;
    Ok(match spec.classification {
        Classification::Annulus => {
            let small = spec.inner;
            2.0 * (half_chord(big, x) - half_chord(small, x)) / (PI * (big * big - small * small))
        }
        Classification::Disk => 2.0 * half_chord(big, x) / (PI * big * big),
    })
}

/// `∫_{-∞}^{x} p`, in closed form.
pub fn cdf(spec: &DensitySpec, x: f64) -> Result<f64> {
    spec.validate()?;
    let big = spec.outer;
    Ok(match spec.classification {
        Classification::Annulus => {
            let small = spec.inner;
            2.0 * (semicircle_area(big, x) - semicircle_area(small, x))
                / (PI * (big * big - small * small))
        }
        Classification::Disk => 2.0 * semicircle_area(big, x) / (PI * big * big),
    })
}

/// ∫ p over [-C, C] from the closed form.
pub fn density_integral(spec: &DensitySpec) -> Result<f64> {
    Ok(cdf(spec, spec.outer)? - cdf(spec, -spec.outer)?)
}

/// Result of the mean-square experiment.
#[derive(Clone, Debug, PartialEq)]
pub struct SecondMoment {
    /// ∫_1^X F(x)² dx.
    pub integral: f64,
    /// Least-squares slope of the integral against ln X over `grid`.
    pub fitted_slope: f64,
    /// (X_j, ∫_1^{X_j} F²).
    pub grid: Vec<(f64, f64)>,
    /// Largest certified tolerance used for any value of F.
    pub max_tol: f64,
}

impl SecondMoment {
    /// Slope over the grid points with `X_j >= from`.
    pub fn slope_from(&self, from: f64) -> Result<f64> {
        let pts: Vec<(f64, f64)> = self
            .grid
            .iter()
            .filter(|(x, _)| *x >= from * (1.0 - 1e-12))
            .copied()
            .collect();
        fit_log_slope(&pts)
    }
}

/// Least-squares slope of `y` against `ln x`.
pub fn fit_log_slope(points: &[(f64, f64)]) -> Result<f64> {
    if points.len() < 2 {
        return Err(Error::Precondition("slope fit needs two points".into()));
    }
    let n = points.len() as f64;
    let mean_l = points.iter().map(|p| p.0.ln()).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for &(x, y) in points {
        let dl = x.ln() - mean_l;
        sxy += dl * (y - mean_y);
        sxx += dl * dl;
    }
    Ok(sxy / sxx)
}

/// Quarter-decade grid from `max(1, X/100)` to X.
pub fn moment_grid(x_max: f64) -> Vec<f64> {
    let lo = (x_max / 100.0).max(1.0);
    let steps = (4.0 * (x_max / lo).log10()).ceil().max(1.0) as usize;
    let ratio = (x_max / lo).ln() / steps as f64;
    (0..=steps)
        .map(|j| {
            if j == steps {
                x_max
            } else {
                lo * (ratio * j as f64).exp()
            }
        })
        .collect()
}

/// Widest quadrature panel in `u = ln x`.
pub const PANEL_WIDTH: f64 = 0.25;
const PANEL_TOL: f64 = 1e-16;
const MAX_DEPTH: usize = 30;

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn kronrod<F: Fn(f64) -> Result<f64>>(f: &F, a: f64, b: f64) -> Result<(f64, f64)> {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(mid)?;
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let dx = half * XGK[i];
        let s = f(mid - dx)? + f(mid + dx)?;
        kron += WGK[i] * s;
        if i % 2 == 1 {
            gauss += WG[i / 2] * s;
        }
    }
    Ok((kron * half, ((kron - gauss) * half).abs()))
}

fn adaptive<F: Fn(f64) -> Result<f64>>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    depth: usize,
) -> Result<f64> {
    let (value, err) = kronrod(f, a, b)?;
    if err <= tol || (err <= 1e-14 * value.abs()) {
        return Ok(value);
    }
    if depth == 0 {
        return Err(Error::Convergence(format!(
            "quadrature on [{a}, {b}] (log scale) stalled: estimate {value:e}, error {err:e}"
        )));
    }
    let mid = 0.5 * (a + b);
    Ok(adaptive(f, a, mid, 0.5 * tol, depth - 1)? + adaptive(f, mid, b, 0.5 * tol, depth - 1)?)
}

/// `∫_1^{X_j} f(x)² dx` at every point of `grid` (ascending, starting at or above 1),
/// integrating `f(e^u)² e^u` over panels of width at most `PANEL_WIDTH`.
pub fn mean_square_integrals<F>(f: F, grid: &[f64]) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    if grid.is_empty() || !(grid[0] >= 1.0) || grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Precondition(
            "grid must be ascending and start at or above 1".into(),
        ));
    }
    let mut edges = vec![0.0];
    let mut marks = Vec::with_capacity(grid.len());
    for &x in grid {
        let (lo, hi) = (*edges.last().unwrap(), x.ln());
        let pieces = ((hi - lo) / PANEL_WIDTH).ceil() as usize;
        for p in 1..=pieces {
            edges.push(if p == pieces {
                hi
            } else {
                lo + (hi - lo) * p as f64 / pieces as f64
            });
        }
        marks.push(edges.len() - 1);
    }
    let integrand = |u: f64| -> Result<f64> {
        let x = u.exp();
        let v = f(x)?;
        Ok(v * v * x)
    };
    let panels: Vec<f64> = edges
        .par_windows(2)
        .map(|w| adaptive(&integrand, w[0], w[1], PANEL_TOL, MAX_DEPTH))
        .collect::<Result<_>>()?;
    let mut acc = NeumaierSum::new();
    let mut out = Vec::with_capacity(marks.len());
    let mut next = 0;
    for (i, p) in panels.iter().enumerate() {
        acc.add(*p);
        while next < marks.len() && marks[next] == i + 1 {
            out.push(acc.value());
            next += 1;
        }
    }
    while out.len() < marks.len() {
        out.push(acc.value());
    }
    Ok(out)
}

/// Certified tolerance requested of each value of F in the mean-square experiment.
pub const MOMENT_DIRECT_TOL: f64 = 1e-9;

/// `∫_1^X F(x)² dx` with F from the Möbius side, and the slope against ln X
/// over `moment_grid(X)`. One truncation point serves the whole range, so the
/// integrand is smooth in x.
pub fn empirical_second_moment(x_max: f64, sieve: &MobiusSieve) -> Result<SecondMoment> {
    if !(x_max >= 10.0 && x_max.is_finite()) {
        return Err(Error::Precondition(format!(
            "empirical_second_moment requires X >= 10, got {x_max}"
        )));
    }
    let direct = DirectEvaluator::within(sieve, x_max, MOMENT_DIRECT_TOL)?;
    let f = |x: f64| direct.eval(x).map(|d| d.value);
    let mut moment = second_moment_with(f, x_max)?;
    moment.max_tol = direct.tol_at(x_max);
    Ok(moment)
}

/// The mean-square experiment for an arbitrary function.
pub fn second_moment_with<F>(f: F, x_max: f64) -> Result<SecondMoment>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    let grid = moment_grid(x_max);
    let values = mean_square_integrals(f, &grid)?;
    let pts: Vec<(f64, f64)> = grid.into_iter().zip(values).collect();
    Ok(SecondMoment {
        integral: pts.last().unwrap().1,
        fitted_slope: fit_log_slope(&pts)?,
        grid: pts,
        max_tol: 0.0,
    })
}

/// Sampled distribution of `√b F(b)` against the model density.
#[derive(Clone, Debug, PartialEq)]
pub struct DistributionReport {
    pub geometry: AnnulusGeometry,
    pub spec: DensitySpec,
    pub second_moment: f64,
    /// (b, √b F(b)) in increasing b.
    pub samples: Vec<(f64, f64)>,
    pub ks_distance: f64,
    pub min: f64,
    pub max: f64,
    /// Largest certified error of a sample of √b F(b).
    pub max_error: f64,
}

/// Correction terms used for each sample.
pub const SAMPLE_CORRECTION_TERMS: usize = 50;

/// Samples `√b F(b)` at `samples` log-uniform points of `[b_min, b_max]`
/// (midpoints of equal log cells), with F from the zero sum and the
/// correction series, and compares with the model CDF.
pub fn distribution_compare(
    b_min: f64,
    b_max: f64,
    samples: usize,
    expansion: &Expansion,
) -> Result<DistributionReport> {
    if !(b_min >= PI && b_max > b_min && b_max.is_finite()) {
        return Err(Error::Precondition(format!(
            "distribution_compare requires π <= b_min < b_max, got [{b_min}, {b_max}]"
        )));
    }
    if samples < 100 {
        return Err(Error::Precondition(format!(
            "distribution_compare requires at least 100 samples, got {samples}"
        )));
    }
    let geometry = expansion_geometry(expansion)?;
    let spec = DensitySpec::from_geometry(&geometry)?;
    let span = (b_max / b_min).ln();
    let points: Vec<(f64, f64, f64)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let b = b_min * (span * (i as f64 + 0.5) / samples as f64).exp();
            let (zs, corr, tail) = expansion.expand(b, SAMPLE_CORRECTION_TERMS)?;
            let r = b.sqrt();
            Ok((b, r * (zs + corr.value), r * (corr.error_bound + tail)))
        })
        .collect::<Result<_>>()?;
    let max_error = points.iter().map(|p| p.2).fold(0.0, f64::max);
    let samples: Vec<(f64, f64)> = points.into_iter().map(|p| (p.0, p.1)).collect();
    let mut sorted: Vec<f64> = samples.iter().map(|s| s.1).collect();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let mut ks = 0.0f64;
    for (i, &v) in sorted.iter().enumerate() {
        let model = cdf(&spec, v)?;
        ks = ks
            .max((i as f64 + 1.0) / n - model)
            .max(model - i as f64 / n);
    }
    Ok(DistributionReport {
        geometry,
        spec,
        second_moment: second_moment_constant(expansion.coefficients())?,
        ks_distance: ks,
        min: sorted[0],
        max: sorted[sorted.len() - 1],
        samples,
        max_error,
    })
}

/// `(Σ|a|, A)` for a zero table, the numbers most often asked for.
pub fn radii_and_moment(zeros: &ZeroTable) -> Result<(AnnulusGeometry, f64)> {
    let expansion = Expansion::new(zeros)?;
    Ok((
        expansion_geometry(&expansion)?,
        second_moment_constant(expansion.coefficients())?,
    ))
}
