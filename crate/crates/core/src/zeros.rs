//! Ordered tables of positive zero ordinates γ of ζ(1/2 + iγ).
//!
//! A table comes from one of three places: the embedded 500-entry list, a
//! Hardy Z-function root search, or a plain text file. All three go through
//! the same validation.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::special::hardy_z;
use crate::zeros_data::EMBEDDED_ORDINATES;

/// Number of ordinates shipped in the binary.
pub const EMBEDDED_CAPACITY: usize = EMBEDDED_ORDINATES.len();

/// Significant digits carried by the embedded table.
pub const EMBEDDED_DIGITS: u32 = 15;

/// Digits assumed for files without a `# digits=` header.
pub const DEFAULT_FILE_DIGITS: u32 = 9;

/// Largest index `find_zero` supports.
pub const MAX_COMPUTED_INDEX: usize = 2000;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const MIN_TOLERANCE: f64 = 1e-10;
pub const MAX_BISECTIONS: usize = 200;

/// Consecutive ordinates must be at least this far apart.
pub const MIN_GAP: f64 = 1e-4;

const SCAN_START: f64 = 10.0;
const SCAN_STEP: f64 = 0.05;
const SCAN_CEILING: f64 = 3000.0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroSource {
    Embedded,
    Computed,
    File(PathBuf),
}

/// Strictly increasing positive ordinates, the first one being γ_1 ≈ 14.1347.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source: ZeroSource,
    precision_digits: u32,
}

impl ZeroTable {
    pub fn new(ordinates: Vec<f64>, source: ZeroSource, precision_digits: u32) -> Result<Self> {
        let path = match &source {
            ZeroSource::File(p) => p.clone(),
            _ => PathBuf::from("<table>"),
        };
        let lines: Vec<usize> = (1..=ordinates.len()).collect();
        validate(&ordinates, &lines, &path)?;
        Ok(Self {
            ordinates,
            source,
            precision_digits,
        })
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn source(&self) -> &ZeroSource {
        &self.source
    }

    pub fn precision_digits(&self) -> u32 {
        self.precision_digits
    }

    pub fn last(&self) -> f64 {
        *self.ordinates.last().expect("tables are never empty")
    }

    /// The first `count` ordinates as a new table.
    pub fn prefix(&self, count: usize) -> Result<Self> {
        if count == 0 || count > self.len() {
            return Err(Error::Capacity {
                what: "zero table prefix",
                requested: count as u64,
                limit: self.len() as u64,
            });
        }
        Ok(Self {
            ordinates: self.ordinates[..count].to_vec(),
            source: self.source.clone(),
            precision_digits: self.precision_digits,
        })
    }

    /// Number of stored ordinates `<= height`.
    pub fn count_below(&self, height: f64) -> usize {
        self.ordinates.partition_point(|&g| g <= height)
    }

    /// Text form accepted by `parse_zero_text`.
    pub fn to_text(&self) -> String {
        let mut out = format!("# digits={}\n", self.precision_digits);
        for g in &self.ordinates {
            writeln!(out, "{g}").unwrap();
        }
        out
    }
}

fn validate(ordinates: &[f64], lines: &[usize], path: &Path) -> Result<()> {
    let data_err = |line: usize, msg: String| Error::Data {
        path: path.to_path_buf(),
        line,
        msg,
    };
    let Some(&first) = ordinates.first() else {
        return Err(data_err(0, "table contains no ordinates".into()));
    };
    for (i, w) in ordinates.windows(2).enumerate() {
        let (a, b) = (w[0], w[1]);
        if !b.is_finite() || b <= a {
            return Err(data_err(
                lines[i + 1],
                format!("ordinate {b} does not exceed its predecessor {a}"),
            ));
        }
        if b - a <= MIN_GAP {
            return Err(data_err(
                lines[i + 1],
                format!(
                    "gap {:e} to the previous ordinate is below {MIN_GAP:e}",
                    b - a
                ),
            ));
        }
    }
    if !(first > 14.0 && first < 14.2) {
        return Err(data_err(
            lines[0],
            format!("first ordinate {first} is not in (14.0, 14.2); not a table of zeta zeros"),
        ));
    }
    Ok(())
}

/// The first `count` embedded ordinates.
pub fn load_embedded(count: usize) -> Result<ZeroTable> {
    if count == 0 || count > EMBEDDED_CAPACITY {
        return Err(Error::Capacity {
            what: "embedded zero table",
            requested: count as u64,
            limit: EMBEDDED_CAPACITY as u64,
        });
    }
    ZeroTable::new(
        EMBEDDED_ORDINATES[..count].to_vec(),
        ZeroSource::Embedded,
        EMBEDDED_DIGITS,
    )
}

pub fn load_file(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    parse_zero_text(&text, path)
}

/// Parses one-ordinate-per-line text. Lines starting with `#` are comments; a
/// `# digits=<k>` comment ahead of the first ordinate sets the precision.
pub fn parse_zero_text(text: &str, path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let mut digits = None;
    let mut ordinates = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if ordinates.is_empty() && digits.is_none() {
                if let Some(v) = comment.trim().strip_prefix("digits=") {
                    let k = v.trim().parse::<u32>().map_err(|e| Error::Format {
                        path: path.to_path_buf(),
                        line: line_no,
                        msg: format!("bad digits header {v:?}: {e}"),
                    })?;
                    digits = Some(k);
                }
            }
            continue;
        }
        let value = line.parse::<f64>().map_err(|e| Error::Format {
            path: path.to_path_buf(),
            line: line_no,
            msg: format!("{line:?} is not a decimal ordinate: {e}"),
        })?;
        if !value.is_finite() {
            return Err(Error::Format {
                path: path.to_path_buf(),
                line: line_no,
                msg: format!("{line:?} is not finite"),
            });
        }
        ordinates.push(value);
        lines.push(line_no);
    }
    validate(&ordinates, &lines, path)?;
    Ok(ZeroTable {
        ordinates,
        source: ZeroSource::File(path.to_path_buf()),
        precision_digits: digits.unwrap_or(DEFAULT_FILE_DIGITS),
    })
}

/// Main term of the Riemann-von Mangoldt count,
/// `(T/2π) log(T/2π) - T/2π + 7/8`.
pub fn riemann_von_mangoldt(height: f64) -> f64 {
    let x = height / (2.0 * std::f64::consts::PI);
    x * x.ln() - x + 0.875
}

/// γ_n, the n-th positive ordinate, to within `tolerance`.
pub fn find_zero(n: usize, tolerance: f64) -> Result<f64> {
    Ok(*find_zeros(n, tolerance)?.last().expect("n >= 1"))
}

/// γ_1, ..., γ_count by isolating sign changes of Hardy's Z above t = 10 and
/// bisecting each bracket.
pub fn find_zeros(count: usize, tolerance: f64) -> Result<Vec<f64>> {
    if count == 0 || count > MAX_COMPUTED_INDEX {
        return Err(Error::Precondition(format!(
            "zero index must be in 1..={MAX_COMPUTED_INDEX}, got {count}"
        )));
    }
    if !(tolerance >= MIN_TOLERANCE) {
        return Err(Error::Precondition(format!(
            "tolerance must be >= {MIN_TOLERANCE:e}, got {tolerance:e}"
        )));
    }
    let brackets = isolate(count)?;
    brackets
        .into_iter()
        .map(|(lo, hi)| bisect(lo, hi, tolerance))
        .collect()
}

/// The computed table, validated like any other.
pub fn compute_table(count: usize) -> Result<ZeroTable> {
    let zeros = find_zeros(count, DEFAULT_TOLERANCE)?;
    ZeroTable::new(zeros, ZeroSource::Computed, 9)
}

type Bracket = (f64, f64);

fn isolate(count: usize) -> Result<Vec<Bracket>> {
    let mut out = Vec::with_capacity(count);
    let mut t0 = SCAN_START;
    let mut z0 = hardy_z(t0)?;
    let mut prev: Option<(f64, f64)> = None;
    while out.len() < count {
        let t1 = t0 + SCAN_STEP;
        if t1 > SCAN_CEILING {
            return Err(Error::Convergence(format!(
                "only {} sign changes of Z below t = {SCAN_CEILING}; {count} requested",
                out.len()
            )));
        }
        let z1 = hardy_z(t1)?;
        if z0 == 0.0 {
            // landed exactly on a zero; bracket it symmetrically
            out.push((t0 - SCAN_STEP / 4.0, t0 + SCAN_STEP / 4.0));
        } else if z0.signum() != z1.signum() && z1 != 0.0 {
            out.push((t0, t1));
        } else if let Some((tp, zp)) = prev {
            // |Z| dipping without crossing can hide a close pair of zeros.
            if zp.signum() == z0.signum() && z0.abs() < zp.abs() && z0.abs() < z1.abs() {
                let mut found = Vec::new();
                refine(tp, zp, t1, z1, 0, &mut found)?;
                // keep only brackets not already recorded
                let last = out.last().map(|b: &Bracket| b.1).unwrap_or(f64::MIN);
                out.extend(found.into_iter().filter(|b| b.0 >= last));
            }
        }
        prev = Some((t0, z0));
        t0 = t1;
        z0 = z1;
    }
    out.truncate(count);
    Ok(out)
}

fn refine(a: f64, za: f64, b: f64, zb: f64, depth: u32, found: &mut Vec<Bracket>) -> Result<()> {
    const PIECES: usize = 8;
    if depth > 3 || b - a < MIN_GAP {
        return Ok(());
    }
    let h = (b - a) / PIECES as f64;
    let mut ts = vec![a];
    let mut zs = vec![za];
    for i in 1..PIECES {
        let t = a + h * i as f64;
        ts.push(t);
        zs.push(hardy_z(t)?);
    }
    ts.push(b);
    zs.push(zb);
    let changes = zs
        .windows(2)
        .filter(|w| w[0].signum() != w[1].signum())
        .count();
    if changes > 0 {
        for i in 0..PIECES {
            if zs[i].signum() != zs[i + 1].signum() {
                found.push((ts[i], ts[i + 1]));
            }
        }
        return Ok(());
    }
    // still no crossing: descend into the piece holding the smallest |Z|
    let (i, _) = zs
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.abs().total_cmp(&y.1.abs()))
        .unwrap();
    let i = i.clamp(1, PIECES - 1);
    refine(ts[i - 1], zs[i - 1], ts[i + 1], zs[i + 1], depth + 1, found)
}

fn bisect(mut lo: f64, mut hi: f64, tolerance: f64) -> Result<f64> {
    let mut zlo = hardy_z(lo)?;
    let zhi = hardy_z(hi)?;
    if zlo == 0.0 {
        return Ok(lo);
    }
    if zhi == 0.0 {
        return Ok(hi);
    }
    if zlo.signum() == zhi.signum() {
        return Err(Error::Convergence(format!(
            "[{lo}, {hi}] does not bracket a sign change of Z"
        )));
    }
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if 0.5 * (hi - lo) <= tolerance || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let zm = hardy_z(mid)?;
        if zm == 0.0 {
            return Ok(mid);
        }
        if zm.signum() == zlo.signum() {
            lo = mid;
            zlo = zm;
        } else {
            hi = mid;
        }
    }
    Err(Error::Convergence(format!(
        "bisection stopped after {MAX_BISECTIONS} steps with bracket [{lo}, {hi}]"
    )))
}
