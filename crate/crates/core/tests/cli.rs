use std::process::{Command, Output};

use clap::Parser;
use ramanujan_lab::cli::{self, Cli, Status, ZeroSpec};

fn ramlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_rows(text: &str) -> Vec<&str> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .collect()
}

#[test]
fn zero_spec_parsing() {
    assert_eq!("10".parse::<ZeroSpec>().unwrap(), ZeroSpec::Embedded(10));
    assert_eq!(
        "compute:7".parse::<ZeroSpec>().unwrap(),
        ZeroSpec::Compute(7)
    );
    assert!(matches!(
        "zeros.txt".parse::<ZeroSpec>().unwrap(),
        ZeroSpec::File(_)
    ));
    assert!("compute:x".parse::<ZeroSpec>().is_err());
}

#[test]
fn coeffs_table() {
    let o = ramlab(&["coeffs"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "n,gamma,magnitude,re,im"));
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 10);
    let first: f64 = rows[0].split(',').nth(2).unwrap().parse().unwrap();
    assert!((first - 2.9255e-5).abs() < 1e-9);
    let one = ramlab(&["coeffs", "--zeros", "1"]);
    assert_eq!(data_rows(&stdout(&one)).len(), 1);
}

#[test]
fn radii_single_zero() {
    let o = ramlab(&["radii", "--zeros", "1"]);
    let text = stdout(&o);
    let row: Vec<&str> = data_rows(&text)[0].split(',').collect();
    assert_eq!(row[0], row[1]);
    assert_eq!(row[2], "indeterminate");
    let ten = stdout(&ramlab(&["radii"]));
    assert_eq!(data_rows(&ten)[0].split(',').nth(2), Some("annulus"));
}

#[test]
fn csv_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let o = ramlab(&[
            "figure",
            "--preset",
            "2",
            "--samples",
            "64",
            "--sieve-limit",
            "10000000",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let text = String::from_utf8(ta).unwrap();
    assert!(text.starts_with("# ramlab figure\n"));
    assert!(text.contains("\nb,sqrtb_F_zerosum,sqrtb_F_direct,residual,error_bound\n"));
    assert_eq!(data_rows(&text).len(), 64);
    // 17 significant digits per field
    let field = data_rows(&text)[0].split(',').next().unwrap();
    assert_eq!(field, "1.0000000000000000e2");
}

#[test]
fn figure_one_is_bounded() {
    let o = ramlab(&[
        "figure",
        "--preset",
        "1",
        "--samples",
        "100",
        "--sieve-limit",
        "1000000",
    ]);
    assert_eq!(o.status.code(), Some(0));
    for row in data_rows(&stdout(&o)) {
        let f: Vec<f64> = row.split(',').map(|x| x.parse().unwrap()).collect();
        assert!(f[3] <= f[4] + 1e-8, "{row}");
    }
}

#[test]
fn check_passes_by_default() {
    let o = ramlab(&["check"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.lines().skip(1).all(|l| l.starts_with("PASS")));
}

#[test]
fn corrupted_zero_file_is_a_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeros.txt");
    std::fs::write(&path, "14.134725142\n13.0\n").unwrap();
    let o = ramlab(&["check", "--zeros", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("data error") && err.contains(":2:"), "{err}");
}

#[test]
fn configuration_errors_exit_2() {
    assert_eq!(ramlab(&["radii", "--zeros", "0"]).status.code(), Some(2));
    assert_eq!(ramlab(&["radii", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(ramlab(&["bogus"]).status.code(), Some(2));
    assert_eq!(ramlab(&["figure", "--preset", "4"]).status.code(), Some(2));
}

#[test]
fn in_process_run() {
    let args = Cli::parse_from(["ramlab", "wmh", "--x-max", "1000", "--sieve-limit", "1000"]);
    let mut buf = Vec::new();
    let result = cli::run(&args, &mut buf);
    assert_eq!(cli::exit_code(&result), 0);
    assert_eq!(result.unwrap(), Status::Ok);
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(data_rows(&text).len(), 3);
}

#[test]
fn zeros_round_trip_through_cli() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.txt");
    let o = ramlab(&["zeros", "--zeros", "25", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let again = ramlab(&["coeffs", "--zeros", path.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(data_rows(&stdout(&again)).len(), 25);
}

#[test]
fn density_outputs() {
    let o = ramlab(&["density", "--points", "5"]);
    let text = stdout(&o);
    assert!(text.contains("# summary C="));
    assert_eq!(data_rows(&text).len(), 5);
    let o = ramlab(&[
        "density",
        "--samples",
        "200",
        "--b-min",
        "100",
        "--b-max",
        "1000",
    ]);
    let text = stdout(&o);
    assert!(text.contains("KS="));
    assert!(text.contains("\nsample_b,sqrtb_F\n"));
}

#[test]
fn riesz_and_moment_commands() {
    let o = ramlab(&["riesz", "--k", "2", "--sieve-limit", "10000000"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let row: Vec<f64> = data_rows(&stdout(&o))[0]
        .split(',')
        .map(|x| x.parse().unwrap())
        .collect();
    assert!(row[4].abs() < 1e-6);
    let o = ramlab(&["moment", "--x-max", "100", "--sieve-limit", "1000000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# slope_over_A="));
}
