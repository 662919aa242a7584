//! End-to-end runs of the `eikonal` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use eikonal_core::bench::{ExperimentSpec, Family};
use eikonal_core::io::load_time;
use eikonal_core::solvers::SolverKind;

fn eikonal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eikonal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn path(dir: &Path, name: &str) -> PathBuf {
    dir.join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn generate(dir: &Path, name: &str, extra: &[&str]) -> PathBuf {
    let p = path(dir, name);
    let mut args = vec!["generate", "-o", s(&p)];
    args.extend_from_slice(extra);
    let out = eikonal(&args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    p
}

fn solve(dir: &Path, grid: &Path, solver: &str, name: &str) -> PathBuf {
    let p = path(dir, name);
    let out = eikonal(&["solve", "-i", s(grid), "-o", s(&p), "--solver", solver]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    p
}

fn csv_rows(p: &Path) -> Vec<Vec<String>> {
    let text = std::fs::read_to_string(p).unwrap();
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn solve_empty_map_puts_zero_at_the_center() {
    let dir = tempfile::tempdir().unwrap();
    let grid = generate(dir.path(), "g.eik", &["--family", "empty", "--cells", "50"]);
    let out = path(dir.path(), "t.eik");
    let run = eikonal(&["solve", "-i", s(&grid), "-o", s(&out)]);
    assert_eq!(code(&run), 0);
    assert!(String::from_utf8_lossy(&run.stdout).contains("2500 cells"));
    let t = load_time(&out).unwrap();
    assert_eq!(t.values[25 + 25 * 50], 0.0);
    assert!(t.values.iter().all(|v| v.is_finite() && *v >= 0.0));
}

#[test]
fn explicit_and_repeated_sources() {
    let dir = tempfile::tempdir().unwrap();
    let grid = generate(dir.path(), "g.eik", &["--family", "empty", "--cells", "20"]);
    let out = path(dir.path(), "t.eik");
    let run = eikonal(&[
        "solve",
        "-i",
        s(&grid),
        "-o",
        s(&out),
        "--source",
        "0,0",
        "--source",
        "19,19",
    ]);
    assert_eq!(code(&run), 0);
    let t = load_time(&out).unwrap();
    assert_eq!(t.values[0], 0.0);
    assert_eq!(t.values[399], 0.0);
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let grid = generate(dir.path(), "g.eik", &["--family", "empty", "--cells", "10"]);
    let out = path(dir.path(), "t.eik");
    let bad_solver = eikonal(&["solve", "-i", s(&grid), "-o", s(&out), "--solver", "XYZ"]);
    assert_eq!(code(&bad_solver), 2);
    let bad_source = eikonal(&["solve", "-i", s(&grid), "-o", s(&out), "--source", "10,0"]);
    assert_eq!(code(&bad_source), 2);
    assert!(!String::from_utf8_lossy(&bad_source.stderr).is_empty());
    let junk = path(dir.path(), "junk.eik");
    std::fs::write(&junk, b"not a grid").unwrap();
    assert_eq!(code(&eikonal(&["solve", "-i", s(&junk), "-o", s(&out)])), 2);
    assert_eq!(code(&eikonal(&["compare", s(&junk), s(&junk)])), 2);
    assert_eq!(code(&eikonal(&["frobnicate"])), 2);
}

#[test]
fn fmm_and_sfmm_fields_compare_equal() {
    let dir = tempfile::tempdir().unwrap();
    let grid = generate(
        dir.path(),
        "g.eik",
        &[
            "--family", "random", "--cells", "60", "--fmax", "10", "--seed", "7",
        ],
    );
    let a = solve(dir.path(), &grid, "FMM", "a.eik");
    let b = solve(dir.path(), &grid, "SFMM", "b.eik");
    let out = eikonal(&[
        "compare",
        s(&a),
        s(&b),
        "--tol-l1",
        "1e-12",
        "--tol-linf",
        "1e-12",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn compare_against_itself_and_mismatched_shapes() {
    let dir = tempfile::tempdir().unwrap();
    let g1 = generate(
        dir.path(),
        "g1.eik",
        &["--family", "empty", "--cells", "12"],
    );
    let g2 = generate(
        dir.path(),
        "g2.eik",
        &["--family", "empty", "--cells", "13"],
    );
    let a = solve(dir.path(), &g1, "FMM", "a.eik");
    let b = solve(dir.path(), &g2, "FMM", "b.eik");
    let same = eikonal(&["compare", s(&a), s(&a)]);
    assert_eq!(code(&same), 0);
    let text = String::from_utf8_lossy(&same.stdout);
    assert!(
        text.contains("L1 = 0e0") && text.contains("Linf = 0e0"),
        "{text}"
    );
    let shapes = eikonal(&["compare", s(&a), s(&b)]);
    assert_eq!(code(&shapes), 2);
    assert!(String::from_utf8_lossy(&shapes.stderr).contains("shapes differ"));
}

#[test]
fn ufmm_error_is_outside_zero_tolerance_only() {
    let dir = tempfile::tempdir().unwrap();
    let grid = generate(
        dir.path(),
        "g.eik",
        &[
            "--family", "random", "--cells", "100", "--fmax", "100", "--seed", "20160530",
        ],
    );
    let a = solve(dir.path(), &grid, "FMM", "a.eik");
    let b = solve(dir.path(), &grid, "UFMM", "b.eik");
    assert_eq!(code(&eikonal(&["compare", s(&a), s(&b)])), 1);
    let loose = eikonal(&[
        "compare",
        s(&a),
        s(&b),
        "--tol-l1",
        "5e-3",
        "--tol-linf",
        "5e-3",
    ]);
    assert_eq!(code(&loose), 0);
}

#[test]
fn bench_empty_ladder_has_one_row_per_solver_and_size() {
    let dir = tempfile::tempdir().unwrap();
    let csv = path(dir.path(), "bench.csv");
    let runs = path(dir.path(), "runs.csv");
    let out = eikonal(&[
        "bench",
        "--family",
        "empty",
        "--ndims",
        "2",
        "--scale",
        "10",
        "--runs",
        "1",
        "-o",
        s(&csv),
        "--runs-output",
        s(&runs),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let sizes = ExperimentSpec::standard(Family::Empty, 2, 10.0)
        .unwrap()
        .params
        .len();
    let rows = csv_rows(&csv);
    assert_eq!(rows.len(), SolverKind::ALL.len() * sizes);
    for r in &rows {
        assert_eq!(r[6], "0", "stddev of one run");
        assert!(r[5].parse::<f64>().unwrap() > 0.0);
    }
    assert_eq!(csv_rows(&runs).len(), rows.len());
}

#[test]
fn bench_random_separates_ufmm_from_exact_solvers() {
    let dir = tempfile::tempdir().unwrap();
    let csv = path(dir.path(), "bench.csv");
    let out = eikonal(&[
        "bench",
        "--family",
        "random",
        "--cells",
        "100",
        "--params",
        "100",
        "--runs",
        "1",
        "-o",
        s(&csv),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    for r in csv_rows(&csv) {
        let l1: f64 = r[8].parse().unwrap();
        if r[4] == "UFMM" {
            assert!(l1 > 0.0);
        } else {
            assert!(l1 < 1e-9, "{}: {l1}", r[4]);
        }
    }
}

#[test]
fn bench_rejects_an_invalid_experiment() {
    let dir = tempfile::tempdir().unwrap();
    let csv = path(dir.path(), "bench.csv");
    let out = eikonal(&["bench", "--family", "empty", "--runs", "0", "-o", s(&csv)]);
    assert_eq!(code(&out), 2);
    let out = eikonal(&["bench", "--family", "empty", "--ndims", "7", "-o", s(&csv)]);
    assert_eq!(code(&out), 2);
}
