use std::path::Path;
use std::process::{Command, Output};

use gadent::analysis::{sweep_grid, uniform_grid};
use gadent::cli::csv::{parse_grid_csv, parse_sweep_csv};
use gadent::*;

fn gadent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gadent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn singlet_sweep_blocks_start_at_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("singlet.csv");
    let o = gadent(&[
        "sweep", "--initial", "bell:-1,-1,-1", "--mode", "correlated", "--p", "0.1,0.2,0.3",
        "--gamma-count", "101", "--out", path_str(&out),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert_eq!(stdout.matches("sudden_death_gamma").count(), 3);
    let text = std::fs::read_to_string(&out).unwrap();
    let blocks = parse_sweep_csv(&text).unwrap();
    assert_eq!(blocks.len(), 3);
    for b in &blocks {
        assert!((b.samples[0].negativity.unwrap() - 1.0).abs() < 1e-10);
        assert_eq!(b.samples.len(), 101);
    }
    assert!(text.lines().any(|l| l == "gamma,negativity"));
}

#[test]
fn sweep_csv_round_trips_bit_identically() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.csv");
    let o = gadent(&[
        "sweep", "--initial", "werner:-0.6", "--mode", "uncorrelated", "--p", "0.15,0.85",
        "--gamma-count", "57", "--compare-formulas", "--out", path_str(&out),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("gamma,negativity,discrepancy"));
    assert!(text.lines().last().unwrap().starts_with("# max_discrepancy = "));

    let expected = sweep_grid(&make_werner(-0.6).unwrap(), &[0.15, 0.85], &uniform_grid(57), NoiseMode::Uncorrelated).unwrap();
    let parsed = parse_sweep_csv(&text).unwrap();
    for (b, r) in parsed.iter().zip(&expected) {
        assert_eq!(b.p.to_bits(), r.spec.p.to_bits());
        for (s, e) in b.samples.iter().zip(&r.samples) {
            assert_eq!(s.gamma.to_bits(), e.gamma.to_bits());
            assert_eq!(s.negativity.map(f64::to_bits), e.negativity.map(f64::to_bits));
            assert_eq!(s.discrepancy.to_bits(), e.discrepancy.to_bits());
        }
    }
}

#[test]
fn config_file_with_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        "mode = \"uncorrelated\"\np = [0.3]\ngamma_count = 11\n[initial]\nkind = \"werner\"\nx = -0.5\n[detector]\nslope_eps = 0.01\n",
    )
    .unwrap();
    let o = gadent(&["sweep", "--config", path_str(&cfg), "--mode", "correlated", "--kink-threshold", "7"]);
    assert!(o.status.success());
    let csv = String::from_utf8_lossy(&o.stdout);
    assert!(csv.contains("# mode = \"correlated\""));
    assert!(csv.contains("# slope_eps = 0.01"));
    assert!(csv.contains("# kink_threshold = 7.0"));
    assert_eq!(parse_sweep_csv(&csv).unwrap()[0].samples.len(), 11);
}

#[test]
fn config_errors_exit_with_code_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.toml");
    std::fs::write(&cfg, "mode = \"correlated\"\np = [0.3]\ngamma = []\n[initial]\nkind = \"werner\"\nx = -0.5\n").unwrap();
    let o = gadent(&["sweep", "--config", path_str(&cfg)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("gamma grid is empty"));

    std::fs::write(&cfg, "mode = \"correlated\"\np = [0.3]\nextra = true\n[initial]\nkind = \"werner\"\nx = -0.5\n").unwrap();
    assert_eq!(gadent(&["sweep", "--config", path_str(&cfg)]).status.code(), Some(1));

    assert_eq!(gadent(&["sweep", "--initial", "werner:0.5"]).status.code(), Some(1));
    assert_eq!(gadent(&["sweep", "--config", "/nonexistent/run.toml"]).status.code(), Some(1));
}

#[test]
fn annihilation_everywhere_exits_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("dead.toml");
    std::fs::write(&cfg, "mode = \"correlated\"\np = [0.3]\ngamma = [1.0]\n[initial]\nkind = \"werner\"\nx = -1.0\n").unwrap();
    assert_eq!(gadent(&["sweep", "--config", path_str(&cfg)]).status.code(), Some(2));
}

#[test]
fn xstate_grid_has_zero_row_at_full_damping() {
    let o = gadent(&["grid", "--initial", "bell:-0.1,-0.2,-0.7", "--p-count", "51", "--gamma-count", "51"]);
    assert!(o.status.success());
    let rows = parse_grid_csv(&String::from_utf8_lossy(&o.stdout)).unwrap();
    assert_eq!(rows.len(), 51 * 51);
    let full: Vec<_> = rows.iter().filter(|r| r.1 == 1.0).collect();
    assert_eq!(full.len(), 51);
    assert!(full.iter().all(|r| r.2.unwrap() < 1e-10));
}

#[test]
fn one_by_one_grid() {
    let o = gadent(&["grid", "--initial", "werner:-0.5", "--p", "0.4", "--gamma-count", "1"]);
    assert!(o.status.success());
    let rows = parse_grid_csv(&String::from_utf8_lossy(&o.stdout)).unwrap();
    assert_eq!(rows.len(), 1);
    assert!((rows[0].2.unwrap() - 0.25).abs() < 1e-12);
}

#[test]
fn initial_state_surface() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("surface.toml");
    std::fs::write(
        &cfg,
        "mode = \"correlated\"\np = [0.0]\n[initial]\nkind = \"bell_diagonal\"\nc = [-1.0, -1.0, -1.0]\n[initial_surface]\nc1 = -1.0\ncount = 21\n",
    )
    .unwrap();
    let o = gadent(&["grid", "--config", path_str(&cfg)]);
    assert!(o.status.success());
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("c2,c3,negativity"));
    let first = text.lines().find(|l| l.starts_with("-1.0")).unwrap();
    let n: f64 = first.split(',').nth(2).unwrap().parse().unwrap();
    assert!((n - 1.0).abs() < 1e-10);
}

#[test]
fn verify_exit_codes() {
    let o = gadent(&["verify", "--level", "fast"]);
    assert!(o.status.success());
    let a = String::from_utf8_lossy(&o.stdout).to_string();
    assert!(a.contains("seed=0x"));
    assert!(!a.contains("[FAIL]"));
    let b = String::from_utf8_lossy(&gadent(&["verify"]).stdout).to_string();
    assert_eq!(a, b);

    let o = gadent(&["verify", "--paper-literal-kraus"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stdout).contains("[FAIL] kraus completeness"));
}

#[test]
fn plot_scripts() {
    let dir = tempfile::tempdir().unwrap();
    let sweep = dir.path().join("s.csv");
    let grid = dir.path().join("g.csv");
    assert!(gadent(&["sweep", "--p", "0.1,0.3", "--gamma-count", "11", "--out", path_str(&sweep)]).status.success());
    assert!(gadent(&["grid", "--p-count", "5", "--gamma-count", "5", "--out", path_str(&grid)]).status.success());

    assert!(gadent(&["plot-script", "--csv", path_str(&sweep)]).status.success());
    let s = std::fs::read_to_string(sweep.with_extension("gp")).unwrap();
    assert_eq!(s.matches(" index ").count(), 2);

    assert!(gadent(&["plot-script", "--out", path_str(&grid)]).status.success());
    let g = std::fs::read_to_string(grid.with_extension("gp")).unwrap();
    assert!(g.contains("splot"));

    let missing = dir.path().join("none.csv");
    assert_eq!(gadent(&["plot-script", "--csv", path_str(&missing)]).status.code(), Some(1));
}

#[test]
fn defaults_parse_back() {
    let o = gadent(&["defaults"]);
    assert!(o.status.success());
    let text = String::from_utf8_lossy(&o.stdout);
    let cfg = gadent::cli::config::RunConfig::from_toml(&text).unwrap();
    assert_eq!(cfg, gadent::cli::config::RunConfig::default());
}
