use std::path::Path;
use std::process::{Command, Output};

fn quench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quench")).args(args).output().expect("binary runs")
}

fn table(path: &Path) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut reader = csv::Reader::from_path(path).unwrap();
    let header = reader.headers().unwrap().iter().map(String::from).collect();
    let rows = reader
        .records()
        .map(|r| r.unwrap().iter().map(|v| v.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

fn run_to_file(dir: &Path, args: &[&str]) -> (Vec<String>, Vec<Vec<f64>>) {
    let out = dir.join(format!("{}.csv", args[0]));
    let mut full = args.to_vec();
    let out_str = out.to_str().unwrap();
    full.extend(["--out", out_str]);
    let o = quench(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    table(&out)
}

#[test]
fn fig1_uncertainty_product_range() {
    let dir = tempfile::tempdir().unwrap();
    let (header, rows) = run_to_file(dir.path(), &["fig1"]);
    assert_eq!(header, ["omega_f_t", "mean_over_aF", "dx_over_dx0", "dp_over_dp0", "product_2dxdp_over_hbar"]);
    assert_eq!(rows.len(), 1601);
    let product: Vec<f64> = rows.iter().map(|r| r[4]).collect();
    let min = product.iter().copied().fold(f64::INFINITY, f64::min);
    let max = product.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    assert!((min - 1.0).abs() < 1e-10, "{min}");
    assert!((max - 1.25).abs() < 1e-6, "{max}");
    assert!((rows.last().unwrap()[0] - 4.0 * std::f64::consts::PI).abs() < 1e-10);
}

#[test]
fn fig3_origin_density_has_its_dip() {
    let dir = tempfile::tempdir().unwrap();
    let (header, rows) = run_to_file(dir.path(), &["fig3"]);
    assert_eq!(header, ["t_over_t0", "a_rho_pi2", "a_rho_pi2.5", "a_rho_pi3"]);
    assert!((rows[0][1] - 1.0).abs() < 1e-12);
    // deepest interior local minimum of the pi/2 column
    let mut best = (0.0, f64::INFINITY);
    for w in rows.windows(3) {
        if w[1][1] < w[0][1] && w[1][1] < w[2][1] && w[1][1] < best.1 {
            best = (w[1][0], w[1][1]);
        }
    }
    assert!((best.0 - 0.071).abs() <= 0.005, "{best:?}");
}

#[test]
fn every_figure_has_its_documented_header() {
    let dir = tempfile::tempdir().unwrap();
    let expected: [(&str, &[&str]); 8] = [
        ("fig2", &["x_over_a", "a_rho_t0", "a_rho_t0.07", "a_rho_t0.14", "a_rho_t0.28"]),
        ("fig4", &["t_over_t0", "qm_x0", "cl_x0", "qm_x1", "cl_x1", "qm_x2", "cl_x2"]),
        ("fig5", &["u", "scaled_t1", "scaled_t2", "scaled_t5", "scaled_t10", "limit"]),
        ("fig6", &["ak", "hW_x0", "hW_x0.5", "factorized_x0"]),
        ("fig7", &["ak", "integrand_t0.14", "integrand_t0.07"]),
        ("density", &["x_over_a", "a_rho"]),
        ("classical", &["x_over_a", "a_rho_cl", "a_rho_qm"]),
        ("moments", &["k0a", "t_over_t0", "x2_over_a2", "p2_a2", "width_qm", "width_cl"]),
    ];
    for (command, columns) in expected {
        let args: Vec<&str> = if command == "fig5" { vec![command, "--nx", "61"] } else { vec![command] };
        let (header, rows) = run_to_file(dir.path(), &args);
        assert_eq!(header, columns, "{command}");
        assert!(!rows.is_empty());
        assert!(rows.iter().flatten().all(|v| v.is_finite()), "{command}");
    }
    let (header, rows) = run_to_file(dir.path(), &["wigner", "--nx", "5"]);
    assert_eq!(header, ["x_over_a", "ak", "hW"]);
    assert_eq!(rows.len(), 25);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let o = quench(&["fig2", "--nx", "121", "--out", path.to_str().unwrap()]);
        assert!(o.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn twelve_significant_digits() {
    let o = quench(&["moments"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    let row = text.lines().nth(1).unwrap();
    for field in row.split(',') {
        let mantissa = field.split('e').next().unwrap().trim_start_matches('-');
        assert_eq!(mantissa.replace('.', "").len(), 12, "{field}");
    }
}

#[test]
fn overrides_change_the_output() {
    let o = quench(&["moments", "--k0a", "1.0", "--t", "2"]);
    let text = String::from_utf8(o.stdout).unwrap();
    let row: Vec<f64> = text.lines().nth(1).unwrap().split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(row[0], 1.0);
    assert_eq!(row[1], 2.0);
    assert_eq!(row[4], row[5]);
}

#[test]
fn bad_parameters_fail_with_the_key_named() {
    for (args, key) in [
        (vec!["density", "--k0a", "3"], "--k0a"),
        (vec!["fig1", "--omega-ratio", "0"], "--omega-ratio"),
        (vec!["fig2", "--nx", "1"], "--nx"),
        (vec!["fig1", "--k0a", "1"], "--k0a"),
        (vec!["classical", "--xmax", "-2"], "--xmax"),
    ] {
        let o = quench(&args);
        assert!(!o.status.success(), "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains(key), "{args:?}: {err}");
    }
    let o = quench(&["fig2", "--bogus", "1"]);
    assert!(!o.status.success());
}

#[test]
fn unwritable_output_is_an_error() {
    let o = quench(&["fig1", "--out", "/nonexistent-dir/x.csv"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("--out"));
}

#[test]
fn help_documents_the_csv_schema() {
    let o = quench(&["fig3", "--help"]);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("t_over_t0, a_rho_pi2, a_rho_pi2.5, a_rho_pi3"), "{text}");
}

#[test]
fn thread_count_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_quench"))
        .args(["density", "--nx", "11"])
        .env("QUENCH_THREADS", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_quench"))
        .args(["density", "--nx", "11"])
        .env("QUENCH_THREADS", "many")
        .output()
        .unwrap();
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("QUENCH_THREADS"));
}
