//! Behaviour of the `lvosc` binary: exit codes, output schemas, determinism
//! and configuration precedence.

use std::path::PathBuf;
use std::process::{Command, Output};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lvosc"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    let mut cmd = binary();
    for arg in args {
        cmd.arg(arg);
    }
    cmd.env_remove("LVOSC_CONFIG");
    cmd.output().expect("binary should spawn")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn spectrum_first_row_is_sqrt_five() {
    let out = run(&[
        "spectrum",
        "--config",
        fixture("coulomb_basic.conf").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# coupling = coulomb"));
    assert_eq!(
        lines.next(),
        Some("n,l,k,branch,epsilon,epsilon_squared,tau,scale")
    );
    let first = lines.next().unwrap();
    assert_eq!(
        first,
        "0,0,0.00000000000e0,+,2.23606797750e0,5.00000000000e0,1.00000000000e0,1.00000000000e0"
    );
}

#[test]
fn cornell_with_a_zero_matches_coulomb_byte_for_byte() {
    let base = fixture("cornell_lsv.conf");
    let cornell = run(&[
        "spectrum",
        "--config",
        base.to_str().unwrap(),
        "--coupling",
        "cornell",
        "--a",
        "0",
    ]);
    let coulomb = run(&[
        "spectrum",
        "--config",
        base.to_str().unwrap(),
        "--coupling",
        "coulomb",
    ]);
    assert!(cornell.status.success() && coulomb.status.success());
    let strip = |text: String| {
        text.lines()
            .filter(|line| !line.starts_with("# coupling"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(stdout(&cornell)), strip(stdout(&coulomb)));
}

#[test]
fn empty_l_list_exits_two() {
    let dir = std::env::temp_dir().join("lvosc-empty-l.conf");
    std::fs::write(&dir, "l =\n").unwrap();
    let out = run(&["spectrum", "--config", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[ConfigError]:"));
    std::fs::remove_file(&dir).ok();
}

#[test]
fn bessel_regime_exits_two_with_report() {
    let out = run(&[
        "spectrum",
        "--config",
        fixture("coulomb_bessel.conf").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(
        err.starts_with("error[NoBoundStates]:"),
        "stderr was: {err}"
    );
    assert!(err.contains("Bessel"), "core-model report missing: {err}");
}

#[test]
fn validate_fixture_passes_and_tight_tolerance_fails() {
    let conf = fixture("coulomb_basic.conf");
    let ok = run(&["validate", "--config", conf.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0), "stderr: {}", stderr(&ok));
    assert!(stdout(&ok).contains("validate: PASS"));

    let too_tight = run(&[
        "validate",
        "--config",
        conf.to_str().unwrap(),
        "--tolerance",
        "1e-12",
    ]);
    assert_eq!(too_tight.status.code(), Some(1));
    assert!(stderr(&too_tight).starts_with("error[GridTooCoarse]:"));
}

#[test]
fn validate_bessel_fixture_exits_two() {
    let out = run(&[
        "validate",
        "--config",
        fixture("coulomb_bessel.conf").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[NoBoundStates]:"));
}

#[test]
fn sweep_crosses_frequency_boundary_without_crashing() {
    let out = run(&[
        "sweep",
        "--config",
        fixture("coulomb_basic.conf").to_str().unwrap(),
        "--var",
        "kappa1",
        "--from",
        "-1",
        "--to",
        "1",
        "--points",
        "3",
        "--n-max",
        "0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ImaginaryFrequency"));
    assert!(text.contains(",ok"));
}

#[test]
fn single_point_sweep_matches_spectrum() {
    let conf = fixture("cornell_lsv.conf");
    let sweep = run(&[
        "sweep",
        "--config",
        conf.to_str().unwrap(),
        "--var",
        "chi",
        "--from",
        "1",
        "--to",
        "1",
        "--points",
        "1",
    ]);
    let spectrum = run(&["spectrum", "--config", conf.to_str().unwrap()]);
    assert!(sweep.status.success() && spectrum.status.success());

    // sweep rows carry (value, ..spectrum columns.., status)
    let sweep_rows: Vec<String> = stdout(&sweep)
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("value"))
        .map(|l| {
            let cells: Vec<&str> = l.split(',').collect();
            cells[1..cells.len() - 1].join(",")
        })
        .collect();
    let spectrum_rows: Vec<String> = stdout(&spectrum)
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("n,"))
        .map(str::to_string)
        .collect();
    assert_eq!(sweep_rows, spectrum_rows);
}

#[test]
fn identical_configs_give_identical_bytes() {
    let conf = fixture("cornell_lsv.conf");
    let first = run(&["spectrum", "--config", conf.to_str().unwrap()]);
    let second = run(&["spectrum", "--config", conf.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout);

    let sweep_args = [
        "sweep",
        "--config",
        conf.to_str().unwrap(),
        "--var",
        "chi",
        "--from",
        "0",
        "--to",
        "2",
        "--points",
        "9",
    ];
    let s1 = run(&sweep_args);
    let s2 = run(&sweep_args);
    assert_eq!(s1.stdout, s2.stdout);
}

#[test]
fn flags_override_config_file() {
    let conf = fixture("coulomb_basic.conf");
    let out = run(&[
        "spectrum",
        "--config",
        conf.to_str().unwrap(),
        "--n-max",
        "0",
        "--l",
        "-1,1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("n,"))
        .collect();
    // one n, two l values, two branches
    assert_eq!(rows.len(), 4);
    assert!(rows[0].starts_with("0,-1,"));
    assert!(rows[2].starts_with("0,1,"));
    // +/- l degeneracy shows up as identical epsilon columns
    let eps = |row: &str| row.split(',').nth(4).unwrap().to_string();
    assert_eq!(eps(rows[0]), eps(rows[2]));
}

#[test]
fn ground_state_wavefunction_value_at_unit_radius() {
    // coulomb_basic has n=0, tau=1, scale=1: psi(r) = sqrt(2)·r·e^{-r²/2}
    let out = run(&[
        "wavefunction",
        "--config",
        fixture("coulomb_basic.conf").to_str().unwrap(),
        "--n",
        "0",
        "--r-max",
        "5",
        "--r-points",
        "6",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row_at_one = text
        .lines()
        .find(|l| l.starts_with("1.00000000000e0,"))
        .expect("grid should contain r = 1");
    let psi: f64 = row_at_one.split(',').nth(1).unwrap().parse().unwrap();
    assert!(
        (psi - 0.857_763_884_960_706_8).abs() < 1e-11,
        "psi(1) = {psi}"
    );
}

#[test]
fn env_var_supplies_the_config_file() {
    let mut cmd = binary();
    cmd.arg("spectrum");
    cmd.env("LVOSC_CONFIG", fixture("cornell_basic.conf"));
    let out = cmd.output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("# coupling = cornell"));
}

#[test]
fn json_output_has_the_documented_shape() {
    let out = run(&[
        "spectrum",
        "--config",
        fixture("coulomb_basic.conf").to_str().unwrap(),
        "--format",
        "json",
        "--n-max",
        "0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"command\": \"spectrum\""));
    assert!(text.contains("\"coupling\": \"coulomb\""));
    assert!(text.contains("\"epsilon\": 2.23606797750e0"));
    assert_eq!(text.matches('{').count(), text.matches('}').count());
}

#[test]
fn wavefunction_normalization_metadata_is_unity() {
    let out = run(&[
        "wavefunction",
        "--config",
        fixture("cornell_lsv.conf").to_str().unwrap(),
        "--n",
        "2",
        "--r-points",
        "50",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let norm_line = text
        .lines()
        .find(|l| l.starts_with("# normalization = "))
        .expect("trailing normalization check");
    let value: f64 = norm_line
        .rsplit(' ')
        .next()
        .unwrap()
        .parse::<f64>()
        .unwrap();
    assert!((value - 1.0).abs() < 1e-8, "normalization = {value}");
    // psi(0) column is zero for tau > 0
    let first_row = text
        .lines()
        .find(|l| !l.starts_with('#') && !l.starts_with("r,"))
        .unwrap();
    let psi0: f64 = first_row.split(',').nth(1).unwrap().parse().unwrap();
    assert_eq!(psi0, 0.0);
}

#[test]
fn sweep_emits_a_plot_script_next_to_the_output() {
    let dir = std::env::temp_dir().join("lvosc-sweep-plot");
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("sweep.csv");
    let out = run(&[
        "sweep",
        "--config",
        fixture("cornell_lsv.conf").to_str().unwrap(),
        "--var",
        "chi",
        "--from",
        "0",
        "--to",
        "2",
        "--points",
        "5",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let script = std::fs::read_to_string(dir.join("sweep.gp")).unwrap();
    assert!(script.contains("set datafile separator ','"));
    assert!(script.contains("'sweep.csv'"));
    assert!(std::fs::read_to_string(&csv).unwrap().contains(",ok"));
    std::fs::remove_dir_all(&dir).ok();
}
