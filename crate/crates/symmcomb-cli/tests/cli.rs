//! End-to-end tests against the built binary: exit codes, report shapes,
//! determinism, config precedence, and the cache directory.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symmcomb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 output")
}

fn json(output: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(output)).expect("json output")
}

#[test]
fn involution_report_for_the_split_plane() {
    let out = run(&["involution", "--preset", "A2-split"]);
    assert!(out.status.success());
    let value = json(&out);
    assert_eq!(value["tool"], "symmcomb");
    assert_eq!(value["diagram"]["preset"], "A2-split");
    assert_eq!(value["payload"]["restricted_type"], "A2");
    assert_eq!(value["payload"]["sigma_on_weights"][0][0], -1);
    assert_eq!(value["payload"]["exceptional_roots"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_dim_matches_the_worked_example() {
    let out = run(&[
        "verify-dim",
        "--preset",
        "A1-split",
        "--lambda",
        "2",
        "--coords",
        "theta",
        "--format",
        "text",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("6 = 5+1 PASS"), "got: {}", stdout(&out));
}

#[test]
fn unknown_preset_is_invalid_input() {
    let out = run(&["involution", "--preset", "Z9-bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn weight_outside_the_lattice_is_invalid_input() {
    let out = run(&[
        "verify-dim",
        "--preset",
        "A1-split",
        "--lambda",
        "1",
        "--coords",
        "omega",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_diagram_is_invalid_input() {
    let out = run(&["involution", "--cartan", "B2", "--arrows", "1:2"]);
    assert_eq!(out.status.code(), Some(2));
    let message = String::from_utf8(out.stderr).unwrap();
    assert!(message.contains("Satake"), "got: {message}");
}

#[test]
fn identical_configs_give_byte_identical_reports() {
    let args = ["lspaths", "--preset", "B2-split", "--lambda", "1,1", "--coords", "theta"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn flags_win_over_the_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.toml");
    std::fs::write(&path, "preset = \"A2-split\"\nformat = \"text\"\n").unwrap();
    let out = run(&[
        "involution",
        "--config",
        path.to_str().unwrap(),
        "--preset",
        "A1-split",
    ]);
    assert!(out.status.success());
    // the diagram source comes from the flag, the format from the file
    let text = stdout(&out);
    assert!(text.starts_with("# symmcomb"), "got: {text}");
    assert!(text.contains("restricted type A1"), "got: {text}");
}

#[test]
fn explicit_satake_data_matches_the_preset() {
    let from_flags = run(&["involution", "--cartan", "B3", "--black", "1,3"]);
    let from_preset = run(&["involution", "--preset", "B3-l1"]);
    assert!(from_flags.status.success());
    let a = json(&from_flags);
    let b = json(&from_preset);
    assert_eq!(a["payload"], b["payload"]);
}

#[test]
fn config_file_with_explicit_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.toml");
    std::fs::write(
        &path,
        "cartan_matrix = [[2, -1], [-1, 2]]\nblack = []\narrows = [[1, 2]]\n",
    )
    .unwrap();
    let out = run(&["involution", "--config", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(json(&out)["payload"]["restricted_type"], "BC1");
}

#[test]
fn tensor_engines_agree_through_the_cli() {
    let paths = run(&[
        "tensor", "--preset", "B2-split", "--lambda", "1,1", "--mu", "1,0", "--coords", "omega",
        "--engine", "paths",
    ]);
    let characters = run(&[
        "tensor", "--preset", "B2-split", "--lambda", "1,1", "--mu", "1,0", "--coords", "omega",
        "--engine", "characters",
    ]);
    assert!(paths.status.success());
    assert_eq!(
        json(&paths)["payload"]["components"],
        json(&characters)["payload"]["components"]
    );
}

#[test]
fn prv_witness_through_the_cli() {
    let out = run(&[
        "prv", "--preset", "A1-split", "--nu", "0", "--lambda", "1", "--mu", "1",
        "--coords", "theta",
    ]);
    assert!(out.status.success());
    let value = json(&out);
    assert_eq!(value["payload"]["verified"], true);
    assert_eq!(value["payload"]["witness"]["lambda_prime"][0], "2");
}

#[test]
fn accept_passes_on_a_preset() {
    let out = run(&["accept", "--preset", "A2-swap", "--theta-bound", "1", "--box-bound", "2"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["payload"]["pass"], true);
}

#[test]
fn cache_directory_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["lattice", "--preset", "B3-l1"];
    let first = Command::new(env!("CARGO_BIN_EXE_symmcomb"))
        .args(args)
        .env("SYMMCOMB_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(first.status.success());
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1, "one content-addressed entry");
    let second = Command::new(env!("CARGO_BIN_EXE_symmcomb"))
        .args(args)
        .env("SYMMCOMB_CACHE", dir.path())
        .output()
        .unwrap();
    assert_eq!(first.stdout, second.stdout);
    // a corrupted entry is recomputed, not trusted
    let path = entries[0].as_ref().unwrap().path();
    std::fs::write(&path, "{broken").unwrap();
    let third = Command::new(env!("CARGO_BIN_EXE_symmcomb"))
        .args(args)
        .env("SYMMCOMB_CACHE", dir.path())
        .output()
        .unwrap();
    assert_eq!(first.stdout, third.stdout);
}

#[test]
fn csv_is_rejected_where_no_table_exists() {
    let out = run(&["involution", "--preset", "A1-split", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn monomial_csv_has_a_header_and_rows() {
    let out = run(&[
        "monomials", "--preset", "A1-split", "--lambda", "2", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "exponents,factors");
    assert_eq!(lines.len(), 7, "header plus six monomials");
}

#[test]
fn output_file_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "lattice", "--preset", "A1-split", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["payload"]["theta_basis"][0][0], "2");
}

#[test]
fn sweep_reports_are_identical_across_worker_counts() {
    let serial = run(&["prv", "--preset", "B3-l1", "--sweep", "--bound", "2", "--jobs", "1"]);
    let parallel = run(&["prv", "--preset", "B3-l1", "--sweep", "--bound", "2", "--jobs", "4"]);
    assert!(serial.status.success());
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn two_diagram_sources_are_rejected() {
    let out = run(&["involution", "--preset", "A1-split", "--cartan", "A1"]);
    assert_eq!(out.status.code(), Some(2));
}
