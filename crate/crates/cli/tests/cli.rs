use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hecke-atlas"));
    c.env_remove("HECKE_ATLAS_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const SP4_TRIVIAL: &str = r#"{"ambient": {"family": "Orthogonal", "dim": 5}, "summands": [{"class": "triv", "a": 1, "mult": 5}]}"#;
const SO7_TRIVIAL: &str = r#"{"ambient": {"family": "Symplectic", "dim": 6}, "summands": [{"class": "triv", "a": 1, "mult": 6}]}"#;

#[test]
fn specialize_so_odd_rank_two_has_four_rows() {
    let o = run(&["specialize", "--kind", "so-odd", "--rank", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json(&o);
    let pairs: Vec<(u64, u64)> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["dPlus"].as_u64().unwrap(), r["dMinus"].as_u64().unwrap()))
        .collect();
    assert_eq!(pairs, vec![(0, 0), (0, 2), (2, 0), (2, 2)]);
}

#[test]
fn rank_zero_is_an_input_error() {
    let o = run(&["enumerate", "--group", "sp", "--rank", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("rank must be positive"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        run(&[
            "specialize",
            "--kind",
            "so-odd",
            "--rank",
            "2",
            "--frobnicate"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&["specialize", "--kind", "e8", "--rank", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn weyl_suite_passes_and_writes_report() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("lemA3.json");
    let o = run(&[
        "verify",
        "--suite",
        "lemA3",
        "--max-rank",
        "4",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["suite"], "relative-weyl");
    assert_eq!(report["failed"], 0);
    let cases = report["cases"].as_array().unwrap();
    assert_eq!(cases.len() as u64, report["passed"].as_u64().unwrap());
    for c in cases {
        let d = c["digest"].as_str().unwrap();
        assert!(d.len() == 64 && d.chars().all(|ch| ch.is_ascii_hexdigit()));
        assert_eq!(c["status"], "pass");
    }
}

#[test]
fn flagged_cases_need_permission() {
    let strict = run(&["verify", "--suite", "thm16", "--max-rank", "3"]);
    let report = json(&strict);
    assert_eq!(report["failed"], 0);
    assert!(report["flagged"].as_u64().unwrap() > 0);
    assert_eq!(strict.status.code(), Some(1));
    let allowed = run(&[
        "verify",
        "--suite",
        "thm16",
        "--max-rank",
        "3",
        "--allow-flagged",
    ]);
    assert_eq!(allowed.status.code(), Some(0));
}

#[test]
fn supports_of_the_sp4_trivial_orbit() {
    let p = temp_file("sp4.json", SP4_TRIVIAL);
    let o = run(&["supports", "--param", p.to_str().unwrap()]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let out = json(&o);
    assert_eq!(out["pairs"].as_array().unwrap().len(), 12);
    assert!(out["duplicates"].as_array().unwrap().is_empty());
}

#[test]
fn hecke_descriptors_of_the_so7_trivial_orbit() {
    let p = temp_file("so7.json", SO7_TRIVIAL);
    let o = run(&["hecke", "--param", p.to_str().unwrap()]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let out = json(&o);
    let supports = out["supports"].as_array().unwrap();
    assert_eq!(supports.len(), 6);
    assert!(supports
        .iter()
        .all(|s| s["factors"].as_array().unwrap().len() == 1));
    assert_eq!(out["reduction"][0]["family"], "SO");
    assert_eq!(out["reduction"][0]["size"], 7);
}

#[test]
fn malformed_parameters_exit_two() {
    let bad = temp_file("bad.json", "{\"ambient\": ");
    assert_eq!(
        run(&["supports", "--param", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let wrong_dim = temp_file(
        "wrong_dim.json",
        &SP4_TRIVIAL.replace("\"dim\": 5", "\"dim\": 7"),
    );
    let o = run(&["hecke", "--param", wrong_dim.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("dimension mismatch"));
    assert_eq!(
        run(&["supports", "--param", "/nonexistent/p.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn cuspidal_enumeration_reports_counts() {
    let o = run(&["enumerate", "--group", "sp", "--rank", "2", "--cuspidal"]);
    assert_eq!(o.status.code(), Some(0));
    let out = json(&o);
    assert_eq!(out["mode"], "cuspidal");
    let params = out["parameters"].as_array().unwrap();
    assert_eq!(params.len() as u64, out["count"].as_u64().unwrap());
    assert!(params.iter().all(|p| p["supercuspidals"]["plus"].is_u64()));
}

#[test]
fn enumeration_writes_to_file() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("u3.json");
    let o = run(&[
        "enumerate",
        "--group",
        "u",
        "--rank",
        "3",
        "--discrete",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(out["ambient"]["family"], "UnitaryL");
    assert!(out["count"].as_u64().unwrap() > 0);
}

#[test]
fn output_is_identical_across_thread_counts() {
    for args in [
        vec!["verify", "--suite", "thm11", "--max-rank", "6"],
        vec!["enumerate", "--group", "o-even", "--rank", "3"],
    ] {
        let outputs: Vec<Vec<u8>> = ["1", "3"]
            .iter()
            .map(|t| {
                bin()
                    .env("HECKE_ATLAS_THREADS", t)
                    .args(&args)
                    .output()
                    .unwrap()
                    .stdout
            })
            .collect();
        assert!(!outputs[0].is_empty());
        assert_eq!(outputs[0], outputs[1], "{args:?}");
    }
}

#[test]
fn bad_thread_count_is_an_input_error() {
    let o = bin()
        .env("HECKE_ATLAS_THREADS", "many")
        .args(["specialize", "--kind", "sp", "--rank", "1"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn in_process_runs_match_exit_codes() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = hecke_atlas_cli::run(
        [
            "hecke-atlas",
            "specialize",
            "--kind",
            "unitary",
            "--rank",
            "5",
        ],
        &mut out,
        &mut err,
    );
    assert_eq!(code, hecke_atlas_cli::EXIT_OK);
    let rows: Value = serde_json::from_slice(&out).unwrap();
    // m = 5: d₊ ∈ {1} and d₋ ∈ {0, 2}, each in both buckets
    assert_eq!(rows.as_array().unwrap().len(), 4);
}
