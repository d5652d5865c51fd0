use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logharmonic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn construct(n: u32, dir: &Path, extra: &[&str]) -> Output {
    let n = n.to_string();
    let out = dir.to_str().unwrap();
    let mut args = vec!["construct", "--n", &n, "--out", out];
    args.extend_from_slice(extra);
    run(&args)
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn construct_degree_two() {
    let dir = TempDir::new().unwrap();
    let out = construct(2, dir.path(), &["--svg"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let report = read_json(&dir.path().join("report.json"));
    assert_eq!(report["counts"]["total"], 5);
    assert_eq!(report["counts"]["n_plus"], 2);
    assert_eq!(report["counts"]["n_minus"], 3);
    assert_eq!(report["extremal"], true);
    assert_eq!(report["winding"], 1);

    let svg = fs::read_to_string(dir.path().join("plot.svg")).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("class=\"zero sense_preserving\"").count(), 2);
    assert_eq!(svg.matches("class=\"zero sense_reversing\"").count(), 3);
    assert_eq!(svg.matches("class=\"pole\"").count(), 2);
    assert!(svg.contains("large-circle"));

    let diagnostics = read_json(&dir.path().join("diagnostics.json"));
    assert_eq!(diagnostics["orbit"]["periodic_detected"], false);
    let instance = read_json(&dir.path().join("instance.json"));
    assert_eq!(instance["counts"], report["counts"]);
}

#[test]
fn degree_one_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    assert_eq!(construct(1, dir.path(), &[]).status.code(), Some(2));
    assert_eq!(run(&["construct"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_round_trip() {
    let dir = TempDir::new().unwrap();
    assert_eq!(construct(3, dir.path(), &[]).status.code(), Some(0));
    for file in ["report.json", "instance.json"] {
        let path = dir.path().join(file);
        let out = run(&["verify", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{file}: {out:?}");
    }
}

#[test]
fn verify_rejects_malformed_input() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ \"version\": 1, \"n\": ").unwrap();
    assert_eq!(
        run(&["verify", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let missing = dir.path().join("missing.json");
    assert_eq!(
        run(&["verify", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_detects_perturbed_coefficient() {
    let dir = TempDir::new().unwrap();
    assert_eq!(construct(3, dir.path(), &[]).status.code(), Some(0));
    let path = dir.path().join("report.json");
    let mut doc = read_json(&path);
    let a0 = doc["p_coeffs"][0][0].as_f64().unwrap();
    doc["p_coeffs"][0][0] = Value::from(a0 + 1e-2);
    let perturbed = dir.path().join("perturbed.json");
    fs::write(&perturbed, serde_json::to_string(&doc).unwrap()).unwrap();
    // the counts drop from 8 to 4, which is a mismatch and not an invariant violation
    let out = run(&["verify", perturbed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4), "{out:?}");
}

#[test]
fn verify_flags_tampered_counts() {
    let dir = TempDir::new().unwrap();
    assert_eq!(construct(2, dir.path(), &[]).status.code(), Some(0));
    let path = dir.path().join("report.json");
    let mut doc = read_json(&path);
    doc["counts"]["n_plus"] = Value::from(1);
    let tampered = dir.path().join("tampered.json");
    fs::write(&tampered, serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(
        run(&["verify", tampered.to_str().unwrap()]).status.code(),
        Some(4)
    );
}

#[test]
fn construct_is_reproducible() {
    let a = TempDir::new().unwrap();
    let b = TempDir::new().unwrap();
    assert_eq!(
        construct(4, a.path(), &["--seed", "7"]).status.code(),
        Some(0)
    );
    assert_eq!(
        construct(4, b.path(), &["--seed", "7"]).status.code(),
        Some(0)
    );
    for file in ["report.json", "instance.json", "diagnostics.json"] {
        assert_eq!(
            fs::read(a.path().join(file)).unwrap(),
            fs::read(b.path().join(file)).unwrap(),
            "{file}"
        );
    }
}

#[test]
fn exhausted_schedule_writes_failure_record() {
    let dir = TempDir::new().unwrap();
    let out = construct(3, dir.path(), &["--schedule", "0.9,0.8"]);
    assert_eq!(out.status.code(), Some(3));
    let failure = read_json(&dir.path().join("failure.json"));
    assert_eq!(failure["stage"], "delta_search");
    assert_eq!(failure["kind"], "exhausted");
    assert!(!dir.path().join("report.json").exists());
}

#[test]
fn bad_schedule_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let out = construct(3, dir.path(), &["--schedule", "0.01,0.1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        read_json(&dir.path().join("failure.json"))["stage"],
        "config"
    );
}

#[test]
fn explicit_seed_points() {
    let dir = TempDir::new().unwrap();
    let out = construct(
        3,
        dir.path(),
        &["--strategy", "explicit", "--points", "-1.1,1.1"],
    );
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let report = read_json(&dir.path().join("report.json"));
    assert_eq!(report["counts"]["total"], 8);
}

#[test]
fn blaschke_command() {
    let out = run(&["blaschke", "--n", "2", "--delta", "0.2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let x = v["x_star"].as_f64().unwrap();
    assert!((x - (0.8 - 0.48f64.sqrt()) / 0.4).abs() <= 1e-12);
    let out = run(&["blaschke", "--n", "2", "--delta", "-0.2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    // outside |delta| < (n - 1)/(n + 1)
    let out = run(&["blaschke", "--n", "2", "--delta", "0.5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn perturb_then_report_and_solve() {
    let dir = TempDir::new().unwrap();
    let instance = dir.path().join("instance.json");
    let out = run(&[
        "perturb",
        "--poly",
        "2,-2,1",
        "--delta",
        "0.1",
        "--out",
        instance.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let doc = read_json(&instance);
    assert_eq!(doc["n"], 2);
    assert!((doc["c"][0].as_f64().unwrap() - 10.0).abs() < 1e-12);

    let out = run(&["report", instance.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["counts"]["total"], 5);

    let out = run(&["solve", instance.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let zeros: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(zeros.as_array().unwrap().len(), 5);

    assert_eq!(
        run(&["verify", instance.to_str().unwrap()]).status.code(),
        Some(0)
    );
    let out = run(&["sweep", instance.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let sweep: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(sweep["fraction"], 1.0);
}

#[test]
fn perturb_rejects_bad_delta() {
    assert_eq!(
        run(&["perturb", "--n", "2", "--delta", "1.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["perturb", "--n", "2", "--delta", "0"]).status.code(),
        Some(2)
    );
}
