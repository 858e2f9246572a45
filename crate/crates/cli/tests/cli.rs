use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_clifford-forge"));
    cmd.env_remove("CLIFFORD_FORGE_SEED");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn sample(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(name)
}

#[test]
fn catalog_lists_small_groups() {
    let out = run(&["catalog", "--max-order", "6"]);
    assert!(out.status.success());
    let names: Vec<String> = stdout(&out)
        .lines()
        .map(|l| l.split('\t').next().unwrap().to_string())
        .collect();
    assert_eq!(names, ["C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3"]);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--suite", "nosuch"][..],
        &["verify", "--no-such-flag"],
        &["verify", "--primes", "4"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"), "{args:?}");
    }
}

#[test]
fn scenario_file_runs() {
    let out = run(&["scenario", sample("s3-a3.scn").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.ends_with("summary: 6 checks, 6 pass, 0 fail, 0 info, 0 skip\n"));
}

#[test]
fn wrong_expectation_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(sample("s3-a3.scn"))
        .unwrap()
        .replace("claim=inertia-order 3", "claim=inertia-order 6");
    std::fs::write(dir.path().join("bad.scn"), text).unwrap();
    std::fs::copy(sample("a3-faithful.rep"), dir.path().join("a3-faithful.rep")).unwrap();
    let out = run(&["scenario", dir.path().join("bad.scn").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL inertia-order s3-a3"));
}

#[test]
fn malformed_scenario_exits_2_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.scn");
    std::fs::write(&path, "id=x\nfield=seven\n").unwrap();
    let out = run(&["scenario", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn report_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "report",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
        "--suite",
        "direct-product",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("wrote "));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let entries = json["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    for e in entries {
        for key in ["scenario", "claim", "verdict", "witness", "ms"] {
            assert!(e.get(key).is_some(), "missing {key}");
        }
        assert_eq!(e["verdict"], "PASS");
        assert!(e["ms"].is_null());
    }
}

#[test]
fn seed_variable_overrides_flag() {
    let args = ["verify", "--suite", "forma", "--max-order", "6"];
    let flagged = bin().args(args).args(["--seed", "5"]).output().unwrap();
    let env = bin().args(args).args(["--seed", "1"]).env("CLIFFORD_FORGE_SEED", "5").output().unwrap();
    let other = bin().args(args).args(["--seed", "1"]).output().unwrap();
    assert!(flagged.status.success() && env.status.success());
    assert_eq!(flagged.stdout, env.stdout);
    assert_ne!(flagged.stdout, other.stdout);
}

#[test]
fn empty_catalog_reports_nothing_to_check() {
    let out = run(&["verify", "--suite", "narr", "--max-order", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "summary: 0 checks, 0 pass, 0 fail, 0 info, 0 skip\n");
}
