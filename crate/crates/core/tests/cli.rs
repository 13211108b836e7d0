use std::fs;
use std::process::{Command, Output};

fn delannoy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delannoy"))
        .args(args)
        .env_remove("DELANNOY_CACHE_DIR")
        .output()
        .expect("spawn delannoy")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn gen_delannoy_text() {
    let out = delannoy(&["gen", "delannoy", "--nmax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n3\n13\n63\n321\n");
}

#[test]
fn gen_csv_and_json() {
    let out = delannoy(&["gen", "little-schroder", "--nmax", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "index,value\n1,1\n2,3\n3,11\n4,45\n");

    let out = delannoy(&["gen", "large-schroder", "--nmax", "3", "--format", "json"]);
    let doc = json(&out);
    let values: Vec<&str> = doc["entries"].as_array().unwrap().iter().map(|e| e["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["1", "2", "6", "22"]);
}

#[test]
fn gen_polynomials_use_coefficient_lists() {
    let out = delannoy(&["gen", "little-schroder-poly", "--nmax", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "index,value\n1,1\n2,\"1,2\"\n3,\"1,5,5\"\n");
}

#[test]
fn verify_theorem_1_2_small_primes() {
    let out = delannoy(&["verify", "thm1.2", "--pmax", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["status"], "pass");
    let report = &doc["reports"][0];
    assert_eq!(report["range"], "p in {5, 7}");
    assert_eq!(report["instances_checked"], 2);
}

#[test]
fn hypothesis_violations_exit_2() {
    for args in [
        &["verify", "thm1.3", "--n", "3"][..],
        &["verify", "thm1.2", "--p", "3"],
        &["verify", "thm1.2", "--p", "9"],
        &["verify", "lem4.2", "--n", "5"],
        &["verify", "thm9.9"],
        &["verify", "thm1.2", "--pmin", "10", "--pmax", "5"],
        &["gen", "catalan"],
        &["verify", "thm1.1", "--format", "yaml"],
    ] {
        let out = delannoy(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty(), "{args:?} printed no diagnostic");
    }
}

#[test]
fn single_instance_quotient() {
    let out = delannoy(&["verify", "thm1.3", "--n", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["reports"][0]["quotient"], "5");
}

#[test]
fn sweep_csv_schema() {
    let out = delannoy(&["verify", "lem2.1", "rec-s", "--nmax", "10", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "claim_id,param,status\nlem2.1,n=1..=10,pass\nrec-s,n=3..=10,pass\n");
}

#[test]
fn reports_follow_catalog_order() {
    let out = delannoy(&["verify", "rec-s", "thm1.1", "lem2.1", "--nmax", "5", "--format", "json"]);
    let ids: Vec<String> =
        json(&out)["reports"].as_array().unwrap().iter().map(|r| r["claim_id"].as_str().unwrap().to_owned()).collect();
    assert_eq!(ids, ["thm1.1", "lem2.1", "rec-s"]);
}

#[test]
fn deterministic_output_is_byte_identical() {
    for format in ["json", "csv", "text"] {
        let args = ["cert", "--nmax", "20", "--format", format, "--deterministic-timing"];
        let first = delannoy(&args);
        let second = delannoy(&args);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(first.stdout, second.stdout, "{format} output differs between runs");
    }
}

#[test]
fn failing_certificate_exits_1_and_still_reports() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/cert_f2_corrupted.json");
    let out = delannoy(&["cert", "--spec-file", fixture, "--nmax", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["status"], "fail");
    let failed: Vec<_> = doc["reports"].as_array().unwrap().iter().filter(|r| r["status"] == "fail").collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["claim_id"], "cert-f2");

    let text = delannoy(&["cert", "--spec-file", fixture, "--nmax", "5"]);
    assert_eq!(text.status.code(), Some(1));
    assert!(stdout(&text).contains("FAIL cert-f2"));
}

#[test]
fn malformed_spec_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{ not json").unwrap();
    let out = delannoy(&["cert", "--spec-file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = delannoy(&["cert", "--spec-file", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = delannoy(&["verify", "lem2.2", "--nmax", "5", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["reports"][0]["claim_id"], "lem2.2");
}

#[test]
fn cache_dir_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache_arg = cache.to_str().unwrap();
    let first = delannoy(&["gen", "delannoy", "--nmax", "6", "--cache-dir", cache_arg]);
    assert_eq!(first.status.code(), Some(0));
    let file = cache.join("delannoy.txt");
    assert_eq!(fs::read_to_string(&file).unwrap().lines().next(), Some("delannoy 6"));

    // a smaller request is served from the file
    let second = delannoy(&["gen", "delannoy", "--nmax", "4", "--cache-dir", cache_arg]);
    assert_eq!(stdout(&second), "1\n3\n13\n63\n321\n");

    // the environment variable supplies the default directory
    let env = Command::new(env!("CARGO_BIN_EXE_delannoy"))
        .args(["gen", "large-schroder", "--nmax", "3"])
        .env("DELANNOY_CACHE_DIR", &cache)
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(0));
    assert!(cache.join("large_schroder.txt").exists());

    // a corrupted cache is a configuration error, not a silent rebuild
    fs::write(&file, "delannoy 6\n1\n3\n").unwrap();
    let bad = delannoy(&["gen", "delannoy", "--nmax", "4", "--cache-dir", cache_arg]);
    assert_eq!(bad.status.code(), Some(2));
}
