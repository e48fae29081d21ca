//! End-to-end tests of the `ppo` binary: outputs, exit codes, cache
//! behaviour, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ppo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ppo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ppo-cli-test-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn classes_table_lists_expected_rows() {
    let out = ppo(&["classes", "--n", "7", "--group", "sl"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let c3 = text
        .lines()
        .find(|l| l.starts_with("C_3"))
        .expect("C_3 row");
    assert!(c3.contains("42") && c3.contains('8'), "{c3}");

    let out = ppo(&["classes", "--n", "5", "--group", "esl"]);
    let text = stdout(&out);
    let d1 = text
        .lines()
        .find(|l| l.starts_with("D_1"))
        .expect("D_1 row");
    let fields: Vec<&str> = d1.split_whitespace().collect();
    assert_eq!(fields[1], "1", "size of D_1");
    assert_eq!(fields[2], "4", "order of D_1");
}

#[test]
fn classes_rejects_non_prime() {
    let out = ppo(&["classes", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orbit_counts_on_stdout() {
    let out = ppo(&[
        "orbits", "--n", "7", "--group", "sl", "--method", "burnside",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "360\n");

    let out = ppo(&[
        "orbits", "--n", "7", "--group", "esl", "--method", "burnside",
    ]);
    assert_eq!(stdout(&out), "210\n");
}

#[test]
fn explicit_orbits_json_document() {
    let out = ppo(&[
        "orbits", "--n", "3", "--group", "sl", "--method", "explicit", "--format", "json",
    ]);
    assert!(out.status.success());
    let file = ppo_core::catalog::CatalogFile::from_json(&stdout(&out)).unwrap();
    file.validate().unwrap();
    let ppo_core::catalog::CatalogBody::OrbitCatalog(doc) = &file.body else {
        panic!("wrong payload kind");
    };
    assert_eq!(doc.orbit_count, 2);
    let sizes: Vec<u64> = doc
        .orbits
        .as_ref()
        .unwrap()
        .iter()
        .map(|o| o.size)
        .collect();
    assert_eq!(sizes, vec![1, 8]);
}

#[test]
fn infeasible_method_exits_3() {
    let out = ppo(&["orbits", "--n", "11", "--method", "explicit"]);
    assert_eq!(out.status.code(), Some(3));
    let out = ppo(&["spectra", "--n", "11"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn spectra_cache_round_trip_is_byte_identical() {
    let cache = temp_dir("cache");
    let args = [
        "spectra",
        "--n",
        "3",
        "--format",
        "json",
        "--cache-dir",
        cache.to_str().unwrap(),
    ];
    let first = ppo(&args);
    assert!(first.status.success());
    // the cache file now exists and the second run must serve the same bytes
    let entries: Vec<_> = std::fs::read_dir(&cache).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let second = ppo(&args);
    assert_eq!(first.stdout, second.stdout);

    let file = ppo_core::catalog::CatalogFile::from_json(&stdout(&first)).unwrap();
    file.validate().unwrap();
    std::fs::remove_dir_all(&cache).unwrap();
}

#[test]
fn spectra_n5_census_counts() {
    let cache = temp_dir("n5");
    let out = ppo(&[
        "spectra",
        "--n",
        "5",
        "--format",
        "csv",
        "--cache-dir",
        cache.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let counts: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(
        counts,
        vec!["1", "24", "120", "120", "40", "120", "80", "80", "40"]
    );
    std::fs::remove_dir_all(&cache).unwrap();
}

#[test]
fn wigner_of_maximally_mixed_state_is_flat() {
    let out = ppo(&["wigner", "--n", "3", "--rvec", "0,0,0,0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("+0.333333").count(), 9);
    assert!(text.contains("total mass (sum/N): 1.000000"));
}

#[test]
fn wigner_json_grid() {
    let out = ppo(&[
        "wigner", "--n", "3", "--rvec", "0,1,2,0", "--state", "mub:0,1", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 3);
    let values = doc["values"].as_array().unwrap();
    assert_eq!(values.len(), 3);
    // the state lives on the vertical line q = 1 of this net
    let total: f64 = values[1]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .sum();
    assert!((total - 3.0).abs() < 1e-9);
}

#[test]
fn wigner_rejects_malformed_input() {
    assert_eq!(
        ppo(&["wigner", "--n", "3", "--rvec", "0,1,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ppo(&["wigner", "--n", "3", "--rvec", "0,1,2,x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ppo(&["wigner", "--n", "3", "--rvec", "0,1,2,0", "--state", "mub:9,0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_reports_and_exits_clean() {
    let out = ppo(&["verify", "--n", "5", "--suite", "field"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("verify n=5 suite=field seed=0"));
    assert!(text.contains("[PASS] field.residue_counts"));
    assert!(text.contains("0 failed"));
}

#[test]
fn identical_flags_identical_bytes() {
    let a = ppo(&["classes", "--n", "7", "--group", "esl", "--format", "json"]);
    let b = ppo(&["classes", "--n", "7", "--group", "esl", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);

    let a = ppo(&[
        "fixed-points",
        "--n",
        "5",
        "--group",
        "esl",
        "--format",
        "csv",
    ]);
    let b = ppo(&[
        "fixed-points",
        "--n",
        "5",
        "--group",
        "esl",
        "--format",
        "csv",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn fixed_points_tables() {
    let out = ppo(&[
        "fixed-points",
        "--n",
        "5",
        "--group",
        "esl",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    // determinant −1 rows only, with the full fixed-point columns
    assert!(text.contains("\"C_{-1,0}\",30,2,5,125,25"), "{text}");
    assert!(text.contains("\"C_{-1,2}\",20,12,1,1,1"), "{text}");
    assert_eq!(text.lines().count(), 10, "header plus nine classes");

    let out = ppo(&[
        "fixed-points",
        "--n",
        "3",
        "--group",
        "sl",
        "--format",
        "csv",
    ]);
    let text = stdout(&out);
    assert!(text.contains("D_2,1,1,9,81,9"), "{text}");
}

#[test]
fn out_flag_writes_catalog_document() {
    let dir = temp_dir("out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("classes.json");
    let out = ppo(&["classes", "--n", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    ppo_core::catalog::CatalogFile::from_json(&body)
        .unwrap()
        .validate()
        .unwrap();

    // orbits writes the full catalog and still prints the count
    let path = dir.join("orbits.json");
    let out = ppo(&[
        "orbits",
        "--n",
        "5",
        "--group",
        "esl",
        "--method",
        "explicit",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "9\n");
    let body = std::fs::read_to_string(&path).unwrap();
    let file = ppo_core::catalog::CatalogFile::from_json(&body).unwrap();
    file.validate().unwrap();
    let ppo_core::catalog::CatalogBody::OrbitCatalog(doc) = &file.body else {
        panic!("wrong payload kind");
    };
    assert_eq!(doc.orbits.as_ref().unwrap().len(), 9);
    std::fs::remove_dir_all(&dir).unwrap();
}
