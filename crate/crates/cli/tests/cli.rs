use std::path::Path;
use std::process::{Command, Output};

fn hv(args: &[&str], cache_dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hv"));
    cmd.args(args).env_remove("HV_CACHE_DIR");
    if let Some(dir) = cache_dir {
        cmd.env("HV_CACHE_DIR", dir);
    }
    cmd.output().expect("hv runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

/// Drops every timing field so runs can be compared.
fn strip_timing(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Object(map) => {
            map.remove("elapsed");
            map.remove("elapsed_total");
            map.values_mut().for_each(strip_timing);
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[test]
fn conjecture_json_has_twelve_passing_entries() {
    let out = hv(
        &[
            "verify",
            "--suite",
            "conjecture",
            "--n-max",
            "3",
            "--format",
            "json",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 12);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    assert_eq!(v["summary"]["pass"], 12);
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["version"], 1);
    assert_eq!(v["config"]["n_max"], 3);
}

#[test]
fn zero_n_max_is_a_usage_error() {
    let out = hv(&["verify", "--suite", "toda", "--n-max", "0"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_suite_and_format_are_usage_errors() {
    assert_eq!(
        hv(&["verify", "--suite", "nope", "--n-max", "2"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hv(&["verify", "--format", "xml", "--n-max", "2"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hv(&["verify", "--workers", "0", "--n-max", "2"], None)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn corrupt_cache_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.tau");
    std::fs::write(&path, "not a cache\n").unwrap();
    let out = hv(
        &[
            "verify",
            "--suite",
            "toda",
            "--cache",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn build_then_verify_loads_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.tau");
    let p = path.to_str().unwrap();
    let built = hv(&["build", "--n-max", "4", "--cache", p], None);
    assert_eq!(
        built.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&built.stderr)
    );
    assert!(path.exists());

    let out = hv(
        &[
            "verify", "--suite", "toda", "--cache", p, "--format", "json",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("loaded"), "{stderr}");
    assert!(!stderr.contains("built"), "{stderr}");
    let v = json(&out);
    assert_eq!(v["config"]["n_max"], 4);
    // tau, g, f for n = 1..3
    assert_eq!(v["checks"].as_array().unwrap().len(), 9);
}

#[test]
fn cache_directory_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        hv(&["build", "--n-max", "3"], Some(dir.path()))
            .status
            .code(),
        Some(0)
    );
    assert!(dir.path().join("tau_family.cache").exists());
    let out = hv(&["verify", "--suite", "mixed"], Some(dir.path()));
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("loaded"));
}

#[test]
fn build_without_a_cache_location_is_a_usage_error() {
    assert_eq!(hv(&["build", "--n-max", "2"], None).status.code(), Some(2));
}

#[test]
fn json_is_deterministic_apart_from_timing() {
    let args = [
        "verify",
        "--suite",
        "symmetries",
        "--suite",
        "weyl",
        "--n-max",
        "3",
        "--format",
        "json",
    ];
    let mut one = json(&hv(&[&args[..], &["--workers", "1"]].concat(), None));
    let mut other = json(&hv(&[&args[..], &["--workers", "1"]].concat(), None));
    strip_timing(&mut one);
    strip_timing(&mut other);
    assert_eq!(one, other);

    let mut threaded = json(&hv(&[&args[..], &["--workers", "3"]].concat(), None));
    strip_timing(&mut threaded);
    assert_eq!(one["checks"], threaded["checks"]);
}

#[test]
fn text_report_ends_with_a_summary() {
    let out = hv(&["verify", "--suite", "mixed", "--n-max", "3"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text
        .lines()
        .last()
        .unwrap()
        .starts_with("summary: 2 pass, 0 fail"));
}

#[test]
fn bench_emits_one_row_per_level() {
    let out = hv(&["bench", "--n-max", "5", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0]["tau_terms"], 2);
    for key in ["tau_terms", "tau_terms_xy"] {
        let terms: Vec<u64> = rows.iter().map(|r| r[key].as_u64().unwrap()).collect();
        assert!(terms.windows(2).all(|w| w[0] <= w[1]), "{key}: {terms:?}");
    }
    assert!(rows[4]["toda_secs"].is_null());
    assert!(rows[0]["toda_secs"].is_number());
}
