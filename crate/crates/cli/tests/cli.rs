use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::Command;

fn catalogs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalogs")
}

struct Run {
    code: i32,
    json: Value,
    stderr: String,
}

fn run_in(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_arrowhead"))
        .args(args)
        .current_dir(dir)
        .env("ARROWHEAD_CACHE", dir.join("ir-cache.json"))
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    Run {
        code: out.status.code().unwrap(),
        json: if stdout.starts_with('{') { serde_json::from_str(&stdout).expect("stdout is JSON") } else { Value::Null },
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), args)
}

fn assert_envelope(r: &Run, command: &str) {
    let obj = r.json.as_object().expect("envelope object");
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["command", "elapsed_ms", "inputs", "result"]);
    assert_eq!(r.json["command"], command);
    assert!(r.json["elapsed_ms"].is_u64());
}

#[test]
fn arrows_exit_codes() {
    let r = run(&["arrows", "--f", "K_6", "--g", "K_3", "--h", "K_3"]);
    assert_eq!(r.code, 0);
    assert_envelope(&r, "arrows");
    assert_eq!(r.json["result"]["verdict"], "arrows");

    let r = run(&["arrows", "--f", "K5", "--g", "K3", "--h", "K3"]);
    assert_eq!(r.code, 10);
    assert_eq!(r.json["result"]["verdict"], "not-arrows");
    assert_eq!(r.json["result"]["witness"]["red"].as_array().unwrap().len(), 5);

    let r = run(&["arrows", "--f", "C~x", "--g", "K3", "--h", "K3"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("offset"), "{}", r.stderr);
}

#[test]
fn witness_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let r = run_in(dir.path(), &["arrows", "--f", "K5", "--g", "K3", "--h", "K3", "--out", "w.json"]);
    assert_eq!(r.code, 10);
    let r = run_in(dir.path(), &["verify", "--f", "K5", "--coloring", "w.json", "--g", "K3", "--h", "K3"]);
    assert_eq!(r.code, 0);
    assert_envelope(&r, "verify");
    assert_eq!(r.json["result"]["valid"], true);
}

#[test]
fn verify_outcomes() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("red.json"), r#"{"n":3,"red":[[0,1],[0,2],[1,2]],"blue":[]}"#).unwrap();
    let r = run_in(dir.path(), &["verify", "--f", "K3", "--coloring", "red.json", "--g", "K3", "--h", "K3"]);
    assert_eq!(r.code, 11);
    assert_eq!(r.json["result"]["violation"]["color"], "red");
    assert_eq!(r.json["result"]["violation"]["embedding"]["map"], serde_json::json!([0, 1, 2]));

    std::fs::write(dir.path().join("short.json"), r#"{"n":3,"red":[[0,1],[0,2]],"blue":[]}"#).unwrap();
    let r = run_in(dir.path(), &["verify", "--f", "K3", "--coloring", "short.json", "--g", "K3", "--h", "K3"]);
    assert_eq!(r.code, 1);
    assert!(r.json.is_null());

    std::fs::write(dir.path().join("bad.json"), r#"{"n":3,"red":[],"green":[]}"#).unwrap();
    let r = run_in(dir.path(), &["verify", "--f", "K3", "--coloring", "bad.json", "--g", "K3", "--h", "K3"]);
    assert_eq!(r.code, 1);
}

fn bound<'a>(r: &'a Run, code: &str) -> &'a Value {
    r.json["result"]["bounds"].as_array().unwrap().iter().find(|b| b["code"] == code).unwrap()
}

#[test]
fn bounds_examples() {
    let r = run(&["bounds", "--g", "2K2", "--h", "K3"]);
    assert_eq!(r.code, 0);
    assert_envelope(&r, "bounds");
    assert!(r.json["result"]["best"].as_u64().unwrap() >= 6);
    assert_eq!(bound(&r, "T3")["applicable"], true);
    assert_eq!(bound(&r, "T1")["applicable"], false);

    let r = run(&["bounds", "--g", "P3", "--h", "K3"]);
    assert_eq!(bound(&r, "T1")["value"], 6);

    let r = run(&["bounds", "--g", "K2", "--h", "K2"]);
    assert_eq!(r.json["result"]["best"], 2);
}

#[test]
fn construct_examples() {
    let dir = tempfile::tempdir().unwrap();
    let r = run_in(
        dir.path(),
        &["construct", "--f", "K5", "--alpha", "2", "--omega", "3", "--method", "t1", "--out-coloring", "c.json", "--out-trace", "t.json"],
    );
    assert_eq!(r.code, 0);
    assert_envelope(&r, "construct");
    assert_eq!(r.json["result"]["certified"], true);
    let trace: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("t.json")).unwrap()).unwrap();
    assert_eq!(trace["method"], "T1");
    assert!(trace["steps"][0]["role"].is_string() && trace["steps"][0]["vertices"].is_array());
    let r = run_in(dir.path(), &["verify", "--f", "K5", "--coloring", "c.json", "--g", "P3", "--h", "K3"]);
    assert_eq!(r.code, 0);

    let r = run(&["construct", "--f", "C5", "--method", "t1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["result"]["coloring"]["red"], serde_json::json!([]));

    let r = run(&["construct", "--f", "K9", "--alpha", "2", "--omega", "3", "--method", "t1"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("at most 5"), "{}", r.stderr);

    let r = run(&["construct", "--method", "ch", "--g", "P4", "--h", "K3"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["result"]["method"], "CH");

    // an uncertified coloring is still printed, with exit code 1
    let r = run(&["construct", "--f", "S4", "--alpha", "3", "--omega", "2", "--method", "t3"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json["result"]["certified"], false);
}

#[test]
fn ir_and_ramsey() {
    let dir = tempfile::tempdir().unwrap();
    let cat = catalogs();
    let cat = cat.to_str().unwrap();
    let r = run_in(dir.path(), &["ir", "--g", "2K2", "--h", "K2", "--catalog", cat]);
    assert_eq!(r.code, 0);
    assert_envelope(&r, "ir");
    assert_eq!(r.json["result"]["ir"], 4);
    assert_eq!(r.json["result"]["checked_orders"], serde_json::json!([1, 2, 3, 4]));
    assert!(dir.path().join("ir-cache.json").exists());
    let again = run_in(dir.path(), &["ir", "--g", "2K2", "--h", "K2", "--catalog", cat]);
    assert_eq!(again.json["result"], r.json["result"]);

    let r = run(&["ramsey", "--g", "K3", "--h", "K3", "--n-max", "7"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["result"]["outcome"], serde_json::json!({"kind": "exact", "n": 6}));

    let gap = tempfile::tempdir().unwrap();
    std::fs::copy(catalogs().join("n1.g6"), gap.path().join("n1.g6")).unwrap();
    let r = run(&["ir", "--g", "2K2", "--h", "K2", "--catalog", gap.path().to_str().unwrap(), "--no-cache"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("order 2"), "{}", r.stderr);

    let r = run(&["ir", "--g", "K2", "--h", "K2", "--catalog", cat, "--n-max", "9"]);
    assert_eq!(r.code, 1);
}

#[test]
fn results_are_deterministic() {
    let cat = catalogs();
    let commands: [&[&str]; 4] = [
        &["arrows", "--f", "K5", "--g", "P3", "--h", "K3"],
        &["bounds", "--g", "P4", "--h", "K3"],
        &["ir", "--g", "P3", "--h", "K3", "--catalog", cat.to_str().unwrap(), "--no-cache"],
        &["construct", "--f", "K5", "--method", "l2"],
    ];
    for args in commands {
        let (a, b) = (run(args), run(args));
        assert_eq!(a.code, b.code);
        assert_eq!(a.json["result"], b.json["result"], "{args:?}");
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["frobnicate"]).code, 1);
    assert_eq!(run(&["arrows", "--f", "K3"]).code, 1);
    assert_eq!(run(&["--help"]).code, 0);
}
