use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_grassmann"))
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {stdout}"));
    (out.status.code().unwrap(), value, stdout)
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn f(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() < 1e-9
}

fn r4_pair(dir: &TempDir) -> (PathBuf, PathBuf) {
    (
        write(dir, "v.json", r#"{"field":"real","ambient_dim":4,"vectors":[[1,0,1,0],[0,1,0,1]]}"#),
        write(dir, "w.json", r#"{"field":"real","ambient_dim":4,"vectors":[[1,0,0,0],[0,1,0,0]]}"#),
    )
}

#[test]
fn angle_report_for_real_planes() {
    let dir = TempDir::new().unwrap();
    let (v, w) = r4_pair(&dir);
    let (code, r, _) = run(&["angle", s(&v), s(&w), "--degrees"]);
    assert_eq!(code, 0);
    assert_eq!(r["units"], "degrees");
    assert!(close(f(&r["theta"]), 60.0));
    assert!(close(f(&r["theta_reverse"]), 60.0));
    assert!(close(f(&r["theta_perp"]), 60.0));
    let pa: Vec<f64> = r["principal_angles"].as_array().unwrap().iter().map(f).collect();
    assert_eq!(pa.len(), 2);
    assert!(pa.iter().all(|&x| close(x, 45.0)));
    assert!(close(f(&r["projection_factor"]), 0.5));
    assert!(close(f(&r["fubini_study"]), 60.0));

    let (_, rad, _) = run(&["angle", s(&v), s(&w)]);
    assert_eq!(rad["units"], "radians");
    assert!(close(f(&rad["theta"]), std::f64::consts::FRAC_PI_3));
}

#[test]
fn same_file_twice() {
    let dir = TempDir::new().unwrap();
    let (v, _) = r4_pair(&dir);
    let (code, r, _) = run(&["angle", s(&v), s(&v), "--degrees"]);
    assert_eq!(code, 0);
    for k in ["theta", "theta_reverse", "theta_min_sym", "theta_max_sym", "fubini_study"] {
        assert!(close(f(&r[k]), 0.0), "{k}");
    }
    assert!(r["principal_angles"].as_array().unwrap().iter().all(|x| close(f(x), 0.0)));
    assert!(close(f(&r["theta_perp"]), 90.0));
}

#[test]
fn oriented_flag_uses_frame_order() {
    let dir = TempDir::new().unwrap();
    let (v, w) = r4_pair(&dir);
    let swapped = write(&dir, "ws.json", r#"{"field":"real","ambient_dim":4,"vectors":[[0,1,0,0],[1,0,0,0]]}"#);
    let (_, a, _) = run(&["angle", s(&v), s(&w), "--oriented"]);
    let (_, b, _) = run(&["angle", s(&v), s(&swapped), "--oriented"]);
    assert!(close(f(&a["oriented"]["cos"]), 0.5));
    assert!(close(f(&b["oriented"]["cos"]), -0.5));
    assert!(close(f(&b["oriented"]["phase"]), std::f64::consts::PI));
}

#[test]
fn complex_documents() {
    let dir = TempDir::new().unwrap();
    let line = write(&dir, "l.json", r#"{"field":"complex","ambient_dim":2,"vectors":[[[1,0],[0,0]]]}"#);
    let diag = write(&dir, "d.json", r#"{"field":"complex","ambient_dim":2,"vectors":[[[1,0],[0,1]]]}"#);
    let (code, r, _) = run(&["angle", s(&line), s(&diag), "--degrees", "--oriented"]);
    assert_eq!(code, 0);
    assert!(close(f(&r["theta"]), 45.0));
    assert!(close(f(&r["projection_factor"]), 0.5));
    let cos = r["oriented"]["cos"].as_array().unwrap();
    assert!(close(f(&cos[0]), 0.5f64.sqrt()) && close(f(&cos[1]), 0.0));
}

#[test]
fn invalid_inputs_exit_2_naming_the_field() {
    let dir = TempDir::new().unwrap();
    let (v, _) = r4_pair(&dir);
    let r3 = write(&dir, "r3.json", r#"{"field":"real","ambient_dim":3,"vectors":[[1,0,0]]}"#);
    let c4 = write(&dir, "c4.json", r#"{"field":"complex","ambient_dim":4,"vectors":[]}"#);
    let bad = write(&dir, "bad.json", r#"{"field":"real","ambient_dim":2,"vectors":[[1,0],[0,true]]}"#);
    let cases = [
        (vec!["angle", s(&v), s(&r3)], "ambient_dim"),
        (vec!["angle", s(&v), s(&c4)], "field"),
        (vec!["angle", s(&bad), s(&bad)], "left.vectors[1][1]"),
        (vec!["principal", s(&v), "/nonexistent/x.json"], "right"),
        (vec!["random", "3", "4"], "dim"),
    ];
    for (args, field) in cases {
        let (code, r, _) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(r["error"]["field"], field, "{args:?}");
        assert!(!r["error"]["message"].as_str().unwrap().is_empty());
    }
}

#[test]
fn random_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let (code, r, _) = run(&["random", "5", "2", "--field", "complex", "--seed", "9", "--out", s(p)]);
        assert_eq!(code, 0);
        assert_eq!(r["out"], s(p));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let doc: Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    assert_eq!(doc["field"], "complex");
    assert_eq!(doc["vectors"].as_array().unwrap().len(), 2);
    let (_, other, _) = run(&["random", "5", "2", "--field", "complex", "--seed", "10"]);
    assert_ne!(other, doc);
}

#[test]
fn random_extreme_dimensions() {
    let dir = TempDir::new().unwrap();
    let (code, zero, _) = run(&["random", "4", "0"]);
    assert_eq!(code, 0);
    assert_eq!(zero["vectors"], Value::Array(vec![]));
    assert_eq!(zero["ambient_dim"], 4);

    let full = dir.path().join("full.json");
    run(&["random", "4", "4", "--out", s(&full)]);
    let (code, r, _) = run(&["angle", s(&full), s(&full)]);
    assert_eq!(code, 0);
    assert!(close(f(&r["theta"]), 0.0));
    assert_eq!(r["dim_left"], 4);
}

#[test]
fn principal_bases() {
    let dir = TempDir::new().unwrap();
    let (v, w) = r4_pair(&dir);
    let (code, r, _) = run(&["principal", s(&v), s(&w), "--degrees"]);
    assert_eq!(code, 0);
    assert_eq!(r["angles"].as_array().unwrap().len(), 2);
    assert_eq!(r["left_basis"].as_array().unwrap().len(), 2);
    assert!(r["cosines"].as_array().unwrap().iter().all(|c| close(f(c), 0.5f64.sqrt())));
    let z = write(&dir, "z.json", r#"{"field":"real","ambient_dim":4,"vectors":[]}"#);
    let (code, r, _) = run(&["principal", s(&z), s(&w)]);
    assert_eq!(code, 0);
    assert_eq!(r["angles"], Value::Array(vec![]));
}

#[test]
fn geodesic_between_adjacent_planes() {
    let dir = TempDir::new().unwrap();
    let u = write(&dir, "u.json", r#"{"field":"real","ambient_dim":3,"vectors":[[1,0,0],[0,1,0]]}"#);
    let w = write(&dir, "w.json", r#"{"field":"real","ambient_dim":3,"vectors":[[1,0,0],[0,1,1]]}"#);
    let end = dir.path().join("end.json");
    let t = std::f64::consts::FRAC_PI_4.to_string();
    let (code, _, _) = run(&["geodesic", s(&u), s(&w), "--t", &t, "--out", s(&end)]);
    assert_eq!(code, 0);
    let (_, r, _) = run(&["angle", s(&end), s(&w)]);
    assert!(f(&r["theta"]).abs() < 1e-7);
    let (_, mid, _) = run(&["geodesic", s(&u), s(&w), "--t", "0.3"]);
    assert_eq!(mid["vectors"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_reports() {
    let (code, r, _) = run(&["verify", "--suite", "bounds", "--trials", "0"]);
    assert_eq!(code, 0);
    assert_eq!(r["passed"], true);
    assert!(r["note"].as_str().unwrap().contains("0 trials"));

    let args = ["verify", "--suite", "oriented", "--dim-max", "4", "--trials", "20", "--seed", "5"];
    let (code, r, first) = run(&args);
    assert_eq!(code, 0);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let (_, _, second) = run(&args);
    assert_eq!(first, second);

    let (code, r, _) = run(&["verify", "--suite", "everything"]);
    assert_eq!(code, 2);
    assert_eq!(r["error"]["kind"], "usage");
}

#[test]
fn full_harness_passes() {
    let (code, r, _) = run(&["verify", "--suite", "all", "--dim-max", "6", "--trials", "500", "--seed", "42"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["passed"], true);
}

#[test]
fn help_is_plain_text() {
    let out = Command::new(env!("CARGO_BIN_EXE_grassmann")).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("Usage"));
}
