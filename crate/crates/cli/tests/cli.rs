use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    root.to_string_lossy().into_owned()
}

fn gforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gforge")).args(args).env_remove("GFORGE_CAPS").output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = gforge(&all);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

#[test]
fn invariants_of_d6() {
    let (code, v) = json(&["invariants", "--input", &data("d6.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["kNames"], serde_json::json!(["e", "t"]));
    assert_eq!(v["field"]["label"], "Q");
}

#[test]
fn classify_pauli() {
    let (code, v) = json(&["classify", "--input", &data("pauli.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["divisionForm"], true);
    assert_eq!(v["stronglyVP"], true);
    assert_eq!(v["essentiallyVP"], true);
}

#[test]
fn identity_commands() {
    let p = data("pauli.json");
    let (code, v) = json(&["identity", "--input", &p, "--input2", &data("zero_polynomial.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["isIdentity"], true);
    let (_, v) = json(&["identity", "--input", &p, "--input2", &data("pauli_anticommutator.json")]);
    assert_eq!(v["isIdentity"], true);
    let (_, v) = json(&["identity", "--input", &p, "--input2", &data("pauli_commutator.json")]);
    assert_eq!(v["isIdentity"], false);
    assert_eq!(v["falsifying"].as_array().unwrap().len(), 2);
}

#[test]
fn normalize_output_reparses() {
    let (code, v) = json(&["normalize", "--input", &data("d6.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["k"], serde_json::json!([0, 2]));
    let spec: gforge::schema::PresentationSpec = serde_json::from_value(v["presentation"].clone()).unwrap();
    let q = spec.build(&gforge::Caps::default()).unwrap();
    assert_eq!(q.len(), 8);
}

#[test]
fn iso_h2_witness_kform() {
    let (_, v) = json(&["iso", "--input", &data("d6.json"), "--input2", &data("d6_moved.json")]);
    assert_eq!(v["isomorphic"], true);
    let (_, v) = json(&["iso", "--input", &data("d6.json"), "--input2", &data("d6_small.json")]);
    assert_eq!(v["isomorphic"], false);
    let (code, _) = json(&["iso", "--input", &data("d6.json"), "--input2", &data("trivial.json")]);
    assert_eq!(code, 2);
    let (_, v) = json(&["h2", "--input", &data("h2_z2xz2.json")]);
    assert_eq!(v["count"], 2);
    let (_, v) = json(&["witness", "--input", &data("matrix_eeg.json")]);
    assert_eq!(v["conditionsHold"], true);
    assert_eq!(v["z1"], "w1 y1 x1 y2 x2 y3 x3 y4 x4 y5 w2 y6 x5 y7 w3");
    assert_eq!(v["ad"].as_array().unwrap().len(), 24);
    let (_, v) = json(&["kform", "--input", &data("pauli.json")]);
    assert_eq!(v["verified"], true);
}

#[test]
fn exit_codes() {
    let (code, v) = json(&["classify", "--input", &data("disconnected.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "precondition");
    let (code, v) = json(&["validate", "--input", &data("disconnected.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["connected"], false);

    let dir = std::env::temp_dir().join(format!("gforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"group\":").unwrap();
    let (code, v) = json(&["validate", "--input", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(gforge(&["validate"]).status.code(), Some(1));
    assert_eq!(gforge(&["validate", "--input", &data("d6.json"), "--word-bound", "1"]).status.code(), Some(1));
    assert_eq!(gforge(&["nonsense"]).status.code(), Some(1));

    let (code, _) = json(&["identity", "--input", &data("matrix_eeg.json"), "--input2", &data("pauli_commutator.json"), "--budget", "1"]);
    assert_ne!(code, 0);
    let out = Command::new(env!("CARGO_BIN_EXE_gforge"))
        .args(["invariants", "--json", "--input", &data("d6.json")])
        .env("GFORGE_CAPS", "group_order=4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn budget_exceeded_is_exit_three() {
    let dir = std::env::temp_dir().join(format!("gforge-budget-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let poly = dir.join("triple.json");
    std::fs::write(
        &poly,
        r#"{"vars":[{"id":"x","degree":0},{"id":"y","degree":0},{"id":"z","degree":0}],
            "monomials":[{"coeff":{"modulus":1,"coeffs":[[1,1]]},"seq":["x","y","z"]}]}"#,
    )
    .unwrap();
    let (code, v) = json(&["identity", "--input", &data("matrix_eeg.json"), "--input2", poly.to_str().unwrap(), "--budget", "10"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "limit");
}

#[test]
fn deterministic_and_worker_independent() {
    for cmd in ["invariants", "normalize", "classify", "witness", "kform"] {
        let input = data("matrix_eg.json");
        let a = gforge(&[cmd, "--json", "--input", &input]).stdout;
        let b = gforge(&[cmd, "--json", "--input", &input]).stdout;
        let c = gforge(&[cmd, "--json", "--input", &input, "--workers", "1"]).stdout;
        let d = gforge(&[cmd, "--json", "--input", &input, "--workers", "3"]).stdout;
        assert_eq!(a, b, "{cmd}");
        assert_eq!(a, c, "{cmd}");
        assert_eq!(a, d, "{cmd}");
        assert!(serde_json::from_slice::<Value>(&a).is_ok());
    }
}

#[test]
fn text_mode_is_readable() {
    let out = gforge(&["classify", "--input", &data("pauli.json")]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("divisionForm: true"));
}
