use std::process::{Command, Output};

use modvir::{Field, Ring, VermaVector};
use serde_json::Value;

fn modvir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modvir"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = modvir(&all);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(&out)).expect("valid JSON")
}

fn terms(v: &Value) -> Vec<(Vec<u64>, String)> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let parts = t["partition"]
                .as_array()
                .unwrap()
                .iter()
                .map(|n| n.as_u64().unwrap())
                .collect();
            (parts, t["coeff"].as_str().unwrap().to_string())
        })
        .collect()
}

#[test]
fn singvec_degree_six_vacuum() {
    let v = json(&[
        "singvec", "--c", "1/2", "--h", "0", "--degree", "6", "--char", "0", "--module", "vacuum",
    ]);
    let vectors = v["vectors"].as_array().unwrap();
    assert_eq!(vectors.len(), 1);
    // s / (-108)
    let want = vec![
        (vec![2, 2, 2], "-16/27".to_string()),
        (vec![3, 3], "-31/36".to_string()),
        (vec![4, 2], "22/9".to_string()),
        (vec![6], "1".to_string()),
    ];
    assert_eq!(terms(&vectors[0]), want);
}

#[test]
fn singvec_verma_degree_six_is_one_dimensional() {
    let v = json(&["singvec", "--h", "0", "--degree", "6"]);
    assert_eq!(v["vectors"].as_array().unwrap().len(), 1);
}

#[test]
fn singvec_u_in_characteristic_seven() {
    let v = json(&[
        "singvec", "--h", "0", "--degree", "4", "--char", "7", "--module", "vacuum",
    ]);
    // u = L(-2)^2 - 2L(-4), scaled by -1/2 = 3 mod 7
    let want = vec![(vec![2, 2], "3 mod 7".to_string()), (vec![4], "1 mod 7".to_string())];
    assert_eq!(terms(&v["vectors"][0]), want);
}

#[test]
fn singvec_degree_three_is_empty() {
    let v = json(&["singvec", "--c", "1/2", "--h", "0", "--degree", "3", "--char", "0"]);
    assert!(v["vectors"].as_array().unwrap().is_empty());
}

#[test]
fn singvec_output_round_trips() {
    let v = json(&["singvec", "--h", "1/16", "--degree", "4"]);
    let vec = &v["vectors"][0];
    let parsed = VermaVector::from_json(vec, Ring::Field(Field::Rational)).unwrap();
    assert_eq!(&parsed.to_json(), vec);
}

#[test]
fn output_is_deterministic() {
    let args = ["singvec", "--h", "1/2", "--degree", "3", "--format", "json"];
    assert_eq!(modvir(&args).stdout, modvir(&args).stdout);
}

#[test]
fn irrdims_char_zero() {
    let v = json(&["irrdims", "--c", "1/2", "--h", "0", "--char", "0", "--max", "4"]);
    let dims: Vec<u64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["irreducible"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, [1, 0, 1, 1, 2]);
}

#[test]
fn irrdims_char_seven_flags_degree_four() {
    let out = modvir(&[
        "irrdims",
        "--h",
        "0",
        "--char",
        "7",
        "--max",
        "4",
        "--compare-char0",
        "--format",
        "csv",
    ]);
    let text = stdout(&out);
    let flagged: Vec<&str> = text.lines().skip(1).filter(|l| l.ends_with("DIFF")).collect();
    assert_eq!(flagged.len(), 1);
    assert!(flagged[0].starts_with("4,"));
}

#[test]
fn irrdims_char_eleven_matches_char_zero() {
    let v = json(&[
        "irrdims",
        "--h",
        "1/16",
        "--char",
        "11",
        "--max",
        "6",
        "--compare-char0",
    ]);
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["diff"], Value::Bool(false));
        assert_eq!(row["irreducible"], row["char0"]);
    }
}

#[test]
fn characteristic_two_is_rejected() {
    let out = modvir(&["singvec", "--h", "0", "--degree", "2", "--char", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("characteristic 2"));
}

#[test]
fn bad_scalar_is_rejected() {
    let out = modvir(&["singvec", "--h", "one", "--degree", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fock_dims_use_half_integer_weights() {
    let v = json(&["fock-dims", "--sector", "ns", "--parity", "1", "--max", "3"]);
    let weights: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["weight"].as_str().unwrap())
        .collect();
    assert_eq!(weights, ["1/2", "3/2", "5/2", "7/2"]);
}

#[test]
fn vir_span_matches_sector() {
    let v = json(&["vir-span", "--sector", "r", "--parity", "0", "--max", "8"]);
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["span"], row["sector"]);
    }
}

#[test]
fn hwvec_weight_fifteen_halves_in_char_seven() {
    let v = json(&[
        "hwvec", "--sector", "ns", "--parity", "1", "--degree", "7", "--char", "7",
    ]);
    assert_eq!(v["weight"], "15/2");
    assert_eq!(v["vectors"].as_array().unwrap().len(), 1);
    let none = json(&["hwvec", "--sector", "ns", "--parity", "1", "--degree", "7"]);
    assert!(none["vectors"].as_array().unwrap().is_empty());
}

#[test]
fn mode_apply_classification() {
    let v = json(&["mode-apply", "--h", "h", "--state", "s", "--mode", "5"]);
    // 64h^3 - 36h^2 + 2h, constant term first
    let coeff = &v["result"][0]["coeff"];
    assert_eq!(coeff, &serde_json::json!(["0", "2", "-36", "64"]));
}

#[test]
fn mode_apply_checks_annihilation() {
    let ok = modvir(&["mode-apply", "--h", "1/16", "--mode", "5", "--check-max", "3"]);
    assert!(ok.status.success());
    let bad = modvir(&["mode-apply", "--h", "1/4", "--mode", "5", "--check-max", "2"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn mode_apply_word_state() {
    let v = json(&[
        "mode-apply",
        "--h",
        "0",
        "--state",
        "[-4,-2]",
        "--mode",
        "6",
        "--target",
        "[-2]",
    ]);
    assert_eq!(terms(&v["result"]), [(vec![1], "191/4".to_string())]);
}

#[test]
fn verify_char7_subset_passes() {
    let out = modvir(&["verify-paper", "--only", "char7"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("criterion 4: PASS"));
}

#[test]
fn verify_fock_subset_passes() {
    let v = json(&["verify-paper", "--only", "fock"]);
    assert_eq!(v["passed"], Value::Bool(true));
    assert!(v["checks"].as_array().unwrap().len() >= 8);
}

#[test]
fn verify_reports_h_zero_scalar() {
    let out = modvir(&["verify-paper", "--only", "scalar", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let check = &v["checks"][0];
    assert_eq!(check["status"], "reported-value");
    assert!(check["value"].as_str().unwrap().starts_with("k = 66 = 2 * 3 * 11"));
}

#[test]
fn verify_exit_code_follows_failures() {
    let out = modvir(&["verify-paper", "--only", "c3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("criterion 3: FAIL"));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("modvir-cli-test-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = modvir(&["fock-dims", "--max", "2", "--format", "json", "--out", p]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    std::fs::remove_file(path).unwrap();
}
