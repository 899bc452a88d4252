use std::process::{Command, Output};

use serde_json::Value;

fn tercode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tercode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_writes_generator_and_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.gmatrix");
    let out = tercode(&[
        "construct",
        "--n",
        "4",
        "--family",
        "char",
        "--s",
        "2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "[80,5]");
    let g = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = g.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines
        .iter()
        .all(|l| l.len() == 80 && l.bytes().all(|b| (b'0'..=b'2').contains(&b))));
    let meta: Value =
        serde_json::from_str(&std::fs::read_to_string(path.with_extension("json")).unwrap())
            .unwrap();
    assert_eq!(meta["schema"], 1);
    assert_eq!(meta["indices"], serde_json::json!([0, 1]));
    assert_eq!(meta["dimension"], 5);
}

#[test]
fn invalid_input_exits_2() {
    let odd = tercode(&["construct", "--n", "3", "--family", "char", "--s", "1"]);
    assert_eq!(odd.status.code(), Some(2));
    let big_s = tercode(&["construct", "--n", "4", "--family", "ternary", "--s", "6"]);
    assert_eq!(big_s.status.code(), Some(2));
    let bad_indices = tercode(&[
        "verify",
        "--n",
        "4",
        "--family",
        "char",
        "--s",
        "2",
        "--indices",
        "1,1",
    ]);
    assert_eq!(bad_indices.status.code(), Some(2));
    let unknown_family = tercode(&["weights", "--n", "4", "--family", "quux", "--s", "1"]);
    assert_eq!(unknown_family.status.code(), Some(2));
}

#[test]
fn weights_csv_sums_to_code_size() {
    let out = tercode(&["weights", "--n", "4", "--family", "ternary", "--s", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("weight,multiplicity"));
    let rows: Vec<(u64, u64)> = lines
        .map(|l| {
            let (w, m) = l.split_once(',').unwrap();
            (w.parse().unwrap(), m.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows.iter().map(|r| r.1).sum::<u64>(), 243);
    for method in ["brute", "closed"] {
        let other = tercode(&[
            "weights", "--n", "4", "--family", "ternary", "--s", "2", "--method", method,
        ]);
        assert_eq!(stdout(&other), text);
    }
}

#[test]
fn walsh_csv_row() {
    let out = tercode(&[
        "walsh",
        "--n",
        "2",
        "--family",
        "char",
        "--s",
        "1",
        "--indices",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "w_index,a,b,twice_re,case");
    assert_eq!(lines.len(), 10);
    // w = (1,2) has index 1 + 2*3 = 7
    assert_eq!(lines[8], "7,-2,2,-6,dual:1:first");
    assert_eq!(lines[1], "0,7,2,12,zero");
}

#[test]
fn verify_headline_minimal() {
    let out = tercode(&[
        "verify", "--n", "6", "--family", "char", "--s", "2", "--method", "both",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "Minimal");
    assert_eq!(v["methods_agree"], true);
    assert_eq!(v["ratio"], "52/511");
    assert_eq!(v["ab_satisfied"], false);
    assert_eq!(v["wt_min"], 52);
    assert_eq!(v["wt_max"], 511);
    assert!(v["runtime_ms"].is_u64());
    assert_eq!(
        v["hypotheses"],
        serde_json::json!({"n_at_least_6": true, "s_not_excluded": true})
    );
}

#[test]
fn verify_not_minimal_exits_3_with_witness() {
    for method in ["brute", "walsh"] {
        let out = tercode(&[
            "verify", "--n", "4", "--family", "char", "--s", "1", "--method", method,
        ]);
        assert_eq!(out.status.code(), Some(3));
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["verdict"], "NotMinimal");
        assert!(v["witness"].is_object());
        assert_eq!(v["method"], method);
    }
}

#[test]
fn outputs_are_deterministic() {
    let args = [
        "verify",
        "--n",
        "4",
        "--family",
        "ternary",
        "--s",
        "2",
        "--no-timing",
    ];
    let a = tercode(&args);
    let b = tercode(
        &["--sequential"]
            .iter()
            .chain(&args)
            .copied()
            .collect::<Vec<_>>(),
    );
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert!(v.get("runtime_ms").is_none());
}

#[test]
fn reproduce_has_no_mismatch() {
    let out = tercode(&["reproduce"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], 1);
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.iter().all(|e| e["status"] != "mismatch"));
    let by_id = |id: &str| entries.iter().find(|e| e["id"] == id).unwrap().clone();
    let table = by_id("weights.n4.char.s2");
    assert_eq!(table["status"], "corrected");
    assert!(table["expected"].as_str().unwrap().contains("52:32"));
    assert!(table["computed"].as_str().unwrap().contains("52:128"));
    assert_eq!(by_id("ab.n6.char.s2")["computed"], "52/511");
    assert_eq!(by_id("spectrum.char.dual_value")["status"], "corrected");
}

#[test]
fn export_gmatrix_matches_construct() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.gmatrix");
    let common = ["--n", "2", "--family", "ternary", "--s", "1"];
    let c = tercode(
        &["construct"]
            .iter()
            .chain(&common)
            .chain(&["--output", path.to_str().unwrap()])
            .copied()
            .collect::<Vec<_>>(),
    );
    assert_eq!(stdout(&c).trim(), "[8,3]");
    let e = tercode(
        &["export"]
            .iter()
            .chain(&common)
            .chain(&["--format", "gmatrix"])
            .copied()
            .collect::<Vec<_>>(),
    );
    assert_eq!(stdout(&e), std::fs::read_to_string(&path).unwrap());
}
