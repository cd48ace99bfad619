use std::process::{Command, Output};

use serde_json::Value;

fn yangian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yangian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

/// `(coeff, left, right)` triples of one coefficient, each word as
/// `[row, col, mode]` symbols.
fn terms(series: &Value, k: usize) -> Vec<(String, Value, Value)> {
    let mut out: Vec<_> = series["coeffs"][k - 1]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["coeff"].as_str().unwrap().to_string(), t["left"].clone(), t["right"].clone()))
        .collect();
    out.sort_by_key(|t| format!("{t:?}"));
    out
}

#[test]
fn delta_e_leading_coefficients() {
    let out = yangian(&["expand", "delta-e", "--n", "2", "--order", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["target"], "delta-e");
    assert_eq!(v["mode"], "sl");
    let s = &v["series"];
    assert_eq!(s["constant"], "0");
    // e^(0) = T12^(1): Delta is primitive
    let e0 = serde_json::json!([[1, 2, 1]]);
    let one = serde_json::json!([]);
    let mut want = vec![
        ("1".to_string(), e0.clone(), one.clone()),
        ("1".to_string(), one.clone(), e0.clone()),
    ];
    want.sort_by_key(|t| format!("{t:?}"));
    assert_eq!(terms(s, 1), want);
    // degree 2 is e^(1) ⊗ 1 + 1 ⊗ e^(1) + e^(0) ⊗ h^(0)
    let e = json_of(&yangian(&["expand", "phi-e", "--n", "2", "--order", "2"]));
    let h = json_of(&yangian(&["expand", "phi-h", "--n", "2", "--order", "2"]));
    let words = |v: &Value, k: usize| -> Vec<(String, Value)> {
        v["series"]["coeffs"][k - 1]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| (t["coeff"].as_str().unwrap().to_string(), t["word"].clone()))
            .collect()
    };
    let mut want = Vec::new();
    for (c, w) in words(&e, 2) {
        want.push((c.clone(), w.clone(), one.clone()));
        want.push((c, one.clone(), w));
    }
    for (c, w) in words(&h, 1) {
        want.push((c, e0.clone(), w));
    }
    want.sort_by_key(|t| format!("{t:?}"));
    assert_eq!(terms(s, 2), want);
    // the formula and the pullback agree term by term
    let pull = yangian(&["expand", "delta-e", "--n", "2", "--order", "2", "--format", "json", "--source", "pullback"]);
    assert_eq!(json_of(&pull)["series"], v["series"]);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["expand", "delta-h", "--n", "3", "--order", "2", "--i", "2", "--format", "json"];
    let a = yangian(&args);
    let b = yangian(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let args = ["verify", "r-matrix", "--n", "2", "--format", "json"];
    assert_eq!(yangian(&args).stdout, yangian(&args).stdout);
}

#[test]
fn qdet_and_full_minor() {
    let q = yangian(&["expand", "qdet", "--n", "2", "--order", "1", "--format", "json"]);
    assert_eq!(q.status.code(), Some(0));
    let qv = json_of(&q);
    assert_eq!(qv["mode"], "gl");
    assert_eq!(qv["series"]["constant"], "1");
    let words: Vec<_> = qv["series"]["coeffs"][0]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["coeff"].as_str().unwrap().to_string(), t["word"].clone()))
        .collect();
    assert_eq!(
        words,
        vec![
            ("1".to_string(), serde_json::json!([[1, 1, 1]])),
            ("1".to_string(), serde_json::json!([[2, 2, 1]])),
        ]
    );
    let m = yangian(&["expand", "minor", "--n", "2", "--order", "1", "--rows", "1,2", "--cols", "1,2", "--format", "json"]);
    assert_eq!(json_of(&m)["series"], qv["series"]);
}

#[test]
fn gauss_components_are_keyed() {
    let out = yangian(&["expand", "gauss", "--n", "3", "--order", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let keys: Vec<_> = v["components"].as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["e12", "e13", "e23", "f21", "f31", "f32", "k1", "k2", "k3"]);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(yangian(&["verify", "r-matrix", "--n", "3"]).status.code(), Some(0));
    assert_eq!(yangian(&["verify", "--suite", "r-matrix", "--n", "2"]).status.code(), Some(0));
    assert_eq!(yangian(&["verify", "theorem5", "--n", "3", "--order", "3"]).status.code(), Some(0));
    // the printed S(h(u+1)) display is off by one shift
    let sl2 = yangian(&["verify", "sl2", "--order", "4"]);
    assert_eq!(sl2.status.code(), Some(1));
    let text = String::from_utf8(sl2.stdout).unwrap();
    assert!(text.contains("sl2 S(h(u+1)): differs first at u^-3; repaired by: D.e+1, D.f+1"), "{text}");
}

#[test]
fn verify_json_reports_status() {
    let out = yangian(&["verify", "drinfeld", "--n", "2", "--order", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["status"], "pass");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["expand", "qdet", "--n", "7"][..],
        &["expand", "delta-e", "--n", "2", "--i", "2"],
        &["expand", "minor", "--rows", "1,2", "--cols", "1"],
        &["expand", "s-e", "--mode", "gl"],
        &["verify"],
        &["verify", "sl2", "--n", "3"],
        &["verify", "all", "--format", "latex"],
        &["verify", "nonsense"],
        &["frobnicate"],
    ] {
        assert_eq!(yangian(args).status.code(), Some(2), "{args:?}");
    }
}
