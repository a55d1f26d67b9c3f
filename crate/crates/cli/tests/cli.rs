use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-covers"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str], expected_code: i32) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(expected_code),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).expect("json output");
    assert_eq!(v["schema"], "hecke-covers/1");
    v
}

fn rat(num: i64, den: i64) -> Value {
    json!({"num": num.to_string(), "den": den.to_string()})
}

#[test]
fn datum_reports() {
    let v = run_json(&["datum", "--type", "C", "--rank", "2", "--n", "3"], 0);
    assert_eq!(v["oasitic"], true);
    assert_eq!(v["Y_Qn_basis"], json!([[3, 0], [0, 3]]));
    assert_eq!(v["rank"], 2);
    let v = run_json(&["datum", "--type", "A", "--rank", "2", "--n", "3"], 0);
    assert_eq!(v["oasitic"], false);
    assert_eq!(v["oasitic_condition"], "gcd(n, 3) = 1");
    let v = run_json(&["datum", "--type", "A", "--rank", "1", "--n", "1"], 0);
    assert_eq!(v["center_invariant_factors"], json!([]));
    assert_eq!(v["heart_invariant_factors"], json!([]));
    assert_eq!(v["n_alpha"], json!([1]));
}

#[test]
fn whittaker_rows() {
    let dims = |v: &Value| -> Vec<Value> {
        v["rows"].as_array().unwrap().iter().map(|r| r["closed_form_dimension"].clone()).collect()
    };
    let v = run_json(&["whittaker", "--type", "G", "--rank", "2", "--n", "7"], 0);
    assert_eq!(dims(&v), vec![json!(8), json!(4)]);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["agrees"] == true));
    let v = run_json(&["whittaker", "--type", "F", "--rank", "4", "--n", "5"], 0);
    assert_eq!(v["rows"][1]["brute_force_dimension"], 0);
    let v = run_json(&["whittaker", "--type", "B", "--rank", "2", "--n", "1"], 0);
    assert_eq!(v["rows"][0]["sigma"], "steinberg");
    assert_eq!(v["rows"][0]["brute_force_dimension"], 1);
}

#[test]
fn whittaker_refusals() {
    let out = run(&["whittaker", "--type", "A", "--rank", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd(n, 3) = 1"));
    let v = run_json(&["whittaker", "--type", "E", "--rank", "7", "--n", "5"], 3);
    assert_eq!(v["rows"][0]["brute_force_dimension"], Value::Null);
    assert_eq!(v["rows"][0]["closed_form_dimension"], 22);
    let v = run_json(&["whittaker", "--type", "B", "--rank", "3", "--n", "3", "--cap", "10"], 3);
    assert_eq!(v["brute_force_skipped"], true);
}

#[test]
fn formal_degree_steinberg() {
    let args = ["formal-degree", "--type", "A", "--rank", "1", "--n", "1", "--sigma", "steinberg", "--q", "4", "--L", "40"];
    let v = run_json(&args, 0);
    assert_eq!(v["status"], "converged");
    assert_eq!(v["deg_inverse_estimate"], rat(5, 3));
    assert_eq!(v["deg_estimate"], rat(3, 5));
    assert_eq!(v["canonical_degree"], rat(16, 5));
    assert_eq!(v["gradings_agree"], true);
    assert_eq!(v["partial_sums"].as_array().unwrap().len(), 41);
}

#[test]
fn formal_degree_edge_cases() {
    let base = ["formal-degree", "--type", "A", "--rank", "1", "--q", "4"];
    let v = run_json(&[&base[..], &["--L", "0"]].concat(), 3);
    assert_eq!(v["partial_sums"], json!([rat(1, 1)]));
    assert_eq!(v["status"], "not_converged");
    let v = run_json(&[&base[..], &["--L", "6", "--sigma", "trivial"]].concat(), 3);
    assert_eq!(v["status"], "divergent");
    let c: Vec<u64> = v["contributions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| {
            assert_eq!(x["den"], "1");
            x["num"].as_str().unwrap().parse().unwrap()
        })
        .collect();
    assert!(c.windows(2).all(|w| w[0] <= w[1]), "{c:?}");
    let v = run_json(&["formal-degree", "--type", "C", "--rank", "2", "--q", "3", "--L", "10", "--sigma", "-1,1,-1"], 3);
    assert_eq!(v["sigma"], "xi(-1,1,-1)");
    assert_eq!(v["gradings_agree"], true);
}

#[test]
fn validation_failures_exit_2() {
    for args in [
        &["formal-degree", "--type", "A", "--rank", "1", "--L", "5"][..],
        &["formal-degree", "--type", "A", "--rank", "1", "--q", "1", "--L", "5"],
        &["formal-degree", "--type", "A", "--rank", "1", "--q", "4"],
        &["formal-degree", "--type", "A", "--rank", "1", "--q", "4", "--L", "3", "--sigma", "2"],
        &["datum", "--type", "E", "--rank", "9"],
        &["datum", "--type", "X", "--rank", "2"],
        &["datum", "--type", "A", "--rank", "2", "--n", "0"],
        &["datum", "--type", "A"],
        &["lengths", "--type", "A", "--rank", "1"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn length_tables() {
    let v = run_json(&["poincare", "--type", "A", "--rank", "1", "--n", "1", "--L", "5"], 0);
    assert_eq!(v["counts_GQn"], json!([1, 2, 2, 2, 2, 2]));
    assert_eq!(v["counts_G"], json!([1, 2, 2, 2, 2, 2]));
    let out = run(&["lengths", "--type", "A", "--rank", "1", "--n", "3", "--L", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "y,s,l_G,l_GQn");
    assert_eq!(lines[1], "0,e,0,0");
    assert!(lines.contains(&"3,e,6,2"), "{text}");
    let out = run(&["lengths", "--type", "B", "--rank", "2", "--L", "1", "--format", "csv"]);
    assert!(String::from_utf8(out.stdout).unwrap().lines().any(|l| l.starts_with("\"0,0\",e,")));
}

#[test]
fn output_is_deterministic_and_redirectable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let args = ["whittaker", "--type", "C", "--rank", "3", "--n", "5"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let out = run(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let keys: Vec<usize> = ["\"brute_force_skipped\"", "\"cap\"", "\"command\"", "\"n\"", "\"rows\"", "\"schema\"", "\"type\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn pretty_and_csv_formats() {
    let out = run(&["whittaker", "--type", "G", "--rank", "2", "--n", "5", "--format", "pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("steinberg"));
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["steinberg", "sign", "5", "5", "true"]));
    let out = run(&["whittaker", "--type", "G", "--rank", "2", "--n", "5", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("sigma,weyl_character,brute_force,closed_form,agrees"));
    assert!(text.contains("\"xi(-1,1)\",sign_long,2,2,true"));
}
