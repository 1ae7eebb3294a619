use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn coc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coc")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = coc(&full);
    let value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr)));
    (value, out.status.code().unwrap())
}

fn graph_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn sink_list(v: &Value) -> Vec<String> {
    v["results"]["sinks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["sink"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn sinks_edge_two() {
    let (v, code) = json(&["sinks", "--n", "7", "--k", "3", "--s", "2", "--variant", "edge"]);
    assert_eq!(code, 0);
    let mut got = sink_list(&v);
    got.sort();
    assert_eq!(got, vec!["0,1^4,2^2", "1^6,2"]);
    let first = &v["results"]["sinks"][0];
    assert_eq!(first["n"], 7);
    assert!(first["atoms"][0]["i"].is_u64() && first["atoms"][0]["ge"].is_u64());
    assert_eq!(first["provenance"]["kind"], "cross_edge");
}

#[test]
fn sinks_vertex_examples() {
    let (v, _) = json(&["sinks", "--n", "6", "--k", "3", "--s", "1", "--variant", "vertex"]);
    assert_eq!(sink_list(&v), vec!["1^6"]);
    let (v, _) = json(&["sinks", "--n", "6", "--k", "2", "--s", "3", "--variant", "vertex"]);
    assert_eq!(sink_list(&v), vec!["2^4,5^2"]);
}

#[test]
fn sinks_range_error_exits_two() {
    let out = coc(&["sinks", "--n", "6", "--k", "3", "--s", "6", "--variant", "vertex"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
    let out = coc(&["sinks", "--n", "8", "--k", "3", "--s", "3", "--variant", "edge"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_exit_codes() {
    let (v, code) = json(&[
        "check",
        "--seq",
        "2^3,3^28,4^5",
        "--k",
        "8",
        "--s",
        "1",
        "--variant",
        "vertex",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["results"]["verdict"], "blocked");
    let blockers: Vec<&str> = v["results"]["blockers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["sink"]["sequence"].as_str().unwrap())
        .collect();
    assert!(blockers.contains(&"3^8,6^28"));

    let (v, code) = json(&["check", "--seq", "5^6", "--k", "3", "--s", "2", "--variant", "edge"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["verdict"], "forcibly_p");

    let out = coc(&[
        "check",
        "--seq",
        "1,3,3,3",
        "--k",
        "3",
        "--s",
        "1",
        "--variant",
        "vertex",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Erdős–Gallai"));

    let out = coc(&[
        "check",
        "--seq",
        "1,1",
        "--n",
        "3",
        "--k",
        "2",
        "--s",
        "1",
        "--variant",
        "vertex",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn conditions_schema() {
    let (v, code) = json(&["conditions", "--n", "13", "--k", "5", "--s", "1", "--variant", "vertex"]);
    assert_eq!(code, 0);
    let thm = &v["results"];
    assert_eq!(
        thm["property"],
        serde_json::json!({"k": 5, "s": 1, "variant": "vertex", "n": 13})
    );
    assert_eq!(thm["conditions"].as_array().unwrap().len(), 3);
    for c in thm["conditions"].as_array().unwrap() {
        let idx: Vec<u64> = c["atoms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|a| a["i"].as_u64().unwrap())
            .collect();
        assert!(idx.windows(2).all(|w| w[0] < w[1]));
        assert!(c["sink"].is_string());
    }
}

#[test]
fn oracle_examples() {
    let f = graph_file("# three edges and a bridge\n6 4\n1 2\n3 4\n5 6\n1 3\n");
    let (v, code) = json(&["oracle", f.path().to_str().unwrap(), "--k", "3", "--measure", "lambda"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["value"], 1);
    assert_eq!(v["results"]["witness"], serde_json::json!([[1, 3]]));

    let f = graph_file("5 0\n");
    for measure in ["kappa", "lambda"] {
        let (v, _) = json(&["oracle", f.path().to_str().unwrap(), "--k", "2", "--measure", measure]);
        assert_eq!(v["results"]["value"], 0);
    }

    // K_2 joined to four isolated vertices.
    let mut text = String::from("6 9\n5 6\n");
    for v in 1..=4 {
        text.push_str(&format!("{v} 5\n{v} 6\n"));
    }
    let f = graph_file(&text);
    let (v, _) = json(&["oracle", f.path().to_str().unwrap(), "--k", "2", "--measure", "kappa"]);
    assert_eq!(v["results"]["value"], 2);
    assert_eq!(v["results"]["witness"], serde_json::json!([5, 6]));
}

#[test]
fn oracle_errors() {
    let f = graph_file("3 2\n1 2\n2 x\n");
    let out = coc(&["oracle", f.path().to_str().unwrap(), "--k", "2", "--measure", "kappa"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let f = graph_file("17 0\n");
    let path = f.path().to_str().unwrap();
    let out = coc(&["oracle", path, "--k", "2", "--measure", "kappa"]);
    assert_eq!(out.status.code(), Some(2));
    let out = coc(&["oracle", path, "--k", "2", "--measure", "kappa", "--force"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn realize_modes() {
    let (v, code) = json(&["realize", "--seq", "3^6", "--all"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["count"], 70);

    let (v, _) = json(&["realize", "--seq", "2^4,4"]);
    assert_eq!(v["results"]["count"], 1);
    assert_eq!(v["results"]["graphs"][0].as_array().unwrap().len(), 6);

    let (v, _) = json(&[
        "realize",
        "--seq",
        "1^4,2^2",
        "--k",
        "3",
        "--s",
        "2",
        "--variant",
        "edge",
    ]);
    assert_eq!(v["results"]["forcibly"], false);
    assert!(v["results"]["counterexample"].is_array());

    let out = coc(&["realize", "--seq", "1^10", "--all"]);
    assert_eq!(out.status.code(), Some(2));
    let out = coc(&["realize", "--seq", "1^10", "--all", "--force"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn transform_and_reduce() {
    let (v, code) = json(&["transform", "--from", "4+4+4+4+5", "--to", "2+4+5+5+5"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["results"]["trail"],
        serde_json::json!(["4+4+4+4+5", "3+4+4+5+5", "2+4+5+5+5"])
    );

    let (v, code) = json(&["reduce", "--parts", "3,4^7,5", "--k", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["output"], "4+4+7+7+7+7");
    assert_eq!(v["results"]["output_sequence"], "3^8,6^28");
    assert_eq!(v["results"]["majorizes"], true);

    let out = coc(&["reduce", "--parts", "1+2+2+2", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_suites_pass() {
    let (v, code) = json(&["validate", "corollaries", "--k", "3..5", "--n-max", "12"]);
    assert_eq!(code, 0);
    assert!(v["checks_passed"].as_u64().unwrap() > 0);
    assert_eq!(v["checks_failed"], serde_json::json!([]));

    let (_, code) = json(&[
        "validate",
        "sinks",
        "--variant",
        "edge",
        "--s",
        "2",
        "--k",
        "3..6",
        "--n-max",
        "12",
    ]);
    assert_eq!(code, 0);
    let (_, code) = json(&["validate", "lemma-part", "--trials", "1000", "--seed", "42"]);
    assert_eq!(code, 0);
    let (_, code) = json(&["validate", "lower-bound", "--s", "6"]);
    assert_eq!(code, 0);
    let (_, code) = json(&["validate", "dominance", "--n-max", "6"]);
    assert_eq!(code, 0);
}

#[test]
fn validate_caps_and_unknown_suite() {
    let out = coc(&["validate", "oracle-cross", "--n-max", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = coc(&["validate", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_is_deterministic() {
    for args in [
        vec![
            "validate",
            "lemma-part",
            "--trials",
            "200",
            "--seed",
            "7",
            "--format",
            "json",
        ],
        vec![
            "sinks",
            "--n",
            "12",
            "--k",
            "4",
            "--s",
            "2",
            "--variant",
            "edge",
            "--format",
            "json",
        ],
        vec![
            "check",
            "--seq",
            "2^3,3^28,4^5",
            "--k",
            "8",
            "--s",
            "1",
            "--variant",
            "vertex",
            "--format",
            "json",
        ],
    ] {
        let a = coc(&args);
        let b = coc(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn text_output_is_readable() {
    let out = coc(&["conditions", "--n", "6", "--k", "2", "--s", "2", "--variant", "vertex"]);
    assert!(stdout(&out).contains("d_5 >= 2"), "{}", stdout(&out));
}
