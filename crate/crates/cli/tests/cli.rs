use std::process::{Command, Output};

use serde_json::Value;
use umbral_cli::report::ReportDocument;

fn umbral(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umbral"))
        .args(args)
        .env_remove("UMBRAL_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_doc(args: &[&str]) -> (ReportDocument, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = umbral(&full);
    let doc = ReportDocument::from_json(&stdout(&o)).expect("valid report json");
    (doc, o.status.code().unwrap())
}

fn find_key<'a>(v: &'a Value, key: &str) -> Option<&'a Value> {
    match v {
        Value::Object(m) => m.get(key).or_else(|| m.values().find_map(|x| find_key(x, key))),
        Value::Array(a) => a.iter().find_map(|x| find_key(x, key)),
        _ => None,
    }
}

#[test]
fn compute_prints_labelled_value() {
    let o = umbral(&["compute", "bernoulli", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "B_4 = -1/30"), "{}", stdout(&o));
}

#[test]
fn compute_polynomial_and_two_index() {
    let o = umbral(&["compute", "euler-poly", "--n", "3", "--path", "umbral"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("E_3(x) = x^3 - 3/2*x^2 + 1/4"), "{}", stdout(&o));
    let o = umbral(&["compute", "zeilberger", "--m", "1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn quick_verify_reports_every_identity() {
    let (doc, code) = json_doc(&["verify"]);
    assert_eq!(doc.items.len(), 23);
    assert!(doc.pass);
    assert_eq!(code, 0);
}

#[test]
fn json_round_trip_reproduces_text() {
    let (doc, _) = json_doc(&["verify", "--id", "GESSEL_72"]);
    let again = ReportDocument::from_json(&doc.to_json()).unwrap();
    assert_eq!(again, doc);
    assert_eq!(again.to_text(), doc.to_text());
}

#[test]
fn exit_code_follows_pass_flag() {
    for args in [
        vec!["verify", "--id", "kaneko", "--index", "6"],
        vec!["mc", "--ks", "--ks-against", "sech", "--count", "20000"],
        vec!["quad", "--n", "2"],
    ] {
        let (doc, code) = json_doc(&args);
        assert_eq!(code, doc.exit_code(), "{args:?}");
        assert_eq!(code == 0, doc.pass, "{args:?}");
    }
    // a mismatched CDF is a negative control: rejection counts as a pass
    let (doc, code) = json_doc(&["mc", "--ks", "--ks-against", "sech", "--count", "20000"]);
    assert!(doc.pass);
    assert_eq!(doc.items[0].detail["expect_accept"], Value::Bool(false));
    assert_eq!(code, 0);
}

#[test]
fn config_errors_exit_two() {
    for args in [
        vec!["compute", "nosuch", "--n", "1"],
        vec!["verify", "--id", "NOT_AN_IDENTITY"],
        vec!["verify", "--order", "0"],
        vec!["mc", "--construction", "bogus"],
        vec!["mc", "--ks", "--count", "10"],
    ] {
        let o = umbral(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn seed_from_environment_and_flag() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_umbral"));
        cmd.args(["--format", "json", "mc", "--moment", "2", "--count", "10000"]);
        cmd.env_remove("UMBRAL_SEED");
        if let Some(s) = env {
            cmd.env("UMBRAL_SEED", s);
        }
        if let Some(s) = flag {
            cmd.args(["--seed", s]);
        }
        let doc = ReportDocument::from_json(&String::from_utf8(cmd.output().unwrap().stdout).unwrap()).unwrap();
        find_key(&doc.config, "seed").and_then(Value::as_u64).unwrap()
    };
    assert_eq!(run(None, None), 42);
    assert_eq!(run(Some("7"), None), 7);
    assert_eq!(run(Some("7"), Some("9")), 9);
}

#[test]
fn same_seed_same_estimate() {
    let a = json_doc(&["mc", "--moment", "4", "--count", "50000", "--seed", "3"]).0;
    let b = json_doc(&["mc", "--moment", "4", "--count", "50000", "--seed", "3"]).0;
    assert_eq!(a.items, b.items);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = umbral(&["--format", "json", "--output", path.to_str().unwrap(), "quad"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let doc = ReportDocument::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(doc.pass);
    assert_eq!(doc.items.len(), 5);
}
