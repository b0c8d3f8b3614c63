use std::process::{Command, Output};

use serde_json::Value;

fn macd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = macd(&a);
    (
        out.status.code().unwrap(),
        serde_json::from_slice(&out.stdout).expect("json report"),
    )
}

fn strip_times(v: &mut Value) {
    if let Some(checks) = v["checks"].as_array_mut() {
        for c in checks {
            c["wall_time"] = Value::Null;
        }
    }
}

#[test]
fn expand_two_row() {
    let (code, v) = json(&["expand", "--lambda", "2", "--basis", "m"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "v1");
    assert_eq!(v["header"]["order"], 6);
    let terms = v["result"]["terms"].as_array().unwrap();
    assert_eq!(terms[0]["partition"], serde_json::json!([2]));
    assert_eq!(terms[0]["coeff"], "1");
    assert_eq!(terms.len(), 2);
}

#[test]
fn kostka_degree_two() {
    let (code, v) = json(&["kostka", "--degree", "2"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["(2),(1,1)"], "t");
    assert_eq!(r["(1,1),(2)"], "q");
    assert_eq!(r["(2),(2)"], "1");
    let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["(2),(2)", "(2),(1,1)", "(1,1),(2)", "(1,1),(1,1)"]);
}

#[test]
fn malformed_partition_is_a_usage_error() {
    assert_eq!(macd(&["expand", "--lambda", "1,3"]).status.code(), Some(2));
    assert_eq!(macd(&["expand", "--lambda", "x"]).status.code(), Some(2));
    assert_eq!(macd(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for suite in ["eigen", "orthogonality", "duality", "kostka", "vertex-identities"] {
        let (code, v) = json(&["verify", "--suite", suite, "--maxweight", "3", "--order", "4"]);
        assert_eq!(code, 0, "{suite}");
        assert_eq!(v["status"], "pass");
        for c in v["checks"].as_array().unwrap() {
            for key in [
                "identity",
                "parameters",
                "order",
                "status",
                "max_order_checked",
                "wall_time",
            ] {
                assert!(c.get(key).is_some(), "{suite}: {key}");
            }
        }
    }
}

#[test]
fn reports_are_reproducible() {
    let args = ["verify", "--suite", "skew-routes", "--maxweight", "3", "--order", "3"];
    let (_, mut a) = json(&args);
    let (_, mut b) = json(&args);
    strip_times(&mut a);
    strip_times(&mut b);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn skew_and_norm_text() {
    let out = macd(&["skew", "--lambda", "2,1", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS skew-three-routes"));
    let out = macd(&["norm", "--lambda", "1", "--order", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("# n = 1"), "{text}");
    assert!(text.contains("b = (-1 + t)/(-1 + q)"), "{text}");
}

#[test]
fn cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("macd-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.jsonl");
    let p = path.to_str().unwrap();
    let (code, first) = json(&["expand", "--lambda", "2,1", "--cache", p]);
    assert_eq!(code, 0);
    assert!(path.exists());
    let (code, second) = json(&["expand", "--lambda", "2,1", "--cache", p]);
    assert_eq!(code, 0);
    assert_eq!(first["result"], second["result"]);
    std::fs::remove_dir_all(&dir).unwrap();
}
