use std::process::{Command, Output};

use serde_json::Value;

fn spex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spex"))
        .args(args)
        .env_remove("SPEX_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = spex(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn closed_form_two_apex_cycle() {
    let o = spex(&["closed-form", "two-apex-cycle", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("1+sqrt(17)"));
    assert!(text.contains("interval [5.12310562561"));
}

#[test]
fn pi_of_p3() {
    let o = spex(&["pi", "--forest", "3"]);
    assert_eq!(stdout(&o).trim(), "1/2 EQUAL_HALF period=2");
}

#[test]
fn k5_is_nonplanar() {
    let o = spex(&["check", "D~{", "--planar"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "nonplanar (K5 subdivision)");
    let v = json(&["check", "D~{", "--planar"]);
    assert_eq!(v["certificate_verified"], Value::Bool(true));
}

#[test]
fn construct_prints_graph6_and_degrees() {
    let o = spex(&["construct", "two-apex-cycle", "10"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    let g6 = lines.next().unwrap();
    assert_eq!(lines.next(), Some("degrees: 8 8 4 4 4 4 4 4 4 4"));
    // The graph6 text and the family shorthand describe the same graph.
    let a = json(&["radius", g6]);
    let b = json(&["radius", "two-apex-cycle:10"]);
    assert_eq!(a, b);
}

#[test]
fn text_and_json_agree() {
    let v = json(&["exf", "7", "--forest", "4"]);
    assert_eq!(v["value"], 4);
    assert_eq!(v["witness"], serde_json::json!([3, 3, 1]));
    let text = stdout(&spex(&["exf", "7", "--forest", "4"]));
    assert_eq!(text, "4\nwitness {3,3,1}\n");

    let v = json(&["pi", "--forest", "5"]);
    assert_eq!(v["value"], "3/4");
    assert_eq!(v["trichotomy"], "ABOVE_HALF");
    assert_eq!(v["period"], 4);
}

#[test]
fn compare_is_exact() {
    let o = spex(&["compare", "join-k2-matching@10", "two-apex-cycle@10"]);
    assert_eq!(stdout(&o).lines().next(), Some("LESS"));
    let o = spex(&["compare", "join-k2-cycle@10", "two-apex-cycle@10"]);
    assert_eq!(stdout(&o).lines().next(), Some("GREATER"));
    let o = spex(&["compare", "two-apex-cycle@10", "two-apex-cycle@10"]);
    assert_eq!(stdout(&o).lines().next(), Some("EQUAL"));
}

#[test]
fn classify_and_maximal() {
    let o = spex(&["classify", "--forest", "2,2"]);
    assert!(stdout(&o).contains("prediction 2K1+C(n-2)"));
    let o = spex(&["classify", "--forest", "3,2"]);
    assert!(stdout(&o).contains("prediction OPEN"));
    let o = spex(&["maximal", "--forest", "2,2,2,2,1", "--against", "3"]);
    assert_eq!(stdout(&o).trim(), "maximal");
    let o = spex(&["maximal", "--forest", "3,1", "--against", "3"]);
    assert_eq!(stdout(&o).trim(), "not maximal");
}

#[test]
fn transform_and_profile() {
    let v = json(&["transform", "c5", "--vertex", "0"]);
    assert_eq!(v["degree_sequence"], serde_json::json!([2, 2, 1, 1, 0]));
    let v = json(&["profile", "two-apex-cycle:12"]);
    assert_eq!(v["case"], "CYCLE_IN_B");
    assert_eq!(v["b"].as_array().unwrap().len(), 10);
}

#[test]
fn spex_search_reports_json() {
    let v = json(&["spex-search", "6", "--forbid", "k5-e", "--quiet", "--threads", "2"]);
    assert_eq!(v["n"], 6);
    assert_eq!(v["argmax"].as_array().unwrap().len(), 1);
    assert_eq!(v["prediction"]["flag"], "AGREES");
    assert!(v["spex"]["lo"]["numerator"].is_string());
}

#[test]
fn exit_codes() {
    // Usage errors: missing flags, bad graph text, conflicting options, cap.
    for args in [
        vec!["check", "c5"],
        vec!["radius", "zz"],
        vec!["--json", "--format", "text", "pi", "--forest", "3"],
        vec!["compare", "two-apex-cycle", "two-apex-cycle@10"],
        vec!["radius", "c5", "--tol", "-1"],
    ] {
        let o = spex(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
    }
    // Computation errors.
    for args in [
        vec!["closed-form", "cycle", "5"],
        vec!["closed-form", "join-k2-matching", "7"],
        vec!["pi", "--forest", "1,1"],
        vec!["transform", "c5", "--vertex", "0", "--targets", "0"],
        vec!["spex-search", "10", "--forbid", "k5-e", "--quiet"],
    ] {
        assert_eq!(spex(&args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(spex(&["--help"]).status.code(), Some(0));
}
