use std::process::{Command, Output};

use serde_json::Value;

fn hws(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hws"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = hws(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn brute_force_binary_second_spectrum() {
    let v = json(&["spectra", "--q", "2", "--method", "brute", "--format", "json"]);
    let a2 = &v["data"]["A"]["2"];
    assert_eq!(a2, &serde_json::json!({"2": 6, "3": 16, "4": 13}));
    assert_eq!(v["command"], "spectra");
    assert_eq!(v["q"], 2);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn json_top_level_keys_are_stable() {
    let v = json(&["hamming", "--q", "4", "--format", "json"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["checks", "command", "data", "method", "q"]);
    assert_eq!(v["data"]["d"], serde_json::json!([8, 11, 12, 14, 15, 16]));
}

#[test]
fn quinary_betti_table_shows_the_known_entries() {
    let o = hws(&["betti", "--q", "5", "--elongation", "0", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("3000"), "{s}");
    assert!(s.contains("2160"), "{s}");
}

#[test]
fn quinary_betti_json_entries() {
    let v = json(&["betti", "--q", "5", "--elongation", "0", "--format", "json"]);
    assert_eq!(v["data"]["beta"]["2"]["19"], 3000);
    assert_eq!(v["data"]["beta"]["3"]["20"], 2160);
    assert_eq!(v["data"]["errata"], serde_json::json!([]));
}

#[test]
fn quaternary_betti_reports_the_corrected_slot() {
    let v = json(&["betti", "--q", "4", "--format", "json"]);
    assert_eq!(v["data"]["beta"]["2"]["12"], 3120);
    assert_eq!(v["data"]["errata"][0]["printed"], 1920);
    assert_eq!(v["data"]["errata"][0]["corrected"], 3120);
}

#[test]
fn pipeline_and_closed_agree_on_q7_betti() {
    let closed = json(&["betti", "--q", "7", "--elongation", "1", "--format", "json"]);
    let piped = json(&["betti", "--q", "7", "--elongation", "1", "--method", "pipeline", "--format", "json"]);
    assert_eq!(closed["data"]["beta"], piped["data"]["beta"]);
    assert_eq!(piped["method"], "pipeline/bs-assisted");
}

#[test]
fn ternary_full_verification_passes() {
    let o = hws(&["verify", "--q", "3", "--level", "full"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("[FAIL]"));
}

#[test]
fn csv_spectra_rows() {
    let o = hws(&["spectra", "--q", "2", "--format", "csv"]);
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("r,w,A"));
    assert!(s.lines().any(|l| l == "2,4,13"));
}

#[test]
fn gwp_conics_and_correspondence_pass() {
    for args in [
        &["gwp", "--q", "4"][..],
        &["gwp", "--q", "8", "--method", "pipeline"],
        &["conics", "--q", "7"],
        &["correspondence", "--q", "3", "--d", "1"],
    ] {
        let o = hws(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["spectra", "--q", "6"][..],
        &["spectra", "--q", "32"],
        &["spectra"],
        &["betti", "--q", "3", "--method", "brute"],
        &["betti", "--q", "3", "--elongation", "9"],
        &["spectra", "--q", "3", "--method", "closed", "--pipeline", "bs"],
        &["spectra", "--q", "3", "--budget-subspaces", "0"],
        &["spectra", "--q", "3", "--format", "xml"],
        &["hamming", "--q", "2"],
    ] {
        let o = hws(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn exhausted_budget_returns_marked_partial_rows() {
    let o = hws(&["spectra", "--q", "5", "--method", "brute", "--budget-subspaces", "10"]);
    assert!(stdout(&o).contains("truncated: subspace budget exhausted"));
    let v = json(&["spectra", "--q", "5", "--method", "brute", "--budget-subspaces", "10", "--format", "json"]);
    assert!(v["data"]["truncated_at"].is_number());
    assert_eq!(v["data"]["A"]["0"]["0"], 1);
}

#[test]
fn timestamp_header_is_opt_in() {
    let plain = stdout(&hws(&["hamming", "--q", "3"]));
    assert!(plain.starts_with("# hamming"));
    let stamped = stdout(&hws(&["hamming", "--q", "3", "--timestamp"]));
    assert!(stamped.starts_with("# generated at unix time"));
}

#[test]
fn reruns_are_byte_identical() {
    for args in [&["verify", "--q", "2", "--seed", "5"][..], &["spectra", "--q", "3", "--method", "pipeline", "--format", "json"]] {
        assert_eq!(hws(args).stdout, hws(args).stdout, "{args:?}");
    }
    let serial = hws(&["spectra", "--q", "3", "--method", "brute", "--threads", "1"]).stdout;
    let parallel = hws(&["spectra", "--q", "3", "--method", "brute", "--threads", "2"]).stdout;
    assert_eq!(serial, parallel);
}

#[test]
fn json_round_trips() {
    let o = hws(&["gwp", "--q", "7", "--format", "json"]);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
}
