use std::process::{Command, Output};

fn perfcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perfcode"))
        .args(args)
        .env_remove("PERFCODE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = perfcode(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn analyze_examples() {
    assert_eq!(json(&["analyze", "sl2:5", "--json"])["delta_count"], 4);
    let c8 = json(&["analyze", "cyclic:8", "--json"]);
    assert_eq!(c8["delta_count"], 0);
    assert_eq!(c8["empty_delta_family"], true);
    let a5 = json(&["analyze", "perm:(1,2,3,4,5);(3,4,5)", "--json"]);
    assert_eq!(a5["delta_count"], 7);
    assert_eq!(a5["schema_version"], 1);
}

#[test]
fn analyze_table_and_csv() {
    let o = perfcode(&["analyze", "alternating:4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("|Δ|            3"));
    let o = perfcode(&["analyze", "cyclic:30", "--csv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "spec,order,pi,solvable,sylow2_shape,o2_order,delta_count,checks_failed");
    assert_eq!(lines[1], "cyclic:30,30,2 3 5,true,cyclic(2),2,6,0");
}

#[test]
fn audit_reports_no_disagreements() {
    let r = json(&["analyze", "symmetric:4", "--json", "--audit"]);
    assert_eq!(r["audit_disagreements"], serde_json::json!([]));
}

#[test]
fn exit_codes() {
    assert_eq!(perfcode(&["analyze", "cyclic:"]).status.code(), Some(2));
    assert_eq!(perfcode(&["analyze", "nonsense:3"]).status.code(), Some(2));
    assert_eq!(perfcode(&["analyze", "symmetric:7"]).status.code(), Some(3));
    assert_eq!(perfcode(&["analyze", "symmetric:7", "--cap", "10"]).status.code(), Some(3));
    assert_eq!(perfcode(&["survey", "--max-order", "100000"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_perfcode"))
        .args(["analyze", "alternating:6"])
        .env("PERFCODE_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn survey_trivial_group_only() {
    let o = perfcode(&["survey", "--max-order", "1", "--json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["spec"], "cyclic:1");
    assert!(lines[0]["checks"].as_array().unwrap().iter().all(|c| c["status"] == "not_applicable"));
    assert_eq!(lines[1]["summary"]["groups"], 1);
}

#[test]
fn survey_summary_matches_records() {
    let o = perfcode(&["survey", "--max-order", "200", "--filter", "solvable", "--json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let summary = lines.pop().unwrap()["summary"].clone();
    assert_eq!(summary["groups"], lines.len());
    assert_eq!(summary["failures"], serde_json::json!([]));
    let mut equality = 0;
    for r in &lines {
        assert_eq!(r["solvable"], true);
        let d = r["delta_count"].as_u64().unwrap();
        let pi = r["pi"].as_array().unwrap().len() as u32;
        if r["order"] != 1 {
            assert!(d + 2 >= 1 << pi, "{}", r["spec"]);
            if d + 2 == 1 << pi {
                equality += 1;
            }
        }
        let main = r["checks"].as_array().unwrap().iter().find(|c| c["check_name"] == "main_theorem").unwrap();
        assert_ne!(main["status"], "fail");
    }
    assert_eq!(summary["equality_solvable_bound"], equality);
    // Deterministic order: by order, then spec string.
    let keys: Vec<(u64, String)> = lines
        .iter()
        .map(|r| (r["order"].as_u64().unwrap(), r["spec"].as_str().unwrap().to_string()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn verify_passes() {
    let o = perfcode(&["verify", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let outcomes: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let outcomes = outcomes.as_array().unwrap();
    assert_eq!(outcomes.len(), 12);
    assert!(outcomes.iter().all(|c| c["passed"] == true));
}
