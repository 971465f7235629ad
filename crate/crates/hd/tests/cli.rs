use serde_json::Value;
use std::process::Command;

fn hd(args: &[&str]) -> (i32, Vec<Value>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hd")).args(args).output().expect("run hd");
    let lines = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect();
    (out.status.code().unwrap_or(-1), lines, String::from_utf8_lossy(&out.stderr).into_owned())
}

#[test]
fn segment_info_reports_hooks() {
    let (code, lines, _) = hd(&["segment-info", "[1,2];[0,1];[-1,0];[-2,-1]"]);
    assert_eq!(code, 0);
    assert_eq!(lines.len(), 1);
    let v = &lines[0];
    assert_eq!(v["ladder"], true);
    assert_eq!(v["elliptic_central_character"], true);
    assert!(v["alpha"].is_string());
}

#[test]
fn worked_examples_suite_is_green() {
    let (code, lines, err) = hd(&["run-suite", "--suite", "paper-examples"]);
    assert_eq!(code, 0, "{err}");
    let summary = lines.last().unwrap();
    assert_eq!(summary["summary"], true);
    assert_eq!(summary["pass"], true);
    assert!(err.contains("PASS"));
    let w = lines.iter().find(|l| l["example"] == "w({[7,10],[4,8],[3,6]})").unwrap();
    assert_eq!(w["got"], "(1,3)");
}

#[test]
fn module_report_for_the_ladder_quotient() {
    let (code, lines, _) = hd(&["module-report", "[0,1];[-1,0]", "--quotient"]);
    assert_eq!(code, 0);
    let v = &lines[0];
    assert_eq!(v["module"], "L");
    assert_eq!(v["hd_s_plus"], 4);
    assert_eq!(v["hd_character_s_plus"], "σ̃(3,1)");
    assert_eq!(v["vogan"]["pass"], true);
}

#[test]
fn type_c_sweep_summaries() {
    let (code, lines, _) = hd(&["typec-sweep", "--n", "2", "--m", "17/10", "--window", "2", "--jobs", "1"]);
    assert_eq!(code, 0);
    let summaries: Vec<&Value> = lines.iter().filter(|l| l["summary"] == true).collect();
    assert_eq!(summaries.len(), 2);
    let scaled = summaries.iter().find(|s| s["reading"] == "scaled").unwrap();
    assert_eq!(scaled["family_parameter"], "17/10");
    assert!(scaled["nonzero_central_characters"].as_array().unwrap().len() <= 2);
}

#[test]
fn output_file_and_job_count_do_not_change_results() {
    let dir = std::env::temp_dir().join(format!("hd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bgg.jsonl");
    let (code, lines, _) = hd(&["run-suite", "--suite", "bgg", "--l", "4", "--out", path.to_str().unwrap(), "--jobs", "2"]);
    assert_eq!(code, 0);
    assert!(lines.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let (_, direct, _) = hd(&["run-suite", "--suite", "bgg", "--l", "4", "--jobs", "1"]);
    let from_file: Vec<Value> = written.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(from_file, direct);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(hd(&["run-suite", "--suite", "unknown"]).0, 2);
    assert_eq!(hd(&["segment-info", "[0"]).0, 2);
    assert_eq!(hd(&["run-suite", "--suite", "ladder", "--type", "C"]).0, 2);
    assert_eq!(hd(&["module-report", "[-1,1]", "--r", "x"]).0, 2);
}

#[test]
fn failing_suite_exits_with_one() {
    // central twists of {[−1,1]} carry Dirac cohomology, which the
    // literal vanishing criterion does not allow
    let (code, lines, _) = hd(&["run-suite", "--suite", "vanishing", "--l", "3", "--window", "2"]);
    assert_eq!(code, 1);
    let twisted = lines.iter().find(|l| l["multisegment"] == "[0,2]").unwrap();
    assert_eq!(twisted["hd_dim"], 2);
    assert_eq!(twisted["vanishing_ok"], false);
    let summary = lines.last().unwrap();
    assert_eq!(summary["pass"], false);
    for l in &lines[..lines.len() - 1] {
        assert_eq!(l["vanishing_mod_center_ok"], true, "{l}");
        assert_eq!(l["index_ok"], true, "{l}");
    }
}
