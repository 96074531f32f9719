use std::process::{Command, Output};

use serde_json::Value;

fn hgq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgq")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = hgq(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

#[test]
fn verify_hc_reports_two_eliminated_survivors() {
    let (code, v) = json(&["verify", "hc"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["survivors_pre_elimination"], 2);
    assert_eq!(v["summary"]["survivors_post_elimination"], 0);
    let flagged: Vec<&Value> = v["verdicts"].as_array().unwrap().iter().filter(|x| x["eliminated_by"]["kind"] == "FlagDivisibility").collect();
    let got: Vec<(String, u64, String)> = flagged
        .iter()
        .map(|x| (x["group"]["id"].as_str().unwrap().to_string(), x["eliminated_by"]["t"].as_u64().unwrap(), x["eliminated_by"]["modulus"].as_str().unwrap().to_string()))
        .collect();
    assert!(got.contains(&("Alt(6)".into(), 341, "4147200".into())), "{got:?}");
    assert!(got.contains(&("A(2;2)".into(), 155, "225792".into())), "{got:?}");
}

#[test]
fn verify_hs_has_the_alt8_note_and_is_byte_stable() {
    let a = hgq(&["verify", "hs", "--format", "json"]);
    let b = hgq(&["verify", "hs", "--format", "json", "--jobs", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["summary"]["survivors_post_elimination"], 0);
    let notes = v["discrepancy_notes"].as_array().unwrap();
    assert_eq!(notes.len(), 1);
    assert!(notes[0].as_str().unwrap().contains("Alt(8)"));
    for verdict in v["verdicts"].as_array().unwrap() {
        assert!(!verdict["paper_case_label"].as_str().unwrap().is_empty());
    }
}

#[test]
fn verify_with_family_filter() {
    let (code, v) = json(&["verify", "hc", "--family", "Alt"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["survivors_pre_elimination"], 1);
    assert_eq!(hgq(&["verify", "hs", "--family", "Nope"]).status.code(), Some(2));
}

#[test]
fn group_info_and_solve() {
    let (code, v) = json(&["group", "info", "A(3;3)"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"][0]["order"], "6065280");
    assert_eq!(v["verdicts"][0]["hs_case"], "Lemma 3.1, Case 3");
    let (code, v) = json(&["solve", "--mode", "hc", "--order", "360", "--smax", "253"]);
    assert_eq!(code, 0);
    let w = v["verdicts"].as_array().unwrap();
    assert_eq!(w.len(), 1);
    assert_eq!((w[0]["s"].as_u64(), w[0]["y"].as_u64(), w[0]["t"].as_u64()), (Some(19), Some(18), Some(341)));
    let (_, v) = json(&["solve", "--mode", "hs", "--order", "20160", "--smax", "13"]);
    assert!(v["verdicts"].as_array().unwrap().is_empty());
}

#[test]
fn enumerate_bounds() {
    let (code, v) = json(&["enumerate", "--max-order", "59"]);
    assert_eq!(code, 0);
    assert!(v["verdicts"].as_array().unwrap().is_empty());
    let (_, v) = json(&["enumerate", "--poly-out", "4096", "4", "--family", "A"]);
    let ids: Vec<&str> = v["verdicts"].as_array().unwrap().iter().map(|g| g["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"A(1;128)") && ids.contains(&"A(1;256)"));
}

#[test]
fn geometry_commands() {
    let (code, v) = json(&["geometry", "grid", "--group", "Z(3)xZ(3)", "--subgroups", "<[1,0]>", "<[0,1]>"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"][0]["result"]["s"], 2);
    assert_eq!(v["verdicts"][0]["result"]["is_grid"], true);
    let (code, v) = json(&["geometry", "doublecosets", "--group", "Sym(3)", "--subgroups", "<(12)>", "<(13)>"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"][0]["result"]["total"], 6);
    let out = hgq(&["geometry", "stabiliser", "--group", "Sym(3)", "--subgroups", "<(12)>", "<(13)>"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("hypothesis (ii) unmet"));
    let (code, v) = json(&["geometry", "coset", "--group", "Sym(3)", "--subgroups", "<(12)>", "<(13)>"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"][0]["result"]["triangle"], Value::Null);
}

#[test]
fn geometry_file_input() {
    let dir = std::env::temp_dir().join(format!("hgq-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("klein.txt");
    std::fs::write(&path, "# Klein four-group\ntable:\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\nend\nsubgroup: <1>\nsubgroup: <2>\n").unwrap();
    let (code, v) = json(&["geometry", "grid", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"][0]["result"]["s"], 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(hgq(&["group", "info", "Alt(4)"]).status.code(), Some(2));
    assert_eq!(hgq(&["group", "info", "Q(8)"]).status.code(), Some(2));
    assert_eq!(hgq(&["verify"]).status.code(), Some(2));
    assert_eq!(hgq(&["geometry", "grid", "--group", "Sym(3)", "--subgroups", "<(12)>", "<(12)>"]).status.code(), Some(2));
    assert_eq!(hgq(&["geometry", "grid", "--group", "Q(8)", "--subgroups", "<1>"]).status.code(), Some(2));
    assert_eq!(hgq(&["enumerate", "--max-order", "10", "--poly-out", "1", "1"]).status.code(), Some(2));
}

#[test]
fn non_abelian_grid() {
    let (code, v) = json(&["geometry", "grid", "--group", "Alt(4)", "--subgroups", "<(123)>", "<(124)>"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"][0]["result"]["points"].as_array().unwrap().len(), 9);
    assert_eq!(v["success"], true);
}
