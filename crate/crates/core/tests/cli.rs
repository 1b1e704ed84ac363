use std::process::{Command, Output};

use serde_json::Value;

fn adlv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adlv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn tables_e6() {
    let o = adlv(&["tables", "E6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "type,rank,twist,coweight,count_indec,identity_ok\n\
         E,6,none,w2,7,true\nE,6,none,w3,15,true\nE,6,none,w4,30,true\nE,6,none,w5,15,true\n"
    );
}

#[test]
fn tables_json() {
    let o = adlv(&["--format", "json", "tables", "E7"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let w4 = rows
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["coweight"] == "w4")
        .unwrap();
    assert_eq!(w4["count_indec"], 125);
}

#[test]
fn tree_of_s1_s0_s1() {
    let o = adlv(&["tree", "s1 s0 s1", "--type", "A1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut paths: Vec<(u64, u64, String)> = v["paths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            (
                p["lI"].as_u64().unwrap(),
                p["lII"].as_u64().unwrap(),
                p["end"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    paths.sort();
    // t[2] is the translation by the simple coroot and t[2]*s1 is s0
    assert_eq!(paths, vec![(0, 1, "t[2]*s1".into()), (1, 0, "t[2]".into())]);
    assert_eq!(v["nodes"][0]["len"], 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn tree_dot_is_stable() {
    let o = adlv(&["--format", "dot", "tree", "s1 s0 s1", "--type", "A1"]);
    assert_eq!(o.status.code(), Some(0));
    let expected = "digraph reduction {\n  node [shape=box];\n  n0 [label=\"t[-2]*s1 (3)\"];\n  \
                    n1 [label=\"t[2] (2)\", style=bold];\n  n2 [label=\"t[2]*s1 (1)\", style=bold];\n  \
                    n0 -> n1 [label=\"I s1\"];\n  n0 -> n2 [label=\"II s1\"];\n}\n\
                    // F[(0); 0] = 1*q^2\n// F[(1); 0] = 1*q^3 - 1*q^2\n";
    assert_eq!(stdout(&o), expected);
}

#[test]
fn tree_of_minimal_and_coxeter_translation() {
    let o = adlv(&["tree", "s1", "--type", "A2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 1);

    let o = adlv(&["tree", "t[1,1]*s1 s2", "--type", "A2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let b = adlv(&["bset", "--type", "A2", "--coweight", "1,1", "--indec"]);
    let indec: Value = serde_json::from_str(&stdout(&b)).unwrap();
    for p in v["paths"].as_array().unwrap() {
        assert!(indec
            .as_array()
            .unwrap()
            .iter()
            .any(|c| c["newton"] == p["b"]["newton"]));
    }
}

#[test]
fn verify_targets() {
    let o = adlv(&["verify", "thm-main", "--type", "A2", "--bound", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    let s = &lines.last().unwrap()["summary"];
    assert_eq!(s["passed"], s["instances"]);
    assert!(s["instances"].as_u64().unwrap() > 0);

    let o = adlv(&["verify", "identity", "--type", "D4", "--twist", "triality"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o).len(), 5);

    let o = adlv(&["--seed", "5", "verify", "graph-lemma", "--count", "200"]);
    assert_eq!(o.status.code(), Some(0));

    let o = adlv(&[
        "--jobs", "2", "verify", "thm-7-1", "--type", "A2", "--twist", "flip", "--maxlen", "6",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn exit_codes() {
    let o = adlv(&["tree", "s1 s0 x", "--type", "A1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error at byte"));
    assert_eq!(adlv(&["tables", "E9"]).status.code(), Some(3));
    assert_eq!(
        adlv(&["bset", "--type", "Q3", "--coweight", "w1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        adlv(&["--budget", "2", "verify", "prop-id", "--type", "A2", "--maxlen", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        adlv(&["verify", "a-type", "--n", "6"]).status.code(),
        Some(1)
    );
}

#[test]
fn config_file_round_trip() {
    let args = [
        "--strategy",
        "seeded",
        "--seed",
        "4",
        "--format",
        "dot",
        "tree",
        "s0 s1 s2 s1 s0",
        "--type",
        "A2",
    ];
    let spec = adlv(&[&["--print-config"], &args[..]].concat());
    assert_eq!(spec.status.code(), Some(0));
    let path = std::env::temp_dir().join(format!("adlv-job-{}.json", std::process::id()));
    std::fs::write(&path, &spec.stdout).unwrap();
    let via_config = adlv(&["--config", path.to_str().unwrap()]);
    let direct = adlv(&args);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(via_config.status.code(), Some(0));
    assert_eq!(stdout(&via_config), stdout(&direct));
}
