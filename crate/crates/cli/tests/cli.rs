use std::process::{Command, Output};

use ncpqg_core::diagram::{beta, compose, d_xy, involute, PartitionJson};
use ncpqg_core::groups::{GeneratingSet, Group, GroupElement};
use serde_json::Value;

fn ncpqg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncpqg"))
        .args(args)
        .env_remove("NCPQG_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.code() == Some(0),
        "status {:?}, stderr {}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .expect("array")
        .iter()
        .map(|s| s.as_str().expect("string").to_string())
        .collect()
}

fn labels(v: &Value) -> Vec<String> {
    v["labels"]
        .as_array()
        .expect("labels")
        .iter()
        .map(|l| l["label"].as_str().expect("label").to_string())
        .collect()
}

fn dimension(v: &Value, label: &str) -> i64 {
    v["dimensions"]
        .as_array()
        .expect("dimensions")
        .iter()
        .find(|r| r["label"] == label)
        .unwrap_or_else(|| panic!("no dimension for {label}"))["dimension"]
        .as_i64()
        .expect("integer dimension")
}

#[test]
fn fusion_of_fundamental_with_itself() {
    let v = json(&ncpqg(&[
        "fusion", "t^0 X^1", "t^0 X^1", "--method", "both",
    ]));
    assert_eq!(strings(&v["closed"]), ["1", "X^2"]);
    assert_eq!(v["closed"], v["diagram"]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn one_dimensional_letter_folds_into_word() {
    let out = ncpqg(&[
        "fusion", "1d:g2", "g1", "--family", "wreath", "--group", "Z4", "--lambda", "g2",
        "--method", "closed", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "closed,1d:g2 ⊗ g1 → g3\n"
    );
}

#[test]
fn trivial_label_is_a_unit() {
    for m in ["t^2 X^1", "X^3", "t^-1"] {
        let v = json(&ncpqg(&["fusion", "1", m]));
        let m = v["right"].as_str().unwrap().to_string();
        assert_eq!(strings(&v["closed"]), vec![m.clone()]);
        assert_eq!(strings(&v["diagram"]), vec![m]);
    }
}

#[test]
fn irreps_lists() {
    let v = json(&ncpqg(&["irreps", "--ell", "2", "--maxlen", "2"]));
    assert_eq!(
        labels(&v),
        ["1", "t^1", "X^1", "t^1 X^1", "X^2", "t^1 X^2"].map(str::to_string)
    );
    let v = json(&ncpqg(&[
        "irreps", "--family", "wreath", "--group", "Z2", "--maxlen", "2",
    ]));
    let ls = labels(&v);
    for l in ["1d:e", "e", "g1", "g1.g1"] {
        assert!(ls.contains(&l.to_string()), "{l} in {ls:?}");
    }
    let v = json(&ncpqg(&["irreps", "--maxlen", "0"]));
    assert_eq!(labels(&v), ["1"]);
}

#[test]
fn emitted_labels_round_trip() {
    for args in [
        vec!["--ell", "0"],
        vec!["--ell", "3"],
        vec!["--family", "wreath", "--group", "klein", "--lambda", "c"],
    ] {
        let mut cmd = vec!["irreps", "--maxlen", "3"];
        cmd.extend(&args);
        let v = json(&ncpqg(&cmd));
        for l in labels(&v) {
            let mut cmd = vec!["fusion", "1", l.as_str(), "--method", "closed"];
            cmd.extend(&args);
            let f = json(&ncpqg(&cmd));
            assert_eq!(f["right"], l.as_str());
            assert_eq!(strings(&f["closed"]), vec![l.clone()]);
        }
    }
}

#[test]
fn irreps_with_dimensions() {
    let v = json(&ncpqg(&["irreps", "--maxlen", "2", "--N", "5"]));
    let rows = v["labels"].as_array().unwrap();
    let x2 = rows.iter().find(|r| r["label"] == "X^2").unwrap();
    assert_eq!(x2["dimension"], 24);
}

#[test]
fn membership_checks() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, p: &ncpqg_core::diagram::ColouredPartition| {
        let path = dir.path().join(name);
        std::fs::write(
            &path,
            serde_json::to_string(&PartitionJson::from(p)).unwrap(),
        )
        .unwrap();
        path.to_str().unwrap().to_string()
    };
    let d = d_xy();
    let dd = compose(&involute(&d), &d).unwrap().partition;
    let v = json(&ncpqg(&["check", &write("dd.json", &dd), "--ell", "2"]));
    assert_eq!(v["member"], true);
    let v = json(&ncpqg(&["check", &write("d.json", &d), "--ell", "2"]));
    assert_eq!(v["member"], false);
    assert!(v["violation"].as_str().unwrap().contains("(1,0)"), "{v}");

    let z4 = Group::cyclic(4);
    let w = GeneratingSet::standard(&z4)
        .rep_word(GroupElement(2))
        .unwrap();
    let b = write("beta.json", &beta(&w, &w).unwrap());
    let wreath = ["--family", "wreath", "--group", "Z4"];
    let mut args = vec!["check", b.as_str(), "--lambda", "g2"];
    args.extend(wreath);
    assert_eq!(json(&ncpqg(&args))["member"], true);
    let mut args = vec!["check", b.as_str()];
    args.extend(wreath);
    let v = json(&ncpqg(&args));
    assert_eq!(v["member"], false);
    assert!(
        v["violation"].as_str().unwrap().contains("outside Λ"),
        "{v}"
    );

    std::fs::write(
        dir.path().join("bad.json"),
        r#"{"upper":["x"],"lower":[],"blocks":[[["u",2]]]}"#,
    )
    .unwrap();
    let bad = dir.path().join("bad.json");
    let out = ncpqg(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn crosscheck_reports() {
    let v = json(&ncpqg(&[
        "crosscheck",
        "--family",
        "wreath",
        "--group",
        "Z4",
        "--lambda",
        "g2",
    ]));
    assert_eq!(v["all_agree"], true);
    assert!(v["cells"].as_array().unwrap().len() > 100);
    assert_eq!(v["closure"]["pairs"], 100);

    let v = json(&ncpqg(&["crosscheck", "--budget-points", "0"]));
    assert_eq!(v["all_agree"], true);
    assert!(v["cells"].as_array().unwrap().is_empty());
    assert!(v["labels"].as_array().unwrap().is_empty());
}

#[test]
fn dimensions_at_five() {
    let v = json(&ncpqg(&["dims", "--N", "5", "--maxlen", "3"]));
    assert_eq!(dimension(&v, "1"), 1);
    assert_eq!(dimension(&v, "X^1"), 5);
    assert_eq!(dimension(&v, "X^2"), 24);
    assert_eq!(dimension(&v, "X^3"), 115);
    let v = json(&ncpqg(&[
        "dims", "--N", "5", "--family", "wreath", "--group", "Z1",
    ]));
    assert_eq!(dimension(&v, "1d:e"), 1);
    assert_eq!(dimension(&v, "e"), 4);
    assert_eq!(dimension(&v, "e.e"), 11);
}

#[test]
fn exit_codes() {
    assert_eq!(ncpqg(&["fusion", "Q", "X"]).status.code(), Some(2));
    assert_eq!(ncpqg(&["dims", "--N", "3"]).status.code(), Some(2));
    assert_eq!(ncpqg(&["dims"]).status.code(), Some(2));
    assert_eq!(
        ncpqg(&["irreps", "--family", "wreath", "--group", "Z4", "--lambda", "q"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(ncpqg(&["irreps", "--maxlen", "8"]).status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_ncpqg"))
        .args(["fusion", "X^1", "X^2"])
        .env("NCPQG_BUDGET", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let args = ["crosscheck", "--ell", "2", "--budget-points", "8"];
    let first = ncpqg(&args);
    let second = ncpqg(&args);
    assert_eq!(first.stdout, second.stdout);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let out = ncpqg(&with_out);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), first.stdout);
}

#[test]
fn inline_json_configuration() {
    let v = json(&ncpqg(&[
        "irreps",
        "--family",
        "wreath",
        "--group",
        r#"{"kind":"cyclic","order":4}"#,
        "--lambda",
        r#"{"generators":["g2"]}"#,
        "--gens",
        r#"{"colours":[{"name":"a","inverse":"A","maps_to":"g3"}]}"#,
        "--maxlen",
        "1",
    ]));
    assert_eq!(labels(&v), ["1d:e", "g1", "g3"]);
}
