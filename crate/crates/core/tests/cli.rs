mod common;

use std::process::{Command, Output};

use common::data_path;
use serde_json::Value;

fn nrmcdm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nrmcdm")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn similarity_table_and_json() {
    let (a, b) = (data_path("set_a.json"), data_path("set_b.json"));
    let out = nrmcdm(&["similarity", "--measure", "cosine", &a, &b]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "cosine: 0.92848\n");

    let out = nrmcdm(&["similarity", "--measure", "dice", "--weights", "0.7,0.2,0.1", "--format", "json", &a, &b]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["measure"], "dice");
    assert_eq!(v["weighted"], true);
    assert!((v["value"].as_f64().unwrap() - 0.8786954735235181).abs() < 1e-12);
}

#[test]
fn weighted_similarity_needs_weights() {
    let a = data_path("set_a.json");
    let out = nrmcdm(&["similarity", "--measure", "jaccard", "--weighted", &a, &a]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--weights"));
}

#[test]
fn rank_weighted_jaccard_table() {
    let p = data_path("svnr_investment.json");
    let out = nrmcdm(&["rank", "--measure", "jaccard", "--weighted", &p]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    for line in ["A1           0.83534", "A2           0.89990", "A3           0.85113", "A4           0.67269"] {
        assert!(text.contains(line), "{text}");
    }
    assert!(text.contains("ranking: A2 > A3 > A1 > A4"));
    assert!(text.contains("C1  <(0.5, 0.6, 0.9), (0, 0.1, 0.3), (0.1, 0.4, 0.6)>"));
}

#[test]
fn rank_json_has_full_precision_and_negative_ideal() {
    let p = data_path("inr_investment.json");
    let out = nrmcdm(&["rank", "--measure", "cosine", "--polarity", "negative", "--format", "json", &p]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let ranking: Vec<&str> = v["ranking"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(ranking, ["A2", "A3", "A4", "A1"]);
    assert_eq!(v["ideal"]["polarity"], "negative");
    assert_eq!(v["ideal"]["set"]["flavor"], "inr");
    let a2 = v["scores"][1]["score"].as_f64().unwrap();
    assert!((a2 - 0.9779).abs() < 1e-4);
    assert!(format!("{a2}").len() > 8, "score not at full precision: {a2}");
}

#[test]
fn consistency_selects_jaccard() {
    let p = data_path("inr_investment.json");
    let out = nrmcdm(&["consistency", &p]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("selected: jaccard\n"), "{text}");
    assert!(text.contains("selected (weighted): weighted jaccard\n"));
    assert!(text.contains("  jaccard           0.07235"));

    let out = nrmcdm(&["consistency", "--objective", "minimize", "--format", "json", &p]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["selected"]["measure"], "cosine");
    assert_eq!(v[1]["selected"]["measure"], "cosine");
    assert_eq!(v[1]["selected"]["weighted"], true);
}

#[test]
fn consistency_rejects_single_valued_problem() {
    let out = nrmcdm(&["consistency", &data_path("svnr_investment.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("expected INR data, found SVNR"), "{}", stderr(&out));
}

#[test]
fn set_operations() {
    let (a, b, c) = (data_path("set_a.json"), data_path("set_b.json"), data_path("set_c.json"));
    let out = nrmcdm(&["ops", "union", &a, &b]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "x1  <(0.5, 0.6, 0.7), (0.2, 0.3, 0.4), (0.1, 0.4, 0.6)>\n\
         x2  <(0.4, 0.6, 0.7), (0.2, 0.3, 0.7), (0.1, 0.3, 0.3)>\n\
         x3  <(0.3, 0.3, 0.4), (0.1, 0.5, 0.6), (0.3, 0.4, 0.7)>\n"
    );
    let out = nrmcdm(&["ops", "subset", &c, &b]);
    assert_eq!(stdout(&out), "false\n");
    let out = nrmcdm(&["ops", "equal", &a, &a, "--format", "json"]);
    assert_eq!(stdout(&out), "{\"result\": true}\n");
    let out = nrmcdm(&["ops", "complement", &a, "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["elements"][0]["truth"], serde_json::json!([0.2, 0.4, 0.8]));
}

#[test]
fn usage_errors_exit_2() {
    let a = data_path("set_a.json");
    for args in [
        vec!["ops", "union", a.as_str()],
        vec!["ops", "complement", a.as_str(), a.as_str()],
        vec!["rank", "--measure", "euclid", a.as_str()],
        vec!["frobnicate"],
        vec![],
    ] {
        let out = nrmcdm(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
    }
    assert_eq!(nrmcdm(&["--help"]).status.code(), Some(0));
}

#[test]
fn data_errors_exit_1() {
    let missing = nrmcdm(&["rank", "--measure", "dice", "/nonexistent/problem.json"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(stderr(&missing).contains("cannot read"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"schema\": 1, ").unwrap();
    let out = nrmcdm(&["rank", "--measure", "dice", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("syntax error"));

    let inr = data_path("inr_investment.json");
    let out = nrmcdm(&["similarity", "--measure", "dice", &data_path("set_a.json"), &inr]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("schema error"), "{}", stderr(&out));
}
