use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_constaring")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn ok(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    assert_eq!(v["schema"], "constaring/1");
    v
}

const LENGTH5: [&str; 12] =
    ["--p", "7", "--n", "5", "--g1", "1,1,1,1,1", "--g2", "1,-1,1,-1,1", "--g3", "1,1", "--g4", "1,1"];

fn with(prefix: &[&'static str], rest: &[&'static str]) -> Vec<&'static str> {
    prefix.iter().chain(rest).copied().collect()
}

#[test]
fn factor_reports() {
    let v = ok(&["factor", "--p", "7", "--n", "8", "--sign", "-1"]);
    assert_eq!(v["count"], 4);
    assert!(v["factors"].as_array().unwrap().iter().all(|f| f.as_array().unwrap().len() == 3));
    let v = ok(&["factor", "--p", "19", "--n", "9", "--sign", "+1"]);
    assert_eq!(v["count"], 9);
    assert_eq!((v["r1"].as_u64(), v["r2"].as_u64()), (Some(9), Some(9)));
    let v = ok(&["factor", "--p", "7", "--n", "5", "--sign", "+1"]);
    assert_eq!(v["factors"], serde_json::json!([[6, 1], [1, 1, 1, 1, 1]]));
}

#[test]
fn factor_rejects_repeated_roots() {
    let out = run(&["factor", "--p", "7", "--n", "7", "--sign", "+1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("divides"));
}

#[test]
fn consta_commands() {
    assert_eq!(ok(&["consta", "count", "--p", "7", "--n", "8"])["count"], "131072");
    assert_eq!(ok(&["consta", "count", "--p", "7", "--n", "5"])["count"], "256");
    let v = ok(&["consta", "equiv", "--p", "7", "--n", "8"]);
    assert_eq!(v["equivalent"], false);
    assert_eq!(v["witness"]["kind"], "not_equivalent");
    let v = ok(&["consta", "equiv", "--p", "7", "--n", "5"]);
    assert_eq!(v["witness"]["kind"], "substitution");
    assert_eq!(v["unit"], serde_json::json!([1, 0, 0, 5]));

    let v = ok(&with(&["consta", "build"], &LENGTH5));
    let g = &v["generator"];
    assert_eq!(g["a"], serde_json::json!([1, 1, 1, 1, 1]));
    assert_eq!(g["b"], serde_json::json!([0, 4, 5, 2, 5]));
    assert_eq!(g["b"], g["c"]);
    assert_eq!(g["d"], serde_json::json!([0, 4, 4, 1, 4]));
    assert_eq!(v["code"]["log_p_size"], 10);

    let v = ok(&with(&["consta", "dual"], &LENGTH5));
    assert_eq!(v["dual"]["log_p_size"], 10);
    assert_eq!(v["dual_matches_generator"], true);

    let v = ok(&with(&["consta", "gray"], &LENGTH5));
    assert_eq!(v["image_of_generator"], serde_json::json!([0, 3, 3, 6, 3, 2, 6, 6, 3, 6]));
    assert_eq!(v["container_generator"], serde_json::json!([1, 1, 1, 1, 1]));
    assert_eq!(v["contained"], true);
    assert_eq!(v["image_cyclic"], true);
    assert_eq!(v["min_distance"], 2);
}

#[test]
fn consta_rejects_non_divisors() {
    let out = run(&[
        "consta", "build", "--p", "7", "--n", "5", "--g1", "1,1", "--g2", "1", "--g3", "1", "--g4", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out =
        run(&["consta", "build", "--p", "7", "--n", "5", "--g1", "x", "--g2", "1", "--g3", "1", "--g4", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn qr_commands() {
    let v = ok(&["qr", "verify", "--p", "7", "--q", "19", "--suite", "all", "--theta", "4"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 4);
    let v = ok(&["qr", "verify", "--p", "19", "--q", "5", "--suite", "duality"]);
    let notes = v["reports"][0]["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("S14")));

    let v = ok(&["qr", "gray", "--p", "7", "--q", "19", "--label", "Q1"]);
    assert_eq!((v["image"]["n"].as_u64(), v["image"]["k"].as_u64()), (Some(80), Some(40)));
    assert_eq!(v["self_dual"], true);

    let v = ok(&["qr", "build", "--p", "7", "--q", "19", "--theta", "4", "--label", "Q1"]);
    assert_eq!(v["residues"], serde_json::json!([1, 4, 5, 6, 7, 9, 11, 16, 17]));
    assert_eq!(v["dual_label"], "S1");
    assert_eq!(v["code"]["log_p_size"], 40);
    assert_eq!(v["e1"][0], 2);

    let v = ok(&["qr", "extend", "--p", "7", "--q", "3", "--mask", "1,3"]);
    assert_eq!(v["self_dual"], true);
    assert_eq!(v["code"]["n"], 4);
}

#[test]
fn qr_errors() {
    let out = run(&["qr", "verify", "--p", "7", "--q", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a quadratic residue"));
    assert_eq!(run(&["qr", "build", "--p", "7", "--q", "19", "--theta", "5"]).status.code(), Some(2));
    assert_eq!(run(&["qr", "extend", "--p", "7", "--q", "3", "--label", "S1"]).status.code(), Some(2));
    assert_eq!(run(&["qr", "build", "--p", "7", "--q", "3", "--label", "Q15"]).status.code(), Some(2));
    assert_eq!(run(&["qr", "verify", "--p", "7", "--q", "3", "--suite", "bogus"]).status.code(), Some(2));
}

#[test]
fn examples_pass_and_theta_swap_is_reported() {
    let v = ok(&["examples"]);
    assert_eq!(v["passed"], true);
    let statuses: Vec<&str> =
        v["examples"].as_array().unwrap().iter().map(|e| e["status"].as_str().unwrap()).collect();
    assert_eq!(statuses, ["pass"; 5]);

    let v = ok(&["examples", "--theta", "3"]);
    let qr = v["examples"].as_array().unwrap().iter().find(|e| e["name"] == "length19").unwrap();
    assert_eq!(qr["status"], "label_swap");
}

#[test]
fn examples_fixture_errors() {
    let out = run(&["examples", "--fixtures", "/definitely/missing.json"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("constaring-fixture-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let builtin = include_str!("../fixtures/examples.json");
    let tampered = builtin.replace("\"count\": \"256\"", "\"count\": \"257\"");
    let path = dir.join("tampered.json");
    std::fs::write(&path, tampered).unwrap();
    let out = run(&["examples", "--fixtures", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    let first = &v["examples"][0];
    assert_eq!(first["status"], "fail");
    assert_eq!(first["mismatches"][0]["field"], "count");
    assert_eq!(first["mismatches"][0]["got"], "256");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let args = ["qr", "build", "--p", "19", "--q", "5", "--label", "S13"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let path = std::env::temp_dir().join(format!("constaring-out-{}.json", std::process::id()));
    let out = run(&["--out", path.to_str().unwrap(), "consta", "count", "--p", "7", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["count"], "4096");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn ring_commands() {
    let v = ok(&["ring", "decompose", "--p", "7", "--x", "0+1*u+0*u^2+0*u^3"]);
    assert_eq!(v["components"], serde_json::json!([0, 1, 4, 2]));
    let v = ok(&["ring", "inverse", "--p", "7", "--x", "1+0*u+0*u^2+5*u^3"]);
    assert_eq!(v["inverse"], "1+0*u+0*u^2+5*u^3");
    let v = ok(&["ring", "mul", "--p", "7", "--x", "u^3", "--y", "u"]);
    assert_eq!(v["product"], "0+1*u+0*u^2+0*u^3");
    assert_eq!(run(&["ring", "inverse", "--p", "7", "--x", "u"]).status.code(), Some(2));
}
