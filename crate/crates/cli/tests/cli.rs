use std::process::{Command, Output};

use serde_json::Value;

fn modalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modalg"))
        .args(args)
        .env_remove("MODALG_MAX_DIM")
        .env_remove("MODALG_WORKERS")
        .output()
        .expect("run modalg")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn classify_builtin() {
    let out = modalg(&["classify", "builtin:S[3,2]"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["order"], 32);
    assert_eq!(v["classification"]["class"], "good_by_theorem");
    assert_eq!(v["classification"]["member"]["family"], "metacyclic");

    let v = json(&modalg(&["classify", "builtin:ModularS[3,1]"]));
    assert_eq!(v["classification"]["class"], "bad_by_theorem");
}

#[test]
fn check_good_verdicts_and_exit_codes() {
    let out = modalg(&["check-good", "catalog:Q8", "--field", "gf4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "good");
    assert_eq!(v["field"], "gf4");
    assert_eq!(v["structure"]["order"], 8);

    let v = json(&modalg(&["check-good", "catalog:D8", "--strategy", "exhaustive"]));
    assert_eq!(v["verdict"], "bad");
    assert!(v["witness"].is_array());

    let out = modalg(&["check-good", "catalog:Q8", "--strategy", "exhaustive", "--max-dim", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["verdict"], "unknown");
}

#[test]
fn env_override_and_flag_precedence() {
    let run = |flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_modalg"));
        cmd.args(["check-good", "catalog:Q8", "--strategy", "exhaustive"]);
        if let Some(f) = flag {
            cmd.args(["--max-dim", f]);
        }
        cmd.env("MODALG_MAX_DIM", "1").output().unwrap()
    };
    assert_eq!(run(None).status.code(), Some(2));
    assert_eq!(run(Some("26")).status.code(), Some(0));
}

#[test]
fn build_round_trip_and_presentation_files() {
    let dir = std::env::temp_dir().join(format!("modalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let table = dir.join("h32.json");
    let out = modalg(&["build", "builtin:H32", "--out", table.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&modalg(&["report", table.to_str().unwrap()]));
    assert_eq!(v["order"], 32);
    assert_eq!(v["frattini_equals_omega"], true);

    let pres = dir.join("q8.txt");
    std::fs::write(&pres, "gens: a, b; rels: a^4, b^2 = a^2, [a,b] = a^2").unwrap();
    let v = json(&modalg(&["classify", pres.to_str().unwrap()]));
    assert_eq!(v["order"], 8);
    assert_eq!(v["classification"]["member"]["family"], "quaternion");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_input_exits_three() {
    let out = modalg(&["report", "builtin:Nope"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert_eq!(modalg(&["report", "/nonexistent/group.txt"]).status.code(), Some(3));
}

#[test]
fn verify_command_writes_json() {
    let path = std::env::temp_dir().join(format!("modalg-verify-{}.json", std::process::id()));
    let out = modalg(&["verify-paper", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["exit_status"], 0);
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}
