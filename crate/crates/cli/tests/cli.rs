use std::process::{Command, Output};

fn qc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcongruence"))
        .args(args)
        .env_remove("QCONGRUENCE_SEED")
        .output()
        .unwrap()
}

fn report_json(args: &[&str]) -> (Option<i32>, serde_json::Value) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut full: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    full.extend(["--out", &p]);
    let out = qc(&full);
    let text = std::fs::read_to_string(&path).unwrap();
    (out.status.code(), serde_json::from_str(&text).unwrap())
}

#[test]
fn single_instance_passes() {
    let (code, r) = report_json(&["verify", "thm1", "--n", "1"]);
    assert_eq!(code, Some(0));
    assert_eq!(r["summary"]["pass"], 1);
    assert_eq!(r["entries"][0]["status"], "pass");
}

#[test]
fn wrong_residue_class_is_skipped() {
    let (code, r) = report_json(&["verify", "guo-b", "--n", "5"]);
    assert_eq!(code, Some(0));
    let entries = r["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["status"], "skipped");
    assert!(entries[0]["reason"].as_str().unwrap().contains("mod 4"));
}

#[test]
fn seed_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, env: Option<&str>, flag: Option<&str>| {
        let path = dir.path().join(name);
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_qcongruence"));
        cmd.args(["verify", "wei-cc", "--n", "5", "--trials", "3", "--out"]).arg(&path);
        cmd.env_remove("QCONGRUENCE_SEED");
        if let Some(s) = env {
            cmd.env("QCONGRUENCE_SEED", s);
        }
        if let Some(s) = flag {
            cmd.args(["--seed", s]);
        }
        assert!(cmd.status().unwrap().success());
        std::fs::read(&path).unwrap()
    };
    assert_eq!(run("env.json", Some("7"), None), run("flag.json", None, Some("7")));
    assert_ne!(run("seven.json", None, Some("7")), run("eight.json", None, Some("8")));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qc(&["verify", "thm1", "--n-max", "500"]).status.code(), Some(2));
    assert_eq!(qc(&["verify", "no-such-claim"]).status.code(), Some(2));
    assert_eq!(qc(&["verify", "thm1", "--n", "1", "--n-max", "5"]).status.code(), Some(2));
}

#[test]
fn unwritable_output_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("report.json");
    let out = Command::new(env!("CARGO_BIN_EXE_qcongruence"))
        .args(["verify", "thm1", "--n", "1", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn list_claims_names_every_id() {
    let out = qc(&["list-claims"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for id in ["thm1", "thm2", "guo-a", "guo-b", "lhopital", "hamme", "sun", "reflection"] {
        assert!(text.lines().any(|l| l.starts_with(id)), "{id}");
    }
    assert_eq!(text.lines().count(), 20);
}
