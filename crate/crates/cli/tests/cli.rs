use std::process::{Command, Output};

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sendov-lab"))
        .args(args)
        .env_remove("SENDOV_LAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bound_json_and_domain_errors() {
    let o = lab(&["bound", "--a", "0.8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let n = v["final_n"].as_f64().unwrap();
    assert!((n / 6.2e7 - 1.0).abs() < 0.01);
    assert_eq!(v.as_object().unwrap().len(), 21);

    assert!(stdout(&lab(&["bound", "--a", "0.5"])).contains("final_n      4.25984e7"));
    assert_eq!(lab(&["bound", "--a", "1.5"]).status.code(), Some(2));
    assert_eq!(lab(&["bound", "--a", "nan"]).status.code(), Some(2));
    assert_eq!(lab(&["bound"]).status.code(), Some(2));
}

fn round_trips<T: serde::Serialize + serde::de::DeserializeOwned>(args: &[&str]) {
    let text = stdout(&lab(args));
    let parsed: T = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap() + "\n", text, "{args:?}");
}

#[test]
fn json_output_round_trips() {
    use sendov_core::bounds::{BoundBreakdown, MeanBound};
    use sendov_core::verify::{FuzzReport, VerificationOutcome};
    round_trips::<BoundBreakdown>(&["bound", "--a", "0.3", "--format", "json"]);
    round_trips::<MeanBound>(&["mean-bound", "--a", "0.5", "--n", "10", "--format", "json"]);
    round_trips::<FuzzReport>(&["fuzz", "--a", "0.6", "--degree", "5", "--trials", "20", "--format", "json"]);
    let text = stdout(&lab(&["verify", "--grid-step", "0.01", "--format", "json"]));
    for line in text.lines() {
        let o: VerificationOutcome = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&o).unwrap(), line);
    }
}

#[test]
fn table_csv_is_stable() {
    let first = lab(&["table", "--format", "csv"]);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout(&first);
    assert!(text.starts_with("a,degot_n,computed_n,printed_n,rounded_n,relative_diff,flagged\n"));
    assert_eq!(text.lines().count(), 10);
    assert!(text.contains("\n0.3,1654,"));
    assert!(text.lines().nth(1).unwrap().ends_with(",true"));
    assert_eq!(text, stdout(&lab(&["table", "--format", "csv"])));
}

#[test]
fn verify_report_and_exit_codes() {
    let o = lab(&["verify", "--grid-step", "0.01", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let ids: Vec<String> = text
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["check_id"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(ids.len(), 39);
    assert!(ids.iter().all(|id| id.contains('.')));
    assert_eq!(lab(&["verify", "--grid-step", "0.5"]).status.code(), Some(2));
}

#[test]
fn fuzz_exit_codes_and_seed_sources() {
    let o = lab(&["fuzz", "--a", "0.5", "--degree", "8", "--trials", "200", "--seed", "42", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("a,degree,trials,violations,max_distance,non_converged,seed\n0.5,8,200,0,"));
    assert_eq!(lab(&["fuzz", "--a", "0.5", "--degree", "1"]).status.code(), Some(2));
    assert_eq!(lab(&["fuzz", "--a", "0", "--degree", "4"]).status.code(), Some(2));

    // default seed, then the environment override, then the flag over both
    let default = stdout(&lab(&["fuzz", "--a", "0.4", "--degree", "6", "--trials", "10", "--format", "csv"]));
    assert!(default.trim_end().ends_with(",42"));
    let env = Command::new(env!("CARGO_BIN_EXE_sendov-lab"))
        .args(["fuzz", "--a", "0.4", "--degree", "6", "--trials", "10", "--format", "csv"])
        .env("SENDOV_LAB_SEED", "7")
        .output()
        .unwrap();
    assert!(stdout(&env).trim_end().ends_with(",7"));
    let flag = Command::new(env!("CARGO_BIN_EXE_sendov-lab"))
        .args(["fuzz", "--a", "0.4", "--degree", "6", "--trials", "10", "--format", "csv", "--seed", "9"])
        .env("SENDOV_LAB_SEED", "7")
        .output()
        .unwrap();
    assert!(stdout(&flag).trim_end().ends_with(",9"));
}

#[test]
fn check_instances() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_string()
    };
    let origin = write("origin.json", r#"{"a": 0.5, "zeros": [[0,0],[0,0],[0,0],[0,0]]}"#);
    let o = lab(&["check", "--instance", &origin, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["sendov_distance"].as_f64().unwrap() - 0.1).abs() < 1e-12);
    assert_eq!(v["verdict"], "PASS");

    let midpoint = write("mid.json", r#"{"a": 0.9, "zeros": [[-1, 0]]}"#);
    let text = stdout(&lab(&["check", "--instance", &midpoint]));
    assert!(text.contains("sendov_distance  0.95\n") && text.contains("PASS"), "{text}");

    let outside = write("out.json", r#"{"a": 0.5, "zeros": [[1.5, 0]]}"#);
    assert_eq!(lab(&["check", "--instance", &outside]).status.code(), Some(2));
    let broken = write("broken.json", "{not json");
    assert_eq!(lab(&["check", "--instance", &broken]).status.code(), Some(2));
    assert_eq!(lab(&["check", "--instance", "/nonexistent/x.json"]).status.code(), Some(2));
}

#[test]
fn mean_bound_rendering() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&lab(&["mean-bound", "--a", "0.5", "--n", "650", "--format", "json"]))).unwrap();
    assert!(v["bound_at_quarter"].as_f64().unwrap() <= 0.125);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&lab(&["mean-bound", "--a", "0.5", "--n", "10", "--format", "json"]))).unwrap();
    assert!(v["bound_inf"].as_f64().unwrap() <= v["bound_at_quarter"].as_f64().unwrap());
    assert_eq!(lab(&["mean-bound", "--a", "0.5", "--n", "1"]).status.code(), Some(2));
    assert_eq!(lab(&["mean-bound", "--n", "10"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let o = lab(&["table", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&lab(&["table", "--format", "csv"])));
    let bad = lab(&["table", "--out", "/nonexistent/dir/t.csv"]);
    assert_eq!(bad.status.code(), Some(2));
}
