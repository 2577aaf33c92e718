use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclesieve"))
        .args(args)
        .env_remove("CYCLESIEVE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn kw_table() {
    let out = run(&["kw", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().any(|l| l == "r=1: (3,1):1 (2,1,1):1"));
    assert!(text.lines().any(|l| l == "r=4: (4):1 (2,2):1 (2,1,1):1"));
}

#[test]
fn schocker_row() {
    let out = run(&["schocker", "--a", "2", "--b", "2", "--r", "1", "--kind", "trivial"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(2,2):1 (1,1,1,1):1\n");
}

#[test]
fn verify_all_small() {
    let out = run(&["verify", "--suite", "all", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["kw"],
        vec!["kw", "--n", "99"],
        vec!["kw", "--n", "zero"],
        vec!["schocker", "--a", "2", "--b", "2", "--r", "3", "--kind", "trivial"],
        vec!["schocker", "--a", "2", "--b", "2", "--r", "1", "--kind", "other"],
        vec!["stembridge", "--nu", "[2,x]"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn failing_csp_exits_one() {
    let out = run(&["csp", "--alpha", "[1,1,1]", "--stat", "des"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("identity failure"));
    let ok = run(&["csp", "--alpha", "[1,1,1]", "--stat", "maj"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn json_round_trip_is_byte_identical() {
    for args in [
        vec!["--format", "json", "kw", "--n", "5"],
        vec!["--format", "json", "schocker", "--a", "3", "--b", "2", "--r", "2", "--kind", "sign"],
        vec!["--format", "json", "lie", "--lambda", "[3,1]"],
        vec!["--format", "json", "wreath", "--a", "2", "--b", "2", "--ul", "[[1],[1]]"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{args:?}");
        let text = stdout(&out);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(format!("{}\n", serde_json::to_string(&value).unwrap()), text);
    }
}

#[test]
fn json_schocker_shape() {
    let out = run(&["--format", "json", "schocker", "--a", "2", "--b", "2", "--r", "1", "--kind", "trivial"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["command"], "schocker");
    assert_eq!(value["series"][0]["schur"]["[2,2]"], 1);
    assert_eq!(value["series"][0]["schur"]["[1,1,1,1]"], 1);
}

#[test]
fn cache_dir_receives_tables() {
    let dir: PathBuf = std::env::temp_dir().join(format!("cyclesieve-cli-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    let first = run(&["--cache-dir", dir.to_str().unwrap(), "lie", "--lambda", "[3,1]"]);
    assert!(first.status.success());
    let cached: Vec<String> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    assert!(cached.iter().any(|n| n.starts_with("tables-") && n.ends_with(".txt")), "{cached:?}");
    let second = run(&["--cache-dir", dir.to_str().unwrap(), "lie", "--lambda", "[3,1]"]);
    assert_eq!(first.stdout, second.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
