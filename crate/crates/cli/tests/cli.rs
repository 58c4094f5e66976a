use std::path::PathBuf;
use std::process::{Command, Output};

use increg::{ChainSpec, RawSpec};
use increg_cli::parse_spec;
use serde_json::Value;

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("increg-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let path = self.0.join(name);
        std::fs::write(&path, body).unwrap();
        path
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn increg(args: &[&str], spec: Option<&PathBuf>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_increg"));
    cmd.args(args);
    if let Some(p) = spec {
        cmd.arg(p);
    }
    cmd.output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const TABLE: &str = r#"{"r":10,"edges":[[1,10],[2,4],[3,5],[7,9]]}"#;
const SIX: &str = r#"{"r":9,"edges":[[1,5],[1,8],[2,9],[3,6],[4,7],[5,9]]}"#;

#[test]
fn classify_json_has_the_verdict_keys() {
    let s = Scratch::new("classify");
    let spec = s.file("t.json", TABLE);
    let out = increg(&["classify", "--format", "json"], Some(&spec));
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["limit_reg"], 2);
    assert_eq!(v["case"], "jq-is-max");
    assert_eq!(v["n0"], 30);
    assert_eq!(v["reduced_r"], 10);
    for key in ["N", "coarse", "limit_indmatch"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn emitted_specs_reparse_to_the_same_chain() {
    let s = Scratch::new("roundtrip");
    let spec = s.file("t.json", r#"{"r":12,"edges":[[9,7],[1,10],[4,2],[3,5]]}"#);
    let out = increg(&["classify", "--format", "json"], Some(&spec));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reduced: RawSpec = serde_json::from_value(v["reduced_spec"].clone()).unwrap();
    let text = serde_json::to_string(&reduced).unwrap();
    assert_eq!(parse_spec(&text).unwrap().to_raw(), reduced);

    let out = increg(&["quasisat", "--format", "json"], Some(&spec));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let derived: ChainSpec = serde_json::from_value(v["derived"].clone()).unwrap();
    let again = parse_spec(&serde_json::to_string(&derived).unwrap()).unwrap();
    assert_eq!(again, derived);
}

#[test]
fn anticycle_prints_trace_and_witness() {
    let s = Scratch::new("anticycle");
    let spec = s.file("e.json", SIX);
    let out = increg(&["anticycle", "--n", "18", "--format", "json"], Some(&spec));
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["case"], "I");
    assert_eq!(v["J"], serde_json::json!([[4, 5], [1]]));
    assert_eq!(v["K"], serde_json::json!([[4, 5], [6]]));
    assert_eq!(v["beta"], 2);
    assert_eq!(v["gamma"], 2);
    assert_eq!(
        v["vertices"],
        serde_json::json!([1, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 27])
    );

    let text = stdout(&increg(&["anticycle", "--n", "18"], Some(&spec)));
    assert!(text.contains("1,4,6,8,10,12,14,16,18,20,22,24,27"));
}

#[test]
fn sweep_table_matches_the_known_values() {
    let s = Scratch::new("sweep");
    let spec = s.file("t.json", TABLE);
    let out = increg(&["sweep", "--from", "10", "--to", "19"], Some(&spec));
    assert!(out.status.success());
    let regs: Vec<String> = stdout(&out)
        .lines()
        .skip(2)
        .map(|l| l.split_whitespace().nth(3).unwrap().to_string())
        .collect();
    assert_eq!(regs, ["5", "4", "3", "4", "4", "3", "3", "3", "3", "2"]);
}

#[test]
fn reg_falls_back_above_the_cap() {
    let s = Scratch::new("reg");
    let spec = s.file("e.json", SIX);
    let out = increg(&["reg", "--n", "30", "--format", "json"], Some(&spec));
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rep = &v[0]["report"];
    assert_eq!(rep["exact"], false);
    assert_eq!(rep["method"], "indmatch-bound");
    assert_eq!(rep["value"], 3);

    let out = increg(
        &["reg", "--from", "9", "--to", "11", "--oracle-cap", "30"],
        Some(&spec),
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 4);
}

#[test]
fn indmatch_over_a_range() {
    let s = Scratch::new("indmatch");
    let spec = s.file("g.json", r#"{"r":4,"edges":[[1,3],[2,4]]}"#);
    let out = increg(
        &["indmatch", "--from", "9", "--to", "12", "--format", "json"],
        Some(&spec),
    );
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let values: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row["indmatch"].as_u64().unwrap())
        .collect();
    assert_eq!(values, [1, 1, 1, 1]);
}

#[test]
fn exit_codes() {
    let s = Scratch::new("exit");
    let good = s.file("g.json", TABLE);
    let broken = s.file("b.json", r#"{"r": 3, "edges": [[1,"#);
    let loop_edge = s.file("l.json", r#"{"r": 3, "edges": [[2,2]]}"#);
    let missing = s.0.join("absent.json");

    assert_eq!(increg(&["classify"], Some(&broken)).status.code(), Some(2));
    assert_eq!(
        increg(&["classify"], Some(&loop_edge)).status.code(),
        Some(2)
    );
    assert_eq!(increg(&["classify"], Some(&missing)).status.code(), Some(2));
    assert_eq!(increg(&["indmatch"], Some(&good)).status.code(), Some(2));
    assert_eq!(
        increg(&["expand", "--n", "4"], Some(&good)).status.code(),
        Some(2)
    );
    assert_eq!(increg(&["expand"], Some(&good)).status.code(), Some(2));
    // The first row reaches the largest column, so no anticycle is built.
    let out = increg(&["anticycle", "--n", "30"], Some(&good));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("AnticycleError"));
    assert_eq!(
        increg(&["--field", "4", "reg", "--n", "10"], Some(&good))
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn golden_suite_passes() {
    let out = increg(&["verify", "--suite", "golden"], None);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}
