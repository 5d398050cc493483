use std::process::{Command, Output};

use gradspec::fixtures::fixture;
use gradspec::instance::InstanceFile;
use gradspec_core::{module_tables_constructor, Limits, ModuleConstructor};

fn gradspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradspec")).args(args).output().expect("binary runs")
}

fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn validate_accepts_fixtures() {
    let out = gradspec(&["validate", &fixture_path("m_a.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["module_order"], 4);
}

#[test]
fn corrupted_fixture_exits_2_without_rows() {
    let base = fixture("m_a.json").unwrap();
    let m_a = base.validate(&Limits::default()).unwrap();
    let ModuleConstructor::Tables { size, zero, add, mut action, components, labels } =
        module_tables_constructor(m_a.module.as_ref().unwrap())
    else {
        unreachable!()
    };
    action[2][3] = 1;
    let broken = InstanceFile {
        module: Some(ModuleConstructor::Tables { size, zero, add, action, components, labels }),
        ..base
    };
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, broken.to_json()).unwrap();
    let out = gradspec(&["verify", "--instance", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid module"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(gradspec(&["verify", "--suite", "Thm-9.9"]).status.code(), Some(2));
    assert_eq!(gradspec(&["search", "cotop"]).status.code(), Some(2));
    assert_eq!(gradspec(&["verify", "--max-ring-order", "300"]).status.code(), Some(2));
    assert_eq!(gradspec(&["gen", "--corpus", "ring=8,colour=1"]).status.code(), Some(2));
    assert_eq!(gradspec(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(gradspec(&["validate", "/nonexistent/x.json"]).status.code(), Some(2));
    let out = gradspec(&["socle", &fixture_path("m_b.json"), "--submodule", "0,3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_fixtures_passes() {
    let out = gradspec(&["verify", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["totals"]["fail"], 0);
    assert!(v.get("seed").is_none());
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["millis"] == 0));
}

#[test]
fn suite_filter_limits_rows() {
    let out = gradspec(&["verify", "--suite", "Thm-4.8", "--instance", &fixture_path("ra_self.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let suites: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["suite"].as_str().unwrap()).collect();
    assert_eq!(suites, ["Thm-4.8.1", "Thm-4.8.2"]);
}

#[test]
fn text_dumps_render() {
    for cmd in ["spec", "sspec"] {
        let out = gradspec(&[cmd, &fixture_path("m_a.json")]);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
        assert!(String::from_utf8_lossy(&out.stdout).contains("topology:"));
    }
    let out = gradspec(&["sspec", &fixture_path("r_a.json")]);
    assert_eq!(out.status.code(), Some(2));
}
