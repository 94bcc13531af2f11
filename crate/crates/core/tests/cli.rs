use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fuselab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuselab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fuselab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn analyze_s4_lists_subgroups_of_d8() {
    let out = fuselab(&["analyze", "--catalog", "S4", "-p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["command"][0], "analyze");
    assert_eq!(r["results"]["subgroups"].as_array().unwrap().len(), 10);
    assert!(r["version"].is_string());
}

#[test]
fn reduce_ends_at_the_trivial_system() {
    let out = fuselab(&["reduce", "--catalog", "S4", "-p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"limit\""));
}

#[test]
fn solv_check_on_s5() {
    let out = fuselab(&["solv-check", "--catalog", "S5", "--normal-gens", "(1 2 3),(1 2)(3 4),(2 3)(4 5)", "-p", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn normal_check_of_a_non_normal_subgroup_is_a_hypothesis_violation() {
    let out = fuselab(&["normal-check", "--catalog", "S4", "--normal-gens", "(1 2)", "-p", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn input_errors_exit_three() {
    assert_eq!(fuselab(&["analyze", "--catalog", "nope", "-p", "2"]).status.code(), Some(3));
    assert_eq!(fuselab(&["analyze", "-p", "2"]).status.code(), Some(3));
    assert_eq!(fuselab(&["frobnicate"]).status.code(), Some(3));
    let bad = scratch("bad.json", r#"{"format":"cayley","name":"X","order":2,"table":[[1,0],[0,1]]}"#);
    assert_eq!(fuselab(&["analyze", "--group", bad.to_str().unwrap(), "-p", "2"]).status.code(), Some(3));
    let missing = std::env::temp_dir().join("fuselab-no-such-file.json");
    assert_eq!(fuselab(&["analyze", "--group", missing.to_str().unwrap(), "-p", "2"]).status.code(), Some(3));
    assert_eq!(fuselab(&["selftest", "--only", "nonsense"]).status.code(), Some(3));
}

#[test]
fn help_exits_zero() {
    assert_eq!(fuselab(&["--help"]).status.code(), Some(0));
}

#[test]
fn group_file_reports_its_digest_and_are_deterministic() {
    let doc = r#"{"format":"perm","name":"D8","degree":4,"generators":[[[1,2,3,4]],[[1,3]]]}"#;
    let path = scratch("d8.json", doc);
    let json_out = path.with_file_name("d8-report.json");
    let args = ["linking", "--group", path.to_str().unwrap(), "-p", "2", "--json", json_out.to_str().unwrap()];
    let a = fuselab(&args);
    let b = fuselab(&args);
    assert_eq!(a.status.code(), Some(0));
    let (mut ra, mut rb) = (report(&a), report(&b));
    assert_eq!(ra["inputs"][0]["sha256"], fuselab::report::sha256_hex(doc.as_bytes()));
    ra.as_object_mut().unwrap().remove("timing");
    rb.as_object_mut().unwrap().remove("timing");
    assert_eq!(ra, rb);
    let mut written: Value = serde_json::from_str(&std::fs::read_to_string(&json_out).unwrap()).unwrap();
    written.as_object_mut().unwrap().remove("timing");
    assert_eq!(written, ra);
}

#[test]
fn selftest_subsets() {
    let out = fuselab(&["selftest", "--only", "saturation", "--prime", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let suites = r["results"]["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 1);
    assert!(suites[0]["cases"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["case"].as_str().unwrap().ends_with("p=3")));
}

#[test]
fn bundled_documents_load() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    for (file, order) in [("d8.json", 8), ("c4.json", 4)] {
        let path = dir.join(file);
        let out = fuselab(&["analyze", "--group", path.to_str().unwrap(), "-p", "2"]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(report(&out)["results"]["group"]["order"], order);
    }
    let d8 = dir.join("d8.json");
    let out = fuselab(&["normal-check", "--group", d8.to_str().unwrap(), "--normal-gens", "(1 2 3 4)", "-p", "2"]);
    assert_eq!(out.status.code(), Some(0));
}
