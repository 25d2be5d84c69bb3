use std::path::PathBuf;
use std::process::{Command, Output};

fn kummer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kummer"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kummer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn run_named_group() {
    let o = kummer(&["run", "S4(3)"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("P_X = t^6 + 11t^4 + 8t^3 + 11t^2 + 1"));
}

#[test]
fn run_json_is_versioned_and_stable() {
    let a = kummer(&["run", "A4(2)", "--format", "json"]);
    let b = kummer(&["run", "A4(2)", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["polynomials"]["p_x"], serde_json::json!([1, 0, 7, 8, 7, 0, 1]));
}

#[test]
fn run_with_doubled_level_matches() {
    let a = kummer(&["run", "D6(1)", "--format", "json"]);
    let b = kummer(&["run", "D6(1)", "--format", "json", "--torsion-level", "24"]);
    assert!(b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        kummer(&["run", "D6(1)", "--torsion-level", "18"]).status.code(),
        Some(2)
    );
}

#[test]
fn run_all_in_catalog_order() {
    let o = kummer(&["run", "--all", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(names.len(), 16);
    assert_eq!(names[0], "D4(1)");
    assert_eq!(names[15], "S4(3)");
}

#[test]
fn run_generator_file() {
    let path = temp_file(
        "klein.json",
        r#"{"name": "klein", "generators": [[[-1,0,0],[0,-1,0],[0,0,1]], [[1,0,0],[0,-1,0],[0,0,-1]]]}"#,
    );
    let o = kummer(&["run", "--gens", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("P_X = t^6 + 51t^4 + 8t^3 + 51t^2 + 1"));
}

#[test]
fn input_errors_exit_with_two() {
    let o = kummer(&["run", "S5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown group"));

    let path = temp_file(
        "identity.json",
        r#"{"name": "id", "generators": [[[1,0,0],[0,1,0],[0,0,1]]]}"#,
    );
    assert_eq!(
        kummer(&["run", "--gens", path.to_str().unwrap()]).status.code(),
        Some(2)
    );

    let path = temp_file("broken.json", "{\"name\": \"x\",\n\"generators\": [[[1,0]]");
    let o = kummer(&["run", "--gens", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    assert_eq!(kummer(&["duality", "--bound", "0"]).status.code(), Some(2));
    assert_eq!(kummer(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_passes() {
    let o = kummer(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("P_X        16/16"));
    assert!(out.lines().last().unwrap().starts_with("PASS"));
}

#[test]
fn duality_lists_pairs() {
    let o = kummer(&["duality"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("D4(3)  -> D4(4)  dual"));
    assert!(out.contains("D8(1)  -> D8(1)  self-dual"));
    assert!(!out.contains("inconclusive"));
}

#[test]
fn diagram_lists_named_edges() {
    let o = kummer(&["diagram", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let edges: Vec<(String, String)> = v["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["from"].as_str().unwrap().into(),
                e["to"].as_str().unwrap().into(),
            )
        })
        .collect();
    assert!(edges.contains(&("D4(2)".into(), "D12".into())));
    assert!(edges.iter().all(|(a, b)| a != b));
}

#[test]
fn catalog_lists_sixteen() {
    let o = kummer(&["catalog"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 16);
}
