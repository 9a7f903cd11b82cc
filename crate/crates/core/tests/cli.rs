use std::path::Path;
use std::process::{Command, Output};

use nochka::scene::Scene;

const LINE: &str = r#"{
  "schema": "v1", "m": 1, "N": 1, "u": 1, "b": -1,
  "hyperplanes": [["1", "0"], ["0", "1"], ["1", "1"]],
  "curve": {"degree": 1, "coords": [["1"], ["0", "1"]]},
  "targets": ["genus0", "ramification"]
}"#;

fn nochka(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nochka"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ok = write(dir.path(), "line.json", LINE);
    assert_eq!(nochka(&["verify", &ok]).status.code(), Some(0));

    // three of the four rows are concurrent in P^2
    let concurrent = write(
        dir.path(),
        "concurrent.json",
        r#"{"schema": "v1", "m": 2, "N": 2, "u": 2, "b": -1,
            "hyperplanes": [["1","0","0"], ["0","1","0"], ["1","1","0"], ["0","0","1"]]}"#,
    );
    let out = nochka(&["check-position", &concurrent]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["subset"], serde_json::json!([1, 2, 3]));

    // roots far outside the sampled disk: the finite-radius gap stays large
    let far = write(
        dir.path(),
        "far.json",
        r#"{"schema": "v1", "m": 1, "N": 1, "u": 1, "b": -1,
            "hyperplanes": [["1", "0"], ["0", "1"], ["1", "1"]],
            "numeric_curve": {"coords": [[1.0], [-5000.0, 1.0]]}}"#,
    );
    let out = nochka(&["verify", "--mode", "numeric", "--radii", "10", &far]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"], "violation");

    let bad = write(dir.path(), "bad.json", &LINE.replace("\"v1\"", "\"v9\""));
    assert_eq!(nochka(&["verify", &bad]).status.code(), Some(3));
    assert_eq!(
        nochka(&["verify", "--mode", "sideways", &ok]).status.code(),
        Some(3)
    );
}

#[test]
fn reports_are_json_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let ok = write(dir.path(), "line.json", LINE);
    for cmd in [
        "check-position",
        "weights",
        "ramification",
        "unicity-threshold",
    ] {
        let out = nochka(&[cmd, &ok]);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
        json(&out);
    }
    let a = nochka(&["verify", "--mode", "both", "--seed", "7", &ok]);
    let b = nochka(&["verify", "--mode", "both", "--seed", "7", &ok]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["verdict"], "pass");
    let text = nochka(&["--text", "weights", &ok]);
    assert!(serde_json::from_slice::<serde_json::Value>(&text.stdout).is_err());
}

#[test]
fn corpus_scenes_are_valid() {
    let dir = tempfile::tempdir().unwrap();
    let out = nochka(&["corpus", "--write-scenes", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written = json(&out)["written"].as_array().unwrap().len();
    let mut parsed = 0;
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let scene = Scene::from_json(&text).unwrap();
        assert_eq!(Scene::from_json(&scene.to_json()).unwrap(), scene);
        parsed += 1;
    }
    assert_eq!(parsed, written);
    assert!(parsed >= 40);
}
