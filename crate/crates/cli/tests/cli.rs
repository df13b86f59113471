use std::io::Write;
use std::process::{Command, Output, Stdio};

use gkm_cli::{betti_document, GraphSpec};
use serde_json::Value;

fn gkm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkm")).args(args).env_remove("GKM_MAX_DEGREE").output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn generate_then_betti_matches_in_process() {
    for (kind, extra) in [("bruhat", vec!["--n", "3"]), ("schubert", vec!["--n", "3", "--w", "2,3,1"]), ("hessenberg", vec!["--n", "3", "--h", "2,3,3"])] {
        let mut args = vec!["generate", kind];
        args.extend(&extra);
        let gen = gkm(&args);
        assert_eq!(code(&gen), 0, "{kind}");
        let file = tempfile::NamedTempFile::new().unwrap();
        std::fs::write(file.path(), &gen.stdout).unwrap();

        let from_file = gkm(&["betti", "--graph", file.path().to_str().unwrap()]);
        let mut args = vec!["betti", "--kind", kind];
        args.extend(&extra);
        let from_kind = gkm(&args);
        assert_eq!(code(&from_file), 0);
        assert_eq!(stdout(&from_file), stdout(&from_kind), "{kind}");

        let n: usize = 3;
        let spec = GraphSpec::from_params(kind, n, Some("2,3,1"), Some("2,3,3")).unwrap();
        let in_process = betti_document(&spec.build().unwrap(), 12).unwrap().to_json();
        assert_eq!(stdout(&from_file), in_process, "{kind}");
    }
}

#[test]
fn betti_from_stdin() {
    let gen = gkm(&["generate", "bruhat", "--n", "2"]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_gkm"))
        .args(["betti", "--graph", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&gen.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["result"]["betti"], serde_json::json!([1, 1]));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["character", "--kind", "bruhat", "--n", "3", "--action", "right"][..],
        &["springer", "--n", "4", "--lambda", "2,2"],
        &["verify", "--suite", "gkm"],
    ] {
        let a = gkm(args);
        let b = gkm(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(code(&a), 0, "{args:?}");
    }
}

#[test]
fn character_document_shape() {
    let doc = json(&gkm(&["character", "--kind", "bruhat", "--n", "3", "--action", "right", "--degree", "1"]));
    assert_eq!(doc["command"], "character");
    let chi = &doc["result"]["degrees"][0]["character"];
    let keys: Vec<&str> = chi.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["1,1,1", "2,1", "3"]);
    assert_eq!(chi["1,1,1"], "2");
    assert_eq!(chi["2,1"], "0");
    assert_eq!(chi["3"], "-1");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&gkm(&["betti"])), 2);
    assert_eq!(code(&gkm(&["betti", "--kind", "bruhat"])), 2);
    assert_eq!(code(&gkm(&["springer", "--n", "4", "--lambda", "2,1"])), 2);
    assert_eq!(code(&gkm(&["character", "--kind", "bruhat", "--n", "2", "--action", "left", "--degree", "x"])), 2);

    let bad = tempfile::NamedTempFile::new().unwrap();
    let graph = r#"{"nvars": 2, "vertices": ["1,2", "2,1"], "edges": [{"u": 0, "v": 1, "weight": ["0", "0"]}], "lambda": [1, 0]}"#;
    std::fs::write(bad.path(), graph).unwrap();
    let out = gkm(&["betti", "--graph", bad.path().to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero"));

    let out = gkm(&["character", "--kind", "schubert", "--n", "3", "--w", "2,3,1", "--action", "left"]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("gkm: "));

    assert_eq!(code(&gkm(&["verify", "--suite", "springer"])), 0);
    for fault in ["zero-weight", "broken-filtration", "non-symmetry"] {
        let out = gkm(&["verify", "--suite", "all", "--inject-fault", fault]);
        assert_eq!(code(&out), 1, "{fault}");
        assert!(!json(&out)["result"]["failed"].as_array().unwrap().is_empty());
    }
}

#[test]
fn degree_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_gkm"))
        .args(["betti", "--kind", "bruhat", "--n", "3"])
        .env("GKM_MAX_DEGREE", "1")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    let out = gkm(&["betti", "--kind", "bruhat", "--n", "3", "--max-degree", "3"]);
    assert_eq!(code(&out), 0);
}
