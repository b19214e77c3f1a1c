use std::process::Command;

fn adolg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_adolg")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn compute_examples() {
    assert_eq!(
        adolg(&["compute", "--invariant", "ado3", "--braid", "{1,{}}"]).1,
        "(1)\n"
    );
    assert_eq!(
        adolg(&["compute", "--invariant", "lg-spec", "--braid", "{2,{}}"]).1,
        "(0)\n"
    );
    let (code, _, err) = adolg(&["compute", "--invariant", "ado3", "--braid", "{2,{0}}"]);
    assert_eq!(code, 2);
    assert!(err.contains("letter 0"), "{err}");
    let (code, _, err) = adolg(&["compute", "--invariant", "ado3", "--braid", "{2,{1,}}"]);
    assert_eq!(code, 2);
    assert!(err.contains("byte 6"), "{err}");
}

#[test]
fn compute_from_file_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("braids.txt");
    std::fs::write(&path, "# two knots\n{2,{1,1,1}}\n\n{3,{1,-2,1,-2}}\n").unwrap();
    let p = path.to_str().unwrap();
    let (code, a, _) = adolg(&["compute", "--invariant", "ado3", "--file", p]);
    assert_eq!(code, 0);
    assert_eq!(a.lines().count(), 2);
    let (_, b, _) = adolg(&["compute", "--invariant", "lg-spec", "--file", p]);
    assert_eq!(a, b);
    assert_eq!(adolg(&["compute", "--invariant", "ado3", "--file", p]).1, a);
    let (_, lg, _) = adolg(&["compute", "--invariant", "lg", "--file", p]);
    assert!(lg.lines().next().unwrap().contains("t0"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(adolg(&["compute", "--invariant", "jones", "--braid", "{1,{}}"]).0, 2);
    assert_eq!(adolg(&["verify", "s5-type=11"]).0, 2);
    assert_eq!(adolg(&["frobnicate"]).0, 2);
}

#[test]
fn verify_relations_and_one_family() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let (code, out, _) = adolg(&["verify", "relations"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.contains(" ok ")).count(), 9);
    let (code, out, err) = adolg(&[
        "verify",
        "s5-type=1",
        "--jobs",
        "1",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}{err}");
    assert!(out.contains("type1") && out.contains("648/648 equal"), "{out}");
    assert!(err.contains("type1"), "progress goes to stderr: {err}");
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let entries = json["sweep"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 648);
    let first = &entries[0];
    for key in ["family", "braid", "ado3", "lg_spec", "equal", "diff"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
    assert_eq!(first["family"], "type1");
}

#[test]
fn enumerate_writes_lists() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = adolg(&["enumerate", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 11);
    let text = std::fs::read_to_string(dir.path().join("type1.txt")).unwrap();
    assert!(text.lines().any(|l| l == "{5,{4,-3,4,2,1}}"));
}
