use std::path::PathBuf;
use std::process::{Command, Output};

fn camina(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_camina"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("camina-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn info_from_perm_file() {
    let path = temp_file("s3.perm", "perm 3\n(1 2 3)\n(1 2)\n");
    let o = camina(&["info", path.to_str().unwrap()]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("report-version = 1\n"));
    assert!(s.contains("order = 6\n"));
    assert!(s.contains("classes = 3\n"));
    assert!(s.contains("group = s3\n"));
}

#[test]
fn table_format() {
    let o = camina(&["table", "quaternion(8)"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "report-version = 1");
    assert!(lines[1].starts_with("classes: 0 "));
    assert_eq!(lines.len(), 2 + 5);
    assert_eq!(lines[2], "deg=1 values=1, 1, 1, 1, 1");
    assert_eq!(lines[6], "deg=2 values=2, 0, -2, 0, 0");
}

#[test]
fn classify_and_analyze() {
    let o = camina(&["classify", "agl1(8)", "extraspecial(2,-)"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("type = type2\n"));
    assert!(s.contains("type = type1\n"));
    let o = camina(&["classify", "metacyclic(7,3,2)", "--normal", "0,1,2,3,4,5,6"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("type = not-d\n"));
    let o = camina(&["analyze", "--pair", "extraspecial(1,+)", "--normal", "auto-minimal"]);
    let s = stdout(&o);
    assert!(s.contains("ramification-e = 2\n"));
    assert_eq!(s.matches("theta = ").count(), 2);
}

#[test]
fn orbits_command() {
    let path = temp_file("c3.gens", "2\n");
    let o = camina(&["orbits", "--prime", "7", "--dim", "1", "--gens", path.to_str().unwrap()]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("orbit-sizes = 3,3\n"));
    assert!(s.contains("dade-duplicate = true\n"));
    let o = camina(&["orbits", "--prime", "3", "--dim", "2", "--scan"]);
    assert!(stdout(&o).contains("odd-subgroups = 5\n"));
}

#[test]
fn corpus_filter_is_clean() {
    let o = camina(&["corpus", "--filter", "agl1"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("groups = 9\n"));
    assert!(s.contains("theorem_violations = 0\n"));
    assert!(s.contains("type3_witnesses = 0\n"));
}

#[test]
fn corpus_mismatch_exits_nonzero() {
    let path = temp_file("wrong.corpus", "sym(3) | order=7\n");
    let o = camina(&["corpus", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("mismatch = order: expected 7, got 6"));
}

#[test]
fn usage_and_parse_errors_exit_one() {
    assert_eq!(camina(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(camina(&["info"]).status.code(), Some(1));
    let path = temp_file("bad.cayley", "cayley 2\n0 1\n1 7\n");
    let o = camina(&["info", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(camina(&["classify", "sym(3)", "--normal", "0,3"]).status.code(), Some(1));
    assert!(camina(&["--help"]).status.success());
}
