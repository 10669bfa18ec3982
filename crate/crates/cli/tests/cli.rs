use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn specs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subshift")).args(args).output().unwrap()
}

fn spec(name: &str) -> String {
    specs().join(name).to_str().unwrap().to_owned()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn complexity_of_a_sturmian_window() {
    let dir = tempfile::tempdir().unwrap();
    let win = dir.path().join("s.win");
    let csv = dir.path().join("c.csv");
    assert!(run(&["generate", "--spec", &spec("sturmian.spec"), "--out", s(&win)]).status.success());
    let out = run(&["complexity", "--window", s(&win), "--n-max", "200", "--out", s(&csv)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,c_n,diff"));
    for (n, line) in (1..=200).zip(lines) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[..2], [n.to_string(), (n + 1).to_string()]);
    }
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "--spec", &spec("miller.spec")]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("# miller(g=const:3)\nn,c_n,diff,bound,margin\n"));
    assert!(out.stderr.is_empty());

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.spec");
    std::fs::write(&bad, "construction = miller\ng = const:3\ndepth = 5\nbogus = 1\n").unwrap();
    let out = run(&["verify", "--spec", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());

    std::fs::write(&bad, "construction = intermediate\ng = nlog2\nnseq = 4,8,24\n").unwrap();
    let out = run(&["verify", "--spec", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("violates"));

    std::fs::write(&bad, "construction = finite-set\nseq.1 = periodic:12\nextent = 40\n").unwrap();
    assert_eq!(run(&["verify", "--spec", s(&bad)]).status.code(), Some(3));
}

#[test]
fn roundtrip_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("src.spec");
    std::fs::write(&src, "construction = sturmian\nalpha = [0;1](period=1)\nextent = -20000..20000\n").unwrap();
    let enc = dir.path().join("enc.win");
    let out = run(&["roundtrip", "--spec", s(&src), "--bits", "0010", "--out", s(&enc)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let lines: Vec<String> = std::fs::read_to_string(&enc).unwrap().lines().map(str::to_owned).collect();
    assert_eq!(lines[1], "0");
    assert_eq!(lines[3].split(' ').count() % 2, 1);

    assert_eq!(run(&["roundtrip", "--spec", &spec("sturmian_source.spec"), "--bits", "11111111"]).status.code(), Some(3));
    assert_eq!(run(&["roundtrip", "--spec", &spec("sturmian_source.spec"), "--bits", "12"]).status.code(), Some(2));
    assert_eq!(run(&["roundtrip", "--spec", &spec("miller.spec"), "--bits", "1"]).status.code(), Some(2));
}

#[test]
fn analyze_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let win = dir.path().join("p.win");
    std::fs::write(&win, format!("0,1\n-3\n-\n{}\n", ["0 1 1"; 40].join(" "))).unwrap();
    let rep = dir.path().join("r.txt");
    assert!(run(&["analyze", "--window", s(&win), "--n-max", "20", "--report", s(&rep)]).status.success());
    let text = std::fs::read_to_string(&rep).unwrap();
    assert!(text.contains("morse_hedlund.verdict: periodic(3)\n"), "{text}");

    assert_eq!(run(&["complexity", "--window", s(&win), "--n-max", "0", "--out", s(&rep)]).status.code(), Some(2));
    let both = ["complexity", "--window", s(&win), "--spec", &spec("miller.spec"), "--n-max", "3", "--out", s(&rep)];
    assert_eq!(run(&both).status.code(), Some(2));
    assert_eq!(run(&["complexity", "--window", "/nonexistent", "--n-max", "3", "--out", s(&rep)]).status.code(), Some(2));
}

#[test]
fn generate_numbers_multiple_windows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fs");
    assert!(run(&["generate", "--spec", &spec("finite_set.spec"), "--out", s(&out)]).status.success());
    assert!(dir.path().join("fs.1").exists() && dir.path().join("fs.2").exists());
    assert!(!out.exists());
}
