use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn cbwt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cbwt")).args(args).output().expect("run cbwt")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// Writes the running example as a source file and indexes it.
fn indexed(dir: &TempDir, rate: Option<&str>) -> (PathBuf, PathBuf) {
    let src = dir.path().join("texts.txt");
    fs::write(&src, "5 1 2\n5 3 6 3\n4 4 7 8\n").unwrap();
    let idx = dir.path().join("index.cbwt");
    let mut args = vec!["build", p(&src), p(&idx)];
    if let Some(r) = rate {
        args.extend(["--sample-rate", r]);
    }
    let out = cbwt(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out), "indexed d=3 n=11\n");
    (src, idx)
}

/// FT, LT and LCP lines of an index file.
fn arrays(idx: &Path) -> Vec<String> {
    let text = fs::read_to_string(idx).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let d: usize = lines[1].split(' ').nth(1).unwrap().parse().unwrap();
    lines[2 + d..5 + d].iter().map(|s| s.to_string()).collect()
}

#[test]
fn build_count_locate() {
    let dir = TempDir::new().unwrap();
    let (_, idx) = indexed(&dir, None);
    let count = |pat: &str| stdout(&cbwt(&["count", p(&idx), "--pattern", pat]));
    assert_eq!(count("5 6 3 4"), "2\n");
    assert_eq!(count("6 4 3"), "0\n");
    assert_eq!(count(""), "11\n");
    let out = cbwt(&["locate", p(&idx), "--pattern", "5 6 3 4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1:3\n3:3\n");
    assert_eq!(
        arrays(&idx),
        vec!["1 2 2 2 2 1 1 0 0 0 0", "0 1 0 0 0 2 2 1 1 2 2", "0 1 1 1 1 1 2 1 2 2 2"]
    );
}

#[test]
fn add_extends_the_index() {
    let dir = TempDir::new().unwrap();
    let (src, idx) = indexed(&dir, Some("1"));
    let out = cbwt(&["add", p(&idx), "--text", "7 3 1 5 2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out), "indexed d=4 n=16\n");
    assert_eq!(
        arrays(&idx),
        vec![
            "1 2 2 2 2 3 2 1 1 0 0 0 0 0 0 0",
            "0 1 0 0 0 0 0 2 2 1 1 2 2 0 3 2",
            "0 1 1 1 1 1 1 1 2 1 2 2 2 2 2 2",
        ]
    );
    let out = cbwt(&["locate", p(&idx), "--pattern", "7 3 1 5 2"]);
    assert_eq!(stdout(&out), "4:1\n");

    // Adding the text matches building all four texts at once.
    fs::write(&src, "5 1 2\n5 3 6 3\n4 4 7 8\n7 3 1 5 2\n").unwrap();
    let direct = dir.path().join("direct.cbwt");
    assert!(cbwt(&["build", p(&src), p(&direct), "--sample-rate", "1"]).status.success());
    assert_eq!(arrays(&direct), arrays(&idx));
    assert!(cbwt(&["verify", p(&idx), "--source", p(&src)]).status.success());

    let out = cbwt(&["add", p(&idx), "--text", "  "]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("empty text"));
}

#[test]
fn verify_reports_mismatches() {
    let dir = TempDir::new().unwrap();
    let (src, idx) = indexed(&dir, None);
    let out = cbwt(&["verify", p(&idx), "--source", p(&src)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "ok\n");

    let text = fs::read_to_string(&idx).unwrap();
    let corrupt = text.replace("0 1 1 1 1 1 2 1 2 2 2", "0 1 1 1 1 1 1 1 2 2 2");
    assert_ne!(corrupt, text);
    fs::write(&idx, corrupt).unwrap();
    let out = cbwt(&["verify", p(&idx), "--source", p(&src)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("LCP differs at position 7"), "{}", stderr(&out));

    let big_src = dir.path().join("big.txt");
    let line: Vec<String> = (0..65).map(|k| (k % 7).to_string()).collect();
    fs::write(&big_src, line.join(" ")).unwrap();
    let big = dir.path().join("big.cbwt");
    assert!(cbwt(&["build", p(&big_src), p(&big)]).status.success());
    let out = cbwt(&["verify", p(&big), "--source", p(&big_src)]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn input_errors() {
    let dir = TempDir::new().unwrap();
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "\n  \n").unwrap();
    let out = cbwt(&["build", p(&empty), p(&dir.path().join("x"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no texts"));

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "1 2\n3 x4 5\n").unwrap();
    let out = cbwt(&["build", p(&bad), p(&dir.path().join("x"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2, column 3"), "{}", stderr(&out));

    let out = cbwt(&["count", p(&dir.path().join("missing")), "--pattern", "1"]);
    assert_eq!(out.status.code(), Some(3));

    let garbage = dir.path().join("garbage.cbwt");
    fs::write(&garbage, "CBWT 1\n3 x\n").unwrap();
    let out = cbwt(&["count", p(&garbage), "--pattern", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chars_mode() {
    let dir = TempDir::new().unwrap();
    let src = dir.path().join("words.txt");
    fs::write(&src, "banana\nabcab\n").unwrap();
    let idx = dir.path().join("words.cbwt");
    assert!(cbwt(&["build", p(&src), p(&idx), "--chars"]).status.success());
    // Windows w with w1 <= w3 < w2: "ana" three times around banana, and
    // "aba" across the wrap of abcab.
    let out = cbwt(&["locate", p(&idx), "--pattern", "aba", "--chars"]);
    assert_eq!(stdout(&out), "1:2\n1:4\n1:6\n2:4\n");
    let out = cbwt(&["count", p(&idx), "--pattern", "x", "--chars"]);
    assert_eq!(stdout(&out), "11\n");
    assert!(cbwt(&["verify", p(&idx), "--source", p(&src), "--chars"]).status.success());
}
