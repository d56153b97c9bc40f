use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn aec(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aec"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_color_verify_cycle() {
    let d = TempDir::new().unwrap();
    let p = d.path();
    assert_eq!(code(&aec(p, &["gen", "cycle(4)", "--out", "c4.txt"])), 0);
    let o = aec(p, &["color", "c4.txt", "--out", "c4.col"]);
    assert_eq!(code(&o), 0);
    let o = aec(p, &["verify", "c4.txt", "c4.col"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "ok: 3 colors");
}

#[test]
fn complete_graph_needs_the_seven_color_mode() {
    let d = TempDir::new().unwrap();
    let p = d.path();
    assert_eq!(code(&aec(p, &["gen", "complete(5)", "--out", "k5.txt"])), 0);
    assert_eq!(code(&aec(p, &["color", "k5.txt"])), 2);
    let o = aec(p, &["color", "k5.txt", "--palette", "7", "--out", "k5.col"]);
    assert_eq!(code(&o), 0);
    let o = aec(p, &["verify", "k5.txt", "k5.col"]);
    assert_eq!(code(&o), 0);
    let k: usize = stdout(&o)
        .split_whitespace()
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    assert!(k <= 7);
}

#[test]
fn degree_five_is_a_precondition_error() {
    let d = TempDir::new().unwrap();
    fs::write(d.path().join("star.txt"), "6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n").unwrap();
    assert_eq!(code(&aec(d.path(), &["color", "star.txt"])), 2);
}

#[test]
fn trace_replays_and_matches() {
    let d = TempDir::new().unwrap();
    let p = d.path();
    aec(p, &["gen", "random_valid(60,119,5)", "--out", "g.txt"]);
    let o = aec(
        p,
        &[
            "color",
            "g.txt",
            "--trace",
            "g.trace",
            "--out",
            "g.col",
            "--debug-asserts",
        ],
    );
    assert_eq!(code(&o), 0);
    assert_eq!(
        code(&aec(
            p,
            &["replay", "g.txt", "g.trace", "--expect", "g.col"]
        )),
        0
    );

    let mut trace = fs::read_to_string(p.join("g.trace")).unwrap();
    let cut = trace.find("MERGE").unwrap_or(trace.len() / 2);
    trace.truncate(cut);
    fs::write(p.join("bad.trace"), trace).unwrap();
    assert_eq!(code(&aec(p, &["replay", "g.txt", "bad.trace"])), 1);
}

#[test]
fn verify_reports_a_bichromatic_cycle() {
    let d = TempDir::new().unwrap();
    let p = d.path();
    fs::write(p.join("c4.txt"), "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    fs::write(p.join("bad.col"), "0 1 1\n1 2 2\n2 3 1\n3 0 2\npalette 6\n").unwrap();
    let o = aec(p, &["verify", "c4.txt", "bad.col"]);
    assert_eq!(code(&o), 1);
    assert!(!o.stderr.is_empty());
}

#[test]
fn exact_prints_json() {
    let d = TempDir::new().unwrap();
    let p = d.path();
    aec(p, &["gen", "complete_minus_edge(5)", "--out", "k.txt"]);
    let o = aec(p, &["exact", "k.txt"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["m"], 9);
    assert!(v["a_prime"].as_u64().unwrap() >= 5);
    assert!(v["nodes"].as_u64().unwrap() > 0);
}

#[test]
fn gen_is_deterministic() {
    let d = TempDir::new().unwrap();
    let a = stdout(&aec(d.path(), &["gen", "random_4regular(40,3)"]));
    let b = stdout(&aec(d.path(), &["gen", "random_4regular(40,3)"]));
    assert_eq!(a, b);
    assert!(a.starts_with("40 80"));
}

#[test]
fn bench_prints_csv() {
    let d = TempDir::new().unwrap();
    let o = aec(
        d.path(),
        &[
            "bench",
            "--families",
            "random_valid,cycle",
            "--sizes",
            "10,20",
            "--seeds",
            "0..2",
        ],
    );
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("family,n,m,colors,moves,nodes,ms"));
    assert_eq!(lines.count(), 8);
}

#[test]
fn error_codes() {
    let d = TempDir::new().unwrap();
    let p = d.path();
    assert_eq!(code(&aec(p, &["color", "missing.txt"])), 66);
    assert_eq!(code(&aec(p, &["frobnicate"])), 64);
    assert_eq!(code(&aec(p, &["color", "x.txt", "--palette", "5"])), 64);
    fs::write(p.join("junk.txt"), "3 1\n0 q\n").unwrap();
    assert_eq!(code(&aec(p, &["color", "junk.txt"])), 65);
    assert_eq!(code(&aec(p, &["gen", "cycle(2)"])), 2);
    assert_eq!(code(&aec(p, &["--help"])), 0);
}
