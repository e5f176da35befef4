use std::path::{Path, PathBuf};
use std::process::Command;

use ecswitch::format::{parse_graph, parse_sequence, serialize_graph};
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
}

fn ecswitch(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ecswitch")).args(args).output().unwrap();
    Run { code: out.status.code().unwrap(), stdout: String::from_utf8(out.stdout).unwrap() }
}

fn file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const MONO_K3: &str = "m 3\nvertices 3\nedge 0 1 1\nedge 0 2 1\nedge 1 2 1\n";

fn k3(m: usize, c: [u8; 3]) -> String {
    format!("m {m}\nvertices 3\nedge 0 1 {}\nedge 1 2 {}\nedge 0 2 {}\n", c[0], c[1], c[2])
}

#[test]
fn equiv_examples() {
    let dir = TempDir::new().unwrap();
    let a = file(&dir, "a.ecg", MONO_K3);
    assert_eq!(ecswitch(&["equiv", s(&a), s(&a), "--group", "S3"]).code, 0);
    let g = file(&dir, "g.ecg", &k3(2, [1, 1, 2]));
    let h = file(&dir, "h.ecg", &k3(2, [1, 1, 1]));
    let run = ecswitch(&["equiv", s(&g), s(&h), "--group", "gens2:(1 2)"]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("verdict: no"));
    let bad = file(&dir, "bad.ecg", "m 3\nvertices 2\nedge 0 0 1\n");
    assert_eq!(ecswitch(&["equiv", s(&bad), s(&a), "--group", "S3"]).code, 2);
    assert_eq!(ecswitch(&["equiv", s(&a), s(&a), "--group", "Q3"]).code, 2);
    assert_eq!(ecswitch(&["equiv", s(&a), s(&a), "--group", "S4"]).code, 2);
}

#[test]
fn equiv_witness_replays_through_apply() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "g.ecg", "m 4\nvertices 4\nedge 0 1 1\nedge 1 2 2\nedge 2 3 3\nedge 0 3 4\n");
    let h = file(&dir, "h.ecg", "m 4\nvertices 4\nedge 0 1 4\nedge 1 2 1\nedge 2 3 2\nedge 0 3 3\n");
    let w = dir.path().join("w.seq");
    for group in ["D4", "S4", "Z4"] {
        let run = ecswitch(&["equiv", s(&g), s(&h), "--group", group, "--oracle", "--witness", s(&w)]);
        assert_eq!(run.code, 0, "{group}: {}", run.stdout);
        let applied = ecswitch(&["apply", s(&g), s(&w)]);
        assert_eq!(applied.code, 0);
        let text = std::fs::read_to_string(&w).unwrap();
        let bijection: Vec<usize> = text
            .lines()
            .find_map(|l| l.strip_prefix("# bijection "))
            .unwrap()
            .split_whitespace()
            .map(|t| t.parse().unwrap())
            .collect();
        let switched = parse_graph(&applied.stdout).unwrap();
        let target = parse_graph(&std::fs::read_to_string(&h).unwrap()).unwrap();
        assert_eq!(switched.relabel(&bijection), target);
    }
}

#[test]
fn mono_examples() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "g.ecg", &k3(3, [1, 2, 3]));
    let w = dir.path().join("w.seq");
    assert_eq!(ecswitch(&["mono", s(&g), "--group", "S3", "--colour", "1", "--witness", s(&w)]).code, 0);
    let seq = std::fs::read_to_string(&w).unwrap();
    assert!(seq.lines().count() <= 8);
    let out = parse_graph(&ecswitch(&["apply", s(&g), s(&w)]).stdout).unwrap();
    assert!(out.is_monochromatic(1));

    let g4 = file(&dir, "g4.ecg", &k3(4, [1, 2, 3]));
    let run = ecswitch(&["mono", s(&g4), "--group", "D4", "--colour", "1"]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("T_{2,1}"));

    let mono = file(&dir, "mono.ecg", MONO_K3);
    assert_eq!(ecswitch(&["mono", s(&mono), "--group", "S3", "--colour", "1", "--witness", s(&w)]).code, 0);
    assert_eq!(std::fs::read_to_string(&w).unwrap(), "");
}

#[test]
fn apply_examples() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "g.ecg", "m 3\nvertices 2\nedge 0 1 1\n");
    let seq = file(&dir, "s.seq", "0 (1 2)\n1 (2 3)\n0 (1 2)\n");
    let run = ecswitch(&["apply", s(&g), s(&seq)]);
    assert_eq!(run.stdout, "m 3\nvertices 2\nedge 0 1 3\n");
    let other = file(&dir, "o.seq", "0 (1 2)\n0 (1 2)\n1 (2 3)\n");
    assert_eq!(ecswitch(&["apply", s(&g), s(&other)]).stdout, "m 3\nvertices 2\nedge 0 1 1\n");

    let messy = file(&dir, "messy.ecg", "# comment\nm 3\n\nvertices 3\nedge 1 2 2\nedge 0 1 3\n");
    let empty = file(&dir, "empty.seq", "# nothing\n");
    let canonical = serialize_graph(&parse_graph(&std::fs::read_to_string(&messy).unwrap()).unwrap());
    assert_eq!(ecswitch(&["apply", s(&messy), s(&empty)]).stdout, canonical);

    let far = file(&dir, "far.seq", "5 (1 2)\n");
    assert_eq!(ecswitch(&["apply", s(&g), s(&far)]).code, 2);
    let garbled = file(&dir, "garbled.seq", "0 (1 2\n");
    assert_eq!(ecswitch(&["apply", s(&g), s(&garbled)]).code, 2);
}

#[test]
fn kcol_and_hom_examples() {
    let dir = TempDir::new().unwrap();
    let c5 = file(&dir, "c5.ecg", "m 3\nvertices 5\nedge 0 1 1\nedge 1 2 1\nedge 2 3 1\nedge 3 4 1\nedge 0 4 1\n");
    let w = dir.path().join("w.seq");
    let run = ecswitch(&["kcol", s(&c5), "--group", "S3", "--k", "3", "--oracle", "--witness", s(&w)]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert!(run.stdout.contains("target:"));
    let map_line = std::fs::read_to_string(&w).unwrap();
    assert!(map_line.contains("# map "));
    assert_eq!(ecswitch(&["kcol", s(&c5), "--group", "S3", "--k", "2", "--oracle"]).code, 1);

    let c4 = file(&dir, "c4.ecg", "m 4\nvertices 4\nedge 0 1 1\nedge 1 2 1\nedge 2 3 1\nedge 0 3 2\n");
    assert_eq!(ecswitch(&["kcol", s(&c4), "--group", "D4", "--k", "2", "--oracle"]).code, 1);
    assert_eq!(ecswitch(&["kcol", s(&c4), "--group", "D4", "--k", "0"]).code, 2);

    let g = file(&dir, "g.ecg", &k3(2, [1, 1, 2]));
    let h = file(&dir, "h.ecg", &k3(2, [2, 2, 1]));
    assert_eq!(ecswitch(&["hom", s(&g), s(&h), "--group", "gens2:(1 2)", "--oracle"]).code, 1);
    let k2 = file(&dir, "k2.ecg", "m 2\nvertices 2\nedge 0 1 2\n");
    let c4b = file(&dir, "c4b.ecg", "m 2\nvertices 4\nedge 0 1 1\nedge 1 2 1\nedge 2 3 1\nedge 0 3 1\n");
    let run = ecswitch(&["hom", s(&c4b), s(&k2), "--group", "S2", "--oracle", "--witness", s(&w)]);
    assert_eq!(run.code, 0);
    let seq = parse_sequence(&std::fs::read_to_string(&w).unwrap(), 2).unwrap();
    assert!(seq.len() <= 4);
}

#[test]
fn gen_examples() {
    let a = ecswitch(&["gen", "--vertices", "5", "--edges", "6", "--m", "4", "--seed", "1"]);
    let b = ecswitch(&["gen", "--vertices", "5", "--edges", "6", "--m", "4", "--seed", "1"]);
    assert_eq!((a.code, &a.stdout), (0, &b.stdout));
    assert_eq!(parse_graph(&a.stdout).unwrap().edge_count(), 6);
    assert_eq!(ecswitch(&["gen", "--vertices", "3", "--edges", "4", "--m", "2"]).code, 2);
    let one = ecswitch(&["gen", "--vertices", "1", "--edges", "0", "--m", "2"]);
    assert_eq!(one.stdout, "m 2\nvertices 1\n");
}

#[test]
fn budget_and_oracle_stats() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "g.ecg", &k3(3, [1, 2, 3]));
    let run = ecswitch(&["oracle", s(&g), "--group", "Z3"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("signatures: 27"));
    assert_eq!(ecswitch(&["oracle", s(&g), "--group", "Z3", "--budget", "5"]).code, 3);
    assert_eq!(ecswitch(&["equiv", s(&g), s(&g), "--group", "Z3", "--budget", "2"]).code, 3);
    assert_eq!(ecswitch(&["oracle", s(&g), "--group", "Z3", "--budget", "0"]).code, 2);
    let gens = ecswitch(&["oracle", s(&g), "--group", "S3", "--generators-only"]);
    let all = ecswitch(&["oracle", s(&g), "--group", "S3"]);
    let count = |r: &Run| r.stdout.lines().find(|l| l.starts_with("signatures")).unwrap().to_string();
    assert_eq!(count(&gens), count(&all));
}

#[test]
fn usage_errors() {
    assert_eq!(ecswitch(&[]).code, 2);
    assert_eq!(ecswitch(&["frobnicate"]).code, 2);
    assert_eq!(ecswitch(&["equiv", "/nonexistent/a.ecg", "/nonexistent/b.ecg", "--group", "S3"]).code, 2);
    assert_eq!(ecswitch(&["--help"]).code, 0);
}
