use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fastmis::generators::gnp;
use fastmis::io::write_metis;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

const P5: &str = "5 4\n2\n1 3\n2 4\n3 5\n4\n";

fn fastmis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fastmis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_p5_and_verify() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "p5.metis", P5);
    let sol = dir.path().join("p5.sol");
    let out = fastmis(&[
        "solve", "--algo", "onlinemis", "--graph", s(&graph), "--seed", "1", "--iterations", "1000",
        "--solution", s(&sol),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(fs::read_to_string(&sol).unwrap().lines().count(), 3);
    let out = fastmis(&["verify", "--graph", s(&graph), "--solution", s(&sol)]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("size 3"));

    let tampered = write(&dir, "bad.sol", "0\n1\n");
    let out = fastmis(&["verify", "--graph", s(&graph), "--solution", s(&tampered)]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("edge (0, 1)"));
}

#[test]
fn every_algorithm_accepts_edge_lists() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "p5.txt", "# path\n0 1\n1 2\n2 3\n3 4\n");
    for algo in ["onlinemis", "kermis", "arw", "kernel"] {
        let sol = dir.path().join(format!("{algo}.sol"));
        let out = fastmis(&[
            "solve", "--algo", algo, "--graph", s(&graph), "--format", "edges", "--iterations", "200",
            "--cut-fraction", "0", "--solution", s(&sol),
        ]);
        assert!(out.status.success(), "{algo}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(fs::read_to_string(&sol).unwrap().lines().count(), 3, "{algo}");
    }
}

#[test]
fn identical_seeds_give_identical_files() {
    let dir = TempDir::new().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut buf = Vec::new();
    write_metis(&gnp(300, 0.02, &mut rng), &mut buf).unwrap();
    let graph = dir.path().join("g.metis");
    fs::write(&graph, buf).unwrap();
    let mut files = Vec::new();
    for run in 0..2 {
        let sol = dir.path().join(format!("{run}.sol"));
        let log = dir.path().join(format!("{run}.csv"));
        let out = fastmis(&[
            "solve", "--algo", "onlinemis", "--graph", s(&graph), "--seed", "42", "--iterations", "3000",
            "--solution", s(&sol), "--log", s(&log),
        ]);
        assert!(out.status.success());
        files.push((fs::read(&sol).unwrap(), fs::read(&log).unwrap()));
    }
    assert_eq!(files[0], files[1]);
}

#[test]
fn speedup_and_quality_time() {
    let dir = TempDir::new().unwrap();
    let base = write(&dir, "base.csv", "# algorithm=onlinemis\nelapsed_seconds,size\n1,10\n");
    let other = write(&dir, "other.csv", "# algorithm=arw\nelapsed_seconds,size\n5,10\n");
    let out = fastmis(&["speedup", s(&base), s(&other)]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "5.00");

    let never = write(&dir, "never.csv", "elapsed_seconds,size\n5,9\n");
    let out = fastmis(&["speedup", s(&base), s(&never)]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "inf");

    let out = fastmis(&["quality-time", s(&base), s(&other)]);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(out.status.success());
    assert!(text.contains("reference 10 target 10"), "{text}");
    assert!(text.contains("average onlinemis 1 (1/1 reached)"), "{text}");
    assert!(text.contains("average arw 5 (1/1 reached)"), "{text}");
}

#[test]
fn kernel_stats_reports_rules() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "p5.metis", P5);
    let out = fastmis(&["kernel-stats", "--graph", s(&graph), "--rules", "kermis"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success());
    assert!(text.contains("kernel n=0 m=0"));
    assert!(text.contains("fixed 3"));
}

#[test]
fn bad_input_exits_nonzero() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.metis", "3 2\n0\n1 3\n2\n");
    let out = fastmis(&["solve", "--algo", "arw", "--graph", s(&bad), "--iterations", "5"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let missing = dir.path().join("missing.metis");
    assert!(!fastmis(&["verify", "--graph", s(&missing), "--solution", s(&missing)]).status.success());
    assert!(!fastmis(&["solve", "--algo", "arw", "--graph", s(&bad)]).status.success());
    assert!(!fastmis(&["solve", "--bogus"]).status.success());
    let empty = write(&dir, "empty.txt", "");
    let out = fastmis(&["solve", "--algo", "arw", "--graph", s(&empty), "--format", "edges", "--iterations", "1"]);
    assert!(!out.status.success());
    let sol = dir.path().join("e.sol");
    let out = fastmis(&[
        "solve", "--algo", "arw", "--graph", s(&empty), "--format", "edges", "--n", "4", "--iterations", "1",
        "--solution", s(&sol),
    ]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(&sol).unwrap(), "0\n1\n2\n3\n");
}
