use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn qnbc(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qnbc"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("spawn qnbc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) {
    fs::write(dir.join(name), text).unwrap();
}

const K3: &str = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
const K2: &str = "c single edge\np edge 2 1\ne 1 2\n";
const C4: &str = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n";

#[test]
fn check_petersen_prism_is_positive() {
    let d = TempDir::new().unwrap();
    let o = qnbc(
        d.path(),
        &["gen", "--family", "gp", "--params", "5,1", "--out", "gp"],
    );
    assert_eq!(o.status.code(), Some(0));
    let o = qnbc(
        d.path(),
        &["check", "gp.graph", "gp.coloring", "--format", "kv"],
    );
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("kind=QNBC"));
    assert!(out.contains("positive=true"));
    assert!(out.contains("congruence_positive=true"));
}

#[test]
fn solve_triangle_is_unsat_with_reason() {
    let d = TempDir::new().unwrap();
    write(d.path(), "k3.graph", K3);
    let o = qnbc(d.path(), &["solve", "k3.graph", "--variant", "any"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("reason=no odd-degree vertex"));
}

#[test]
fn gen_path_then_check_uniform_blue() {
    let d = TempDir::new().unwrap();
    let o = qnbc(d.path(), &["gen", "--family", "path", "--params", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let o = qnbc(
        d.path(),
        &[
            "check",
            "path_8.graph",
            "path_8.coloring",
            "--format",
            "json",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "QNBC");
    assert_eq!(v["uniform_dominant"], "blue");
}

#[test]
fn check_invalid_coloring_exits_one() {
    let d = TempDir::new().unwrap();
    write(d.path(), "k2.graph", K2);
    write(d.path(), "rr.coloring", "RR\n");
    let o = qnbc(d.path(), &["check", "k2.graph", "rr.coloring"]);
    assert_eq!(o.status.code(), Some(0));
    write(d.path(), "c4.graph", C4);
    write(d.path(), "bad.coloring", "RRRR\n");
    let o = qnbc(d.path(), &["check", "c4.graph", "bad.coloring"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("kind=invalid"));
}

#[test]
fn usage_and_io_errors_exit_two() {
    let d = TempDir::new().unwrap();
    assert_eq!(qnbc(d.path(), &["nonsense"]).status.code(), Some(2));
    assert_eq!(
        qnbc(d.path(), &["check", "missing.graph", "x"])
            .status
            .code(),
        Some(2)
    );
    write(d.path(), "bad.graph", "p edge 2 2\ne 1 2\n");
    assert_eq!(
        qnbc(d.path(), &["solve", "bad.graph"]).status.code(),
        Some(2)
    );
    write(d.path(), "k2.graph", K2);
    write(d.path(), "short.coloring", "R\n");
    assert_eq!(
        qnbc(d.path(), &["check", "k2.graph", "short.coloring"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn budget_exhaustion_exits_three() {
    let d = TempDir::new().unwrap();
    qnbc(
        d.path(),
        &["gen", "--family", "gp", "--params", "7,2", "--out", "g"],
    );
    let o = qnbc(
        d.path(),
        &["solve", "g.graph", "--variant", "uniform", "--budget", "1"],
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("verdict=unknown"));
}

#[test]
fn solve_witness_revalidates() {
    let d = TempDir::new().unwrap();
    qnbc(
        d.path(),
        &["gen", "--family", "kmn", "--params", "3,4", "--out", "k"],
    );
    let o = qnbc(
        d.path(),
        &[
            "solve",
            "k.graph",
            "--variant",
            "uniform",
            "--out",
            "w.coloring",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let o = qnbc(
        d.path(),
        &["check", "k.graph", "w.coloring", "--format", "kv"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("uniform=none"));

    let o = qnbc(
        d.path(),
        &["solve", "k.graph", "--variant", "any", "--all", "3"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("count=3"));
}

#[test]
fn product_lifts_revalidate() {
    let d = TempDir::new().unwrap();
    write(d.path(), "k2.graph", K2);
    write(d.path(), "rb.coloring", "RB\n");
    write(d.path(), "c4.graph", C4);
    write(d.path(), "rrbb.coloring", "RRBB\n");
    let cases: &[&[&str]] = &[
        &[
            "--kind",
            "direct",
            "--lift",
            "auto",
            "k2.graph",
            "k2.graph",
            "--g-col",
            "rb.coloring",
            "--h-col",
            "rb.coloring",
        ],
        &[
            "--kind",
            "lex",
            "--lift",
            "ii",
            "c4.graph",
            "k2.graph",
            "--g-col",
            "rrbb.coloring",
            "--h-col",
            "rb.coloring",
        ],
        &[
            "--kind",
            "cartesian",
            "--lift",
            "auto",
            "k2.graph",
            "c4.graph",
            "--g-col",
            "rb.coloring",
            "--h-col",
            "rrbb.coloring",
        ],
        &[
            "--kind",
            "join",
            "--lift",
            "a",
            "k2.graph",
            "k2.graph",
            "--g-col",
            "rb.coloring",
            "--h-col",
            "rb.coloring",
        ],
    ];
    for (i, case) in cases.iter().enumerate() {
        let prefix = format!("p{i}");
        let mut args = vec!["product"];
        args.extend_from_slice(case);
        args.extend_from_slice(&["--out", &prefix]);
        let o = qnbc(d.path(), &args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
        assert!(stdout(&o).contains("promise_holds=true"));
        let g = format!("{prefix}.graph");
        let c = format!("{prefix}.coloring");
        assert_eq!(qnbc(d.path(), &["check", &g, &c]).status.code(), Some(0));
    }
    let o = qnbc(
        d.path(),
        &[
            "product", "--kind", "strong", "c4.graph", "k2.graph", "--out", "s",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(d.path().join("s.graph")).unwrap();
    assert!(text.starts_with("p edge 8 "));
}

#[test]
fn embed_and_reduce() {
    let d = TempDir::new().unwrap();
    write(d.path(), "k3.graph", K3);
    let o = qnbc(d.path(), &["embed", "k3.graph", "--out", "h"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("induced=true"));
    assert_eq!(
        qnbc(d.path(), &["check", "h.graph", "h.coloring"])
            .status
            .code(),
        Some(0)
    );
    assert!(d.path().join("h.map").exists());

    write(d.path(), "c4.graph", C4);
    write(d.path(), "nbc.coloring", "RRBB\n");
    let o = qnbc(
        d.path(),
        &["reduce", "c4.graph", "nbc.coloring", "--out", "r"],
    );
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("added_vertex=5"));
    let o = qnbc(
        d.path(),
        &["check", "r.graph", "r.coloring", "--format", "kv"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("kind=QNBC"));
}

#[test]
fn census_is_worker_independent() {
    let d = TempDir::new().unwrap();
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_qnbc"))
            .current_dir(d.path())
            .env("QNBC_WORKERS", workers)
            .args(["census", "--sample", "9,40,0.5", "--seed", "7"])
            .output()
            .unwrap()
    };
    let a = run("1");
    let b = run("4");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let o = qnbc(d.path(), &["census", "--max-n", "4", "--summary"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.starts_with("4\t64\t")));
}

#[test]
fn verify_passes_and_mutation_fails() {
    let d = TempDir::new().unwrap();
    let o = qnbc(d.path(), &["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with("[PASS]"))
            .count(),
        12
    );
    let o = qnbc(d.path(), &["verify", "--mutation", "flip-sign"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("K2 RB"));
}

#[test]
fn dot_export() {
    let d = TempDir::new().unwrap();
    write(d.path(), "k2.graph", K2);
    write(d.path(), "rb.coloring", "RB\n");
    let o = qnbc(
        d.path(),
        &["check", "k2.graph", "rb.coloring", "--dot", "g.dot"],
    );
    assert_eq!(o.status.code(), Some(0));
    let dot = fs::read_to_string(d.path().join("g.dot")).unwrap();
    assert!(dot.contains("graph"));
}
