use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rainbow_core::formats::{parse_colouring, parse_graph};
use rainbow_core::rainbow::verify_rainbow;

fn rainbow(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn decide_exit_codes_on_g220() {
    let d = tempfile::tempdir().unwrap();
    let o = rainbow(
        d.path(),
        &["gen", "g220", "--clique", "3", "--out", "g.txt"],
    );
    assert_eq!(code(&o), 0);
    assert_eq!(
        code(&rainbow(d.path(), &["decide", "--k", "4", "g.txt"])),
        1
    );
    assert_eq!(
        code(&rainbow(d.path(), &["decide", "--k", "5", "g.txt"])),
        0
    );
    let o = rainbow(d.path(), &["rc", "g.txt"]);
    assert_eq!(stdout(&o).trim(), "5");
}

#[test]
fn colour_writes_a_verified_colouring() {
    let d = tempfile::tempdir().unwrap();
    rainbow(
        d.path(),
        &[
            "gen", "g310", "--clique", "5", "--extra", "2", "--out", "g.txt",
        ],
    );
    let o = rainbow(d.path(), &["colour", "--k", "4", "g.txt", "--out", "c.txt"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&rainbow(d.path(), &["verify", "g.txt", "c.txt"])), 0);

    let g = parse_graph(&fs::read_to_string(d.path().join("g.txt")).unwrap()).unwrap();
    let c = parse_colouring(
        &g,
        &fs::read_to_string(d.path().join("c.txt")).unwrap(),
        None,
    )
    .unwrap();
    assert!(c.k() <= 4);
    assert!(verify_rainbow(&g, &c).unwrap().connected);
}

#[test]
fn verify_rejects_a_bad_colouring() {
    let d = tempfile::tempdir().unwrap();
    write(d.path(), "p.txt", "3 2\n0 1\n1 2\n");
    write(d.path(), "c.txt", "0 1 0\n1 2 0\n");
    assert_eq!(code(&rainbow(d.path(), &["verify", "p.txt", "c.txt"])), 1);
}

#[test]
fn capacity_is_an_error_not_a_no() {
    let d = tempfile::tempdir().unwrap();
    // C20 is not split and its lower bound 10 settles nothing, so the
    // exhaustive search runs into the edge limit.
    let edges: String = (0..20).map(|i| format!("{i} {}\n", (i + 1) % 20)).collect();
    write(d.path(), "c20.txt", &format!("20 20\n{edges}"));
    let o = rainbow(d.path(), &["decide", "--k", "10", "c20.txt"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("capacity"));
}

#[test]
fn gen_is_deterministic_per_seed() {
    let d = tempfile::tempdir().unwrap();
    for kind in ["random-split", "random-threshold", "random3cnf", "g2200"] {
        let a = rainbow(d.path(), &["gen", kind, "--seed", "7"]);
        let b = rainbow(d.path(), &["gen", kind, "--seed", "7"]);
        assert_eq!(code(&a), 0, "{kind}");
        assert_eq!(a.stdout, b.stdout, "{kind}");
    }
    let a = rainbow(d.path(), &["gen", "random-split", "--seed", "1"]);
    let b = rainbow(d.path(), &["gen", "random-split", "--seed", "2"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn parse_errors_name_file_and_line() {
    let d = tempfile::tempdir().unwrap();
    write(d.path(), "trunc.txt", "3 2\n0 1\n");
    let o = rainbow(d.path(), &["rc", "trunc.txt"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("trunc.txt: line 2"), "{err}");

    write(d.path(), "bad.cnf", "p cnf 1 1\n1 2 3 0\n");
    let o = rainbow(d.path(), &["reduce", "sat2bcc", "bad.cnf"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    assert_eq!(code(&rainbow(d.path(), &["rc", "missing.txt"])), 2);
}

#[test]
fn sat2bcc_single_clause_sizes() {
    let d = tempfile::tempdir().unwrap();
    write(d.path(), "one.cnf", "p cnf 3 1\n1 2 3 0\n");
    let o = rainbow(
        d.path(),
        &["reduce", "sat2bcc", "one.cnf", "--out", "b.txt"],
    );
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(d.path().join("b.txt")).unwrap();
    let header = text.lines().find(|l| !l.starts_with('#')).unwrap();
    // 7 vertices per variable plus 2 per clause
    assert!(header.starts_with("23 "), "{header}");
}

#[test]
fn certificate_chain_through_the_cli() {
    let d = tempfile::tempdir().unwrap();
    write(d.path(), "phi.cnf", "p cnf 3 2\n1 -2 3 0\n-1 2 3 0\n");
    write(d.path(), "eval.txt", "v 1 2 -3 0\n");
    let ok = |o: Output| assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    ok(rainbow(
        d.path(),
        &["reduce", "sat2bcc", "phi.cnf", "--out", "b.txt"],
    ));
    ok(rainbow(
        d.path(),
        &["reduce", "bcc2rc2", "b.txt", "--out", "g.txt"],
    ));
    ok(rainbow(
        d.path(),
        &[
            "lift", "eval2X", "--cnf", "phi.cnf", "--eval", "eval.txt", "--out", "x.txt",
        ],
    ));
    ok(rainbow(
        d.path(),
        &[
            "lift", "X2col", "--bcc", "b.txt", "--x", "x.txt", "--out", "c.txt",
        ],
    ));
    let o = rainbow(
        d.path(),
        &[
            "verify",
            "g.txt",
            "c.txt",
            "--k",
            "2",
            "--edge-limit",
            "100000",
        ],
    );
    ok(o);
    ok(rainbow(
        d.path(),
        &[
            "lift",
            "col2X",
            "--bcc",
            "b.txt",
            "--colouring",
            "c.txt",
            "--out",
            "x2.txt",
        ],
    ));
    let o = rainbow(
        d.path(),
        &[
            "lift", "X2eval", "--cnf", "phi.cnf", "--bcc", "b.txt", "--x", "x2.txt",
        ],
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("v "));
}

#[test]
fn dot_output_is_graphviz() {
    let d = tempfile::tempdir().unwrap();
    write(d.path(), "k3.txt", "3 3\n0 1\n0 2\n1 2\n");
    let o = rainbow(d.path(), &["dot", "k3.txt"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.starts_with("graph G {"));
    assert_eq!(s.matches(" -- ").count(), 3);
}
