use std::path::PathBuf;
use std::process::{Command, Output};

use homsg::structure_file;

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

fn homsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homsg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn shipped_fixture_files_match_builtin_fixtures() {
    for name in ["hom_not_sg", "involutive"] {
        let m = structure_file::read(&fixture_path(name)).unwrap();
        assert_eq!(m, homsg_core::fixture(name).unwrap());
        let o = homsg(&["fixture", name]);
        assert_eq!(stdout(&o), std::fs::read_to_string(fixture_path(name)).unwrap());
    }
}

#[test]
fn check_hom_not_sg() {
    let f = fixture_path("hom_not_sg");
    let o = homsg(&["check", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "hom_associative   true\n\
         associative       false  (x,x,x) (x,y,x)\n\
         multiplicative    true\n\
         involutive_alpha  false  x y\n"
    );
}

#[test]
fn check_failing_structure_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    // a·b = b, α swaps: α(a)(bc) = c but (ab)α(c) = α(c)
    std::fs::write(
        &p,
        r#"{"labels":["a","b"],"mul":[["a","b"],["a","b"]],"alpha":["b","a"]}"#,
    )
    .unwrap();
    let o = homsg(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("hom_associative   false  (a,a,a)"));
}

#[test]
fn malformed_structure_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("ragged.json");
    std::fs::write(&p, r#"{"labels":["a","b"],"mul":[["a","b"],["a","c"]],"alpha":["a","b"]}"#)
        .unwrap();
    let o = homsg(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("mul row 1, column 1: unknown label \"c\""));
    let o = homsg(&["check", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_through_universal_extension() {
    let t = fixture_path("involutive");
    let t = t.to_str().unwrap();
    let o = homsg(&["eval", "--target", t, "--map", "x=x", "x * x"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "y\n");
    let o = homsg(&["eval", "--target", t, "--map", "x=x", "[x]"]);
    assert_eq!(stdout(&o), "y\n");
    let o = homsg(&["eval", "--target", t, "--map", "x=x", "x * q"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no assignment for generator q"));
    let o = homsg(&["eval", "--target", t, "--map", "x=w", "x"]);
    assert_eq!(o.status.code(), Some(2));
    let o = homsg(&["eval", "--target", t, "--map", "x=x", "x + x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_rejects_non_involutive_target() {
    let t = fixture_path("hom_not_sg");
    let o = homsg(&["eval", "--target", t.to_str().unwrap(), "--map", "x=x", "x"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("involutive_alpha fails at x"));
}

#[test]
fn products_and_grouping() {
    assert_eq!(stdout(&homsg(&["prod", "x * y * z"])), "[x] y [z]\n");
    assert_eq!(stdout(&homsg(&["prod", "x * (y * z)"])), "x y z\n");
    assert_eq!(stdout(&homsg(&["prod", "A(A(x))"])), "x\n");
    assert_eq!(stdout(&homsg(&["alpha", "x [y] z"])), "[x] y [z]\n");
    assert_eq!(
        stdout(&homsg(&["prod", "--echo", "x * y * z"])),
        "((x * y) * z)\n[x] y [z]\n"
    );
    assert_eq!(
        stdout(&homsg(&["prod", "--generate", "x [y] z"])),
        "x [y] z\nx * (A(y) * z)\n"
    );
    assert_eq!(stdout(&homsg(&["prod", "x + y * z"])), "x + y z\n");
    assert_eq!(stdout(&homsg(&["expand", "x y"])), "x y\n");
    assert_eq!(stdout(&homsg(&["alpha", "-x + 2 . [y]"])), "-[x] + 2 . y\n");
}

#[test]
fn parse_errors_exit_two() {
    let o = homsg(&["prod", ""]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("empty word"));
    let o = homsg(&["prod", "x * * y"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1, column 5"));
    let o = homsg(&["nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enum_order_one_and_range() {
    let o = homsg(&["enum", "--order", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "order 1: 1 candidates\nhom  sg   mult inv  count\nyes  yes  yes  yes  1\n"
    );
    assert_eq!(homsg(&["enum", "--order", "5"]).status.code(), Some(2));
    assert_eq!(homsg(&["enum", "--order", "0"]).status.code(), Some(2));
}

#[test]
fn enum_streams_parseable_structures() {
    let o = homsg(&["enum", "--order", "2", "--filter", "hom", "--filter", "mult", "--filter", "inv"]);
    let text = stdout(&o);
    assert!(text.contains("matched (hom_associative & multiplicative & involutive_alpha): 10\n"));
    let streamed: Vec<_> = text
        .lines()
        .filter(|l| l.starts_with('{'))
        .map(|l| structure_file::from_json(l).unwrap())
        .collect();
    assert_eq!(streamed.len(), 10);
    for m in &streamed {
        assert!(m.classify().flags().is_involutive_hom_semigroup());
    }
    let o = homsg(&["enum", "--order", "2", "--filter", "hom", "--limit", "2"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with('{')).count(), 2);
}

#[test]
fn adjoin_zero_outputs_structure() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("lz.json");
    std::fs::write(&p, r#"{"labels":["a","b"],"mul":[["a","a"],["b","b"]],"alpha":["a","b"]}"#)
        .unwrap();
    let o = homsg(&["adjoin-zero", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s0 = structure_file::from_json(&stdout(&o)).unwrap();
    assert_eq!(s0.labels(), ["a", "b", "0"]);
    assert!(s0.check_hom_associative().is_ok());
    let f = fixture_path("hom_not_sg");
    let o = homsg(&["adjoin-zero", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("(x,x,x)"));
}

#[test]
fn output_is_deterministic() {
    let f = fixture_path("involutive");
    for args in [
        vec!["check", f.to_str().unwrap()],
        vec!["enum", "--order", "2", "--up-to-iso", "--filter", "hom"],
        vec!["expand", "(x + 1/3 . [y]) * (z - y) * A(x)"],
    ] {
        let a = homsg(&args);
        let b = homsg(&args);
        assert_eq!(a.stdout, b.stdout);
        assert!(a.stdout.ends_with(b"\n"));
    }
}

#[test]
fn in_process_run_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = homsg::run(["homsg", "prod", "x y * z"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, homsg(&["prod", "x y * z"]).stdout);
}
