use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn nmg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nmg"))
        .args(args)
        .output()
        .expect("run nmg")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_theorem_p3() {
    let out = nmg(&["verify-theorem", "--n", "0", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "omega_r = 20 = 2*3^2+2 PASS"), "{text}");
    assert!(text.contains("girth: 4"));
}

#[test]
fn verify_theorem_every_small_parameter_pair() {
    for (n, m, omega) in [("1", "0", 10), ("0", "2", 10), ("1", "1", 20), ("2", "0", 34), ("0", "4", 34)] {
        let out = nmg(&["verify-theorem", "--n", n, "--m", m]);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).contains(&format!("omega_r = {omega} = ")));
    }
}

#[test]
fn verify_theorem_json() {
    let out = nmg(&["--json", "verify-theorem", "--n", "1", "--m", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["omega_r"], 20);
    assert_eq!(v["passed"], true);
}

#[test]
fn invalid_params_exit_2() {
    let out = nmg(&["verify-theorem", "--n", "0", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_flag_exit_2() {
    let out = nmg(&["check", "--frobnicate", "x.nmg"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
fn check_on_generated_tight() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("tight.nmg");
    let gen = nmg(&["gen", "tight", "--n", "1", "--m", "0", "-o", path_str(&file)]);
    assert_eq!(gen.status.code(), Some(0));
    let out = nmg(&["check", path_str(&file)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for line in ["girth: 4", "triangle_free: true", "planar: true", "embedding: present"] {
        assert!(text.lines().any(|l| l == line), "missing {line:?} in\n{text}");
    }
    assert!(text.contains("= 2 holds"));
}

#[test]
fn gen_to_stdout_is_a_document() {
    let out = nmg(&["gen", "tight", "--n", "0", "--m", "2"]);
    let text = stdout(&out);
    assert!(text.contains("nm 0 2\n"));
    assert!(text.contains("vertices 14\n"));
    assert!(text.contains("# good:"));
}

#[test]
fn relative_clique_search_and_verify() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("t.nmg");
    nmg(&["gen", "tight", "--n", "1", "--m", "0", "-o", path_str(&file)]);
    let out = nmg(&["relative-clique", path_str(&file), "--certificate"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("relative_clique_number: 10\n"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("pair ")).count(), 45);

    let yes = nmg(&["relative-clique", path_str(&file), "--verify", "0,1,2,4"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).contains("relative_clique: true"));
    let h = "10";
    let g_far = "4";
    let no = nmg(&["relative-clique", path_str(&file), "--verify", &format!("{h},{g_far}")]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).contains("unseen_pair: 4 10"));
    let bad = nmg(&["relative-clique", path_str(&file), "--verify", "0,99"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn absolute_clique_and_chromatic() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "p.nmg", "nm 1 0\nvertices 3\narc 0 1 1\narc 1 2 1\n");
    let out = nmg(&["absolute-clique", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("absolute_clique_number: 3\n"));
    let out = nmg(&["chromatic", &path]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("chromatic_number: 3\nlower_bound_used: 3\n"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("map ")).count(), 3);
    let out = nmg(&["chromatic", &path, "--max-order", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn chromatic_probe_on_p3() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("t3.nmg");
    nmg(&["gen", "tight", "--n", "0", "--m", "3", "-o", path_str(&file)]);
    let out = nmg(&["--json", "chromatic", path_str(&file), "--max-order", "20"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["lower_bound_used"], 20);
}

#[test]
fn hom_exit_codes() {
    let dir = TempDir::new().unwrap();
    let arc = write(&dir, "a.nmg", "nm 1 1\nvertices 2\narc 0 1 1\n");
    let edges = write(&dir, "b.nmg", "nm 1 1\nvertices 3\nedge 0 1 1\nedge 1 2 1\nedge 0 2 1\n");
    let out = nmg(&["hom", &arc, &edges]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "homomorphism: false\n");
    let out = nmg(&["hom", &edges, &edges]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("map 0 "));
    let other = write(&dir, "c.nmg", "nm 0 2\nvertices 1\n");
    assert_eq!(nmg(&["hom", &arc, &other]).status.code(), Some(2));
}

#[test]
fn seeing_with_restriction() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "s.nmg", "nm 1 0\nvertices 4\narc 0 1 1\narc 1 2 1\narc 3 1 1\n");
    let out = nmg(&["seeing", &path]);
    let text = stdout(&out);
    assert!(text.starts_with("seeing 4 4 5\n"), "{text}");
    let out = nmg(&["seeing", &path, "--restrict", "0,2,3"]);
    assert_eq!(stdout(&out), "seeing 4 3 2\nsee 0 2 # via 1\nsee 2 3 # via 1\n");
}

#[test]
fn malformed_file_names_the_line() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "bad.nmg", "nm 1 0\nvertices 2\narc 0 5 1\n");
    let out = nmg(&["check", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn oracle_sweep_passes_and_is_deterministic() {
    let one = nmg(&["oracle", "sweep", "--vertices", "3", "--n", "0", "--m", "2", "--threads", "1"]);
    let four = nmg(&["oracle", "sweep", "--vertices", "3", "--n", "0", "--m", "2", "--threads", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let text = stdout(&one);
    assert!(text.contains("graphs_checked: 31\n"));
    assert!(text.ends_with("result: PASS\n"));
}

#[test]
fn oracle_cap_is_an_input_error() {
    let out = nmg(&["oracle", "sweep", "--vertices", "7", "--n", "1", "--m", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_gadgets_feed_back_into_check() {
    let dir = TempDir::new().unwrap();
    let fk = dir.path().join("fk.nmg");
    let out = nmg(&["gen", "fk", "--n", "0", "--m", "3", "--pairs", "1:2,2:3,3:1", "-o", path_str(&fk)]);
    assert_eq!(out.status.code(), Some(0));
    let out = nmg(&["check", path_str(&fk)]);
    assert!(stdout(&out).contains("girth: 4"));
    let bad = nmg(&["gen", "fk", "--n", "0", "--m", "3", "--pairs", "1-2"]);
    assert_eq!(bad.status.code(), Some(2));
    let ex = nmg(&["gen", "exceptional", "--n", "1", "--m", "0", "--alpha", "2", "--beta", "1"]);
    assert!(stdout(&ex).contains("vertices 8\n"));
    let bad = nmg(&["gen", "exceptional", "--n", "1", "--m", "0", "--alpha", "3"]);
    assert_eq!(bad.status.code(), Some(2));
}
