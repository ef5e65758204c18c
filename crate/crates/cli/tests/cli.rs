use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use svn_corona::{build_family, subdivision, Coloring, FamilySpec, Graph};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_svn-corona")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn phi_prints_value_and_clause() {
    let o = run(&["phi", "--left", "path:10", "--right", "path:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("9 ("), "{}", stdout(&o));
}

#[test]
fn phi_on_unsupported_pair_exits_2() {
    let o = run(&["phi", "--left", "complete:5", "--right", "path:3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).trim(), "unsupported");
}

#[test]
fn table_row_for_path_star() {
    let args = ["table", "--left", "path", "--right", "star", "--n", "3..9", "--t", "4..4"];
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row = text.lines().find(|l| l.starts_with("9,4,")).expect("row n=9");
    assert!(row.starts_with("9,4,8,"), "{row}");
    assert_eq!(text.lines().count(), 1 + 7);
    // stable across runs
    assert_eq!(stdout(&run(&args)), text);

    let md =
        stdout(&run(&["table", "--left", "path", "--right", "star", "--n", "9", "--t", "4", "--format", "markdown"]));
    assert!(md.lines().any(|l| l.starts_with("| 9 | 4 | 8 |")), "{md}");
}

#[test]
fn color_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (left, right) in
        [("path:10", "path:3"), ("star:3", "star:6"), ("complete:9", "star:3"), ("cycle:5", "complete:4")]
    {
        let coloring = dir.path().join("c.json");
        let graph = dir.path().join("g.json");
        let dot = dir.path().join("c.dot");
        let o = run(&[
            "color",
            "--left",
            left,
            "--right",
            right,
            "--out",
            path_str(&coloring),
            "--graph-out",
            path_str(&graph),
            "--dot",
            path_str(&dot),
        ]);
        assert_eq!(o.status.code(), Some(0), "{left} {right}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(fs::read_to_string(&dot).unwrap().starts_with("graph corona {"));

        let o = run(&["verify", "--graph", path_str(&graph), "--coloring", path_str(&coloring)]);
        assert_eq!(o.status.code(), Some(0), "{left} {right}");
        let o = run(&["verify", "--left", left, "--right", right, "--coloring", path_str(&coloring)]);
        assert_eq!(o.status.code(), Some(0), "{left} {right}");
    }
}

#[test]
fn verify_rejects_a_broken_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.json");
    let o = run(&["color", "--left", "path:4", "--right", "path:4", "--out", path_str(&file)]);
    assert_eq!(o.status.code(), Some(0));
    let c = Coloring::from_json(&fs::read_to_string(&file).unwrap()).unwrap();
    // every vertex the same color: improper
    let flat = Coloring::new(c.k(), vec![0; c.len()]).unwrap();
    fs::write(&file, flat.to_json()).unwrap();
    let o = run(&["verify", "--left", "path:4", "--right", "path:4", "--coloring", path_str(&file)]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oracle_on_subdivided_k5() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sk5.json");
    fs::write(&file, subdivision(&build_family(FamilySpec::complete(5)).unwrap()).to_json()).unwrap();
    let o = run(&["oracle", "--graph", path_str(&file)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "5");
}

#[test]
fn oracle_over_budget_exits_3() {
    let o = run(&["oracle", "--left", "path:4", "--right", "path:4", "--max-vertices", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn gen_writes_the_corona() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.json");
    let o = run(&["gen", "--left", "path:3", "--right", "star:4", "--out", path_str(&file)]);
    assert_eq!(o.status.code(), Some(0));
    let g = Graph::from_json(&fs::read_to_string(&file).unwrap()).unwrap();
    // 3 base + 2 inserted + 3 copies of the five-vertex star
    assert_eq!(g.order(), 3 + 2 + 15);
}

#[test]
fn bad_arguments_exit_4() {
    assert_eq!(run(&["bogus"]).status.code(), Some(4));
    assert_eq!(run(&["phi", "--left", "wheel:5", "--right", "path:3"]).status.code(), Some(4));
    assert_eq!(run(&["table", "--left", "path", "--right", "star", "--n", "9..3", "--t", "4"]).status.code(), Some(4));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn colors_beyond_a_theorem_range() {
    let o = run(&["color", "--left", "complete:8", "--right", "path:4", "--colors", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let c = Coloring::from_json(&stdout(&o)).unwrap();
    assert_eq!(c.k(), 10);
}

#[test]
fn selftest_on_a_small_grid() {
    let o = run(&["selftest", "--max-n", "5", "--max-t", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().last().unwrap().ends_with(" 0 failed"), "{text}");
    assert!(text.contains("oracle=ok"));
}
