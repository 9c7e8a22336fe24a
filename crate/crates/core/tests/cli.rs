use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algsubshift"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn poly_commands() {
    let out = run(&["poly", "info", "1 + X + Y"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("newton polygon: (0,0) (1,0) (0,1)"));
    assert!(text.contains("candidate directions: none"));

    let out = run(&["poly", "resultant", "1 + X + Y", "X"]);
    assert_eq!(stdout(&out), "Res_X: 1 + Y\n");

    let out = run(&["poly", "bezout", "1 + X + Y", "1 + X + Y + X*Y"]);
    assert!(stdout(&out).contains("identity alpha*f + beta*g = relation: verified"));

    let out = run(&["poly", "member-ledrappier", "1 + Y"]);
    assert_eq!(stdout(&out), "member: false\nwitness: 1 + Y\n");
}

#[test]
fn classify_exit_codes() {
    assert_eq!(run(&["poly", "classify", "1 + X + Y"]).status.code(), Some(0));
    let out = run(&["poly", "classify", "1 + X^2 + Y^2 + X^2*Y^2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("sublattice index 4"));
}

#[test]
fn grids_round_trip_through_files() {
    let dir = std::env::temp_dir().join(format!("algsubshift-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.grid");
    let out = run(&[
        "config", "gen", "fourdot:01/011", "--size", "6x3", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let grid = std::fs::read_to_string(&path).unwrap();
    assert!(grid.starts_with("%grid mod=2 origin=0,0 size=6x3\n"));

    let out = run(&["config", "check", "1 + X + Y + X*Y", path.to_str().unwrap()]);
    assert!(stdout(&out).contains("verified (exact"), "{}", stdout(&out));
    let out = run(&["config", "check", "1 + X", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn counterexample_report() {
    let out = run(&["config", "counterexample", "--size", "4x4"]);
    let text = stdout(&out);
    assert!(text.contains("0100\n0000\n1110\n"));
    assert!(text.contains("7 patterns for |D| = 9"));
    assert!(text.contains("periods up to 32 on 128x128 at (-64,-64): 0"));
}

#[test]
fn decompose_and_periods() {
    let out = run(&["config", "decompose4", "fourdot:0110/01", "--size", "8x8", "--origin", "-2,-2"]);
    let text = stdout(&out);
    assert!(text.contains("c = h + v over F_2: true"));
    assert!(text.contains("c = h + v - 2d over Z: true"));

    let out = run(&["config", "periods", "sublattice-h", "--size", "16x16", "--origin", "-8,-8", "--bound", "2"]);
    assert!(stdout(&out).contains("(2,0) overlap"));
}

#[test]
fn complexity_commands() {
    let out = run(&["complexity", "count", "sublattice", "--shape", "scattered:3:2", "--region", "64x64"]);
    assert!(stdout(&out).contains("7 patterns for |D| = 9: low complexity"));
    let out = run(&["complexity", "annihilator", "ca:1+X:0010000", "--origin", "0,-20", "--size", "16x16"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("certificate: verified"));
}

#[test]
fn pipeline_exit_codes() {
    assert_eq!(run(&["pipeline", "run", "--example", "fourdot"]).status.code(), Some(0));
    assert_eq!(run(&["pipeline", "run", "--example", "counterexample"]).status.code(), Some(4));
    assert_eq!(run(&["pipeline", "run", "--example", "ledrappier-torus"]).status.code(), Some(0));
    let out = run(&["pipeline", "run", "--example", "nope"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn errors_are_reported() {
    let out = run(&["poly", "info", "1 + Z"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert!(!run(&["--mod", "4", "poly", "info", "1"]).status.success());
}
