use std::process::{Command, Output};

fn tsc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tsc"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn decide_derivable() {
    let out = tsc(&["decide", "<1^1>T |- <0^w>T"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "derivable\n");
}

#[test]
fn decide_refuted_with_countermodel() {
    let out = tsc(&["decide", "<0^w>T |- <1^1>T"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "not derivable; countermodel=[w]\n");
    let out = tsc(&["--machine", "decide", "<0^w>T |- <1^1>T"]);
    assert_eq!(stdout(&out), "derivable=false; countermodel=[w]\n");
}

#[test]
fn normalize_prints_normal_form_and_point() {
    let out = tsc(&["normalize", "<0^1><1^1>T"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "<0^(w*2)>T & <1^1>T ; point=[w*2, 1]\n");
    let out = tsc(&["normalize", "--machine", "<0^1><1^1>T"]);
    assert_eq!(stdout(&out), "mnf=<0^(w*2)>T & <1^1>T; point=[w*2, 1]\n");
}

#[test]
fn check_prints_forcing() {
    assert_eq!(stdout(&tsc(&["check", "[w]", "<0^w>T"])), "true\n");
    assert_eq!(stdout(&tsc(&["check", "[w]", "<0^(w+1)>T"])), "false\n");
    assert_eq!(
        stdout(&tsc(&["--machine", "check", "[w*2, 1]", "<0^1><1^1>T"])),
        "forces=true\n"
    );
}

#[test]
fn parse_errors_exit_two_with_position() {
    let out = tsc(&["decide", "<0^w T |- T"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 5"), "{err}");
    assert!(out.stdout.is_empty());
    assert_eq!(tsc(&["check", "[1, 1]", "T"]).status.code(), Some(2));
    assert_eq!(tsc(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn machine_output_is_stable() {
    let args = ["--machine", "decide", "<0^1><2^1>T & <1^w>T |- <0^(w^w)>T"];
    let first = stdout(&tsc(&args));
    for _ in 0..3 {
        assert_eq!(stdout(&tsc(&args)), first);
    }
}

#[test]
fn frame_dot_edges_follow_the_relations() {
    let out = tsc(&[
        "frame-dot",
        "--max",
        "w+1",
        "--support",
        "2",
        "--bases",
        "0,1",
        "--coeff",
        "1",
        "--full",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("digraph frame {") && text.trim_end().ends_with('}'));
    // worlds: [0], [1], [w], [w, 1], [w + 1]
    assert_eq!(text.matches("shape").count(), 1);
    assert!(text.contains("\"[w, 1]\" -> \"[0]\" [style=solid, label=\"R_1\"]"));
    assert!(text.contains("\"[w + 1]\" -> \"[w]\" [style=dashed, label=\"R_0\"]"));
    assert!(!text.contains("\"[w + 1]\" -> \"[w, 1]\""));
    assert_eq!(text.matches("R_0").count(), 8);
    assert_eq!(text.matches("R_1").count(), 2);
    let reduced = stdout(&tsc(&[
        "frame-dot",
        "--max",
        "w+1",
        "--support",
        "2",
        "--coeff",
        "1",
    ]));
    assert!(reduced.matches("->").count() < text.matches("->").count());
}
