//! End-to-end runs of the installed binary: pinned outputs, exit codes,
//! and determinism.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_levy-dragon"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn exact_evaluation_of_a_shifted_dyadic() {
    assert_eq!(stdout(&["eval", "--curve", "shifted", "--x", "3/4", "--exact"]), "1/2\n");
}

#[test]
fn digit_sequence_of_the_worked_binary_literal() {
    assert_eq!(
        stdout(&["digits", "--curve", "shifted", "--x", "0.100110110b", "-n", "9"]),
        "1,-i,-i,i,-1,i,-i,1,-i\n"
    );
}

#[test]
fn digit_sequence_as_json() {
    assert_eq!(
        stdout(&["digits", "--curve", "levy", "--x", "0.101b", "-n", "4", "--json"]),
        "[\"1\",\"0\",\"i\",\"0\"]\n"
    );
}

#[test]
fn full_verification_passes_with_the_documented_seed() {
    let out = run(&["verify", "--suite", "all", "--seed", "7"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("all 30 properties passed (seed 7)"), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn single_suite_selection() {
    let out = run(&["verify", "--suite", "render", "--seed", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("[render]")).count(), 2);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["eval", "--curve", "levy", "--x", "1/3", "--terms", "48"],
        vec!["verify", "--suite", "exact", "--seed", "11"],
        vec!["render", "--curve", "levy", "--depth", "6", "--format", "svg"],
    ] {
        assert_eq!(stdout(&args), stdout(&args), "args: {args:?}");
    }
}

#[test]
fn eval_reports_exact_and_approx_tagged() {
    let text = stdout(&["eval", "--curve", "levy", "--x", "9/16"]);
    assert_eq!(text, "exact: (2-3*i)/4\napprox: 0.5-0.75*i\ntail_bound: 0\n");
    let text = stdout(&["eval", "--curve", "levy", "--x", "1/3", "--terms", "40"]);
    assert!(text.starts_with("approx: "));
    assert!(text.contains("tail_bound: 0.0000023"), "{text}");
    assert!(!text.contains("exact:"));
}

#[test]
fn oracle_modes_agree_with_the_series() {
    let series = stdout(&["eval", "--curve", "shifted", "--x", "5/8", "--exact"]);
    let recursion =
        stdout(&["eval", "--curve", "shifted", "--x", "5/8", "--oracle", "recursion", "--exact"]);
    let decoded =
        stdout(&["eval", "--curve", "shifted", "--x", "5/8", "--oracle", "decode", "--exact"]);
    assert_eq!(series, recursion);
    assert_eq!(series, decoded);
    assert_eq!(series, "(1-i)/4\n");
    // Depth-64 composition converges to 1/4 - i/4 within its own bound.
    let composed = stdout(&["eval", "--curve", "shifted", "--x", "5/8", "--oracle", "ifs"]);
    let line = composed.lines().next().unwrap().strip_prefix("approx: ").unwrap();
    let (re, im) = line.split_once('-').unwrap();
    let re: f64 = re.parse().unwrap();
    let im: f64 = im.strip_suffix("*i").unwrap().parse().unwrap();
    assert!((re - 0.25).abs() < 1e-9 && (im - 0.25).abs() < 1e-9, "{composed}");
}

#[test]
fn exit_codes_separate_usage_from_domain_errors() {
    // Unknown flag value: usage error, exit 2.
    let out = run(&["eval", "--curve", "wavelet", "--x", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
    // Non-terminating input with --exact: domain error, exit 1.
    let out = run(&["eval", "--curve", "levy", "--x", "1/3", "--exact"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    // Depth over the cap: domain error, exit 1.
    let out = run(&["render", "--curve", "levy", "--depth", "27", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("DRAGON_MAX_DEPTH"));
}

#[test]
fn depth_cap_envvar_override() {
    let out = bin()
        .env("DRAGON_MAX_DEPTH", "4")
        .args(["render", "--curve", "levy", "--depth", "5", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin()
        .env("DRAGON_MAX_DEPTH", "5")
        .args(["render", "--curve", "levy", "--depth", "5", "--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), (1 << 5) + 2);
}

#[test]
fn render_csv_matches_the_pinned_rows() {
    let text = stdout(&["render", "--curve", "shifted", "--depth", "1", "--format", "csv"]);
    assert_eq!(text, "x,re,im\n0,-0.5,0.5\n0.5,0,0\n1,0.5,0.5\n");
    let text = stdout(&["render", "--curve", "levy", "--depth", "2", "--format", "csv"]);
    assert!(text.lines().any(|l| l == "0.25,0,-0.5"), "{text}");
}

#[test]
fn render_general_family_with_hyphenated_parameters() {
    // λ = 1, τ = s reproduces the shifted curve.
    let general = stdout(&[
        "render", "--curve", "general", "--lambda", "1", "--tau", "-0.5+0.5i", "--depth", "3",
        "--format", "csv",
    ]);
    let shifted = stdout(&["render", "--curve", "shifted", "--depth", "3", "--format", "csv"]);
    assert_eq!(general, shifted);
    // λ = 0 degenerates the family.
    let out = run(&["render", "--curve", "general", "--lambda", "0", "--depth", "2", "--format",
        "csv"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn render_writes_files() {
    let dir = std::env::temp_dir().join("levy_dragon_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("depth5.svg");
    let out = run(&[
        "render", "--curve", "levy", "--depth", "5", "--format", "svg", "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("<?xml"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn graph_emits_dot_for_both_machines() {
    let g1 = stdout(&["graph", "--which", "g1"]);
    assert!(g1.starts_with("digraph levy_digits {"));
    assert_eq!(g1.matches("->").count(), 16);
    let g2 = stdout(&["graph", "--which", "g2"]);
    assert!(g2.starts_with("digraph shifted_digits {"));
    // Silent states exist only in the first machine (node lines carry
    // xlabel; edge lines do not).
    let silent = |dot: &str| {
        dot.lines().filter(|l| l.contains("xlabel") && l.contains("label=\"0\"")).count()
    };
    assert_eq!(silent(&g1), 4);
    assert_eq!(silent(&g2), 0);
}
