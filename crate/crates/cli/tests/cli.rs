use std::path::PathBuf;
use std::process::{Command, Output};

use proofnet::cut::{normalize, parse_trace, replay, Strategy};
use proofnet::graph::{iso, parse_ps};
use proofnet::sequent::parse_proof;
use proofnet::{desequentialize, Label};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_proofnet")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_exit_codes_mirror_the_verdict() {
    let o = run(&["check", &fixture("bot_tensor.ps"), "--criterion", "accw"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["holds"], true);

    let o = run(&["check", &fixture("regnier.ps"), "--criterion", "wten"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["holds"], false);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ps");
    std::fs::write(&bad, "node 0 tensor\n").unwrap();
    let o = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(run(&["check", "/nonexistent.ps"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn max_parr_caps_enumeration() {
    let o = run(&["--max-parr", "1", "check", &fixture("btenll_jumps.ps")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn equiv_on_permuted_pair() {
    let o = run(&["equiv", &fixture("bot_below.proof"), &fixture("bot_above.proof")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "true");
    let o = run(&["equiv", &fixture("bot_below.proof"), &fixture("bot_tensor.proof")]);
    assert_eq!(stdout(&o).trim(), "false");
}

#[test]
fn deseq_output_reparses() {
    for format in ["json", "dsl"] {
        let o = run(&["--format", format, "deseq", &fixture("bot_tensor.proof")]);
        assert_eq!(o.status.code(), Some(0));
        let ps = parse_ps(&stdout(&o)).unwrap();
        assert!(iso(&ps, &parse_ps(&std::fs::read_to_string(fixture("bot_tensor.ps")).unwrap()).unwrap()));
    }
}

#[test]
fn sequentialize_round_trips() {
    for (file, mode) in [("wten_cut.ps", "wten"), ("btenll_jumps.ps", "btenll"), ("icomll_jumps.ps", "icomll")] {
        let o = run(&["sequentialize", &fixture(file), "--mode", mode]);
        assert_eq!(o.status.code(), Some(0), "{file}");
        let text = stdout(&o);
        let pi = parse_proof(&text).unwrap().proof;
        let ps = parse_ps(&std::fs::read_to_string(fixture(file)).unwrap()).unwrap();
        assert!(iso(&desequentialize(&pi).ps, &ps), "{file}");
        assert_eq!(text.contains("; jumps"), mode != "wten");
    }
    let o = run(&["sequentialize", &fixture("regnier.ps")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn jumps_output_carries_the_jumps() {
    let o = run(&["--format", "dsl", "jumps", &fixture("icomll_jumps.ps"), "--mode", "icomll"]);
    let ps = parse_ps(&stdout(&o)).unwrap();
    assert_eq!(ps.jumps.len(), 2);
    let o = run(&["jumps", &fixture("btenll_jumps.ps"), "--m", "4"]);
    assert_eq!(o.status.code(), Some(2), "an erasing target is rejected");
}

#[test]
fn normalize_writes_trace_and_normal_form() {
    let dir = tempfile::tempdir().unwrap();
    let (trace, out) = (dir.path().join("t.jsonl"), dir.path().join("nf.json"));
    let input = fixture("wten_cut.ps");
    let o = run(&[
        "normalize",
        &input,
        "--strategy",
        "random",
        "--seed",
        "3",
        "--trace",
        trace.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let ps = parse_ps(&std::fs::read_to_string(&input).unwrap()).unwrap();
    let steps = parse_trace(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    let nf = parse_ps(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(!steps.is_empty());
    assert!(iso(&replay(&ps, &steps).unwrap(), &nf));
    assert!(iso(&nf, &normalize(&ps, Strategy::Deterministic).normal_form));
    assert_eq!(nf.count(Label::Cut), 0);
}

#[test]
fn gen_is_reproducible_and_reparses() {
    let a = run(&["gen", "--fragment", "btenll", "--seed", "7", "--max-rules", "12"]);
    let b = run(&["gen", "--fragment", "btenll", "--seed", "7", "--max-rules", "12"]);
    assert_eq!(a.stdout, b.stdout);
    parse_proof(&stdout(&a)).unwrap();

    let dir = tempfile::tempdir().unwrap();
    let o = run(&["gen", "--kind", "ps", "--count", "3", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for s in 0..3 {
        let text = std::fs::read_to_string(dir.path().join(format!("gen_{s}.ps"))).unwrap();
        assert!(parse_ps(&text).unwrap().validate(None).ok);
    }
}

#[test]
fn dot_is_deterministic_and_draws_switchings() {
    let a = run(&["dot", &fixture("regnier.ps")]);
    assert_eq!(a.stdout, run(&["dot", &fixture("regnier.ps")]).stdout);
    assert!(stdout(&a).starts_with("digraph"));
    let s = run(&["dot", &fixture("regnier.ps"), "--switching", r#"{"2": 0}"#]);
    assert!(stdout(&s).contains("-> f2"));
    assert_eq!(run(&["dot", &fixture("regnier.ps"), "--switching", "[1"]).status.code(), Some(2));
}
