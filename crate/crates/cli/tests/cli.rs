use std::path::{Path, PathBuf};
use std::process::Command as Proc;
use std::time::Duration;

use tempfile::TempDir;
use vclab_cli::batch::{batch_report, Operation};
use vclab_cli::verify::{run_verify, Suite};
use vclab_cli::{parse_args, run, ClassArg, Cli, CliError, Command};
use vclab_core::generate::{cycle, star};
use vclab_core::io::{parse_graph, write_graph};
use vclab_core::{Graph, Ratio};

fn write(dir: &TempDir, name: &str, g: &Graph) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, write_graph(g, &[])).unwrap();
    p
}

fn output(args: &[&str]) -> Result<String, CliError> {
    let cli: Cli = parse_args(std::iter::once("vclab").chain(args.iter().copied())).unwrap();
    let mut out = Vec::new();
    run(&cli, &mut out)?;
    Ok(String::from_utf8(out).unwrap())
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn parse_examples() {
    let cli = parse_args(["vclab", "solve", "g.col"]).unwrap();
    assert!(matches!(cli.command, Command::Solve { witness: false, .. }));

    let cli = parse_args([
        "vclab", "member", "g.col", "--class", "sed", "--ratio", "3/2",
    ])
    .unwrap();
    match cli.command {
        Command::Member { class, ratio, .. } => {
            assert_eq!(class, ClassArg::Sed);
            assert_eq!(ratio, Ratio::new(3, 2).unwrap());
        }
        other => panic!("{other:?}"),
    }

    assert!(parse_args(["vclab", "member", "g.col", "--ratio", "1/2"]).is_err());
    assert!(parse_args(["vclab", "member", "g.col", "--ratio", "x"]).is_err());
    assert!(parse_args(["vclab", "frobnicate"]).is_err());
    assert!(parse_args(["vclab", "solve", "g.col", "--bogus"]).is_err());
    assert!(parse_args(["vclab", "solve"]).is_err());
    assert!(parse_args([
        "vclab",
        "heuristic",
        "g.col",
        "--alg",
        "ed",
        "--min",
        "--policy",
        "random"
    ])
    .is_err());
    assert!(parse_args(["vclab", "verify", "nope"]).is_err());
}

#[test]
fn solve_and_heuristic_output() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.col", &cycle(4));
    assert_eq!(
        output(&["solve", s(&c4), "--witness"]).unwrap(),
        "mvc 2\ncover 1 3\n"
    );
    assert_eq!(
        output(&["heuristic", s(&c4), "--alg", "ed", "--min"]).unwrap(),
        "min-ed 4\n"
    );
    assert_eq!(
        output(&["heuristic", s(&c4), "--alg", "mdg", "--min"]).unwrap(),
        "min-mdg 2\n"
    );
    let trace = output(&["heuristic", s(&c4), "--alg", "ed"]).unwrap();
    assert_eq!(trace, "edge 1 2\nedge 3 4\ncover 1 2 3 4\nsize 4\n");
    let a = output(&[
        "heuristic",
        s(&c4),
        "--alg",
        "mdg",
        "--policy",
        "random",
        "--seed",
        "7",
    ])
    .unwrap();
    let b = output(&[
        "heuristic",
        s(&c4),
        "--alg",
        "mdg",
        "--policy",
        "random",
        "--seed",
        "7",
    ])
    .unwrap();
    assert_eq!(a, b);
    assert!(a.ends_with("size 2\n"));
}

#[test]
fn member_output() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.col", &cycle(4));
    let out = output(&["member", s(&c4), "--class", "sed", "--ratio", "3/2"]).unwrap();
    assert_eq!(out, "member false\nmin-ed 4\nmvc 2\nratio 3/2\n");
    let out = output(&["member", s(&c4), "--class", "sed", "--ratio", "2"]).unwrap();
    assert!(out.starts_with("member true\n"));
    let st = write(&dir, "star.col", &star(4));
    let out = output(&["member", s(&st), "--class", "smdg", "--ratio", "1/1"]).unwrap();
    assert_eq!(out, "member true\nmin-mdg 1\nmvc 1\nratio 1/1\n");
}

#[test]
fn reduce_writes_roles_and_constants() {
    let dir = TempDir::new().unwrap();
    let k1 = write(&dir, "k1.col", &Graph::empty(1));
    let out = output(&["reduce", s(&k1), "--kind", "ged"]).unwrap();
    let g = parse_graph(&out).unwrap();
    assert_eq!((g.n(), g.m()), (4, 3));
    assert_eq!(out.lines().filter(|l| l.starts_with("c role ")).count(), 4);

    let out = output(&["reduce", s(&k1), s(&k1), "--kind", "hatg"]).unwrap();
    assert!(out.contains("c const j 2\n") && out.contains("c const q 3\n"));
    assert_eq!(parse_graph(&out).unwrap().n(), 6);

    let ged = dir.path().join("ged.col");
    std::fs::write(&ged, output(&["reduce", s(&k1), "--kind", "ged"]).unwrap()).unwrap();
    let out = output(&["reduce", s(&ged), s(&ged), "--kind", "hath", "--ratio", "1"]).unwrap();
    assert_eq!(parse_graph(&out).unwrap().n(), 32);
    assert!(out.contains("c const k 8\n"));

    let out = output(&[
        "reduce",
        s(&k1),
        s(&k1),
        "--kind",
        "hatgr",
        "--ratio",
        "2/1",
    ])
    .unwrap();
    assert_eq!(parse_graph(&out).unwrap().n(), 219);
    assert!(out.contains("c const mu 71\n") && out.contains("c const q 73\n"));

    // wrong arity and missing ratio are usage errors
    let err = output(&["reduce", s(&k1), "--kind", "hath", "--ratio", "1"]).unwrap_err();
    assert_eq!(err.exit_code(), 1);
    let err = output(&["reduce", s(&k1), s(&k1), "--kind", "hatgr"]).unwrap_err();
    assert_eq!(err.exit_code(), 1);
    let err = output(&["reduce", s(&k1), s(&k1), "--kind", "hatgr", "--ratio", "1"]).unwrap_err();
    assert_eq!(err.exit_code(), 1);
}

#[test]
fn reduce_output_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.col", &cycle(4));
    let a = output(&["reduce", s(&c4), "--kind", "gmdg"]).unwrap();
    let b = output(&["reduce", s(&c4), "--kind", "gmdg"]).unwrap();
    assert_eq!(a, b);
}

#[test]
fn gen_lemma4_and_check() {
    let out = output(&["gen", "lemma4", "--n1", "2", "--n2", "73", "--delta", "1"]).unwrap();
    let g = parse_graph(&out).unwrap();
    assert_eq!(g.n(), 219);
    assert_eq!(
        out.lines().filter(|l| l.starts_with("c part V ")).count(),
        146
    );
    assert_eq!(
        out.lines().filter(|l| l.starts_with("c part Vt ")).count(),
        73
    );
    assert!(out.contains("c const mu 71\n"));

    let out = output(&[
        "gen",
        "check",
        "--n1",
        "1",
        "--n2",
        "1",
        "--delta",
        "1",
        "--samples",
        "50",
    ])
    .unwrap();
    assert!(out.contains("feasible true") && out.contains("property4 true"));
    let err = output(&[
        "gen", "check", "--n1", "5", "--n2", "5", "--delta", "1", "--mu", "6",
    ])
    .unwrap_err();
    assert_eq!(err.exit_code(), 3);
    assert!(
        parse_args(["vclab", "gen", "lemma4", "--n1", "1", "--n2", "1", "--delta", "0"]).is_err()
    );
}

#[test]
fn batch_rows() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.col", &cycle(4));
    let b = write(&dir, "b.col", &star(3));
    let csv = |files: &[PathBuf], ops: &[Operation]| {
        let mut out = Vec::new();
        batch_report(files, ops, &mut out).unwrap();
        String::from_utf8(out).unwrap()
    };
    assert_eq!(
        csv(&[], &[Operation::Mvc]),
        "file,n,m,operation,value,millis\n"
    );
    assert_eq!(
        csv(std::slice::from_ref(&a), &[Operation::Mvc])
            .lines()
            .count(),
        2
    );
    let text = csv(&[a.clone(), b.clone()], &[Operation::Mvc, Operation::MinEd]);
    let rows: Vec<Vec<String>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0][1..5], ["4", "4", "mvc", "2"]);
    assert_eq!(rows[1][1..5], ["4", "4", "min-ed", "4"]);
    assert_eq!(rows[2][1..5], ["4", "3", "mvc", "1"]);
    assert_eq!(rows[3][1..5], ["4", "3", "min-ed", "2"]);
    assert!(rows[0][0].ends_with("a.col") && rows[2][0].ends_with("b.col"));
}

#[test]
fn batch_names_the_bad_file() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "good.col", &cycle(3));
    let bad = dir.path().join("bad.col");
    std::fs::write(&bad, "p edge 2 1\ne 1 5\n").unwrap();
    let err = batch_report(&[good, bad], &[Operation::Mvc], &mut Vec::new()).unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("bad.col") && msg.contains("line 2"), "{msg}");
}

#[test]
fn verify_suites_pass() {
    for suite in [Suite::Eq1, Suite::Oracles, Suite::Thm3r1, Suite::Thm3r2] {
        let report = run_verify(suite, Duration::from_secs(600), 0);
        assert!(report.passed(), "{}", report.render());
        assert!(!report.checks.is_empty());
    }
}

#[test]
fn verify_budget_exhaustion_is_incomplete() {
    let report = run_verify(Suite::Eq1, Duration::ZERO, 0);
    assert!(report.incomplete());
    assert!(!report.passed());
    assert!(report.summary().contains("incomplete"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_vclab");
    let dir = TempDir::new().unwrap();
    let big = write(&dir, "big.col", &cycle(70));
    let small = write(&dir, "c5.col", &cycle(5));
    let code = |args: &[&str]| {
        Proc::new(bin)
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(code(&["solve", s(&small)]), 0);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["member", s(&small), "--ratio", "1/2"]), 1);
    assert_eq!(code(&["solve", "/definitely/missing.col"]), 1);
    assert_eq!(code(&["solve", s(&big)]), 2);
    assert_eq!(code(&["verify", "eq1", "--budget", "0"]), 3);
    assert_eq!(code(&["verify", "thm3r1"]), 0);

    let out = Proc::new(bin).args(["solve", s(&small)]).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "mvc 3\n");
}
