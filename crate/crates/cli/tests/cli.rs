use std::process::{Command, Output};

use degenmat::ledger::{IdentityInfo, VerifyReport};
use degenmat::matrices::{bernoulli_matrix, stirling_matrix_second_type, t_matrix};
use degenmat::numbers::{self, Kind};
use degenmat::ring::{parse_poly, rat};
use degenmat::{Matrix, Poly, Symbol};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degenmat")).args(args).output().expect("run degenmat")
}

fn out(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn err(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", err(&o));
    serde_json::from_str(&out(&o)).expect("valid json")
}

fn sym(s: Symbol) -> Poly {
    Poly::symbol(s)
}

#[test]
fn compute_examples() {
    assert_eq!(out(&run(&["compute", "beta", "--m", "2", "--w", "1", "--lambda", "lambda", "--x", "x"])), "x^2 - x - 1/6*lambda^2 + 1/6\n");
    assert_eq!(out(&run(&["compute", "hyperharmonic", "--m", "3", "--r", "1"])), "11/6\n");
    let tri = out(&run(&["compute", "stirling2", "--m", "0..4", "--k", "0..4"]));
    let row4: Vec<&str> = tri.lines().nth(5).unwrap().split_whitespace().collect();
    assert_eq!(row4, ["4", "0", "1", "7", "6", "1"]);
    assert_eq!(tri.lines().nth(1).unwrap().split_whitespace().collect::<Vec<_>>(), ["0", "1"]);
}

#[test]
fn compute_parameters_and_ranges() {
    assert_eq!(out(&run(&["compute", "beta", "--m", "1", "--lambda", "1/2", "--x", "-1/3"])), "-7/12\n");
    assert_eq!(out(&run(&["compute", "gff", "--m", "3", "--x", "x", "--lambda", "2"])), "x^3 - 6*x^2 + 8*x\n");
    assert_eq!(out(&run(&["compute", "rising", "--m", "3", "--x", "1"])), "6\n");
    assert_eq!(out(&run(&["compute", "lah", "--m", "4", "--k", "2"])), "36\n");
    assert_eq!(out(&run(&["compute", "r-stirling2", "--m", "4", "--k", "2", "--r", "1"])), "7\n");
    assert_eq!(out(&run(&["compute", "r-stirling1", "--m", "4", "--k", "2", "--r", "2"])), "6\n");
    assert_eq!(out(&run(&["compute", "stirling1", "--m", "4", "--k", "2"])), "11\n");
    assert_eq!(out(&run(&["compute", "bernoulli", "--m", "2", "--x", "0"])), "1/6\n");
    assert_eq!(out(&run(&["compute", "bernoulli2", "--m", "2", "--x", "0"])), "-1/12\n");
    let list = out(&run(&["compute", "hyperharmonic", "--m", "1..3", "--r", "0..1"]));
    assert_eq!(list.lines().count(), 4, "grid header plus three rows:\n{list}");
    let csv = out(&run(&["--format", "csv", "compute", "alpha", "--m", "0..2", "--x", "0", "--lambda", "0"]));
    assert_eq!(csv.lines().next(), Some("m,w,value"));
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn compute_errors_exit_2() {
    let bad = run(&["compute", "stirling2-gen", "--m", "2", "--k", "1", "--mu", "0", "--lambda", "0", "--x", "0"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(err(&bad).contains("(μ, λ, x) ≠ (0,0,0)"), "{}", err(&bad));
    for args in [
        &["compute", "beta", "--m", "2", "--x", "z"][..],
        &["compute", "beta", "--m", "2", "--x", "0.5"],
        &["compute", "beta", "--m", "4..2"],
        &["compute", "beta", "--k", "2"],
        &["compute", "beta", "--m", "2", "--mu", "1"],
        &["compute", "stirling2", "--m", "-1", "--k", "0"],
        &["compute", "nonsense", "--m", "1"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!err(&o).is_empty());
    }
}

#[test]
fn matrix_examples() {
    let t = Matrix::from_json(&json(&["matrix", "t", "--n", "3", "--lambda", "1", "--x", "2", "--format", "json"])).unwrap();
    assert_eq!(t.get(3, 1), Poly::from_int(2));
    assert_eq!(t, t_matrix(3, &Poly::from_int(1), &Poly::from_int(2)));
    assert_eq!(out(&run(&["matrix", "pascal", "--n", "3", "--x", "0", "--lambda", "lambda"])), "1\n0,1\n0,0,1\n");
    let csv = out(&run(&["matrix", "stirling2-t1", "--n", "4", "--mu", "1", "--lambda", "0", "--x", "0"]));
    assert_eq!(csv.lines().nth(3), Some("1,7,6,1"));
    let csv = out(&run(&["matrix", "stirling1-t1", "--n", "4", "--mu", "1", "--lambda", "0", "--x", "0"]));
    assert_eq!(csv.lines().nth(3), Some("-6,11,-6,1"));
}

#[test]
fn matrix_errors_exit_2() {
    for args in [
        &["matrix", "pascal", "--n", "0"][..],
        &["matrix", "pascal", "--n", "3", "--w", "2"],
        &["matrix", "g", "--n", "3", "--k", "4"],
        &["matrix", "stirling1-t1", "--n", "3", "--mu", "0", "--lambda", "0", "--x", "0"],
        &["matrix", "unknown", "--n", "3"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn json_values_round_trip() {
    let (lam, x) = (sym(Symbol::Lambda), sym(Symbol::X));
    let doc = json(&["--format", "json", "compute", "beta", "--m", "0..4", "--w", "-1..2"]);
    for row in doc["values"].as_array().unwrap() {
        let (m, w) = (row["m"].as_u64().unwrap() as usize, row["w"].as_i64().unwrap());
        assert_eq!(parse_poly(row["value"].as_str().unwrap()).unwrap(), numbers::beta(m, w, &lam, &x));
    }
    let doc = json(&["--format", "json", "compute", "stirling1-gen", "--m", "0..4", "--k", "0..4"]);
    let p = numbers::StirlingParams::new(sym(Symbol::Mu), lam.clone(), x.clone()).unwrap();
    for row in doc["values"].as_array().unwrap() {
        let (m, k) = (row["m"].as_u64().unwrap() as usize, row["k"].as_u64().unwrap() as usize);
        assert_eq!(parse_poly(row["value"].as_str().unwrap()).unwrap(), numbers::stirling1_gen(m, k, &p).unwrap());
    }
    let h = json(&["--format", "json", "compute", "hyperharmonic", "--m", "4", "--r", "2"]);
    assert_eq!(parse_poly(h["values"][0]["value"].as_str().unwrap()).unwrap(), Poly::constant(numbers::hyperharmonic(4, 2)));

    let b = Matrix::from_json(&json(&["--format", "json", "matrix", "bernoulli", "--n", "5", "--w", "2", "--x", "1/3"])).unwrap();
    assert_eq!(b, bernoulli_matrix(5, 2, &lam, &Poly::constant(rat(1, 3))));
    let g = Matrix::from_json(&json(&["--format", "json", "matrix", "stirling2-t2", "--n", "5", "--h", "2"])).unwrap();
    assert_eq!(g, stirling_matrix_second_type(5, 2, &lam, &x, Kind::Second).unwrap());
    let csv = Matrix::from_csv(&out(&run(&["matrix", "stirling2-t2", "--n", "5", "--h", "2", "--format", "csv"]))).unwrap();
    assert_eq!(csv, g);
}

#[test]
fn verify_examples() {
    let ok = run(&["verify", "--identity", "thm-2.1"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(out(&ok).lines().next(), Some("thm-2.1: 24/24 passed"));
    assert!(out(&ok).lines().last().unwrap().starts_with("summary: 1 identities, 24/24"));

    let unknown = run(&["verify", "--identity", "nonsense"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(err(&unknown).contains("degenmat list"), "{}", err(&unknown));

    let full = run(&["verify", "--identity", "thm-2.1", "--profile", "full"]);
    assert_eq!(out(&full).lines().next(), Some("thm-2.1: 32/32 passed"));
}

#[test]
fn verify_perturbed_fails_with_exit_1() {
    let o = run(&["verify", "--identity", "eq-13", "--perturb-rhs"]);
    assert_eq!(o.status.code(), Some(1));
    let text = out(&o);
    assert!(text.lines().next().unwrap().starts_with("eq-13: 0/"));
    assert!(text.contains("  at {"), "failing bindings are shown:\n{text}");
}

#[test]
fn verify_ranges_and_side_conditions() {
    let o = run(&["verify", "--identity", "h-sum-beta", "--range", "h=3..3", "--range", "m=0..2"]);
    assert_eq!(o.status.code(), Some(0), "{}", err(&o));
    let o = run(&["verify", "--identity", "h-sum-beta", "--range", "h=3..3", "--range", "m=0..3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(err(&o).contains("side condition"), "{}", err(&o));
    assert_eq!(run(&["verify", "--identity", "eq-13", "--range", "zz=0..1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--identity", "all", "--range", "n=1..2"]).status.code(), Some(2));
}

#[test]
fn verify_json_reports_deserialize() {
    let doc = json(&["--format", "json", "verify", "--identity", "eq-13"]);
    let reports: Vec<VerifyReport> = serde_json::from_value(doc["reports"].clone()).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(reports[0].is_clean() && reports[0].attempted > 0);
    assert_eq!(doc["summary"]["failing"], 0);

    let o = run(&["--format", "json", "verify", "--identity", "pascal-inverse", "--perturb-rhs"]);
    assert_eq!(o.status.code(), Some(1));
    let doc: Value = serde_json::from_str(&out(&o)).unwrap();
    let reports: Vec<VerifyReport> = serde_json::from_value(doc["reports"].clone()).unwrap();
    let f = &reports[0].failures[0];
    let lhs = Matrix::from_json(&f.lhs).unwrap();
    let rhs = Matrix::from_json(&f.rhs).unwrap();
    assert_ne!(lhs, rhs);
}

#[test]
fn thread_cap_does_not_change_output() {
    let capped =
        Command::new(env!("CARGO_BIN_EXE_degenmat")).args(["verify", "--identity", "eq-0"]).env("DEGENMAT_THREADS", "1").output().unwrap();
    let free = run(&["verify", "--identity", "eq-0"]);
    assert_eq!(out(&capped).lines().next(), out(&free).lines().next());
}

#[test]
fn list_formats() {
    let text = out(&run(&["list"]));
    assert!(text.lines().any(|l| l == "eq-13  §5.3 'is Eq. (7) of [26]'"));
    assert!(text.lines().count() >= 40);
    let infos: Vec<IdentityInfo> = serde_json::from_value(json(&["list", "--format", "json"])).unwrap();
    assert_eq!(infos.len(), text.lines().count());
    assert!(infos.iter().all(|i| !i.anchor.is_empty() && !i.domain.is_empty()));
    let csv = out(&run(&["--format", "csv", "list"]));
    assert_eq!(csv.lines().next(), Some("id,anchor,domain"));
}
