//! `degenmat`: compute degenerate Bernoulli and generalized Stirling
//! numbers, dump the associated matrices, and check the identity catalog.

mod compute;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degenmat::ledger::{self, Grid, LedgerError, Profile, VerifyReport};
use degenmat::matrices::{self, MatrixError};
use degenmat::numbers::{Kind, StirlingParams};
use degenmat::ring::parse_rational;
use degenmat::{Matrix, Poly, Symbol};
use serde_json::json;

use compute::Sequence;
use table::Table;

/// Error carrying the process exit status: 1 for identity failures, 2 for usage errors.
#[derive(Debug)]
pub struct Exit {
    code: u8,
    msg: String,
}

impl Exit {
    pub fn usage(msg: impl Into<String>) -> Self {
        Exit { code: 2, msg: msg.into() }
    }
}

impl From<MatrixError> for Exit {
    fn from(e: MatrixError) -> Self {
        Exit::usage(e.to_string())
    }
}

impl From<std::io::Error> for Exit {
    fn from(e: std::io::Error) -> Self {
        Exit::usage(e.to_string())
    }
}

impl From<csv::Error> for Exit {
    fn from(e: csv::Error) -> Self {
        Exit::usage(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "degenmat",
    version,
    about = "Degenerate Bernoulli and generalized Stirling numbers, their matrices, and an identity checker"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, value_enum, default_value_t = ProfileArg::Quick)]
    profile: ProfileArg,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

impl From<ProfileArg> for Profile {
    fn from(p: ProfileArg) -> Self {
        match p {
            ProfileArg::Quick => Profile::Quick,
            ProfileArg::Full => Profile::Full,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a sequence at an index or over index ranges ("a..b", inclusive)
    Compute(ComputeArgs),
    /// Dump an n x n lower-triangular matrix
    Matrix(MatrixArgs),
    /// Check catalog identities exactly over their parameter grids
    Verify(VerifyArgs),
    /// List the identity catalog
    List,
}

/// Parameter flags shared by `compute` and `matrix`: a rational "p/q" or one of lambda, mu, x, y.
#[derive(Args)]
struct ParamArgs {
    #[arg(long, value_parser = parse_param, allow_hyphen_values = true)]
    lambda: Option<Poly>,
    #[arg(long, value_parser = parse_param, allow_hyphen_values = true)]
    mu: Option<Poly>,
    #[arg(long, value_parser = parse_param, allow_hyphen_values = true)]
    x: Option<Poly>,
    #[arg(long, value_parser = parse_param, allow_hyphen_values = true)]
    y: Option<Poly>,
}

impl ParamArgs {
    fn given(&self) -> Vec<(Symbol, &Poly)> {
        [(Symbol::Lambda, &self.lambda), (Symbol::Mu, &self.mu), (Symbol::X, &self.x), (Symbol::Y, &self.y)]
            .into_iter()
            .filter_map(|(s, v)| v.as_ref().map(|v| (s, v)))
            .collect()
    }

    /// The value of `s`, defaulting to the formal symbol itself.
    fn get(&self, s: Symbol) -> Poly {
        self.given().into_iter().find(|(t, _)| *t == s).map_or_else(|| Poly::symbol(s), |(_, v)| v.clone())
    }

    fn only(&self, allowed: &[Symbol], what: &str) -> Result<(), Exit> {
        match self.given().into_iter().find(|(s, _)| !allowed.contains(s)) {
            Some((s, _)) => Err(Exit::usage(format!("--{s} is not a parameter of {what}"))),
            None => Ok(()),
        }
    }
}

fn parse_param(s: &str) -> Result<Poly, String> {
    if let Some(sym) = Symbol::from_name(s) {
        return Ok(Poly::symbol(sym));
    }
    parse_rational(s).map(Poly::constant).map_err(|_| format!("expected a rational such as 1/2 or one of lambda, mu, x, y; got {s:?}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct IntRange(i64, i64);

fn parse_range(s: &str) -> Result<IntRange, String> {
    let int = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("expected an integer or a range a..b, got {s:?}"));
    let r = match s.split_once("..") {
        Some((a, b)) => IntRange(int(a)?, int(b)?),
        None => IntRange(int(s)?, int(s)?),
    };
    if r.0 > r.1 {
        return Err(format!("empty range {s:?}"));
    }
    Ok(r)
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(value_enum)]
    sequence: Sequence,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    m: Option<IntRange>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    k: Option<IntRange>,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    r: Option<IntRange>,
    /// Order of the Bernoulli-type sequences (default 1)
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    w: Option<IntRange>,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Generalized Pascal matrix P_n[lambda, x]
    Pascal,
    /// R_n[lambda, x], the inverse of T_n
    R,
    /// T_n[lambda, x]
    T,
    /// Factor G_k of P_n = G_n ... G_1 (k defaults to n)
    G,
    /// Factor Q_k = I_{n-k} + P_k (k defaults to n)
    Q,
    /// Degenerate Bernoulli matrix B_n^(w)[lambda, x]
    Bernoulli,
    /// Degenerate Bernoulli matrix of the second kind L_n^(w)[lambda, x]
    L,
    /// First-type generalized Stirling matrix with entries S_1(i, j | mu, lambda, x)
    #[value(name = "stirling1-t1")]
    Stirling1T1,
    /// First-type generalized Stirling matrix with entries S_2(i, j | mu, lambda, x)
    #[value(name = "stirling2-t1")]
    Stirling2T1,
    /// Second-type matrix g_{n,h}[1, lambda, x]
    #[value(name = "stirling1-t2")]
    Stirling1T2,
    /// Second-type matrix G_{n,h}[1, lambda, x]
    #[value(name = "stirling2-t2")]
    Stirling2T2,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Factor index for g and q
    #[arg(long)]
    k: Option<usize>,
    /// Order for bernoulli and l (default 1)
    #[arg(long, allow_hyphen_values = true)]
    w: Option<i64>,
    /// Shift for the second-type Stirling matrices (default 0)
    #[arg(long, allow_hyphen_values = true)]
    h: Option<i64>,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Catalog id, or "all"
    #[arg(long)]
    identity: String,
    /// Override an index range of a single identity, e.g. --range n=1..6
    #[arg(long, allow_hyphen_values = true)]
    range: Vec<String>,
    /// Add 1 to every right-hand side; every case should then fail
    #[arg(long)]
    perturb_rhs: bool,
}

/// Writes to stdout, ignoring a closed pipe (`degenmat list | head`).
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Compute(a) => cmd_compute(a, cli.format),
        Cmd::Matrix(a) => cmd_matrix(a, cli.format),
        Cmd::Verify(a) => cmd_verify(a, cli.format, cli.profile.into()),
        Cmd::List => cmd_list(cli.format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !e.msg.is_empty() {
                eprintln!("error: {}", e.msg);
            }
            ExitCode::from(e.code)
        }
    }
}

fn cmd_compute(a: &ComputeArgs, format: Format) -> Result<(), Exit> {
    let seq = a.sequence;
    let name = seq.to_possible_value().expect("named").get_name().to_string();
    let given = [("m", a.m), ("k", a.k), ("r", a.r), ("w", a.w)];
    let spec = compute::indices(seq);
    if let Some((flag, _)) = given.iter().find(|(f, v)| v.is_some() && !spec.iter().any(|(n, _)| n == f)) {
        return Err(Exit::usage(format!("--{flag} is not an index of {name}")));
    }
    a.params.only(compute::params(seq), &name)?;
    let mut ranges = Vec::new();
    for (ix, default) in spec {
        let r = given.iter().find(|(f, _)| f == ix).and_then(|(_, v)| *v);
        match (r, default) {
            (Some(r), _) => ranges.push(r),
            (None, Some(d)) => ranges.push(IntRange(*d, *d)),
            (None, None) => return Err(Exit::usage(format!("{name} needs --{ix}"))),
        }
    }
    let syms = compute::params(seq);
    let values: Vec<Poly> = syms.iter().map(|&s| a.params.get(s)).collect();
    let mut rows = Vec::new();
    let mut point: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    'outer: loop {
        rows.push((point.clone(), compute::eval(seq, &point, &values)?.to_string()));
        for d in (0..point.len()).rev() {
            if point[d] < ranges[d].1 {
                point[d] += 1;
                continue 'outer;
            }
            point[d] = ranges[d].0;
        }
        break;
    }
    let tab = Table {
        sequence: name,
        names: spec.iter().map(|(n, _)| *n).collect(),
        ranged: ranges.iter().map(|r| r.0 != r.1).collect(),
        params: syms.iter().zip(&values).map(|(s, v)| (s.name().to_string(), v.to_string())).collect(),
        rows,
        triangular: compute::triangular(seq),
    };
    match format {
        Format::Text => emit(&tab.text()),
        Format::Csv => emit(&tab.csv()?),
        Format::Json => emit(&format!("{:#}\n", tab.json())),
    }
    Ok(())
}

fn cmd_matrix(a: &MatrixArgs, format: Format) -> Result<(), Exit> {
    use Family::*;
    use Symbol::{Lambda, Mu, X};
    let name = a.family.to_possible_value().expect("named").get_name().to_string();
    let n = a.n;
    if n == 0 {
        return Err(Exit::usage("--n must be at least 1"));
    }
    let uses_k = matches!(a.family, G | Q);
    let uses_w = matches!(a.family, Bernoulli | L);
    let uses_h = matches!(a.family, Stirling1T2 | Stirling2T2);
    for (flag, set, ok) in [("k", a.k.is_some(), uses_k), ("w", a.w.is_some(), uses_w), ("h", a.h.is_some(), uses_h)] {
        if set && !ok {
            return Err(Exit::usage(format!("--{flag} is not a parameter of {name}")));
        }
    }
    let syms: &[Symbol] = if matches!(a.family, Stirling1T1 | Stirling2T1) { &[Mu, Lambda, X] } else { &[Lambda, X] };
    a.params.only(syms, &name)?;
    let (lam, x) = (a.params.get(Lambda), a.params.get(X));
    let k = a.k.unwrap_or(n);
    if uses_k && !(1..=n).contains(&k) {
        return Err(Exit::usage(format!("--k must lie in 1..={n}")));
    }
    let (w, h) = (a.w.unwrap_or(1), a.h.unwrap_or(0));
    let first_type = |kind| -> Result<Matrix, Exit> {
        let p = StirlingParams::new(a.params.get(Mu), lam.clone(), x.clone()).map_err(|e| Exit::usage(e.to_string()))?;
        Ok(matrices::stirling_matrix_first_type(n, &p, kind)?)
    };
    let m = match a.family {
        Pascal => matrices::pascal(n, &lam, &x),
        R => matrices::r_matrix(n, &lam, &x)?,
        T => matrices::t_matrix(n, &lam, &x),
        G => matrices::g_factor(n, k, &lam, &x)?,
        Q => matrices::q_factor(n, k, &lam, &x),
        Bernoulli => matrices::bernoulli_matrix(n, w, &lam, &x),
        L => matrices::l_matrix(n, w, &lam, &x),
        Stirling1T1 => first_type(Kind::First)?,
        Stirling2T1 => first_type(Kind::Second)?,
        Stirling1T2 => matrices::stirling_matrix_second_type(n, h, &lam, &x, Kind::First)?,
        Stirling2T2 => matrices::stirling_matrix_second_type(n, h, &lam, &x, Kind::Second)?,
    };
    match format {
        Format::Text | Format::Csv => emit(&m.to_csv()),
        Format::Json => emit(&format!("{:#}\n", m.to_json())),
    }
    Ok(())
}

fn ledger_exit(e: LedgerError) -> Exit {
    match e {
        LedgerError::UnknownIdentity(id) => {
            let close: Vec<&str> =
                ledger::catalog().iter().map(|s| s.id).filter(|c| c.starts_with(id.split('-').next().unwrap_or(&id))).take(5).collect();
            let hint = if close.is_empty() { String::new() } else { format!(" (similar: {})", close.join(", ")) };
            Exit::usage(format!("unknown identity {id:?}; run `degenmat list` for the catalog{hint}"))
        }
        other => Exit::usage(other.to_string()),
    }
}

fn cmd_verify(a: &VerifyArgs, format: Format, profile: Profile) -> Result<(), Exit> {
    let specs: Vec<&ledger::IdentitySpec> = if a.identity == "all" {
        if !a.range.is_empty() {
            return Err(Exit::usage("--range applies to a single identity, not to all"));
        }
        ledger::catalog().iter().collect()
    } else {
        vec![ledger::find(&a.identity).map_err(ledger_exit)?]
    };
    let mut grid = Grid::new(profile);
    for r in &a.range {
        let (name, range) = r.split_once('=').ok_or_else(|| Exit::usage(format!("--range expects name=a..b, got {r:?}")))?;
        let IntRange(lo, hi) = parse_range(range).map_err(Exit::usage)?;
        grid = grid.range(name.trim(), lo, hi);
    }
    let mut reports: Vec<VerifyReport> = Vec::new();
    let mut csv = csv::Writer::from_writer(Vec::new());
    if format == Format::Csv {
        csv.write_record(["id", "attempted", "passed", "failed", "elapsed_ms"])?;
    }
    for spec in specs {
        let report = if a.perturb_rhs { ledger::verify_spec(&spec.perturbed(), &grid) } else { ledger::verify_spec(spec, &grid) }
            .map_err(ledger_exit)?;
        match format {
            Format::Text => {
                let mut text = format!("{report}\n");
                for f in report.failures.iter().take(3) {
                    text += &format!("  at {}: lhs = {}, rhs = {}\n", serde_json::Value::Object(f.bindings.clone()), f.lhs, f.rhs);
                }
                emit(&text);
            }
            Format::Csv => csv.write_record([
                report.id.clone(),
                report.attempted.to_string(),
                report.passed.to_string(),
                report.failures.len().to_string(),
                report.elapsed_ms.to_string(),
            ])?,
            Format::Json => {}
        }
        reports.push(report);
    }
    let attempted: usize = reports.iter().map(|r| r.attempted).sum();
    let passed: usize = reports.iter().map(|r| r.passed).sum();
    let failing = reports.iter().filter(|r| !r.is_clean()).count();
    match format {
        Format::Text => {
            emit(&format!("summary: {} identities, {passed}/{attempted} cases passed, {failing} failing\n", reports.len()));
        }
        Format::Csv => {
            emit(&String::from_utf8(csv.into_inner().map_err(|e| e.into_error())?).expect("utf-8"));
        }
        Format::Json => {
            let doc = json!({
                "reports": reports,
                "summary": { "identities": reports.len(), "attempted": attempted, "passed": passed, "failing": failing },
            });
            emit(&format!("{doc:#}\n"));
        }
    }
    if failing > 0 {
        return Err(Exit { code: 1, msg: String::new() });
    }
    Ok(())
}

fn cmd_list(format: Format) -> Result<(), Exit> {
    let infos = ledger::list_identities();
    match format {
        Format::Text => {
            for i in &infos {
                emit(&format!("{}  {}\n", i.id, i.anchor));
            }
        }
        Format::Json => emit(&format!("{:#}\n", json!(infos))),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["id", "anchor", "domain"])?;
            for i in &infos {
                w.write_record([&i.id, &i.anchor, &i.domain])?;
            }
            emit(&String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf-8"));
        }
    }
    Ok(())
}
