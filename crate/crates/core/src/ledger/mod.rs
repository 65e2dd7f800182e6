//! Identity catalog and exact checker.
//!
//! Each [`IdentitySpec`] declares ordered integer indices (whose bounds may
//! depend on earlier indices and on the [`Profile`]), the parameters it
//! mentions, and an instantiator producing both sides for one case.  A
//! [`Grid`] selects which cases to run; [`verify`] evaluates them in
//! parallel and reports every mismatch.

mod catalog;
mod kit;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrices::MatrixError;
use crate::numbers::NumbersError;
use crate::ring::{format_rational, RingError};
use crate::{Matrix, Poly, Rational, Symbol};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LedgerError {
    #[error("unknown identity {0:?}; run `list` for the catalog")]
    UnknownIdentity(String),
    #[error("{id}: {msg}")]
    DomainViolation { id: String, msg: String },
    #[error(transparent)]
    Numbers(#[from] NumbersError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// How far default grids reach.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Matrix orders and main indices up to 5.
    #[default]
    Quick,
    /// Matrix orders and main indices up to 7.
    Full,
}

impl Profile {
    /// The value `N` that `Cap` bounds are relative to.
    pub fn cap(self) -> i64 {
        match self {
            Profile::Quick => 5,
            Profile::Full => 7,
        }
    }
}

impl std::str::FromStr for Profile {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(format!("unknown profile {s:?} (expected quick or full)")),
        }
    }
}

/// One endpoint of an index range.
#[derive(Clone, Copy)]
pub enum Bound {
    /// A fixed value.
    C(i64),
    /// Profile cap plus an offset; only limits default grids.
    Cap(i64),
    /// A fixed value that only limits default grids.
    D(i64),
    /// An earlier index plus an offset.
    V(&'static str, i64),
    /// Anything else computable from earlier indices.
    F(fn(&Case) -> i64, &'static str),
}

impl Bound {
    fn eval(&self, case: &Case, profile: Profile) -> i64 {
        match *self {
            Bound::C(v) => v,
            Bound::Cap(o) => profile.cap() + o,
            Bound::D(v) => v,
            Bound::V(name, o) => case.i(name) + o,
            Bound::F(f, _) => f(case),
        }
    }

    /// The bound as a hard constraint: `None` when it only shapes defaults.
    fn hard(&self, case: &Case) -> Option<i64> {
        match self {
            Bound::Cap(_) | Bound::D(_) => None,
            b => Some(b.eval(case, Profile::Quick)),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let off = |f: &mut fmt::Formatter<'_>, o: i64| match o.cmp(&0) {
            std::cmp::Ordering::Less => write!(f, "{o}"),
            std::cmp::Ordering::Equal => Ok(()),
            std::cmp::Ordering::Greater => write!(f, "+{o}"),
        };
        match *self {
            Bound::C(v) | Bound::D(v) => write!(f, "{v}"),
            Bound::Cap(o) => {
                f.write_str("N")?;
                off(f, o)
            }
            Bound::V(name, o) => {
                f.write_str(name)?;
                off(f, o)
            }
            Bound::F(_, text) => f.write_str(text),
        }
    }
}

/// An integer index. Grid values outside a bound that is part of the
/// index shape (e.g. `k <= m`) are skipped; values breaking a stated side
/// condition (e.g. `0 <= m < h`) are rejected with `DomainViolation`.
#[derive(Clone)]
struct Index {
    name: &'static str,
    lo: Bound,
    hi: Bound,
    lo_side: bool,
    hi_side: bool,
}

/// Bindings of some parameters to rationals; the rest stay symbolic.
pub type Point = Vec<(Symbol, Rational)>;

/// One instantiation: integer indices plus a parameter point.
#[derive(Clone, Debug, Default)]
pub struct Case {
    ints: Vec<(&'static str, i64)>,
    point: Point,
}

impl Case {
    /// Integer index by name. Panics on a name the identity did not declare.
    pub fn i(&self, name: &str) -> i64 {
        self.ints.iter().find(|(n, _)| *n == name).map(|&(_, v)| v).unwrap_or_else(|| panic!("index {name} not bound"))
    }

    pub fn u(&self, name: &str) -> usize {
        usize::try_from(self.i(name)).expect("nonnegative index")
    }

    /// The parameter as a polynomial: its bound value, or the bare symbol.
    pub fn sym(&self, s: Symbol) -> Poly {
        match self.point.iter().find(|(t, _)| *t == s) {
            Some((_, v)) => Poly::constant(v.clone()),
            None => Poly::symbol(s),
        }
    }

    pub fn lam(&self) -> Poly {
        self.sym(Symbol::Lambda)
    }
    pub fn mu(&self) -> Poly {
        self.sym(Symbol::Mu)
    }
    pub fn x(&self) -> Poly {
        self.sym(Symbol::X)
    }
    pub fn y(&self) -> Poly {
        self.sym(Symbol::Y)
    }

    fn bindings(&self) -> serde_json::Map<String, serde_json::Value> {
        let mut map = serde_json::Map::new();
        for &(name, v) in &self.ints {
            map.insert(name.to_string(), v.into());
        }
        for (s, v) in &self.point {
            map.insert(s.name().to_string(), format_rational(v).into());
        }
        map
    }
}

/// Both sides of an instantiated identity.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Poly),
    Matrix(Matrix),
}

impl Value {
    fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Scalar(p) => p.to_string().into(),
            Value::Matrix(m) => m.to_json(),
        }
    }

    fn plus_one(self) -> Value {
        match self {
            Value::Scalar(p) => Value::Scalar(p + Poly::one()),
            Value::Matrix(m) => Value::Matrix(m.map(|e| e.clone() + Poly::one())),
        }
    }
}

impl From<Poly> for Value {
    fn from(p: Poly) -> Self {
        Value::Scalar(p)
    }
}

impl From<Matrix> for Value {
    fn from(m: Matrix) -> Self {
        Value::Matrix(m)
    }
}

type Instantiator = Arc<dyn Fn(&Case) -> Result<(Value, Value), LedgerError> + Send + Sync>;

/// A catalog entry.
#[derive(Clone)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub anchor: &'static str,
    indices: Vec<Index>,
    symbols: Vec<Symbol>,
    rational_only: bool,
    nonzero: Vec<Symbol>,
    points: Vec<Point>,
    check: Instantiator,
}

impl IdentitySpec {
    pub(crate) fn new(id: &'static str, anchor: &'static str) -> Self {
        IdentitySpec {
            id,
            anchor,
            indices: Vec::new(),
            symbols: Vec::new(),
            rational_only: false,
            nonzero: Vec::new(),
            points: vec![Vec::new()],
            check: Arc::new(|_| unreachable!("identity without instantiator")),
        }
    }

    fn index(mut self, name: &'static str, lo: Bound, hi: Bound, lo_side: bool, hi_side: bool) -> Self {
        self.indices.push(Index { name, lo, hi, lo_side, hi_side });
        self
    }

    /// Index whose range only shapes the grid.
    pub(crate) fn idx(self, name: &'static str, lo: Bound, hi: Bound) -> Self {
        self.index(name, lo, hi, false, false)
    }

    /// Index whose range is a stated side condition.
    pub(crate) fn side(self, name: &'static str, lo: Bound, hi: Bound) -> Self {
        self.index(name, lo, hi, true, true)
    }

    /// Index whose lower bound is a side condition and upper bound is shape.
    pub(crate) fn side_lo(self, name: &'static str, lo: Bound, hi: Bound) -> Self {
        self.index(name, lo, hi, true, false)
    }

    /// Parameters the identity mentions (symbolic unless bound by a point).
    pub(crate) fn syms(mut self, s: &[Symbol]) -> Self {
        self.symbols = s.to_vec();
        self
    }

    /// Default points (each binds a subset of the parameters).
    pub(crate) fn at(mut self, points: Vec<Point>) -> Self {
        self.points = points;
        self
    }

    /// Only valid with every parameter bound to a rational.
    pub(crate) fn rational(mut self, points: Vec<Point>) -> Self {
        self.rational_only = true;
        self.points = points;
        self
    }

    pub(crate) fn nonzero(mut self, s: &[Symbol]) -> Self {
        self.nonzero = s.to_vec();
        self
    }

    /// Scalar identity.
    pub(crate) fn eq(mut self, f: impl Fn(&Case) -> Result<(Poly, Poly), LedgerError> + Send + Sync + 'static) -> Self {
        self.check = Arc::new(move |c| f(c).map(|(l, r)| (l.into(), r.into())));
        self
    }

    /// Matrix identity.
    pub(crate) fn mat(mut self, f: impl Fn(&Case) -> Result<(Matrix, Matrix), LedgerError> + Send + Sync + 'static) -> Self {
        self.check = Arc::new(move |c| f(c).map(|(l, r)| (l.into(), r.into())));
        self
    }

    /// The same identity with `1` added to the right-hand side (to every
    /// entry for matrix identities); used to check that the harness is not
    /// vacuous.
    pub fn perturbed(&self) -> IdentitySpec {
        let inner = Arc::clone(&self.check);
        let mut out = self.clone();
        out.check = Arc::new(move |c| inner(c).map(|(l, r)| (l, r.plus_one())));
        out
    }

    /// Human-readable parameter domain.
    pub fn domain(&self) -> String {
        let mut parts: Vec<String> = self
            .indices
            .iter()
            .map(|ix| {
                let tag = match (ix.lo_side, ix.hi_side) {
                    (true, true) => " (side condition)",
                    (true, false) => " (lower bound is a side condition)",
                    _ => "",
                };
                format!("{} in {}..={}{}", ix.name, ix.lo, ix.hi, tag)
            })
            .collect();
        if !self.symbols.is_empty() {
            let names: Vec<&str> = self.symbols.iter().map(|s| s.name()).collect();
            let mode = if self.rational_only { "rational samples" } else { "symbolic" };
            parts.push(format!("{mode} {}", names.join(", ")));
        }
        if !self.nonzero.is_empty() {
            let names: Vec<&str> = self.nonzero.iter().map(|s| s.name()).collect();
            parts.push(format!("{} != 0", names.join(", ")));
        }
        if parts.is_empty() {
            "no parameters".to_string()
        } else {
            parts.join("; ")
        }
    }

    fn violation(&self, msg: String) -> LedgerError {
        LedgerError::DomainViolation { id: self.id.to_string(), msg }
    }

    /// All cases of `grid` in a fixed order.
    fn cases(&self, grid: &Grid) -> Result<Vec<Case>, LedgerError> {
        for name in grid.ranges.keys() {
            if !self.indices.iter().any(|ix| ix.name == name) {
                return Err(self.violation(format!("no index named {name:?}")));
            }
        }
        for (name, &(lo, hi)) in &grid.ranges {
            if lo > hi {
                return Err(self.violation(format!("empty range {name} = {lo}..{hi}")));
            }
        }
        let points = match &grid.points {
            Some(p) => p.clone(),
            None => self.points.clone(),
        };
        for point in &points {
            if self.rational_only {
                if let Some(s) = self.symbols.iter().find(|s| !point.iter().any(|(t, _)| t == *s)) {
                    return Err(self.violation(format!("{s} must be bound to a rational (identity holds at rational samples only)")));
                }
            }
            if let Some((s, _)) = point.iter().find(|(s, v)| self.nonzero.contains(s) && v.is_zero()) {
                return Err(self.violation(format!("{s} must be nonzero")));
            }
        }
        let mut partial = Vec::new();
        let mut out = Vec::new();
        self.walk(0, grid, &mut partial, &mut out)?;
        Ok(out.into_iter().flat_map(|ints| points.iter().map(move |p| Case { ints: ints.clone(), point: p.clone() })).collect())
    }

    fn walk(
        &self,
        depth: usize,
        grid: &Grid,
        partial: &mut Vec<(&'static str, i64)>,
        out: &mut Vec<Vec<(&'static str, i64)>>,
    ) -> Result<(), LedgerError> {
        let Some(ix) = self.indices.get(depth) else {
            out.push(partial.clone());
            return Ok(());
        };
        let ctx = Case { ints: partial.clone(), point: Vec::new() };
        let values: Vec<i64> = match grid.ranges.get(ix.name) {
            Some(&(lo, hi)) => {
                let (hlo, hhi) = (ix.lo.hard(&ctx), ix.hi.hard(&ctx));
                let mut vs = Vec::new();
                for v in lo..=hi {
                    let below = hlo.is_some_and(|b| v < b);
                    let above = hhi.is_some_and(|b| v > b);
                    if !below && !above {
                        vs.push(v);
                    } else if (below && ix.lo_side) || (above && ix.hi_side) {
                        let here: Vec<String> = partial.iter().map(|(n, v)| format!("{n} = {v}")).collect();
                        return Err(self.violation(format!(
                            "{} = {v} breaks the side condition {} <= {} <= {}{}",
                            ix.name,
                            ix.lo,
                            ix.name,
                            ix.hi,
                            if here.is_empty() { String::new() } else { format!(" (at {})", here.join(", ")) }
                        )));
                    }
                }
                vs
            }
            None => (ix.lo.eval(&ctx, grid.profile)..=ix.hi.eval(&ctx, grid.profile)).collect(),
        };
        for v in values {
            partial.push((ix.name, v));
            self.walk(depth + 1, grid, partial, out)?;
            partial.pop();
        }
        Ok(())
    }
}

/// Which cases to run: the profile caps default ranges, explicit ranges
/// replace an index's default, explicit points replace the default points.
#[derive(Clone, Debug, Default)]
pub struct Grid {
    pub profile: Profile,
    pub ranges: BTreeMap<String, (i64, i64)>,
    pub points: Option<Vec<Point>>,
}

impl Grid {
    pub fn new(profile: Profile) -> Self {
        Grid { profile, ..Grid::default() }
    }

    /// Sets an inclusive range for one index.
    pub fn range(mut self, name: &str, lo: i64, hi: i64) -> Self {
        self.ranges.insert(name.to_string(), (lo, hi));
        self
    }

    pub fn points(mut self, points: Vec<Point>) -> Self {
        self.points = Some(points);
        self
    }
}

/// A case whose sides differ (or whose instantiation failed).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub bindings: serde_json::Map<String, serde_json::Value>,
    pub lhs: serde_json::Value,
    pub rhs: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub id: String,
    pub anchor: String,
    pub attempted: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{} passed", self.id, self.passed, self.attempted)
    }
}

/// Catalog listing entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityInfo {
    pub id: String,
    pub anchor: String,
    pub domain: String,
}

/// The full catalog in its stable order.
pub fn catalog() -> &'static [IdentitySpec] {
    static CATALOG: OnceLock<Vec<IdentitySpec>> = OnceLock::new();
    CATALOG.get_or_init(catalog::build)
}

pub fn find(id: &str) -> Result<&'static IdentitySpec, LedgerError> {
    catalog().iter().find(|s| s.id == id).ok_or_else(|| LedgerError::UnknownIdentity(id.to_string()))
}

pub fn list_identities() -> Vec<IdentityInfo> {
    catalog().iter().map(|s| IdentityInfo { id: s.id.to_string(), anchor: s.anchor.to_string(), domain: s.domain() }).collect()
}

fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = std::env::var("DEGENMAT_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            builder = builder.num_threads(n.max(1));
        }
        builder.build().expect("thread pool")
    })
}

/// Checks one catalog entry (possibly a perturbed copy) over `grid`.
pub fn verify_spec(spec: &IdentitySpec, grid: &Grid) -> Result<VerifyReport, LedgerError> {
    let start = Instant::now();
    let cases = spec.cases(grid)?;
    let outcomes: Vec<Option<Failure>> = pool().install(|| {
        cases
            .par_iter()
            .map(|case| match (spec.check)(case) {
                Ok((lhs, rhs)) if lhs == rhs => None,
                Ok((lhs, rhs)) => Some(Failure { bindings: case.bindings(), lhs: lhs.to_json(), rhs: rhs.to_json() }),
                Err(e) => Some(Failure { bindings: case.bindings(), lhs: format!("error: {e}").into(), rhs: serde_json::Value::Null }),
            })
            .collect()
    });
    let failures: Vec<Failure> = outcomes.into_iter().flatten().collect();
    Ok(VerifyReport {
        id: spec.id.to_string(),
        anchor: spec.anchor.to_string(),
        attempted: cases.len(),
        passed: cases.len() - failures.len(),
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Checks the catalog entry `id` over `grid`.
pub fn verify(id: &str, grid: &Grid) -> Result<VerifyReport, LedgerError> {
    verify_spec(find(id)?, grid)
}

/// Runs every catalog entry on its default grid for `profile`.
pub fn verify_all(profile: Profile) -> Vec<VerifyReport> {
    let grid = Grid::new(profile);
    catalog().iter().map(|s| verify_spec(s, &grid).expect("default grids respect their own domains")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn catalog_ids_are_unique_and_plentiful() {
        let ids: HashSet<&str> = catalog().iter().map(|s| s.id).collect();
        assert_eq!(ids.len(), catalog().len());
        assert!(catalog().len() >= 40);
        assert!(ids.contains("thm-2.1") && ids.contains("eq-13"));
    }

    #[test]
    fn thm_2_1_default_grid() {
        let r = verify("thm-2.1", &Grid::new(Profile::Quick)).unwrap();
        assert_eq!(r.to_string(), "thm-2.1: 24/24 passed");
    }

    #[test]
    fn side_conditions_are_enforced() {
        let grid = Grid::new(Profile::Quick).range("h", 3, 3).range("m", 0, 3);
        assert!(matches!(verify("h-sum-beta", &grid), Err(LedgerError::DomainViolation { .. })));
        let ok = Grid::new(Profile::Quick).range("h", 3, 3).range("m", 0, 2);
        assert!(verify("h-sum-beta", &ok).unwrap().is_clean());
        let zero_mu = Grid::new(Profile::Quick).points(vec![vec![(Symbol::Mu, Rational::zero())]]);
        assert!(matches!(verify("eq-8-s1", &zero_mu), Err(LedgerError::DomainViolation { .. })));
        assert!(matches!(verify("thm-2.1", &Grid::new(Profile::Quick).points(vec![vec![]])), Err(LedgerError::DomainViolation { .. })));
        assert_eq!(verify("nonsense", &Grid::default()).unwrap_err(), LedgerError::UnknownIdentity("nonsense".into()));
    }

    #[test]
    fn perturbation_fails_every_case() {
        let spec = find("eq-0").unwrap().perturbed();
        let r = verify_spec(&spec, &Grid::new(Profile::Quick).range("m", 0, 2)).unwrap();
        assert!(r.attempted > 0);
        assert_eq!(r.passed, 0);
        assert_eq!(r.failures.len(), r.attempted);
    }
}
