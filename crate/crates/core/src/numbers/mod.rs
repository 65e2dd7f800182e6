//! Degenerate Bernoulli polynomials of both kinds, Hsu–Shiue generalized
//! Stirling numbers, their classical specializations and hyperharmonic
//! numbers.
//!
//! Every quantity is produced as a [`Poly`]: parameters that are bound to
//! numbers are passed as constant polynomials, free parameters as symbols.
//! Values at `lambda = 0` or `mu = 0` come out of the same polynomial
//! construction, no limits are taken.

mod cache;
pub mod oracle;
mod views;

use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::ring::{factorial_int, gff, Rational, RingError, Symbol};
use crate::{Poly, Series};

pub use views::*;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NumbersError {
    #[error("generalized Stirling numbers need (μ, λ, x) ≠ (0,0,0)")]
    BadParams,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Which of the two generalized Stirling families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    First,
    Second,
}

/// The triple `(mu, lambda, x)` of a generalized Stirling number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StirlingParams {
    pub mu: Poly,
    pub lambda: Poly,
    pub x: Poly,
}

impl StirlingParams {
    pub fn new(mu: Poly, lambda: Poly, x: Poly) -> Result<Self, NumbersError> {
        if mu.is_zero() && lambda.is_zero() && x.is_zero() {
            return Err(NumbersError::BadParams);
        }
        Ok(StirlingParams { mu, lambda, x })
    }

    /// Convenience constructor from integer values.
    pub fn ints(mu: i64, lambda: i64, x: i64) -> Result<Self, NumbersError> {
        Self::new(Poly::from_int(mu), Poly::from_int(lambda), Poly::from_int(x))
    }
}

/// Rows `m = 0..=M`, each holding `k = 0..=m`.
pub type Triangle = Vec<Vec<Poly>>;

pub(crate) fn poly_of(r: Rational) -> Poly {
    Poly::constant(r)
}

pub(crate) fn int_poly(n: num_bigint::BigInt) -> Poly {
    Poly::constant(Rational::from_integer(n))
}

/// `(a|b)_j / a` for `j >= 1`, built in the free symbols `lambda` (for `a`)
/// and `mu` (for `b`) and divided exactly by `lambda`.
fn quotient_gff(j: usize) -> Result<Poly, RingError> {
    let a = Poly::symbol(Symbol::Lambda);
    let b = Poly::symbol(Symbol::Mu);
    gff(&a, &b, j).exact_div_symbol(Symbol::Lambda)
}

/// Coefficients `(a|b)_j / a`, `j = 0..=order` (the `j = 0` entry is zero),
/// with the given polynomials substituted for `a` and `b`.
fn quotient_series(order: usize, a: &Poly, b: &Poly) -> Result<Series, RingError> {
    let mut coeffs = vec![Poly::zero()];
    for j in 1..=order {
        let generic = quotient_gff(j)?;
        coeffs.push(generic.substitute(&[(Symbol::Lambda, a.clone()), (Symbol::Mu, b.clone())]));
    }
    Ok(Series::new(coeffs))
}

fn gff_series(order: usize, base: &Poly, step: &Poly) -> Series {
    Series::from_fn(order, |j| gff(base, step, j))
}

fn working_order(m: usize) -> usize {
    m.max(6)
}

/// Degenerate Bernoulli polynomials `beta_0..=beta_order` of order `w`.
///
/// Computed as `(D/t)^(-w) * E` with `D = sum_{k>=1} (1|lambda)_k t^k/k!`
/// and `E = sum (x|lambda)_k t^k/k!`.
pub fn beta_seq(order: usize, w: i64, lam: &Poly, x: &Poly) -> Arc<Vec<Poly>> {
    let key = cache::Key::new(cache::Tag::Beta, w, &[lam, x]);
    cache::sequences().get_or_compute(key, order, |order| {
        let one = Poly::one();
        let unit = Series::from_fn(order, |m| gff(&one, lam, m + 1).scale(&Rational::new(1.into(), ((m + 1) as u64).into())));
        let weight = unit.pow(-w).expect("unit constant term");
        weight.mul(&gff_series(order, x, lam)).expect("equal orders").into_coeffs()
    })
}

/// `beta_m^{(w)}(lambda, x)`.
pub fn beta(m: usize, w: i64, lam: &Poly, x: &Poly) -> Poly {
    beta_seq(working_order(m), w, lam, x)[m].clone()
}

/// Degenerate Bernoulli polynomials of the second kind, `alpha_0..=alpha_order`.
pub fn alpha_seq(order: usize, w: i64, lam: &Poly, x: &Poly) -> Arc<Vec<Poly>> {
    let key = cache::Key::new(cache::Tag::Alpha, w, &[lam, x]);
    cache::sequences().get_or_compute(key, order, |order| {
        // ((1+t)^lambda - 1) / (lambda t): coefficient m is ((lambda|1)_{m+1} / lambda) / (m+1).
        let q = quotient_series(order + 1, lam, &Poly::one()).expect("exact division by lambda");
        let unit = Series::from_fn(order, |m| q.coeff(m + 1).scale(&Rational::new(1.into(), ((m + 1) as u64).into())));
        let weight = unit.pow(-w).expect("unit constant term");
        weight.mul(&gff_series(order, x, &Poly::one())).expect("equal orders").into_coeffs()
    })
}

/// `alpha_m^{(w)}(lambda, x)`.
pub fn alpha(m: usize, w: i64, lam: &Poly, x: &Poly) -> Poly {
    alpha_seq(working_order(m), w, lam, x)[m].clone()
}

/// Generalized Stirling triangle `S(m, k | mu, lambda, x)` for `m <= order`.
///
/// First kind: `k! sum_m S_1(m,k) t^m/m! = F^k G` with
/// `F = ((1+mu t)^{lambda/mu} - 1)/lambda`, `G = (1+mu t)^{x/mu}`.
/// Second kind swaps `mu` and `lambda` and negates `x`.
pub fn stirling_triangle(kind: Kind, order: usize, p: &StirlingParams) -> Result<Arc<Triangle>, NumbersError> {
    if p.mu.is_zero() && p.lambda.is_zero() && p.x.is_zero() {
        return Err(NumbersError::BadParams);
    }
    let key = cache::Key::new(cache::Tag::Stirling(kind), 0, &[&p.mu, &p.lambda, &p.x]);
    let mut failure = None;
    let tri = cache::triangles().get_or_compute(key, order, |order| match build_triangle(kind, order, p) {
        Ok(t) => t,
        Err(e) => {
            failure = Some(e);
            Vec::new()
        }
    });
    match failure {
        Some(e) => Err(e.into()),
        None => Ok(tri),
    }
}

fn build_triangle(kind: Kind, order: usize, p: &StirlingParams) -> Result<Triangle, RingError> {
    let (f, g) = match kind {
        Kind::First => (quotient_series(order, &p.lambda, &p.mu)?, gff_series(order, &p.x, &p.mu)),
        Kind::Second => (quotient_series(order, &p.mu, &p.lambda)?, gff_series(order, &-&p.x, &p.lambda)),
    };
    let mut rows: Triangle = (0..=order).map(|m| vec![Poly::zero(); m + 1]).collect();
    let mut power = g;
    for k in 0..=order {
        let inv_fact = poly_of(Rational::new(1.into(), factorial_int(k as u64)));
        for (m, row) in rows.iter_mut().enumerate().skip(k) {
            row[k] = power.coeff(m) * &inv_fact;
        }
        if k < order {
            power = power.mul(&f)?;
        }
    }
    Ok(rows)
}

/// `S(m, k | p)` of the requested kind; zero when `k > m`.
pub fn stirling_gen(kind: Kind, m: usize, k: usize, p: &StirlingParams) -> Result<Poly, NumbersError> {
    if k > m {
        // still reject the excluded triple
        StirlingParams::new(p.mu.clone(), p.lambda.clone(), p.x.clone())?;
        return Ok(Poly::zero());
    }
    let tri = stirling_triangle(kind, working_order(m), p)?;
    Ok(tri[m][k].clone())
}

/// `S_1(m, k | mu, lambda, x)`.
pub fn stirling1_gen(m: usize, k: usize, p: &StirlingParams) -> Result<Poly, NumbersError> {
    stirling_gen(Kind::First, m, k, p)
}

/// `S_2(m, k | mu, lambda, x)`.
pub fn stirling2_gen(m: usize, k: usize, p: &StirlingParams) -> Result<Poly, NumbersError> {
    stirling_gen(Kind::Second, m, k, p)
}

/// Higher-order Bernoulli polynomial `B_m^{(w)}(x)`, the `lambda = 0` case of [`beta`].
pub fn bernoulli_classic(m: usize, w: i64, x: &Poly) -> Poly {
    beta(m, w, &Poly::zero(), x)
}

/// Higher-order Bernoulli polynomial of the second kind `b_m^{(w)}(x)`,
/// i.e. `alpha_m^{(w)}(0, x) / m!`.
pub fn bernoulli_second(m: usize, w: i64, x: &Poly) -> Poly {
    let a = alpha(m, w, &Poly::zero(), x);
    a.scale(&Rational::new(1.into(), factorial_int(m as u64)))
}

/// Hyperharmonic number `H_m^r`: `H_m^0 = 1/m`, `H_m^r = sum_{k<=m} H_k^{r-1}`,
/// and zero for `r < 0` or `m <= 0`.
pub fn hyperharmonic(m: i64, r: i64) -> Rational {
    if r < 0 || m <= 0 {
        return Rational::zero();
    }
    let mut row: Vec<Rational> = (1..=m).map(|k| Rational::new(1.into(), k.into())).collect();
    for _ in 0..r {
        let mut acc = Rational::zero();
        for v in row.iter_mut() {
            acc += &*v;
            *v = acc.clone();
        }
    }
    row[(m - 1) as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, rat};

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }
    fn lam() -> Poly {
        Poly::symbol(Symbol::Lambda)
    }
    fn x() -> Poly {
        Poly::symbol(Symbol::X)
    }

    #[test]
    fn beta_first_few() {
        assert_eq!(beta(1, 1, &lam(), &x()), p("x + 1/2*lambda - 1/2"));
        assert_eq!(beta(4, 1, &lam(), &Poly::zero()), p("-19/30*lambda^4 + 2/3*lambda^2 - 1/30"));
        for w in -2..=3 {
            assert_eq!(beta(0, w, &lam(), &x()), Poly::one());
        }
    }

    #[test]
    fn beta_order_two_at_zero() {
        // (t/(e^t-1))^2 = 1 - t + (5/6) t^2/2! + ...: hand convolution of
        // B = (1, -1/2, 1/6) with itself gives 1/6 + 2*(1/4) + 1/6 = 5/6.
        assert_eq!(beta(2, 2, &Poly::zero(), &Poly::zero()), poly_of(rat(5, 6)));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(2, 0, &lam(), &Poly::from_int(3)), Poly::from_int(6));
        let l0 = Poly::from_int(2);
        let lhs = alpha(2, 1, &l0, &Poly::zero());
        let rhs = beta(2, 1, &poly_of(rat(1, 2)), &Poly::zero()).scale(&rat(4, 1));
        assert_eq!(lhs, rhs);
        for m in 0..5 {
            for w in -1..=2 {
                let fact = Rational::from_integer(factorial_int(m as u64));
                assert_eq!(alpha(m, w, &Poly::zero(), &x()), bernoulli_second(m, w, &x()).scale(&fact));
            }
        }
    }

    #[test]
    fn stirling_examples() {
        let classic = StirlingParams::ints(1, 0, 0).unwrap();
        assert_eq!(stirling1_gen(4, 1, &StirlingParams::ints(1, 0, 1).unwrap()).unwrap(), Poly::from_int(2));
        assert_eq!(stirling1_gen(4, 2, &classic).unwrap(), Poly::from_int(11));
        assert_eq!(stirling2_gen(4, 2, &classic).unwrap(), Poly::from_int(7));
        assert_eq!(stirling2_gen(4, 2, &StirlingParams::ints(1, -1, 0).unwrap()).unwrap(), Poly::from_int(36));
        let sym = StirlingParams::new(p("mu"), p("lambda"), p("x")).unwrap();
        for m in 0..=6 {
            assert_eq!(stirling1_gen(m, m, &sym).unwrap(), Poly::one());
            assert_eq!(stirling2_gen(m, m, &sym).unwrap(), Poly::one());
        }
        assert_eq!(stirling2_gen(2, 5, &classic).unwrap(), Poly::zero());
    }

    #[test]
    fn excluded_triple() {
        assert_eq!(StirlingParams::ints(0, 0, 0), Err(NumbersError::BadParams));
        let bad = StirlingParams { mu: Poly::zero(), lambda: Poly::zero(), x: Poly::zero() };
        assert_eq!(stirling1_gen(3, 1, &bad), Err(NumbersError::BadParams));
        assert_eq!(stirling2_gen(1, 3, &bad), Err(NumbersError::BadParams));
        // mixed symbolic / zero triples are fine
        assert!(StirlingParams::new(Poly::zero(), Poly::zero(), x()).is_ok());
    }

    #[test]
    fn classical_bernoulli() {
        assert_eq!(bernoulli_classic(2, 1, &Poly::zero()), poly_of(rat(1, 6)));
        assert_eq!(bernoulli_classic(1, 1, &x()), p("x - 1/2"));
        for m in 0..6 {
            assert_eq!(bernoulli_classic(m, 0, &x()), x().pow(m as u32));
        }
    }

    #[test]
    fn second_kind_bernoulli() {
        assert_eq!(bernoulli_second(0, 3, &x()), Poly::one());
        assert_eq!(bernoulli_second(1, 1, &Poly::zero()), poly_of(rat(1, 2)));
        assert_eq!(bernoulli_second(2, 0, &Poly::from_int(3)), Poly::from_int(3));
    }

    #[test]
    fn hyperharmonic_values() {
        assert_eq!(hyperharmonic(3, 0), rat(1, 3));
        assert_eq!(hyperharmonic(3, 1), rat(11, 6));
        assert_eq!(hyperharmonic(2, -1), rat(0, 1));
        assert_eq!(hyperharmonic(0, 2), rat(0, 1));
        assert_eq!(hyperharmonic(2, 2), rat(5, 2));
    }
}
