//! Shorthand used by the catalog: integer-indexed wrappers that return zero
//! outside the natural range, so sums can be transcribed as printed.

use num_traits::{One, Zero};

use super::{Bound, Case, LedgerError};
use crate::matrices::{self, stirling_matrix_first_type, stirling_matrix_second_type};
use crate::numbers::{self, Kind, StirlingParams};
use crate::ring::{binomial, factorial_int, rat};
use crate::{Matrix, Poly, Rational, Symbol};

pub(crate) type R = Result<Poly, LedgerError>;
pub(crate) type M = Result<Matrix, LedgerError>;

pub(crate) use Bound::{Cap, C, D, F, V};
pub(crate) use Symbol::{Lambda as LAM, Mu as MU, X, Y};

pub(crate) fn int(n: i64) -> Poly {
    Poly::from_int(n)
}

pub(crate) fn q(p: i64, d: i64) -> Poly {
    Poly::constant(rat(p, d))
}

pub(crate) fn sign(e: i64) -> Poly {
    int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub(crate) fn binom(n: i64, k: i64) -> Poly {
    if n < 0 || k < 0 || k > n {
        return Poly::zero();
    }
    Poly::constant(Rational::from_integer(binomial(n, k)))
}

/// `1 / C(n, k)`; the catalog only calls it where the binomial is nonzero.
pub(crate) fn inv_binom(n: i64, k: i64) -> Poly {
    assert!(0 <= k && k <= n, "1/C({n},{k}) undefined");
    Poly::constant(Rational::new(1.into(), binomial(n, k)))
}

pub(crate) fn fact(n: i64) -> Poly {
    assert!(n >= 0, "{n}!");
    Poly::constant(Rational::from_integer(factorial_int(n as u64)))
}

pub(crate) fn inv_fact(n: i64) -> Poly {
    assert!(n >= 0, "1/{n}!");
    Poly::constant(Rational::new(1.into(), factorial_int(n as u64)))
}

pub(crate) fn gff(x: &Poly, step: &Poly, k: i64) -> Poly {
    crate::ring::gff(x, step, k as usize)
}

/// Ordinary falling factorial `(x)_k`.
pub(crate) fn fall(x: &Poly, k: i64) -> Poly {
    gff(x, &Poly::one(), k)
}

pub(crate) fn rising(x: &Poly, k: i64) -> Poly {
    crate::ring::rising(x, k as usize)
}

/// `sum_{k=lo}^{hi} f(k)`; empty sums are zero.
pub(crate) fn sum(lo: i64, hi: i64, mut f: impl FnMut(i64) -> R) -> R {
    let mut acc = Poly::zero();
    for k in lo..=hi {
        acc = acc + f(k)?;
    }
    Ok(acc)
}

pub(crate) fn beta(m: i64, w: i64, lam: &Poly, x: &Poly) -> Poly {
    if m < 0 {
        return Poly::zero();
    }
    numbers::beta(m as usize, w, lam, x)
}

pub(crate) fn alpha(m: i64, w: i64, lam: &Poly, x: &Poly) -> Poly {
    if m < 0 {
        return Poly::zero();
    }
    numbers::alpha(m as usize, w, lam, x)
}

/// Higher-order Bernoulli polynomial `B_m^{(w)}(x)`.
pub(crate) fn bern(m: i64, w: i64, x: &Poly) -> Poly {
    beta(m, w, &Poly::zero(), x)
}

/// Higher-order Bernoulli polynomial of the second kind `b_m^{(w)}(x)`.
pub(crate) fn bsec(m: i64, w: i64, x: &Poly) -> Poly {
    if m < 0 {
        return Poly::zero();
    }
    numbers::bernoulli_second(m as usize, w, x)
}

fn gen(kind: Kind, m: i64, k: i64, mu: &Poly, lam: &Poly, x: &Poly) -> R {
    if m < 0 || k < 0 || k > m {
        return Ok(Poly::zero());
    }
    let p = StirlingParams::new(mu.clone(), lam.clone(), x.clone())?;
    Ok(numbers::stirling_gen(kind, m as usize, k as usize, &p)?)
}

/// `S_1(m, k | mu, lambda, x)`.
pub(crate) fn s1g(m: i64, k: i64, mu: &Poly, lam: &Poly, x: &Poly) -> R {
    gen(Kind::First, m, k, mu, lam, x)
}

/// `S_2(m, k | mu, lambda, x)`.
pub(crate) fn s2g(m: i64, k: i64, mu: &Poly, lam: &Poly, x: &Poly) -> R {
    gen(Kind::Second, m, k, mu, lam, x)
}

/// `S_1(m, k | 1, lambda, x)`, the form used throughout the second-type identities.
pub(crate) fn s1l(m: i64, k: i64, lam: &Poly, x: &Poly) -> R {
    s1g(m, k, &Poly::one(), lam, x)
}

pub(crate) fn s2l(m: i64, k: i64, lam: &Poly, x: &Poly) -> R {
    s2g(m, k, &Poly::one(), lam, x)
}

/// Signed classical `s(m, k)`.
pub(crate) fn s1(m: i64, k: i64) -> Poly {
    s1l(m, k, &Poly::zero(), &Poly::zero()).expect("valid params")
}

/// Classical `{m k}`.
pub(crate) fn s2(m: i64, k: i64) -> Poly {
    s2l(m, k, &Poly::zero(), &Poly::zero()).expect("valid params")
}

/// Unsigned classical `[m k]`.
pub(crate) fn ubr(m: i64, k: i64) -> Poly {
    if m < 0 || k < 0 || k > m {
        return Poly::zero();
    }
    numbers::stirling1_unsigned(m as usize, k as usize)
}

fn idx3(n: i64, k: i64, r: i64) -> Option<(usize, usize, usize)> {
    (n >= 0 && k >= 0 && r >= 0).then_some((n as usize, k as usize, r as usize))
}

/// `[n k]_r`.
pub(crate) fn rbr(n: i64, k: i64, r: i64) -> Poly {
    idx3(n, k, r).map_or_else(Poly::zero, |(n, k, r)| numbers::r_stirling1(n, k, r))
}

/// `{n k}_r`.
pub(crate) fn rbc(n: i64, k: i64, r: i64) -> Poly {
    idx3(n, k, r).map_or_else(Poly::zero, |(n, k, r)| numbers::r_stirling2(n, k, r))
}

/// Carlitz weighted `R_1(m, k, x)`.
pub(crate) fn r1(m: i64, k: i64, x: &Poly) -> R {
    Ok(sign(m - k) * s1l(m, k, &Poly::zero(), &-x)?)
}

/// Carlitz weighted `R_2(m, k, x)`.
pub(crate) fn r2(m: i64, k: i64, x: &Poly) -> R {
    s2l(m, k, &Poly::zero(), &-x)
}

/// Carlitz degenerate `S_1(m, k | lambda)`.
pub(crate) fn ds1(m: i64, k: i64, lam: &Poly) -> R {
    Ok(sign(m - k) * s1l(m, k, lam, &Poly::zero())?)
}

/// Carlitz degenerate `S(m, k | lambda)`.
pub(crate) fn ds2(m: i64, k: i64, lam: &Poly) -> R {
    s2l(m, k, lam, &Poly::zero())
}

pub(crate) fn hh(m: i64, r: i64) -> Poly {
    Poly::constant(numbers::hyperharmonic(m, r))
}

pub(crate) fn lah(m: i64, k: i64) -> Poly {
    if m < 0 || k < 0 {
        return Poly::zero();
    }
    numbers::lah_closed(m as usize, k as usize)
}

// matrices

pub(crate) fn pascal(n: usize, lam: &Poly, x: &Poly) -> Matrix {
    matrices::pascal(n, lam, x)
}

pub(crate) fn bmat(n: usize, w: i64, lam: &Poly, x: &Poly) -> Matrix {
    matrices::bernoulli_matrix(n, w, lam, x)
}

pub(crate) fn lmat(n: usize, w: i64, lam: &Poly, x: &Poly) -> Matrix {
    matrices::l_matrix(n, w, lam, x)
}

/// `S_n[mu, lambda, x]` (second kind) or `s_n[...]` (first kind).
pub(crate) fn smat(n: usize, kind: Kind, mu: &Poly, lam: &Poly, x: &Poly) -> M {
    let p = StirlingParams::new(mu.clone(), lam.clone(), x.clone())?;
    Ok(stirling_matrix_first_type(n, &p, kind)?)
}

/// `G_{n,h}[1, lambda, x]`.
pub(crate) fn big_g(n: usize, h: i64, lam: &Poly, x: &Poly) -> M {
    Ok(stirling_matrix_second_type(n, h, lam, x, Kind::Second)?)
}

/// `g_{n,h}[1, lambda, x]`.
pub(crate) fn small_g(n: usize, h: i64, lam: &Poly, x: &Poly) -> M {
    Ok(stirling_matrix_second_type(n, h, lam, x, Kind::First)?)
}

pub(crate) fn mul(a: &Matrix, b: &Matrix) -> M {
    Ok(a.mul(b)?)
}

pub(crate) fn product(ms: &[Matrix]) -> M {
    Ok(Matrix::product(ms)?)
}

/// Zeroes the columns `j < h` where the shifted identities say nothing.
pub(crate) fn cols_from(m: &Matrix, h: i64) -> Matrix {
    m.masked(|_, j| j as i64 >= h)
}

// grids

pub(crate) fn pt(bind: &[(Symbol, (i64, i64))]) -> Vec<(Symbol, Rational)> {
    bind.iter().map(|&(s, (p, d))| (s, rat(p, d))).collect()
}

/// Default rational sample points: each listed symbol cycles through the
/// sample set `{1, -1, 1/2, -1/2, 2, 3/5}` at a different phase.
pub(crate) fn samples(syms: &[Symbol], count: usize) -> Vec<Vec<(Symbol, Rational)>> {
    const S: [(i64, i64); 6] = [(1, 2), (-1, 1), (2, 1), (3, 5), (-1, 2), (1, 1)];
    (0..count).map(|c| syms.iter().enumerate().map(|(k, &s)| (s, rat(S[(c + 2 * k) % 6].0, S[(c + 2 * k) % 6].1))).collect()).collect()
}

pub(crate) fn m_of(c: &Case) -> usize {
    c.u("n")
}

/// Maximum of two earlier indices, for lower bounds like `j >= max(h, m)`.
pub(crate) fn max_hm(c: &Case) -> i64 {
    c.i("h").max(c.i("m")).max(0)
}

pub(crate) fn max0h(c: &Case) -> i64 {
    c.i("h").max(0)
}

/// Bindings where no `(x - lambda | lambda)_k` vanishes, so R is defined.
pub(crate) fn r_points() -> Vec<Vec<(Symbol, Rational)>> {
    vec![
        pt(&[(LAM, (1, 2)), (X, (1, 3))]),
        pt(&[(LAM, (-1, 1)), (X, (2, 1))]),
        pt(&[(LAM, (2, 1)), (X, (3, 5))]),
        pt(&[(LAM, (3, 5)), (X, (-1, 1))]),
    ]
}

// Ordinary power series, used as an independent route to the classical
// Bernoulli polynomials (no exponential-convolution machinery involved).

fn ops_mul(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    (0..a.len().min(b.len())).map(|m| (0..=m).fold(Poly::zero(), |acc, k| acc + a[k].clone() * &b[m - k])).collect()
}

fn ops_pow(a: &[Poly], w: i64) -> Vec<Poly> {
    assert!(a[0].is_one());
    let base = if w < 0 {
        let mut inv = vec![Poly::one()];
        for m in 1..a.len() {
            let s = (1..=m).fold(Poly::zero(), |acc, k| acc + a[k].clone() * &inv[m - k]);
            inv.push(-s);
        }
        inv
    } else {
        a.to_vec()
    };
    let mut acc: Vec<Poly> = (0..a.len()).map(|m| if m == 0 { Poly::one() } else { Poly::zero() }).collect();
    for _ in 0..w.unsigned_abs() {
        acc = ops_mul(&acc, &base);
    }
    acc
}

/// `B_m^{(w)}(x)` from `(t/(e^t - 1))^w e^{xt}` as an ordinary series.
pub(crate) fn classical_bernoulli(m: i64, w: i64, x: &Poly) -> Poly {
    let n = m as usize;
    let f: Vec<Poly> = (0..=n).map(|k| inv_fact(k as i64 + 1)).collect();
    let e: Vec<Poly> = (0..=n).map(|k| x.pow(k as u32) * inv_fact(k as i64)).collect();
    ops_mul(&ops_pow(&f, -w), &e)[n].clone() * fact(m)
}

/// `b_m^{(w)}(x)` from `(t/log(1+t))^w (1+t)^x` as an ordinary series.
pub(crate) fn classical_bernoulli_second(m: i64, w: i64, x: &Poly) -> Poly {
    let n = m as usize;
    let f: Vec<Poly> = (0..=n).map(|k| sign(k as i64) * q(1, k as i64 + 1)).collect();
    let e: Vec<Poly> = (0..=n).map(|k| fall(x, k as i64) * inv_fact(k as i64)).collect();
    ops_mul(&ops_pow(&f, -w), &e)[n].clone()
}

/// `C(i, j) / C(i - h, j - h)` for `i >= j >= h`.
pub(crate) fn ratio(i: i64, j: i64, h: i64) -> Poly {
    binom(i, j) * inv_binom(i - h, j - h)
}
