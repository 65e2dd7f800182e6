//! Second-type Stirling matrices and the Bernoulli/Stirling identities they encode.

use num_traits::Zero;

use crate::ledger::kit::*;
use crate::ledger::{Case, IdentitySpec as Id, LedgerError, Point};
use crate::matrices::g_factor;
use crate::{Matrix, Poly};

const THM: &str = "§4.2 Thm 4.2 and proof, 'In particular,'";
const COR3: &str = "§4.2 Corollary 4.3, 'in terms of the Stirling numbers'";
const SEC: &str = "§4.2, 'and in particular'";
const ORTH: &str = "§4.2, 'the generalized orthogonality relations'";
const COR5: &str = "§4.2 Corollary 4.5, 'also entails following'";
const EVIDENT: &str = "§4.2, 'It is evident from definitions'";
const SIGN: &str = "§4.2, 'may be specified according as'";

type Pair = Result<(Poly, Poly), LedgerError>;
type MatPair = Result<(Matrix, Matrix), LedgerError>;

fn lxy(c: &Case) -> (Poly, Poly, Poly) {
    (c.lam(), c.x(), c.y())
}

fn ijh(c: &Case) -> (i64, i64, i64) {
    (c.i("i"), c.i("j"), c.i("h"))
}

/// Scalar identity over `h in -3..=3`, `0 <= i <= N`, `max(h, 0) <= j <= i`.
fn shifted(id: &'static str, anchor: &'static str, f: fn(&Case) -> Pair) -> Id {
    Id::new(id, anchor).idx("h", D(-3), D(3)).idx("i", C(0), Cap(0)).side_lo("j", F(max0h, "max(h,0)"), V("i", 0)).syms(&[LAM, X, Y]).eq(f)
}

/// Scalar identity over `0 <= h <= 3` (no tie to `j`), `0 <= j <= i <= N`.
fn nonneg(id: &'static str, anchor: &'static str, f: fn(&Case) -> Pair) -> Id {
    Id::new(id, anchor).side_lo("h", C(0), D(3)).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).syms(&[LAM, X, Y]).eq(f)
}

/// Scalar identity for `i >= j >= h >= 0`.
fn chain(id: &'static str, anchor: &'static str, f: fn(&Case) -> Pair) -> Id {
    Id::new(id, anchor).side_lo("h", C(0), D(3)).idx("i", C(0), Cap(0)).side_lo("j", V("h", 0), V("i", 0)).syms(&[LAM, X, Y]).eq(f)
}

/// Matrix identity over `h in -2..=2` and `n <= N`, compared on columns `j >= h`.
fn masked(id: &'static str, f: fn(&Case, usize, i64) -> MatPair) -> Id {
    Id::new(id, THM).idx("h", D(-2), D(2)).side("n", C(1), Cap(0)).syms(&[LAM, X, Y]).mat(move |c| {
        let (n, h) = (m_of(c), c.i("h"));
        let (l, r) = f(c, n, h)?;
        Ok((cols_from(&l, h), cols_from(&r, h)))
    })
}

fn g_points() -> Vec<Point> {
    vec![
        pt(&[(LAM, (1, 2)), (X, (1, 3))]),
        pt(&[(LAM, (-1, 1)), (X, (-3, 2))]),
        pt(&[(LAM, (2, 1)), (X, (3, 5))]),
        pt(&[(LAM, (3, 5)), (X, (-1, 1))]),
    ]
}

fn g_chain(n: usize, lam: &Poly, x: &Poly) -> Result<Vec<Matrix>, LedgerError> {
    Ok((1..=n).rev().map(|k| g_factor(n, k, lam, x)).collect::<Result<Vec<_>, _>>()?)
}

pub(super) fn specs() -> Vec<Id> {
    vec![
        Id::new("g-inverse", "§4.2, 'It is obvious from'").idx("h", D(-2), D(2)).side("n", C(1), Cap(0)).syms(&[LAM, X]).mat(|c| {
            let (n, h, l, x) = (m_of(c), c.i("h"), c.lam(), c.x());
            Ok((mul(&small_g(n, h, &l, &x)?, &big_g(n, h, &l, &x)?)?, Matrix::identity(n)))
        }),
        masked("thm-bs-1a", |c, n, h| {
            let (l, x, y) = lxy(c);
            Ok((big_g(n, h, &l, &-&x)?, mul(&bmat(n, h, &l, &(&x - &y)), &big_g(n, 0, &l, &-&y)?)?))
        }),
        masked("thm-bs-1b", |c, n, h| {
            let (l, x, y) = lxy(c);
            Ok((big_g(n, h, &l, &-&x)?, mul(&big_g(n, 0, &l, &-&y)?, &lmat(n, -h, &l, &(&x - &y)))?))
        }),
        masked("thm-bs-2a", |c, n, h| {
            let (l, x, y) = lxy(c);
            Ok((small_g(n, h, &l, &-&x)?, mul(&small_g(n, 0, &l, &-&y)?, &bmat(n, -h, &l, &(&y - &x)))?))
        }),
        masked("thm-bs-2b", |c, n, h| {
            let (l, x, y) = lxy(c);
            Ok((small_g(n, h, &l, &-&x)?, mul(&lmat(n, h, &l, &(&y - &x)), &small_g(n, 0, &l, &-&y)?)?))
        }),
        Id::new("thm-bs-p1", THM).side("n", C(1), Cap(0)).syms(&[LAM, X, Y]).mat(|c| {
            let (n, (l, x, y)) = (m_of(c), lxy(c));
            Ok((pascal(n, &l, &(&x - &y)), mul(&big_g(n, 0, &l, &-&x)?, &small_g(n, 0, &l, &-&y)?)?))
        }),
        Id::new("thm-bs-p2", THM).side("n", C(1), Cap(0)).syms(&[LAM, X, Y]).mat(|c| {
            let (n, (l, x, y)) = (m_of(c), lxy(c));
            Ok((pascal(n, &int(1), &(&y - &x)), mul(&small_g(n, 0, &l, &-&x)?, &big_g(n, 0, &l, &-&y)?)?))
        }),
        shifted("eq-5", THM, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let rhs = sum(j, i, |k| Ok(binom(i, k) * beta(i - k, h, &l, &(&x - &y)) * s2l(k, j, &l, &-&y)?))?;
            Ok((ratio(i, j, h) * s2l(i - h, j - h, &l, &-&x)?, rhs))
        }),
        Id::new("eq-50", THM)
            .idx("i", C(0), Cap(1))
            .idx("j", C(0), V("i", 0))
            .syms(&[LAM, X])
            .rational(samples(&[LAM, X], 4))
            .nonzero(&[LAM])
            .eq(|c| {
                let (i, j, l, x) = (c.i("i"), c.i("j"), c.lam(), c.x());
                let inv = Poly::constant(l.as_constant().expect("rational point").recip());
                let lhs = s2l(i, j, &inv, &(&x * &inv))?;
                Ok((lhs, inv.pow((i - j) as u32) * s1l(i, j, &l, &-&x)?))
            }),
        shifted("eq-5a", THM, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let rhs = sum(j, i, |k| Ok(binom(i, k) * alpha(i - k, h, &l, &(&y - &x)) * s1l(k, j, &l, &-&y)?))?;
            Ok((ratio(i, j, h) * s1l(i - h, j - h, &l, &-&x)?, rhs))
        }),
        shifted("eq-6", COR3, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let rhs = sum(j, i, |k| Ok(ratio(i, k, h) * s2l(i - h, k - h, &l, &-&x)? * s1l(k, j, &l, &-&y)?))?;
            Ok((binom(i, j) * beta(i - j, h, &l, &(&x - &y)), rhs))
        }),
        shifted("eq-6a", COR3, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let rhs = sum(j, i, |k| Ok(ratio(i, k, h) * s1l(i - h, k - h, &l, &-&x)? * s2l(k, j, &l, &-&y)?))?;
            Ok((binom(i, j) * alpha(i - j, h, &l, &(&y - &x)), rhs))
        }),
        Id::new("cor-bst1-beta", COR3).idx("i", C(0), Cap(1)).syms(&[LAM, X]).eq(|c| {
            let (i, l, x) = (c.i("i"), c.lam(), c.x());
            let rhs = sum(0, i, |k| Ok(q(1, k + 1) * s2l(i, k, &l, &-&x)? * fall(&(&l - &int(1)), k)))?;
            Ok((beta(i, 1, &l, &x), rhs))
        }),
        Id::new("cor-bst1-alpha", COR3).idx("i", C(0), Cap(1)).syms(&[LAM, X]).eq(|c| {
            let (i, l, x) = (c.i("i"), c.lam(), c.x());
            let rhs = sum(0, i, |k| Ok(q(1, k + 1) * s1l(i, k, &l, &x)? * gff(&int(1), &l, k + 1)))?;
            Ok((alpha(i, 1, &l, &x), rhs))
        }),
        Id::new("eq-2", SEC)
            .idx("h", D(-2), D(2))
            .idx("m", D(-2), D(2))
            .idx("i", C(0), Cap(0))
            .side_lo("j", F(max_hm, "max(h,m,0)"), V("i", 0))
            .syms(&[LAM, X, Y])
            .eq(|c| {
                let ((i, j, h), m, (l, x, y)) = (ijh(c), c.i("m"), lxy(c));
                let rhs = sum(j, i, |k| {
                    Ok(binom(i - m, k - m) * inv_binom(i - h, k - h) * s2l(i - h, k - h, &l, &-&x)? * s1l(k - m, j - m, &l, &-&y)?)
                })?;
                Ok((binom(i - m, j - m) * beta(i - j, h - m, &l, &(&x - &y)), rhs))
            }),
        Id::new("B-positive-order", SEC).side_lo("l", C(0), D(3)).idx("i", C(0), Cap(1)).idx("j", C(0), V("i", 0)).syms(&[X]).eq(|c| {
            let (l, i, j, x) = (c.i("l"), c.i("i"), c.i("j"), c.x());
            let rhs = sum(j, i, |k| Ok(inv_binom(l + k, l) * r2(i, k, &x)? * s1(l + k, l + j)))?;
            Ok((binom(i, j) * inv_binom(j + l, j) * bern(i - j, l, &x), rhs))
        }),
        Id::new("B-self-order", SEC).idx("i", C(0), Cap(1)).eq(|c| {
            let i = c.i("i");
            let rhs = sum(0, i, |k| Ok(inv_binom(i + k, i) * s2(i, k) * s1(i + k, i)))?;
            Ok((bern(i, i, &Poly::zero()), rhs))
        }),
        Id::new("gen-orthogonality-1", ORTH).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).syms(&[MU, LAM, X, Y]).eq(|c| {
            let (i, j, mu, (l, x, y)) = (c.i("i"), c.i("j"), c.mu(), lxy(c));
            let rhs = sum(j, i, |k| Ok(s2g(i, k, &mu, &l, &-&x)? * s1g(k, j, &mu, &l, &-&y)?))?;
            Ok((binom(i, j) * gff(&(&x - &y), &l, i - j), rhs))
        }),
        Id::new("gen-orthogonality-2", ORTH).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).syms(&[MU, LAM, X, Y]).eq(|c| {
            let (i, j, mu, (l, x, y)) = (c.i("i"), c.i("j"), c.mu(), lxy(c));
            let rhs = sum(j, i, |k| Ok(s1g(i, k, &mu, &l, &-&x)? * s2g(k, j, &mu, &l, &-&y)?))?;
            Ok((binom(i, j) * gff(&(&y - &x), &mu, i - j), rhs))
        }),
        shifted("eq-7a", COR5, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let rhs = sum(j, i, |k| Ok(binom(k, j) * s2l(i, k, &l, &-&y)? * alpha(k - j, -h, &l, &(&x - &y))))?;
            Ok((ratio(i, j, h) * s2l(i - h, j - h, &l, &-&x)?, rhs))
        }),
        shifted("eq-7", COR5, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let rhs = sum(j, i, |k| Ok(binom(k, j) * s1l(i, k, &l, &-&y)? * beta(k - j, -h, &l, &(&y - &x))))?;
            Ok((ratio(i, j, h) * s1l(i - h, j - h, &l, &-&x)?, rhs))
        }),
        Id::new("cor-bst2-1", COR5).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).syms(&[LAM, X]).eq(|c| {
            let (i, j, l, x) = (c.i("i"), c.i("j"), c.lam(), c.x());
            let rhs = sum(j, i, |k| Ok(binom(k, j) * ds2(i, k, &l)? * alpha(k - j, 1, &l, &x)))?;
            Ok((q(j + 1, i + 1) * s2l(i + 1, j + 1, &l, &-&x)?, rhs))
        }),
        Id::new("cor-bst2-2", COR5).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).syms(&[LAM, X]).eq(|c| {
            let (i, j, l, x) = (c.i("i"), c.i("j"), c.lam(), c.x());
            let rhs = sum(j, i, |k| Ok(binom(k, j) * sign(i - k) * ds1(i, k, &l)? * beta(k - j, 1, &l, &x)))?;
            Ok((q(j + 1, i + 1) * s1l(i + 1, j + 1, &l, &x)?, rhs))
        }),
        Id::new("G-factorization-1", "§4.2, 'In consequence of Theorem'").side("n", C(1), Cap(1)).syms(&[LAM, X]).rational(g_points()).mat(
            |c| {
                let (n, l, x) = (m_of(c), c.lam(), c.x());
                let mut fs = g_chain(n, &l, &x)?;
                fs.push(big_g(n, 0, &l, &Poly::zero())?);
                Ok((big_g(n, 0, &l, &-&x)?, product(&fs)?))
            },
        ),
        Id::new("G-factorization-2", "§4.2, 'In consequence of Theorem'").side("n", C(1), Cap(1)).syms(&[LAM, X]).rational(g_points()).mat(
            |c| {
                let (n, l, x) = (m_of(c), c.lam(), c.x());
                let mut fs = vec![big_g(n, 0, &l, &Poly::zero())?];
                fs.extend(g_chain(n, &int(1), &x)?);
                Ok((big_g(n, 0, &l, &-&x)?, product(&fs)?))
            },
        ),
        Id::new("eq-14", EVIDENT).idx("m", C(0), Cap(1)).side_lo("h", C(0), D(3)).syms(&[LAM, X]).eq(|c| {
            let (m, h, l, x) = (c.i("m"), c.i("h"), c.lam(), c.x());
            Ok((beta(m, -h, &l, &x), inv_binom(m + h, h) * s2l(m + h, h, &l, &-&x)?))
        }),
        Id::new("eq-14a", EVIDENT).idx("m", C(0), Cap(1)).side_lo("h", C(0), D(3)).syms(&[LAM, X]).eq(|c| {
            let (m, h, l, x) = (c.i("m"), c.i("h"), c.lam(), c.x());
            Ok((alpha(m, -h, &l, &x), inv_binom(m + h, h) * s1l(m + h, h, &l, &x)?))
        }),
        nonneg("eq-s2s", SIGN, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let m = i + h;
            let rhs = sum(j, i, |k| Ok(binom(m, k) * s2l(m - k, h, &l, &-&x)? * s2l(k, j, &l, &-&y)?))?;
            Ok((binom(h + j, j) * s2l(m, j + h, &l, &-(&x + &y))?, rhs))
        }),
        nonneg("eq-s1s", SIGN, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let m = i + h;
            let rhs = sum(j, i, |k| Ok(binom(m, k) * s1l(m - k, h, &l, &-&x)? * s1l(k, j, &l, &-&y)?))?;
            Ok((binom(h + j, j) * s1l(m, j + h, &l, &-(&x + &y))?, rhs))
        }),
        nonneg("eq-7a1", SIGN, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let rhs = sum(j, i, |k| Ok(binom(k, j) * alpha(k - j, h, &l, &x) * s2l(i, k, &l, &-&y)?))?;
            Ok((ratio(i, j, -h) * s2l(i + h, j + h, &l, &-(&x + &y))?, rhs))
        }),
        nonneg("eq-71", SIGN, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let rhs = sum(j, i, |k| Ok(binom(k, j) * beta(k - j, h, &l, &x) * s1l(i, k, &l, &-&y)?))?;
            Ok((ratio(i, j, -h) * s1l(i + h, j + h, &l, &-(&y - &x))?, rhs))
        }),
        chain("eq-51", SIGN, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let rhs = sum(j, i, |k| Ok(binom(i, k) * beta(i - k, h, &l, &x) * s2l(k, j, &l, &-&y)?))?;
            Ok((ratio(i, j, h) * s2l(i - h, j - h, &l, &-(&x + &y))?, rhs))
        }),
        chain("eq-5a1", SIGN, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let rhs = sum(j, i, |k| Ok(binom(i, k) * alpha(i - k, h, &l, &x) * s1l(k, j, &l, &-&y)?))?;
            Ok((ratio(i, j, h) * s1l(i - h, j - h, &l, &-(&y - &x))?, rhs))
        }),
        chain("eq-7a2", SIGN, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let rhs = sum(j, i, |k| Ok(binom(k, j - h) * s2l(i, k, &l, &-&y)? * s1l(k - j + h, h, &l, &-&x)?))?;
            Ok((binom(i, h) * s2l(i - h, j - h, &l, &-(&y - &x))?, rhs))
        }),
        chain("eq-72", SIGN, |c| {
            let ((i, j, h), (l, x, y)) = (ijh(c), lxy(c));
            let rhs = sum(j, i, |k| Ok(binom(k, j - h) * s1l(i, k, &l, &-&y)? * s2l(k - j + h, h, &l, &-&x)?))?;
            Ok((binom(i, h) * s1l(i - h, j - h, &l, &-(&y - &x))?, rhs))
        }),
        chain("eq-7a2-mu", "§4.2, 'still valid for'", |c| {
            let ((i, j, h), (l, x, y), mu) = (ijh(c), lxy(c), c.mu());
            let rhs = sum(j, i, |k| Ok(binom(k, j - h) * s2g(i, k, &mu, &l, &-&y)? * s1g(k - j + h, h, &mu, &l, &-&x)?))?;
            Ok((binom(i, h) * s2g(i - h, j - h, &mu, &l, &-(&y - &x))?, rhs))
        })
        .syms(&[MU, LAM, X, Y])
        .at(samples(&[MU, LAM, X, Y], 3)),
        chain("eq-72-mu", "§4.2, 'still valid for'", |c| {
            let ((i, j, h), (l, x, y), mu) = (ijh(c), lxy(c), c.mu());
            let rhs = sum(j, i, |k| Ok(binom(k, j - h) * s1g(i, k, &mu, &l, &-&y)? * s2g(k - j + h, h, &mu, &l, &-&x)?))?;
            Ok((binom(i, h) * s1g(i - h, j - h, &mu, &l, &-(&y - &x))?, rhs))
        })
        .syms(&[MU, LAM, X, Y])
        .at(samples(&[MU, LAM, X, Y], 3)),
    ]
}
