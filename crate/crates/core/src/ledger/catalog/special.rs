//! Special cases: Carlitz numbers, r-Stirling numbers, hyperharmonic
//! numbers and Lah numbers as instances of the general identities.

use num_traits::{One, Zero};

use crate::ledger::kit::*;
use crate::ledger::{Case, IdentitySpec as Id, LedgerError};
use crate::Poly;

const SHIFT: &str = "§5, 'In previous section we mentioned some of them'";
const CARLITZ: &str = "§5.1, 'Carlitz's weighted Stirling numbers and Bernoulli'";
const RST: &str = "§5.2, 'The following are special cases'";
const HARM: &str = "§5.3, 'A combinatorial proof of this fact'";
const LAH: &str = "§5.4, 'Then, it follows from'";
const RISING: &str = "§5.4, 'In general, for arbitrary'";

type Pair = Result<(Poly, Poly), LedgerError>;

fn ij(c: &Case) -> (i64, i64) {
    (c.i("i"), c.i("j"))
}

fn pw(base: i64, e: i64) -> Poly {
    int(base).pow(e as u32)
}

/// Triangle `0 <= j <= i <= N` (shifted by `lo`), optionally over integer `r` or `p`.
fn tri(id: &'static str, anchor: &'static str, lo: i64, f: fn(&Case) -> Pair) -> Id {
    Id::new(id, anchor).idx("i", C(lo), Cap(lo)).idx("j", C(lo), V("i", 0)).eq(f)
}

fn tri_r(id: &'static str, anchor: &'static str, lo: i64, r_lo: i64, f: fn(&Case) -> Pair) -> Id {
    Id::new(id, anchor).side_lo("r", C(r_lo), D(4)).idx("i", C(lo), Cap(lo)).idx("j", C(lo), V("i", 0)).eq(f)
}

fn tri_rp(id: &'static str, anchor: &'static str, f: fn(&Case) -> Pair) -> Id {
    Id::new(id, anchor).side_lo("r", C(0), D(4)).side_lo("p", C(0), D(4)).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).eq(f)
}

fn tri_x(id: &'static str, anchor: &'static str, lo: i64, f: fn(&Case) -> Pair) -> Id {
    tri(id, anchor, lo, f).syms(&[X])
}

fn tri_hx(id: &'static str, anchor: &'static str, f: fn(&Case) -> Pair) -> Id {
    Id::new(id, anchor).side_lo("h", C(0), D(3)).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).syms(&[X]).eq(f)
}

fn rising_pair(id: &'static str, f: fn(&Case) -> Pair) -> Id {
    Id::new(id, RISING).idx("h", D(-3), D(3)).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).syms(&[X, Y]).eq(f)
}

fn harm(id: &'static str, r_lo: i64, i_lo: i64, f: fn(&Case) -> Pair) -> Id {
    Id::new(id, HARM).side_lo("r", C(r_lo), D(4)).idx("i", C(i_lo), Cap(i_lo)).eq(f)
}

fn m1(c: &Case) -> (i64, i64) {
    (c.i("m"), c.i("k"))
}

pub(super) fn specs() -> Vec<Id> {
    vec![
        tri("sec5-shift-1", SHIFT, 0, |c| {
            let ((i, j), l) = (ij(c), c.lam());
            Ok((s1l(i, j, &l, &(&l - &int(1)))?, sign(i - j) * ds1(i + 1, j + 1, &l)?))
        })
        .syms(&[LAM]),
        tri("sec5-shift-2", SHIFT, 0, |c| {
            let ((i, j), l) = (ij(c), c.lam());
            Ok((s2l(i, j, &l, &(&l - &int(1)))?, ds2(i + 1, j + 1, &l)?))
        })
        .syms(&[LAM]),
        tri_x("sec5.1-1", CARLITZ, 1, |c| {
            let ((i, j), x) = (ij(c), c.x());
            let rhs = sum(j, i, |k| Ok(q(i, k) * r2(i - 1, k - 1, &x)? * s1(k, j)))?;
            Ok((binom(i, j) * bern(i - j, 1, &x), rhs))
        }),
        Id::new("sec5.1-2", CARLITZ).idx("i", C(0), Cap(1)).syms(&[X]).eq(|c| {
            let (i, x) = (c.i("i"), c.x());
            let rhs = sum(0, i, |k| Ok(sign(k) * fact(k) * q(1, k + 1) * r2(i, k, &x)?))?;
            Ok((bern(i, 1, &x), rhs))
        }),
        Id::new("sec5.1-3", CARLITZ).idx("i", C(0), Cap(1)).syms(&[X]).eq(|c| {
            let (i, x) = (c.i("i"), c.x());
            let rhs = sum(0, i, |k| Ok(sign(i - k) * q(1, k + 1) * r1(i, k, &x)?))?;
            Ok((fact(i) * bsec(i, 1, &-&x), rhs))
        }),
        Id::new("sec5.1-4", CARLITZ).idx("i", C(1), Cap(2)).eq(|c| {
            let i = c.i("i");
            Ok((sign(i - 1) * fact(i - 1), sum(0, i, |k| Ok(int(k + 1) * s1(i + 1, k + 1)))?))
        }),
        tri_hx("sec5.1-5", CARLITZ, |c| {
            let ((i, j), h, x) = (ij(c), c.i("h"), c.x());
            let rhs = sum(j, i, |k| Ok(s2(i, k) * bsec(k - j, h, &x) * fact(k)))?;
            Ok((fact(i) * inv_fact(i + h) * r2(i + h, j + h, &x)?, inv_fact(j + h) * rhs))
        }),
        Id::new("sec5.1-6", CARLITZ).idx("i", C(0), Cap(1)).syms(&[X]).eq(|c| {
            let (i, x) = (c.i("i"), c.x());
            let lhs = q(1, i + 1) * ((&x + &int(1)).pow(i as u32 + 1) - x.pow(i as u32 + 1));
            Ok((lhs, sum(0, i, |k| Ok(s2(i, k) * bsec(k, 1, &x) * fact(k)))?))
        }),
        tri_hx("sec5.1-7", CARLITZ, |c| {
            let ((i, j), h, x) = (ij(c), c.i("h"), c.x());
            let lhs = sign(i - j) * binom(i, j) * inv_binom(i + h, j + h) * r1(i + h, j + h, &-&x)?;
            Ok((lhs, sum(j, i, |k| Ok(binom(k, j) * s1(i, k) * bern(k - j, h, &x)))?))
        }),
        Id::new("sec5.1-8", CARLITZ).side_lo("h", C(0), D(3)).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).eq(|c| {
            let ((i, j), h) = (ij(c), c.i("h"));
            let lhs = binom(i, j) * inv_binom(i + h, j + h) * s1(i + h + 1, j + h + 1);
            Ok((lhs, sum(j, i, |k| Ok(binom(k, j) * s1(i + 1, k + 1) * bern(k - j, h, &Poly::zero())))?))
        }),
        Id::new("eq-17", CARLITZ).idx("m", C(1), Cap(2)).eq(|c| {
            let m = c.i("m");
            Ok((s1g(m, 1, &Poly::one(), &Poly::zero(), &int(1))?, s1(m, 1) + int(m) * s1(m - 1, 1)))
        }),
        Id::new("eq-17-closed", CARLITZ).idx("m", C(1), Cap(2)).eq(|c| {
            let m = c.i("m");
            let closed = if m == 1 { int(1) } else { sign(m) * fact(m - 2) };
            Ok((s1g(m, 1, &Poly::one(), &Poly::zero(), &int(1))?, closed))
        }),
        Id::new("eq-11", RST).idx("m", C(0), Cap(0)).idx("k", C(0), V("m", 0)).syms(&[LAM, X]).eq(|c| {
            let ((m, k), l, x) = (m1(c), c.lam(), c.x());
            Ok((s1g(m, k, &int(1), &-&l, &-&x)?, sign(m - k) * s1g(m, k, &int(-1), &l, &x)?))
        }),
        Id::new("eq-11a", RST).idx("m", C(0), Cap(0)).idx("k", C(0), V("m", 0)).syms(&[LAM, X]).eq(|c| {
            let ((m, k), l, x) = (m1(c), c.lam(), c.x());
            Ok((s2g(m, k, &int(1), &-&l, &-&x)?, sign(m - k) * s2g(m, k, &int(-1), &l, &x)?))
        }),
        Id::new("r-stirling-relation-1", RST).side_lo("r", C(0), D(4)).idx("m", C(0), Cap(0)).idx("k", C(0), V("m", 0)).eq(|c| {
            let ((m, k), r) = (m1(c), c.i("r"));
            Ok((s1l(m, k, &Poly::zero(), &int(-r))?, sign(m - k) * rbr(m + r, k + r, r)))
        }),
        Id::new("r-stirling-relation-2", RST).side_lo("r", C(0), D(4)).idx("m", C(0), Cap(0)).idx("k", C(0), V("m", 0)).eq(|c| {
            let ((m, k), r) = (m1(c), c.i("r"));
            Ok((s2l(m, k, &Poly::zero(), &int(-r))?, rbc(m + r, k + r, r)))
        }),
        Id::new("r-stirling-low-order-1", RST).side("r", C(0), C(1)).idx("m", V("r", 0), Cap(1)).side_lo("k", V("r", 0), V("m", 0)).eq(
            |c| {
                let ((m, k), r) = (m1(c), c.i("r"));
                Ok((rbr(m, k, r), ubr(m, k)))
            },
        ),
        Id::new("r-stirling-low-order-2", RST).side("r", C(0), C(1)).idx("m", V("r", 0), Cap(1)).side_lo("k", V("r", 0), V("m", 0)).eq(
            |c| {
                let ((m, k), r) = (m1(c), c.i("r"));
                Ok((rbc(m, k, r), s2(m, k)))
            },
        ),
        tri_rp("eq-72-1", RST, |c| {
            let ((i, j), r, p) = (ij(c), c.i("r"), c.i("p"));
            let rhs = sum(j, i, |k| Ok(binom(k, j) * rbr(i + p, k + p, p) * pw(r - p, k - j)))?;
            Ok((rbr(i + r, j + r, r), rhs))
        }),
        tri_r("sec5.2-72-h1", RST, 0, 1, |c| {
            let ((i, j), r) = (ij(c), c.i("r"));
            let rhs = sum(j, i, |k| Ok(binom(k + 1, j) * rbr(i + r, k + r, r - 1)))?;
            Ok((rbr(i + r, j + r, r), q(1, i + 1) * rhs))
        }),
        Id::new("eq-72-2", RST).side_lo("p", C(0), D(4)).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).eq(|c| {
            let ((i, j), p) = (ij(c), c.i("p"));
            let rhs = sum(j, i, |k| Ok(rbr(i + p, k + p, p) * s2(k, j)))?;
            Ok((binom(i, j) * rising(&int(p + j), i - j), rhs))
        }),
        tri_r("sec5.2-rec-1", RST, 0, 1, |c| {
            let ((i, j), r) = (ij(c), c.i("r"));
            Ok((rbr(i + r, j + r, r), sum(j, i, |k| Ok(binom(k, j) * rbr(i + r - 1, k + r - 1, r - 1)))?))
        }),
        tri_r("sec5.2-rec-2", RST, 0, 0, |c| {
            let ((i, j), r) = (ij(c), c.i("r"));
            let rhs = sum(j, i, |k| Ok(sign(k - j) * binom(k, j) * rbr(i + r + 1, k + r + 1, r + 1)))?;
            Ok((rbr(i + r, j + r, r), rhs))
        }),
        tri_rp("sec5.2-7a2-h0", RST, |c| {
            let ((i, j), r, p) = (ij(c), c.i("r"), c.i("p"));
            let rhs = sum(j, i, |k| Ok(binom(k, j) * rbc(i + p, k + p, p) * fall(&int(r - p), k - j)))?;
            Ok((rbc(i + r, j + r, r), rhs))
        }),
        Id::new("eq-7a2-1", RST).side_lo("p", C(1), D(4)).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).eq(|c| {
            let ((i, j), p) = (ij(c), c.i("p"));
            let rhs = sum(j, i, |k| Ok(sign(k - j) * rbc(i + p, k + p, p) * fact(k)))?;
            Ok((rbc(i + p - 1, j + p - 1, p - 1), inv_fact(j) * rhs))
        }),
        tri_r("eq-7a2-2", RST, 1, 0, |c| {
            let ((i, j), r) = (ij(c), c.i("r"));
            let rhs = sum(j, i, |k| Ok(sign(k - j) * fact(k) * q(1, k - j + 1) * rbc(i + r, k + r, r)))?;
            Ok((rbc(i - 1 + r, j - 1 + r, r), q(1, i) * inv_fact(j - 1) * rhs))
        }),
        tri_r("sec5.2-7a2-harm", RST, 1, 0, |c| {
            let ((i, j), r) = (ij(c), c.i("r"));
            let rhs = sum(j, i, |k| Ok(sign(k - j) * rbc(i + r + 1, k + r + 1, r + 1) * fact(k) * hh(k - j + 1, 1)))?;
            Ok((rbc(i - 1 + r, j - 1 + r, r), q(1, i) * inv_fact(j - 1) * rhs))
        }),
        tri_r("eq-7a2-3", RST, 1, 1, |c| {
            let ((i, j), r) = (ij(c), c.i("r"));
            let lhs = q(i, j) * rbc(i - 1 + r, j - 1 + r, r) - rbc(i + r - 1, j + r - 1, r - 1);
            let rhs = sum(j + 1, i, |k| Ok(sign(k - j) * fact(k) * q(1, (k + 1 - j) * (k - j)) * rbc(i + r - 1, k + r - 1, r - 1)))?;
            Ok((lhs, -(inv_fact(j) * rhs)))
        }),
        tri("sec5.2-reg-1", RST, 0, |c| {
            let (i, j) = ij(c);
            let rhs = sum(j, i, |k| Ok(sign(k - j) * s2(i + 1, k + 1) * fact(k)))?;
            Ok((s2(i, j), inv_fact(j) * rhs))
        }),
        tri("sec5.2-reg-2", RST, 1, |c| {
            let (i, j) = ij(c);
            let rhs = sum(j, i, |k| Ok(sign(k - j) * fact(k) * q(1, k - j + 1) * s2(i + 1, k + 1)))?;
            Ok((s2(i, j), q(1, i) * inv_fact(j - 1) * rhs))
        }),
        Id::new("sec5.2-reg-3", RST).idx("i", C(1), Cap(1)).idx("j", C(1), V("i", -1)).eq(|c| {
            let (i, j) = ij(c);
            let rhs = sum(j + 1, i, |k| Ok(sign(k - j) * fact(k) * q(1, (k - j + 1) * (k - j)) * s2(i, k)))?;
            Ok((s2(i, j), q(1, j - i) * inv_fact(j - 1) * rhs))
        }),
        Id::new("sec5.2-6-1", RST).side_lo("p", C(0), D(4)).idx("i", C(1), Cap(1)).idx("j", C(1), V("i", 0)).eq(|c| {
            let ((i, j), p) = (ij(c), c.i("p"));
            let rhs = sum(j, i, |k| Ok(sign(i - k) * q(i, k) * s2(i, k) * rbr(k + p, j + p, p)))?;
            Ok((binom(i, j) * bern(i - j, 1, &int(p)), rhs))
        }),
        Id::new("sec5.2-6-2", RST).side_lo("r", C(0), D(4)).idx("i", C(0), Cap(1)).eq(|c| {
            let (i, r) = (c.i("i"), c.i("r"));
            let rhs = sum(0, i, |k| Ok(sign(k) * fact(k) * q(1, k + 1) * rbc(i + r, k + r, r)))?;
            Ok((bern(i, 1, &int(r)), rhs))
        }),
        Id::new("sec5.2-6-3", RST).side_lo("p", C(1), D(4)).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).eq(|c| {
            let ((i, j), p) = (ij(c), c.i("p"));
            let rhs = sum(j, i, |k| Ok(sign(i - k) * int(k + 1) * rbc(i + p, k + p, p - 1) * rbr(k + p, j + p, p)))?;
            Ok((binom(i + 1, j), rhs))
        }),
        Id::new("sec5.2-6-4", RST).side_lo("p", C(0), D(4)).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).eq(|c| {
            let ((i, j), p) = (ij(c), c.i("p"));
            let rhs = sum(j, i, |k| Ok(sign(k - j) * int(k + 1) * rbc(i + 1 + p, k + 1 + p, p) * rbr(k + p, j + p, p)))?;
            Ok((binom(i + 1, j), rhs))
        }),
        Id::new("sec5.2-Bi", RST).idx("i", C(0), Cap(2)).eq(|c| {
            let i = c.i("i");
            let rhs = sum(0, i, |k| Ok(fact(i - k) * q(1, i - k + 1) * rbc(i + k, i, k)))?;
            Ok((bern(i, 1, &int(i + 1)), rhs))
        }),
        harm("hyperharmonic-bracket", 0, 1, |c| {
            let (m, r) = (c.i("i"), c.i("r"));
            Ok((fact(m) * hh(m, r), rbr(m + r, 1 + r, r)))
        }),
        harm("hyperharmonic-bracket-2", 0, 1, |c| {
            let (m, r) = (c.i("i"), c.i("r"));
            Ok((rbr(m + r, 1 + r, r), s1g(m, 1, &int(-1), &Poly::zero(), &int(r))?))
        }),
        harm("hyperharmonic-bracket-3", 0, 1, |c| {
            let (m, r) = (c.i("i"), c.i("r"));
            Ok((rbr(m + r, 1 + r, r), sign(m - 1) * s1l(m, 1, &Poly::zero(), &int(-r))?))
        }),
        harm("sec5.3-71-1", 0, 0, |c| {
            let (i, r) = (c.i("i"), c.i("r"));
            let rhs = sum(0, i, |k| Ok(sign(k) * bern(k, 1, &Poly::zero()) * rbr(i + r, k + r, r)))?;
            Ok((fact(i) * hh(i + 1, r), rhs))
        }),
        harm("sec5.3-71-2", 1, 0, |c| {
            let (i, r) = (c.i("i"), c.i("r"));
            let rhs = sum(0, i, |k| Ok(bern(k, 1, &Poly::zero()) * rbr(i + r, k + r, r)))?;
            Ok((fact(i) * hh(i + 1, r - 1), rhs))
        }),
        harm("sec5.3-71-3", 0, 1, |c| {
            let (i, r, p) = (c.i("i"), c.i("r"), c.i("p"));
            let rhs = sum(1, i, |k| Ok(int(k) * rbr(i + r, k + r, r) * pw(p, k - 1)))?;
            Ok((fact(i) * hh(i, r + p), rhs))
        })
        .side_lo("p", C(0), D(4)),
        Id::new("sec5.3-71-4", HARM).side_lo("p", C(0), D(4)).idx("i", C(1), Cap(1)).eq(|c| {
            let (i, p) = (c.i("i"), c.i("p"));
            Ok((fact(i) * hh(i, p), sum(1, i, |k| Ok(int(k) * ubr(i, k) * pw(p, k - 1)))?))
        }),
        Id::new("sec5.3-5a1", HARM).side_lo("r", C(0), D(4)).idx("m", D(-3), V("r", 0)).idx("i", C(1), Cap(1)).eq(|c| {
            let (i, r, m) = (c.i("i"), c.i("r"), c.i("m"));
            let rhs = sum(1, i, |k| Ok(sign(i - k) * inv_fact(i - k) * fall(&int(m), i - k) * hh(k, r)))?;
            Ok((hh(i, r - m), rhs))
        }),
        Id::new("eq-13", "§5.3 'is Eq. (7) of [26]'").side_lo("r", C(0), D(4)).side_lo("p", C(1), D(4)).idx("i", C(1), Cap(1)).eq(|c| {
            let (i, r, p) = (c.i("i"), c.i("r"), c.i("p"));
            Ok((sum(1, i, |k| Ok(binom(i - k + p - 1, p - 1) * hh(k, r)))?, hh(i, p + r)))
        }),
        harm("sum-kH", 0, 1, |c| {
            let (i, r) = (c.i("i"), c.i("r"));
            Ok((sum(1, i, |k| Ok(int(k) * hh(k, r)))?, int(i + 1) * hh(i, r + 1) - hh(i, r + 2)))
        }),
        Id::new("sec5.4-lah-rel-1", LAH).idx("m", C(0), Cap(1)).idx("k", C(0), V("m", 0)).eq(|c| {
            let (m, k) = m1(c);
            Ok((s1l(m, k, &int(-1), &Poly::zero())?, sign(m - k) * s2l(m, k, &int(-1), &Poly::zero())?))
        }),
        Id::new("sec5.4-lah-rel-2", LAH).idx("m", C(0), Cap(1)).idx("k", C(0), V("m", 0)).eq(|c| {
            let (m, k) = m1(c);
            Ok((s2l(m, k, &int(-1), &Poly::zero())?, lah(m, k)))
        }),
        Id::new("sec5.4-binom-1", LAH).side_lo("m", C(1), D(4)).idx("i", C(1), Cap(1)).idx("j", C(1), V("i", 0)).eq(|c| {
            let ((i, j), m) = (ij(c), c.i("m"));
            let rhs = sum(j, i, |k| Ok(sign(k - j) * binom(i + m - 1, k + m - 1) * binom(k - 1, j - 1)))?;
            Ok((binom(i - j + m - 1, i - j), rhs))
        }),
        Id::new("sec5.4-binom-2", LAH).side_lo("h", C(0), D(4)).idx("i", C(0), Cap(1)).idx("j", C(0), V("i", 0)).eq(|c| {
            let ((i, j), h) = (ij(c), c.i("h"));
            Ok((binom(i + h, j + h), sum(j, i, |k| Ok(binom(i, k) * binom(h, k - j)))?))
        }),
        Id::new("sec5.4-binom-3", LAH).side_lo("h", C(1), D(4)).idx("i", C(0), Cap(1)).side_lo("j", V("h", 0), V("i", 0)).eq(|c| {
            let ((i, j), h) = (ij(c), c.i("h"));
            let rhs = sum(j, i, |k| Ok(sign(k - j) * binom(i + 1, k + 1) * binom(k - j + h - 1, h - 1)))?;
            Ok((binom(i - h + 1, j - h + 1), rhs))
        }),
        Id::new("sec5.4-closed-1", LAH).idx("m", C(0), Cap(0)).idx("j", C(0), V("m", 0)).syms(&[X]).eq(|c| {
            let (m, j, x) = (c.i("m"), c.i("j"), c.x());
            Ok((s2l(m, j, &int(-1), &-&x)?, binom(m, j) * rising(&(&x + &int(j)), m - j)))
        }),
        Id::new("sec5.4-closed-1b", LAH).idx("m", C(0), Cap(0)).idx("j", C(0), V("m", 0)).syms(&[X]).eq(|c| {
            let (m, j, x) = (c.i("m"), c.i("j"), c.x());
            Ok((s2l(m, j, &int(-1), &-&x)?, sign(m - j) * s1l(m, j, &int(-1), &-&x)?))
        }),
        Id::new("sec5.4-closed-2", LAH).idx("h", D(-3), D(3)).idx("m", C(0), Cap(0)).syms(&[X]).eq(|c| {
            let (m, h, x) = (c.i("m"), c.i("h"), c.x());
            Ok((beta(m, h, &int(-1), &x), rising(&(&x - &int(h)), m)))
        }),
        Id::new("sec5.4-closed-2b", LAH).idx("h", D(-3), D(3)).idx("m", C(0), Cap(0)).syms(&[X]).eq(|c| {
            let (m, h, x) = (c.i("m"), c.i("h"), c.x());
            Ok((beta(m, h, &int(-1), &x), sign(m) * alpha(m, h, &int(-1), &-&x)))
        }),
        rising_pair("sec5.4-rising-1", |c| {
            let ((i, j), h, x, y) = (ij(c), c.i("h"), c.x(), c.y());
            let n = i - j;
            let rhs = sum(0, n, |k| Ok(binom(n, k) * sign(k) * rising(&(&y + &int(j)), k) * rising(&(&x + &int(j + k - h)), n - k)))?;
            Ok((rising(&(&(&x - &y) - &int(h)), n), rhs))
        }),
        rising_pair("sec5.4-rising-2", |c| {
            let ((i, j), h, x, y) = (ij(c), c.i("h"), c.x(), c.y());
            let n = i - j;
            let rhs = sum(0, n, |k| Ok(binom(n, k) * rising(&(&y + &int(j)), k) * rising(&(&x - &int(h)), n - k)))?;
            Ok((rising(&(&(&x + &y) + &int(j - h)), n), rhs))
        }),
        rising_pair("sec5.4-rising-3", |c| {
            let ((i, j), h, x, y) = (ij(c), c.i("h"), c.x(), c.y());
            let n = i - j;
            let rhs = sum(0, n, |k| Ok(binom(n, k) * sign(k) * rising(&(&x + &int(h)), k) * rising(&(&y + &int(j + k)), n - k)))?;
            Ok((rising(&(&(&y - &x) + &int(j - h)), n), rhs))
        }),
    ]
}
