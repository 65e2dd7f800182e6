//! Generalized Stirling numbers: classical specializations, scaling,
//! orthogonality, recurrences and the first-type matrices.

use num_traits::{One, Zero};

use crate::ledger::kit::*;
use crate::ledger::{IdentitySpec as Id, LedgerError, Point};
use crate::matrices::q_factor;
use crate::numbers::oracle::{count_ordered_lists, count_permutations_by_cycles, count_set_partitions, oracle_stirling_recurrence};
use crate::numbers::{Kind, StirlingParams};
use crate::{Matrix, Poly};

const SPECIALIZE: &str = "§4 specializations, 'generalize various Stirling-type numbers'";
const FIRST: &str = "§4.1, 'which we call generalized Stirling matrices of the first type'";
const VERT: &str = "§4.1, 'reduces to the well known'";
const PAIR: &str = "§4.1, 'We also have'";

fn count(n: u64) -> Poly {
    int(n as i64)
}

fn mu_points() -> Vec<Point> {
    vec![pt(&[(MU, (1, 2))]), pt(&[(MU, (-1, 1))]), pt(&[(MU, (2, 1))]), pt(&[(MU, (3, 5))])]
}

fn recurrence(kind: Kind, m: i64, k: i64, mu: &Poly, lam: &Poly, x: &Poly) -> R {
    let p = StirlingParams::new(mu.clone(), lam.clone(), x.clone())?;
    Ok(oracle_stirling_recurrence(kind, m as usize, k as usize, &p)?)
}

/// `S(m, k | mu, lambda, x) = mu^{m-k} S(m, k | 1, lambda/mu, x/mu)` at a bound `mu`.
fn scaling(c: &crate::ledger::Case, s: fn(i64, i64, &Poly, &Poly, &Poly) -> R) -> Result<(Poly, Poly), LedgerError> {
    let (m, k, mu, l, x) = (c.i("m"), c.i("k"), c.mu(), c.lam(), c.x());
    let inv = Poly::constant(mu.as_constant().expect("mu is bound").recip());
    let rhs = mu.pow((m - k) as u32) * s(m, k, &Poly::one(), &(&l * &inv), &(&x * &inv))?;
    Ok((s(m, k, &mu, &l, &x)?, rhs))
}

pub(super) fn specs() -> Vec<Id> {
    vec![
        Id::new("stirling-recurrence-1", "§4, 'by means of the generating functions'")
            .idx("m", C(0), Cap(1))
            .idx("k", C(0), V("m", 0))
            .syms(&[MU, LAM, X])
            .eq(|c| {
                let (m, k) = (c.i("m"), c.i("k"));
                Ok((s1g(m, k, &c.mu(), &c.lam(), &c.x())?, recurrence(Kind::First, m, k, &c.mu(), &c.lam(), &c.x())?))
            }),
        Id::new("stirling-recurrence-2", "§4, 'by means of the generating functions'")
            .idx("m", C(0), Cap(1))
            .idx("k", C(0), V("m", 0))
            .syms(&[MU, LAM, X])
            .eq(|c| {
                let (m, k) = (c.i("m"), c.i("k"));
                Ok((s2g(m, k, &c.mu(), &c.lam(), &c.x())?, recurrence(Kind::Second, m, k, &c.mu(), &c.lam(), &c.x())?))
            }),
        Id::new("specialize-i-1", SPECIALIZE).idx("m", C(0), Cap(1)).idx("k", C(0), V("m", 0)).eq(|c| {
            let (m, k) = (c.i("m"), c.i("k"));
            Ok((s1(m, k), sign(m - k) * count(count_permutations_by_cycles(m as usize, k as usize, 0))))
        }),
        Id::new("specialize-i-2", SPECIALIZE).idx("m", C(0), Cap(1)).idx("k", C(0), V("m", 0)).eq(|c| {
            let (m, k) = (c.i("m"), c.i("k"));
            Ok((s2(m, k), count(count_set_partitions(m as usize, k as usize, 0))))
        }),
        Id::new("specialize-iv-1", SPECIALIZE).idx("m", C(0), C(5)).idx("k", C(0), V("m", 0)).idx("r", C(0), C(3)).eq(|c| {
            let (m, k, r) = (c.i("m"), c.i("k"), c.i("r"));
            let n = (m + r) as usize;
            let lhs = s1g(m, k, &int(-1), &Poly::zero(), &int(r))?;
            Ok((lhs, count(count_permutations_by_cycles(n, (k + r) as usize, r as usize))))
        }),
        Id::new("specialize-iv-2", SPECIALIZE).idx("m", C(0), C(5)).idx("k", C(0), V("m", 0)).idx("r", C(0), C(3)).eq(|c| {
            let (m, k, r) = (c.i("m"), c.i("k"), c.i("r"));
            let n = (m + r) as usize;
            let lhs = s2g(m, k, &int(-1), &Poly::zero(), &int(r))?;
            Ok((lhs, sign(m - k) * count(count_set_partitions(n, (k + r) as usize, r as usize))))
        }),
        Id::new("specialize-vi-1", SPECIALIZE).idx("m", C(0), Cap(1)).idx("k", C(0), V("m", 0)).eq(|c| {
            let (m, k) = (c.i("m"), c.i("k"));
            Ok((s1g(m, k, &int(-1), &int(1), &Poly::zero())?, count(count_ordered_lists(m as usize, k as usize))))
        }),
        Id::new("specialize-vi-2", SPECIALIZE).idx("m", C(0), Cap(1)).idx("k", C(0), V("m", 0)).eq(|c| {
            let (m, k) = (c.i("m"), c.i("k"));
            Ok((s2g(m, k, &int(-1), &int(1), &Poly::zero())?, sign(m - k) * lah(m, k)))
        }),
        Id::new("eq-8-s1", "§4, 'it follows that'")
            .idx("m", C(0), Cap(1))
            .idx("k", C(0), V("m", 0))
            .syms(&[MU, LAM, X])
            .at(mu_points())
            .nonzero(&[MU])
            .eq(|c| scaling(c, s1g)),
        Id::new("eq-8-s2", "§4, 'it follows that'")
            .idx("m", C(0), Cap(1))
            .idx("k", C(0), V("m", 0))
            .syms(&[MU, LAM, X])
            .at(mu_points())
            .nonzero(&[MU])
            .eq(|c| scaling(c, s2g)),
        Id::new("eq-10-s1", "§4, 'Letting'").idx("m", C(0), Cap(1)).idx("k", C(0), V("m", 0)).syms(&[MU]).eq(|c| {
            let (m, k, mu) = (c.i("m"), c.i("k"), c.mu());
            Ok((s1g(m, k, &mu, &Poly::zero(), &Poly::zero())?, mu.pow((m - k) as u32) * s1(m, k)))
        }),
        Id::new("eq-10-s2", "§4, 'Letting'").idx("m", C(0), Cap(1)).idx("k", C(0), V("m", 0)).syms(&[MU]).eq(|c| {
            let (m, k, mu) = (c.i("m"), c.i("k"), c.mu());
            Ok((s2g(m, k, &mu, &Poly::zero(), &Poly::zero())?, mu.pow((m - k) as u32) * s2(m, k)))
        }),
        Id::new("eq-9-1", FIRST).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).syms(&[MU, LAM, X]).eq(|c| {
            let (i, j, mu, l, x) = (c.i("i"), c.i("j"), c.mu(), c.lam(), c.x());
            let lhs = sum(j, i, |k| Ok(s1g(i, k, &mu, &l, &x)? * s2g(k, j, &mu, &l, &x)?))?;
            Ok((lhs, int((i == j) as i64)))
        }),
        Id::new("eq-9-2", FIRST).idx("i", C(0), Cap(0)).idx("j", C(0), V("i", 0)).syms(&[MU, LAM, X]).eq(|c| {
            let (i, j, mu, l, x) = (c.i("i"), c.i("j"), c.mu(), c.lam(), c.x());
            let lhs = sum(j, i, |k| Ok(s2g(i, k, &mu, &l, &x)? * s1g(k, j, &mu, &l, &x)?))?;
            Ok((lhs, int((i == j) as i64)))
        }),
        Id::new("eq-9-matrix", FIRST).side("n", C(1), Cap(0)).syms(&[MU, LAM, X]).mat(|c| {
            let n = m_of(c);
            let (mu, l, x) = (c.mu(), c.lam(), c.x());
            Ok((smat(n, Kind::Second, &mu, &l, &x)?.inv()?, smat(n, Kind::First, &mu, &l, &x)?))
        }),
        Id::new("eq-4", FIRST).idx("i", C(1), Cap(1)).idx("j", C(1), V("i", 0)).syms(&[MU, LAM]).eq(|c| {
            let (i, j, mu, l) = (c.i("i"), c.i("j"), c.mu(), c.lam());
            let z = Poly::zero();
            let rhs = sum(j, i, |k| Ok(binom(i - 1, k - 1) * gff(&(&mu - &l), &l, i - k) * s2g(k - 1, j - 1, &mu, &l, &z)?))?;
            Ok((s2g(i, j, &mu, &l, &z)?, rhs))
        }),
        Id::new("eq-19", FIRST).side("n", C(1), Cap(0)).syms(&[MU, LAM]).mat(|c| {
            let (n, mu, l, z) = (m_of(c), c.mu(), c.lam(), Poly::zero());
            let bar = Matrix::identity(1).direct_sum(&smat(n - 1, Kind::Second, &mu, &l, &z)?);
            Ok((smat(n, Kind::Second, &mu, &l, &z)?, mul(&pascal(n, &l, &(&mu - &l)), &bar)?))
        }),
        Id::new("vertical-recurrence-s2", VERT).idx("i", C(1), Cap(1)).idx("j", C(1), V("i", 0)).eq(|c| {
            let (i, j) = (c.i("i"), c.i("j"));
            Ok((s2(i, j), sum(j, i, |k| Ok(binom(i - 1, k - 1) * s2(k - 1, j - 1)))?))
        }),
        Id::new("vertical-recurrence-s1", VERT).idx("i", C(1), Cap(1)).idx("j", C(1), V("i", 0)).syms(&[MU, LAM]).eq(|c| {
            let (i, j, mu, l) = (c.i("i"), c.i("j"), c.mu(), c.lam());
            let z = Poly::zero();
            let rhs = sum(j, i, |k| Ok(binom(k - 1, j - 1) * s1g(i - 1, k - 1, &mu, &l, &z)? * gff(&(&l - &mu), &l, k - j)))?;
            Ok((s1g(i, j, &mu, &l, &z)?, rhs))
        }),
        Id::new("shifted-orth-pair-1", PAIR).idx("i", C(1), Cap(1)).idx("j", C(1), V("i", 0)).syms(&[MU, LAM]).eq(|c| {
            let (i, j, mu, l) = (c.i("i"), c.i("j"), c.mu(), c.lam());
            let z = Poly::zero();
            let rhs = sum(j, i, |k| Ok(s2g(i, k, &mu, &l, &z)? * s1g(k - 1, j - 1, &mu, &l, &z)?))?;
            Ok((binom(i - 1, j - 1) * gff(&(&mu - &l), &l, i - j), rhs))
        }),
        Id::new("shifted-orth-pair-2", PAIR).idx("i", C(1), Cap(1)).idx("j", C(1), V("i", 0)).syms(&[MU, LAM]).eq(|c| {
            let (i, j, mu, l) = (c.i("i"), c.i("j"), c.mu(), c.lam());
            let z = Poly::zero();
            let rhs = sum(j, i, |k| Ok(s2g(i - 1, k - 1, &mu, &l, &z)? * s1g(k, j, &mu, &l, &z)?))?;
            Ok((binom(i - 1, j - 1) * gff(&(&l - &mu), &l, i - j), rhs))
        }),
        Id::new("S-Q-factorization", "§4.1, 'we have the following factorization'").side("n", C(1), Cap(0)).syms(&[MU, LAM]).mat(|c| {
            let (n, mu, l) = (m_of(c), c.mu(), c.lam());
            let x = &mu - &l;
            let qs: Vec<Matrix> = (1..=n).rev().map(|k| q_factor(n, k, &l, &x)).collect();
            Ok((smat(n, Kind::Second, &mu, &l, &Poly::zero())?, product(&qs)?))
        }),
    ]
}
