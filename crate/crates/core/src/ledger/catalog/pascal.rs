//! Pascal functional matrices, the R/T inverse pair and the G factorization.

use crate::ledger::kit::*;
use crate::ledger::IdentitySpec as Id;
use crate::matrices::{g_factor, g_factor_via_t, r_matrix, t_matrix};
use crate::ring::parse_poly;
use crate::Matrix;

fn literal(rows: &[&[&str]]) -> Matrix {
    let rows = rows.iter().map(|r| r.iter().map(|s| parse_poly(s).expect("literal")).collect()).collect();
    Matrix::from_rows(rows).expect("triangular literal")
}

pub(super) fn specs() -> Vec<Id> {
    vec![
        Id::new("thm-2.1", "§2 Thm 2.1, 'We apply induction on'").side("n", C(1), Cap(1)).syms(&[LAM, X]).rational(r_points()).mat(|c| {
            let n = m_of(c);
            let r = r_matrix(n, &c.lam(), &c.x())?;
            Ok((mul(&r, &t_matrix(n, &c.lam(), &c.x()))?, Matrix::identity(n)))
        }),
        Id::new("thm-2.1-t-inverse", "§2 Thm 2.1, 'We apply induction on'")
            .side("n", C(1), Cap(1))
            .syms(&[LAM, X])
            .rational(r_points())
            .mat(|c| {
                let n = m_of(c);
                Ok((t_matrix(n, &c.lam(), &c.x()).inv()?, r_matrix(n, &c.lam(), &c.x())?))
            }),
        Id::new("lem-rp", "§2 Lemma (15)/(16), 'This completes the proof'")
            .side("n", C(1), Cap(1))
            .syms(&[LAM, X])
            .rational(r_points())
            .mat(|c| {
                let n = m_of(c);
                let (l, x) = (c.lam(), c.x());
                let bar = Matrix::identity(1).direct_sum(&pascal(n - 1, &l, &x));
                Ok((mul(&r_matrix(n, &l, &x)?, &bar)?, pascal(n, &l, &x)))
            }),
        Id::new("thm-pg", "§2 factorization theorem and Example, 'which generalizes the result of Zhang'")
            .side("n", C(1), Cap(0))
            .syms(&[LAM, X])
            .mat(|c| {
                let n = m_of(c);
                let gs: Vec<Matrix> = (1..=n).rev().map(|k| g_factor_via_t(n, k, &c.lam(), &c.x())).collect();
                Ok((product(&gs)?, pascal(n, &c.lam(), &c.x())))
            }),
        Id::new("thm-pg-direct", "§2 factorization theorem and Example, 'which generalizes the result of Zhang'")
            .side("n", C(1), Cap(0))
            .syms(&[LAM, X])
            .mat(|c| {
                let n = m_of(c);
                let gs = (1..=n).rev().map(|k| g_factor(n, k, &c.lam(), &c.x())).collect::<Result<Vec<_>, _>>()?;
                Ok((product(&gs)?, pascal(n, &c.lam(), &c.x())))
            }),
        Id::new("example-p4", "§2 factorization theorem and Example, 'which generalizes the result of Zhang'").syms(&[LAM, X]).mat(|c| {
            let p4 = literal(&[
                &["1"],
                &["x", "1"],
                &["x^2-x*lambda", "2*x", "1"],
                &["x^3-3*x^2*lambda+2*x*lambda^2", "3*x^2-3*x*lambda", "3*x", "1"],
            ]);
            let shown = [
                literal(&[
                    &["1"],
                    &["x", "1"],
                    &["x^2-x*lambda", "x", "1"],
                    &["x^3-3*x^2*lambda+2*x*lambda^2", "x^2-2*x*lambda", "x", "1"],
                ]),
                literal(&[&["1"], &["0", "1"], &["0", "x", "1"], &["0", "x^2-x*lambda", "x", "1"]]),
                literal(&[&["1"], &["0", "1"], &["0", "0", "1"], &["0", "0", "x", "1"]]),
            ];
            let (l, x) = (c.lam(), c.x());
            for (k, g) in (2..=4).rev().zip(&shown) {
                if g_factor_via_t(4, k, &l, &x) != *g {
                    return Ok((g_factor_via_t(4, k, &l, &x), g.clone()));
                }
            }
            let g1 = g_factor_via_t(4, 1, &l, &x);
            let built = product(&[shown[0].clone(), shown[1].clone(), shown[2].clone(), g1])?;
            if built != p4 {
                return Ok((built, p4));
            }
            Ok((pascal(4, &l, &x), p4))
        }),
        Id::new("pascal-addition", "§2, 'The algebraic properties of Pascal matrices'").side("n", C(1), Cap(0)).syms(&[LAM, X, Y]).mat(
            |c| {
                let (n, l) = (m_of(c), c.lam());
                Ok((pascal(n, &l, &(c.x() + c.y())), mul(&pascal(n, &l, &c.x()), &pascal(n, &l, &c.y()))?))
            },
        ),
        Id::new("pascal-inverse", "§2, 'The algebraic properties of Pascal matrices'").side("n", C(1), Cap(0)).syms(&[LAM, X]).mat(|c| {
            let (n, l) = (m_of(c), c.lam());
            Ok((pascal(n, &l, &c.x()).inv()?, pascal(n, &l, &-c.x())))
        }),
        Id::new("gff-addition", "§2, 'The algebraic properties of Pascal matrices'").idx("m", C(0), Cap(1)).syms(&[LAM, X, Y]).eq(|c| {
            let (m, l, x, y) = (c.i("m"), c.lam(), c.x(), c.y());
            let rhs = sum(0, m, |k| Ok(binom(m, k) * gff(&x, &l, m - k) * gff(&y, &l, k)))?;
            Ok((gff(&(&x + &y), &l, m), rhs))
        }),
    ]
}
