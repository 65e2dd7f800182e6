//! Degenerate Bernoulli polynomials of both kinds and their matrices.

use num_traits::{One, Zero};

use crate::ledger::kit::*;
use crate::ledger::IdentitySpec as Id;
use crate::matrices::g_factor;
use crate::ring::{parse_poly, rat};
use crate::{Matrix, Poly};

const FIRST_FEW: [&str; 5] = [
    "1",
    "x + 1/2*lambda - 1/2",
    "x^2 - x - 1/6*lambda^2 + 1/6",
    "x^3 - 3/2*x^2 + 1/2*x - 3/2*x^2*lambda + 3/2*x*lambda + 1/4*lambda^3 - 1/4*lambda",
    "x^4 - 2*x^3 + x^2 - 4*x^3*lambda + 4*x^2*lambda^2 + 6*x^2*lambda - 4*x*lambda^2 - 2*x*lambda - 19/30*lambda^4 + 2/3*lambda^2 - 1/30",
];

const ADD: &str = "§3.1, 'The following theorem can be easily seen from'";
const MATS: &str = "§3.1 theorem/corollaries, 'The following is a consequence'";
const CLOSING: &str = "§3.1 closing displays, 'This yields'";
const SECOND: &str = "§3.2, 'It is clear from'";

/// `sum_{k<h} C(h,k) (-1)^{h-1-k} f(k)`, the shape of the nilpotency sums.
fn alt_sum<T>(
    h: i64,
    mut f: impl FnMut(i64) -> Result<T, crate::ledger::LedgerError>,
    zero: T,
    add: impl Fn(T, T) -> T,
    scale: impl Fn(T, Poly) -> T,
) -> Result<T, crate::ledger::LedgerError> {
    let mut acc = zero;
    for k in 0..h {
        acc = add(acc, scale(f(k)?, binom(h, k) * sign(h - 1 - k)));
    }
    Ok(acc)
}

fn scale_mat(m: Matrix, c: Poly) -> Matrix {
    m.map(|e| e.clone() * &c)
}

fn add_mat(a: Matrix, b: Matrix) -> Matrix {
    a.add(&b).expect("same order")
}

pub(super) fn specs() -> Vec<Id> {
    vec![
        Id::new("beta-first-few", "§3.1, 'The first few of the degenerate Bernoulli polynomials'")
            .side("m", C(0), C(4))
            .syms(&[LAM, X])
            .eq(|c| {
                let m = c.i("m");
                Ok((beta(m, 1, &c.lam(), &c.x()), parse_poly(FIRST_FEW[m as usize])?))
            }),
        Id::new("eq-0", ADD).idx("m", C(0), Cap(1)).idx("w", C(-1), C(2)).idx("z", C(-1), C(2)).syms(&[LAM, X, Y]).eq(|c| {
            let (m, w, z, l, x, y) = (c.i("m"), c.i("w"), c.i("z"), c.lam(), c.x(), c.y());
            let rhs = sum(0, m, |k| Ok(binom(m, k) * beta(k, w, &l, &x) * beta(m - k, z, &l, &y)))?;
            Ok((beta(m, w + z, &l, &(&x + &y)), rhs))
        }),
        Id::new("beta-addition", ADD).idx("m", C(0), Cap(1)).syms(&[LAM, X, Y]).eq(|c| {
            let (m, l, x, y) = (c.i("m"), c.lam(), c.x(), c.y());
            let rhs = sum(0, m, |k| Ok(binom(m, k) * beta(k, 1, &l, &x) * gff(&y, &l, m - k)))?;
            Ok((beta(m, 1, &l, &(&x + &y)), rhs))
        }),
        Id::new("B-order-zero", "§3.1, 'It is clear that'").side("n", C(1), Cap(0)).syms(&[LAM, X]).mat(|c| {
            let n = m_of(c);
            Ok((bmat(n, 0, &c.lam(), &c.x()), pascal(n, &c.lam(), &c.x())))
        }),
        Id::new("beta-limit", "§3.1, 'Hence, in the limiting case'").idx("m", C(0), Cap(1)).idx("w", C(-2), C(2)).syms(&[X]).eq(|c| {
            let (m, w) = (c.i("m"), c.i("w"));
            Ok((beta(m, w, &Poly::zero(), &c.x()), classical_bernoulli(m, w, &c.x())))
        }),
        Id::new("thm-B-product", MATS).side("n", C(1), Cap(0)).idx("w", C(-1), C(2)).idx("z", C(-1), C(2)).syms(&[LAM, X, Y]).mat(|c| {
            let (n, w, z, l, x, y) = (m_of(c), c.i("w"), c.i("z"), c.lam(), c.x(), c.y());
            Ok((bmat(n, w + z, &l, &(&x + &y)), mul(&bmat(n, w, &l, &x), &bmat(n, z, &l, &y))?))
        }),
        Id::new("thm-B-product-swap", MATS).side("n", C(1), Cap(0)).idx("w", C(-1), C(2)).idx("z", C(-1), C(2)).syms(&[LAM, X, Y]).mat(
            |c| {
                let (n, w, z, l, x, y) = (m_of(c), c.i("w"), c.i("z"), c.lam(), c.x(), c.y());
                Ok((mul(&bmat(n, w, &l, &x), &bmat(n, z, &l, &y))?, mul(&bmat(n, z, &l, &x), &bmat(n, w, &l, &y))?))
            },
        ),
        // three factors; mu serves as the third free argument x_3
        Id::new("cor-bk-product", MATS).side("n", C(1), Cap(0)).idx("w", C(-1), C(1)).idx("z", C(0), C(2)).syms(&[LAM, X, Y, MU]).mat(
            |c| {
                let (n, w, z, l) = (m_of(c), c.i("w"), c.i("z"), c.lam());
                let (x1, x2, x3) = (c.x(), c.y(), c.mu());
                let lhs = bmat(n, w + z + 2, &l, &(&x1 + &x2 + &x3));
                Ok((lhs, product(&[bmat(n, w, &l, &x1), bmat(n, z, &l, &x2), bmat(n, 2, &l, &x3)])?))
            },
        ),
        Id::new("cor-bk", MATS).side("n", C(1), Cap(0)).idx("w", C(-1), C(2)).idx("k", C(-1), C(3)).syms(&[LAM, X]).mat(|c| {
            let (n, w, k, l, x) = (m_of(c), c.i("w"), c.i("k"), c.lam(), c.x());
            Ok((bmat(n, w, &l, &x).pow(k)?, bmat(n, k * w, &l, &(x * int(k)))))
        }),
        Id::new("eq-bp-1", MATS).side("n", C(1), Cap(0)).idx("w", C(-2), C(2)).syms(&[LAM, X, Y]).mat(|c| {
            let (n, w, l, x, y) = (m_of(c), c.i("w"), c.lam(), c.x(), c.y());
            Ok((bmat(n, w, &l, &(&x + &y)), mul(&pascal(n, &l, &x), &bmat(n, w, &l, &y))?))
        }),
        Id::new("eq-bp-2", MATS).side("n", C(1), Cap(0)).idx("w", C(-2), C(2)).syms(&[LAM, X, Y]).mat(|c| {
            let (n, w, l, x, y) = (m_of(c), c.i("w"), c.lam(), c.x(), c.y());
            Ok((bmat(n, w, &l, &(&x + &y)), mul(&bmat(n, w, &l, &y), &pascal(n, &l, &x))?))
        }),
        Id::new("B-inverse", MATS).side("n", C(1), Cap(0)).idx("w", C(-2), C(2)).syms(&[LAM, X]).mat(|c| {
            let (n, w, l, x) = (m_of(c), c.i("w"), c.lam(), c.x());
            Ok((bmat(n, w, &l, &x).inv()?, bmat(n, -w, &l, &-&x)))
        }),
        Id::new("B-inverse-2", MATS).side("n", C(1), Cap(0)).idx("w", C(-2), C(2)).syms(&[LAM, X]).mat(|c| {
            let (n, w, l, x) = (m_of(c), c.i("w"), c.lam(), c.x());
            Ok((bmat(n, -w, &l, &-&x), mul(&pascal(n, &l, &-&x), &bmat(n, -w, &l, &Poly::zero()))?))
        }),
        Id::new("B-factorization", MATS).side("n", C(1), Cap(1)).syms(&[LAM, X]).rational(r_points()).mat(|c| {
            let (n, l, x) = (m_of(c), c.lam(), c.x());
            let mut fs = (1..=n).rev().map(|k| g_factor(n, k, &l, &x)).collect::<Result<Vec<_>, _>>()?;
            fs.push(bmat(n, 1, &l, &Poly::zero()));
            Ok((bmat(n, 1, &l, &x), product(&fs)?))
        }),
        Id::new("B-binomial-expansion", CLOSING).side("n", C(1), Cap(0)).idx("h", C(0), C(4)).syms(&[LAM, X]).mat(|c| {
            let (n, h, l, x) = (m_of(c), c.i("h"), c.lam(), c.x());
            let lhs = bmat(n, 1, &l, &x).sub(&Matrix::identity(n))?.pow(h)?;
            let mut rhs = Matrix::zero(n);
            for k in 0..=h {
                let term = scale_mat(bmat(n, k, &l, &(&x * &int(k))), binom(h, k) * sign(h - k));
                rhs = rhs.add(&term)?;
            }
            Ok((lhs, rhs))
        }),
        Id::new("B-nilpotent", CLOSING).side("n", C(1), Cap(0)).side("h", V("n", 0), C(6)).syms(&[LAM, X]).mat(|c| {
            let (n, h) = (m_of(c), c.i("h"));
            Ok((bmat(n, 1, &c.lam(), &c.x()).sub(&Matrix::identity(n))?.pow(h)?, Matrix::zero(n)))
        }),
        Id::new("B-h-power", CLOSING).side("n", C(1), Cap(0)).side("h", C(1), C(4)).syms(&[LAM, X]).mat(|c| {
            let (n, h, l, x) = (m_of(c), c.i("h"), c.lam(), c.x());
            Ok((bmat(n, 1, &l, &x.scale(&rat(1, h))).pow(h)?, bmat(n, h, &l, &x)))
        }),
        Id::new("B-h-expansion", CLOSING).side("h", C(1), Cap(0)).side("n", C(1), V("h", 0)).syms(&[LAM, X]).mat(|c| {
            let (n, h, l, x) = (m_of(c), c.i("h"), c.lam(), c.x());
            let rhs = alt_sum(h, |k| Ok(bmat(n, k, &l, &x.scale(&rat(k, h)))), Matrix::zero(n), add_mat, scale_mat)?;
            Ok((bmat(n, h, &l, &x), rhs))
        }),
        Id::new("h-sum-beta", CLOSING).side("h", C(1), Cap(0)).side("m", C(0), V("h", -1)).syms(&[LAM, X]).eq(|c| {
            let (h, m, l, x) = (c.i("h"), c.i("m"), c.lam(), c.x());
            let lhs = alt_sum(h, |k| Ok(beta(m, k, &l, &x.scale(&rat(k, h)))), Poly::zero(), |a, b| a + b, |a, s| a * s)?;
            Ok((lhs, beta(m, h, &l, &x)))
        }),
        Id::new("h-sum-shift", "§3.1 closing displays, 'By the known identity'")
            .side("h", C(2), Cap(0))
            .side("m", C(1), V("h", -1))
            .syms(&[LAM])
            .eq(|c| {
                let (h, m, l) = (c.i("h"), c.i("m"), c.lam());
                let part = sum(0, h - 1, |k| Ok(binom(h, k) * sign(h - k) * beta(m, k, &l, &q(k, h))))?;
                Ok((part + beta(m, h, &l, &Poly::zero()), -(int(m) * beta(m - 1, h - 1, &l, &Poly::zero()))))
            }),
        Id::new("known-shift", "§3.1 closing displays, 'By the known identity'")
            .idx("h", C(-1), C(4))
            .side("m", C(1), Cap(1))
            .syms(&[LAM])
            .eq(|c| {
                let (h, m, l) = (c.i("h"), c.i("m"), c.lam());
                let rhs = int(m) * beta(m - 1, h - 1, &l, &Poly::zero()) + beta(m, h, &l, &Poly::zero());
                Ok((beta(m, h, &l, &Poly::one()), rhs))
            }),
        Id::new("h-sum-gff", "§3.1 closing displays, 'Similarly, we may get'")
            .side("h", C(1), Cap(0))
            .side("m", C(0), V("h", -1))
            .syms(&[LAM, X])
            .eq(|c| {
                let (h, m, l, x) = (c.i("h"), c.i("m"), c.lam(), c.x());
                let lhs = alt_sum(h, |k| Ok(gff(&(&x * &int(k)), &l, m)), Poly::zero(), |a, b| a + b, |a, s| a * s)?;
                Ok((lhs, gff(&(&x * &int(h)), &l, m)))
            }),
        Id::new("pascal-power", "§3.1 closing displays, 'Similarly, we may get'")
            .side("n", C(1), Cap(0))
            .idx("h", C(-2), C(4))
            .syms(&[LAM, X])
            .mat(|c| {
                let (n, h, l, x) = (m_of(c), c.i("h"), c.lam(), c.x());
                Ok((pascal(n, &l, &x).pow(h)?, pascal(n, &l, &(x * int(h)))))
            }),
        Id::new("eq-1b2", SECOND)
            .idx("m", C(0), Cap(1))
            .idx("w", C(-2), C(2))
            .syms(&[LAM, X])
            .rational(samples(&[LAM, X], 4))
            .nonzero(&[LAM])
            .eq(|c| {
                let (m, w, l, x) = (c.i("m"), c.i("w"), c.lam(), c.x());
                let inv = Poly::constant(l.as_constant().expect("rational point").recip());
                let lhs = l.pow(m as u32) * beta(m, w, &inv, &(&x * &inv));
                Ok((lhs, alpha(m, w, &l, &x)))
            }),
        Id::new("alpha-limit", "§3.2, 'limiting case'").idx("m", C(0), Cap(1)).idx("w", C(-2), C(2)).syms(&[X]).eq(|c| {
            let (m, w) = (c.i("m"), c.i("w"));
            Ok((alpha(m, w, &Poly::zero(), &c.x()), fact(m) * classical_bernoulli_second(m, w, &c.x())))
        }),
        Id::new("L-order-zero", "§3.2, 'It is obvious that'").side("n", C(1), Cap(0)).syms(&[LAM, X]).mat(|c| {
            let n = m_of(c);
            Ok((lmat(n, 0, &c.lam(), &c.x()), pascal(n, &Poly::one(), &c.x())))
        }),
        Id::new("L-product", "§3.2, 'satisfy properties given for'")
            .side("n", C(1), Cap(0))
            .idx("w", C(-1), C(2))
            .idx("z", C(-1), C(1))
            .syms(&[LAM, X, Y])
            .mat(|c| {
                let (n, w, z, l, x, y) = (m_of(c), c.i("w"), c.i("z"), c.lam(), c.x(), c.y());
                Ok((lmat(n, w + z, &l, &(&x + &y)), mul(&lmat(n, w, &l, &x), &lmat(n, z, &l, &y))?))
            }),
    ]
}
