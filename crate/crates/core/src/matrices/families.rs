use num_traits::{One, Zero};

use super::MatrixError;
use crate::numbers::{alpha_seq, beta_seq, stirling_gen, stirling_triangle, Kind, StirlingParams};
use crate::ring::{binomial, factorial_int, gff};
use crate::{Matrix, Poly, Rational};

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n as i64, k as i64))
}

/// Pascal functional matrix: `C(i-1, j-1) (x|lambda)_{i-j}`.
pub fn pascal(n: usize, lam: &Poly, x: &Poly) -> Matrix {
    Matrix::from_fn(n, |i, j| gff(x, lam, i - j).scale(&binom(i - 1, j - 1)))
}

/// `R_{i,j} = (x|lambda)_{i-1} / (x-lambda|lambda)_{j-1}` below the diagonal.
///
/// The quotient is computed by exact polynomial division, so symbolic
/// parameters give the polynomial `x (x - j lambda | lambda)_{i-j-1}`.
/// Fails only when the denominator is the zero polynomial.
pub fn r_matrix(n: usize, lam: &Poly, x: &Poly) -> Result<Matrix, MatrixError> {
    let shifted = x - lam;
    Matrix::try_from_fn(n, |i, j| {
        if i == j {
            return Ok(Poly::one());
        }
        let den = gff(&shifted, lam, j - 1);
        if den.is_zero() {
            return Err(MatrixError::ZeroDenominator { i, j });
        }
        Ok(gff(x, lam, i - 1).exact_div(&den)?)
    })
}

/// `T_{i,j} = (-1)^{i-j} lambda^{i-j-1} ((i-2)!/(j-1)!) x` below the diagonal.
pub fn t_matrix(n: usize, lam: &Poly, x: &Poly) -> Matrix {
    Matrix::from_fn(n, |i, j| {
        if i == j {
            return Poly::one();
        }
        let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
        let c = Rational::new(factorial_int(i as u64 - 2) * sign, factorial_int(j as u64 - 1));
        (lam.pow((i - j - 1) as u32) * x).scale(&c)
    })
}

fn check_block(n: usize, k: usize) {
    assert!(1 <= k && k <= n, "factor index k = {k} outside 1..={n}");
}

/// `G_k = I_{n-k} ⊕ R_k`.
pub fn g_factor(n: usize, k: usize, lam: &Poly, x: &Poly) -> Result<Matrix, MatrixError> {
    check_block(n, k);
    Ok(Matrix::identity(n - k).direct_sum(&r_matrix(k, lam, x)?))
}

/// `G_k` with `R_k` obtained by inverting `T_k`; always defined.
pub fn g_factor_via_t(n: usize, k: usize, lam: &Poly, x: &Poly) -> Matrix {
    check_block(n, k);
    let r = t_matrix(k, lam, x).inv().expect("T has a unit diagonal");
    Matrix::identity(n - k).direct_sum(&r)
}

/// `Q_k = I_{n-k} ⊕ P_k`.
pub fn q_factor(n: usize, k: usize, lam: &Poly, x: &Poly) -> Matrix {
    check_block(n, k);
    Matrix::identity(n - k).direct_sum(&pascal(k, lam, x))
}

/// Degenerate Bernoulli matrix: `C(i-1, j-1) beta_{i-j}^{(w)}(lambda, x)`.
pub fn bernoulli_matrix(n: usize, w: i64, lam: &Poly, x: &Poly) -> Matrix {
    let seq = beta_seq(n.saturating_sub(1), w, lam, x);
    Matrix::from_fn(n, |i, j| seq[i - j].scale(&binom(i - 1, j - 1)))
}

/// Second-kind analogue: `C(i-1, j-1) alpha_{i-j}^{(w)}(lambda, x)`.
pub fn l_matrix(n: usize, w: i64, lam: &Poly, x: &Poly) -> Matrix {
    let seq = alpha_seq(n.saturating_sub(1), w, lam, x);
    Matrix::from_fn(n, |i, j| seq[i - j].scale(&binom(i - 1, j - 1)))
}

/// Generalized Stirling matrix of the first type: entries `S(i, j | mu, lambda, x)`.
pub fn stirling_matrix_first_type(n: usize, p: &StirlingParams, kind: Kind) -> Result<Matrix, MatrixError> {
    let tri = stirling_triangle(kind, n, p)?;
    Ok(Matrix::from_fn(n, |i, j| tri[i][j].clone()))
}

/// Generalized Stirling matrix of the second type with shift `h`:
/// `C(i-1, j-1) / C(i-h, j-h) S(i-h, j-h | 1, lambda, x)` for `i > j >= max(1, h)`,
/// ones on the diagonal, zero elsewhere.
pub fn stirling_matrix_second_type(n: usize, h: i64, lam: &Poly, x: &Poly, kind: Kind) -> Result<Matrix, MatrixError> {
    let p = StirlingParams::new(Poly::one(), lam.clone(), x.clone())?;
    Matrix::try_from_fn(n, |i, j| {
        if i == j {
            return Ok(Poly::one());
        }
        if (j as i64) < h {
            return Ok(Poly::zero());
        }
        let (a, b) = (i as i64 - h, j as i64 - h);
        let den = binomial(a, b);
        if den.is_zero() {
            return Err(MatrixError::BadShift { i, j, h, a, b });
        }
        let s = stirling_gen(kind, a as usize, b as usize, &p)?;
        Ok(s.scale(&(binom(i - 1, j - 1) / Rational::from_integer(den))))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, rat};
    use crate::Symbol;

    fn lam() -> Poly {
        Poly::symbol(Symbol::Lambda)
    }
    fn x() -> Poly {
        Poly::symbol(Symbol::X)
    }
    fn c(v: Rational) -> Poly {
        Poly::constant(v)
    }

    #[test]
    fn pascal_entries() {
        let p = pascal(4, &lam(), &x());
        assert_eq!(p.get(4, 2), parse_poly("3*x^2 - 3*x*lambda").unwrap());
        assert_eq!(p.get(4, 1), parse_poly("x^3 - 3*x^2*lambda + 2*x*lambda^2").unwrap());
        assert_eq!(pascal(5, &lam(), &Poly::zero()), Matrix::identity(5));
        let small = pascal(3, &Poly::zero(), &Poly::from_int(2));
        let want: Vec<Vec<i64>> = vec![vec![1], vec![2, 1], vec![4, 4, 1]];
        for (i, row) in want.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(small.get(i + 1, j + 1), Poly::from_int(v));
            }
        }
    }

    #[test]
    fn pascal_inverse_negates_x() {
        let p = pascal(3, &lam(), &x());
        assert_eq!(p.inv().unwrap(), pascal(3, &lam(), &-x()));
    }

    #[test]
    fn r_and_t() {
        assert_eq!(t_matrix(3, &lam(), &x()).get(3, 1), parse_poly("lambda*x").unwrap());
        let (l, xv) = (c(rat(1, 2)), c(rat(3, 1)));
        let r = r_matrix(6, &l, &xv).unwrap();
        assert_eq!(r.mul(&t_matrix(6, &l, &xv)).unwrap(), Matrix::identity(6));
        assert!(r_matrix(5, &lam(), &x()).unwrap().has_unit_diagonal());
        // (x - lambda | lambda)_1 vanishes at x = lambda
        assert_eq!(r_matrix(3, &Poly::one(), &Poly::one()), Err(MatrixError::ZeroDenominator { i: 3, j: 2 }));
        assert_eq!(r_matrix(5, &lam(), &x()).unwrap(), t_matrix(5, &lam(), &x()).inv().unwrap());
    }

    #[test]
    fn g_product_is_pascal() {
        let g: Vec<Matrix> = (1..=4).rev().map(|k| g_factor(4, k, &lam(), &x()).unwrap()).collect();
        assert_eq!(Matrix::product(&g).unwrap(), pascal(4, &lam(), &x()));
        // the factor G_2 = I_2 ⊕ R_2 has the single off-diagonal entry x at (4,3)
        let g2 = g_factor(4, 2, &lam(), &x()).unwrap();
        assert_eq!(g2.get(4, 3), x());
        assert_eq!(g2.masked(|i, j| (i, j) != (4, 3)), Matrix::identity(4));
        assert_eq!(q_factor(4, 4, &lam(), &x()), pascal(4, &lam(), &x()));
    }

    #[test]
    fn bernoulli_and_l_matrices() {
        assert_eq!(bernoulli_matrix(3, 0, &lam(), &x()), pascal(3, &lam(), &x()));
        assert_eq!(l_matrix(4, 0, &lam(), &x()), pascal(4, &Poly::one(), &x()));
        let b = bernoulli_matrix(4, 1, &lam(), &x());
        assert_eq!(b.inv().unwrap(), bernoulli_matrix(4, -1, &lam(), &-x()));
    }

    #[test]
    fn stirling_matrices() {
        let p = StirlingParams::new(Poly::one(), lam(), x()).unwrap();
        let s1 = stirling_matrix_first_type(5, &p, Kind::First).unwrap();
        let s2 = stirling_matrix_first_type(5, &p, Kind::Second).unwrap();
        assert_eq!(s2.mul(&s1).unwrap(), Matrix::identity(5));
        assert!(s1.has_unit_diagonal() && s2.has_unit_diagonal());
        let g = stirling_matrix_second_type(5, 0, &lam(), &x(), Kind::Second).unwrap();
        let gi = stirling_matrix_second_type(5, 0, &lam(), &x(), Kind::First).unwrap();
        assert_eq!(gi.mul(&g).unwrap(), Matrix::identity(5));
        let y = Poly::symbol(Symbol::Y);
        let lhs = stirling_matrix_second_type(4, 0, &lam(), &-x(), Kind::Second)
            .unwrap()
            .mul(&stirling_matrix_second_type(4, 0, &lam(), &-&y, Kind::First).unwrap())
            .unwrap();
        assert_eq!(lhs, pascal(4, &lam(), &(x() - y)));
        assert!(stirling_matrix_second_type(3, 0, &Poly::zero(), &Poly::zero(), Kind::Second).is_ok());
    }
}
