//! Classical families as specializations of the generalized Stirling numbers.

use num_traits::Zero;

use super::{int_poly, stirling1_gen, stirling2_gen, NumbersError, StirlingParams};
use crate::ring::{binomial, factorial_int};
use crate::Poly;

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn signed(p: Poly, e: usize) -> Poly {
    if sign(e) < 0 {
        -p
    } else {
        p
    }
}

fn params(mu: Poly, lambda: Poly, x: Poly) -> Result<StirlingParams, NumbersError> {
    StirlingParams::new(mu, lambda, x)
}

/// Signed Stirling number of the first kind `s(m, k)`.
pub fn stirling1(m: usize, k: usize) -> Poly {
    stirling1_gen(m, k, &StirlingParams::ints(1, 0, 0).expect("valid")).expect("valid params")
}

/// Unsigned Stirling number of the first kind `[m k]`.
pub fn stirling1_unsigned(m: usize, k: usize) -> Poly {
    if k > m {
        return Poly::zero();
    }
    signed(stirling1(m, k), m - k)
}

/// Stirling number of the second kind `{m k}`.
pub fn stirling2(m: usize, k: usize) -> Poly {
    stirling2_gen(m, k, &StirlingParams::ints(1, 0, 0).expect("valid")).expect("valid params")
}

/// Unsigned r-Stirling number of the first kind `[n k]_r`; zero unless `r <= k <= n`.
pub fn r_stirling1(n: usize, k: usize, r: usize) -> Poly {
    if k < r || n < r || k > n {
        return Poly::zero();
    }
    let p = StirlingParams::ints(-1, 0, r as i64).expect("valid");
    stirling1_gen(n - r, k - r, &p).expect("valid params")
}

/// r-Stirling number of the second kind `{n k}_r`; zero unless `r <= k <= n`.
pub fn r_stirling2(n: usize, k: usize, r: usize) -> Poly {
    if k < r || n < r || k > n {
        return Poly::zero();
    }
    let p = StirlingParams::ints(-1, 0, r as i64).expect("valid");
    signed(stirling2_gen(n - r, k - r, &p).expect("valid params"), n - k)
}

/// Carlitz weighted Stirling number of the first kind `R_1(m, k, x)`.
pub fn carlitz_r1(m: usize, k: usize, x: &Poly) -> Result<Poly, NumbersError> {
    if k > m {
        return Ok(Poly::zero());
    }
    let p = params(Poly::from_int(1), Poly::zero(), -x)?;
    Ok(signed(stirling1_gen(m, k, &p)?, m - k))
}

/// Carlitz weighted Stirling number of the second kind `R_2(m, k, x)`.
pub fn carlitz_r2(m: usize, k: usize, x: &Poly) -> Result<Poly, NumbersError> {
    stirling2_gen(m, k, &params(Poly::from_int(1), Poly::zero(), -x)?)
}

/// Carlitz degenerate Stirling number of the first kind `S_1(m, k | lambda)`.
pub fn degen_stirling1(m: usize, k: usize, lam: &Poly) -> Result<Poly, NumbersError> {
    if k > m {
        return Ok(Poly::zero());
    }
    let p = params(Poly::from_int(1), lam.clone(), Poly::zero())?;
    Ok(signed(stirling1_gen(m, k, &p)?, m - k))
}

/// Carlitz degenerate Stirling number of the second kind `S(m, k | lambda)`.
pub fn degen_stirling2(m: usize, k: usize, lam: &Poly) -> Result<Poly, NumbersError> {
    stirling2_gen(m, k, &params(Poly::from_int(1), lam.clone(), Poly::zero())?)
}

/// Howard's degenerate weighted Stirling number of the first kind `S_1(m, k, x | lambda)`.
pub fn howard1(m: usize, k: usize, lam: &Poly, x: &Poly) -> Result<Poly, NumbersError> {
    if k > m {
        return Ok(Poly::zero());
    }
    let p = params(Poly::from_int(1), lam.clone(), lam - x)?;
    Ok(signed(stirling1_gen(m, k, &p)?, m - k))
}

/// Howard's degenerate weighted Stirling number of the second kind `S(m, k, x | lambda)`.
pub fn howard2(m: usize, k: usize, lam: &Poly, x: &Poly) -> Result<Poly, NumbersError> {
    stirling2_gen(m, k, &params(Poly::from_int(1), lam.clone(), -x)?)
}

/// Lah number `L(m, k)` through the generating-function path.
pub fn lah(m: usize, k: usize) -> Poly {
    stirling1_gen(m, k, &StirlingParams::ints(-1, 1, 0).expect("valid")).expect("valid params")
}

/// Lah number from the closed form `(m!/k!) C(m-1, k-1)`, with `L(0,0) = 1`.
pub fn lah_closed(m: usize, k: usize) -> Poly {
    if m == 0 && k == 0 {
        return int_poly(1.into());
    }
    if k == 0 || k > m {
        return Poly::zero();
    }
    int_poly(factorial_int(m as u64) / factorial_int(k as u64) * binomial(m as i64 - 1, k as i64 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::stirling2_gen;

    #[test]
    fn classical_examples() {
        assert_eq!(stirling2(4, 2), Poly::from_int(7));
        assert_eq!(stirling1(4, 2), Poly::from_int(11));
        assert_eq!(stirling1(4, 1), Poly::from_int(-6));
        assert_eq!(stirling1_unsigned(4, 1), Poly::from_int(6));
    }

    #[test]
    fn r_stirling_low_orders_are_classical() {
        for m in 0..=5 {
            for k in 1..=m {
                assert_eq!(r_stirling1(m, k, 0), stirling1_unsigned(m, k), "[{m} {k}]_0");
                assert_eq!(r_stirling1(m, k, 1), stirling1_unsigned(m, k), "[{m} {k}]_1");
                assert_eq!(r_stirling2(m, k, 1), stirling2(m, k), "{{{m} {k}}}_1");
            }
        }
        assert_eq!(r_stirling2(4, 1, 2), Poly::zero());
        // {4 2}_2: 3 and 4 join the blocks of 1 and 2 freely.
        assert_eq!(r_stirling2(4, 2, 2), Poly::from_int(4));
    }

    #[test]
    fn lah_paths_agree() {
        assert_eq!(lah(4, 2), Poly::from_int(36));
        let p = StirlingParams::ints(1, -1, 0).unwrap();
        for m in 0..=6 {
            for k in 0..=m {
                assert_eq!(lah(m, k), lah_closed(m, k));
                assert_eq!(stirling2_gen(m, k, &p).unwrap(), lah_closed(m, k));
            }
        }
    }
}
