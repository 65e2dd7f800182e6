use super::{Ring, RingError};
use crate::ring::rational::binomial;

/// Truncated exponential generating function `sum_{m<=N} a_m t^m / m!`.
///
/// Stores `a_m` itself (not `a_m / m!`), so products are binomial
/// convolutions and no denominators appear for integral data.
#[derive(Clone, Debug, PartialEq)]
pub struct EgfSeries<T> {
    coeffs: Vec<T>,
}

fn binom_t<T: Ring>(m: usize, k: usize) -> T {
    let c = binomial(m as i64, k as i64);
    let c: u64 = c.try_into().expect("binomial fits in u64");
    T::from_u64(c).expect("integer embedding")
}

impl<T: Ring> EgfSeries<T> {
    /// Series with the given coefficients; order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        EgfSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        EgfSeries { coeffs: (0..=order).map(f).collect() }
    }

    /// The multiplicative identity `(1, 0, ..., 0)`.
    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |m| if m == 0 { T::one() } else { T::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &T {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Keeps coefficients up to `order`.
    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    /// Coefficientwise map, e.g. to substitute into polynomial coefficients.
    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> EgfSeries<U> {
        EgfSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Binomial convolution `c_m = sum_k C(m,k) a_k b_{m-k}`.
    pub fn mul(&self, other: &Self) -> Result<Self, RingError> {
        if self.order() != other.order() {
            return Err(RingError::OrderMismatch(self.order(), other.order()));
        }
        let n = self.order();
        let coeffs = (0..=n)
            .map(|m| {
                let mut acc = T::zero();
                for k in 0..=m {
                    let (a, b) = (&self.coeffs[k], &other.coeffs[m - k]);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * b * &binom_t::<T>(m, k);
                }
                acc
            })
            .collect();
        Ok(EgfSeries { coeffs })
    }

    /// Reciprocal of a series with constant term 1, by forward substitution.
    pub fn inv(&self) -> Result<Self, RingError> {
        if !self.coeffs[0].is_one() {
            return Err(RingError::NonUnitConstant);
        }
        let n = self.order();
        let mut out: Vec<T> = Vec::with_capacity(n + 1);
        out.push(T::one());
        for m in 1..=n {
            let mut acc = T::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc + self.coeffs[k].clone() * &out[m - k] * &binom_t::<T>(m, k);
            }
            out.push(-acc);
        }
        Ok(EgfSeries { coeffs: out })
    }

    /// Integer power; negative exponents go through [`EgfSeries::inv`].
    pub fn pow(&self, k: i64) -> Result<Self, RingError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{gff, rat, Rational, Symbol};
    use crate::Poly;
    use num_traits::One;

    fn rs(v: &[i64]) -> EgfSeries<Rational> {
        EgfSeries::new(v.iter().map(|&a| rat(a, 1)).collect())
    }

    #[test]
    fn hand_convolution() {
        assert_eq!(rs(&[1, 1, 1]).mul(&rs(&[1, 1, 1])).unwrap(), rs(&[1, 2, 4]));
        let a = rs(&[1, 3, -2, 5]);
        assert_eq!(a.mul(&EgfSeries::identity(3)).unwrap(), a);
    }

    #[test]
    fn order_mismatch() {
        assert_eq!(rs(&[1, 1]).mul(&rs(&[1, 1, 1])), Err(RingError::OrderMismatch(1, 2)));
    }

    #[test]
    fn exponential_inverse() {
        assert_eq!(rs(&[1, 1, 1]).inv().unwrap(), rs(&[1, -1, 1]));
        assert_eq!(EgfSeries::<Rational>::identity(4).inv().unwrap(), EgfSeries::identity(4));
        assert_eq!(rs(&[2, 1]).inv(), Err(RingError::NonUnitConstant));
        assert_eq!(rs(&[2, 1]).pow(-1), Err(RingError::NonUnitConstant));
    }

    #[test]
    fn powers() {
        let a = rs(&[1, 4, -1, 7]);
        assert_eq!(a.pow(0).unwrap(), EgfSeries::identity(3));
        assert_eq!(a.pow(1).unwrap(), a);
        assert_eq!(a.pow(3).unwrap(), a.mul(&a).unwrap().mul(&a).unwrap());
        assert_eq!(a.pow(-2).unwrap().mul(&a.pow(2).unwrap()).unwrap(), EgfSeries::identity(3));
    }

    #[test]
    fn squaring_gff_of_one_gives_gff_of_two() {
        // Independent check: the square is computed by direct convolution, the
        // target is (2|lambda)_m evaluated term by term.
        let lam = Poly::symbol(Symbol::Lambda);
        let one = Poly::one();
        let two = Poly::from_int(2);
        let s = EgfSeries::from_fn(6, |m| gff(&one, &lam, m));
        let sq = s.pow(2).unwrap();
        for m in 0..=6 {
            let mut direct = Poly::from_int(0);
            for k in 0..=m {
                let c = Poly::constant(Rational::from_integer(binomial(m as i64, k as i64)));
                direct = direct + c * gff(&one, &lam, k) * gff(&one, &lam, m - k);
            }
            assert_eq!(sq.coeff(m), &direct);
            assert_eq!(sq.coeff(m), &gff(&two, &lam, m));
        }
    }

    #[test]
    fn f64_series() {
        let e: EgfSeries<f64> = EgfSeries::new(vec![1.0; 5]);
        let inv = e.inv().unwrap();
        assert_eq!(inv.coeffs(), &[1.0, -1.0, 1.0, -1.0, 1.0]);
        assert!(Rational::one() == rat(1, 1));
    }
}
