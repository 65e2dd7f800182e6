//! Lower-triangular matrices over a ring, and the matrix families built
//! from Pascal, Bernoulli and Stirling data.
//!
//! Indices are 1-based everywhere in the public API.

mod dump;
mod families;

use std::fmt;

use thiserror::Error;

use crate::numbers::NumbersError;
use crate::ring::{Ring, RingError};

pub use families::*;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix orders differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("diagonal entry ({0},{0}) is not 1")]
    NonUnitDiagonal(usize),
    #[error("denominator of entry ({i},{j}) vanishes")]
    ZeroDenominator { i: usize, j: usize },
    #[error("binomial C({a},{b}) in entry ({i},{j}) vanishes for shift h = {h}")]
    BadShift { i: usize, j: usize, h: i64, a: i64, b: i64 },
    #[error("malformed matrix dump: {0}")]
    Dump(String),
    #[error(transparent)]
    Numbers(#[from] NumbersError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// `n x n` lower-triangular matrix; only the entries `j <= i` are stored.
#[derive(Clone, PartialEq)]
pub struct LowerTri<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Ring> LowerTri<T> {
    /// Builds from `f(i, j)` for `1 <= j <= i <= n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let rows = (1..=n).map(|i| (1..=i).map(|j| f(i, j)).collect()).collect();
        LowerTri { rows }
    }

    /// Like [`LowerTri::from_fn`] for fallible entry builders.
    pub fn try_from_fn<E>(n: usize, mut f: impl FnMut(usize, usize) -> Result<T, E>) -> Result<Self, E> {
        let mut rows = Vec::with_capacity(n);
        for i in 1..=n {
            let row = (1..=i).map(|j| f(i, j)).collect::<Result<Vec<_>, E>>()?;
            rows.push(row);
        }
        Ok(LowerTri { rows })
    }

    /// Builds from explicit rows; row `i` must have exactly `i` entries.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(MatrixError::Dump(format!("row {} has {} entries, expected {}", i + 1, row.len(), i + 1)));
            }
        }
        Ok(LowerTri { rows })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| T::zero())
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Entry `(i, j)`, zero above the diagonal. Panics outside `1..=n`.
    pub fn get(&self, i: usize, j: usize) -> T {
        assert!((1..=self.n()).contains(&i) && (1..=self.n()).contains(&j), "index ({i},{j}) out of range");
        if j > i {
            T::zero()
        } else {
            self.rows[i - 1][j - 1].clone()
        }
    }

    /// Stored entry `(i, j)` with `j <= i`.
    pub fn entry(&self, i: usize, j: usize) -> &T {
        &self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn has_unit_diagonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| row[i].is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|e| e.is_zero())
    }

    pub fn map<U: Ring>(&self, mut f: impl FnMut(&T) -> U) -> LowerTri<U> {
        LowerTri { rows: self.rows.iter().map(|r| r.iter().map(&mut f).collect()).collect() }
    }

    /// Keeps entries where `keep(i, j)` holds and zeroes the rest.
    pub fn masked(&self, keep: impl Fn(usize, usize) -> bool) -> Self {
        Self::from_fn(self.n(), |i, j| if keep(i, j) { self.entry(i, j).clone() } else { T::zero() })
    }

    fn same_size(&self, other: &Self) -> Result<(), MatrixError> {
        if self.n() != other.n() {
            return Err(MatrixError::SizeMismatch(self.n(), other.n()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.same_size(other)?;
        Ok(Self::from_fn(self.n(), |i, j| self.entry(i, j).clone() + other.entry(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.same_size(other)?;
        Ok(Self::from_fn(self.n(), |i, j| self.entry(i, j).clone() - other.entry(i, j)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.same_size(other)?;
        Ok(Self::from_fn(self.n(), |i, j| {
            let mut acc = T::zero();
            for k in j..=i {
                let (a, b) = (self.entry(i, k), other.entry(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a.clone() * b;
                }
            }
            acc
        }))
    }

    /// Product of a nonempty list, left to right.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Result<Self, MatrixError>
    where
        T: 'a,
    {
        let mut it = factors.into_iter();
        let first = it.next().expect("at least one factor").clone();
        it.try_fold(first, |acc, m| acc.mul(m))
    }

    /// Inverse of a unit lower-triangular matrix by forward substitution.
    pub fn inv(&self) -> Result<Self, MatrixError> {
        if let Some(i) = (1..=self.n()).find(|&i| !self.entry(i, i).is_one()) {
            return Err(MatrixError::NonUnitDiagonal(i));
        }
        let n = self.n();
        let mut out = Self::identity(n);
        for i in 2..=n {
            for j in 1..i {
                let mut acc = T::zero();
                for k in j..i {
                    let (a, b) = (self.entry(i, k), out.entry(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b;
                    }
                }
                out.rows[i - 1][j - 1] = -acc;
            }
        }
        Ok(out)
    }

    /// Integer power; negative powers need a unit diagonal.
    pub fn pow(&self, k: i64) -> Result<Self, MatrixError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::identity(self.n());
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Block diagonal `a ⊕ b`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (p, q) = (self.n(), other.n());
        Self::from_fn(p + q, |i, j| match (i <= p, j <= p) {
            (true, true) => self.entry(i, j).clone(),
            (false, false) => other.entry(i - p, j - p).clone(),
            _ => T::zero(),
        })
    }
}

impl<T: fmt::Debug> fmt::Debug for LowerTri<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

impl<T: fmt::Display> fmt::Display for LowerTri<T> {
    /// One row per line, entries separated by ` | `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" | ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use crate::Rational;

    fn m(rows: &[&[i64]]) -> LowerTri<Rational> {
        LowerTri::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect()).unwrap()
    }

    #[test]
    fn inverse_and_powers() {
        let a = m(&[&[1], &[2, 1], &[-3, 5, 1]]);
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), LowerTri::identity(3));
        assert_eq!(inv.mul(&a).unwrap(), LowerTri::identity(3));
        assert_eq!(a.pow(0).unwrap(), LowerTri::identity(3));
        assert_eq!(a.pow(-2).unwrap(), inv.mul(&inv).unwrap());
        assert_eq!(a.pow(3).unwrap(), a.mul(&a).unwrap().mul(&a).unwrap());
    }

    #[test]
    fn errors() {
        let a = m(&[&[1], &[2, 3]]);
        assert_eq!(a.inv(), Err(MatrixError::NonUnitDiagonal(2)));
        assert_eq!(a.mul(&LowerTri::identity(3)), Err(MatrixError::SizeMismatch(2, 3)));
        assert!(LowerTri::<Rational>::from_rows(vec![vec![rat(1, 1), rat(0, 1)]]).is_err());
    }

    #[test]
    fn direct_sum_blocks() {
        let a = m(&[&[1], &[2, 1]]);
        let s = m(&[&[7]]).direct_sum(&a);
        assert_eq!(s, m(&[&[7], &[0, 1], &[0, 2, 1]]));
        assert_eq!(s.get(1, 3), rat(0, 1));
    }

    #[test]
    fn f64_entries() {
        let a: LowerTri<f64> = LowerTri::from_fn(3, |i, j| if i == j { 1.0 } else { (i + j) as f64 });
        assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), LowerTri::identity(3));
    }
}
