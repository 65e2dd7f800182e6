//! Exact scalar, polynomial and truncated exponential-generating-function
//! arithmetic.
//!
//! Everything here is generic over a [`Ring`] element so the same code runs
//! on `BigRational` (the default, exact) or on `f64` for quick numerical
//! exploration.  The rest of the crate uses the concrete aliases exported
//! from the crate root.

mod factorial;
mod parse;
mod poly;
mod rational;
mod series;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};
use thiserror::Error;

pub use factorial::{gff, rising};
pub use parse::parse_poly;
pub use poly::{Bindings, Monomial, MultiPoly};
pub use rational::{binomial, factorial as factorial_int, format_rational, parse_rational, rat, Rational};
pub use series::EgfSeries;

/// Commutative ring element with the operations the crate relies on.
///
/// Implemented automatically for every type that provides the listed
/// operator impls, including `BigRational`, `f64` and [`MultiPoly`].
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Embeds a machine integer.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer embedding")
    }
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + FromPrimitive
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + for<'a> Add<&'a T, Output = T>
        + for<'a> Sub<&'a T, Output = T>
        + for<'a> Mul<&'a T, Output = T>
{
}

/// A [`Ring`] with division by nonzero elements.
pub trait Field: Ring + Div<Output = Self> + for<'a> Div<&'a Self, Output = Self> {}

impl<T> Field for T where T: Ring + Div<Output = T> + for<'a> Div<&'a T, Output = T> {}

/// The fixed set of formal symbols a polynomial may mention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Lambda,
    Mu,
    X,
    Y,
}

impl Symbol {
    pub const ALL: [Symbol; 4] = [Symbol::Lambda, Symbol::Mu, Symbol::X, Symbol::Y];

    /// Slot in the exponent vector `(lambda, mu, x, y)`.
    pub fn slot(self) -> usize {
        match self {
            Symbol::Lambda => 0,
            Symbol::Mu => 1,
            Symbol::X => 2,
            Symbol::Y => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Lambda => "lambda",
            Symbol::Mu => "mu",
            Symbol::X => "x",
            Symbol::Y => "y",
        }
    }

    pub fn from_name(name: &str) -> Option<Symbol> {
        Symbol::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl std::fmt::Display for Symbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("polynomial is not divisible by {0}")]
    NotDivisible(String),
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series constant term is not 1")]
    NonUnitConstant,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
