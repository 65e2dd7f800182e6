//! Exact arithmetic for degenerate Bernoulli polynomials, generalized
//! (Hsu–Shiue) Stirling numbers and the lower-triangular Pascal, Bernoulli
//! and Stirling matrices built from them, together with a catalog of
//! identities that can be checked exactly over parameter grids.
//!
//! The algebra is generic over the scalar type (see [`ring::Ring`]); the
//! aliases below fix the exact choice used throughout the library:
//! arbitrary-precision rationals and polynomials over them in the symbols
//! `lambda`, `mu`, `x`, `y`.

pub mod ledger;
pub mod matrices;
pub mod numbers;
pub mod ring;

pub use ring::{Rational, Symbol};

/// Polynomial in `lambda, mu, x, y` with exact rational coefficients.
pub type Poly = ring::MultiPoly<Rational>;

/// Truncated EGF with polynomial coefficients.
pub type Series = ring::EgfSeries<Poly>;

/// Lower-triangular matrix of polynomials.
pub type Matrix = matrices::LowerTri<Poly>;

/// Floating-point polynomial, for quick numerical exploration.
pub type PolyF64 = ring::MultiPoly<f64>;
/// Floating-point lower-triangular matrix.
pub type MatrixF64 = matrices::LowerTri<f64>;
