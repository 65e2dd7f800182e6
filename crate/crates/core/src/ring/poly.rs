use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

use super::{format_rational, Field, Rational, Ring, RingError, Symbol};

/// Exponent vector over the slots `(lambda, mu, x, y)`.
///
/// Ordered lexicographically by the exponents of `x`, `y`, `lambda`, `mu`
/// (in that priority), so the largest monomial prints first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn of(sym: Symbol, exp: u32) -> Self {
        let mut e = [0; 4];
        e[sym.slot()] = exp;
        Monomial(e)
    }

    pub fn exp(&self, sym: Symbol) -> u32 {
        self.0[sym.slot()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn priority_key(&self) -> [u32; 4] {
        let e = self.0;
        [e[2], e[3], e[0], e[1]]
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.priority_key().cmp(&other.priority_key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// multiplying monomials adds exponents
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(rhs.0) {
            *a += b;
        }
        Monomial(e)
    }
}

/// Partial assignment of values to symbols.
pub type Bindings<C> = BTreeMap<Symbol, C>;

/// Sparse polynomial in `lambda, mu, x, y` with coefficients in `C`.
///
/// Zero coefficients are never stored, so two equal polynomials always have
/// identical term maps and `==` is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Ring> MultiPoly<C> {
    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        MultiPoly { terms }
    }

    /// Constant polynomial from a machine integer.
    pub fn from_int(n: i64) -> Self {
        Self::constant(<C as Ring>::from_int(n))
    }

    pub fn symbol(sym: Symbol) -> Self {
        Self::term(C::one(), Monomial::of(sym, 1))
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(iter: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// The value when the polynomial mentions no symbol.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn degree(&self, sym: Symbol) -> u32 {
        self.terms.keys().map(|m| m.exp(sym)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn mentions(&self, sym: Symbol) -> bool {
        self.terms.keys().any(|m| m.exp(sym) > 0)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (*m, a.clone() * c)).filter(|(_, a)| !a.is_zero()).collect() }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes constants for the bound symbols; unbound symbols stay formal.
    pub fn eval(&self, bindings: &Bindings<C>) -> Self {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = *m;
            for (sym, value) in bindings {
                let e = m.exp(*sym);
                if e > 0 {
                    coeff = coeff * &pow_scalar(value, e);
                    rest.0[sym.slot()] = 0;
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Simultaneously replaces each listed symbol by a polynomial.
    pub fn substitute(&self, subs: &[(Symbol, MultiPoly<C>)]) -> Self {
        if subs.is_empty() {
            return self.clone();
        }
        let mut powers: Vec<(Symbol, Vec<MultiPoly<C>>)> = subs.iter().map(|(s, p)| (*s, vec![MultiPoly::one(), p.clone()])).collect();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut acc = MultiPoly::constant(c.clone());
            for (sym, table) in powers.iter_mut() {
                let e = m.exp(*sym) as usize;
                if e == 0 {
                    continue;
                }
                rest.0[sym.slot()] = 0;
                while table.len() <= e {
                    let next = &table[table.len() - 1] * &table[1];
                    table.push(next);
                }
                acc = &acc * &table[e];
            }
            for (mono, coeff) in acc.terms {
                out.add_term(mono * rest, coeff);
            }
        }
        out
    }

    /// Divides by `sym`, failing when some term does not contain it.
    pub fn exact_div_symbol(&self, sym: Symbol) -> Result<Self, RingError> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exp(sym) == 0 {
                return Err(RingError::NotDivisible(sym.name().to_string()));
            }
            let mut e = *m;
            e.0[sym.slot()] -= 1;
            terms.insert(e, c.clone());
        }
        Ok(MultiPoly { terms })
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }
}

impl<C: Field> MultiPoly<C> {
    /// Exact quotient `self / divisor`.
    ///
    /// Runs multivariate division against a single divisor under the
    /// monomial order; divisibility holds iff the remainder vanishes.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, RingError> {
        let (dm, dc) = match divisor.leading() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(RingError::NotDivisible("0".into())),
        };
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let mut e = [0u32; 4];
            for (slot, out) in e.iter_mut().enumerate() {
                match rm.0[slot].checked_sub(dm.0[slot]) {
                    Some(v) => *out = v,
                    None => return Err(RingError::NotDivisible(format!("{divisor:?}"))),
                }
            }
            let t = MultiPoly::term(rc.clone() / &dc, Monomial(e));
            rem = rem - &(&t * divisor);
            quot += &t;
        }
        Ok(quot)
    }
}

fn pow_scalar<C: Ring>(c: &C, e: u32) -> C {
    (0..e).fold(C::one(), |acc, _| acc * c)
}

impl<C: Ring> Zero for MultiPoly<C> {
    fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for MultiPoly<C> {
    fn one() -> Self {
        MultiPoly::constant(C::one())
    }
}

impl<C: Ring> FromPrimitive for MultiPoly<C> {
    fn from_i64(n: i64) -> Option<Self> {
        C::from_i64(n).map(MultiPoly::constant)
    }
    fn from_u64(n: u64) -> Option<Self> {
        C::from_u64(n).map(MultiPoly::constant)
    }
}

impl<C: Ring> From<Symbol> for MultiPoly<C> {
    fn from(s: Symbol) -> Self {
        MultiPoly::symbol(s)
    }
}

impl<'a, C: Ring> Add<&'a MultiPoly<C>> for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a, C: Ring> AddAssign<&'a MultiPoly<C>> for MultiPoly<C> {
    fn add_assign(&mut self, rhs: &'a MultiPoly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a, C: Ring> Sub<&'a MultiPoly<C>> for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a, C: Ring> Mul<&'a MultiPoly<C>> for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca.clone() * cb);
            }
        }
        out
    }
}

impl<C: Ring> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        MultiPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<C: Ring> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<C: Ring> $tr<MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, C: Ring> $tr<&'a MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: &'a MultiPoly<C>) -> MultiPoly<C> {
                (&self).$method(rhs)
            }
        }
        impl<C: Ring> $tr<MultiPoly<C>> for &MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Coefficient types that know how to print themselves inside a polynomial.
pub trait CoeffFormat {
    /// Returns `(is_negative, magnitude text, magnitude is one)`.
    fn split_sign(&self) -> (bool, String, bool);
}

impl CoeffFormat for Rational {
    fn split_sign(&self) -> (bool, String, bool) {
        let neg = self < &Rational::zero();
        let mag = if neg { -self.clone() } else { self.clone() };
        (neg, format_rational(&mag), mag.is_one())
    }
}

impl CoeffFormat for f64 {
    fn split_sign(&self) -> (bool, String, bool) {
        let mag = self.abs();
        (self.is_sign_negative(), format!("{mag}"), mag == 1.0)
    }
}

const PRINT_ORDER: [Symbol; 4] = [Symbol::X, Symbol::Y, Symbol::Lambda, Symbol::Mu];

impl<C: Ring + CoeffFormat> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag, unit) = c.split_sign();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !unit || *m == Monomial::ONE {
                factors.push(mag);
            }
            for sym in PRINT_ORDER {
                match m.exp(sym) {
                    0 => {}
                    1 => factors.push(sym.name().to_string()),
                    e => factors.push(format!("{}^{e}", sym.name())),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("MultiPoly")?;
        f.debug_map().entries(self.terms.iter().rev().map(|(m, c)| (m.0, c))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, rat};
    use crate::Poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn canonical_print_order() {
        let beta2 = p("x^2 - x - 1/6*lambda^2 + 1/6");
        assert_eq!(beta2.to_string(), "x^2 - x - 1/6*lambda^2 + 1/6");
        assert_eq!(p("2*lambda^2*x + x^3 - 3*lambda*x^2").to_string(), "x^3 - 3*x^2*lambda + 2*x*lambda^2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p("-lambda").to_string(), "-lambda");
        assert_eq!(p("-3/2").to_string(), "-3/2");
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x") * &p("x - lambda"), p("x^2 - x*lambda"));
        assert_eq!(&p("x*y + 1/2") + &Poly::zero(), p("x*y + 1/2"));
        assert_eq!(&p("x + lambda/2 - 1/2") - &p("x"), p("lambda/2 - 1/2"));
        assert!((&p("x") - &p("x")).is_zero());
    }

    #[test]
    fn eval_partial() {
        let beta2 = p("x^2 - x - lambda^2/6 + 1/6");
        let mut b = Bindings::new();
        b.insert(Symbol::Lambda, rat(0, 1));
        assert_eq!(beta2.eval(&b), p("x^2 - x + 1/6"));
        assert_eq!(beta2.eval(&Bindings::new()), beta2);
        let mut b = Bindings::new();
        b.insert(Symbol::X, rat(3, 1));
        b.insert(Symbol::Lambda, rat(1, 3));
        assert_eq!(p("x*lambda").eval(&b), Poly::one());
    }

    #[test]
    fn symbol_division() {
        assert_eq!(p("lambda*x + lambda^2").exact_div_symbol(Symbol::Lambda).unwrap(), p("x + lambda"));
        assert_eq!(p("lambda").exact_div_symbol(Symbol::Lambda).unwrap(), Poly::one());
        assert!(matches!(p("x").exact_div_symbol(Symbol::Lambda), Err(RingError::NotDivisible(_))));
    }

    #[test]
    fn polynomial_division() {
        let num = p("x*(x - lambda)*(x - 2*lambda)*(x - 3*lambda)");
        let den = p("(x - lambda)*(x - 2*lambda)");
        assert_eq!(num.exact_div(&den).unwrap(), p("x^2 - 3*x*lambda"));
        assert!(p("x^2 + 1").exact_div(&p("x + 1")).is_err());
    }

    #[test]
    fn simultaneous_substitution_swaps() {
        let q = p("lambda^2 + 2*mu");
        let swapped = q.substitute(&[(Symbol::Lambda, p("mu")), (Symbol::Mu, p("lambda"))]);
        assert_eq!(swapped, p("mu^2 + 2*lambda"));
        let shifted = p("x^2").substitute(&[(Symbol::X, p("x - y"))]);
        assert_eq!(shifted, p("x^2 - 2*x*y + y^2"));
    }

    #[test]
    fn generic_over_f64() {
        let a: MultiPoly<f64> = MultiPoly::symbol(Symbol::X) + MultiPoly::constant(0.5);
        let sq = &a * &a;
        assert_eq!(sq.coeff(&Monomial::ONE), 0.25);
        assert_eq!(sq.to_string(), "x^2 + x + 0.25");
    }
}
