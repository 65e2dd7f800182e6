//! Polynomial text reader.
//!
//! Accepts the canonical output format (`x^2 - x - 1/6*lambda^2 + 1/6`) and
//! a little more: parentheses, `/` by a constant, unary signs.  Identifiers
//! other than `lambda`, `mu`, `x`, `y` are rejected.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Rational, RingError, Symbol};
use crate::Poly;

pub fn parse_poly(text: &str) -> Result<Poly, RingError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> RingError {
        RingError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly, RingError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, RingError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            if c == b'*' {
                acc = acc * rhs;
            } else {
                let d = rhs.as_constant().ok_or_else(|| self.error("division by a non-constant"))?;
                if d.is_zero() {
                    return Err(self.error("division by zero"));
                }
                acc = acc.scale(&(Rational::one() / d));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, RingError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, RingError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, RingError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit run parses"))
    }

    fn atom(&mut self) -> Result<Poly, RingError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Poly::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident");
                match Symbol::from_name(name) {
                    Some(sym) => Ok(Poly::symbol(sym)),
                    None => {
                        self.pos = start;
                        Err(self.error(&format!("unknown symbol {name:?} (expected lambda, mu, x or y)")))
                    }
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use proptest::prelude::*;

    #[test]
    fn accepts_canonical_and_loose_forms() {
        let a = parse_poly("x^2 - x - 1/6*lambda^2 + 1/6").unwrap();
        let b = parse_poly("(x - 1/2)^2 - 1/12 - lambda^2/6").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_poly("-3/5").unwrap(), Poly::constant(rat(-3, 5)));
        assert_eq!(parse_poly(" mu * y ").unwrap().to_string(), "y*mu");
    }

    #[test]
    fn rejects_typos_and_garbage() {
        assert!(parse_poly("lamda").is_err());
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("x / y").is_err());
        assert!(parse_poly("1/0").is_err());
        assert!(parse_poly("(x").is_err());
        assert!(parse_poly("x x").is_err());
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        let term = (-6i64..=6, 1i64..=4, 0u32..3, 0u32..3, 0u32..3, 0u32..2)
            .prop_map(|(p, q, a, b, c, d)| Poly::term(rat(p, q), crate::ring::Monomial([a, b, c, d])));
        prop::collection::vec(term, 0..6).prop_map(|ts| ts.into_iter().fold(Poly::zero(), |acc, t| acc + t))
    }

    proptest! {
        #[test]
        fn display_then_parse_is_identity(p in small_poly()) {
            prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }
}
