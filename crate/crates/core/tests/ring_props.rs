use std::collections::BTreeMap;

use degenmat::ring::{parse_poly, rat, Monomial};
use degenmat::{Matrix, Poly, Rational, Series, Symbol};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..2, 0u32..3, 0u32..2), -5i64..=5, 1i64..=3), 0..5)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|((a, b, c, d), n, q)| (Monomial([a, b, c, d]), rat(n, q)))))
}

fn point() -> impl Strategy<Value = BTreeMap<Symbol, Rational>> {
    prop::collection::vec((-4i64..=4, 1i64..=3), 4)
        .prop_map(|v| [Symbol::Lambda, Symbol::Mu, Symbol::X, Symbol::Y].into_iter().zip(v).map(|(s, (n, q))| (s, rat(n, q))).collect())
}

fn unit_lower(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, n * n)
        .prop_map(move |v| Matrix::from_fn(n, |i, j| if i == j { Poly::one() } else { Poly::from_int(v[(i - 1) * n + j - 1]) }))
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), p in point()) {
        let ev = |q: &Poly| q.eval(&p).as_constant().unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    #[test]
    fn display_parses_back(a in poly()) {
        prop_assert_eq!(parse_poly(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn series_inverse(c in prop::collection::vec(-4i64..=4, 1..6)) {
        let s = Series::new(std::iter::once(Poly::one()).chain(c.iter().map(|&v| Poly::from_int(v))).collect());
        let prod = s.mul(&s.inv().unwrap()).unwrap();
        prop_assert_eq!(prod, Series::identity(s.order()));
    }

    #[test]
    fn unit_lower_inverse_and_powers(m in unit_lower(4)) {
        let inv = m.inv().unwrap();
        prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(4));
        prop_assert_eq!(m.pow(-2).unwrap(), inv.mul(&inv).unwrap());
        prop_assert_eq!(m.pow(3).unwrap(), Matrix::product([&m, &m, &m]).unwrap());
    }
}

#[test]
fn print_order_puts_x_first() {
    let p = parse_poly("lambda*mu + y + x^2 - 1/2").unwrap();
    assert_eq!(p.to_string(), "x^2 + y + lambda*mu - 1/2");
}
