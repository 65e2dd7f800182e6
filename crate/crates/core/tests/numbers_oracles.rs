use degenmat::numbers::oracle::{count_ordered_lists, count_permutations_by_cycles, count_set_partitions, oracle_stirling_recurrence};
use degenmat::numbers::{self, Kind, StirlingParams};
use degenmat::ring::{binomial, rat};
use degenmat::{Poly, Rational, Symbol};
use num_traits::{One, Zero};

fn n(v: u64) -> Poly {
    Poly::from_int(v as i64)
}

fn harmonic(m: i64) -> Rational {
    (1..=m).map(|k| rat(1, k)).fold(Rational::zero(), |a, b| a + b)
}

/// Classical Bernoulli numbers from `sum_{k<=n} C(n+1, k) B_k = 0`.
fn bernoulli_numbers(order: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=order {
        let s = (0..m).map(|k| Rational::from_integer(binomial(m as i64 + 1, k as i64)) * &b[k]).fold(Rational::zero(), |a, c| a + c);
        b.push(-s / Rational::from_integer((m as i64 + 1).into()));
    }
    b
}

#[test]
fn classical_stirling_numbers_count_partitions_and_cycles() {
    for m in 0..=7 {
        for k in 0..=m {
            assert_eq!(numbers::stirling2(m, k), n(count_set_partitions(m, k, 0)), "S2({m},{k})");
            assert_eq!(numbers::stirling1_unsigned(m, k), n(count_permutations_by_cycles(m, k, 0)), "S1({m},{k})");
            assert_eq!(numbers::lah(m, k), n(count_ordered_lists(m, k)), "L({m},{k})");
            assert_eq!(numbers::lah(m, k), numbers::lah_closed(m, k));
        }
    }
}

#[test]
fn r_stirling_numbers_count_restricted_structures() {
    for r in 0..=3 {
        for m in r..=7 {
            for k in r..=m {
                assert_eq!(numbers::r_stirling2(m, k, r), n(count_set_partitions(m, k, r)), "{{{m} {k}}}_{r}");
                assert_eq!(numbers::r_stirling1(m, k, r), n(count_permutations_by_cycles(m, k, r)), "[{m} {k}]_{r}");
            }
        }
    }
    assert_eq!(numbers::r_stirling1(4, 2, 2), n(6));
}

#[test]
fn generalized_stirling_numbers_match_recurrence() {
    let sym = |s| Poly::symbol(s);
    let points = [
        StirlingParams::new(sym(Symbol::Mu), sym(Symbol::Lambda), sym(Symbol::X)).unwrap(),
        StirlingParams::ints(2, -1, 3).unwrap(),
        StirlingParams::ints(0, 1, 0).unwrap(),
        StirlingParams::ints(0, 0, 1).unwrap(),
    ];
    for p in &points {
        for kind in [Kind::First, Kind::Second] {
            for m in 0..=5 {
                for k in 0..=m {
                    assert_eq!(numbers::stirling_gen(kind, m, k, p).unwrap(), oracle_stirling_recurrence(kind, m, k, p).unwrap());
                }
            }
        }
    }
    assert!(StirlingParams::ints(0, 0, 0).is_err());
}

#[test]
fn bernoulli_limits() {
    let b = bernoulli_numbers(8);
    let zero = Poly::zero();
    for (m, bm) in b.iter().enumerate() {
        assert_eq!(numbers::beta(m, 1, &zero, &zero), Poly::constant(bm.clone()), "beta_{m}(0,0)");
        assert_eq!(numbers::bernoulli_classic(m, 1, &zero), Poly::constant(bm.clone()));
    }
    let x = Poly::symbol(Symbol::X);
    assert_eq!(numbers::beta(1, 1, &Poly::symbol(Symbol::Lambda), &x).to_string(), "x + 1/2*lambda - 1/2");
    assert_eq!(numbers::bernoulli_second(1, 1, &zero), Poly::constant(rat(1, 2)));
    assert_eq!(numbers::bernoulli_second(2, 1, &zero), Poly::constant(rat(-1, 12)));
    assert_eq!(numbers::bernoulli_second(2, 0, &Poly::from_int(3)), n(3));
}

#[test]
fn hyperharmonic_closed_form() {
    for r in 1..=5i64 {
        for m in 1..=8i64 {
            let closed = Rational::from_integer(binomial(m + r - 1, r - 1)) * (harmonic(m + r - 1) - harmonic(r - 1));
            assert_eq!(numbers::hyperharmonic(m, r), closed, "H_{m}^{r}");
        }
    }
    assert_eq!(numbers::hyperharmonic(3, 0), rat(1, 3));
    assert_eq!(numbers::hyperharmonic(0, 2), Rational::zero());
    assert_eq!(numbers::hyperharmonic(3, -1), Rational::zero());
}
