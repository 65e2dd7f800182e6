use degenmat::ledger::{self, catalog, verify_spec, Grid, LedgerError, Profile};
use degenmat::matrices::{bernoulli_matrix, g_factor, g_factor_via_t, pascal, t_matrix};
use degenmat::ring::binomial;
use degenmat::{Matrix, Poly, Symbol};

fn lam() -> Poly {
    Poly::symbol(Symbol::Lambda)
}

fn x() -> Poly {
    Poly::symbol(Symbol::X)
}

/// `(x|λ)_k` by direct multiplication.
fn gff(x: &Poly, lam: &Poly, k: usize) -> Poly {
    (0..k).fold(Poly::from_int(1), |acc, i| &acc * &(x - &(lam * &Poly::from_int(i as i64))))
}

#[test]
fn pascal_entries_are_binomial_times_falling_factorial() {
    let p = pascal(6, &lam(), &x());
    for i in 1..=6 {
        for j in 1..=i {
            let c = Poly::from_int(binomial(i as i64 - 1, j as i64 - 1).try_into().unwrap());
            assert_eq!(p.get(i, j), &c * &gff(&x(), &lam(), i - j));
        }
    }
}

#[test]
fn pascal_factors_through_g_and_t() {
    for n in 1..=6 {
        let chain: Vec<Matrix> = (1..=n).rev().map(|k| g_factor(n, k, &lam(), &x()).unwrap()).collect();
        assert_eq!(Matrix::product(chain.iter()).unwrap(), pascal(n, &lam(), &x()));
        for k in 1..=n {
            assert_eq!(g_factor(n, k, &lam(), &x()).unwrap(), g_factor_via_t(n, k, &lam(), &x()));
        }
    }
    let t = t_matrix(4, &lam(), &x());
    assert!(t.has_unit_diagonal());
}

#[test]
fn bernoulli_matrix_of_order_zero_is_pascal() {
    assert_eq!(bernoulli_matrix(5, 0, &lam(), &x()), pascal(5, &lam(), &x()));
}

#[test]
fn default_quick_profile_is_clean() {
    assert!(catalog().len() >= 40);
    for r in ledger::verify_all(Profile::Quick) {
        assert!(r.is_clean() && r.attempted > 0, "{r}: {:?}", r.failures.first());
    }
}

#[test]
fn perturbed_entries_fail() {
    let grid = Grid::new(Profile::Quick);
    for spec in catalog().iter().step_by(7) {
        let r = verify_spec(&spec.perturbed(), &grid).unwrap();
        assert!(!r.is_clean(), "{} survived perturbation", spec.id);
    }
}

#[test]
fn grid_errors() {
    assert!(matches!(ledger::verify("no-such-id", &Grid::default()), Err(LedgerError::UnknownIdentity(_))));
    assert!(ledger::verify("thm-2.1", &Grid::default().range("zz", 0, 1)).is_err());
    let narrow = ledger::verify("thm-2.1", &Grid::default().range("n", 2, 3)).unwrap();
    assert!(narrow.is_clean() && narrow.attempted > 0 && narrow.attempted < 24);
}
