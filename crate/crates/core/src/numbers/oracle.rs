//! Independent reference computations used to cross-check the
//! generating-function path: a triangular recurrence for the generalized
//! Stirling numbers and brute-force enumerations for the classical ones.

use num_traits::{One, Zero};

use super::{Kind, NumbersError, StirlingParams, Triangle};
use crate::Poly;

/// Triangle of `S(m, k)` for `m <= order` from the recurrence
///
/// `S_1(m+1, k) = S_1(m, k-1) + (k lambda + x - m mu) S_1(m, k)`,
///
/// obtained by differentiating the generating function; the second kind is
/// the same recurrence with `(mu, lambda, x) -> (lambda, mu, -x)`.
pub fn stirling_recurrence(kind: Kind, order: usize, p: &StirlingParams) -> Result<Triangle, NumbersError> {
    if p.mu.is_zero() && p.lambda.is_zero() && p.x.is_zero() {
        return Err(NumbersError::BadParams);
    }
    let (a, b, c) = match kind {
        Kind::First => (p.lambda.clone(), p.mu.clone(), p.x.clone()),
        Kind::Second => (p.mu.clone(), p.lambda.clone(), -&p.x),
    };
    let mut rows: Triangle = vec![vec![Poly::one()]];
    for m in 0..order {
        let prev = &rows[m];
        let mut next = vec![Poly::zero(); m + 2];
        for (k, slot) in next.iter_mut().enumerate() {
            let mut v = if k >= 1 { prev[k - 1].clone() } else { Poly::zero() };
            if k <= m {
                let factor = a.scale(&crate::Rational::from_integer((k as i64).into())) + &c
                    - b.scale(&crate::Rational::from_integer((m as i64).into()));
                v = v + factor * &prev[k];
            }
            *slot = v;
        }
        rows.push(next);
    }
    Ok(rows)
}

/// Single value from [`stirling_recurrence`].
pub fn oracle_stirling_recurrence(kind: Kind, m: usize, k: usize, p: &StirlingParams) -> Result<Poly, NumbersError> {
    let tri = stirling_recurrence(kind, m, p)?;
    Ok(tri[m].get(k).cloned().unwrap_or_else(Poly::zero))
}

/// Calls `visit` with the block label of every element for each set
/// partition of `{0, .., n-1}` (restricted growth strings).
fn for_each_set_partition(n: usize, mut visit: impl FnMut(&[usize], usize)) {
    fn go(labels: &mut Vec<usize>, n: usize, blocks: usize, visit: &mut dyn FnMut(&[usize], usize)) {
        if labels.len() == n {
            visit(labels, blocks);
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            go(labels, n, blocks.max(b + 1), visit);
            labels.pop();
        }
    }
    go(&mut Vec::with_capacity(n), n, 0, &mut visit);
}

/// Number of partitions of an `n`-set into `k` blocks with the first `r`
/// elements in distinct blocks (`r = 0` gives the classical count).
pub fn count_set_partitions(n: usize, k: usize, r: usize) -> u64 {
    let mut count = 0;
    for_each_set_partition(n, |labels, blocks| {
        // restricted growth puts the first r elements in distinct blocks iff labels are 0..r
        if blocks == k && labels.iter().take(r).enumerate().all(|(i, &b)| b == i) {
            count += 1;
        }
    });
    count
}

/// Number of partitions of an `n`-set into `k` nonempty linearly ordered lists.
pub fn count_ordered_lists(n: usize, k: usize) -> u64 {
    let mut count = 0;
    for_each_set_partition(n, |labels, blocks| {
        if blocks == k {
            let mut sizes = vec![0u64; blocks];
            for &b in labels {
                sizes[b] += 1;
            }
            count += sizes.iter().map(|&s| (1..=s).product::<u64>()).product::<u64>();
        }
    });
    count
}

fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        visit(&perm);
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).expect("successor exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// Number of permutations of `n` elements with `k` cycles and the first `r`
/// elements in distinct cycles.
pub fn count_permutations_by_cycles(n: usize, k: usize, r: usize) -> u64 {
    let mut count = 0;
    for_each_permutation(n, |perm| {
        let mut cycle_of = vec![usize::MAX; n];
        let mut cycles = 0;
        for start in 0..n {
            if cycle_of[start] != usize::MAX {
                continue;
            }
            let mut e = start;
            while cycle_of[e] == usize::MAX {
                cycle_of[e] = cycles;
                e = perm[e];
            }
            cycles += 1;
        }
        // cycles are numbered by their smallest element, so distinctness of
        // the first r elements means they got labels 0..r
        if cycles == k && (0..r.min(n)).all(|i| cycle_of[i] == i) {
            count += 1;
        }
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::stirling_triangle;
    use crate::Symbol;

    #[test]
    fn small_counts() {
        assert_eq!(count_set_partitions(4, 2, 0), 7);
        assert_eq!(count_set_partitions(0, 0, 0), 1);
        assert_eq!(count_permutations_by_cycles(4, 2, 0), 11);
        assert_eq!(count_permutations_by_cycles(0, 0, 0), 1);
        assert_eq!(count_ordered_lists(4, 2), 36);
        assert_eq!(count_set_partitions(4, 2, 2), 4);
        assert_eq!(count_permutations_by_cycles(3, 2, 2), 2);
    }

    #[test]
    fn recurrence_base() {
        let p = StirlingParams::ints(1, 0, 0).unwrap();
        assert_eq!(oracle_stirling_recurrence(Kind::Second, 0, 0, &p).unwrap(), Poly::one());
        let zero = StirlingParams { mu: Poly::zero(), lambda: Poly::zero(), x: Poly::zero() };
        assert_eq!(stirling_recurrence(Kind::First, 3, &zero), Err(NumbersError::BadParams));
    }

    #[test]
    fn recurrence_matches_generating_function_symbolically() {
        let p = StirlingParams::new(Poly::symbol(Symbol::Mu), Poly::symbol(Symbol::Lambda), Poly::symbol(Symbol::X)).unwrap();
        for kind in [Kind::First, Kind::Second] {
            let rec = stirling_recurrence(kind, 5, &p).unwrap();
            let gf = stirling_triangle(kind, 5, &p).unwrap();
            for m in 0..=5 {
                assert_eq!(rec[m], gf[m][..=m], "{kind:?} row {m}");
            }
        }
    }
}
