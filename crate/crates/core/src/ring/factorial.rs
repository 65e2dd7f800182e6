use super::Ring;

/// Generalized falling factorial `(base|step)_k = base (base - step) ... (base - (k-1) step)`,
/// with `(base|step)_0 = 1`.
pub fn gff<T: Ring>(base: &T, step: &T, k: usize) -> T {
    let mut acc = T::one();
    let mut factor = base.clone();
    for _ in 0..k {
        acc = acc * &factor;
        factor = factor - step;
    }
    acc
}

/// Rising factorial `<base>_k = base (base + 1) ... (base + k - 1)`, `<base>_0 = 1`.
pub fn rising<T: Ring>(base: &T, k: usize) -> T {
    gff(base, &-T::one(), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn falling_with_zero_step_is_power() {
        let two = rat(2, 1);
        assert_eq!(gff(&two, &rat(0, 1), 4), rat(16, 1));
        assert_eq!(gff(&two, &rat(1, 1), 0), rat(1, 1));
        assert_eq!(gff(&two, &rat(1, 1), 3), rat(0, 1));
    }

    #[test]
    fn rising_small() {
        assert_eq!(rising(&rat(2, 1), 3), rat(24, 1));
        assert_eq!(rising(&rat(-5, 1), 0), rat(1, 1));
        assert_eq!(rising(&2.0_f64, 3), 24.0);
    }
}
