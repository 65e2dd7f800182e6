//! `compute`: which indices and parameters each sequence takes, and how to
//! evaluate it at one point of the index grid.

use clap::ValueEnum;
use degenmat::numbers::{self, StirlingParams};
use degenmat::ring::{gff, rising};
use degenmat::{Poly, Symbol};

use crate::Exit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sequence {
    /// Degenerate Bernoulli polynomial beta_m^(w)(lambda, x)
    Beta,
    /// Degenerate Bernoulli polynomial of the second kind alpha_m^(w)(lambda, x)
    Alpha,
    /// Higher-order Bernoulli polynomial B_m^(w)(x)
    Bernoulli,
    /// Higher-order Bernoulli polynomial of the second kind b_m^(w)(x)
    Bernoulli2,
    /// Signed Stirling numbers of the first kind s(m, k)
    Stirling1,
    /// Stirling numbers of the second kind S(m, k)
    Stirling2,
    /// Generalized S_1(m, k | mu, lambda, x)
    #[value(name = "stirling1-gen")]
    Stirling1Gen,
    /// Generalized S_2(m, k | mu, lambda, x)
    #[value(name = "stirling2-gen")]
    Stirling2Gen,
    /// Unsigned r-Stirling numbers of the first kind [m k]_r
    #[value(name = "r-stirling1")]
    RStirling1,
    /// r-Stirling numbers of the second kind {m k}_r
    #[value(name = "r-stirling2")]
    RStirling2,
    /// Unsigned Lah numbers L(m, k)
    Lah,
    /// Hyperharmonic numbers H_m^(r)
    Hyperharmonic,
    /// Generalized falling factorial (x | lambda)_m
    Gff,
    /// Rising factorial <x>_m
    Rising,
}

/// Integer indices in the order they are printed, with defaults for optional ones.
pub fn indices(seq: Sequence) -> &'static [(&'static str, Option<i64>)] {
    use Sequence::*;
    match seq {
        Beta | Alpha | Bernoulli | Bernoulli2 => &[("m", None), ("w", Some(1))],
        Stirling1 | Stirling2 | Stirling1Gen | Stirling2Gen | Lah => &[("m", None), ("k", None)],
        RStirling1 | RStirling2 => &[("m", None), ("k", None), ("r", None)],
        Hyperharmonic => &[("m", None), ("r", None)],
        Gff | Rising => &[("m", None)],
    }
}

/// Parameters the sequence depends on; unset ones stay formal symbols.
pub fn params(seq: Sequence) -> &'static [Symbol] {
    use Sequence::*;
    use Symbol::*;
    match seq {
        Beta | Alpha | Gff => &[Lambda, X],
        Bernoulli | Bernoulli2 | Rising => &[X],
        Stirling1Gen | Stirling2Gen => &[Mu, Lambda, X],
        Stirling1 | Stirling2 | RStirling1 | RStirling2 | Lah | Hyperharmonic => &[],
    }
}

/// Row/column indices of sequences that vanish above the diagonal `k > m`.
pub fn triangular(seq: Sequence) -> bool {
    indices(seq).iter().any(|(n, _)| *n == "k")
}

fn nonneg(name: &str, v: i64) -> Result<usize, Exit> {
    usize::try_from(v).map_err(|_| Exit::usage(format!("--{name} must be nonnegative, got {v}")))
}

/// Value at one grid point; `ix` follows the order of [`indices`], `p` of [`params`].
pub fn eval(seq: Sequence, ix: &[i64], p: &[Poly]) -> Result<Poly, Exit> {
    use Sequence::*;
    let u = |i: usize| nonneg(indices(seq)[i].0, ix[i]);
    let bad = |e: numbers::NumbersError| Exit::usage(e.to_string());
    Ok(match seq {
        Beta => numbers::beta(u(0)?, ix[1], &p[0], &p[1]),
        Alpha => numbers::alpha(u(0)?, ix[1], &p[0], &p[1]),
        Bernoulli => numbers::bernoulli_classic(u(0)?, ix[1], &p[0]),
        Bernoulli2 => numbers::bernoulli_second(u(0)?, ix[1], &p[0]),
        Stirling1 => numbers::stirling1(u(0)?, u(1)?),
        Stirling2 => numbers::stirling2(u(0)?, u(1)?),
        Stirling1Gen | Stirling2Gen => {
            let sp = StirlingParams::new(p[0].clone(), p[1].clone(), p[2].clone()).map_err(bad)?;
            let f = if seq == Stirling1Gen { numbers::stirling1_gen } else { numbers::stirling2_gen };
            f(u(0)?, u(1)?, &sp).map_err(bad)?
        }
        RStirling1 => numbers::r_stirling1(u(0)?, u(1)?, u(2)?),
        RStirling2 => numbers::r_stirling2(u(0)?, u(1)?, u(2)?),
        Lah => numbers::lah_closed(u(0)?, u(1)?),
        Hyperharmonic => Poly::constant(numbers::hyperharmonic(ix[0], ix[1])),
        Gff => gff(&p[1], &p[0], u(0)?),
        Rising => rising(&p[0], u(0)?),
    })
}
