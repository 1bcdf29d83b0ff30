// SPDX-License-Identifier: Apache-2.0

//! Closed-form `|Aut(G)|` for finite abelian groups.
//!
//! For `G_p = prod Z_{p^{n_i}}`, `n_1 <= ... <= n_k`, with
//! `a_r = max{s : n_s = n_r}` and `b_r = min{s : n_s = n_r}`:
//!
//! ```text
//! |Aut(G_p)| = prod_i (p^{a_i} - p^{i-1})
//!            * prod_u p^{n_u (k - a_u)}
//!            * prod_v p^{(n_v - 1)(k - b_v + 1)}
//! ```
//!
//! and `|Aut(G)|` is the product over primes. The rank-two specialisation is
//! `(p-1)^2 (p+1)^[n_1/n_2] p^{3 n_1 + n_2 - [n_1/n_2] - 2}` with `[.]` the floor.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::rational::ExactRational;

use super::AbelianType;

/// A deliberate one-site corruption of an exponent in the formulas, used to
/// show that the oracle comparison actually detects transcription errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaMutation {
    /// `p^{a_i}` becomes `p^{a_i + 1}`.
    FirstHigh,
    /// `p^{i-1}` becomes `p^i`.
    FirstLow,
    /// `n_u (k - a_u)` becomes `(n_u + 1)(k - a_u)`.
    MiddleMultiplier,
    /// `n_u (k - a_u)` becomes `n_u (k - a_u + 1)`.
    MiddleCofactor,
    /// `(n_v - 1)(k - b_v + 1)` becomes `n_v (k - b_v + 1)`.
    LastMultiplier,
    /// `(n_v - 1)(k - b_v + 1)` becomes `(n_v - 1)(k - b_v + 2)`.
    LastCofactor,
    /// `(p-1)^2` becomes `(p-1)^3` in the rank-two formula.
    RankTwoUnitPower,
    /// `(p+1)^[n1/n2]` becomes `(p+1)^{[n1/n2]+1}`.
    RankTwoPlusOnePower,
    /// `3 n_1` becomes `4 n_1` in the exponent of `p`.
    RankTwoFirstCoefficient,
    /// `n_2` becomes `2 n_2` in the exponent of `p`.
    RankTwoSecondCoefficient,
    /// `- 2` becomes `- 1` in the exponent of `p`.
    RankTwoConstant,
}

impl FormulaMutation {
    pub const ALL: [FormulaMutation; 11] = [
        Self::FirstHigh,
        Self::FirstLow,
        Self::MiddleMultiplier,
        Self::MiddleCofactor,
        Self::LastMultiplier,
        Self::LastCofactor,
        Self::RankTwoUnitPower,
        Self::RankTwoPlusOnePower,
        Self::RankTwoFirstCoefficient,
        Self::RankTwoSecondCoefficient,
        Self::RankTwoConstant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::FirstHigh => "first-high",
            Self::FirstLow => "first-low",
            Self::MiddleMultiplier => "middle-multiplier",
            Self::MiddleCofactor => "middle-cofactor",
            Self::LastMultiplier => "last-multiplier",
            Self::LastCofactor => "last-cofactor",
            Self::RankTwoUnitPower => "rank2-unit-power",
            Self::RankTwoPlusOnePower => "rank2-plus-one-power",
            Self::RankTwoFirstCoefficient => "rank2-first-coefficient",
            Self::RankTwoSecondCoefficient => "rank2-second-coefficient",
            Self::RankTwoConstant => "rank2-constant",
        }
    }

    /// Whether the mutation touches the general formula (as opposed to the
    /// rank-two specialisation).
    pub fn affects_general(self) -> bool {
        !self.name().starts_with("rank2")
    }
}

impl fmt::Display for FormulaMutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaMutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown formula mutation {s:?}")))
    }
}

fn delta(active: Option<FormulaMutation>, site: FormulaMutation) -> i64 {
    i64::from(active == Some(site))
}

/// `base^e` for a possibly negative exponent, as an exact rational so that
/// mutated exponents stay representable.
fn signed_pow(base: u64, e: i64) -> ExactRational {
    let b = BigInt::from(base);
    let magnitude = b.pow(e.unsigned_abs() as u32);
    if e >= 0 {
        ExactRational::from_integer(magnitude)
    } else {
        ExactRational::new(1, magnitude)
    }
}

/// `|Aut|` of one abelian `p`-group by the general formula.
pub(crate) fn p_part(p: u64, exps: &[u32], mutation: Option<FormulaMutation>) -> ExactRational {
    use FormulaMutation::*;
    let k = exps.len() as i64;
    let n = |r: usize| exps[r - 1] as i64;
    let a = |r: usize| (1..=exps.len()).filter(|&s| exps[s - 1] == exps[r - 1]).max().unwrap() as i64;
    let b = |r: usize| (1..=exps.len()).filter(|&s| exps[s - 1] == exps[r - 1]).min().unwrap() as i64;

    let mut value = ExactRational::one();
    for i in 1..=exps.len() {
        let high = signed_pow(p, a(i) + delta(mutation, FirstHigh));
        let low = signed_pow(p, i as i64 - 1 + delta(mutation, FirstLow));
        value = value * (high - low);
    }
    let mut exponent = 0i64;
    for u in 1..=exps.len() {
        exponent += (n(u) + delta(mutation, MiddleMultiplier)) * (k - a(u) + delta(mutation, MiddleCofactor));
    }
    for v in 1..=exps.len() {
        exponent += (n(v) - 1 + delta(mutation, LastMultiplier)) * (k - b(v) + 1 + delta(mutation, LastCofactor));
    }
    value * signed_pow(p, exponent)
}

/// Product of [`p_part`] over the primes of `t`.
pub(crate) fn general(t: &AbelianType, mutation: Option<FormulaMutation>) -> ExactRational {
    t.iter().map(|(p, exps)| p_part(p, exps, mutation)).product()
}

/// The rank-two specialisation; needs `1 <= n1 <= n2`.
pub(crate) fn rank_two(p: u64, n1: u32, n2: u32, mutation: Option<FormulaMutation>) -> ExactRational {
    use FormulaMutation::*;
    let floor = i64::from(n1 / n2);
    let (n1, n2) = (n1 as i64, n2 as i64);
    let unit_power = 2 + delta(mutation, RankTwoUnitPower);
    let plus_power = floor + delta(mutation, RankTwoPlusOnePower);
    let p_power = (3 + delta(mutation, RankTwoFirstCoefficient)) * n1
        + (1 + delta(mutation, RankTwoSecondCoefficient)) * n2
        - floor
        - 2
        + delta(mutation, RankTwoConstant);
    signed_pow(p - 1, unit_power) * signed_pow(p + 1, plus_power) * signed_pow(p, p_power)
}

/// Converts an unmutated formula value, which is always a positive integer.
pub(crate) fn to_natural(value: &ExactRational) -> BigUint {
    assert!(value.is_integer(), "formula value {value} is not an integer");
    value.numer().to_biguint().expect("formula value is positive")
}
