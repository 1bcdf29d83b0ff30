// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith;
use crate::error::{Error, Result};

/// Invariant of a finite abelian group: for each prime `p` the exponents
/// `n_1 <= ... <= n_k` with `G_p = Z_{p^{n_1}} x ... x Z_{p^{n_k}}`.
///
/// The empty type is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AbelianType(BTreeMap<u64, Vec<u32>>);

impl AbelianType {
    pub fn new(parts: BTreeMap<u64, Vec<u32>>) -> Result<Self> {
        for (&p, exps) in &parts {
            if !arith::is_prime(p) {
                return Err(Error::InvalidArgument(format!("{p} is not prime")));
            }
            if exps.is_empty() {
                return Err(Error::InvalidArgument(format!("empty exponent list for p={p}")));
            }
            if exps.contains(&0) {
                return Err(Error::InvalidArgument(format!("zero exponent for p={p}")));
            }
            if exps.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidArgument(format!("exponents for p={p} must be non-decreasing")));
            }
        }
        Ok(Self(parts))
    }

    pub fn from_pairs<I, E>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, E)>,
        E: Into<Vec<u32>>,
    {
        let mut map = BTreeMap::new();
        for (p, exps) in pairs {
            if map.insert(p, exps.into()).is_some() {
                return Err(Error::InvalidArgument(format!("prime {p} listed twice")));
            }
        }
        Self::new(map)
    }

    /// `Z_p^{e_1} x ... ` for a single prime.
    pub fn p_group(p: u64, exps: &[u32]) -> Result<Self> {
        Self::from_pairs([(p, exps.to_vec())])
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.keys().copied()
    }

    pub fn exponents(&self, p: u64) -> Option<&[u32]> {
        self.0.get(&p).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &[u32])> {
        self.0.iter().map(|(&p, e)| (p, e.as_slice()))
    }

    pub fn order(&self) -> BigUint {
        self.iter().fold(BigUint::one(), |acc, (p, exps)| {
            acc * BigUint::from(p).pow(exps.iter().sum::<u32>())
        })
    }

    /// The order when it fits in a `u128`.
    pub fn order_u128(&self) -> Option<u128> {
        self.iter().try_fold(1u128, |acc, (p, exps)| {
            (p as u128).checked_pow(exps.iter().sum::<u32>()).and_then(|q| acc.checked_mul(q))
        })
    }

    pub fn is_cyclic(&self) -> bool {
        self.0.values().all(|e| e.len() == 1)
    }

    /// `Some(p)` when the type describes a non-trivial `p`-group.
    pub fn single_prime(&self) -> Option<u64> {
        match self.0.len() {
            1 => self.0.keys().next().copied(),
            _ => None,
        }
    }

    /// The Sylow `p`-part (trivial when `p` does not divide the order).
    pub fn sylow(&self, p: u64) -> AbelianType {
        Self(self.0.get(&p).map(|e| BTreeMap::from([(p, e.clone())])).unwrap_or_default())
    }

    /// Cyclic factor orders `p^{n_i}` in canonical order: primes ascending,
    /// exponents ascending within a prime.
    pub fn cyclic_factors(&self) -> Vec<u64> {
        self.iter()
            .flat_map(|(p, exps)| exps.iter().map(move |&e| p.pow(e)))
            .collect()
    }

    /// Every abelian type of order `n`, deterministic order.
    pub fn all_of_order(n: u64) -> Vec<AbelianType> {
        let mut types = vec![BTreeMap::new()];
        for (p, e) in arith::factorize(n) {
            let mut next = Vec::new();
            for base in &types {
                for part in partitions(e) {
                    let mut t: BTreeMap<u64, Vec<u32>> = base.clone();
                    t.insert(p, part);
                    next.push(t);
                }
            }
            types = next;
        }
        types.into_iter().map(Self).collect()
    }
}

/// Non-decreasing positive integer lists summing to `n`, in lexicographic order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, min: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in min..=remaining {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, 1, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(AbelianType::p_group(2, &[1, 2]).is_ok());
        assert!(AbelianType::p_group(2, &[2, 1]).is_err());
        assert!(AbelianType::p_group(4, &[1]).is_err());
        assert!(AbelianType::p_group(3, &[]).is_err());
        assert!(AbelianType::p_group(3, &[0, 1]).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(3), vec![vec![1, 1, 1], vec![1, 2], vec![3]]);
    }

    #[test]
    fn types_of_small_orders() {
        assert_eq!(AbelianType::all_of_order(8).len(), 3);
        assert_eq!(AbelianType::all_of_order(72).len(), 6);
        assert_eq!(AbelianType::all_of_order(1), vec![AbelianType::default()]);
        let t = AbelianType::from_pairs([(2, vec![1, 1]), (3, vec![1])]).unwrap();
        assert_eq!(t.order(), BigUint::from(12u32));
        assert!(!t.is_cyclic());
        assert_eq!(t.cyclic_factors(), vec![2, 2, 3]);
        assert_eq!(t.sylow(3), AbelianType::p_group(3, &[1]).unwrap());
        assert_eq!(t.sylow(5), AbelianType::default());
    }
}
