// SPDX-License-Identifier: Apache-2.0

//! `|Aut(G)|` by exhaustive search and by closed formula, plus recovery of
//! abelian invariants.

mod abelian_type;
mod bruteforce;
pub mod formula;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

pub use abelian_type::{partitions, AbelianType};
pub use bruteforce::aut_order_bruteforce;
pub use formula::FormulaMutation;

pub use crate::arith::totient;
use crate::arith;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;
use crate::rational::ExactRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AutMethod {
    BruteForce,
    AbelianFormula,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutResult {
    pub value: BigUint,
    pub method: AutMethod,
}

/// `|Aut(G)|` for the abelian group of type `t`.
pub fn aut_order_abelian(t: &AbelianType) -> AutResult {
    let value = formula::to_natural(&formula::general(t, None));
    AutResult { value, method: AutMethod::AbelianFormula }
}

/// The general formula with an optional deliberate corruption. Mutated
/// values need not be integers, hence the rational result.
pub fn aut_order_abelian_mutated(t: &AbelianType, mutation: Option<FormulaMutation>) -> ExactRational {
    formula::general(t, mutation)
}

/// `|Aut(Z_{p^n1} x Z_{p^n2})|` by the rank-two formula; needs `1 <= n1 <= n2`.
pub fn aut_order_abelian_rank2(p: u64, n1: u32, n2: u32) -> Result<BigUint> {
    aut_order_abelian_rank2_mutated(p, n1, n2, None).map(|v| formula::to_natural(&v))
}

pub fn aut_order_abelian_rank2_mutated(
    p: u64,
    n1: u32,
    n2: u32,
    mutation: Option<FormulaMutation>,
) -> Result<ExactRational> {
    if !arith::is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if n1 == 0 || n1 > n2 {
        return Err(Error::InvalidArgument(format!("need 1 <= n1 <= n2, got n1={n1} n2={n2}")));
    }
    Ok(formula::rank_two(p, n1, n2, mutation))
}

/// Recovers the abelian type of `g`.
pub fn abelian_invariants(g: &Group) -> Result<AbelianType> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    Ok(invariants_from_orders(g.order(), g.element_orders()))
}

/// For each prime `p^e || n`, `c_k = #{x : x^{p^k} = 1} = p^{sum_i min(n_i, k)}`,
/// so successive differences of `log_p c_k` count the factors with `n_i >= k`.
/// Only meaningful for the element orders of an abelian group of order `n`.
pub(crate) fn invariants_from_orders(n: usize, orders: impl Iterator<Item = usize> + Clone) -> AbelianType {
    let mut parts = BTreeMap::new();
    for (p, e) in arith::factorize(n as u64) {
        let p = p as usize;
        let mut at_least = Vec::with_capacity(e as usize + 2);
        let mut previous_log = 0u32;
        let mut pk = 1usize;
        for _ in 1..=e {
            pk *= p;
            let count = orders.clone().filter(|&o| pk.is_multiple_of(o)).count();
            let log = exact_log(count, p);
            at_least.push(log - previous_log);
            previous_log = log;
        }
        at_least.push(0);
        let mut exps = Vec::new();
        for k in 1..=e as usize {
            let equal_to_k = at_least[k - 1] - at_least[k];
            exps.extend(std::iter::repeat_n(k as u32, equal_to_k as usize));
        }
        parts.insert(p as u64, exps);
    }
    AbelianType::new(parts).expect("element orders of an abelian group give a valid type")
}

fn exact_log(mut count: usize, p: usize) -> u32 {
    let mut log = 0;
    while count > 1 {
        assert_eq!(count % p, 0, "torsion count must be a power of p");
        count /= p;
        log += 1;
    }
    log
}

/// Dispatches to the closed formula for abelian groups and to brute-force
/// search otherwise.
pub fn aut_order(g: &Group, limits: &Limits) -> Result<AutResult> {
    if g.is_abelian() {
        Ok(aut_order_abelian(&abelian_invariants(g)?))
    } else {
        aut_order_bruteforce(g, limits)
    }
}

/// Like [`aut_order`], but on abelian groups also runs the brute-force
/// search and fails with [`Error::FormulaMismatch`] if the two disagree.
pub fn aut_order_checked(g: &Group, limits: &Limits) -> Result<AutResult> {
    let result = aut_order(g, limits)?;
    if result.method == AutMethod::AbelianFormula {
        let brute = aut_order_bruteforce(g, limits)?;
        if brute.value != result.value {
            return Err(Error::FormulaMismatch {
                formula: result.value.to_string(),
                brute: brute.value.to_string(),
            });
        }
    }
    Ok(result)
}

/// `|Inn(G)| = |G| / |Z(G)|`.
pub fn inner_automorphism_count(g: &Group) -> usize {
    g.order() / g.center().order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors;

    fn ab(p: u64, e: &[u32]) -> AbelianType {
        AbelianType::p_group(p, e).unwrap()
    }

    #[test]
    fn formula_values() {
        assert_eq!(aut_order_abelian(&ab(2, &[1, 1, 1])).value, BigUint::from(168u32));
        assert_eq!(aut_order_abelian(&ab(2, &[1, 1])).value, BigUint::from(6u32));
        assert_eq!(aut_order_abelian(&ab(2, &[1, 2])).value, BigUint::from(8u32));
        assert_eq!(aut_order_abelian(&ab(2, &[1, 1, 1, 1])).value, BigUint::from(20160u32));
        assert_eq!(aut_order_abelian(&AbelianType::default()).value, BigUint::from(1u32));
    }

    #[test]
    fn rank_two_rejects_bad_arguments() {
        assert!(aut_order_abelian_rank2(2, 2, 1).is_err());
        assert!(aut_order_abelian_rank2(2, 0, 1).is_err());
        assert!(aut_order_abelian_rank2(6, 1, 1).is_err());
        assert_eq!(aut_order_abelian_rank2(3, 1, 1).unwrap(), BigUint::from(48u32));
    }

    #[test]
    fn invariants_recovered() {
        let l = Limits::default();
        let z6 = constructors::cyclic(6, &l).unwrap();
        assert_eq!(
            abelian_invariants(&z6).unwrap(),
            AbelianType::from_pairs([(2, vec![1]), (3, vec![1])]).unwrap()
        );
        let t = ab(2, &[1, 2]);
        let g = constructors::abelian(&t, &l).unwrap();
        assert_eq!(abelian_invariants(&g).unwrap(), t);
        let q8 = constructors::quaternion8();
        assert_eq!(abelian_invariants(&q8).unwrap_err(), Error::NotAbelian);
        let trivial = constructors::cyclic(1, &l).unwrap();
        assert_eq!(abelian_invariants(&trivial).unwrap(), AbelianType::default());
    }

    #[test]
    fn dispatcher_methods() {
        let l = Limits::default();
        let v4 = constructors::abelian(&ab(2, &[1, 1]), &l).unwrap();
        let r = aut_order_checked(&v4, &l).unwrap();
        assert_eq!((r.value, r.method), (BigUint::from(6u32), AutMethod::AbelianFormula));
        let d6 = constructors::dihedral(3, &l).unwrap();
        let r = aut_order(&d6, &l).unwrap();
        assert_eq!((r.value, r.method), (BigUint::from(6u32), AutMethod::BruteForce));
        assert_eq!(inner_automorphism_count(&d6), 6);
        assert_eq!(inner_automorphism_count(&constructors::quaternion8()), 4);
    }

    #[test]
    fn rank_four_elementary_both_ways() {
        let l = Limits::default();
        let g = constructors::abelian(&ab(2, &[1, 1, 1, 1]), &l).unwrap();
        assert_eq!(aut_order_checked(&g, &l).unwrap().value, BigUint::from(20160u32));
    }
}
