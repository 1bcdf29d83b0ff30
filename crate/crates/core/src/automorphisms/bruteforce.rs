// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigUint;

use crate::error::Result;
use crate::group::Group;
use crate::limits::Limits;
use crate::morphism::{self, Mode, Plan};

use super::{AutMethod, AutResult};

/// Counts automorphisms by backtracking over images of a greedy generating
/// set. Each generator may only map to elements with the same order and
/// centralizer size; every surviving full assignment is a bijective
/// homomorphism.
pub fn aut_order_bruteforce(g: &Group, limits: &Limits) -> Result<AutResult> {
    limits.check_order(g.order() as u128)?;
    let classes = morphism::element_classes(g);
    let plan = Plan::new(g, morphism::greedy_generators(g, &classes));
    let candidates = morphism::candidates_for(plan.generators(), &classes, &classes);
    let count = morphism::search(&plan, g, g, &candidates, Mode::Count, limits.budget)?;
    Ok(AutResult { value: BigUint::from(count), method: AutMethod::BruteForce })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors;
    use crate::error::Error;
    use crate::AbelianType;

    /// Counts bijections `g -> g` that preserve the table, by Heap's algorithm.
    fn exhaustive_count(g: &Group) -> u64 {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let is_hom = |p: &[usize]| {
            (0..n).all(|a| (0..n).all(|b| p[g.mul(a, b)] == g.mul(p[a], p[b])))
        };
        let mut count = u64::from(is_hom(&perm));
        let mut c = vec![0usize; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                count += u64::from(is_hom(&perm));
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        count
    }

    fn brute(g: &Group) -> u64 {
        let v = aut_order_bruteforce(g, &Limits::default()).unwrap().value;
        u64::try_from(v).unwrap()
    }

    #[test]
    fn agrees_with_exhaustive_bijection_filter() {
        let l = Limits::default();
        let groups = [
            constructors::quaternion8(),
            constructors::abelian(&AbelianType::p_group(2, &[1, 1]).unwrap(), &l).unwrap(),
            constructors::abelian(&AbelianType::p_group(2, &[1, 2]).unwrap(), &l).unwrap(),
            constructors::dihedral(4, &l).unwrap(),
            constructors::dihedral(3, &l).unwrap(),
            constructors::cyclic(7, &l).unwrap(),
        ];
        for g in &groups {
            assert_eq!(brute(g), exhaustive_count(g), "{:?}", g.label());
        }
        assert_eq!(brute(&groups[0]), 24);
        assert_eq!(brute(&groups[1]), 6);
        assert_eq!(brute(&groups[2]), 8);
    }

    #[test]
    fn cyclic_groups_have_totient_many() {
        let l = Limits::default();
        for n in 1..=40u64 {
            let g = constructors::cyclic(n as usize, &l).unwrap();
            assert_eq!(brute(&g), crate::arith::totient(n), "n = {n}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let l = Limits::default();
        let z2_5 = constructors::abelian(&AbelianType::p_group(2, &[1; 5]).unwrap(), &l).unwrap();
        assert_eq!(
            aut_order_bruteforce(&z2_5, &l).unwrap_err(),
            Error::BudgetExceeded { budget: Limits::DEFAULT_BUDGET }
        );
        let tiny = Limits::new(512, 3);
        let q8 = constructors::quaternion8();
        assert!(matches!(aut_order_bruteforce(&q8, &tiny), Err(Error::BudgetExceeded { budget: 3 })));
    }
}
