// SPDX-License-Identifier: Apache-2.0

//! `S(G) = sum over H <= G of |Aut(H)|` and `f(G) = S(G) / |G|`, computed
//! exactly, together with report-producing checks of the known bounds.

mod checks;
mod report;

use num_bigint::BigUint;
use num_traits::Zero;

pub use checks::*;
pub use report::{Claim, Comparison, Condition, EqualityCase, Relation, VerificationReport};

use crate::automorphisms::{self, AutMethod, AutResult};
use crate::error::Result;
use crate::group::Group;
use crate::lattice;
use crate::limits::Limits;
use crate::morphism;
use crate::rational::ExactRational;
use crate::subgroup::Subgroup;

/// Everything the checks need about one group, computed in a single pass
/// over its subgroup lattice.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub name: String,
    pub order: usize,
    pub big_s: BigUint,
    pub f: ExactRational,
    pub aut_order: AutResult,
    pub subgroup_count: usize,
    pub cyclic_subgroup_count: usize,
    /// True when every proper subgroup is cyclic.
    pub proper_subgroups_cyclic: bool,
    pub is_cyclic: bool,
    pub is_abelian: bool,
    pub center_order: usize,
}

impl Evaluation {
    pub fn compute(g: &Group, limits: &Limits) -> Result<Self> {
        let subgroups = lattice::all_subgroups(g, limits)?;
        let mut memo = AutMemo::default();
        let mut big_s = BigUint::zero();
        let mut cyclic_count = 0;
        let mut proper_cyclic = true;
        let mut aut_of_g = None;
        for h in &subgroups {
            let cyclic = h.is_cyclic();
            cyclic_count += usize::from(cyclic);
            if h.order() < g.order() {
                proper_cyclic &= cyclic;
            }
            let aut = memo.aut_order(h, cyclic, limits)?;
            big_s += &aut.value;
            if h.order() == g.order() {
                aut_of_g = Some(aut);
            }
        }
        let f = ExactRational::from_ratio(&big_s, &BigUint::from(g.order()));
        Ok(Self {
            name: g.label().unwrap_or("<unnamed>").to_string(),
            order: g.order(),
            big_s,
            f,
            aut_order: aut_of_g.expect("the whole group is among its subgroups"),
            subgroup_count: subgroups.len(),
            cyclic_subgroup_count: cyclic_count,
            proper_subgroups_cyclic: proper_cyclic,
            is_cyclic: g.is_cyclic(),
            is_abelian: g.is_abelian(),
            center_order: g.center().order(),
        })
    }

    /// `|Aut(G)| / |G|`.
    pub fn aut_ratio(&self) -> ExactRational {
        ExactRational::from_ratio(&self.aut_order.value, &BigUint::from(self.order))
    }
}

/// Reuses brute-force counts across isomorphic non-abelian subgroups, which
/// are common (conjugates).
/// A group, its sorted (order, centralizer size) classes, and its count.
type Seen = (Group, Vec<(usize, usize)>, AutResult);

#[derive(Default)]
struct AutMemo {
    seen: Vec<Seen>,
}

impl AutMemo {
    fn aut_order(&mut self, h: &Subgroup<'_>, cyclic: bool, limits: &Limits) -> Result<AutResult> {
        if cyclic {
            return Ok(AutResult {
                value: BigUint::from(automorphisms::totient(h.order() as u64)),
                method: AutMethod::AbelianFormula,
            });
        }
        if h.is_abelian() {
            let parent = h.parent();
            let orders = h.elements().iter().map(|&x| parent.element_order(x));
            let t = automorphisms::invariants_from_orders(h.order(), orders);
            return Ok(automorphisms::aut_order_abelian(&t));
        }
        let group = h.to_group();
        let mut classes = morphism::element_classes(&group);
        classes.sort_unstable();
        for (other, other_classes, aut) in &self.seen {
            if *other_classes == classes && group.is_isomorphic(other, limits)? {
                return Ok(aut.clone());
            }
        }
        let aut = automorphisms::aut_order_bruteforce(&group, limits)?;
        self.seen.push((group, classes, aut.clone()));
        Ok(aut)
    }
}

pub fn big_s(g: &Group, limits: &Limits) -> Result<BigUint> {
    Ok(Evaluation::compute(g, limits)?.big_s)
}

pub fn f(g: &Group, limits: &Limits) -> Result<ExactRational> {
    Ok(Evaluation::compute(g, limits)?.f)
}

/// `r(G) = |Aut(G)| / |G|`.
pub fn aut_ratio(g: &Group, limits: &Limits) -> Result<ExactRational> {
    let aut = automorphisms::aut_order(g, limits)?;
    Ok(ExactRational::from_ratio(&aut.value, &BigUint::from(g.order())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphisms::AbelianType;
    use crate::constructors::*;

    fn l() -> Limits {
        Limits::default()
    }

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    #[test]
    fn small_values() {
        let v4 = abelian(&AbelianType::p_group(2, &[1, 1]).unwrap(), &l()).unwrap();
        assert_eq!(big_s(&v4, &l()).unwrap(), BigUint::from(10u32));
        assert_eq!(f(&v4, &l()).unwrap(), r(5, 2));
        assert_eq!(big_s(&quaternion8(), &l()).unwrap(), BigUint::from(32u32));
        assert_eq!(f(&quaternion8(), &l()).unwrap(), r(4, 1));
        assert_eq!(f(&dihedral(3, &l()).unwrap(), &l()).unwrap(), r(2, 1));
        for n in 1..=30 {
            let g = cyclic(n, &l()).unwrap();
            assert_eq!(big_s(&g, &l()).unwrap(), BigUint::from(n));
        }
    }

    #[test]
    fn ratios() {
        let v4 = abelian(&AbelianType::p_group(2, &[1, 1]).unwrap(), &l()).unwrap();
        assert_eq!(aut_ratio(&v4, &l()).unwrap(), r(3, 2));
        assert_eq!(aut_ratio(&cyclic(5, &l()).unwrap(), &l()).unwrap(), r(4, 5));
        assert_eq!(aut_ratio(&quaternion8(), &l()).unwrap(), r(3, 1));
    }

    /// Hand count for D8: 1 + five Z2 + Z4 + two Klein four-groups + D8 itself.
    #[test]
    fn dihedral_of_order_eight() {
        let e = Evaluation::compute(&dihedral(4, &l()).unwrap(), &l()).unwrap();
        assert_eq!(e.big_s, BigUint::from(1u32 + 5 + 2 + 2 * 6 + 8));
        assert_eq!(e.f, r(7, 2));
        assert_eq!(e.subgroup_count, 10);
    }

    #[test]
    fn evaluation_fields() {
        let e = Evaluation::compute(&quaternion8(), &l()).unwrap();
        assert_eq!(e.subgroup_count, 6);
        assert_eq!(e.cyclic_subgroup_count, 5);
        assert!(e.proper_subgroups_cyclic && !e.is_cyclic && !e.is_abelian);
        assert_eq!(e.center_order, 2);
        assert_eq!(e.aut_order.value, BigUint::from(24u32));
        assert_eq!(e.aut_ratio(), r(3, 1));
    }
}
