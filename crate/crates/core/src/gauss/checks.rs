// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{self, totient};
use crate::automorphisms::{self, AbelianType, FormulaMutation};
use crate::constructors::{self, SemidirectParams};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice;
use crate::limits::Limits;
use crate::rational::ExactRational;

use super::report::{Claim, Comparison, Condition, EqualityCase, VerificationReport};
use super::Evaluation;

fn q(n: impl Into<num_bigint::BigInt>) -> ExactRational {
    ExactRational::from_integer(n)
}

fn natural(n: &BigUint) -> ExactRational {
    ExactRational::from_integer(n.clone())
}

pub fn check_gauss_formula(n: u64) -> VerificationReport {
    let sum: u64 = arith::divisors(n).into_iter().map(totient).sum();
    VerificationReport::new(
        Claim::GaussFormula,
        format!("Z{n}"),
        vec![Comparison::eq("sum of phi(d) over d | n", q(sum), q(n))],
        vec![],
        None,
    )
}

/// `n'_d = n_d * phi(d)` for every divisor `d`: elements of order `d`
/// against cyclic subgroups of order `d`.
pub fn totient_identity_holds(g: &Group) -> bool {
    let hist = g.order_histogram();
    let mut cyclic_by_order: BTreeMap<usize, usize> = BTreeMap::new();
    for h in lattice::cyclic_subgroups(g) {
        *cyclic_by_order.entry(h.order()).or_insert(0) += 1;
    }
    arith::divisors(g.order() as u64).into_iter().all(|d| {
        let d = d as usize;
        hist.count(d) as u64 == cyclic_by_order.get(&d).copied().unwrap_or(0) as u64 * totient(d as u64)
    })
}

pub fn cyclic_minimum_report(g: &Group, eval: &Evaluation) -> VerificationReport {
    VerificationReport::new(
        Claim::CyclicMinimum,
        &eval.name,
        vec![
            Comparison::ge("f(G) >= 1", eval.f.clone(), ExactRational::one()),
            Comparison::ge("S(G) >= |G|", natural(&eval.big_s), q(eval.order)),
        ],
        vec![Condition { label: "n'_d = n_d phi(d)".into(), holds: totient_identity_holds(g) }],
        Some(EqualityCase { observed: eval.f.is_one(), predicted: eval.is_cyclic }),
    )
}

pub fn check_cyclic_minimum(g: &Group, limits: &Limits) -> Result<VerificationReport> {
    Ok(cyclic_minimum_report(g, &Evaluation::compute(g, limits)?))
}

pub fn center_bound_report(eval: &Evaluation) -> Result<VerificationReport> {
    if eval.is_cyclic {
        return Err(Error::IsCyclic);
    }
    let one = ExactRational::one();
    let mut comparisons = vec![
        Comparison::ge("f(G) >= 1 + |Aut(G)|/|G|", eval.f.clone(), &one + &eval.aut_ratio()),
        Comparison::ge("f(G) >= 1 + 1/|Z(G)|", eval.f.clone(), &one + &ExactRational::new(1, eval.center_order)),
    ];
    if !eval.is_abelian {
        comparisons.push(Comparison::ge(
            "f(G) >= 1 + 4/|G|",
            eval.f.clone(),
            &one + &ExactRational::new(4, eval.order),
        ));
    }
    Ok(VerificationReport::new(Claim::CenterBound, &eval.name, comparisons, vec![], None))
}

pub fn check_center_bound(g: &Group, limits: &Limits) -> Result<VerificationReport> {
    center_bound_report(&Evaluation::compute(g, limits)?)
}

/// The three types of finite minimal non-cyclic groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalNonCyclic {
    /// `Z_p x Z_p`.
    ElementaryRank2 { p: u64 },
    /// `Q8`.
    Quaternion,
    /// `Z_p ⋊ Z_{q^n}` with `b^-1 a b = a^r`.
    Semidirect(SemidirectParams),
}

impl MinimalNonCyclic {
    pub fn group(&self, limits: &Limits) -> Result<Group> {
        match *self {
            MinimalNonCyclic::ElementaryRank2 { p } => {
                constructors::abelian(&AbelianType::p_group(p, &[1, 1])?, limits)
            }
            MinimalNonCyclic::Quaternion => Ok(constructors::quaternion8()),
            MinimalNonCyclic::Semidirect(params) => constructors::semidirect(&params, limits),
        }
    }

    /// `1 + (p+1)(p-1)^2/p`, `4`, or `1 + (p-1)/q`.
    pub fn closed_form(&self) -> ExactRational {
        let one = ExactRational::one();
        match *self {
            MinimalNonCyclic::ElementaryRank2 { p } => {
                &one + &ExactRational::new((p + 1) * (p - 1) * (p - 1), p)
            }
            MinimalNonCyclic::Quaternion => q(4),
            MinimalNonCyclic::Semidirect(params) => &one + &ExactRational::new(params.p() - 1, params.q()),
        }
    }

    /// Only `Z3 ⋊ Z_{2^n}` attains `f = 2`.
    pub fn attains_two(&self) -> bool {
        matches!(self, MinimalNonCyclic::Semidirect(s) if s.p() == 3 && s.q() == 2)
    }
}

/// Identifies the type of a minimal non-cyclic group from its evaluation.
/// `None` when the group is cyclic, has a non-cyclic proper subgroup, or
/// matches none of the three types.
pub fn classify_minimal_noncyclic(g: &Group, eval: &Evaluation) -> Option<MinimalNonCyclic> {
    if eval.is_cyclic || !eval.proper_subgroups_cyclic {
        return None;
    }
    let factors = arith::factorize(g.order() as u64);
    if eval.is_abelian {
        return match factors.as_slice() {
            [(p, 2)] => Some(MinimalNonCyclic::ElementaryRank2 { p: *p }),
            _ => None,
        };
    }
    if g.order() == 8 && g.order_histogram().count(2) == 1 {
        return Some(MinimalNonCyclic::Quaternion);
    }
    let (p, q, n) = match factors.as_slice() {
        [(a, 1), (b, 1)] => (*b, *a, 1),
        [(a, 1), (b, e)] => (*a, *b, *e),
        [(a, e), (b, 1)] => (*b, *a, *e),
        _ => return None,
    };
    if (p - 1) % q != 0 {
        return None;
    }
    SemidirectParams::with_default_residue(p, q, n).ok().map(MinimalNonCyclic::Semidirect)
}

pub fn minimal_noncyclic_report(instance: &MinimalNonCyclic, eval: &Evaluation) -> VerificationReport {
    VerificationReport::new(
        Claim::MinimalNonCyclic,
        &eval.name,
        vec![
            Comparison::eq("f(G) = closed form", eval.f.clone(), instance.closed_form()),
            Comparison::ge("f(G) >= 2", eval.f.clone(), q(2)),
        ],
        vec![Condition {
            label: "non-cyclic with every proper subgroup cyclic".into(),
            holds: !eval.is_cyclic && eval.proper_subgroups_cyclic,
        }],
        Some(EqualityCase { observed: eval.f == q(2), predicted: instance.attains_two() }),
    )
}

pub fn check_minimal_noncyclic(instance: &MinimalNonCyclic, limits: &Limits) -> Result<VerificationReport> {
    let g = instance.group(limits)?;
    Ok(minimal_noncyclic_report(instance, &Evaluation::compute(&g, limits)?))
}

/// `1 + (p+1)(p-1)^2/p`, the lower bound of `f` on non-cyclic abelian `p`-groups.
pub fn p_group_bound(p: u64) -> ExactRational {
    &ExactRational::one() + &ExactRational::new((p + 1) * (p - 1) * (p - 1), p)
}

/// `f(G) >= 5/2` plus the per-prime bound on each non-cyclic Sylow
/// subgroup, whose `f` values come from `sylow_f`.
pub fn abelian_bound_report(
    g: &Group,
    eval: &Evaluation,
    sylow_f: &mut dyn FnMut(&AbelianType) -> Result<ExactRational>,
) -> Result<VerificationReport> {
    let t = automorphisms::abelian_invariants(g)?;
    if eval.is_cyclic {
        return Err(Error::IsCyclic);
    }
    let mut comparisons = vec![Comparison::ge("f(G) >= 5/2", eval.f.clone(), ExactRational::new(5, 2))];
    for (p, exps) in t.iter() {
        if exps.len() < 2 {
            continue;
        }
        let f_p = if t.single_prime().is_some() { eval.f.clone() } else { sylow_f(&t.sylow(p))? };
        comparisons.push(Comparison::ge(format!("f(G_{p}) >= 1 + (p+1)(p-1)^2/p"), f_p, p_group_bound(p)));
    }
    let predicted = t.exponents(2) == Some(&[1, 1][..])
        && t.iter().all(|(p, exps)| p == 2 || exps.len() == 1);
    Ok(VerificationReport::new(
        Claim::AbelianBound,
        &eval.name,
        comparisons,
        vec![],
        Some(EqualityCase { observed: eval.f == ExactRational::new(5, 2), predicted }),
    ))
}

pub fn check_abelian_bound(g: &Group, limits: &Limits) -> Result<VerificationReport> {
    let eval = Evaluation::compute(g, limits)?;
    abelian_bound_report(g, &eval, &mut |t| {
        Ok(Evaluation::compute(&constructors::abelian(t, limits)?, limits)?.f)
    })
}

pub fn check_aut_lower_bound(t: &AbelianType) -> Result<VerificationReport> {
    let (p, exps) = match t.single_prime() {
        Some(p) => (p, t.exponents(p).unwrap()),
        None => return Err(Error::InvalidArgument("expected an abelian p-group".into())),
    };
    if exps.len() < 2 {
        return Err(Error::IsCyclic);
    }
    let n: u32 = exps.iter().sum();
    let bound = BigUint::from(p).pow(n) * BigUint::from(p - 1).pow(2);
    let aut = automorphisms::aut_order_abelian(t).value;
    Ok(VerificationReport::new(
        Claim::AutLowerBound,
        abelian_name(t),
        vec![Comparison::ge("|Aut(G)| >= p^n (p-1)^2", natural(&aut), natural(&bound))],
        vec![],
        None,
    ))
}

pub fn check_aut_totient_bound(t: &AbelianType) -> VerificationReport {
    let phi = t.iter().fold(BigUint::one(), |acc, (p, exps)| {
        let n: u32 = exps.iter().sum();
        acc * BigUint::from(p).pow(n - 1) * BigUint::from(p - 1)
    });
    let aut = automorphisms::aut_order_abelian(t).value;
    VerificationReport::new(
        Claim::AutTotientBound,
        abelian_name(t),
        vec![Comparison::ge("|Aut(G)| >= phi(|G|)", natural(&aut), natural(&phi))],
        vec![],
        Some(EqualityCase { observed: aut == phi, predicted: t.is_cyclic() }),
    )
}

fn abelian_name(t: &AbelianType) -> String {
    crate::spec::SpecAst::Abelian(t.clone()).canonical_string()
}

pub fn dihedral_report(n: u64, eval: &Evaluation) -> VerificationReport {
    VerificationReport::new(
        Claim::DihedralFormula,
        &eval.name,
        vec![Comparison::eq("f(D_2n) = (n+1)/2", eval.f.clone(), ExactRational::new(n + 1, 2))],
        vec![],
        None,
    )
}

/// Needs `n` odd and at least 3.
pub fn check_dihedral_formula(n: u64, limits: &Limits) -> Result<VerificationReport> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("dihedral formula needs odd n >= 3, got {n}")));
    }
    let g = constructors::dihedral(n as usize, limits)?;
    Ok(dihedral_report(n, &Evaluation::compute(&g, limits)?))
}

pub fn multiplicativity_report(name: &str, product_f: ExactRational, factor_fs: &[ExactRational]) -> VerificationReport {
    let product: ExactRational = factor_fs.iter().cloned().product();
    VerificationReport::new(
        Claim::Multiplicativity,
        name,
        vec![Comparison::eq("f(G1 x ... x Gm) = f(G1)...f(Gm)", product_f, product)],
        vec![],
        None,
    )
}

/// The factors must have pairwise coprime orders.
pub fn check_multiplicativity(groups: &[Group], limits: &Limits) -> Result<VerificationReport> {
    let (first, rest) = groups
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("need at least one group".into()))?;
    for (i, a) in groups.iter().enumerate() {
        for b in &groups[i + 1..] {
            if arith::gcd(a.order() as u64, b.order() as u64) != 1 {
                return Err(Error::NotCoprime { left: a.order(), right: b.order() });
            }
        }
    }
    let mut product = first.clone();
    for g in rest {
        product = constructors::direct_product(&product, g, limits)?;
    }
    let factor_fs = groups
        .iter()
        .map(|g| Ok(Evaluation::compute(g, limits)?.f))
        .collect::<Result<Vec<_>>>()?;
    let product_eval = Evaluation::compute(&product, limits)?;
    Ok(multiplicativity_report(&product_eval.name, product_eval.f, &factor_fs))
}

/// Compares the (optionally mutated) abelian formulas with a brute-force
/// count on the constructed group. The rank-two formula is compared too when
/// `t` is a rank-two `p`-group.
pub fn check_formula_agreement(
    t: &AbelianType,
    limits: &Limits,
    mutation: Option<FormulaMutation>,
) -> Result<VerificationReport> {
    let g = constructors::abelian(t, limits)?;
    let brute = natural(&automorphisms::aut_order_bruteforce(&g, limits)?.value);
    let mut comparisons = vec![Comparison::eq(
        "formula = brute force",
        automorphisms::aut_order_abelian_mutated(t, mutation),
        brute.clone(),
    )];
    if let Some(p) = t.single_prime() {
        if let [n1, n2] = *t.exponents(p).unwrap() {
            let rank_two = automorphisms::aut_order_abelian_rank2_mutated(p, n1, n2, mutation)?;
            comparisons.push(Comparison::eq("rank-two formula = brute force", rank_two, brute));
        }
    }
    Ok(VerificationReport::new(Claim::FormulaOracleAgreement, abelian_name(t), comparisons, vec![], None))
}

pub fn check_rank_two_formula(
    p: u64,
    n1: u32,
    n2: u32,
    mutation: Option<FormulaMutation>,
) -> Result<VerificationReport> {
    let special = automorphisms::aut_order_abelian_rank2_mutated(p, n1, n2, mutation)?;
    let t = AbelianType::p_group(p, &[n1, n2])?;
    let general = automorphisms::aut_order_abelian_mutated(&t, mutation);
    Ok(VerificationReport::new(
        Claim::RankTwoFormula,
        abelian_name(&t),
        vec![Comparison::eq("rank-two formula = general formula", special, general)],
        vec![],
        None,
    ))
}

pub fn second_smallest_report(eval: &Evaluation) -> Result<VerificationReport> {
    if eval.is_cyclic {
        return Err(Error::IsCyclic);
    }
    Ok(VerificationReport::new(
        Claim::SecondSmallestValue,
        &eval.name,
        vec![Comparison::ge("f(G) >= 2", eval.f.clone(), q(2))],
        vec![],
        None,
    ))
}

pub fn check_second_smallest(g: &Group, limits: &Limits) -> Result<VerificationReport> {
    second_smallest_report(&Evaluation::compute(g, limits)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    fn l() -> Limits {
        Limits::default()
    }

    fn ab(pairs: &[(u64, &[u32])]) -> Group {
        abelian(&AbelianType::from_pairs(pairs.iter().map(|(p, e)| (*p, e.to_vec()))).unwrap(), &l()).unwrap()
    }

    #[test]
    fn cyclic_minimum() {
        let r = check_cyclic_minimum(&cyclic(30, &l()).unwrap(), &l()).unwrap();
        assert!(r.holds);
        assert_eq!(r.equality_case, Some(EqualityCase { observed: true, predicted: true }));
        let r = check_cyclic_minimum(&dihedral(4, &l()).unwrap(), &l()).unwrap();
        assert!(r.holds);
        assert_eq!(r.comparisons[0].lhs, ExactRational::new(7, 2));
        let r = check_cyclic_minimum(&ab(&[(2, &[1, 1])]), &l()).unwrap();
        assert!(r.holds && r.comparisons[0].lhs == ExactRational::new(5, 2));
    }

    #[test]
    fn center_bound() {
        let r = check_center_bound(&quaternion8(), &l()).unwrap();
        assert!(r.holds);
        assert_eq!(r.comparisons[1].rhs, ExactRational::new(3, 2));
        let r = check_center_bound(&dihedral(3, &l()).unwrap(), &l()).unwrap();
        assert!(r.holds);
        assert_eq!(r.comparisons[1].lhs, r.comparisons[1].rhs);
        let r = check_center_bound(&ab(&[(2, &[1, 1])]), &l()).unwrap();
        assert!(r.holds);
        assert_eq!(r.comparisons[1].rhs, ExactRational::new(5, 4));
        assert_eq!(check_center_bound(&cyclic(4, &l()).unwrap(), &l()).unwrap_err(), Error::IsCyclic);
    }

    #[test]
    fn minimal_noncyclic_families() {
        let z3z3 = MinimalNonCyclic::ElementaryRank2 { p: 3 };
        let r = check_minimal_noncyclic(&z3z3, &l()).unwrap();
        assert!(r.holds);
        assert_eq!(r.comparisons[0].lhs, ExactRational::new(19, 3));
        let sd = MinimalNonCyclic::Semidirect(SemidirectParams::with_default_residue(3, 2, 2).unwrap());
        let r = check_minimal_noncyclic(&sd, &l()).unwrap();
        assert!(r.holds);
        assert_eq!(r.comparisons[0].lhs, ExactRational::from(2));
        let sd73 = MinimalNonCyclic::Semidirect(SemidirectParams::with_default_residue(7, 3, 1).unwrap());
        let r = check_minimal_noncyclic(&sd73, &l()).unwrap();
        assert!(r.holds && r.comparisons[0].lhs == ExactRational::from(3));
        assert!(check_minimal_noncyclic(&MinimalNonCyclic::Quaternion, &l()).unwrap().holds);
    }

    #[test]
    fn classification() {
        let classify = |g: &Group| classify_minimal_noncyclic(g, &Evaluation::compute(g, &l()).unwrap());
        assert_eq!(classify(&quaternion8()), Some(MinimalNonCyclic::Quaternion));
        assert_eq!(classify(&ab(&[(5, &[1, 1])])), Some(MinimalNonCyclic::ElementaryRank2 { p: 5 }));
        let d6 = dihedral(3, &l()).unwrap();
        assert_eq!(
            classify(&d6),
            Some(MinimalNonCyclic::Semidirect(SemidirectParams::new(3, 2, 1, 2).unwrap()))
        );
        assert_eq!(classify(&dihedral(4, &l()).unwrap()), None);
        assert_eq!(classify(&cyclic(9, &l()).unwrap()), None);
        assert_eq!(classify(&ab(&[(2, &[1, 1, 1])])), None);
    }

    #[test]
    fn abelian_bound() {
        let r = check_abelian_bound(&ab(&[(2, &[1, 1]), (5, &[1])]), &l()).unwrap();
        assert!(r.holds);
        assert_eq!(r.equality_case, Some(EqualityCase { observed: true, predicted: true }));
        let r = check_abelian_bound(&ab(&[(2, &[1, 2])]), &l()).unwrap();
        assert!(r.holds);
        assert!(r.comparisons[0].lhs > ExactRational::new(5, 2));
        let r = check_abelian_bound(&ab(&[(3, &[1, 1])]), &l()).unwrap();
        assert!(r.holds);
        assert_eq!(r.comparisons[1].lhs, r.comparisons[1].rhs);
        assert_eq!(r.comparisons[1].rhs, &ExactRational::one() + &ExactRational::new(16, 3));
        assert_eq!(check_abelian_bound(&quaternion8(), &l()).unwrap_err(), Error::NotAbelian);
        assert_eq!(check_abelian_bound(&cyclic(6, &l()).unwrap(), &l()).unwrap_err(), Error::IsCyclic);
    }

    #[test]
    fn dihedral_formula() {
        for (n, expected) in [(3, 2), (5, 3), (9, 5)] {
            let r = check_dihedral_formula(n, &l()).unwrap();
            assert!(r.holds);
            assert_eq!(r.comparisons[0].lhs, ExactRational::from(expected));
        }
        assert!(check_dihedral_formula(4, &l()).is_err());
    }

    #[test]
    fn multiplicativity() {
        let z3 = cyclic(3, &l()).unwrap();
        let r = check_multiplicativity(&[ab(&[(2, &[1, 1])]), z3.clone()], &l()).unwrap();
        assert!(r.holds && r.comparisons[0].lhs == ExactRational::new(5, 2));
        let r = check_multiplicativity(&[cyclic(4, &l()).unwrap(), cyclic(9, &l()).unwrap()], &l()).unwrap();
        assert!(r.holds && r.comparisons[0].lhs == ExactRational::one());
        let r = check_multiplicativity(&[quaternion8(), z3.clone()], &l()).unwrap();
        assert!(r.holds && r.comparisons[0].lhs == ExactRational::from(4));
        assert_eq!(
            check_multiplicativity(&[cyclic(4, &l()).unwrap(), cyclic(6, &l()).unwrap()], &l()).unwrap_err(),
            Error::NotCoprime { left: 4, right: 6 }
        );
    }

    #[test]
    fn automorphism_bounds() {
        let t = AbelianType::p_group(3, &[1, 2]).unwrap();
        assert!(check_aut_lower_bound(&t).unwrap().holds);
        assert!(check_aut_lower_bound(&AbelianType::p_group(3, &[2]).unwrap()).is_err());
        let r = check_aut_totient_bound(&AbelianType::p_group(5, &[3]).unwrap());
        assert!(r.holds && r.equality_case.unwrap().observed);
        let r = check_aut_totient_bound(&t);
        assert!(r.holds && !r.equality_case.unwrap().observed);
    }

    #[test]
    fn formula_checks_detect_mutation() {
        let t = AbelianType::p_group(2, &[1, 2]).unwrap();
        assert!(check_formula_agreement(&t, &l(), None).unwrap().holds);
        let r = check_formula_agreement(&t, &l(), Some(FormulaMutation::RankTwoConstant)).unwrap();
        assert!(!r.holds);
        assert!(r.comparisons[0].holds && !r.comparisons[1].holds);
        assert!(check_rank_two_formula(5, 2, 6, None).unwrap().holds);
        assert!(!check_rank_two_formula(5, 2, 6, Some(FormulaMutation::LastCofactor)).unwrap().holds);
    }

    #[test]
    fn gauss_formula() {
        assert!(check_gauss_formula(12).holds);
        assert!(check_gauss_formula(1).holds);
    }

    #[test]
    fn second_smallest() {
        let r = check_second_smallest(&dihedral(3, &l()).unwrap(), &l()).unwrap();
        assert!(r.holds);
        assert!(check_second_smallest(&cyclic(3, &l()).unwrap(), &l()).is_err());
    }
}
