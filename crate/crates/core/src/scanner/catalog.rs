// SPDX-License-Identifier: Apache-2.0

//! Family-generated catalog of small groups.
//!
//! The families are the cyclic groups, the non-cyclic abelian types, the
//! dihedral groups, `Q8` and `Q8 x Z_m` for odd `m`, the metacyclic groups
//! `Z_p ⋊ Z_{q^n}`, and coprime direct products of non-cyclic members of
//! those families with at most one abelian factor. Entries are deduplicated
//! up to isomorphism within each order, keeping the earliest family.
//!
//! This is not a census: most orders have groups outside these families.

use std::collections::{BTreeMap, BTreeSet};

use log::debug;
use serde::Serialize;

use crate::arith;
use crate::automorphisms::AbelianType;
use crate::constructors::SemidirectParams;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;
use crate::spec::SpecAst;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cyclic,
    Abelian,
    Dihedral,
    Quaternion,
    Semidirect,
    Product,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub spec: SpecAst,
    pub canonical: String,
    pub order: usize,
    pub family: Family,
}

impl CatalogEntry {
    fn new(spec: SpecAst, family: Family) -> Self {
        let order = spec.order().expect("catalog specs have a known order") as usize;
        Self { canonical: spec.canonical_string(), spec, order, family }
    }

    pub fn build(&self, limits: &Limits) -> Result<Group> {
        self.spec.build(limits)
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub max_order: usize,
    /// Sorted by `(order, canonical)`.
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CatalogEntry> {
        self.entries.iter()
    }

    pub fn get(&self, canonical: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.canonical == canonical)
    }
}

fn is_abelian_spec(spec: &SpecAst) -> bool {
    matches!(spec, SpecAst::Abelian(_) | SpecAst::Cyclic(_))
}

/// Candidates in family order, before deduplication.
fn candidates(max: usize) -> Vec<CatalogEntry> {
    let max64 = max as u64;
    let mut out: Vec<CatalogEntry> = (1..=max64).map(|n| CatalogEntry::new(SpecAst::Cyclic(n), Family::Cyclic)).collect();
    let mut building_blocks = Vec::new();

    for n in 1..=max64 {
        for t in AbelianType::all_of_order(n).into_iter().filter(|t| !t.is_cyclic()) {
            building_blocks.push(CatalogEntry::new(SpecAst::Abelian(t), Family::Abelian));
        }
    }
    for order in (6..=max64).step_by(2) {
        building_blocks.push(CatalogEntry::new(SpecAst::Dihedral(order), Family::Dihedral));
    }
    if max >= 8 {
        building_blocks.push(CatalogEntry::new(SpecAst::Q8, Family::Quaternion));
    }
    let mut quaternion_products = Vec::new();
    for m in (3..=max64 / 8).step_by(2) {
        let spec = SpecAst::product(vec![SpecAst::Q8, SpecAst::Cyclic(m)]);
        quaternion_products.push(CatalogEntry::new(spec, Family::Quaternion));
    }
    for p in arith::primes_up_to(max64) {
        for q in arith::primes_up_to(p - 1).filter(|q| (p - 1) % q == 0) {
            let mut n = 1;
            while p * q.pow(n) <= max64 {
                let params = SemidirectParams::with_default_residue(p, q, n).expect("q divides p - 1");
                building_blocks.push(CatalogEntry::new(SpecAst::Semidirect(params), Family::Semidirect));
                n += 1;
            }
        }
    }

    // Products as sets of building-block indices, grown one factor at a time.
    let mut products: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = (0..building_blocks.len()).map(|i| vec![i]).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for combo in &frontier {
            let order: usize = combo.iter().map(|&i| building_blocks[i].order).product();
            let abelian_factors = combo.iter().filter(|&&i| is_abelian_spec(&building_blocks[i].spec)).count();
            for (j, block) in building_blocks.iter().enumerate() {
                if j <= *combo.last().unwrap()
                    || order * block.order > max
                    || arith::gcd(order as u64, block.order as u64) != 1
                    || abelian_factors + usize::from(is_abelian_spec(&block.spec)) > 1
                {
                    continue;
                }
                let mut grown = combo.clone();
                grown.push(j);
                if products.insert(grown.clone()) {
                    next.push(grown);
                }
            }
        }
        frontier = next;
    }

    out.extend(building_blocks.iter().cloned());
    out.extend(quaternion_products);
    for combo in products {
        let mut factors: Vec<&CatalogEntry> = combo.iter().map(|&i| &building_blocks[i]).collect();
        factors.sort_by(|a, b| (a.order, &a.canonical).cmp(&(b.order, &b.canonical)));
        let spec = SpecAst::product(factors.into_iter().map(|e| e.spec.clone()).collect());
        out.push(CatalogEntry::new(spec, Family::Product));
    }
    // Stable sort keeps family order within each order for deduplication.
    out.sort_by_key(|e| (e.order, e.family));
    out
}

pub fn build_catalog(max_order: usize, limits: &Limits) -> Result<Catalog> {
    if max_order == 0 {
        return Err(Error::InvalidArgument("maximum order must be positive".into()));
    }
    limits.check_order(max_order as u128)?;
    let mut kept: Vec<CatalogEntry> = Vec::new();
    let mut by_order: BTreeMap<usize, Vec<Group>> = BTreeMap::new();
    for entry in candidates(max_order) {
        let order = entry.order;
        let group = entry.build(limits)?;
        let same_order = by_order.entry(entry.order).or_default();
        let mut duplicate = false;
        for other in same_order.iter() {
            if group.is_isomorphic(other, limits)? {
                debug!("{} is isomorphic to {}; dropped", entry.canonical, other.label().unwrap_or("?"));
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            same_order.push(group);
            kept.push(entry);
        }
        // Groups of smaller orders are never compared again.
        let done: Vec<usize> = by_order.range(..order).map(|(&k, _)| k).collect();
        for k in done {
            by_order.remove(&k);
        }
    }
    kept.sort_by(|a, b| (a.order, &a.canonical).cmp(&(b.order, &b.canonical)));
    Ok(Catalog { max_order, entries: kept })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn specs(max: usize) -> Vec<String> {
        build_catalog(max, &Limits::default()).unwrap().entries.into_iter().map(|e| e.canonical).collect()
    }

    #[test]
    fn up_to_four() {
        assert_eq!(specs(4), ["Z1", "Z2", "Z3", "Ab[2;1,1]", "Z4"]);
    }

    #[test]
    fn order_eight_families() {
        let all = specs(8);
        let eight: Vec<&String> = all.iter().filter(|s| s.contains('8') || s.starts_with("Ab[2;")).collect();
        for s in ["Z8", "Ab[2;1,2]", "Ab[2;1,1,1]", "D8", "Q8"] {
            assert!(all.contains(&s.to_string()), "{s} missing from {eight:?}");
        }
    }

    #[test]
    fn semidirect_duplicates_are_dropped() {
        let all = specs(12);
        assert!(all.contains(&"D6".to_string()));
        assert!(!all.iter().any(|s| s.starts_with("SD(3,2,1")));
        assert!(!all.iter().any(|s| s.starts_with("SD(5,2,1")));
        assert!(all.contains(&"SD(3,2,2,r=2)".to_string()));
    }

    #[test]
    fn products_and_quaternion_family() {
        let all = specs(100);
        assert!(all.contains(&"Q8xZ3".to_string()));
        assert!(all.contains(&"Ab[2;1,1]xSD(7,3,1,r=2)".to_string()));
        assert!(all.contains(&"Ab[3;1,1]xD10".to_string()));
        // Non-cyclic with a cyclic cofactor is not a family.
        assert!(!all.contains(&"D6xZ5".to_string()));
    }

    #[test]
    fn sorted_and_bounded() {
        let catalog = build_catalog(60, &Limits::default()).unwrap();
        assert!(catalog.entries.windows(2).all(|w| (w[0].order, &w[0].canonical) < (w[1].order, &w[1].canonical)));
        assert!(catalog.iter().all(|e| e.order <= 60));
    }

    #[test]
    fn cap_and_zero() {
        assert!(matches!(build_catalog(600, &Limits::default()), Err(Error::OrderCapExceeded { .. })));
        assert!(build_catalog(0, &Limits::default()).is_err());
    }
}
