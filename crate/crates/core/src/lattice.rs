// SPDX-License-Identifier: Apache-2.0

//! Enumeration of the subgroup set `L(G)` and the cyclic subgroups `C(G)`.
//!
//! Every subgroup is an iterated join of cyclic subgroups, so starting from
//! the cyclic ones and closing under `H v <x>` reaches all of `L(G)`.
//! Cost is driven by the number of subgroups rather than by `|G|`:
//! elementary abelian 2-groups are the worst case (`Z2^7` already has 29212).

use std::collections::{BTreeMap, HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::group::Group;
use crate::limits::Limits;
use crate::subgroup::{Closure, Subgroup};

/// Counts extracted from the subgroup lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSummary {
    pub subgroup_count: usize,
    pub cyclic_subgroup_count: usize,
    /// `d -> n_d`, the number of cyclic subgroups of order `d`.
    pub cyclic_by_order: BTreeMap<usize, usize>,
}

fn cyclic_closures(g: &Group) -> Vec<Closure> {
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        let mut set = FixedBitSet::with_capacity(g.order());
        let mut elements = Vec::with_capacity(g.element_order(x));
        let mut y = g.identity();
        loop {
            set.insert(y);
            elements.push(y);
            y = g.mul(y, x);
            if y == g.identity() {
                break;
            }
        }
        if seen.insert(set.clone()) {
            let gens = if x == g.identity() { Vec::new() } else { vec![x] };
            out.push(Closure { elements, set, gens });
        }
    }
    out
}

fn sorted_subgroups(g: &Group, closures: Vec<Closure>) -> Vec<Subgroup<'_>> {
    let mut subgroups: Vec<Subgroup<'_>> = closures.into_iter().map(|c| c.into_subgroup(g)).collect();
    subgroups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    subgroups
}

/// `{<x> : x in G}` without repeats, ordered by (order, elements).
pub fn cyclic_subgroups(g: &Group) -> Vec<Subgroup<'_>> {
    sorted_subgroups(g, cyclic_closures(g))
}

/// Every subgroup exactly once, ordered by (order, elements).
pub fn all_subgroups<'g>(g: &'g Group, limits: &Limits) -> Result<Vec<Subgroup<'g>>> {
    limits.check_order(g.order() as u128)?;
    let cyclic = cyclic_closures(g);
    let seeds: Vec<usize> = cyclic.iter().filter_map(|c| c.gens.first().copied()).collect();
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut found: Vec<Closure> = Vec::with_capacity(cyclic.len());
    for c in cyclic {
        index.insert(c.set.clone(), found.len());
        found.push(c);
    }
    let mut next = 0;
    while next < found.len() {
        for &x in &seeds {
            if found[next].contains(x) {
                continue;
            }
            let joined = found[next].extend(g, x);
            if !index.contains_key(&joined.set) {
                index.insert(joined.set.clone(), found.len());
                found.push(joined);
            }
        }
        next += 1;
    }
    Ok(sorted_subgroups(g, found))
}

pub fn lattice_summary(g: &Group, limits: &Limits) -> Result<LatticeSummary> {
    let subgroup_count = all_subgroups(g, limits)?.len();
    let cyclic = cyclic_subgroups(g);
    let mut cyclic_by_order = BTreeMap::new();
    for h in &cyclic {
        *cyclic_by_order.entry(h.order()).or_insert(0) += 1;
    }
    Ok(LatticeSummary { subgroup_count, cyclic_subgroup_count: cyclic.len(), cyclic_by_order })
}
