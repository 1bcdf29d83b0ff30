// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::group::Group;

/// A subgroup of a parent group, as a strictly ascending list of the
/// parent's element indices.
#[derive(Clone)]
pub struct Subgroup<'g> {
    parent: &'g Group,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl<'g> Subgroup<'g> {
    /// `elements` must be ascending and closed; the caller guarantees it.
    pub(crate) fn from_sorted(parent: &'g Group, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { parent, elements, generators: Vec::new() }
    }

    pub(crate) fn with_generators(parent: &'g Group, elements: Vec<usize>, generators: Vec<usize>) -> Self {
        Self { parent, elements, generators }
    }

    pub fn parent(&self) -> &'g Group {
        self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// A generating set; the identity alone is not listed, so the trivial
    /// subgroup has none.
    pub fn generators(&self) -> Vec<usize> {
        if self.generators.is_empty() && self.order() > 1 {
            return self.elements.clone();
        }
        self.generators.clone()
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.elements.iter().any(|&x| self.parent.element_order(x) == n)
    }

    /// Pairwise-commuting generators generate an abelian group.
    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.parent.commutes(a, b)))
    }

    /// Full closure check: identity, products and inverses. Intended as a
    /// test oracle; enumeration never relies on it.
    pub fn is_closed(&self) -> bool {
        let g = self.parent;
        self.contains(g.identity())
            && self.elements.iter().all(|&a| {
                self.contains(g.inv(a)) && self.elements.iter().all(|&b| self.contains(g.mul(a, b)))
            })
    }

    /// Relabels the subgroup as a standalone group; element `i` of the result
    /// is `self.elements()[i]`.
    pub fn to_group(&self) -> Group {
        let n = self.order();
        let mut position = vec![u32::MAX; self.parent.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            position[x] = i as u32;
        }
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.elements {
            for &b in &self.elements {
                table.push(position[self.parent.mul(a, b)]);
            }
        }
        let group = Group::from_flat(n, table, &crate::Limits::default().forced())
            .expect("a closed subset of a group is a group");
        match self.parent.label() {
            Some(label) => group.with_label(format!("subgroup of order {n} in {label}")),
            None => group,
        }
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.elements == other.elements
    }
}

impl Eq for Subgroup<'_> {}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup").field("elements", &self.elements).finish()
    }
}

/// A subgroup under construction with its membership bitset and generators.
#[derive(Clone)]
pub(crate) struct Closure {
    pub elements: Vec<usize>,
    pub set: FixedBitSet,
    pub gens: Vec<usize>,
}

impl Closure {
    pub fn trivial(g: &Group) -> Self {
        let mut set = FixedBitSet::with_capacity(g.order());
        set.insert(g.identity());
        Self { elements: vec![g.identity()], set, gens: Vec::new() }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    /// `<self, x>` by Dimino's coset extension: the new group is a union of
    /// right cosets `H t`, closed once every coset representative times every
    /// generator lands inside it.
    pub fn extend(&self, g: &Group, x: usize) -> Self {
        let mut set = self.set.clone();
        let mut elements = self.elements.clone();
        let mut gens = self.gens.clone();
        gens.push(x);
        let mut reps = vec![g.identity()];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for &s in &gens {
                let t = g.mul(r, s);
                if !set.contains(t) {
                    for &h in &self.elements {
                        let y = g.mul(h, t);
                        set.insert(y);
                        elements.push(y);
                    }
                    reps.push(t);
                }
            }
            i += 1;
        }
        Self { elements, set, gens }
    }

    pub fn into_subgroup(self, g: &Group) -> Subgroup<'_> {
        let elements: Vec<usize> = self.set.ones().collect();
        Subgroup::with_generators(g, elements, self.gens)
    }
}
