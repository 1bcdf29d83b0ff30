// SPDX-License-Identifier: Apache-2.0

//! Backtracking over generator images.
//!
//! A map on generators extends to a homomorphism exactly when it is
//! consistent on every edge `x -> x*g` of the Cayley graph. [`Plan`] orders
//! those edges once per source group: at each generator level some edges
//! *define* images of newly reached elements and the rest are *checks*. The
//! search then only evaluates table lookups.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;
use crate::subgroup::Closure;

const UNSET: u32 = u32::MAX;

struct Level {
    /// `(target, source, generator)`: `phi(target) = phi(source) * img(generator)`.
    defs: Vec<(u32, u32, u32)>,
    /// `(x, generator, x * generator)` must agree with the images.
    checks: Vec<(u32, u32, u32)>,
}

pub(crate) struct Plan {
    gens: Vec<usize>,
    levels: Vec<Level>,
}

impl Plan {
    pub fn new(g: &Group, gens: Vec<usize>) -> Self {
        let mut known = FixedBitSet::with_capacity(g.order());
        known.insert(g.identity());
        let mut reached = vec![g.identity()];
        let mut levels = Vec::with_capacity(gens.len());
        for (i, &gi) in gens.iter().enumerate() {
            let mut level = Level { defs: Vec::new(), checks: Vec::new() };
            let previous = reached.len();
            let mut edge = |x: usize, j: usize, known: &mut FixedBitSet, reached: &mut Vec<usize>| {
                let y = g.mul(x, gens[j]);
                if known.put(y) {
                    level.checks.push((x as u32, j as u32, y as u32));
                } else {
                    level.defs.push((y as u32, x as u32, j as u32));
                    reached.push(y);
                }
            };
            for k in 0..previous {
                edge(reached[k], i, &mut known, &mut reached);
            }
            let mut k = previous;
            while k < reached.len() {
                let x = reached[k];
                for j in 0..=i {
                    edge(x, j, &mut known, &mut reached);
                }
                k += 1;
            }
            debug_assert_eq!(level.defs.first().map(|d| d.0 as usize), Some(gi));
            levels.push(level);
        }
        assert_eq!(reached.len(), g.order(), "generators must generate the group");
        Self { gens, levels }
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    Count,
    FindOne,
}

struct Search<'a> {
    plan: &'a Plan,
    target: &'a Group,
    candidates: &'a [Vec<usize>],
    mode: Mode,
    budget: u64,
    nodes: u64,
    found: u64,
    phi: Vec<u32>,
    used: Vec<bool>,
    images: Vec<u32>,
}

impl Search<'_> {
    /// Returns `Ok(true)` when the search should stop early.
    fn descend(&mut self, level: usize) -> Result<bool> {
        if level == self.plan.levels.len() {
            self.found += 1;
            return Ok(self.mode == Mode::FindOne);
        }
        let plan = self.plan;
        let candidates = self.candidates;
        for &c in &candidates[level] {
            if self.used[c] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            self.images[level] = c as u32;
            let defs = &plan.levels[level].defs;
            let mut assigned = 0;
            let mut ok = true;
            for &(t, s, j) in defs {
                let v = self.target.mul(self.phi[s as usize] as usize, self.images[j as usize] as usize);
                if self.used[v] {
                    ok = false;
                    break;
                }
                self.used[v] = true;
                self.phi[t as usize] = v as u32;
                assigned += 1;
            }
            if ok {
                ok = plan.levels[level].checks.iter().all(|&(x, j, y)| {
                    self.target.mul(self.phi[x as usize] as usize, self.images[j as usize] as usize)
                        == self.phi[y as usize] as usize
                });
            }
            let stop = if ok { self.descend(level + 1)? } else { false };
            for &(t, _, _) in &defs[..assigned] {
                let v = self.phi[t as usize] as usize;
                self.used[v] = false;
                self.phi[t as usize] = UNSET;
            }
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Counts (or finds one of) the injective homomorphisms `source -> target`
/// that send generator `i` of `plan` into `candidates[i]`.
pub(crate) fn search(
    plan: &Plan,
    source: &Group,
    target: &Group,
    candidates: &[Vec<usize>],
    mode: Mode,
    budget: u64,
) -> Result<u64> {
    let mut phi = vec![UNSET; source.order()];
    phi[source.identity()] = target.identity() as u32;
    let mut used = vec![false; target.order()];
    used[target.identity()] = true;
    let mut state = Search {
        plan,
        target,
        candidates,
        mode,
        budget,
        nodes: 0,
        found: 0,
        phi,
        used,
        images: vec![0; plan.gens.len()],
    };
    state.descend(0)?;
    Ok(state.found)
}

/// Element invariants preserved by every isomorphism.
pub(crate) fn element_classes(g: &Group) -> Vec<(usize, usize)> {
    let centralizers = g.centralizer_sizes();
    g.elements().map(|x| (g.element_order(x), centralizers[x])).collect()
}

/// Greedy generating set: highest element order first, ties broken by the
/// rarest invariant class so that the first levels branch least.
pub(crate) fn greedy_generators(g: &Group, classes: &[(usize, usize)]) -> Vec<usize> {
    let mut class_size = std::collections::HashMap::new();
    for c in classes {
        *class_size.entry(*c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = g.elements().collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(classes[x].0), class_size[&classes[x]], x));
    let mut closure = Closure::trivial(g);
    let mut gens = Vec::new();
    for x in order {
        if closure.elements.len() == g.order() {
            break;
        }
        if !closure.contains(x) {
            closure = closure.extend(g, x);
            gens.push(x);
        }
    }
    gens
}

pub(crate) fn candidates_for(gens: &[usize], source: &[(usize, usize)], target: &[(usize, usize)]) -> Vec<Vec<usize>> {
    gens.iter()
        .map(|&g| (0..target.len()).filter(|&y| target[y] == source[g]).collect())
        .collect()
}

pub(crate) fn is_isomorphic(g: &Group, h: &Group, limits: &Limits) -> Result<bool> {
    limits.check_order(g.order().max(h.order()) as u128)?;
    if g.order() != h.order() || g.order_histogram() != h.order_histogram() {
        return Ok(false);
    }
    if g.is_abelian() != h.is_abelian() || g.center().order() != h.center().order() {
        return Ok(false);
    }
    let gc = element_classes(g);
    let hc = element_classes(h);
    let mut gs = gc.clone();
    let mut hs = hc.clone();
    gs.sort_unstable();
    hs.sort_unstable();
    if gs != hs {
        return Ok(false);
    }
    let plan = Plan::new(g, greedy_generators(g, &gc));
    let candidates = candidates_for(plan.generators(), &gc, &hc);
    Ok(search(&plan, g, h, &candidates, Mode::FindOne, u64::MAX)? > 0)
}
