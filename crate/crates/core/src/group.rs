// SPDX-License-Identifier: Apache-2.0

//! Finite groups stored as validated Cayley tables.

use std::collections::BTreeMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Line, Result};
use crate::limits::Limits;
use crate::subgroup::{Closure, Subgroup};

/// A finite group given by its full multiplication table over element
/// indices `0..order`.
///
/// Construction validates every group axiom, so a `Group` value is always a
/// group. It is immutable afterwards and cheap to share across threads.
#[derive(Clone)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<u32>,
    element_orders: Vec<u32>,
    label: Option<String>,
}

/// Number of elements of each order `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderHistogram(BTreeMap<usize, usize>);

impl OrderHistogram {
    /// Count of elements of order `d` (zero when absent).
    pub fn count(&self, d: usize) -> usize {
        self.0.get(&d).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&d, &c)| (d, c))
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn max_order(&self) -> usize {
        self.0.keys().next_back().copied().unwrap_or(1)
    }

    pub fn as_map(&self) -> &BTreeMap<usize, usize> {
        &self.0
    }
}

impl Group {
    /// Validates a raw Cayley table under the default order cap.
    ///
    /// The identity may sit at any index; the input indexing is preserved.
    pub fn from_cayley_table(raw: &[Vec<usize>]) -> Result<Self> {
        Self::from_cayley_table_with(raw, &Limits::default())
    }

    pub fn from_cayley_table_with(raw: &[Vec<usize>], limits: &Limits) -> Result<Self> {
        let n = raw.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        for (row, entries) in raw.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NotSquare { row, len: entries.len(), expected: n });
            }
        }
        limits.check_order(n as u128)?;
        let mut table = Vec::with_capacity(n * n);
        for (row, entries) in raw.iter().enumerate() {
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value, order: n });
                }
                table.push(value as u32);
            }
        }
        Self::from_flat(n, table, limits)
    }

    /// Validates a row-major table whose entries are already known to lie in `0..order`.
    pub(crate) fn from_flat(order: usize, table: Vec<u32>, limits: &Limits) -> Result<Self> {
        debug_assert_eq!(table.len(), order * order);
        limits.check_order(order as u128)?;
        check_latin(order, &table)?;
        let identity = find_identity(order, &table).ok_or(Error::NoIdentity)?;
        let inverses = find_inverses(order, &table, identity)?;
        check_associative(order, &table)?;
        let element_orders = compute_orders(order, &table, identity);
        Ok(Self { order, table, identity, inverses, element_orders, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Checked product `a * b`.
    pub fn multiply(&self, a: usize, b: usize) -> Result<usize> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.mul(a, b))
    }

    /// Checked inverse.
    pub fn inverse(&self, a: usize) -> Result<usize> {
        self.check_index(a)?;
        Ok(self.inverses[a] as usize)
    }

    /// Unchecked product; panics on out-of-range indices.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let k = k % self.element_orders[a] as u64;
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    /// Least `m >= 1` with `a^m` equal to the identity.
    #[inline]
    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a] as usize
    }

    pub fn element_orders(&self) -> impl Iterator<Item = usize> + Clone + '_ {
        self.element_orders.iter().map(|&o| o as usize)
    }

    pub fn order_histogram(&self) -> OrderHistogram {
        let mut hist = BTreeMap::new();
        for o in self.element_orders() {
            *hist.entry(o).or_insert(0) += 1;
        }
        OrderHistogram(hist)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_orders().any(|o| o == self.order)
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// The center `Z(G)`.
    pub fn center(&self) -> Subgroup<'_> {
        let elements: Vec<usize> = (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.commutes(z, x)))
            .collect();
        Subgroup::from_sorted(self, elements)
    }

    /// `|C_G(x)|` for every element `x`.
    pub fn centralizer_sizes(&self) -> Vec<usize> {
        (0..self.order)
            .map(|x| (0..self.order).filter(|&y| self.commutes(x, y)).count())
            .collect()
    }

    /// The subgroup generated by `gens`.
    pub fn subgroup_generated_by(&self, gens: &[usize]) -> Result<Subgroup<'_>> {
        let mut closure = Closure::trivial(self);
        for &g in gens {
            self.check_index(g)?;
            if !closure.contains(g) {
                closure = closure.extend(self, g);
            }
        }
        Ok(closure.into_subgroup(self))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&x| x as usize).collect())
            .collect()
    }

    /// True if some bijective homomorphism `self -> other` exists.
    pub fn is_isomorphic(&self, other: &Group, limits: &Limits) -> Result<bool> {
        crate::morphism::is_isomorphic(self, other, limits)
    }

    fn check_index(&self, a: usize) -> Result<()> {
        if a >= self.order {
            return Err(Error::IndexOutOfRange { index: a, order: self.order });
        }
        Ok(())
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

fn check_latin(n: usize, table: &[u32]) -> Result<()> {
    let mut seen = FixedBitSet::with_capacity(n);
    for row in 0..n {
        seen.clear();
        for col in 0..n {
            let v = table[row * n + col] as usize;
            if seen.put(v) {
                return Err(Error::NotLatinSquare { line: Line::Row, index: row, element: v });
            }
        }
    }
    for col in 0..n {
        seen.clear();
        for row in 0..n {
            let v = table[row * n + col] as usize;
            if seen.put(v) {
                return Err(Error::NotLatinSquare { line: Line::Column, index: col, element: v });
            }
        }
    }
    Ok(())
}

fn find_identity(n: usize, table: &[u32]) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))
}

fn find_inverses(n: usize, table: &[u32], identity: usize) -> Result<Vec<u32>> {
    (0..n)
        .map(|x| {
            (0..n)
                .find(|&y| table[x * n + y] as usize == identity && table[y * n + x] as usize == identity)
                .map(|y| y as u32)
                .ok_or(Error::NoInverse { element: x })
        })
        .collect()
}

/// Light's associativity test: the set of `g` with `(xy)g = x(yg)` for all
/// `x, y` is closed under multiplication, so checking a set whose
/// left-nested products reach every element decides associativity in
/// `O(n^2 |S|)`. On failure the exhaustive scan names the
/// lexicographically first offending triple.
fn check_associative(n: usize, table: &[u32]) -> Result<()> {
    let mul = |a: usize, b: usize| table[a * n + b] as usize;
    let basis = left_nested_basis(n, table);
    for x in 0..n {
        for y in 0..n {
            let xy = mul(x, y);
            for &s in &basis {
                if mul(xy, s) != mul(x, mul(y, s)) {
                    let (a, b, c) = first_non_associative(n, table)
                        .expect("Light's test found a violation the full scan must see");
                    return Err(Error::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(())
}

fn left_nested_basis(n: usize, table: &[u32]) -> Vec<usize> {
    let mut basis: Vec<usize> = Vec::new();
    let mut covered = FixedBitSet::with_capacity(n);
    while let Some(next) = (0..n).find(|&x| !covered.contains(x)) {
        basis.push(next);
        covered.clear();
        let mut queue: Vec<usize> = Vec::with_capacity(n);
        for &s in &basis {
            if !covered.put(s) {
                queue.push(s);
            }
        }
        let mut i = 0;
        while i < queue.len() {
            let t = queue[i];
            for &s in &basis {
                let ts = table[t * n + s] as usize;
                if !covered.put(ts) {
                    queue.push(ts);
                }
            }
            i += 1;
        }
    }
    basis
}

pub(crate) fn first_non_associative(n: usize, table: &[u32]) -> Option<(usize, usize, usize)> {
    let mul = |a: usize, b: usize| table[a * n + b] as usize;
    for a in 0..n {
        for b in 0..n {
            let ab = mul(a, b);
            for c in 0..n {
                if mul(ab, c) != mul(a, mul(b, c)) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn compute_orders(n: usize, table: &[u32], identity: usize) -> Vec<u32> {
    (0..n)
        .map(|x| {
            let mut y = x;
            let mut m = 1u32;
            while y != identity {
                y = table[y * n + x] as usize;
                m += 1;
            }
            m
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_rows(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    /// Z6 with one intercalate swapped: still a Latin square with identity 0,
    /// but no longer associative.
    fn broken_z6() -> Vec<Vec<usize>> {
        let mut rows = cyclic_rows(6);
        rows[1][1] = 5;
        rows[1][4] = 2;
        rows[4][1] = 2;
        rows[4][4] = 5;
        rows
    }

    fn exhaustive_first_violation(rows: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
        let n = rows.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    #[test]
    fn trivial_and_order_two() {
        let g = Group::from_cayley_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.is_cyclic());
        let z2 = Group::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.element_order(1), 2);
    }

    #[test]
    fn non_associative_triple_is_the_first_one() {
        let rows = broken_z6();
        let expected = exhaustive_first_violation(&rows).expect("mutated table must be non-associative");
        let (a, b, c) = expected;
        assert_eq!(Group::from_cayley_table(&rows).unwrap_err(), Error::NotAssociative { a, b, c });
    }

    #[test]
    fn identity_need_not_be_zero() {
        // Z3 relabelled so that the identity is element 2.
        let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = Group::from_cayley_table(&rows).unwrap();
        assert_eq!(g.identity(), 2);
        assert_eq!(g.inverse(0).unwrap(), 1);
        assert_eq!(g.element_order(2), 1);
    }

    #[test]
    fn rejects_malformed_tables() {
        assert_eq!(Group::from_cayley_table(&[]).unwrap_err(), Error::EmptyTable);
        assert!(matches!(
            Group::from_cayley_table(&[vec![0, 1], vec![1]]).unwrap_err(),
            Error::NotSquare { row: 1, .. }
        ));
        assert!(matches!(
            Group::from_cayley_table(&[vec![0, 2], vec![1, 0]]).unwrap_err(),
            Error::EntryOutOfRange { row: 0, col: 1, value: 2, .. }
        ));
        assert_eq!(
            Group::from_cayley_table(&[vec![0, 0], vec![1, 1]]).unwrap_err(),
            Error::NotLatinSquare { line: Line::Row, index: 0, element: 0 }
        );
        // x*y = -x-y mod 3: a Latin square without an identity.
        assert_eq!(
            Group::from_cayley_table(&[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]).unwrap_err(),
            Error::NoIdentity
        );
    }

    #[test]
    fn order_cap_refuses_unless_forced() {
        let rows = cyclic_rows(10);
        let tight = Limits::new(8, Limits::DEFAULT_BUDGET);
        assert!(matches!(
            Group::from_cayley_table_with(&rows, &tight).unwrap_err(),
            Error::OrderCapExceeded { order: 10, cap: 8 }
        ));
        assert!(Group::from_cayley_table_with(&rows, &tight.forced()).is_ok());
    }

    #[test]
    fn arithmetic_in_z6() {
        let g = Group::from_cayley_table(&cyclic_rows(6)).unwrap();
        assert_eq!(g.multiply(2, 5).unwrap(), 1);
        assert_eq!(g.inverse(2).unwrap(), 4);
        assert_eq!(g.inverse(0).unwrap(), 0);
        for a in g.elements() {
            assert_eq!(g.multiply(0, a).unwrap(), a);
            assert_eq!(g.multiply(a, g.inverse(a).unwrap()).unwrap(), 0);
        }
        assert_eq!(g.multiply(6, 0).unwrap_err(), Error::IndexOutOfRange { index: 6, order: 6 });
        assert!(g.inverse(9).is_err());
        assert_eq!(g.pow(2, 4), 2);
    }

    #[test]
    fn histogram_of_z6() {
        let g = Group::from_cayley_table(&cyclic_rows(6)).unwrap();
        let hist = g.order_histogram();
        assert_eq!(hist.as_map(), &BTreeMap::from([(1, 1), (2, 1), (3, 2), (6, 2)]));
        assert_eq!(hist.total(), 6);
        assert_eq!(hist.max_order(), 6);
    }
}
