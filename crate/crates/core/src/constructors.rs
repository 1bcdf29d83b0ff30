// SPDX-License-Identifier: Apache-2.0

//! Cayley tables for the families of groups the invariant is studied on.

use crate::arith::{self, pow_mod};
use crate::automorphisms::AbelianType;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;

/// Parameters of `<a, b | a^p = b^{q^n} = 1, b^-1 a b = a^r>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemidirectParams {
    p: u64,
    q: u64,
    n: u32,
    r: u64,
}

impl SemidirectParams {
    pub fn new(p: u64, q: u64, n: u32, r: u64) -> Result<Self> {
        if !arith::is_prime(p) || !arith::is_prime(q) || p == q {
            return Err(Error::InvalidArgument(format!("p={p} and q={q} must be distinct primes")));
        }
        if n == 0 {
            return Err(Error::InvalidArgument("exponent n must be positive".into()));
        }
        if r <= 1 || r >= p || pow_mod(r, q, p) != 1 {
            return Err(Error::InvalidResidue { p, q, r });
        }
        Ok(Self { p, q, n, r })
    }

    /// Uses the smallest valid residue.
    pub fn with_default_residue(p: u64, q: u64, n: u32) -> Result<Self> {
        let r = Self::smallest_residue(p, q).ok_or(Error::InvalidResidue { p, q, r: 0 })?;
        Self::new(p, q, n, r)
    }

    /// Smallest `1 < r < p` with `r^q = 1 (mod p)`; exists iff `q | p - 1`.
    pub fn smallest_residue(p: u64, q: u64) -> Option<u64> {
        (2..p).find(|&r| pow_mod(r, q, p) == 1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn order(&self) -> u128 {
        self.p as u128 * (self.q as u128).pow(self.n)
    }
}

fn build(order: usize, limits: &Limits, mul: impl Fn(usize, usize) -> usize) -> Result<Group> {
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            table.push(mul(a, b) as u32);
        }
    }
    Group::from_flat(order, table, limits)
}

/// `Z_n` on `0..n` under addition mod `n`.
pub fn cyclic(n: usize, limits: &Limits) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group order must be positive".into()));
    }
    limits.check_order(n as u128)?;
    Ok(build(n, limits, |a, b| (a + b) % n)?.with_label(format!("Z{n}")))
}

/// `G x H` with `(g, h)` stored at index `g * |H| + h`.
pub fn direct_product(g: &Group, h: &Group, limits: &Limits) -> Result<Group> {
    let m = h.order();
    limits.check_order(g.order() as u128 * m as u128)?;
    let product = build(g.order() * m, limits, |a, b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m))?;
    Ok(match (g.label(), h.label()) {
        (Some(a), Some(b)) => product.with_label(format!("{a}x{b}")),
        _ => product,
    })
}

/// The abelian group of type `t`, as a product of cyclic factors in
/// canonical order (primes ascending, exponents ascending).
pub fn abelian(t: &AbelianType, limits: &Limits) -> Result<Group> {
    let order = t.order_u128().unwrap_or(u128::MAX);
    limits.check_order(order)?;
    let moduli: Vec<usize> = t.cyclic_factors().into_iter().map(|m| m as usize).collect();
    let order = order as usize;
    let group = build(order, limits, |a, b| {
        // Mixed radix, last factor least significant.
        let (mut a, mut b) = (a, b);
        let mut digits = Vec::with_capacity(moduli.len());
        for &m in moduli.iter().rev() {
            digits.push((a % m + b % m) % m);
            a /= m;
            b /= m;
        }
        digits.iter().rev().zip(&moduli).fold(0, |acc, (&d, &m)| acc * m + d)
    })?;
    let label = if moduli.is_empty() {
        "Z1".to_string()
    } else {
        moduli.iter().map(|m| format!("Z{m}")).collect::<Vec<_>>().join("x")
    };
    Ok(group.with_label(label))
}

/// Dihedral group of order `2n`: `r^i` at index `i`, `s r^i` at `n + i`,
/// with `s r s = r^-1`.
pub fn dihedral(n: usize, limits: &Limits) -> Result<Group> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("dihedral group needs n >= 3, got {n}")));
    }
    limits.check_order(2 * n as u128)?;
    let group = build(2 * n, limits, |a, b| {
        let (sa, ia) = (a / n, a % n);
        let (sb, ib) = (b / n, b % n);
        let rotated = if sb == 1 { (n - ia) % n } else { ia };
        ((sa + sb) % 2) * n + (rotated + ib) % n
    })?;
    Ok(group.with_label(format!("D{}", 2 * n)))
}

/// `Q8 = {±1, ±i, ±j, ±k}`; index `4*sign + unit` with units `1, i, j, k`.
pub fn quaternion8() -> Group {
    // Unit products as (sign, unit).
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    build(8, &Limits::default(), |a, b| {
        let (sign, unit) = UNITS[a % 4][b % 4];
        ((sign + a / 4 + b / 4) % 2) * 4 + unit
    })
    .expect("Q8 table is a group")
    .with_label("Q8")
}

/// `Z_p ⋊ Z_{q^n}` on pairs `a^i b^j` stored at `i * q^n + j`.
///
/// From `b^-1 a b = a^r` we get `b^j a^k = a^{k s^j} b^j` with `s = r^-1 mod p`.
pub fn semidirect(params: &SemidirectParams, limits: &Limits) -> Result<Group> {
    limits.check_order(params.order())?;
    let p = params.p as usize;
    let m = (params.q as usize).pow(params.n);
    let s = pow_mod(params.r, params.p - 2, params.p) as usize;
    let mut s_pow = vec![1usize; m];
    for j in 1..m {
        s_pow[j] = s_pow[j - 1] * s % p;
    }
    let group = build(p * m, limits, |x, y| {
        let (i, j) = (x / m, x % m);
        let (k, l) = (y / m, y % m);
        ((i + k * s_pow[j]) % p) * m + (j + l) % m
    })?;
    Ok(group.with_label(format!("SD({},{},{},r={})", params.p, params.q, params.n, params.r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn cyclic_family() {
        assert_eq!(cyclic(1, &l()).unwrap().order(), 1);
        let z6 = cyclic(6, &l()).unwrap();
        assert_eq!(z6.order_histogram().as_map(), &BTreeMap::from([(1, 1), (2, 1), (3, 2), (6, 2)]));
        let z12 = cyclic(12, &l()).unwrap();
        assert!(z12.is_cyclic());
        assert_eq!(z12.order(), 12);
        assert!(cyclic(0, &l()).is_err());
    }

    #[test]
    fn products() {
        let z2 = cyclic(2, &l()).unwrap();
        let z3 = cyclic(3, &l()).unwrap();
        let p = direct_product(&z2, &z3, &l()).unwrap();
        assert!(p.is_isomorphic(&cyclic(6, &l()).unwrap(), &l()).unwrap());
        assert_eq!(p.label(), Some("Z2xZ3"));
        let v4 = direct_product(&z2, &z2, &l()).unwrap();
        assert!(!v4.is_cyclic() && v4.order() == 4);
        let q8z3 = direct_product(&quaternion8(), &z3, &l()).unwrap();
        assert_eq!(q8z3.order(), 24);
        assert_eq!(q8z3.center().order(), 6);
        let tight = Limits::new(20, 1);
        assert!(matches!(
            direct_product(&q8z3, &z2, &tight),
            Err(Error::OrderCapExceeded { order: 48, cap: 20 })
        ));
    }

    #[test]
    fn abelian_family() {
        let t = |pairs: &[(u64, &[u32])]| AbelianType::from_pairs(pairs.iter().map(|(p, e)| (*p, e.to_vec()))).unwrap();
        let v4 = abelian(&t(&[(2, &[1, 1])]), &l()).unwrap();
        assert!(v4.is_isomorphic(&direct_product(&cyclic(2, &l()).unwrap(), &cyclic(2, &l()).unwrap(), &l()).unwrap(), &l()).unwrap());
        let z2z4 = abelian(&t(&[(2, &[1, 2])]), &l()).unwrap();
        assert_eq!(z2z4.order_histogram().as_map(), &BTreeMap::from([(1, 1), (2, 3), (4, 4)]));
        assert_eq!(z2z4.label(), Some("Z2xZ4"));
        let g12 = abelian(&t(&[(2, &[1, 1]), (3, &[1])]), &l()).unwrap();
        assert_eq!(g12.order(), 12);
        assert!(!g12.is_cyclic() && g12.is_abelian());
        assert_eq!(abelian(&AbelianType::default(), &l()).unwrap().order(), 1);
    }

    #[test]
    fn dihedral_family() {
        let d6 = dihedral(3, &l()).unwrap();
        assert_eq!(d6.order(), 6);
        let sd = semidirect(&SemidirectParams::new(3, 2, 1, 2).unwrap(), &l()).unwrap();
        assert!(d6.is_isomorphic(&sd, &l()).unwrap());
        assert_eq!(dihedral(4, &l()).unwrap().center().order(), 2);
        let d10 = dihedral(5, &l()).unwrap();
        assert_eq!(d10.order_histogram().as_map(), &BTreeMap::from([(1, 1), (2, 5), (5, 4)]));
        assert_eq!(d6.center().order(), 1);
        assert!(dihedral(2, &l()).is_err());
    }

    #[test]
    fn quaternion_group() {
        let q8 = quaternion8();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.order_histogram().count(2), 1);
        assert_eq!(q8.order_histogram().as_map(), &BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        assert_eq!(q8.center().order(), 2);
        assert!(!q8.is_abelian());
        assert!(!q8.is_isomorphic(&dihedral(4, &l()).unwrap(), &l()).unwrap());
    }

    #[test]
    fn semidirect_family() {
        let g = semidirect(&SemidirectParams::with_default_residue(3, 2, 2).unwrap(), &l()).unwrap();
        assert_eq!(g.order(), 12);
        assert!(!g.is_abelian());
        assert_eq!(SemidirectParams::new(5, 2, 1, 2).unwrap_err(), Error::InvalidResidue { p: 5, q: 2, r: 2 });
        assert_eq!(SemidirectParams::smallest_residue(3, 2), Some(2));
        assert_eq!(SemidirectParams::smallest_residue(7, 3), Some(2));
        assert_eq!(SemidirectParams::smallest_residue(5, 3), None);
        assert!(SemidirectParams::new(3, 3, 1, 2).is_err());
        assert!(SemidirectParams::new(3, 2, 0, 2).is_err());
    }

    #[test]
    fn any_valid_residue_gives_an_isomorphic_group() {
        for (p, q, n) in [(7u64, 3u64, 1u32), (13, 3, 1), (5, 2, 2), (11, 5, 1)] {
            let base = semidirect(&SemidirectParams::with_default_residue(p, q, n).unwrap(), &l()).unwrap();
            for r in 2..p {
                if let Ok(params) = SemidirectParams::new(p, q, n, r) {
                    let other = semidirect(&params, &l()).unwrap();
                    assert!(base.is_isomorphic(&other, &l()).unwrap(), "p={p} q={q} n={n} r={r}");
                }
            }
        }
    }
}
