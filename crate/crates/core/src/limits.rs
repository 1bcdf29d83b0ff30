// SPDX-License-Identifier: Apache-2.0

/// Operational ceilings shared by every expensive computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order accepted for construction and subgroup enumeration.
    pub order_cap: usize,
    /// Maximum number of partial-homomorphism extensions a brute-force
    /// automorphism search may try.
    pub budget: u64,
}

impl Limits {
    pub const DEFAULT_ORDER_CAP: usize = 512;
    pub const DEFAULT_BUDGET: u64 = 10_000_000;

    pub fn new(order_cap: usize, budget: u64) -> Self {
        Self { order_cap, budget }
    }

    /// Lifts the order cap entirely. Construction still runs every check.
    pub fn forced(self) -> Self {
        Self { order_cap: usize::MAX, ..self }
    }

    pub(crate) fn check_order(&self, order: u128) -> crate::Result<()> {
        if order > self.order_cap as u128 {
            return Err(crate::Error::OrderCapExceeded { order, cap: self.order_cap });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self::new(Self::DEFAULT_ORDER_CAP, Self::DEFAULT_BUDGET)
    }
}
