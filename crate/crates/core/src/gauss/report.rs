// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use serde::Serialize;

use crate::rational::ExactRational;

/// The statement a report checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// `sum_{d | n} phi(d) = n`.
    GaussFormula,
    /// `f(G) >= 1`, with equality exactly for cyclic groups.
    CyclicMinimum,
    /// `f(G) >= 1 + 1/|Z(G)|` for non-cyclic `G`, and `>= 1 + 4/|G|` when non-abelian.
    CenterBound,
    /// Closed forms of `f` on minimal non-cyclic groups and the value 2 only on `Z3 ⋊ Z_{2^n}`.
    MinimalNonCyclic,
    /// `f(G) >= 5/2` for non-cyclic abelian `G`, equality on `(Z2 x Z2) x Z_odd`.
    AbelianBound,
    /// `|Aut(G)| >= p^n (p-1)^2` for non-cyclic abelian `p`-groups.
    AutLowerBound,
    /// `|Aut(G)| >= phi(|G|)` for abelian `G`, equality exactly when cyclic.
    AutTotientBound,
    /// `f(D_{2n}) = (n+1)/2` for odd `n >= 3`.
    DihedralFormula,
    /// `f` of a coprime direct product is the product of the factors' values.
    Multiplicativity,
    /// The abelian automorphism formula agrees with brute-force search.
    FormulaOracleAgreement,
    /// The rank-two specialisation agrees with the general formula.
    RankTwoFormula,
    /// No non-cyclic group has `f < 2` (catalog-relative).
    SecondSmallestValue,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::GaussFormula => "gauss-formula",
            Claim::CyclicMinimum => "cyclic-minimum",
            Claim::CenterBound => "center-bound",
            Claim::MinimalNonCyclic => "minimal-non-cyclic",
            Claim::AbelianBound => "abelian-bound",
            Claim::AutLowerBound => "aut-lower-bound",
            Claim::AutTotientBound => "aut-totient-bound",
            Claim::DihedralFormula => "dihedral-formula",
            Claim::Multiplicativity => "multiplicativity",
            Claim::FormulaOracleAgreement => "formula-oracle-agreement",
            Claim::RankTwoFormula => "rank-two-formula",
            Claim::SecondSmallestValue => "second-smallest-value",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Eq => "=",
            Relation::Ge => ">=",
        })
    }
}

/// One exact comparison `lhs relation rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub label: String,
    pub lhs: ExactRational,
    pub relation: Relation,
    pub rhs: ExactRational,
    pub holds: bool,
}

impl Comparison {
    pub fn new(label: impl Into<String>, lhs: ExactRational, relation: Relation, rhs: ExactRational) -> Self {
        let holds = match relation {
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        };
        Self { label: label.into(), lhs, relation, rhs, holds }
    }

    pub fn eq(label: impl Into<String>, lhs: ExactRational, rhs: ExactRational) -> Self {
        Self::new(label, lhs, Relation::Eq, rhs)
    }

    pub fn ge(label: impl Into<String>, lhs: ExactRational, rhs: ExactRational) -> Self {
        Self::new(label, lhs, Relation::Ge, rhs)
    }
}

/// A structural yes/no fact a claim depends on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub label: String,
    pub holds: bool,
}

/// Whether the extremal value was attained, against the structural
/// prediction of when it should be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EqualityCase {
    pub observed: bool,
    pub predicted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub group: String,
    pub holds: bool,
    pub comparisons: Vec<Comparison>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<Condition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality_case: Option<EqualityCase>,
}

impl VerificationReport {
    pub fn new(
        claim: Claim,
        group: impl Into<String>,
        comparisons: Vec<Comparison>,
        conditions: Vec<Condition>,
        equality_case: Option<EqualityCase>,
    ) -> Self {
        let holds = comparisons.iter().all(|c| c.holds)
            && conditions.iter().all(|c| c.holds)
            && equality_case.is_none_or(|e| e.observed == e.predicted);
        Self { claim, group: group.into(), holds, comparisons, conditions, equality_case }
    }

    pub fn failing_comparisons(&self) -> impl Iterator<Item = &Comparison> {
        self.comparisons.iter().filter(|c| !c.holds)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds { "holds" } else { "FAILS" };
        write!(f, "{} [{}] {}", self.claim, self.group, status)?;
        for c in &self.comparisons {
            let mark = if c.holds { "" } else { " (violated)" };
            write!(f, "; {}: {} {} {}{}", c.label, c.lhs, c.relation, c.rhs, mark)?;
        }
        for c in self.conditions.iter().filter(|c| !c.holds) {
            write!(f, "; {} is false", c.label)?;
        }
        if let Some(e) = self.equality_case {
            write!(f, "; equality observed={} predicted={}", e.observed, e.predicted)?;
        }
        Ok(())
    }
}
