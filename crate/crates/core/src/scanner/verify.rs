// SPDX-License-Identifier: Apache-2.0

//! The full verification battery over the catalog, the abelian types, and
//! the automorphism formula against brute-force search.

use std::collections::BTreeMap;

use log::info;
use rayon::prelude::*;
use serde::Serialize;

use crate::automorphisms::{AbelianType, FormulaMutation};
use crate::constructors;
use crate::error::Result;
use crate::gauss::{self, Claim, Condition, Evaluation, VerificationReport};
use crate::group::Group;
use crate::limits::Limits;
use crate::rational::ExactRational;
use crate::spec::SpecAst;

use super::catalog::{build_catalog, CatalogEntry};
use super::scan::EntryError;

/// `(p, k)`: compare formula and search on every `p`-group of order up to `p^k`.
pub const FORMULA_ORACLE_RANGES: [(u64, u32); 3] = [(2, 5), (3, 3), (5, 2)];

/// Types whose search exceeds the default budget (`Z2^5` needs about 10.7M nodes).
pub const FORMULA_ORACLE_EXCLUDED: [(u64, &[u32]); 1] = [(2, &[1, 1, 1, 1, 1])];

pub const RANK_TWO_PRIMES: [u64; 3] = [2, 3, 5];
pub const RANK_TWO_MAX_EXPONENT: u32 = 6;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_order: usize,
    /// Abelian-only checks run over every abelian type up to this order.
    pub abelian_max_order: usize,
    /// Deliberately corrupts the abelian formula, to show the battery notices.
    pub mutation: Option<FormulaMutation>,
}

impl VerifyOptions {
    pub fn new(max_order: usize) -> Self {
        Self { max_order, abelian_max_order: max_order, mutation: None }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyOutcome {
    pub catalog_entries: usize,
    pub reports: Vec<VerificationReport>,
    pub errors: Vec<EntryError>,
}

impl VerifyOutcome {
    pub fn all_hold(&self) -> bool {
        self.errors.is_empty() && self.reports.iter().all(|r| r.holds)
    }

    pub fn failing(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports.iter().filter(|r| !r.holds)
    }

    /// `claim -> (held, total)`.
    pub fn tally(&self) -> BTreeMap<Claim, (usize, usize)> {
        let mut out = BTreeMap::new();
        for r in &self.reports {
            let e = out.entry(r.claim).or_insert((0, 0));
            e.0 += usize::from(r.holds);
            e.1 += 1;
        }
        out
    }

    fn absorb(&mut self, spec: &str, result: Result<Vec<VerificationReport>>) {
        match result {
            Ok(reports) => self.reports.extend(reports),
            Err(e) => self.errors.push(EntryError { spec: spec.to_string(), message: e.to_string() }),
        }
    }
}

fn evaluate_f(g: &Group, limits: &Limits) -> Result<ExactRational> {
    Ok(Evaluation::compute(g, limits)?.f)
}

fn sylow_f(t: &AbelianType, limits: &Limits) -> Result<ExactRational> {
    evaluate_f(&constructors::abelian(t, limits)?, limits)
}

/// Abelian bound plus multiplicativity across the Sylow decomposition.
fn abelian_reports(g: &Group, eval: &Evaluation, limits: &Limits) -> Result<Vec<VerificationReport>> {
    let t = crate::automorphisms::abelian_invariants(g)?;
    let mut sylow_values: BTreeMap<u64, ExactRational> = BTreeMap::new();
    let mut reports = vec![gauss::abelian_bound_report(g, eval, &mut |s: &AbelianType| {
        let p = s.single_prime().expect("Sylow subgroups are p-groups");
        let f = sylow_f(s, limits)?;
        sylow_values.insert(p, f.clone());
        Ok(f)
    })?];
    if t.primes().count() > 1 {
        let factors = t
            .primes()
            .map(|p| match sylow_values.get(&p) {
                Some(f) => Ok(f.clone()),
                None => sylow_f(&t.sylow(p), limits),
            })
            .collect::<Result<Vec<_>>>()?;
        reports.push(gauss::multiplicativity_report(&eval.name, eval.f.clone(), &factors));
    }
    Ok(reports)
}

fn entry_reports(entry: &CatalogEntry, limits: &Limits) -> Result<Vec<VerificationReport>> {
    let g = entry.build(limits)?;
    let eval = Evaluation::compute(&g, limits)?;
    let mut reports = vec![gauss::cyclic_minimum_report(&g, &eval)];
    if eval.is_cyclic {
        return Ok(reports);
    }
    reports.push(gauss::center_bound_report(&eval)?);
    reports.push(gauss::second_smallest_report(&eval)?);
    if eval.proper_subgroups_cyclic {
        match gauss::classify_minimal_noncyclic(&g, &eval) {
            Some(instance) => reports.push(gauss::minimal_noncyclic_report(&instance, &eval)),
            None => reports.push(VerificationReport::new(
                Claim::MinimalNonCyclic,
                &eval.name,
                vec![],
                vec![Condition { label: "matches one of the three minimal non-cyclic types".into(), holds: false }],
                None,
            )),
        }
    }
    if let SpecAst::Dihedral(order) = entry.spec {
        if (order / 2) % 2 == 1 {
            reports.push(gauss::dihedral_report(order / 2, &eval));
        }
    }
    if eval.is_abelian {
        reports.extend(abelian_reports(&g, &eval, limits)?);
    }
    if let SpecAst::Product(factors) = &entry.spec {
        let fs = factors
            .iter()
            .map(|f| evaluate_f(&f.build(limits)?, limits))
            .collect::<Result<Vec<_>>>()?;
        reports.push(gauss::multiplicativity_report(&eval.name, eval.f.clone(), &fs));
    }
    Ok(reports)
}

fn abelian_type_reports(t: &AbelianType, evaluate: bool, limits: &Limits) -> Result<Vec<VerificationReport>> {
    let mut reports = vec![gauss::check_aut_totient_bound(t)];
    if let Some(p) = t.single_prime() {
        if t.exponents(p).unwrap().len() >= 2 {
            reports.push(gauss::check_aut_lower_bound(t)?);
        }
    }
    if evaluate && !t.is_cyclic() {
        let g = constructors::abelian(t, limits)?.with_label(SpecAst::Abelian(t.clone()).canonical_string());
        let eval = Evaluation::compute(&g, limits)?;
        reports.extend(abelian_reports(&g, &eval, limits)?);
    }
    Ok(reports)
}

/// Every `p`-group type in [`FORMULA_ORACLE_RANGES`] minus the exclusions.
pub fn formula_oracle_types() -> Vec<AbelianType> {
    let mut out = Vec::new();
    for (p, k) in FORMULA_ORACLE_RANGES {
        for e in 1..=k {
            for part in crate::automorphisms::partitions(e) {
                if FORMULA_ORACLE_EXCLUDED.iter().any(|&(q, ex)| q == p && ex == part.as_slice()) {
                    continue;
                }
                out.push(AbelianType::p_group(p, &part).expect("valid p-group type"));
            }
        }
    }
    out
}

pub fn verify_all(options: &VerifyOptions, limits: &Limits) -> Result<VerifyOutcome> {
    let catalog = build_catalog(options.max_order, limits)?;
    let mut outcome = VerifyOutcome { catalog_entries: catalog.len(), reports: Vec::new(), errors: Vec::new() };

    let gauss_max = options.max_order.max(options.abelian_max_order) as u64;
    outcome.reports.extend((1..=gauss_max).map(gauss::check_gauss_formula));

    info!("verifying {} catalog entries", catalog.len());
    let per_entry: Vec<(String, Result<Vec<VerificationReport>>)> =
        catalog.entries.par_iter().map(|e| (e.canonical.clone(), entry_reports(e, limits))).collect();
    for (spec, result) in per_entry {
        outcome.absorb(&spec, result);
    }

    // Abelian types of orders already in the catalog were evaluated above.
    let types: Vec<(AbelianType, bool)> = (1..=options.abelian_max_order as u64)
        .flat_map(|n| AbelianType::all_of_order(n).into_iter().map(move |t| (t, n as usize > options.max_order)))
        .collect();
    info!("verifying {} abelian types", types.len());
    let per_type: Vec<(String, Result<Vec<VerificationReport>>)> = types
        .par_iter()
        .map(|(t, evaluate)| (SpecAst::Abelian(t.clone()).canonical_string(), abelian_type_reports(t, *evaluate, limits)))
        .collect();
    for (spec, result) in per_type {
        outcome.absorb(&spec, result);
    }

    let oracle_types = formula_oracle_types();
    info!("comparing the abelian formula with search on {} types", oracle_types.len());
    let per_oracle: Vec<(String, Result<VerificationReport>)> = oracle_types
        .par_iter()
        .map(|t| {
            let spec = SpecAst::Abelian(t.clone()).canonical_string();
            (spec, gauss::check_formula_agreement(t, limits, options.mutation))
        })
        .collect();
    for (spec, result) in per_oracle {
        outcome.absorb(&spec, result.map(|r| vec![r]));
    }

    for p in RANK_TWO_PRIMES {
        for n2 in 1..=RANK_TWO_MAX_EXPONENT {
            for n1 in 1..=n2 {
                let spec = format!("Ab[{p};{n1},{n2}]");
                let result = gauss::check_rank_two_formula(p, n1, n2, options.mutation);
                outcome.absorb(&spec, result.map(|r| vec![r]));
            }
        }
    }
    Ok(outcome)
}
